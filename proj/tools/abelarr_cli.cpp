// abelarr: command-line front end. JSON results go to stdout, a short human
// summary to stderr.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad input,
// 3 a theorem hypothesis does not hold, 4 a capacity limit was hit.

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abelarr/invariants.hpp"
#include "abelarr/io.hpp"
#include "abelarr/lie_layers.hpp"
#include "abelarr/oracle.hpp"
#include "abelarr/toric_layers.hpp"

using namespace abelarr;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kHypothesis = 3, kCapacity = 4 };

struct Common {
  std::string file;
};

Arrangement load(const std::string& path) {
  std::vector<std::string> warnings;
  Arrangement arr = read_arrangement_file(path, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return arr;
}

std::vector<Integer> parse_torsion(const std::vector<std::string>& items) {
  std::vector<Integer> out;
  for (const auto& s : items) {
    if (s.empty()) continue;
    Integer v;
    if (v.set_str(s, 10) != 0 || v < 1) throw std::invalid_argument("--torsion: '" + s + "' is not a positive integer");
    out.push_back(v);
  }
  return out;
}

Integer positive(std::int64_t v, const std::string& flag) {
  if (v < 1) throw std::invalid_argument(flag + " must be >= 1");
  return Integer(static_cast<long>(v));
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int report_check(const std::string& what, bool ok) {
  std::cerr << (ok ? "ok: " : "FAILED: ") << what << "\n";
  return ok ? kOk : kCheckFailed;
}

Json class_table(const IntersectionPoset& poset, const LayerSet& set) {
  Json out = Json::array();
  for (const auto& cls : component_classes(poset, set)) {
    std::cerr << "  x" << cls.multiplicity() << "  layers " << cls.layer_count << "  covers " << cls.cover_count
              << "  chi " << cls.characteristic.to_string() << "\n";
    out.push_back(Json{{"multiplicity", cls.multiplicity()},
                       {"layers", cls.layer_count},
                       {"covers", cls.cover_count},
                       {"characteristic", to_json(cls.characteristic)}});
  }
  return out;
}

int cmd_info(const Common& c) {
  const Arrangement arr = load(c.file);
  const QuasiPolynomial qp = chromatic_quasi(arr);
  Json tor = Json::array();
  const SubsetMask mask = torsion_sublist(arr);
  for (std::size_t i = 0; i < arr.size(); ++i)
    if (mask & (SubsetMask{1} << i)) tor.push_back(i);
  Json torsion = Json::array();
  for (const auto& e : arr.gamma().torsion) torsion.push_back(to_json(e));
  emit(Json{{"name", arr.name()},
            {"group", arr.gamma().to_string()},
            {"free_rank", arr.ambient_rank()},
            {"torsion", torsion},
            {"size", arr.size()},
            {"rank", arr.rank()},
            {"period", to_json(qp.period)},
            {"minimal_period", to_json(minimal_period(qp))},
            {"torsion_elements", tor},
            {"contains_zero", arr.contains_zero()}});
  std::cerr << arr.size() << " elements in " << arr.gamma().to_string() << ", rank " << arr.rank() << ", period "
            << qp.period.get_str() << "\n";
  return kOk;
}

int cmd_tutte(const Common& c, int p, int q, const std::vector<std::string>& torsion) {
  const Arrangement arr = load(c.file);
  const GroupSpec spec = GroupSpec::make(parse_torsion(torsion), p, q);
  const BiPoly T = g_tutte(arr, spec);
  emit(Json{{"group", spec.to_string()}, {"tutte", to_json(T)}});
  std::cerr << "T = " << T.to_string() << "\n";
  return kOk;
}

int cmd_arith_tutte(const Common& c) {
  const BiPoly T = arithmetic_tutte(load(c.file));
  emit(Json{{"tutte", to_json(T)}});
  std::cerr << "T = " << T.to_string() << "\n";
  return kOk;
}

int cmd_char(const Common& c, int p, int q, const std::vector<std::string>& torsion) {
  const Arrangement arr = load(c.file);
  const GroupSpec spec = GroupSpec::make(parse_torsion(torsion), p, q);
  const UniPoly chi = g_characteristic(arr, spec);
  emit(Json{{"group", spec.to_string()}, {"characteristic", to_json(chi)}});
  std::cerr << "chi = " << chi.to_string() << "\n";
  return kOk;
}

int cmd_quasi(const Common& c) {
  const QuasiPolynomial qp = chromatic_quasi(load(c.file));
  emit(to_json(qp));
  std::cerr << "period " << qp.period.get_str() << "\n";
  for (const auto& [d, f] : qp.by_divisor) std::cerr << "  gcd(k, period) = " << d.get_str() << ": " << f.to_string() << "\n";
  return kOk;
}

int cmd_constituent(const Common& c, std::int64_t k_raw) {
  const Arrangement arr = load(c.file);
  const Integer k = positive(k_raw, "K");
  const QuasiPolynomial qp = chromatic_quasi(arr);
  const UniPoly& f = qp.constituent(k);
  Json checks = Json::array();
  Json notes = Json::array();
  int code = kOk;
  std::cerr << "f^" << k.get_str() << " = " << f.to_string() << "\n";
  if (gcd_of(k, qp.period) == 1) {
    if (torsion_sublist(arr) == 0) {
      const UniPoly real = partial_characteristic(arr, 1, {});
      const bool ok = real == f;
      checks.push_back(Json{{"check", "real-layers"}, {"passed", ok}, {"value", to_json(real)}});
      code = std::max(code, report_check("f^1 equals the real layer poset characteristic", ok));
    } else {
      notes.push_back("real-layers cross-check skipped: A has torsion elements");
    }
  }
  if (floor_mod(k, qp.period) == 0) {
    try {
      const UniPoly toric = toric_characteristic(arr);
      const bool ok = toric == f;
      checks.push_back(Json{{"check", "arithmetic-tutte"}, {"passed", ok}, {"value", to_json(toric)}});
      code = std::max(code, report_check("f^rho equals the arithmetic Tutte specialization", ok));
    } catch (const HypothesisError& e) {
      notes.push_back(e.what());
      std::cerr << "note: " << e.what() << "\n";
    }
  }
  emit(Json{{"k", to_json(k)}, {"coefficients", to_json(f)}, {"checks", checks}, {"notes", notes}});
  return code;
}

int cmd_toric(const Common& c, std::optional<std::int64_t> k_raw, bool partial, const std::string& dot) {
  const Arrangement arr = load(c.file);
  const ToricPoset P = enumerate_toric_layers(arr);
  LayerSet set;
  UniPoly expected;
  std::string label;
  if (k_raw) {
    const Integer k = positive(*k_raw, "--k");
    set = partial ? k_partial_subposet(P, k) : k_total_subposet(P, k);
    expected = partial ? chromatic_quasi(arr).constituent(k) : chromatic_quasi(strip_torsion(arr)).constituent(k);
    label = (partial ? "L^par[" : "L[") + k.get_str() + "]";
  } else {
    set = partial ? partial_subposet(P) : P.all();
    expected = g_characteristic(partial ? arr : strip_torsion(arr), GroupSpec::circle());
    label = partial ? "L^par" : "L";
  }
  const UniPoly chi = characteristic(P, set);
  const auto bad = sign_alternation_violations(P);
  if (!dot.empty()) write_file(dot, export_hasse(P, set));
  std::cerr << label << ": " << set.size() << " layers, " << P.cover_count(set) << " covers, chi = " << chi.to_string()
            << "\n";
  const Json classes = class_table(P, set);
  int code = report_check("characteristic of " + label + " equals " + expected.to_string(), chi == expected);
  code = std::max(code, report_check("Mobius signs alternate", bad.empty()));
  emit(Json{{"subposet", label},
            {"layer_count", set.size()},
            {"cover_count", P.cover_count(set)},
            {"characteristic", to_json(chi)},
            {"expected", to_json(expected)},
            {"identity", chi == expected},
            {"scc", scc(P).size()},
            {"components", classes},
            {"layers", poset_records(P, set)}});
  return code;
}

int cmd_lie(const Common& c, int g, const std::vector<std::string>& torsion, bool partial, const std::string& dot) {
  const Arrangement arr = load(c.file);
  const auto f = parse_torsion(torsion);
  const LiePoset P = enumerate_lie_layers(arr, g, f);
  const LayerSet set = partial ? partial_subposet(P) : P.all();
  const UniPoly chi = characteristic(P, set);
  const UniPoly expected = partial ? expected_partial_characteristic(arr, g, f) : expected_total_characteristic(arr, g, f);
  const std::string label = partial ? "L^par" : "L";
  if (!dot.empty()) write_file(dot, export_hasse(P, set));
  std::cerr << "G = " << P.group.to_string() << ", " << label << ": " << set.size() << " layers, " << P.minimal().size()
            << " components of T, chi = " << chi.to_string() << "\n";
  const Json classes = class_table(P, set);
  bool key_ok = true;
  for (const auto& e : key_lie_sums(P, partial_subposet(P))) key_ok = key_ok && e.matches();
  int code = report_check("characteristic of " + label + " equals " + expected.to_string(), chi == expected);
  code = std::max(code, report_check("Mobius signs alternate", sign_alternation_violations(P).empty()));
  code = std::max(code, report_check("alternating sums over R(C)", key_ok));
  emit(Json{{"group", P.group.to_string()},
            {"subposet", label},
            {"layer_count", set.size()},
            {"cover_count", P.cover_count(set)},
            {"minimal", P.minimal().size()},
            {"scc", scc(P).size()},
            {"characteristic", to_json(chi)},
            {"expected", to_json(expected)},
            {"identity", chi == expected},
            {"components", classes},
            {"layers", poset_records(P, set)}});
  return code;
}

int cmd_verify(const Common& c, std::int64_t qmax, std::uint64_t seed, std::size_t count) {
  OracleOptions options;
  options.qmax = qmax;
  OracleReport report = randomized_battery(seed, count, options);
  if (!c.file.empty()) {
    const Arrangement arr = load(c.file);
    for (const auto& check : battery_checks()) {
      OracleEntry e{count, check, c.file, true, {}};
      if (auto failure = run_check(check, arr, options)) {
        e.passed = false;
        e.detail = *failure;
      }
      report.entries.push_back(std::move(e));
    }
  }
  emit(to_json(report));
  for (const auto& e : report.entries)
    if (!e.passed) std::cerr << "FAIL " << e.instance << " " << e.check << " " << e.arrangement << " " << e.detail << "\n";
  if (report.shrunk) std::cerr << "shrunk: " << *report.shrunk << "\n";
  std::cerr << report.entries.size() << " checks, " << report.failure_count() << " failed\n";
  return report.passed() ? kOk : kCheckFailed;
}

int cmd_reciprocity(const Common& c, std::int64_t k, std::int64_t q) {
  const Arrangement arr = load(c.file);
  const Integer v = reciprocity_eval(arr, positive(k, "--k"), positive(q, "--q"));
  emit(Json{{"k", k}, {"q", q}, {"value", to_json(v)}, {"nonnegative", v >= 0}});
  return report_check("(-1)^r f^" + std::to_string(k) + "(-" + std::to_string(q) + ") = " + v.get_str() + " >= 0", v >= 0);
}

int cmd_beta(const Common& c, std::int64_t q) {
  const Arrangement arr = load(c.file);
  try {
    const auto beta = beta_coefficients(arr, positive(q, "--q"));
    Json list = Json::array();
    for (const auto& b : beta) list.push_back(to_json(b));
    emit(Json{{"q", q}, {"beta", list}});
    return report_check("beta coefficients are nonnegative", true);
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e)) throw;
    emit(Json{{"q", q}, {"error", e.what()}});
    return report_check(e.what(), false);
  }
}

int cmd_compare(const Common& c, std::int64_t a, std::int64_t b) {
  const Arrangement arr = load(c.file);
  const auto r = chen_wang_compare(arr, positive(a, "--a"), positive(b, "--b"));
  Json ba = Json::array();
  Json bb = Json::array();
  for (const auto& x : r.beta_a) ba.push_back(to_json(x));
  for (const auto& x : r.beta_b) bb.push_back(to_json(x));
  emit(Json{{"a", a}, {"b", b}, {"beta_a", ba}, {"beta_b", bb}, {"holds", r.holds}});
  return report_check("0 <= beta_j(a) <= beta_j(b) for every j", r.all_hold());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of abelian Lie group arrangements"};
  app.require_subcommand(1);
  Common common;
  std::function<int()> run;

  auto with_file = [&](CLI::App* sub) { sub->add_option("file", common.file, "arrangement JSON file")->required(); };

  auto* info = app.add_subcommand("info", "ranks, period and torsion elements");
  with_file(info);
  info->callback([&] { run = [&] { return cmd_info(common); }; });

  int p = 0;
  int q = 0;
  std::vector<std::string> torsion;
  auto group_flags = [&](CLI::App* sub) {
    sub->add_option("--p", p, "circle factors")->check(CLI::NonNegativeNumber);
    sub->add_option("--q", q, "real factors")->check(CLI::NonNegativeNumber);
    sub->add_option("--torsion", torsion, "invariant factors of F")->delimiter(',');
  };
  auto* tutte = app.add_subcommand("tutte", "G-Tutte polynomial as (i, j, c) triples");
  with_file(tutte);
  group_flags(tutte);
  tutte->callback([&] { run = [&] { return cmd_tutte(common, p, q, torsion); }; });

  auto* arith = app.add_subcommand("arith-tutte", "arithmetic Tutte polynomial");
  with_file(arith);
  arith->callback([&] { run = [&] { return cmd_arith_tutte(common); }; });

  auto* chr = app.add_subcommand("char", "G-characteristic polynomial");
  with_file(chr);
  group_flags(chr);
  chr->callback([&] { run = [&] { return cmd_char(common, p, q, torsion); }; });

  auto* quasi = app.add_subcommand("quasi", "period and constituents of the chromatic quasi-polynomial");
  with_file(quasi);
  quasi->callback([&] { run = [&] { return cmd_quasi(common); }; });

  std::int64_t k = 1;
  auto* constituent = app.add_subcommand("constituent", "one constituent with its cross-checks");
  constituent->add_option("K", k, "residue representative")->required();
  with_file(constituent);
  constituent->callback([&] { run = [&] { return cmd_constituent(common, k); }; });

  std::optional<std::int64_t> k_opt;
  bool partial = false;
  std::string dot;
  auto* toric = app.add_subcommand("toric-layers", "layer poset of the toric arrangement");
  with_file(toric);
  toric->add_option("--k", k_opt, "restrict to layers with a k-torsion point");
  toric->add_flag("--partial", partial, "restrict to the partial poset");
  toric->add_option("--dot", dot, "write the Hasse diagram here");
  toric->callback([&] { run = [&] { return cmd_toric(common, k_opt, partial, dot); }; });

  int g = 1;
  auto* lie = app.add_subcommand("lie-layers", "layer poset for G = R^g x F");
  with_file(lie);
  lie->add_option("--g", g, "real dimension")->required();
  lie->add_option("--torsion", torsion, "invariant factors of F")->delimiter(',');
  lie->add_flag("--partial", partial, "restrict to the partial poset");
  lie->add_option("--dot", dot, "write the Hasse diagram here");
  lie->callback([&] { run = [&] { return cmd_lie(common, g, torsion, partial, dot); }; });

  std::int64_t qmax = 12;
  std::uint64_t seed = 0;
  std::size_t count = 25;
  auto* verify = app.add_subcommand("verify", "brute-force oracle battery");
  verify->add_option("file", common.file, "also check this arrangement");
  verify->add_option("--qmax", qmax, "largest q for point counts")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--count", count, "random instances");
  verify->callback([&] { run = [&] { return cmd_verify(common, qmax, seed, count); }; });

  std::int64_t q_value = 1;
  auto* recip = app.add_subcommand("reciprocity", "(-1)^r f^k(-q)");
  with_file(recip);
  recip->add_option("--k", k, "constituent")->required();
  recip->add_option("--q", q_value, "point")->required();
  recip->callback([&] { run = [&] { return cmd_reciprocity(common, k, q_value); }; });

  auto* beta = app.add_subcommand("beta", "coefficients beta_j(q)");
  with_file(beta);
  beta->add_option("--q", q_value, "constituent")->required();
  beta->callback([&] { run = [&] { return cmd_beta(common, q_value); }; });

  std::int64_t a = 1;
  std::int64_t b = 1;
  auto* compare = app.add_subcommand("compare", "beta_j(a) <= beta_j(b) for a | b");
  with_file(compare);
  compare->add_option("--a", a, "divisor")->required();
  compare->add_option("--b", b, "multiple")->required();
  compare->callback([&] { run = [&] { return cmd_compare(common, a, b); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis: " << e.what() << "\n";
    return kHypothesis;
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  }
}
