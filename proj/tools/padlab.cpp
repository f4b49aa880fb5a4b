// Command-line laboratory for the dynamics of f(x) = x^(2n+1) + a x^(n+1)
// over Q_p: fixed-point classification, orbit traces, and lemma-by-lemma
// verification suites with reproducible JSON reports.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "padlab/dynamics.hpp"
#include "padlab/literal.hpp"
#include "padlab/suites.hpp"

namespace {

using namespace padlab;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotRepresentable = 3;

std::string radius_str(const DiskBound& b) {
  return std::string("r ") + (b.exclusive ? "<" : "<=") + " p^" +
         (-b.sup_exponent).str();
}

std::string tags_str(const std::set<CaseTag>& tags) {
  std::string s;
  for (auto t : tags) {
    if (!s.empty()) s += ",";
    s += case_tag_name(t);
  }
  return s;
}

template <class E>
ordered_json record_json(const FixedPointRecord<E>& rec,
                         const std::string& family, long index) {
  ordered_json j;
  j["family"] = family;
  j["index"] = index;
  j["value"] = display(rec.value);
  j["multiplier"] = display(rec.multiplier);
  j["multiplier_norm"] = rec.multiplier_norm.str();
  j["character"] = character_name(rec.character);
  const auto& bound = rec.character == Character::attracting
                          ? rec.attraction_radius
                          : rec.siegel_radius;
  if (bound) {
    ordered_json r;
    r["kind"] = rec.character == Character::attracting ? "attraction" : "siegel";
    r["sup_exponent"] = bound->sup_exponent.str();
    r["exclusive"] = bound->exclusive;
    j["radius"] = std::move(r);
  } else {
    j["radius"] = nullptr;
  }
  return j;
}

template <class E>
void print_record_line(std::ostream& os, const FixedPointRecord<E>& rec,
                       const std::string& label) {
  os << "  " << label << "\n"
     << "    value       " << display(rec.value) << "\n"
     << "    |f'|        " << rec.multiplier_norm.str() << "  ("
     << character_name(rec.character) << ")\n";
  const auto& bound = rec.character == Character::attracting
                          ? rec.attraction_radius
                          : rec.siegel_radius;
  if (bound)
    os << "    "
       << (rec.character == Character::attracting ? "attraction  " : "siegel      ")
       << radius_str(*bound) << "\n";
}

template <class E>
int classify_with(const PolyMap& map, const FixedPointFamily<E>& fam,
                  bool as_json) {
  auto tags = theorem_case(map.ctx.p, map.n);
  std::vector<std::pair<std::string, FixedPointRecord<E>>> records;
  records.emplace_back("origin", classify(map, fam.origin));
  for (size_t i = 0; i < fam.roots_plus.size(); ++i)
    records.emplace_back("plus[" + std::to_string(i) + "]",
                         classify(map, fam.roots_plus[i]));
  for (size_t i = 0; i < fam.roots_minus.size(); ++i)
    records.emplace_back("minus[" + std::to_string(i) + "]",
                         classify(map, fam.roots_minus[i]));
  auto pts = fam.all_nonzero();
  auto matrix = disjointness_matrix(pts);

  if (as_json) {
    ordered_json j;
    j["map"] = {{"p", map.ctx.p},
                {"n", map.n},
                {"a", format_literal(map.a)},
                {"precision", map.ctx.precision}};
    j["case_tags"] = ordered_json::array();
    for (auto t : tags) j["case_tags"].push_back(case_tag_name(t));
    j["c_plus"] = format_literal(fam.c_plus);
    j["c_minus"] = format_literal(fam.c_minus);
    j["fixed_points"] = ordered_json::array();
    long idx = 0;
    for (const auto& [label, rec] : records) {
      std::string family = label.substr(0, label.find('['));
      j["fixed_points"].push_back(record_json(rec, family, idx++));
    }
    j["missing"] = {{"plus", fam.missing_plus},
                    {"minus", fam.missing_minus},
                    {"hint_plus", fam.hint_plus},
                    {"hint_minus", fam.hint_minus}};
    ordered_json m = ordered_json::array();
    for (const auto& row : matrix) {
      ordered_json r = ordered_json::array();
      for (const auto& nvrow : row) r.push_back(nvrow.str());
      m.push_back(std::move(r));
    }
    j["disjointness"] = std::move(m);
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }

  std::cout << "map f(x) = x^" << 2 * map.n + 1 << " + a*x^" << map.n + 1
            << "  over Q_" << map.ctx.p << ", a = " << format_literal(map.a)
            << ", precision " << map.ctx.precision << "\n";
  std::cout << "case tags {" << tags_str(tags) << "}\n";
  std::cout << "c_plus  = " << format_literal(fam.c_plus) << "\n";
  std::cout << "c_minus = " << format_literal(fam.c_minus) << "\n";
  std::cout << "fixed points (" << records.size() << " representable):\n";
  for (const auto& [label, rec] : records) print_record_line(std::cout, rec, label);
  if (fam.missing_plus + fam.missing_minus > 0) {
    std::cout << "missing roots: " << fam.missing_plus << " (c+), "
              << fam.missing_minus << " (c-)\n";
    if (!fam.hint_plus.empty()) std::cout << "  hint(c+): " << fam.hint_plus << "\n";
    if (!fam.hint_minus.empty())
      std::cout << "  hint(c-): " << fam.hint_minus << "\n";
  }
  if (!pts.empty()) {
    std::cout << "pairwise |x_i - x_j|:\n";
    for (size_t i = 0; i < pts.size(); ++i) {
      std::cout << " ";
      for (size_t j = 0; j < pts.size(); ++j)
        std::cout << " " << (i == j ? std::string("-") : matrix[i][j].str());
      std::cout << "\n";
    }
  }
  return kExitPass;
}

int cmd_classify(long p, long n, const std::string& a, int precision,
                 const std::vector<long>& field, bool as_json) {
  PadicContext ctx(p, precision);
  PolyMap map = make_map(n, parse_literal(a, ctx));
  if (field.empty()) return classify_with(map, fixed_points(map), as_json);
  ExtField F = make_extension(field, ctx);
  return classify_with(map, fixed_points_in(map, F), as_json);
}

int cmd_orbit(long p, long n, const std::string& a, const std::string& start,
              long iters, int precision, bool as_json) {
  PadicContext ctx(p, precision);
  PolyMap map = make_map(n, parse_literal(a, ctx));
  PadicNumber x0 = parse_literal(start, ctx);
  auto fam = fixed_points(map);
  std::vector<PadicNumber> candidates = fam.all_nonzero();
  candidates.push_back(fam.origin);
  // nearest fixed point: maximal valuation of the difference
  size_t best = 0;
  Valuation best_v = Valuation(-1000000);
  for (size_t i = 0; i < candidates.size(); ++i) {
    auto d = x0 - candidates[i];
    Valuation v = d.is_zero() ? Valuation::infinity() : d.valuation();
    if (v > best_v || i == 0) {
      best_v = v;
      best = i;
    }
  }
  const PadicNumber& ref = candidates[best];
  auto trace = iterate(map, x0, iters, ref);

  if (as_json) {
    ordered_json j;
    j["map"] = {{"p", p}, {"n", n}, {"a", a}, {"precision", precision}};
    j["start"] = format_literal(x0);
    j["reference"] = format_literal(ref);
    j["trace"] = ordered_json::array();
    for (const auto& [i, d] : trace.distances)
      j["trace"].push_back({{"iter", i}, {"distance", d.str()}});
    j["termination"] = orbit_termination_name(trace.termination);
    std::cout << j.dump(2) << "\n";
    return kExitPass;
  }
  std::cout << "orbit of " << format_literal(x0) << "\n";
  std::cout << "reference fixed point " << format_literal(ref) << "\n";
  std::cout << "iter  |f^i(x) - ref|\n";
  for (const auto& [i, d] : trace.distances)
    std::cout << (i < 10 ? "   " : (i < 100 ? "  " : " ")) << i << "  "
              << d.str() << "\n";
  std::cout << "termination: " << orbit_termination_name(trace.termination)
            << "\n";
  return kExitPass;
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return kExitPass;
    case Verdict::fail:
      return kExitCheckFailed;
    case Verdict::not_representable:
      return kExitNotRepresentable;
  }
  return kExitCheckFailed;  // unreachable
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "padlab: exact p-adic arithmetic and the fixed-point structure of "
      "f(x) = x^(2n+1) + a x^(n+1)"};
  app.require_subcommand(1);

  // shared option state
  long p = 0, n = 0;
  std::string a, start, suite_id;
  long iters_cli = 0;
  int precision = 40, samples = 0, iters = 0;
  std::uint64_t seed = 42;
  std::vector<long> field;
  bool as_json = false, timing = false;

  auto add_map_opts = [&](CLI::App* cmd, bool need_map) {
    if (need_map) {
      cmd->add_option("--p", p, "prime p >= 3")->required();
      cmd->add_option("--n", n, "exponent parameter n >= 1")->required();
      cmd->add_option("--a", a, "parameter a as a p-adic literal")->required();
    } else {
      cmd->add_option("--p", p, "prime p >= 3");
      cmd->add_option("--n", n, "exponent parameter n >= 1");
      cmd->add_option("--a", a, "parameter a as a p-adic literal");
    }
    cmd->add_option("--precision", precision, "digits of absolute precision")
        ->envname("PADIC_PRECISION");
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  CLI::App* classify = app.add_subcommand("classify",
                                          "fixed points, multipliers, radii, "
                                          "case tags, disjointness");
  add_map_opts(classify, true);
  classify->add_option("--field", field,
                       "extension modulus coefficients, constant term first")
      ->delimiter(',');

  CLI::App* orbit =
      app.add_subcommand("orbit", "distance trace of an orbit to the nearest "
                                  "fixed point");
  add_map_opts(orbit, true);
  orbit->add_option("--start", start, "start point literal")->required();
  orbit->add_option("--iters", iters_cli, "iterations")->default_val(50);

  CLI::App* verify =
      app.add_subcommand("verify", "run one named lemma/theorem suite");
  verify->add_option("suite", suite_id, "suite id, e.g. lemma-3.5")->required();
  add_map_opts(verify, false);
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--iters", iters, "iteration count");
  verify->add_option("--seed", seed, "PRNG seed")->envname("PADIC_SEED");
  verify->add_option("--field", field,
                     "extension modulus coefficients, constant term first")
      ->delimiter(',');
  verify->add_flag("--timing", timing, "collect wall-clock timing");

  CLI::App* report_all =
      app.add_subcommand("report-all", "run every registered suite");
  report_all->add_option("--precision", precision, "digits of precision")
      ->envname("PADIC_PRECISION");
  report_all->add_option("--seed", seed, "PRNG seed")->envname("PADIC_SEED");
  report_all->add_option("--samples", samples, "override sample counts");
  report_all->add_option("--iters", iters, "override iteration counts");
  report_all->add_flag("--json", as_json, "machine-readable output");
  report_all->add_flag("--timing", timing, "collect wall-clock timing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (classify->parsed())
      return cmd_classify(p, n, a, precision, field, as_json);
    if (orbit->parsed())
      return cmd_orbit(p, n, a, start, iters_cli, precision, as_json);

    if (verify->parsed()) {
      const SuiteInfo* info = find_suite(suite_id);
      if (!info) {
        std::cerr << "unknown suite '" << suite_id << "'; known suites:\n";
        for (const SuiteInfo& s : suite_registry())
          std::cerr << "  " << s.id << "  (" << s.description << ")\n";
        return kExitUsage;
      }
      SuiteOverrides over;
      if (verify->count("--p")) over.p = p;
      if (verify->count("--n")) over.n = n;
      if (verify->count("--a")) over.a = a;
      if (verify->count("--precision") || std::getenv("PADIC_PRECISION"))
        over.precision = precision;
      if (verify->count("--samples")) over.samples = samples;
      if (verify->count("--iters")) over.iters = iters;
      if (verify->count("--seed") || std::getenv("PADIC_SEED")) over.seed = seed;
      if (verify->count("--field")) over.field = field;
      VerificationReport rep = run_suite(*info, over, timing);
      std::cout << emit_report(rep, as_json ? ReportFormat::json
                                            : ReportFormat::text);
      return verdict_exit(rep.verdict);
    }

    if (report_all->parsed()) {
      SuiteOverrides over;
      if (report_all->count("--precision") || std::getenv("PADIC_PRECISION"))
        over.precision = precision;
      if (report_all->count("--seed") || std::getenv("PADIC_SEED"))
        over.seed = seed;
      if (report_all->count("--samples")) over.samples = samples;
      if (report_all->count("--iters")) over.iters = iters;
      bool any_fail = false, any_nr = false;
      if (as_json) {
        ordered_json arr = ordered_json::array();
        for (const SuiteInfo& info : suite_registry()) {
          VerificationReport rep = run_suite(info, over, timing);
          any_fail |= rep.verdict == Verdict::fail;
          any_nr |= rep.verdict == Verdict::not_representable;
          arr.push_back(
              ordered_json::parse(emit_report(rep, ReportFormat::json)));
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        for (const SuiteInfo& info : suite_registry()) {
          VerificationReport rep = run_suite(info, over, timing);
          any_fail |= rep.verdict == Verdict::fail;
          any_nr |= rep.verdict == Verdict::not_representable;
          std::string pad(std::max<size_t>(1, 24 - info.id.size()), ' ');
          std::cout << info.id << pad << verdict_name(rep.verdict);
          if (rep.violations > 0)
            std::cout << "  (" << rep.violations << " violations)";
          if (timing) std::cout << "  " << rep.timing_ms << " ms";
          std::cout << "\n";
        }
      }
      if (any_fail) return kExitCheckFailed;
      if (any_nr) return kExitNotRepresentable;
      return kExitPass;
    }
  } catch (const NotRepresentableError& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    if (!e.hint.empty()) std::cerr << "hint: " << e.hint << "\n";
    return kExitNotRepresentable;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "invalid request: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PrecisionError& e) {
    std::cerr << "precision exhausted: " << e.what()
              << " (raise --precision)\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
