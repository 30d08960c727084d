#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "adiag/cache.hpp"
#include "adiag/catalog.hpp"
#include "adiag/classify.hpp"
#include "adiag/detail/rng.hpp"
#include "adiag/error.hpp"
#include "adiag/expr.hpp"
#include "adiag/families.hpp"
#include "adiag/harmonic.hpp"
#include "adiag/parallel.hpp"
#include "adiag/report.hpp"

namespace {

using namespace adiag;

struct Options {
  std::uint64_t seed = 0;
  std::string cache_dir;
  bool no_cache = false;
  int max_order = kDefaultMaxOrder;
  double tol = 0.0;  // 0 = per-check defaults

  std::string effective_cache() const {
    if (no_cache) return {};
    return cache_dir.empty() ? default_cache_dir() : cache_dir;
  }
};

int emit_error(const std::string& msg, const char* kind, int code) {
  nlohmann::ordered_json j;
  j["error"] = msg;
  j["kind"] = kind;
  std::cerr << j.dump() << "\n";
  return code;
}

// --- invariants --------------------------------------------------------------

int run_invariants(const std::string& expr, const Options& opt, bool exact,
                   bool check_direct, const std::string& format) {
  const FiniteGroup g = evaluate(expr, opt.max_order);
  if (check_direct && g.order() > kAdDirectOrderCap)
    throw UsageError("--check-direct is capped at order " +
                     std::to_string(kAdDirectOrderCap));
  const CharacterTable t = character_table_cached(g, opt.effective_cache(), opt.seed);
  const InvariantReport r = make_invariant_report(g, t, check_direct, opt.seed);
  if (format == "md")
    std::cout << invariant_markdown(r, exact);
  else
    std::cout << invariant_json(r);
  if (check_direct) {
    const double dev = std::abs(r.ad_direct - r.am_float);
    std::cerr << "adDeviation=" << format_double(dev) << "\n";
    const double tol = opt.tol > 0 ? opt.tol : 1e-7;
    if (dev > tol)
      throw VerifyError("ad_direct deviates from the closed form by " +
                        format_double(dev));
  }
  return 0;
}

// --- scan ---------------------------------------------------------------------

std::vector<FiniteGroup> load_catalog_file(const std::string& path, int max_order) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read catalog file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError("catalog file " + path + ": " + e.what());
  }
  if (!j.is_array()) throw UsageError("catalog file must hold a JSON array");
  std::vector<FiniteGroup> out;
  for (const auto& item : j) {
    if (item.is_string()) {
      const GroupExpr e = parse_expr(item.get<std::string>());
      if (nominal_order(e) > max_order) continue;
      out.push_back(evaluate(e, max_order));
    } else if (item.is_object()) {
      const int order = item.at("order").get<int>();
      if (order > max_order) continue;
      std::vector<int> flat;
      flat.reserve(static_cast<std::size_t>(order) * order);
      for (const auto& row : item.at("table"))
        for (const auto& v : row) flat.push_back(v.get<int>());
      out.emplace_back(order, std::move(flat),
                       item.value("label", std::string("catalog-entry")));
    } else {
      throw UsageError("catalog entries must be expression strings or group objects");
    }
  }
  return out;
}

int run_scan(const Options& opt, const std::string& catalog_file,
             const std::string& format, bool no_direct) {
  std::vector<FiniteGroup> groups;
  if (catalog_file.empty())
    for (const auto& s : catalog_upto(opt.max_order))
      groups.push_back(evaluate(s, opt.max_order));
  else
    groups = load_catalog_file(catalog_file, opt.max_order);

  const std::string cache = opt.effective_cache();
  std::vector<ScanRow> rows(groups.size());
  parallel_for(groups.size(), [&](std::size_t i) {
    const FiniteGroup& g = groups[i];
    const CharacterTable t = character_table_cached(g, cache, opt.seed);
    rows[i].record = classification_record(g, t);
    if (!no_direct && g.order() <= kAdDirectOrderCap) {
      rows[i].ad_direct = ad_direct(g, explicit_irreps(g, t, opt.seed));
      rows[i].has_ad_direct = true;
    }
  });

  std::vector<ClassificationRecord> records;
  records.reserve(rows.size());
  for (const auto& r : rows) records.push_back(r.record);
  const MinimizerScanReport scan = minimizer_scan(records);
  for (auto& r : rows)
    r.min_ad_attained = !scan.vacuous && !r.record.abelian && r.record.am == scan.min_am;

  std::cout << (format == "json" ? scan_json(rows) : scan_csv(rows));

  if (scan.vacuous) {
    std::cerr << "scan: no non-abelian groups in range (minimum is vacuous)\n";
  } else {
    std::cerr << "scan: min non-abelian am = " << to_string(scan.min_am) << " attained by";
    for (const auto& l : scan.attainers) std::cerr << " " << l;
    std::cerr << "\n";
  }
  if (!scan.clean()) {
    for (const auto& l : scan.below_bound)
      std::cerr << "counterexample (am < 3/2): " << l << "\n";
    for (const auto& l : scan.in_gap)
      std::cerr << "counterexample (am in (1,3/2)): " << l << "\n";
    for (const auto& l : scan.equivalence_violations)
      std::cerr << "counterexample (am=3/2 xor centerIndex=4): " << l << "\n";
    return 1;
  }
  return 0;
}

// --- family -------------------------------------------------------------------

std::pair<int, int> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos)
    throw UsageError("range must look like a..b, got \"" + text + "\"");
  try {
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like a..b, got \"" + text + "\"");
  }
}

int run_family(const Options& opt, const std::string& which, int p,
               const std::string& range, const std::string& format, bool check_direct,
               double gap_threshold) {
  Family fam;
  if (which == "dihedral") {
    auto [lo, hi] = range.empty() ? std::pair<int, int>{3, 50} : parse_range(range);
    fam = dihedral_family(lo, hi, check_direct, opt.seed);
  } else if (which == "shift") {
    std::pair<int, int> def = p == 2 ? std::pair<int, int>{2, 8} : std::pair<int, int>{2, 4};
    auto [lo, hi] = range.empty() ? def : parse_range(range);
    fam = shift_family(p, lo, hi, check_direct, opt.seed);
  } else {
    throw UsageError("unknown family \"" + which + "\" (want dihedral or shift)");
  }

  std::cout << (format == "tsv" ? family_tsv(fam) : family_csv(fam));

  const FamilyCheck div = degree_divisor_check(fam);
  const FamilyCheck mass = char_mass_decay(fam);
  const FamilyCheck conv = convergence_report(fam, gap_threshold);
  std::cerr << "family " << fam.name << ": " << fam.points.size()
            << " points, final gap = " << to_string(conv.final_gap)
            << ", nu(Omega_1) decay rate ~ n^-" << format_double(mass.decay_rate)
            << " (asymptotic evidence for the limit am -> " << fam.p
            << ", not a proof)\n";
  bool ok = true;
  for (const FamilyCheck* c : {&div, &mass, &conv}) {
    ok = ok && c->ok;
    for (const auto& f : c->failures) std::cerr << "check failed: " << f << "\n";
  }
  if (check_direct) {
    double worst = 0.0;
    for (const auto& pt : fam.points)
      if (pt.has_ad_direct)
        worst = std::max(worst, std::abs(pt.ad_direct - to_double(pt.am)));
    std::cerr << "max |ad_direct - am| over points = " << format_double(worst) << "\n";
    if (worst > (opt.tol > 0 ? opt.tol : 1e-7)) {
      std::cerr << "check failed: direct route deviates\n";
      ok = false;
    }
  }
  return ok ? 0 : 1;
}

// --- verify -------------------------------------------------------------------

struct VerifyContext {
  bool all_ok = true;
  void report(const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "ok   " : "FAIL ") << name;
    if (!detail.empty()) std::cout << "  " << detail;
    std::cout << "\n";
    all_ok = all_ok && ok;
  }
};

void verify_flip(VerifyContext& ctx, const Options& opt) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-10;
  double worst_norm = 0.0;
  bool structural = true;
  for (int d = 1; d <= 8; ++d) {
    const FlipOperator x = flip_operator(d);
    structural = structural && x.mat.isApprox(x.mat.transpose(), 0.0);
    structural = structural &&
                 (x.mat * x.mat - Eigen::MatrixXd::Identity(d * d, d * d)).norm() == 0.0;
    structural = structural && x.mat.trace() == static_cast<double>(d);
    worst_norm = std::max(worst_norm,
                          std::abs(trace_norm(x.mat) - static_cast<double>(d) * d));
  }
  ctx.report("flip.structure", structural, "self-adjoint involution, trace d (exact)");
  ctx.report("flip.trace_norm", worst_norm < tol,
             "worst |tracenorm - d^2| = " + format_double(worst_norm));

  detail::Rng rng(detail::splitmix64(opt.seed) ^ 0xf11b, 0);
  double worst_id = 0.0;
  for (int d = 1; d <= 6; ++d)
    for (int rep = 0; rep < 100; ++rep) {
      Eigen::MatrixXcd b(d, d), c(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          b(i, j) = Complex(rng.next_sym(), rng.next_sym());
          c(i, j) = Complex(rng.next_sym(), rng.next_sym());
        }
      worst_id = std::max(worst_id, flip_trace_identity(b, c));
    }
  ctx.report("flip.trace_identity", worst_id < tol,
             "worst deviation = " + format_double(worst_id) + " over 600 pairs");
}

void verify_orthogonality(VerifyContext& ctx, const Options& opt, int cap) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-8;
  const std::string cache = opt.effective_cache();
  double worst_rows = 0.0, worst_entries = 0.0;
  std::string failed;
  for (const auto& s : catalog_upto(cap)) {
    const FiniteGroup g = evaluate(s, cap);
    const CharacterTable t = character_table_cached(g, cache, opt.seed);
    try {
      worst_rows = std::max(worst_rows, verify_schur_orthogonality(t, g, tol));
      worst_entries = std::max(
          worst_entries,
          verify_schur_orthogonality(g, explicit_irreps(g, t, opt.seed), tol));
    } catch (const VerifyError&) {
      failed = s;
      break;
    }
  }
  ctx.report("orthogonality.rows", failed.empty(),
             failed.empty() ? "worst defect = " + format_double(worst_rows)
                            : "failed on " + failed);
  ctx.report("orthogonality.entries", failed.empty(),
             failed.empty() ? "worst defect = " + format_double(worst_entries)
                            : "failed on " + failed);
}

void verify_plancherel(VerifyContext& ctx, const Options& opt, int cap) {
  const double tol = opt.tol > 0 ? opt.tol : 1e-8;
  const std::string cache = opt.effective_cache();
  double worst = 0.0;
  for (const auto& s : catalog_upto(std::min(cap, 24))) {
    const FiniteGroup g = evaluate(s, cap);
    const CharacterTable t = character_table_cached(g, cache, opt.seed);
    plancherel_weights(g, t);  // throws if the weights are off
    worst = std::max(worst, verify_plancherel_identity(
                                g, explicit_irreps(g, t, opt.seed), 50, opt.seed));
  }
  ctx.report("plancherel.identity", worst < tol,
             "worst deviation = " + format_double(worst) + " (50 pairs/group)");
}

void verify_theorems(VerifyContext& ctx, const Options& opt, int cap) {
  const std::string cache = opt.effective_cache();
  std::vector<ClassificationRecord> records;
  bool g47 = true, e44 = true, a45 = true, l46 = true, l42 = true;
  std::string witness;
  for (const auto& s : catalog_upto(cap)) {
    const FiniteGroup g = evaluate(s, cap);
    const CharacterTable t = character_table_cached(g, cache, opt.seed);
    records.push_back(classification_record(g, t));
    if (!theorem_G_check(g, t, opt.seed)) { g47 = false; witness = s; }
    if (!g.is_abelian()) {
      if (!was_E_check(g, t)) { e44 = false; witness = s; }
      if (!was_A_check(g, t)) { a45 = false; witness = s; }
      if (center_quotient_cyclic(g)) { l46 = false; witness = s; }
      if (records.back().comm_size == 2) {
        const AnticommuteReport ac =
            anticommute_check(g, t, explicit_irreps(g, t, opt.seed));
        if (!(ac.z_central && ac.z_involution && ac.max_deviation < 1e-6)) {
          l42 = false;
          witness = s;
        }
      }
    }
  }
  const MinimizerScanReport scan = minimizer_scan(records);
  ctx.report("theorems.equiv_center4_comm2maxdeg2", g47,
             g47 ? std::to_string(records.size()) + " groups" : "failed on " + witness);
  ctx.report("theorems.comm2_iff_halfmass", e44, e44 ? "" : "failed on " + witness);
  ctx.report("theorems.threehalves_iff_strata", a45, a45 ? "" : "failed on " + witness);
  ctx.report("theorems.center_quotient_noncyclic", l46, l46 ? "" : "failed on " + witness);
  ctx.report("theorems.anticommutation", l42, l42 ? "" : "failed on " + witness);
  const bool min_ok =
      scan.clean() && (scan.vacuous || (scan.min_am == Rational(3, 2)));
  ctx.report("theorems.minimizer", min_ok,
             scan.vacuous ? "vacuous" : "min = " + to_string(scan.min_am));
}

int run_verify(const Options& opt, const std::string& suite) {
  VerifyContext ctx;
  const int cap = std::min(opt.max_order, kAdDirectOrderCap);
  if (suite == "all" || suite == "flip") verify_flip(ctx, opt);
  if (suite == "all" || suite == "orthogonality")
    verify_orthogonality(ctx, opt, std::min(cap, 24));
  if (suite == "all" || suite == "plancherel") verify_plancherel(ctx, opt, cap);
  if (suite == "all" || suite == "theorems")
    verify_theorems(ctx, opt, std::min(cap, opt.max_order));
  return ctx.all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier-algebra invariants of finite groups"};
  app.require_subcommand(1);
  Options opt;

  std::string expr, format = "json", catalog_file, family_name, range, suite = "all";
  bool exact = false, check_direct = false, no_direct = false;
  int family_p = 2;
  double gap_threshold = 0.2;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", opt.seed, "seed for all randomized internals");
    cmd->add_option("--cache-dir", opt.cache_dir,
                    "character-table cache directory (default: platform cache dir, "
                    "or $ADIAG_CACHE_DIR)");
    cmd->add_flag("--no-cache", opt.no_cache, "disable the character-table cache");
    cmd->add_option("--max-order", opt.max_order, "largest group order to build");
    cmd->add_option("--tol", opt.tol, "override the default numeric tolerance");
  };

  CLI::App* inv = app.add_subcommand("invariants", "invariants of one group expression");
  inv->add_option("expr", expr, "group expression, e.g. \"sd(C3xC3,C2,shift)\"")
      ->required();
  inv->add_flag("--exact", exact, "print exact rationals only (markdown)");
  inv->add_flag("--check-direct", check_direct,
                "also compute the anti-diagonal constant from explicit matrices");
  inv->add_option("--format", format, "json|md")
      ->check(CLI::IsMember({"json", "md"}));
  add_common(inv);

  CLI::App* scan = app.add_subcommand("scan", "classification scan over a catalog");
  scan->add_option("--catalog", catalog_file,
                   "JSON array of expressions or {order,table,label} objects");
  scan->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan->add_flag("--no-direct", no_direct, "skip the explicit-matrix route");
  add_common(scan);

  CLI::App* family = app.add_subcommand("family", "finite-quotient family asymptotics");
  family->add_option("--family", family_name, "dihedral|shift")->required();
  family->add_option("--p", family_p, "shift-family complement order (2 or 3)");
  family->add_option("--n-range", range, "parameter range a..b");
  family->add_option("--format", format, "csv|tsv")
      ->check(CLI::IsMember({"csv", "tsv"}));
  family->add_flag("--check-direct", check_direct,
                   "cross-check points with the explicit-matrix route");
  family->add_option("--gap-threshold", gap_threshold,
                     "largest acceptable final gap");
  add_common(family);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--suite", suite, "all|orthogonality|flip|plancherel|theorems")
      ->check(CLI::IsMember({"all", "orthogonality", "flip", "plancherel", "theorems"}));
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return run_invariants(expr, opt, exact, check_direct, format);
    if (scan->parsed()) {
      if (!scan->count("--max-order")) opt.max_order = 48;
      if (!scan->count("--format")) format = "csv";
      return run_scan(opt, catalog_file, format, no_direct);
    }
    if (family->parsed()) {
      if (!family->count("--format")) format = "csv";
      return run_family(opt, family_name, family_p, range, format, check_direct,
                        gap_threshold);
    }
    if (verify->parsed()) {
      if (!verify->count("--max-order")) opt.max_order = 24;
      return run_verify(opt, suite);
    }
  } catch (const UsageError& e) {
    return emit_error(e.what(), "usage", 2);
  } catch (const VerifyError& e) {
    return emit_error(e.what(), "verify", 1);
  } catch (const ComputeError& e) {
    return emit_error(e.what(), "compute", 3);
  } catch (const std::exception& e) {
    return emit_error(e.what(), "compute", 3);
  }
  return 2;
}
