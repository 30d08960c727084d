#include "adiag/families.hpp"

#include <algorithm>
#include <cmath>

#include "adiag/character_table.hpp"
#include "adiag/error.hpp"
#include "adiag/expr.hpp"
#include "adiag/group.hpp"
#include "adiag/harmonic.hpp"
#include "adiag/parallel.hpp"

namespace adiag {

namespace {

constexpr int kTableOrderCap = kDefaultMaxOrder;

FamilyPoint build_point(const FiniteGroup& g, long long n, int p, bool run_ad,
                        std::uint64_t seed) {
  FamilyPoint pt;
  pt.n = n;
  pt.label = g.label();
  pt.order = g.order();
  const CharacterTable t = character_table(g, seed);
  pt.am = ad_closed_form(g, t);
  if (pt.am != johnson_am(g, t))
    throw VerifyError(g.label() + ": closed-form routes disagree");
  pt.gap = Rational(p) - pt.am;
  pt.nu_omega1 = nu_omega1(g, t);
  pt.maxdeg = t.max_degree();
  pt.degree_multiset = t.degrees;
  pt.derived_order = derived_subgroup(g).order();
  if (run_ad && g.order() <= kAdDirectOrderCap) {
    pt.ad_direct = ad_direct(g, explicit_irreps(g, t, seed));
    pt.has_ad_direct = true;
  }
  return pt;
}

}  // namespace

Family dihedral_family(int n_min, int n_max, bool run_ad_direct, std::uint64_t seed) {
  if (n_min < 3 || n_min > n_max) throw UsageError("dihedral family needs 3 <= nMin <= nMax");
  if (2LL * n_max > kTableOrderCap) throw UsageError("dihedral family exceeds order cap");
  Family f;
  f.name = "dihedral";
  f.p = 2;
  f.m_divisor = 2;
  f.points.resize(n_max - n_min + 1);
  parallel_for(f.points.size(), [&](std::size_t i) {
    const int n = n_min + static_cast<int>(i);
    f.points[i] = build_point(make_dihedral(n), n, f.p, run_ad_direct, seed);
  });
  std::vector<std::size_t> odd, even;
  for (std::size_t i = 0; i < f.points.size(); ++i)
    (f.points[i].n % 2 ? odd : even).push_back(i);
  if (!odd.empty()) f.subsequences.push_back(std::move(odd));
  if (!even.empty()) f.subsequences.push_back(std::move(even));
  return f;
}

Family shift_family(int p, int n_min, int n_max, bool run_ad_direct, std::uint64_t seed) {
  if (p != 2 && p != 3) throw UsageError("shift family supports p in {2,3}");
  if (n_min < 2 || n_min > n_max) throw UsageError("shift family needs 2 <= nMin <= nMax");
  long long top_order = p;
  for (int j = 0; j < p; ++j) top_order *= n_max;
  if (top_order > kTableOrderCap)
    throw UsageError("shift family point n=" + std::to_string(n_max) +
                     " exceeds order cap");
  Family f;
  f.name = "shift";
  f.p = p;
  f.m_divisor = p;
  f.points.resize(n_max - n_min + 1);
  parallel_for(f.points.size(), [&](std::size_t i) {
    const long long n = n_min + static_cast<long long>(i);
    std::string base = "C" + std::to_string(n);
    for (int j = 1; j < p; ++j) base += "xC" + std::to_string(n);
    const FiniteGroup g =
        evaluate("sd(" + base + ",C" + std::to_string(p) + ",shift)", kTableOrderCap);
    f.points[i] = build_point(g, n, p, run_ad_direct, seed);
  });
  std::vector<std::size_t> all(f.points.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  f.subsequences.push_back(std::move(all));
  return f;
}

FamilyCheck degree_divisor_check(const Family& f) {
  FamilyCheck out;
  for (const auto& pt : f.points)
    for (int d : pt.degree_multiset)
      if (f.m_divisor % d != 0) {
        out.ok = false;
        out.failures.push_back(pt.label + ": degree " + std::to_string(d) +
                               " does not divide " + std::to_string(f.m_divisor));
      }
  return out;
}

FamilyCheck char_mass_decay(const Family& f) {
  FamilyCheck out;
  for (const auto& pt : f.points) {
    const int ab = pt.order / pt.derived_order;
    if (pt.nu_omega1 != Rational(ab, pt.order)) {
      out.ok = false;
      out.failures.push_back(pt.label + ": nu(Omega_1) != |G^ab|/|G|");
    }
  }
  for (const auto& sub : f.subsequences)
    for (std::size_t i = 1; i < sub.size(); ++i)
      if (f.points[sub[i]].nu_omega1 > f.points[sub[i - 1]].nu_omega1) {
        out.ok = false;
        out.failures.push_back("nu(Omega_1) increases at " + f.points[sub[i]].label);
      }
  if (!f.points.empty())
    out.decaying = f.points.back().nu_omega1 < f.points.front().nu_omega1;
  // least-squares slope of log nu against log n
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int m = 0;
  for (const auto& pt : f.points) {
    if (pt.n < 2) continue;
    const double x = std::log(static_cast<double>(pt.n));
    const double y = std::log(to_double(pt.nu_omega1));
    sx += x; sy += y; sxx += x * x; sxy += x * y; ++m;
  }
  if (m >= 2 && sxx * m - sx * sx > 1e-12)
    out.decay_rate = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  return out;
}

FamilyCheck convergence_report(const Family& f, double gap_threshold) {
  FamilyCheck out;
  for (const auto& pt : f.points) {
    if (pt.gap <= 0) {
      out.ok = false;
      out.failures.push_back(pt.label + ": gap not strictly positive");
    }
    if (pt.gap != Rational(f.p - 1) * pt.nu_omega1) {
      out.ok = false;
      out.failures.push_back(pt.label + ": gap != (p-1)*nu(Omega_1)");
    }
  }
  for (const auto& sub : f.subsequences)
    for (std::size_t i = 1; i < sub.size(); ++i)
      if (f.points[sub[i]].gap >= f.points[sub[i - 1]].gap) {
        out.ok = false;
        out.failures.push_back("gap does not decrease at " + f.points[sub[i]].label);
      }
  if (!f.points.empty()) {
    out.final_gap = f.points.back().gap;
    out.decaying = f.points.back().gap < f.points.front().gap;
    if (to_double(out.final_gap) > gap_threshold) {
      out.ok = false;
      out.failures.push_back("final gap " + to_string(out.final_gap) + " above threshold");
    }
  }
  return out;
}

}  // namespace adiag
