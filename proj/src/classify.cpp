#include "adiag/classify.hpp"

#include <algorithm>

#include "adiag/error.hpp"
#include "adiag/harmonic.hpp"

namespace adiag {

ClassificationRecord classification_record(const FiniteGroup& g,
                                           const CharacterTable& t) {
  ClassificationRecord r;
  r.label = g.label();
  r.order = g.order();
  r.center_order = static_cast<int>(center(g).size());
  r.center_index = g.order() / r.center_order;
  r.comm_size = static_cast<int>(commutator_set(g).size());
  r.derived_order = derived_subgroup(g).order();
  r.abelianization_order = g.order() / r.derived_order;
  r.maxdeg = t.max_degree();
  r.am = ad_closed_form(g, t);
  r.nu_omega1 = nu_omega1(g, t);
  r.abelian = g.is_abelian();
  return r;
}

bool theorem_G_check(const FiniteGroup& g, const CharacterTable& t, std::uint64_t seed) {
  const ClassificationRecord r = classification_record(g, t);
  const bool i = r.center_index4();
  const bool ii = r.has_comm2() && r.has_maxdeg2();
  if (i != ii) return false;
  if (!ii) return true;
  // Third condition: the irreps of degree <= 2 separate points.
  const std::vector<UnitaryIrrep> reps = explicit_irreps(g, t, seed);
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      double dist = 0.0;
      for (const auto& rep : reps) {
        if (rep.degree > 2) continue;
        dist = std::max(dist, (rep(a) - rep(b)).cwiseAbs().maxCoeff());
      }
      if (dist <= 1e-6) return false;
    }
  return true;
}

MinimizerScanReport minimizer_scan(const std::vector<ClassificationRecord>& records) {
  MinimizerScanReport rep;
  const Rational three_halves(3, 2);
  bool have_min = false;
  for (const auto& r : records) {
    if (r.abelian) continue;  // am = 1 for these; covered by its own check
    if (!have_min || r.am < rep.min_am) {
      rep.min_am = r.am;
      have_min = true;
    }
    if (r.am < three_halves) rep.below_bound.push_back(r.label);
    if (r.am > 1 && r.am < three_halves) rep.in_gap.push_back(r.label);
    if (r.is_min_ad() != r.center_index4())
      rep.equivalence_violations.push_back(r.label);
  }
  rep.vacuous = !have_min;
  if (have_min)
    for (const auto& r : records)
      if (!r.abelian && r.am == rep.min_am) rep.attainers.push_back(r.label);
  std::sort(rep.attainers.begin(), rep.attainers.end());
  return rep;
}

AnticommuteReport anticommute_check(const FiniteGroup& g, const CharacterTable& t,
                                    const std::vector<UnitaryIrrep>& reps) {
  AnticommuteReport out;
  const std::vector<int> comm = commutator_set(g);
  if (comm.size() != 2) return out;  // not applicable
  out.applicable = true;
  out.z = comm[1];
  out.z_involution = g.mul(out.z, out.z) == 0;
  const std::vector<int> zc = centralizer(g, out.z);
  out.z_central = static_cast<int>(zc.size()) == g.order();

  for (const auto& rep : reps) {
    if (rep.degree <= 1) continue;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(rep.degree, rep.degree);
    out.max_deviation =
        std::max(out.max_deviation, (rep(out.z) + id).cwiseAbs().maxCoeff());
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) {
        if (g.mul(x, y) == g.mul(y, x)) continue;
        ++out.pairs_checked;
        out.max_deviation = std::max(
            out.max_deviation,
            (rep(x) * rep(y) + rep(y) * rep(x)).cwiseAbs().maxCoeff());
      }
  }
  return out;
}

bool was_E_check(const FiniteGroup& g, const CharacterTable& t) {
  if (g.is_abelian()) throw UsageError("was_E_check expects a non-abelian group");
  const bool left = commutator_set(g).size() == 2;
  const bool right = nu_omega1(g, t) == Rational(1, 2);
  return left == right;
}

bool was_A_check(const FiniteGroup& g, const CharacterTable& t) {
  if (g.is_abelian()) throw UsageError("was_A_check expects a non-abelian group");
  const bool left = ad_closed_form(g, t) == Rational(3, 2);
  const Stratification s = stratification(g, t);
  bool high_mass = false;
  for (const auto& [n, m] : s.mass)
    if (n >= 3 && m != 0) high_mass = true;
  const bool right = s.nu_omega1 == Rational(1, 2) && !high_mass;
  return left == right;
}

bool center_quotient_cyclic(const FiniteGroup& g) {
  const std::vector<int> z = center(g);
  for (int x = 0; x < g.order(); ++x) {
    std::vector<int> gens = z;
    gens.push_back(x);
    if (subgroup_generated(g, gens).order() == g.order()) return true;
  }
  return false;
}

}  // namespace adiag
