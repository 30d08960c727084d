#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adiag/rational.hpp"

namespace adiag {

// One member G_n of a parametrized family, with everything the asymptotic
// reports need. am always equals the closed-form route exactly; adDirect is
// filled only when the point is small enough for the matrix route.
struct FamilyPoint {
  long long n = 0;
  std::string label;
  int order = 0;
  Rational am;
  Rational gap;        // p - am, nonnegative, -> 0
  Rational nu_omega1;  // |G^ab| / |G|
  int maxdeg = 0;
  std::vector<int> degree_multiset;  // ascending
  int derived_order = 0;
  double ad_direct = 0.0;
  bool has_ad_direct = false;
};

struct Family {
  std::string name;  // "dihedral" | "shift"
  int p = 0;         // the limit of am along the family
  int m_divisor = 0; // every irrep degree must divide this
  std::vector<FamilyPoint> points;  // ascending n
  // Declared index subsequences along which gap and nu_omega1 decay
  // monotonically (the dihedral family alternates between two regimes by
  // parity; the shift family is a single run).
  std::vector<std::vector<std::size_t>> subsequences;
};

// D_n = (Z/n) x| C2 for n in [n_min, n_max]; limit of am is 2.
Family dihedral_family(int n_min, int n_max, bool run_ad_direct = false,
                       std::uint64_t seed = 0);

// (Z/n)^p x| C_p by coordinate shift, p in {2,3}; limit of am is p.
Family shift_family(int p, int n_min, int n_max, bool run_ad_direct = false,
                    std::uint64_t seed = 0);

struct FamilyCheck {
  bool ok = true;
  std::vector<std::string> failures;
  bool decaying = false;    // nu_omega1 strictly smaller at the end than the start
  double decay_rate = 0.0;  // least-squares exponent r in nu_omega1 ~ n^-r
  Rational final_gap;
};

// Every degree at every point divides the family's m (semidirect complement).
FamilyCheck degree_divisor_check(const Family& f);

// nu_omega1 == |G^ab|/|G| exactly at every point and non-increasing along
// each declared subsequence; reports the fitted decay rate.
FamilyCheck char_mass_decay(const Family& f);

// gap = p - am > 0 at every finite point, equals (p-1)*nu_omega1 exactly,
// decreases monotonically along each declared subsequence, and ends below
// gap_threshold.
FamilyCheck convergence_report(const Family& f, double gap_threshold = 0.05);

}  // namespace adiag
