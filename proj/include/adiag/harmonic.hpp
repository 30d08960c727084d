#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "adiag/character_table.hpp"
#include "adiag/group.hpp"
#include "adiag/irreps.hpp"
#include "adiag/rational.hpp"

namespace adiag {

// The explicit-matrix route is O(|G|^3)-ish in time and O(maxdeg^4) per
// coefficient; past this order only the exact degree-based routes run.
inline constexpr int kAdDirectOrderCap = 200;

// Plancherel measure on the dual, counting-measure normalization:
// nu({pi}) = d_pi / |G|, so that sum_pi d_pi * nu({pi}) = 1.
struct PlancherelData {
  std::vector<int> degrees;      // one per irrep, table row order
  std::vector<Rational> weight;  // weight[i] = degrees[i] / |G|
};

// Masses of the degree strata Omega_n = { pi : d_pi = n }.
struct Stratification {
  std::vector<std::pair<int, Rational>> mass;  // (n, nu(Omega_n)), n ascending
  Rational nu_omega1;                          // mass at n=1 (0 if absent)
};

// The flip on C^d (x) C^d: X[(a,b),(k,l)] = [k==b][l==a]. Self-adjoint
// involution with trace d and trace norm d^2.
struct FlipOperator {
  int d = 0;
  Eigen::MatrixXd mat;  // d^2 x d^2, entries 0/1
};

// Fourier coefficient of the anti-diagonal {(x, x^-1)} at the pair (pi,
// sigma): C = sum_x pi(x) (x) sigma(x^-1). Vanishes for inequivalent pairs;
// for the identical representative it equals (|G|/d) * flip.
struct AntiDiagonalCoefficient {
  int row_pi = 0, row_sigma = 0;
  Eigen::MatrixXcd matrix;
  double trace_norm = 0.0;
};

PlancherelData plancherel_weights(const FiniteGroup& g, const CharacterTable& t);

// Deviation in the Parseval identity
//   <f,g> = sum_pi (d_pi/|G|) Tr(pi(f) pi(g)^*),   pi(f) = sum_x f(x) pi(x)
// for one pair of functions on G (vectors indexed by element).
double verify_plancherel_identity(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps,
                                  const Eigen::VectorXcd& f, const Eigen::VectorXcd& h);

// Worst deviation over `pairs` seeded random pairs.
double verify_plancherel_identity(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps, int pairs,
                                  std::uint64_t seed);

// Amenability constant of the Fourier algebra: (1/|G|) sum d_pi^3, exact.
Rational johnson_am(const FiniteGroup& g, const CharacterTable& t);

// The anti-diagonal constant through the degree stratification:
// sum_n n^2 nu(Omega_n). Agrees with johnson_am identically.
Rational ad_closed_form(const FiniteGroup& g, const CharacterTable& t);

// The anti-diagonal constant the long way round: explicit matrices, all
// (pi, sigma) coefficient matrices, trace norms by SVD —
//   sum_{pi,sigma} (d_pi d_sigma / |G|^2) ||C_{pi,sigma}||_1.
// No vanishing rule is assumed; every pair is summed. Pair results are
// reduced in row order, so threading cannot change the value.
double ad_direct(const FiniteGroup& g, const std::vector<UnitaryIrrep>& reps,
                 bool parallel = true);

FlipOperator flip_operator(int d);

// |Tr(X (B (x) C)) - Tr(BC)| for square matrices of matching dimension.
double flip_trace_identity(const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c);

AntiDiagonalCoefficient antidiag_coefficient(const FiniteGroup& g,
                                             const UnitaryIrrep& pi,
                                             const UnitaryIrrep& sigma);

// Checks Proposition-style predictions for one pair: distinct rows must give
// (Frobenius) norm ~0; the identical representative must match (|G|/d) * flip
// entrywise. Returns the deviation from the prediction.
double antidiag_coefficient_check(const FiniteGroup& g, const UnitaryIrrep& pi,
                                  const UnitaryIrrep& sigma);

Stratification stratification(const FiniteGroup& g, const CharacterTable& t);
Rational nu_omega1(const FiniteGroup& g, const CharacterTable& t);

// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& m);
double trace_norm(const Eigen::MatrixXd& m);

}  // namespace adiag
