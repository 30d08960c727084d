#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "adiag/character_table.hpp"
#include "adiag/group.hpp"

namespace adiag {

// A concrete unitary irreducible representation: one d x d unitary per group
// element. The matrices depend on basis choices made during extraction (and
// hence on the seed); everything downstream uses only basis-independent
// quantities (traces, singular values).
struct UnitaryIrrep {
  int degree = 0;
  int char_row = -1;  // row of the character table this realizes
  std::vector<Eigen::MatrixXcd> mats;

  int group_order() const { return static_cast<int>(mats.size()); }
  const Eigen::MatrixXcd& operator()(int g) const { return mats[g]; }
};

// Orthonormal bases of the isotypic components of the left regular
// representation; component i has dimension degrees[i]^2.
struct IsotypicDecomposition {
  std::vector<Eigen::MatrixXcd> basis;  // basis[i] is |G| x d_i^2, isometric
  std::vector<int> degrees;
};

IsotypicDecomposition isotypic_decomposition(const FiniteGroup& g,
                                             const CharacterTable& t);

// Extracts one unitary irrep per character row by cutting each isotypic
// component with a random Hermitian element of the commutant (seeded, with
// retries). Every returned irrep is verified: unitary, multiplicative, and
// trace-matching its character row, all within 1e-6.
std::vector<UnitaryIrrep> explicit_irreps(const FiniteGroup& g, const CharacterTable& t,
                                          std::uint64_t seed = 0);

// Outer tensor product: an irrep of the direct product (element (a,b) encoded
// as a*|H|+b, matching direct_product) from irreps of the factors.
UnitaryIrrep tensor_irrep(const UnitaryIrrep& pi, const UnitaryIrrep& sigma);

// Max deviation from unitarity / multiplicativity / character match.
double irrep_defect(const FiniteGroup& g, const CharacterTable& t,
                    const UnitaryIrrep& rep);

// Entrywise Schur orthogonality over the constructed representatives:
// (1/|G|) sum_g pi(g)_{ij} conj(sigma(g)_{kl}) is delta_ik delta_jl / d_pi
// when sigma is pi, and 0 for distinct rows. Returns the worst deviation;
// throws VerifyError above tol.
double verify_schur_orthogonality(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps,
                                  double tol = 1e-8);

}  // namespace adiag
