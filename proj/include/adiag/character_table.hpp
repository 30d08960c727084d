#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "adiag/group.hpp"

namespace adiag {

using Complex = std::complex<double>;

// Character table of a finite group. Rows are irreducible characters ordered
// by ascending degree (ties broken by rounded character values, so the
// ordering is reproducible for a fixed build); columns follow
// ConjugacyClassData class order.
struct CharacterTable {
  ConjugacyClassData classes;
  std::vector<int> degrees;                  // degrees[i] = chi_i(1)
  std::vector<std::vector<Complex>> values;  // values[i][c]

  int count() const { return static_cast<int>(degrees.size()); }
  int max_degree() const;
  // chi_i evaluated on a group element (table lookup through class_of).
  Complex at(int i, int element) const { return values[i][classes.class_of[element]]; }
};

// Computes the table by simultaneous diagonalisation of the class-sum algebra:
// a random real combination of the class matrices is diagonalised and each
// eigenvector is rescaled into a character row. The randomness is seeded from
// (seed, group hash, attempt); failed attempts (degenerate eigenvalues, bad
// degree rounding, orthogonality defect) are retried up to 8 times before
// giving up with ComputeError.
CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed = 0);

// Irreducible degrees, ascending (same order as the table rows).
std::vector<int> degrees(const CharacterTable& t);

// Largest |(1/|G|) sum_c |C_c| chi_i(c) conj(chi_j(c)) - delta_ij| over row
// pairs. Throws VerifyError if it exceeds tol; returns the defect otherwise.
double verify_schur_orthogonality(const CharacterTable& t, const FiniteGroup& g,
                                  double tol = 1e-8);

}  // namespace adiag
