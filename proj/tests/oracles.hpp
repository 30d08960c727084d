#pragma once

// Brute-force cross-checks for the tests. These are deliberately written from
// first principles (counting lemmas, direct summation) rather than calling
// back into the code paths they are meant to validate.

#include <complex>
#include <string>
#include <vector>

#include "adiag/character_table.hpp"
#include "adiag/group.hpp"
#include "adiag/rational.hpp"

namespace oracle {

// Number of conjugacy classes via Burnside's counting lemma applied to the
// conjugation action: (1/|G|) sum_x |C(x)|.
inline int class_count(const adiag::FiniteGroup& g) {
  long long fixed = 0;
  for (int h = 0; h < g.order(); ++h)
    for (int x = 0; x < g.order(); ++x)
      if (g.conj(h, x) == x) ++fixed;
  return static_cast<int>(fixed / g.order());
}

inline int involution_count(const adiag::FiniteGroup& g) {  // solutions of x^2 = e
  int c = 0;
  for (int x = 0; x < g.order(); ++x)
    if (g.mul(x, x) == 0) ++c;
  return c;
}

// sum_pi FS(pi) d_pi with FS(pi) = (1/|G|) sum_g chi(g^2). Classically equal
// to the involution count; ties the whole table to pure Cayley arithmetic.
inline std::complex<double> frobenius_schur_mass(const adiag::FiniteGroup& g,
                                                 const adiag::CharacterTable& t) {
  std::complex<double> total = 0;
  for (int r = 0; r < t.count(); ++r) {
    std::complex<double> fs = 0;
    for (int x = 0; x < g.order(); ++x) fs += t.at(r, g.mul(x, x));
    total += fs / static_cast<double>(g.order()) * static_cast<double>(t.degrees[r]);
  }
  return total;
}

// The subgroup as a standalone group: re-index its elements (identity first)
// and restrict the ambient Cayley table.
inline adiag::FiniteGroup subgroup_group(const adiag::FiniteGroup& g,
                                         const adiag::SubgroupDescriptor& h,
                                         const std::string& label) {
  const int m = h.order();
  std::vector<int> back(g.order(), -1);
  for (int i = 0; i < m; ++i) back[h.elements[i]] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[static_cast<std::size_t>(i) * m + j] = back[g.mul(h.elements[i], h.elements[j])];
  return adiag::FiniteGroup(m, std::move(table), label);
}

inline adiag::Rational rat(long long p, long long q) { return adiag::Rational(p, q); }

// Degree multisets derived by hand (abelianization counts + sum-of-squares
// bookkeeping), pinned for regression.
struct KnownGroup {
  const char* expr;
  std::vector<int> degrees;       // ascending
  const char* am;                 // p/q
  int center_index;
  int comm_size;
};

inline const std::vector<KnownGroup>& known_groups() {
  static const std::vector<KnownGroup> k = {
      {"C1", {1}, "1", 1, 1},
      {"C6", {1, 1, 1, 1, 1, 1}, "1", 1, 1},
      {"S3", {1, 1, 2}, "5/3", 6, 3},
      {"D4", {1, 1, 1, 1, 2}, "3/2", 4, 2},
      {"Q8", {1, 1, 1, 1, 2}, "3/2", 4, 2},
      {"Heis2", {1, 1, 1, 1, 2}, "3/2", 4, 2},
      {"D5", {1, 1, 2, 2}, "9/5", 10, 5},
      {"D6", {1, 1, 1, 1, 2, 2}, "5/3", 6, 4},
      {"A4", {1, 1, 1, 3}, "5/2", 12, 9},
      {"Dic3", {1, 1, 1, 1, 2, 2}, "5/3", 6, 4},
      {"S4", {1, 1, 2, 3, 3}, "8/3", 24, 13},
      {"Dic4", {1, 1, 1, 1, 2, 2, 2}, "7/4", 8, 4},
      {"Heis3", {1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 3}, "7/3", 9, 3},
      {"sd(C5,C4,pow:2)", {1, 1, 1, 1, 4}, "17/5", 20, 5},
      {"sd(C7,C3,pow:2)", {1, 1, 1, 3, 3}, "19/7", 21, 7},
      {"sd(C3xC3,C2,shift)", {1, 1, 1, 1, 1, 1, 2, 2, 2}, "5/3", 18, 5},
      {"A5", {1, 3, 3, 4, 5}, "61/15", 60, 60},
  };
  return k;
}

}  // namespace oracle
