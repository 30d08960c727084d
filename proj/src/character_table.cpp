#include "adiag/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "adiag/detail/rng.hpp"
#include "adiag/error.hpp"

namespace adiag {

namespace {

constexpr double kDegreeRoundTol = 1e-6;
constexpr double kOrthogonalityTol = 1e-8;
constexpr int kMaxAttempts = 8;

// One diagonalisation attempt; returns false when the random combination was
// unlucky (clustered eigenvalues leaking between eigenvectors).
bool try_build(const FiniteGroup& g, const ConjugacyClassData& cls, std::uint64_t seed,
               int attempt, CharacterTable& out) {
  const int n = g.order();
  const int k = cls.count();
  detail::Rng rng(detail::splitmix64(seed) ^ g.hash(), static_cast<std::uint64_t>(attempt));

  std::vector<double> t(k);
  for (double& v : t) v = rng.next_sym();

  // T[j][l] = sum_i t_i c_{ijl} where K_i K_j = sum_l c_{ijl} K_l are the
  // class-algebra structure constants. Expanding the count over x = z_l y^-1
  // collapses the i-sum, so T is assembled in O(k n) without storing c.
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(k, k);
  for (int l = 0; l < k; ++l) {
    const int zl = cls.representative[l];
    for (int y = 0; y < n; ++y)
      T(cls.class_of[y], l) += t[cls.class_of[g.mul(zl, g.inv(y))]];
  }

  Eigen::EigenSolver<Eigen::MatrixXd> es(T);
  if (es.info() != Eigen::Success) return false;
  const Eigen::MatrixXcd vecs = es.eigenvectors();

  // Each eigenvector, rescaled so its identity-class entry is 1, carries the
  // class-algebra character omega_c = |C_c| chi(c) / chi(1).
  std::vector<std::vector<Complex>> rows(k, std::vector<Complex>(k));
  std::vector<int> degs(k);
  for (int r = 0; r < k; ++r) {
    const Complex v0 = vecs(0, r);
    if (std::abs(v0) < 1e-12 * vecs.col(r).norm()) return false;
    double norm2 = 0.0;  // sum_c |omega_c|^2 / |C_c| = |G| / d^2
    for (int c = 0; c < k; ++c) {
      const Complex u = vecs(c, r) / v0;
      rows[r][c] = u;
      norm2 += std::norm(u) / cls.size[c];
    }
    const double d = std::sqrt(static_cast<double>(n) / norm2);
    const double dr = std::round(d);
    if (dr < 1.0 || std::abs(d - dr) > kDegreeRoundTol) return false;
    degs[r] = static_cast<int>(dr);
    for (int c = 0; c < k; ++c) rows[r][c] *= dr / cls.size[c];
  }

  if (std::accumulate(degs.begin(), degs.end(), 0LL,
                      [](long long a, int d) { return a + static_cast<long long>(d) * d; }) != n)
    return false;

  // Row orthonormality; fails when two eigenvalues collided and the solver
  // returned mixed eigenvectors.
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) {
      Complex ip = 0;
      for (int c = 0; c < k; ++c)
        ip += static_cast<double>(cls.size[c]) * rows[i][c] * std::conj(rows[j][c]);
      ip /= static_cast<double>(n);
      if (std::abs(ip - (i == j ? 1.0 : 0.0)) > kOrthogonalityTol) return false;
    }

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](int r) {
    std::vector<long long> s{degs[r]};
    for (int c = 0; c < k; ++c) {
      s.push_back(std::llround(rows[r][c].real() * 1e8));
      s.push_back(std::llround(rows[r][c].imag() * 1e8));
    }
    return s;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });

  out.classes = cls;
  out.degrees.resize(k);
  out.values.resize(k);
  for (int r = 0; r < k; ++r) {
    out.degrees[r] = degs[order[r]];
    out.values[r] = std::move(rows[order[r]]);
  }
  return true;
}

}  // namespace

int CharacterTable::max_degree() const {
  return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

CharacterTable character_table(const FiniteGroup& g, std::uint64_t seed) {
  const ConjugacyClassData cls = conjugacy_classes(g);
  CharacterTable out;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt)
    if (try_build(g, cls, seed, attempt, out)) return out;
  throw ComputeError("character table for " + g.label() + " did not converge after " +
                     std::to_string(kMaxAttempts) + " attempts");
}

std::vector<int> degrees(const CharacterTable& t) { return t.degrees; }

double verify_schur_orthogonality(const CharacterTable& t, const FiniteGroup& g,
                                  double tol) {
  const int k = t.count();
  const int n = g.order();
  double worst = 0.0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Complex ip = 0;
      for (int c = 0; c < k; ++c)
        ip += static_cast<double>(t.classes.size[c]) * t.values[i][c] *
              std::conj(t.values[j][c]);
      ip /= static_cast<double>(n);
      worst = std::max(worst, std::abs(ip - (i == j ? 1.0 : 0.0)));
    }
  if (worst > tol)
    throw VerifyError("character table of " + g.label() +
                      " fails Schur orthogonality: defect " + std::to_string(worst));
  return worst;
}

}  // namespace adiag
