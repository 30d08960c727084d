#include "adiag/irreps.hpp"

#include <cmath>

#include "adiag/detail/rng.hpp"
#include "adiag/error.hpp"

namespace adiag {

namespace {

constexpr double kIrrepTol = 1e-6;
constexpr int kMaxAttempts = 8;

// Eigenvalues of a Hermitian commutant element on an isotypic component come
// in groups of size exactly d (the commutant there is I_d (x) M_d). Groups the
// sorted eigenvalues by gaps; fails if the pattern is not d clusters of d.
bool cluster_eigenvalues(const Eigen::VectorXd& lam, int d, double scale,
                         std::vector<std::vector<int>>& clusters) {
  clusters.clear();
  const double gap_tol = 1e-6 * std::max(scale, 1.0);
  std::vector<int> cur{0};
  for (int i = 1; i < lam.size(); ++i) {
    if (lam[i] - lam[i - 1] > gap_tol) {
      clusters.push_back(cur);
      cur.clear();
    }
    cur.push_back(i);
  }
  clusters.push_back(cur);
  if (static_cast<int>(clusters.size()) != d) return false;
  for (const auto& c : clusters)
    if (static_cast<int>(c.size()) != d) return false;
  return true;
}

}  // namespace

IsotypicDecomposition isotypic_decomposition(const FiniteGroup& g,
                                             const CharacterTable& t) {
  const int n = g.order();
  IsotypicDecomposition out;
  out.degrees = t.degrees;
  out.basis.reserve(t.count());
  for (int i = 0; i < t.count(); ++i) {
    const int d = t.degrees[i];
    // P[y][x] = (d/|G|) conj(chi_i(y x^-1)) is the orthogonal projection onto
    // the isotypic component inside the left regular representation.
    Eigen::MatrixXcd P(n, n);
    for (int y = 0; y < n; ++y)
      for (int x = 0; x < n; ++x)
        P(y, x) = std::conj(t.at(i, g.mul(y, g.inv(x)))) * (static_cast<double>(d) / n);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(P);
    if (es.info() != Eigen::Success)
      throw ComputeError("isotypic projection of " + g.label() + " failed to diagonalise");
    const int want = d * d;
    int rank = 0;
    for (int j = 0; j < n; ++j)
      if (es.eigenvalues()[j] > 0.5) ++rank;
    if (rank != want)
      throw ComputeError("isotypic component of " + g.label() + " has rank " +
                         std::to_string(rank) + ", expected " + std::to_string(want));
    // eigenvalues ascend, so the range basis is the last d^2 columns
    out.basis.push_back(es.eigenvectors().rightCols(want));
  }
  return out;
}

double irrep_defect(const FiniteGroup& g, const CharacterTable& t,
                    const UnitaryIrrep& rep) {
  const int n = g.order();
  const int d = rep.degree;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
  double worst = 0.0;
  for (int a = 0; a < n; ++a) {
    worst = std::max(worst, (rep(a) * rep(a).adjoint() - id).cwiseAbs().maxCoeff());
    worst = std::max(worst, std::abs(rep(a).trace() - t.at(rep.char_row, a)));
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      worst = std::max(worst,
                       (rep(a) * rep(b) - rep(g.mul(a, b))).cwiseAbs().maxCoeff());
  return worst;
}

namespace {

bool try_extract(const FiniteGroup& g, const CharacterTable& t,
                 const Eigen::MatrixXcd& basis, int row, std::uint64_t seed, int attempt,
                 UnitaryIrrep& out) {
  const int n = g.order();
  const int d = t.degrees[row];

  // Random Hermitian element of the commutant of the left action:
  // K[y][x] = w(x^-1 y) with w(h^-1) = conj(w(h)).
  detail::Rng rng(detail::splitmix64(seed) ^ g.hash() ^ (0x9000 + row),
                  static_cast<std::uint64_t>(attempt));
  std::vector<Complex> w(n);
  std::vector<char> done(n, 0);
  for (int h = 0; h < n; ++h) {
    if (done[h]) continue;
    const int hi = g.inv(h);
    if (hi == h) {
      w[h] = Complex(rng.next_sym(), 0.0);
      done[h] = 1;
    } else {
      w[h] = Complex(rng.next_sym(), rng.next_sym());
      w[hi] = std::conj(w[h]);
      done[h] = done[hi] = 1;
    }
  }

  Eigen::MatrixXcd K(n, n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) K(y, x) = w[g.mul(g.inv(x), y)];

  const Eigen::MatrixXcd KV = basis.adjoint() * K * basis;  // d^2 x d^2, Hermitian
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(KV);
  if (es.info() != Eigen::Success) return false;

  std::vector<std::vector<int>> clusters;
  const double scale = std::max(std::abs(es.eigenvalues()[0]),
                                std::abs(es.eigenvalues()[d * d - 1]));
  if (!cluster_eigenvalues(es.eigenvalues(), d, scale, clusters)) return false;

  // Any single cluster spans one irreducible copy; take the lowest.
  Eigen::MatrixXcd E(d * d, d);
  for (int c = 0; c < d; ++c) E.col(c) = es.eigenvectors().col(clusters[0][c]);
  const Eigen::MatrixXcd W = basis * E;  // |G| x d isometry

  out.degree = d;
  out.char_row = row;
  out.mats.assign(n, Eigen::MatrixXcd());
  for (int a = 0; a < n; ++a) {
    // pi(a) = W^* rho(a) W with rho(a) the left translation permutation
    Eigen::MatrixXcd shifted(n, d);
    for (int y = 0; y < n; ++y) shifted.row(g.mul(a, y)) = W.row(y);
    out.mats[a] = W.adjoint() * shifted;
  }
  return irrep_defect(g, t, out) <= kIrrepTol;
}

}  // namespace

std::vector<UnitaryIrrep> explicit_irreps(const FiniteGroup& g, const CharacterTable& t,
                                          std::uint64_t seed) {
  const IsotypicDecomposition iso = isotypic_decomposition(g, t);
  std::vector<UnitaryIrrep> reps(t.count());
  for (int i = 0; i < t.count(); ++i) {
    bool ok = false;
    for (int attempt = 0; attempt < kMaxAttempts && !ok; ++attempt)
      ok = try_extract(g, t, iso.basis[i], i, seed, attempt, reps[i]);
    if (!ok)
      throw ComputeError("irrep extraction for " + g.label() + " row " +
                         std::to_string(i) + " failed after " +
                         std::to_string(kMaxAttempts) + " attempts");
  }
  return reps;
}

double verify_schur_orthogonality(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps, double tol) {
  const int n = g.order();
  double worst = 0.0;
  for (std::size_t p = 0; p < reps.size(); ++p)
    for (std::size_t q = p; q < reps.size(); ++q) {
      const auto& pi = reps[p];
      const auto& sg = reps[q];
      for (int i = 0; i < pi.degree; ++i)
        for (int j = 0; j < pi.degree; ++j)
          for (int k = 0; k < sg.degree; ++k)
            for (int l = 0; l < sg.degree; ++l) {
              Complex s = 0;
              for (int x = 0; x < n; ++x) s += pi(x)(i, j) * std::conj(sg(x)(k, l));
              s /= static_cast<double>(n);
              const double expected =
                  (p == q && i == k && j == l) ? 1.0 / pi.degree : 0.0;
              worst = std::max(worst, std::abs(s - expected));
            }
    }
  if (worst > tol)
    throw VerifyError("irreps of " + g.label() +
                      " fail Schur orthogonality: defect " + std::to_string(worst));
  return worst;
}

UnitaryIrrep tensor_irrep(const UnitaryIrrep& pi, const UnitaryIrrep& sigma) {
  UnitaryIrrep out;
  out.degree = pi.degree * sigma.degree;
  out.char_row = -1;
  const int nh = sigma.group_order();
  out.mats.reserve(static_cast<std::size_t>(pi.group_order()) * nh);
  for (int a = 0; a < pi.group_order(); ++a)
    for (int b = 0; b < nh; ++b) {
      Eigen::MatrixXcd m(out.degree, out.degree);
      for (int i = 0; i < pi.degree; ++i)
        for (int j = 0; j < pi.degree; ++j)
          m.block(i * sigma.degree, j * sigma.degree, sigma.degree, sigma.degree) =
              pi(a)(i, j) * sigma(b);
      out.mats.push_back(std::move(m));
    }
  return out;
}

}  // namespace adiag
