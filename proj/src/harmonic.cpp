#include "adiag/harmonic.hpp"

#include <cmath>
#include <map>

#include "adiag/detail/rng.hpp"
#include "adiag/error.hpp"
#include "adiag/parallel.hpp"

namespace adiag {

double trace_norm(const Eigen::MatrixXcd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues().sum();
}

double trace_norm(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues().sum();
}

PlancherelData plancherel_weights(const FiniteGroup& g, const CharacterTable& t) {
  PlancherelData out;
  out.degrees = t.degrees;
  out.weight.reserve(t.count());
  for (int d : t.degrees) out.weight.emplace_back(Rational(d, g.order()));
  Rational total = 0;
  for (int i = 0; i < t.count(); ++i) total += out.weight[i] * t.degrees[i];
  if (total != 1)
    throw VerifyError("Plancherel weights of " + g.label() + " sum against degrees to " +
                      to_string(total) + ", not 1");
  return out;
}

double verify_plancherel_identity(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps,
                                  const Eigen::VectorXcd& f, const Eigen::VectorXcd& h) {
  const int n = g.order();
  if (f.size() != n || h.size() != n)
    throw UsageError("Plancherel check: vectors must be indexed by the group");
  const Complex lhs = f.dot(h);  // conj(f)^T h ... see below for orientation
  // Eigen's dot conjugates the left argument; the identity is stated with the
  // conjugate on the second slot, so take conj at the end.
  Complex rhs = 0;
  for (const auto& rep : reps) {
    Eigen::MatrixXcd ff = Eigen::MatrixXcd::Zero(rep.degree, rep.degree);
    Eigen::MatrixXcd fh = Eigen::MatrixXcd::Zero(rep.degree, rep.degree);
    for (int x = 0; x < n; ++x) {
      ff += f[x] * rep(x);
      fh += h[x] * rep(x);
    }
    rhs += (ff * fh.adjoint()).trace() * (static_cast<double>(rep.degree) / n);
  }
  return std::abs(std::conj(lhs) - rhs);
}

double verify_plancherel_identity(const FiniteGroup& g,
                                  const std::vector<UnitaryIrrep>& reps, int pairs,
                                  std::uint64_t seed) {
  detail::Rng rng(detail::splitmix64(seed) ^ g.hash(), 0x9fa11);
  double worst = 0.0;
  for (int p = 0; p < pairs; ++p) {
    Eigen::VectorXcd f(g.order()), h(g.order());
    for (int x = 0; x < g.order(); ++x) {
      f[x] = Complex(rng.next_sym(), rng.next_sym());
      h[x] = Complex(rng.next_sym(), rng.next_sym());
    }
    worst = std::max(worst, verify_plancherel_identity(g, reps, f, h));
  }
  return worst;
}

Rational johnson_am(const FiniteGroup& g, const CharacterTable& t) {
  BigInt cubes = 0;
  for (int d : t.degrees) cubes += BigInt(d) * d * d;
  return Rational(cubes, BigInt(g.order()));
}

Stratification stratification(const FiniteGroup& g, const CharacterTable& t) {
  std::map<int, int> count;
  for (int d : t.degrees) ++count[d];
  Stratification out;
  out.nu_omega1 = 0;
  Rational check = 0;
  for (auto [n, c] : count) {
    Rational m(BigInt(c) * n, BigInt(g.order()));
    if (n == 1) out.nu_omega1 = m;
    check += m * n;
    out.mass.emplace_back(n, std::move(m));
  }
  if (check != 1)
    throw VerifyError("stratification of " + g.label() + " sums to " + to_string(check));
  return out;
}

Rational nu_omega1(const FiniteGroup& g, const CharacterTable& t) {
  return stratification(g, t).nu_omega1;
}

Rational ad_closed_form(const FiniteGroup& g, const CharacterTable& t) {
  Rational out = 0;
  for (const auto& [n, m] : stratification(g, t).mass) out += Rational(BigInt(n) * n) * m;
  return out;
}

FlipOperator flip_operator(int d) {
  if (d < 1) throw UsageError("flip dimension must be positive");
  FlipOperator x;
  x.d = d;
  x.mat = Eigen::MatrixXd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) x.mat(a * d + b, b * d + a) = 1.0;
  return x;
}

double flip_trace_identity(const Eigen::MatrixXcd& b, const Eigen::MatrixXcd& c) {
  const int d = static_cast<int>(b.rows());
  if (b.rows() != b.cols() || c.rows() != c.cols() || c.rows() != d)
    throw UsageError("flip identity needs square matrices of one dimension");
  const FlipOperator x = flip_operator(d);
  Eigen::MatrixXcd kron(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) kron.block(i * d, j * d, d, d) = b(i, j) * c;
  const Complex lhs = (x.mat * kron).trace();
  const Complex rhs = (b * c).trace();
  return std::abs(lhs - rhs);
}

AntiDiagonalCoefficient antidiag_coefficient(const FiniteGroup& g,
                                             const UnitaryIrrep& pi,
                                             const UnitaryIrrep& sigma) {
  const int n = g.order();
  const int dp = pi.degree, ds = sigma.degree;
  AntiDiagonalCoefficient out;
  out.row_pi = pi.char_row;
  out.row_sigma = sigma.char_row;
  out.matrix = Eigen::MatrixXcd::Zero(dp * ds, dp * ds);
  for (int x = 0; x < n; ++x) {
    const Eigen::MatrixXcd& p = pi(x);
    const Eigen::MatrixXcd& s = sigma(g.inv(x));
    for (int i = 0; i < dp; ++i)
      for (int j = 0; j < dp; ++j)
        out.matrix.block(i * ds, j * ds, ds, ds) += p(i, j) * s;
  }
  out.trace_norm = trace_norm(out.matrix);
  return out;
}

double antidiag_coefficient_check(const FiniteGroup& g, const UnitaryIrrep& pi,
                                  const UnitaryIrrep& sigma) {
  const AntiDiagonalCoefficient c = antidiag_coefficient(g, pi, sigma);
  if (&pi == &sigma || (pi.char_row == sigma.char_row && pi.char_row >= 0)) {
    const double scale = static_cast<double>(g.order()) / pi.degree;
    return (c.matrix - scale * flip_operator(pi.degree).mat).cwiseAbs().maxCoeff();
  }
  return c.matrix.norm();  // Frobenius distance from the predicted 0
}

double ad_direct(const FiniteGroup& g, const std::vector<UnitaryIrrep>& reps,
                 bool parallel) {
  const std::size_t k = reps.size();
  std::vector<double> term(k * k, 0.0);
  parallel_for(
      k * k,
      [&](std::size_t idx) {
        const auto& pi = reps[idx / k];
        const auto& sigma = reps[idx % k];
        const AntiDiagonalCoefficient c = antidiag_coefficient(g, pi, sigma);
        term[idx] = static_cast<double>(pi.degree) * sigma.degree * c.trace_norm;
      },
      parallel ? 0 : 1);
  double sum = 0.0;  // fixed reduction order: serial == parallel bit-for-bit
  for (double v : term) sum += v;
  return sum / (static_cast<double>(g.order()) * g.order());
}

}  // namespace adiag
