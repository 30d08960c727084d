#include "adiag/group.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <unordered_map>

#include "adiag/detail/rng.hpp"
#include "adiag/error.hpp"

namespace adiag {

namespace {

constexpr int kMaxConstructibleOrder = 6000;  // Cayley tables are O(n^2) ints
constexpr int kFullAssocScanLimit = 512;

void check_order(long long n, const std::string& what) {
  if (n < 1) throw UsageError(what + ": order must be positive");
  if (n > kMaxConstructibleOrder)
    throw UsageError(what + ": order " + std::to_string(n) + " exceeds table limit " +
                     std::to_string(kMaxConstructibleOrder));
}

std::uint64_t table_hash(int n, const std::vector<int>& table) {
  std::uint64_t h = detail::fnv1a(&n, sizeof(n));
  return detail::fnv1a(table.data(), table.size() * sizeof(int), h);
}

}  // namespace

FiniteGroup::FiniteGroup(int order, std::vector<int> table, std::string label,
                         std::vector<std::string> element_names, bool trust_table)
    : n_(order), table_(std::move(table)), label_(std::move(label)),
      names_(std::move(element_names)) {
  check_order(n_, label_);
  if (table_.size() != static_cast<std::size_t>(n_) * n_)
    throw UsageError(label_ + ": table size mismatch");
  for (int v : table_)
    if (v < 0 || v >= n_) throw VerifyError(label_ + ": table entry out of range");

  for (int b = 0; b < n_; ++b)
    if (mul(0, b) != b || mul(b, 0) != b)
      throw VerifyError(label_ + ": element 0 is not the identity");

  // Latin square property gives cancellation; with identity and
  // associativity this makes the table a group.
  std::vector<char> seen(n_);
  for (int a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) seen[mul(a, b)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n_)
      throw VerifyError(label_ + ": row " + std::to_string(a) + " is not a permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) seen[mul(b, a)] = 1;
    if (std::count(seen.begin(), seen.end(), 1) != n_)
      throw VerifyError(label_ + ": column " + std::to_string(a) + " is not a permutation");
  }

  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul(a, b) == 0) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0 || mul(inv_[a], a) != 0)
      throw VerifyError(label_ + ": inverses are not two-sided");

  if (!trust_table) {
    if (n_ <= kFullAssocScanLimit) {
      for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
          const int ab = mul(a, b);
          for (int c = 0; c < n_; ++c)
            if (mul(ab, c) != mul(a, mul(b, c)))
              throw VerifyError(label_ + ": associativity fails");
        }
    } else {
      // Randomized spot check, deterministic in the table itself.
      detail::Rng rng(table_hash(n_, table_), 0);
      const std::size_t trials = 10 * static_cast<std::size_t>(n_) * n_;
      for (std::size_t t = 0; t < trials; ++t) {
        const int a = static_cast<int>(rng.next_below(n_));
        const int b = static_cast<int>(rng.next_below(n_));
        const int c = static_cast<int>(rng.next_below(n_));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw VerifyError(label_ + ": associativity fails");
      }
    }
  }

  if (names_.empty()) {
    names_.resize(n_);
    for (int i = 0; i < n_; ++i) names_[i] = "g" + std::to_string(i);
  } else if (names_.size() != static_cast<std::size_t>(n_)) {
    throw UsageError(label_ + ": element name count mismatch");
  }

  hash_ = table_hash(n_, table_);
}

int FiniteGroup::pow(int a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  int acc = 0;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool SubgroupDescriptor::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

// --- constructors -----------------------------------------------------------

FiniteGroup make_cyclic(int n) {
  check_order(n, "C");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  }
  return FiniteGroup(n, std::move(t), "C" + std::to_string(n), std::move(names), true);
}

FiniteGroup make_dihedral(int n) {
  check_order(2LL * n, "D");
  const int N = 2 * n;
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  // indices 0..n-1 : r^a ; indices n..2n-1 : s r^a, with s r s = r^-1
  auto idx = [n](int flip, int a) { return flip * n + ((a % n) + n) % n; };
  for (int fa = 0; fa < 2; ++fa)
    for (int a = 0; a < n; ++a)
      for (int fb = 0; fb < 2; ++fb)
        for (int b = 0; b < n; ++b) {
          const int lhs = idx(fa, a), rhs = idx(fb, b);
          int prod;
          if (fb == 0)
            prod = idx(fa, a + b);           // (s^fa r^a)(r^b)
          else
            prod = idx(1 - fa, b - a);       // (s^fa r^a)(s r^b) = s^(1-fa) r^(b-a)
          t[static_cast<std::size_t>(lhs) * N + rhs] = prod;
        }
  std::vector<std::string> names(N);
  for (int a = 0; a < n; ++a) {
    names[a] = "r" + std::to_string(a);
    names[n + a] = "sr" + std::to_string(a);
  }
  return FiniteGroup(N, std::move(t), "D" + std::to_string(n), std::move(names));
}

FiniteGroup make_dicyclic(int n) {
  check_order(4LL * n, "Dic");
  const int N = 4 * n;
  const int m = 2 * n;  // order of a
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  // indices 0..2n-1 : a^j ; indices 2n..4n-1 : x a^j, with x^2 = a^n, x a x^-1 = a^-1
  auto idx = [m](int flip, int j) { return flip * m + ((j % m) + m) % m; };
  for (int fa = 0; fa < 2; ++fa)
    for (int j = 0; j < m; ++j)
      for (int fb = 0; fb < 2; ++fb)
        for (int k = 0; k < m; ++k) {
          const int lhs = idx(fa, j), rhs = idx(fb, k);
          int prod;
          if (fa == 0 && fb == 0) prod = idx(0, j + k);
          else if (fa == 0) prod = idx(1, k - j);        // a^j x a^k = x a^(k-j)
          else if (fb == 0) prod = idx(1, j + k);        // x a^j a^k
          else prod = idx(0, n + k - j);                 // x a^j x a^k = a^(n+k-j)
          t[static_cast<std::size_t>(lhs) * N + rhs] = prod;
        }
  std::vector<std::string> names(N);
  for (int j = 0; j < m; ++j) {
    names[j] = "a" + std::to_string(j);
    names[m + j] = "xa" + std::to_string(j);
  }
  return FiniteGroup(N, std::move(t), "Dic" + std::to_string(n), std::move(names));
}

namespace {

// Permutations of {0..k-1} in lexicographic order, with a packed-key lookup
// (5 bits per point, enough up to k = 12).
struct PermUniverse {
  int k;
  std::vector<std::vector<int>> perms;
  std::unordered_map<std::uint64_t, int> index;

  static std::uint64_t key(const std::vector<int>& p) {
    std::uint64_t h = 0;
    for (int v : p) h = (h << 5) | static_cast<std::uint64_t>(v);
    return h;
  }

  explicit PermUniverse(int k_, bool even_only) : k(k_) {
    if (k > 12) throw UsageError("permutation group degree too large");
    std::vector<int> p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      if (even_only && !is_even(p)) continue;
      index.emplace(key(p), static_cast<int>(perms.size()));
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  static bool is_even(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    return inversions % 2 == 0;
  }

  FiniteGroup build(const std::string& label) const {
    const int N = static_cast<int>(perms.size());
    check_order(N, label);
    std::vector<int> t(static_cast<std::size_t>(N) * N);
    std::vector<int> comp(k);
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        for (int i = 0; i < k; ++i) comp[i] = perms[a][perms[b][i]];
        t[static_cast<std::size_t>(a) * N + b] = index.at(key(comp));
      }
    std::vector<std::string> names(N);
    for (int a = 0; a < N; ++a) {
      std::string s = "(";
      for (int i = 0; i < k; ++i) s += std::to_string(perms[a][i]);
      names[a] = s + ")";
    }
    return FiniteGroup(N, std::move(t), label, std::move(names));
  }
};

}  // namespace

FiniteGroup make_symmetric(int n) {
  if (n < 1) throw UsageError("S: degree must be positive");
  return PermUniverse(n, false).build("S" + std::to_string(n));
}

FiniteGroup make_alternating(int n) {
  if (n < 1) throw UsageError("A: degree must be positive");
  return PermUniverse(n, true).build("A" + std::to_string(n));
}

FiniteGroup make_heisenberg_mod(int n) {
  check_order(static_cast<long long>(n) * n * n, "Heis");
  const int N = n * n * n;
  auto enc = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  std::vector<std::string> names(N);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int lhs = enc(a, b, c);
        names[lhs] = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                     std::to_string(c) + ")";
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2)
            for (int c2 = 0; c2 < n; ++c2)
              t[static_cast<std::size_t>(lhs) * N + enc(a2, b2, c2)] =
                  enc((a + a2) % n, (b + b2) % n, (c + c2 + a * b2) % n);
      }
  return FiniteGroup(N, std::move(t), "Heis" + std::to_string(n), std::move(names));
}

// --- combinators -------------------------------------------------------------

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const long long N = static_cast<long long>(g.order()) * h.order();
  check_order(N, g.label() + "x" + h.label());
  const int n = static_cast<int>(N), hn = h.order();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  std::vector<std::string> names(n);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < hn; ++b) {
      const int lhs = a * hn + b;
      names[lhs] = "(" + g.element_name(a) + "," + h.element_name(b) + ")";
      for (int c = 0; c < g.order(); ++c)
        for (int d = 0; d < hn; ++d)
          t[static_cast<std::size_t>(lhs) * n + (c * hn + d)] =
              g.mul(a, c) * hn + h.mul(b, d);
    }
  return FiniteGroup(n, std::move(t), g.label() + "x" + h.label(), std::move(names),
                     true);
}

FiniteGroup semidirect_product(const FiniteGroup& base, int m,
                               const std::vector<int>& alpha,
                               const std::string& label) {
  const int bn = base.order();
  if (m < 1) throw UsageError(label + ": complement order must be positive");
  if (alpha.size() != static_cast<std::size_t>(bn))
    throw UsageError(label + ": action size mismatch");

  std::vector<char> hit(bn, 0);
  for (int v : alpha) {
    if (v < 0 || v >= bn) throw VerifyError(label + ": action is not a permutation");
    hit[v] = 1;
  }
  if (std::count(hit.begin(), hit.end(), 1) != bn)
    throw VerifyError(label + ": action is not a permutation");
  if (alpha[0] != 0) throw VerifyError(label + ": action does not fix the identity");
  for (int a = 0; a < bn; ++a)
    for (int b = 0; b < bn; ++b)
      if (alpha[base.mul(a, b)] != base.mul(alpha[a], alpha[b]))
        throw VerifyError(label + ": action is not an automorphism");

  // powers of alpha; alpha^m must be the identity for C_m to act
  std::vector<std::vector<int>> pw(m);
  pw[0].resize(bn);
  std::iota(pw[0].begin(), pw[0].end(), 0);
  for (int i = 1; i < m; ++i) {
    pw[i].resize(bn);
    for (int x = 0; x < bn; ++x) pw[i][x] = alpha[pw[i - 1][x]];
  }
  for (int x = 0; x < bn; ++x)
    if (alpha[pw[m - 1][x]] != x)
      throw VerifyError(label + ": action order does not divide " + std::to_string(m));

  const long long NL = static_cast<long long>(bn) * m;
  check_order(NL, label);
  const int N = static_cast<int>(NL);
  std::vector<int> t(static_cast<std::size_t>(N) * N);
  std::vector<std::string> names(N);
  for (int x = 0; x < bn; ++x)
    for (int i = 0; i < m; ++i) {
      const int lhs = x * m + i;
      names[lhs] = "(" + base.element_name(x) + ";" + std::to_string(i) + ")";
      for (int y = 0; y < bn; ++y)
        for (int j = 0; j < m; ++j)
          t[static_cast<std::size_t>(lhs) * N + (y * m + j)] =
              base.mul(x, pw[i][y]) * m + (i + j) % m;
    }
  return FiniteGroup(N, std::move(t), label, std::move(names), true);
}

// --- structure ---------------------------------------------------------------

std::vector<int> center(const FiniteGroup& g) {
  std::vector<int> z;
  for (int a = 0; a < g.order(); ++a) {
    bool central = true;
    for (int b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> centralizer(const FiniteGroup& g, int a) {
  std::vector<int> c;
  for (int b = 0; b < g.order(); ++b)
    if (g.mul(a, b) == g.mul(b, a)) c.push_back(b);
  return c;
}

std::vector<int> commutator_set(const FiniteGroup& g) {
  std::vector<char> hit(g.order(), 0);
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) hit[g.commutator(x, y)] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

SubgroupDescriptor subgroup_generated(const FiniteGroup& g, const std::vector<int>& gens,
                                      const std::string& label) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  for (int v : gens) {
    if (v < 0 || v >= g.order()) throw UsageError("generator index out of range");
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  }
  // close under multiplication; inverses come for free in a finite group
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      const int p = g.mul(members[i], members[j]);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
      }
    }
  std::sort(members.begin(), members.end());
  return SubgroupDescriptor{std::move(members),
                            label.empty() ? "<gen>" : label};
}

SubgroupDescriptor derived_subgroup(const FiniteGroup& g) {
  auto sg = subgroup_generated(g, commutator_set(g), "derived");
  return sg;
}

ConjugacyClassData conjugacy_classes(const FiniteGroup& g) {
  const int n = g.order();
  ConjugacyClassData out;
  out.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (out.class_of[x] >= 0) continue;
    const int ci = out.count();
    std::vector<int> members;
    for (int h = 0; h < n; ++h) {
      const int y = g.conj(h, x);
      if (out.class_of[y] < 0) {
        out.class_of[y] = ci;
        members.push_back(y);
      }
    }
    std::sort(members.begin(), members.end());
    out.representative.push_back(members.front());
    out.size.push_back(static_cast<int>(members.size()));
    out.classes.push_back(std::move(members));
  }
  return out;
}

}  // namespace adiag
