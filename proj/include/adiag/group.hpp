#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adiag {

// Default ceiling on constructed group orders (the regular-representation
// linear algebra behind the invariants is cubic in this).
inline constexpr int kDefaultMaxOrder = 2048;

// A finite group given by its Cayley table. Elements are indices 0..n-1 and
// the identity is always index 0; every constructor and combinator in this
// library maintains that convention.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  // table is row-major: table[a*n + b] = a*b. Group axioms are checked on
  // construction (full associativity scan up to order 512, random triples
  // above that) unless trust_table is set, which combinators use when
  // associativity holds by construction.
  FiniteGroup(int order, std::vector<int> table, std::string label,
              std::vector<std::string> element_names = {},
              bool trust_table = false);

  int order() const { return n_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int pow(int a, long long e) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int commutator(int x, int y) const {  // [x,y] = x y x^-1 y^-1
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }
  const std::string& element_name(int i) const { return names_[i]; }

  const std::vector<int>& table() const { return table_; }
  bool is_abelian() const;
  int element_order(int a) const;

  // FNV-1a over (order, table); identifies the group up to relabeling-free
  // equality. Used as the cache key.
  std::uint64_t hash() const { return hash_; }

 private:
  int n_ = 0;
  std::vector<int> table_;
  std::vector<int> inv_;
  std::string label_;
  std::vector<std::string> names_;
  std::uint64_t hash_ = 0;
};

struct SubgroupDescriptor {
  std::vector<int> elements;  // sorted, elements[0] == 0
  std::string label;
  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;
};

struct ConjugacyClassData {
  // classes[0] == {0}; classes ordered by least member, members sorted.
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;        // element -> class index
  std::vector<int> representative;  // class -> least member
  std::vector<int> size;            // class -> member count
  int count() const { return static_cast<int>(classes.size()); }
};

// --- constructors -----------------------------------------------------------

FiniteGroup make_cyclic(int n);
// Dihedral group of order 2n (symmetries of the n-gon); n >= 1.
FiniteGroup make_dihedral(int n);
// Dicyclic group of order 4n; make_dicyclic(2) is the quaternion group Q8.
FiniteGroup make_dicyclic(int n);
FiniteGroup make_symmetric(int n);
FiniteGroup make_alternating(int n);
// Heisenberg group mod n: triples (a,b,c) over Z_n with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'); order n^3.
FiniteGroup make_heisenberg_mod(int n);

// --- combinators -------------------------------------------------------------

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

// N x| C_m where the generator of C_m acts by alpha, a permutation of the
// elements of N. Verifies alpha is an automorphism with alpha^m = id and
// throws VerifyError otherwise. Elements encode as (x, i) -> x*m + i.
FiniteGroup semidirect_product(const FiniteGroup& n, int m,
                               const std::vector<int>& alpha,
                               const std::string& label);

// --- structure ---------------------------------------------------------------

std::vector<int> center(const FiniteGroup& g);
std::vector<int> centralizer(const FiniteGroup& g, int a);
// Distinct values of [x,y] over all pairs, sorted. The identity is always
// present (index 0 first).
std::vector<int> commutator_set(const FiniteGroup& g);
SubgroupDescriptor subgroup_generated(const FiniteGroup& g,
                                      const std::vector<int>& gens,
                                      const std::string& label = "");
SubgroupDescriptor derived_subgroup(const FiniteGroup& g);
ConjugacyClassData conjugacy_classes(const FiniteGroup& g);

}  // namespace adiag
