#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adiag/character_table.hpp"
#include "adiag/group.hpp"
#include "adiag/irreps.hpp"
#include "adiag/rational.hpp"

namespace adiag {

// Structural facts about one group, with the predicates that appear in the
// minimizer classification. Predicates are recomputable from the numbers.
struct ClassificationRecord {
  std::string label;
  int order = 0;
  int center_order = 0;
  int center_index = 0;  // |G : Z(G)|
  int comm_size = 0;     // |{[x,y]}| as a set
  int derived_order = 0;
  int abelianization_order = 0;
  int maxdeg = 0;
  Rational am;         // = ad closed form
  Rational nu_omega1;  // |G^ab| / |G|
  bool abelian = false;

  bool is_min_ad() const { return am == Rational(3, 2); }
  bool center_index4() const { return center_index == 4; }
  bool has_comm2() const { return comm_size == 2; }
  bool has_maxdeg2() const { return maxdeg == 2; }
};

ClassificationRecord classification_record(const FiniteGroup& g,
                                           const CharacterTable& t);

// Equivalence of (i) center index 4 and (ii) two commutators + maxdeg 2;
// when (ii) holds, additionally demands that the irreps of degree <= 2
// separate the elements of G (the constructive form of the third condition).
bool theorem_G_check(const FiniteGroup& g, const CharacterTable& t,
                     std::uint64_t seed = 0);

// Result of scanning records for minimizers of the amenability constant among
// non-abelian groups.
struct MinimizerScanReport {
  bool vacuous = false;  // no non-abelian group in range
  Rational min_am;       // over non-abelian records
  std::vector<std::string> attainers;        // labels with am == min
  std::vector<std::string> below_bound;      // am < 3/2 (should never happen)
  std::vector<std::string> in_gap;           // 1 < am < 3/2 (should never happen)
  std::vector<std::string> equivalence_violations;  // (am=3/2) xor (centerIndex=4)
  bool clean() const {
    return below_bound.empty() && in_gap.empty() && equivalence_violations.empty();
  }
};

MinimizerScanReport minimizer_scan(const std::vector<ClassificationRecord>& records);

// Anticommutation structure of groups with exactly two commutators: the
// nontrivial commutator z is a central involution, acts as -I in every irrep
// of degree > 1, and every non-commuting pair anticommutes there.
struct AnticommuteReport {
  bool applicable = false;  // |comm(G)| == 2
  int z = -1;               // the nontrivial commutator
  bool z_central = false;
  bool z_involution = false;
  int pairs_checked = 0;
  double max_deviation = 0.0;
};

AnticommuteReport anticommute_check(const FiniteGroup& g, const CharacterTable& t,
                                    const std::vector<UnitaryIrrep>& reps);

// (|comm(G)| == 2)  <=>  (nu(Omega_1) == 1/2), for non-abelian G.
bool was_E_check(const FiniteGroup& g, const CharacterTable& t);

// (am == 3/2)  <=>  (nu(Omega_1) == 1/2 and no irrep degree >= 3), for
// non-abelian G, with am taken through the stratification route.
bool was_A_check(const FiniteGroup& g, const CharacterTable& t);

// True iff some single coset of the center generates G/Z(G); non-abelian
// groups must return false (G/Z non-cyclic), forcing center index >= 4.
bool center_quotient_cyclic(const FiniteGroup& g);

}  // namespace adiag
