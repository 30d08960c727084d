#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "adiag/character_table.hpp"
#include "adiag/classify.hpp"
#include "adiag/families.hpp"
#include "adiag/group.hpp"
#include "adiag/rational.hpp"

namespace adiag {

// Everything `invariants` prints for one group.
struct InvariantReport {
  std::string group;
  int order = 0;
  std::vector<int> degrees;
  Rational am;
  double am_float = 0.0;
  bool has_ad_direct = false;
  double ad_direct = 0.0;
  int maxdeg = 0;
  int center_index = 0;
  int comm_size = 0;
  std::vector<std::pair<int, Rational>> nu_omega;  // degree -> mass, ascending
};

InvariantReport make_invariant_report(const FiniteGroup& g, const CharacterTable& t,
                                      bool check_direct, std::uint64_t seed);

std::string invariant_json(const InvariantReport& r);
// exact=true renders rationals as p/q, otherwise decimals are shown too.
std::string invariant_markdown(const InvariantReport& r, bool exact);

// One row of a catalog scan.
struct ScanRow {
  ClassificationRecord record;
  bool has_ad_direct = false;
  double ad_direct = 0.0;
  bool min_ad_attained = false;
};

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string scan_json(const std::vector<ScanRow>& rows);

std::string family_csv(const Family& f);
std::string family_tsv(const Family& f);

// Fixed-precision float rendering shared by all text emitters, so identical
// inputs produce identical bytes.
std::string format_double(double v);

}  // namespace adiag
