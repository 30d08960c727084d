#include "adiag/catalog.hpp"

#include <algorithm>

#include "adiag/expr.hpp"

namespace adiag {

const std::vector<std::string>& builtin_catalog() {
  // Kept in canonical grammar form (print_expr of the parse is the identity).
  static const std::vector<std::string> entries = {
      // cyclic
      "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
      "C13", "C14", "C15", "C16", "C18", "C20", "C24", "C27", "C30", "C32",
      // abelian products
      "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC8", "C4xC4", "C2xC2xC4",
      "C2xC2xC2xC2", "C3xC9", "C2xC16", "C5xC5", "C4xC8", "C3xC3xC3", "C6xC6",
      // dihedral (order 2n)
      "D3", "D4", "D5", "D6", "D7", "D8", "D9", "D10", "D11", "D12", "D13",
      "D14", "D15", "D16", "D18", "D20", "D21", "D22", "D24", "D25", "D27",
      "D30", "D32",
      // dicyclic (order 4n), Q8 = Dic2
      "Q8", "Dic2", "Dic3", "Dic4", "Dic5", "Dic6", "Dic7", "Dic8", "Dic9",
      "Dic10", "Dic11", "Dic12", "Dic15",
      // symmetric / alternating
      "S3", "S4", "S5", "A4", "A5",
      // Heisenberg mod n (order n^3)
      "Heis2", "Heis3", "Heis4",
      // direct products with non-abelian factors
      "C2xS3", "C4xS3", "C3xS3", "C2xD4", "C2xQ8", "C3xD4", "C3xQ8", "C2xA4",
      "C2xC2xS3", "C2xD8", "C2xDic4", "C2xC2xD4", "C2xC2xQ8", "C4xD4", "C5xS3",
      "C3xD5", "C5xD4", "C5xQ8", "C6xS3", "C3xA4", "C7xS3", "C2xS4", "C4xA4",
      "C2xC2xA4", "C3xD8", "C6xD4", "C4xD6", "C6xQ8", "S3xS3", "D4xD4", "D4xQ8",
      "Q8xQ8",
      // semidirect products: inversion actions
      "sd(C4,C2,inv)", "sd(C5,C2,inv)", "sd(C8,C2,inv)", "sd(C9,C2,inv)",
      // power actions
      "sd(C6,C2,pow:1)", "sd(C8,C2,pow:3)", "sd(C8,C2,pow:5)", "sd(C5,C4,pow:2)",
      "sd(C7,C3,pow:2)", "sd(C9,C3,pow:4)", "sd(C3,C8,pow:2)", "sd(C13,C3,pow:3)",
      "sd(C5,C8,pow:2)", "sd(C7,C6,pow:3)", "sd(C9,C6,pow:2)", "sd(C16,C2,pow:7)",
      "sd(C3,C16,pow:2)", "sd(C3xC3,C4,pow:2)",
      // coordinate-shift actions
      "sd(C2xC2,C2,shift)", "sd(C3xC3,C2,shift)", "sd(C4xC4,C2,shift)",
      "sd(C5xC5,C2,shift)", "sd(C2xC2xC2,C3,shift)", "sd(C3xC3xC3,C3,shift)",
      "sd(C8xC8,C2,shift)",
  };
  return entries;
}

std::vector<std::string> catalog_upto(int max_order) {
  std::vector<std::pair<long long, std::string>> keyed;
  for (const auto& s : builtin_catalog()) {
    const long long n = nominal_order(parse_expr(s));
    if (n <= max_order) keyed.emplace_back(n, s);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (auto& [n, s] : keyed) out.push_back(std::move(s));
  return out;
}

}  // namespace adiag
