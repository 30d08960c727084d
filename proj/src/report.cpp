#include "adiag/report.hpp"

#include <cstdio>

#include <json.hpp>

#include "adiag/harmonic.hpp"
#include "adiag/irreps.hpp"

namespace adiag {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

InvariantReport make_invariant_report(const FiniteGroup& g, const CharacterTable& t,
                                      bool check_direct, std::uint64_t seed) {
  InvariantReport r;
  r.group = g.label();
  r.order = g.order();
  r.degrees = t.degrees;
  r.am = johnson_am(g, t);
  r.am_float = to_double(r.am);
  r.maxdeg = t.max_degree();
  r.center_index = g.order() / static_cast<int>(center(g).size());
  r.comm_size = static_cast<int>(commutator_set(g).size());
  r.nu_omega = stratification(g, t).mass;
  if (check_direct) {
    r.ad_direct = ad_direct(g, explicit_irreps(g, t, seed));
    r.has_ad_direct = true;
  }
  return r;
}

std::string invariant_json(const InvariantReport& r) {
  ordered_json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["degrees"] = r.degrees;
  j["am"] = to_string(r.am);
  j["amFloat"] = r.am_float;
  if (r.has_ad_direct)
    j["adDirect"] = r.ad_direct;
  else
    j["adDirect"] = nullptr;
  j["maxdeg"] = r.maxdeg;
  j["centerIndex"] = r.center_index;
  j["commSize"] = r.comm_size;
  ordered_json nu = ordered_json::object();
  for (const auto& [deg, mass] : r.nu_omega) nu[std::to_string(deg)] = to_string(mass);
  j["nuOmega"] = nu;
  return j.dump(2) + "\n";
}

std::string invariant_markdown(const InvariantReport& r, bool exact) {
  std::string out;
  out += "# " + r.group + " (order " + std::to_string(r.order) + ")\n\n";
  out += "| invariant | value |\n|---|---|\n";
  std::string degs;
  for (std::size_t i = 0; i < r.degrees.size(); ++i)
    degs += (i ? ", " : "") + std::to_string(r.degrees[i]);
  out += "| degrees | " + degs + " |\n";
  out += "| am | " + to_string(r.am) +
         (exact ? std::string() : " = " + format_double(r.am_float)) + " |\n";
  if (r.has_ad_direct) out += "| ad (direct) | " + format_double(r.ad_direct) + " |\n";
  out += "| maxdeg | " + std::to_string(r.maxdeg) + " |\n";
  out += "| center index | " + std::to_string(r.center_index) + " |\n";
  out += "| commutator count | " + std::to_string(r.comm_size) + " |\n";
  for (const auto& [deg, mass] : r.nu_omega)
    out += "| nu(Omega_" + std::to_string(deg) + ") | " + to_string(mass) +
           (exact ? std::string() : " = " + format_double(to_double(mass))) + " |\n";
  return out;
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "label,order,centerIndex,commSize,maxdeg,am,adDirect,nuOmega1,minAdAttained\n";
  for (const auto& row : rows) {
    const auto& r = row.record;
    out += r.label + "," + std::to_string(r.order) + "," +
           std::to_string(r.center_index) + "," + std::to_string(r.comm_size) + "," +
           std::to_string(r.maxdeg) + "," + to_string(r.am) + "," +
           (row.has_ad_direct ? format_double(row.ad_direct) : std::string()) + "," +
           to_string(r.nu_omega1) + "," + (row.min_ad_attained ? "true" : "false") +
           "\n";
  }
  return out;
}

std::string scan_json(const std::vector<ScanRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    const auto& r = row.record;
    ordered_json j;
    j["label"] = r.label;
    j["order"] = r.order;
    j["centerIndex"] = r.center_index;
    j["commSize"] = r.comm_size;
    j["maxdeg"] = r.maxdeg;
    j["am"] = to_string(r.am);
    if (row.has_ad_direct)
      j["adDirect"] = row.ad_direct;
    else
      j["adDirect"] = nullptr;
    j["nuOmega1"] = to_string(r.nu_omega1);
    j["minAdAttained"] = row.min_ad_attained;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string family_csv(const Family& f) {
  std::string out = "n,order,am,amFloat,gap,nuOmega1,maxdeg\n";
  for (const auto& pt : f.points)
    out += std::to_string(pt.n) + "," + std::to_string(pt.order) + "," +
           to_string(pt.am) + "," + format_double(to_double(pt.am)) + "," +
           to_string(pt.gap) + "," + to_string(pt.nu_omega1) + "," +
           std::to_string(pt.maxdeg) + "\n";
  return out;
}

std::string family_tsv(const Family& f) {
  std::string out = "# n\tam\tgap\tnuOmega1\n";
  for (const auto& pt : f.points)
    out += std::to_string(pt.n) + "\t" + format_double(to_double(pt.am)) + "\t" +
           format_double(to_double(pt.gap)) + "\t" +
           format_double(to_double(pt.nu_omega1)) + "\n";
  return out;
}

}  // namespace adiag
