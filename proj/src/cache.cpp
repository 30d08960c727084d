#include "adiag/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "adiag/error.hpp"

namespace adiag {

namespace fs = std::filesystem;

namespace {

std::string hash_hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

fs::path cache_path(const FiniteGroup& g, const std::string& dir) {
  return fs::path(dir) / (hash_hex(g.hash()) + ".json");
}

}  // namespace

std::optional<CharacterTable> load_cached_table(const FiniteGroup& g,
                                                const std::string& dir) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(cache_path(g, dir));
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("groupHash").get<std::uint64_t>() != g.hash()) return std::nullopt;
    CharacterTable t;
    t.classes = conjugacy_classes(g);
    const auto sizes = j.at("classSizes").get<std::vector<int>>();
    if (sizes != t.classes.size) return std::nullopt;  // stale layout
    t.degrees = j.at("degrees").get<std::vector<int>>();
    const int k = t.classes.count();
    if (static_cast<int>(t.degrees.size()) != k) return std::nullopt;
    const auto& vals = j.at("values");
    if (static_cast<int>(vals.size()) != k * k) return std::nullopt;
    t.values.assign(k, std::vector<Complex>(k));
    for (int i = 0; i < k; ++i)
      for (int c = 0; c < k; ++c) {
        const auto& pair = vals.at(i * k + c);
        t.values[i][c] = Complex(pair.at(0).get<double>(), pair.at(1).get<double>());
      }
    verify_schur_orthogonality(t, g);  // corrupt data -> treat as a miss
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_cached_table(const FiniteGroup& g, const CharacterTable& t,
                        const std::string& dir) {
  if (dir.empty()) return;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return;  // caching is best-effort
  nlohmann::ordered_json j;
  j["groupHash"] = g.hash();
  j["degrees"] = t.degrees;
  j["classSizes"] = t.classes.size;
  auto& vals = j["values"] = nlohmann::ordered_json::array();
  for (const auto& row : t.values)
    for (const Complex& v : row) vals.push_back({v.real(), v.imag()});

  const fs::path target = cache_path(g, dir);
  const fs::path tmp = target.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump(1) << '\n';
  }
  fs::rename(tmp, target, ec);
  if (ec) fs::remove(tmp, ec);
}

CharacterTable character_table_cached(const FiniteGroup& g, const std::string& dir,
                                      std::uint64_t seed) {
  if (auto hit = load_cached_table(g, dir)) return *std::move(hit);
  CharacterTable t = character_table(g, seed);
  store_cached_table(g, t, dir);
  return t;
}

std::string default_cache_dir() {
  if (const char* env = std::getenv("ADIAG_CACHE_DIR")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
    return (fs::path(xdg) / "adiag").string();
  if (const char* home = std::getenv("HOME"))
    return (fs::path(home) / ".cache" / "adiag").string();
  return {};
}

}  // namespace adiag
