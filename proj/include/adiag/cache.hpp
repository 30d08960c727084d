#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adiag/character_table.hpp"
#include "adiag/group.hpp"

namespace adiag {

// Character tables are cached one JSON file per group hash:
//   {"groupHash": ..., "degrees": [...], "classSizes": [...],
//    "values": [[re,im], ...]}           (values row-major, k*k pairs)
// Writes go through a temp file and an atomic rename. A stale or corrupt file
// is treated as a miss, never an error.

std::optional<CharacterTable> load_cached_table(const FiniteGroup& g,
                                                const std::string& dir);

void store_cached_table(const FiniteGroup& g, const CharacterTable& t,
                        const std::string& dir);

// Load-or-compute-and-store; dir == "" disables caching entirely.
CharacterTable character_table_cached(const FiniteGroup& g, const std::string& dir,
                                      std::uint64_t seed = 0);

// $ADIAG_CACHE_DIR if set, else the platform cache directory
// ($XDG_CACHE_HOME or ~/.cache) plus /adiag; "" if no home can be found.
std::string default_cache_dir();

}  // namespace adiag
