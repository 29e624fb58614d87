// On-disk cache for the Kazhdan-Lusztig memo table.  A cache file is a
// single JSON document keyed by a content hash of the Coxeter matrix and
// generator order; corrupted or mismatched files are ignored with a
// warning and never trusted.
#pragma once

#include <iosfwd>
#include <string>

#include "klc/hecke.hpp"

namespace klc {

constexpr int kCacheSchemaVersion = 1;

// Seeds ctx from the file when it exists, parses, and matches the system
// hash.  Problems are reported on `warn`; computation proceeds either way.
void cache_load(HeckeContext& ctx, const std::string& path,
                std::ostream& warn);

// Writes the current memo table; I/O failures are reported on `warn`.
void cache_store(HeckeContext& ctx, const std::string& path,
                 std::ostream& warn);

}  // namespace klc
