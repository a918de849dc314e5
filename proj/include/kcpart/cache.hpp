#ifndef KCPART_CACHE_HPP
#define KCPART_CACHE_HPP

#include <filesystem>
#include <iosfwd>

#include "kcpart/counts.hpp"

namespace kcpart {

// On-disk table format: a JSON object
//   {"schema": 1, "k": <int>,
//    "profile": {"forbidden_units": [...], "required_units": [...]},
//    "counts": ["1", "2", "5", ...]}
// with counts as decimal strings indexed by n from 0.

// Reads the cache at `path` if it exists and returns a table covering
// [0, limit], computing and (re)writing the file as needed.
//
//  - Missing or unreadable-as-described files (bad JSON, wrong schema,
//    non-numeric counts) are treated as absent: the table is rebuilt and
//    the file rewritten, with a note on `warn`.
//  - A well-formed file whose header does not match (k, profile), or whose
//    leading counts fail revalidation against recomputation, throws
//    CacheError: the file plausibly holds someone else's data and is not
//    silently clobbered.
//  - A shorter valid file is extended and rewritten.
TablePtr load_or_build_cache(CountStore& store, const std::filesystem::path& path,
                             int k, long limit, std::ostream& warn,
                             const ConstraintProfile& profile = {});

void write_cache_file(const CountTable& table, const std::filesystem::path& path);

// Conventional cache file name for a (k, profile) table.
std::string cache_file_name(int k, const ConstraintProfile& profile);

}  // namespace kcpart

#endif
