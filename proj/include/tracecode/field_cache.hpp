#pragma once

// On-disk field cache. Little-endian layout:
//   "TCL1", u64 p, ell, m, q, e x u64 modulus coefficients, e x u64 coefficients of g,
//   u64 count (q - 1 or 0), count x u64 log-table entries (log of encoding v, v = 1..q-1).

#include <filesystem>
#include <optional>

#include "tracecode/gf.hpp"

namespace tracecode {

std::filesystem::path field_cache_path(const std::filesystem::path& dir, const FieldParams& params);

/// nullopt when the file is missing, truncated, or written for other parameters.
std::optional<CachedField> load_field_cache(const std::filesystem::path& file, const FieldParams& params);

/// Throws Errc::io on failure. The file is written to a temporary name and renamed.
void save_field_cache(const std::filesystem::path& file, const FieldParams& params, const CachedField& data);

/// Builds the field, reading and (when absent or stale) writing the cache in `dir`.
FieldCtx build_field(const FieldParams& params, const std::optional<std::filesystem::path>& dir);

} // namespace tracecode
