/*
   Copyright 2026 the repst authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

/**
 * @file cache.hpp
 * @brief On-disk cache for expensive tables (character tables and friends).
 *
 * The cache directory is, in order of preference: $REPST_CACHE_DIR,
 * $XDG_CACHE_HOME/repst, $HOME/.cache/repst. Writes go through a temporary
 * file followed by an atomic rename, so readers never observe a partial
 * file. A missing or unreadable cache is never an error — callers fall back
 * to recomputing.
 */

#include <filesystem>
#include <optional>
#include <string>

namespace repst {

/// The directory used for cached tables (not created by this call).
std::filesystem::path cache_directory();

/// Reads a cache entry; std::nullopt when absent or unreadable.
std::optional<std::string> cache_read(const std::string& name);

/// Writes a cache entry atomically (temporary file + rename). Failures are
/// swallowed: caching is best-effort.
void cache_write(const std::string& name, const std::string& content) noexcept;

/// Removes all cache entries; returns the number of files removed.
long cache_clear();

}  // namespace repst
