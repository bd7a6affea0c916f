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

#include "repst/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

namespace repst {

namespace fs = std::filesystem;

fs::path cache_directory() {
  if (const char* dir = std::getenv("REPST_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return fs::path(dir);
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "repst";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "repst";
  }
  return fs::temp_directory_path() / "repst-cache";
}

std::optional<std::string> cache_read(const std::string& name) {
  std::error_code ec;
  const fs::path path = cache_directory() / name;
  if (!fs::exists(path, ec) || ec) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (!in.good() && !in.eof()) return std::nullopt;
  return buffer.str();
}

void cache_write(const std::string& name, const std::string& content) noexcept {
  try {
    std::error_code ec;
    const fs::path dir = cache_directory();
    fs::create_directories(dir, ec);
    if (ec) return;
    const fs::path target = dir / name;
    const fs::path tmp = dir / (name + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) return;
      out << content;
      if (!out.good()) {
        out.close();
        fs::remove(tmp, ec);
        return;
      }
    }
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
  } catch (...) {
    // Best-effort: a failed cache write must never disturb the caller.
  }
}

long cache_clear() {
  std::error_code ec;
  const fs::path dir = cache_directory();
  if (!fs::exists(dir, ec) || ec) return 0;
  long removed = 0;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (ec) break;
    std::error_code remove_ec;
    if (fs::is_regular_file(entry.path(), remove_ec) && !remove_ec) {
      if (fs::remove(entry.path(), remove_ec) && !remove_ec) ++removed;
    }
  }
  return removed;
}

}  // namespace repst
