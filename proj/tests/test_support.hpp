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
 * @file test_support.hpp
 * @brief Shared helpers for the test suites: seeded randomness and a
 * scratch cache directory.
 *
 * Every randomized property test seeds its own std::mt19937 with a fixed
 * constant so failures reproduce bit-for-bit. The cache scope points
 * REPST_CACHE_DIR at a per-test scratch directory so suites exercising the
 * on-disk cache never touch the user's real cache (and never see each
 * other's files).
 */

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "repst/rational.hpp"

namespace repst::testing {

/// Points REPST_CACHE_DIR at a fresh scratch directory for one test's
/// lifetime; restores the previous value afterwards.
class CacheScope {
 public:
  explicit CacheScope(const std::string& tag) {
    const char* previous = std::getenv("REPST_CACHE_DIR");
    had_previous_ = previous != nullptr;
    if (had_previous_) previous_ = previous;
    dir_ = std::filesystem::temp_directory_path() /
           ("repst-test-" + tag + "-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
    ::setenv("REPST_CACHE_DIR", dir_.c_str(), 1);
  }

  ~CacheScope() {
    if (had_previous_) {
      ::setenv("REPST_CACHE_DIR", previous_.c_str(), 1);
    } else {
      ::unsetenv("REPST_CACHE_DIR");
    }
    std::error_code ec;
    std::filesystem::remove_all(dir_, ec);
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
  bool had_previous_ = false;
  std::string previous_;
};

/// A small random rational with numerator in [-9, 9] and denominator in
/// [1, 9].
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

/// A uniformly random element of a nonempty vector.
template <typename T>
const T& random_choice(std::mt19937& rng, const std::vector<T>& values) {
  std::uniform_int_distribution<std::size_t> pick(0, values.size() - 1);
  return values[pick(rng)];
}

}  // namespace repst::testing
