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
 * @file error.hpp
 * @brief Failure reporting shared by the whole library.
 *
 * Every throwing code path in the library raises repst::Error, which carries a
 * machine-readable category (ErrorCode) next to the human-readable message.
 * The CLI surfaces the category verbatim in its JSON error objects, so the
 * enumerator names below are part of the external interface and must stay
 * stable.
 */

#include <stdexcept>
#include <string>

namespace repst {

/// Machine-readable failure categories, mirrored verbatim in CLI error JSON.
enum class ErrorCode {
  InvalidArgument,  ///< malformed value (non-monotone partition, bad block set, ...)
  ShapeMismatch,    ///< boundaries disagree (composing k->l with l'->m where l != l')
  CapExceeded,      ///< a configured size cap would be blown (see limits.hpp)
  NotIntegral,      ///< an exact computation produced a non-integer where one is required
  ParseError,       ///< unreadable input text or JSON
  NotFound,         ///< lookup failed (irrep label, named morphism, cache entry)
  Unsupported,      ///< structurally valid input outside the implemented range
};

/// Stable lower-snake-case name for an ErrorCode (used in CLI error JSON).
const char* error_code_name(ErrorCode code) noexcept;

/// Exception type carrying an ErrorCode plus optional context (typically the
/// offending value, pretty-printed).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

/// Throws Error{code, message, context}. Convenience for one-line guards.
[[noreturn]] void fail(ErrorCode code, const std::string& message,
                       std::string context = {});

}  // namespace repst
