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
 * @file permutation.hpp
 * @brief Permutations of {0, ..., n-1} and small explicit permutation groups.
 *
 * Permutations act on the left: (a * b)(i) = a(b(i)), so products read like
 * function composition. Points are 0-based internally; printing uses the
 * usual 1-based cycle notation.
 */

#include <iosfwd>
#include <string>
#include <vector>

#include "repst/int_partition.hpp"

namespace repst {

class Permutation {
 public:
  /// Identity on zero points.
  Permutation() = default;

  /// From the image vector: i -> images[i]. Must be a bijection on
  /// {0,...,n-1}; throws ErrorCode::InvalidArgument otherwise.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);

  /// From 0-based cycles, e.g. from_cycles(4, {{0,1},{2,3}}).
  /// Unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int apply(int i) const { return images_[static_cast<std::size_t>(i)]; }
  int operator()(int i) const { return apply(i); }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;

  /// Function composition: (a * b)(i) = a(b(i)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Cycles in canonical form: each starts at its minimum, cycles ordered by
  /// minimum. Fixed points are included only when keep_fixed is set.
  std::vector<std::vector<int>> cycles(bool keep_fixed = false) const;

  /// Cycle type as a partition of degree() (fixed points contribute 1s).
  IntPartition cycle_type() const;

  /// +1 or -1.
  int sign() const;

  /// The same permutation acting on n >= degree() points (new points fixed).
  Permutation extended(int n) const;

  /// 1-based cycle notation, e.g. "(1 2)(3 4)"; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// All n! permutations of degree n, sorted. Guarded by
/// limits().oracle_group_order_max.
std::vector<Permutation> all_permutations(int n);

/// Closure of the generators (all of one degree) under multiplication,
/// sorted. Guarded by limits().oracle_group_order_max; the identity is always
/// included.
std::vector<Permutation> generate_closure(int degree,
                                          const std::vector<Permutation>& generators);

/// Elements of S_n commuting with sigma, by filtering all_permutations.
/// Simple by design: this is the reference implementation that the
/// generator-based centralizer construction is validated against.
std::vector<Permutation> centralizer_filter(const Permutation& sigma);

}  // namespace repst
