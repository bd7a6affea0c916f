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
 * @file int_partition.hpp
 * @brief Integer partitions and the partition combinatorics the library
 *        leans on: cycle types, horizontal strips, padding, hook lengths and
 *        Littlewood-Richardson coefficients.
 *
 * Ordering conventions (stable, relied on by output determinism):
 *  - partitions_of(n) enumerates in reverse-lexicographic order, (n) first
 *    and (1,...,1) last;
 *  - IntPartition's operator< orders by total size first, then
 *    lexicographically on the part vectors, giving a total order usable as a
 *    map key across different sizes.
 */

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repst/rational.hpp"

namespace repst {

/// A partition of a non-negative integer: weakly decreasing positive parts.
class IntPartition {
 public:
  /// The empty partition (of 0).
  IntPartition() = default;

  /// Validates weakly decreasing positive parts;
  /// throws ErrorCode::InvalidArgument otherwise.
  explicit IntPartition(std::vector<int> parts);

  /// Sorts the parts descending first (still requires positivity).
  static IntPartition from_unsorted(std::vector<int> parts);

  /// Sum of parts.
  int size() const;
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// i-th part, 0-based; parts beyond the length read as 0.
  int part(int i) const;
  const std::vector<int>& parts() const { return parts_; }

  /// Conjugate (transposed) partition.
  IntPartition transpose() const;

  /// Multiset containment mu subset-of *this (cellwise).
  bool contains(const IntPartition& mu) const;

  /// part value -> multiplicity.
  std::map<int, int> multiplicities() const;

  /// "(3,1,1)" or "()" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const IntPartition& lhs, const IntPartition& rhs) {
    return lhs.parts_ == rhs.parts_;
  }
  friend bool operator!=(const IntPartition& lhs, const IntPartition& rhs) {
    return !(lhs == rhs);
  }
  /// Total order: by size, then lexicographic on parts.
  friend bool operator<(const IntPartition& lhs, const IntPartition& rhs);

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const IntPartition& p);

/// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
/// Requires n >= 0; partitions_of(0) = { () }.
std::vector<IntPartition> partitions_of(int n);

/// Centralizer order z_mu = prod_c c^(m_c) m_c! of the cycle type mu in S_n.
/// The conjugacy class of cycle type mu has n!/z_mu elements.
Integer cycle_type_centralizer_order(const IntPartition& mu);

/// lambda[n] := (n - |lambda|, lambda_1, lambda_2, ...). Throws
/// ErrorCode::InvalidArgument when n - |lambda| < lambda_1 (not a partition).
IntPartition pad_partition(const IntPartition& lambda, int n);

/// True when lambda contains mu and lambda/mu is a horizontal strip
/// (at most one cell per column, i.e. the two interlace:
/// lambda_1 >= mu_1 >= lambda_2 >= mu_2 >= ...).
bool is_horizontal_strip(const IntPartition& lambda, const IntPartition& mu);

/// All mu obtainable from lambda by removing a horizontal strip (the empty
/// strip included, so lambda itself is the first entry). Enumeration order:
/// row values chosen from the top row downward, each descending, which makes
/// the output reverse-lexicographic with lambda first.
std::vector<IntPartition> horizontal_strip_removals(const IntPartition& lambda);

/// Littlewood-Richardson coefficient c^nu_{lambda,mu}: the number of
/// semistandard skew tableaux of shape nu/lambda and content mu whose reverse
/// reading word is a lattice word. Zero unless |lambda| + |mu| = |nu| and
/// lambda is contained in nu.
long lr_coefficient(const IntPartition& lambda, const IntPartition& mu,
                    const IntPartition& nu);

/// dim S^lambda = |lambda|! / (product of hook lengths).
Integer hook_length_dimension(const IntPartition& lambda);

/// Multiset union of two partitions (parts merged, re-sorted).
IntPartition union_partitions(const IntPartition& a, const IntPartition& b);

/// All distinct ways to split the multiset mu as alpha union beta with
/// |alpha| = a. Each unordered multiset split appears exactly once.
std::vector<std::pair<IntPartition, IntPartition>> partition_splittings(
    const IntPartition& mu, int a);

}  // namespace repst
