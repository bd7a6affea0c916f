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
 * @file set_partition.hpp
 * @brief Set partitions of k upper and l lower points: the diagrams of the
 *        partition calculus.
 *
 * A diagram from k points to l points is a set partition of
 * {1, ..., k, 1', ..., l'}. Internally the points are numbered 1..k (upper)
 * and k+1..k+l (lower, so j' is k+j); externally (JSON, printing) lower
 * points are the negative numbers -1..-l.
 *
 * Canonical form (maintained as an invariant): every block is sorted
 * ascending in the internal numbering, and blocks are sorted by their least
 * element. Equality and ordering are plain structural comparisons of that
 * canonical form.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace repst {

class SetPartition {
 public:
  /// The empty diagram (0 upper, 0 lower points, no blocks).
  SetPartition() = default;

  /// From blocks over the internal numbering 1..upper+lower. The blocks must
  /// partition exactly that range; throws ErrorCode::InvalidArgument if not.
  SetPartition(int upper, int lower, std::vector<std::vector<int>> blocks);

  /// From blocks in signed convention: +i is upper i, -j is lower j.
  static SetPartition from_signed(int upper, int lower,
                                  const std::vector<std::vector<int>>& blocks);

  /// The identity pattern {{1,1'},...,{k,k'}}.
  static SetPartition identity(int k);

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  int points() const { return upper_ + lower_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  /// Blocks in the signed convention (+i upper, -j lower), each block ordered
  /// uppers-ascending then lowers-ascending (i.e. internal order).
  std::vector<std::vector<int>> signed_blocks() const;

  /// 0-based index of the block containing the internal point p.
  int block_index_of(int point) const;

  /// True when every block of other is contained in a block of *this
  /// (*this is coarser than or equal to other). Both must have the same
  /// upper/lower shape.
  bool coarsens(const SetPartition& other) const;

  /// Merge blocks according to a partition of the block indices
  /// {0,...,block_count()-1}.
  SetPartition merge_blocks(const std::vector<std::vector<int>>& grouping) const;

  /// All partitions strictly coarser than *this (every way of merging at
  /// least two blocks).
  std::vector<SetPartition> strict_coarsenings() const;

  /// Mirror image: swaps the upper and lower rows (the dagger on diagrams).
  SetPartition flipped() const;

  /// Like "{1 2' | 2 | 1'}": blocks separated by bars, lower points primed.
  std::string to_string() const;

  friend bool operator==(const SetPartition& a, const SetPartition& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const SetPartition& a, const SetPartition& b) { return !(a == b); }
  friend bool operator<(const SetPartition& a, const SetPartition& b);

 private:
  int upper_ = 0;
  int lower_ = 0;
  std::vector<std::vector<int>> blocks_;  // canonical form, see file comment
  std::vector<int> block_of_;             // internal point (1-based) -> block index
};

std::ostream& operator<<(std::ostream& os, const SetPartition& p);

/// All partitions of an n-element set, as groupings of the 0-based indices
/// {0,...,n-1}, enumerated via restricted-growth strings. Bell(n) results.
std::vector<std::vector<std::vector<int>>> set_partitions_of_indices(int n);

/// All diagrams with k upper and l lower points (Bell(k+l) of them), sorted.
std::vector<SetPartition> all_diagrams(int upper, int lower);

}  // namespace repst
