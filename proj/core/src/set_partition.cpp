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

#include "repst/set_partition.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "repst/error.hpp"

namespace repst {

SetPartition::SetPartition(int upper, int lower, std::vector<std::vector<int>> blocks)
    : upper_(upper), lower_(lower), blocks_(std::move(blocks)) {
  if (upper_ < 0 || lower_ < 0) {
    fail(ErrorCode::InvalidArgument, "negative point counts");
  }
  const int n = points();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int covered = 0;
  for (auto& block : blocks_) {
    if (block.empty()) fail(ErrorCode::InvalidArgument, "empty block in set partition");
    std::sort(block.begin(), block.end());
    for (int p : block) {
      if (p < 1 || p > n || seen[static_cast<std::size_t>(p)]) {
        fail(ErrorCode::InvalidArgument, "blocks must partition the points exactly");
      }
      seen[static_cast<std::size_t>(p)] = true;
      ++covered;
    }
  }
  if (covered != n) {
    fail(ErrorCode::InvalidArgument, "blocks must cover every point");
  }
  std::sort(blocks_.begin(), blocks_.end());  // by least element: blocks are sorted
  block_of_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int b = 0; b < block_count(); ++b) {
    for (int p : blocks_[static_cast<std::size_t>(b)]) {
      block_of_[static_cast<std::size_t>(p)] = b;
    }
  }
}

SetPartition SetPartition::from_signed(int upper, int lower,
                                       const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<int>> internal;
  internal.reserve(blocks.size());
  for (const auto& block : blocks) {
    std::vector<int> converted;
    converted.reserve(block.size());
    for (int p : block) {
      if (p > 0 && p <= upper) {
        converted.push_back(p);
      } else if (p < 0 && -p <= lower) {
        converted.push_back(upper - p);  // -j -> k + j
      } else {
        fail(ErrorCode::InvalidArgument, "signed point out of range",
             std::to_string(p));
      }
    }
    internal.push_back(std::move(converted));
  }
  return SetPartition(upper, lower, std::move(internal));
}

SetPartition SetPartition::identity(int k) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(k));
  for (int i = 1; i <= k; ++i) blocks.push_back({i, k + i});
  return SetPartition(k, k, std::move(blocks));
}

std::vector<std::vector<int>> SetPartition::signed_blocks() const {
  std::vector<std::vector<int>> result = blocks_;
  for (auto& block : result) {
    for (int& p : block) {
      if (p > upper_) p = upper_ - p;  // k + j -> -j
    }
  }
  return result;
}

int SetPartition::block_index_of(int point) const {
  if (point < 1 || point > points()) {
    fail(ErrorCode::InvalidArgument, "point out of range");
  }
  return block_of_[static_cast<std::size_t>(point)];
}

bool SetPartition::coarsens(const SetPartition& other) const {
  if (upper_ != other.upper_ || lower_ != other.lower_) {
    fail(ErrorCode::ShapeMismatch, "comparing partitions of different shapes");
  }
  // Every block of other must sit inside one of our blocks; since blocks are
  // determined by membership, check that all points of each block share our
  // block index.
  for (const auto& block : other.blocks_) {
    const int home = block_index_of(block.front());
    for (int p : block) {
      if (block_index_of(p) != home) return false;
    }
  }
  return true;
}

SetPartition SetPartition::merge_blocks(const std::vector<std::vector<int>>& grouping) const {
  std::vector<std::vector<int>> merged;
  merged.reserve(grouping.size());
  std::size_t used = 0;
  for (const auto& group : grouping) {
    std::vector<int> block;
    for (int index : group) {
      if (index < 0 || index >= block_count()) {
        fail(ErrorCode::InvalidArgument, "block index out of range");
      }
      const auto& src = blocks_[static_cast<std::size_t>(index)];
      block.insert(block.end(), src.begin(), src.end());
      ++used;
    }
    merged.push_back(std::move(block));
  }
  if (used != blocks_.size()) {
    fail(ErrorCode::InvalidArgument, "grouping must partition the block indices");
  }
  return SetPartition(upper_, lower_, std::move(merged));
}

std::vector<SetPartition> SetPartition::strict_coarsenings() const {
  std::vector<SetPartition> result;
  for (const auto& grouping : set_partitions_of_indices(block_count())) {
    if (grouping.size() == blocks_.size()) continue;  // discrete grouping = no merge
    result.push_back(merge_blocks(grouping));
  }
  return result;
}

SetPartition SetPartition::flipped() const {
  std::vector<std::vector<int>> blocks = blocks_;
  for (auto& block : blocks) {
    for (int& p : block) {
      p = p <= upper_ ? lower_ + p : p - upper_;  // i -> l+i, k+j -> j
    }
  }
  return SetPartition(lower_, upper_, std::move(blocks));
}

std::string SetPartition::to_string() const {
  std::ostringstream out;
  out << "{";
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out << " | ";
    for (std::size_t i = 0; i < blocks_[b].size(); ++i) {
      if (i > 0) out << " ";
      const int p = blocks_[b][i];
      if (p <= upper_) out << p;
      else out << (p - upper_) << "'";
    }
  }
  out << "}";
  return out.str();
}

bool operator<(const SetPartition& a, const SetPartition& b) {
  if (a.upper_ != b.upper_) return a.upper_ < b.upper_;
  if (a.lower_ != b.lower_) return a.lower_ < b.lower_;
  return a.blocks_ < b.blocks_;
}

std::ostream& operator<<(std::ostream& os, const SetPartition& p) {
  return os << p.to_string();
}

std::vector<std::vector<std::vector<int>>> set_partitions_of_indices(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "set partitions of a negative count");
  std::vector<std::vector<std::vector<int>>> result;
  // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]); each string is a
  // partition with blocks numbered in order of first appearance.
  std::vector<int> assignment(static_cast<std::size_t>(n), 0);
  auto emit = [&]() {
    int block_count = 0;
    for (int a : assignment) block_count = std::max(block_count, a + 1);
    std::vector<std::vector<int>> grouping(static_cast<std::size_t>(block_count));
    for (int i = 0; i < n; ++i) {
      grouping[static_cast<std::size_t>(assignment[static_cast<std::size_t>(i)])].push_back(i);
    }
    result.push_back(std::move(grouping));
  };
  if (n == 0) {
    result.push_back({});
    return result;
  }
  // Iterate all restricted growth strings in lexicographic order.
  std::vector<int> prefix_max(static_cast<std::size_t>(n), 0);
  int i = 0;
  while (true) {
    if (i == n) {
      emit();
      --i;
      while (i >= 0) {
        const int bound = i == 0 ? 0 : prefix_max[static_cast<std::size_t>(i - 1)] + 1;
        if (assignment[static_cast<std::size_t>(i)] < bound) {
          ++assignment[static_cast<std::size_t>(i)];
          break;
        }
        assignment[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
    }
    prefix_max[static_cast<std::size_t>(i)] =
        i == 0 ? assignment[0]
               : std::max(prefix_max[static_cast<std::size_t>(i - 1)],
                          assignment[static_cast<std::size_t>(i)]);
    ++i;
  }
  return result;
}

std::vector<SetPartition> all_diagrams(int upper, int lower) {
  std::vector<SetPartition> result;
  for (const auto& grouping : set_partitions_of_indices(upper + lower)) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(grouping.size());
    for (const auto& group : grouping) {
      std::vector<int> block;
      block.reserve(group.size());
      for (int index : group) block.push_back(index + 1);  // 0-based -> internal 1-based
      blocks.push_back(std::move(block));
    }
    result.push_back(SetPartition(upper, lower, std::move(blocks)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace repst
