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

#include "repst/int_partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "repst/error.hpp"

namespace repst {

IntPartition::IntPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      fail(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing positives");
    }
  }
}

IntPartition IntPartition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return IntPartition(std::move(parts));
}

int IntPartition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int IntPartition::part(int i) const {
  return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

IntPartition IntPartition::transpose() const {
  std::vector<int> cols;
  if (!parts_.empty()) {
    cols.resize(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_) {
      for (int j = 0; j < row; ++j) ++cols[static_cast<std::size_t>(j)];
    }
  }
  return IntPartition(std::move(cols));
}

bool IntPartition::contains(const IntPartition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu.part(i) > part(i)) return false;
  }
  return true;
}

std::map<int, int> IntPartition::multiplicities() const {
  std::map<int, int> result;
  for (int p : parts_) ++result[p];
  return result;
}

std::string IntPartition::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out << ",";
    out << parts_[i];
  }
  out << ")";
  return out.str();
}

bool operator<(const IntPartition& lhs, const IntPartition& rhs) {
  const int ls = lhs.size(), rs = rhs.size();
  if (ls != rs) return ls < rs;
  return lhs.parts_ < rhs.parts_;
}

std::ostream& operator<<(std::ostream& os, const IntPartition& p) {
  return os << p.to_string();
}

std::vector<IntPartition> partitions_of(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "partitions of a negative number");
  std::vector<IntPartition> result;
  std::vector<int> current;
  // First part chosen largest-first yields reverse-lexicographic order.
  std::function<void(int, int)> descend = [&](int remaining, int max_part) {
    if (remaining == 0) {
      result.push_back(IntPartition(current));
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      descend(remaining - p, p);
      current.pop_back();
    }
  };
  descend(n, n == 0 ? 1 : n);
  return result;
}

Integer cycle_type_centralizer_order(const IntPartition& mu) {
  Integer z(1);
  for (const auto& [part, count] : mu.multiplicities()) {
    for (int i = 0; i < count; ++i) z *= part;
    z *= factorial(count);
  }
  return z;
}

IntPartition pad_partition(const IntPartition& lambda, int n) {
  const int first = n - lambda.size();
  if (first < lambda.part(0)) {
    fail(ErrorCode::InvalidArgument, "padding does not yield a partition",
         lambda.to_string() + " padded to " + std::to_string(n));
  }
  std::vector<int> parts;
  if (first > 0) parts.push_back(first);
  else if (!lambda.empty()) {
    // first == 0 forces lambda itself empty (first >= lambda_1 >= 1 otherwise)
    fail(ErrorCode::InvalidArgument, "padding does not yield a partition",
         lambda.to_string() + " padded to " + std::to_string(n));
  }
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return IntPartition(std::move(parts));
}

bool is_horizontal_strip(const IntPartition& lambda, const IntPartition& mu) {
  if (!lambda.contains(mu)) return false;
  // Interlacing: mu_i >= lambda_{i+1} means no column gains two cells.
  for (int i = 0; i + 1 < lambda.length(); ++i) {
    if (mu.part(i) < lambda.part(i + 1)) return false;
  }
  return true;
}

std::vector<IntPartition> horizontal_strip_removals(const IntPartition& lambda) {
  std::vector<IntPartition> result;
  std::vector<int> current;
  const int rows = lambda.length();
  std::function<void(int)> choose = [&](int row) {
    if (row == rows) {
      std::vector<int> trimmed = current;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      result.push_back(IntPartition(std::move(trimmed)));
      return;
    }
    // mu_row ranges over [lambda_{row+1}, lambda_row]; descending keeps the
    // output reverse-lexicographic with lambda itself first.
    for (int v = lambda.part(row); v >= lambda.part(row + 1); --v) {
      current.push_back(v);
      choose(row + 1);
      current.pop_back();
    }
  };
  choose(0);
  return result;
}

namespace {

/// Backtracking Littlewood-Richardson counter. Cells of nu/lambda are filled
/// in reverse reading order (each row right-to-left, rows top to bottom), the
/// exact order in which the reverse reading word is spelled, so the lattice
/// property can be enforced incrementally: appending value v requires
/// count[v] < count[v-1] for v > 1.
class LatticeCounter {
 public:
  LatticeCounter(const IntPartition& lambda, const IntPartition& mu, const IntPartition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), rows_(nu.length()),
        grid_(static_cast<std::size_t>(nu.length())),
        remaining_(static_cast<std::size_t>(mu.length()) + 1, 0) {
    for (int r = 0; r < rows_; ++r) {
      grid_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(nu.part(r)), 0);
    }
    for (int v = 1; v <= mu.length(); ++v) {
      remaining_[static_cast<std::size_t>(v)] = mu.part(v - 1);
    }
    counts_.assign(remaining_.size(), 0);
  }

  long count() {
    run(0, nu_.part(0) - 1);
    return total_;
  }

 private:
  void run(int row, int col) {
    // Advance past cells of lambda (left part of the row) and row ends.
    while (row < rows_ && col < lambda_.part(row)) {
      ++row;
      col = nu_.part(row) - 1;
    }
    if (row >= rows_) {
      ++total_;
      return;
    }
    const int right = col + 1 < nu_.part(row) ? cell(row, col + 1) : 0;
    const int above = (row > 0 && col < nu_.part(row - 1)) ? cell(row - 1, col) : 0;
    // Semistandard: weakly increasing rows (value <= right neighbor),
    // strictly increasing columns (value > cell above).
    const int hi = right == 0 ? mu_.length() : right;
    for (int v = above + 1; v <= hi; ++v) {
      if (remaining_[static_cast<std::size_t>(v)] == 0) continue;
      if (v > 1 && counts_[static_cast<std::size_t>(v)] >= counts_[static_cast<std::size_t>(v - 1)]) {
        continue;  // would break the lattice property
      }
      set_cell(row, col, v);
      --remaining_[static_cast<std::size_t>(v)];
      ++counts_[static_cast<std::size_t>(v)];
      if (col - 1 >= lambda_.part(row)) {
        run(row, col - 1);
      } else {
        run(row + 1, nu_.part(row + 1) - 1);
      }
      set_cell(row, col, 0);
      ++remaining_[static_cast<std::size_t>(v)];
      --counts_[static_cast<std::size_t>(v)];
    }
  }

  int cell(int r, int c) const {
    return grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  void set_cell(int r, int c, int v) {
    grid_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
  }

  const IntPartition& lambda_;
  const IntPartition& mu_;
  const IntPartition& nu_;
  int rows_;
  std::vector<std::vector<int>> grid_;
  std::vector<int> remaining_;
  std::vector<int> counts_;
  long total_ = 0;
};

}  // namespace

long lr_coefficient(const IntPartition& lambda, const IntPartition& mu,
                    const IntPartition& nu) {
  if (lambda.size() + mu.size() != nu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  if (mu.empty()) return 1;  // nu == lambda at this point
  return LatticeCounter(lambda, mu, nu).count();
}

Integer hook_length_dimension(const IntPartition& lambda) {
  const IntPartition conj = lambda.transpose();
  Integer hooks(1);
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda.part(i); ++j) {
      hooks *= (lambda.part(i) - j) + (conj.part(j) - i) - 1;
    }
  }
  Integer dim = factorial(lambda.size());
  if (!mpz_divisible_p(dim.get_mpz_t(), hooks.get_mpz_t())) {
    fail(ErrorCode::NotIntegral, "hook length product does not divide n!");
  }
  return dim / hooks;
}

IntPartition union_partitions(const IntPartition& a, const IntPartition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return IntPartition::from_unsorted(std::move(parts));
}

std::vector<std::pair<IntPartition, IntPartition>> partition_splittings(
    const IntPartition& mu, int a) {
  std::vector<std::pair<IntPartition, IntPartition>> result;
  if (a < 0 || a > mu.size()) return result;
  const std::map<int, int> mult = mu.multiplicities();
  std::vector<std::pair<int, int>> entries(mult.begin(), mult.end());
  std::vector<int> taken(entries.size(), 0);
  // Choose per distinct part value how many copies go left; distinct choices
  // yield distinct (alpha, beta) multiset splits, so each appears once.
  std::function<void(std::size_t, int)> choose = [&](std::size_t idx, int remaining) {
    if (remaining == 0) {
      std::vector<int> left, right;
      for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto [value, count] = entries[i];
        const int k = i < idx ? taken[i] : 0;
        left.insert(left.end(), static_cast<std::size_t>(k), value);
        right.insert(right.end(), static_cast<std::size_t>(count - k), value);
      }
      result.emplace_back(IntPartition::from_unsorted(std::move(left)),
                          IntPartition::from_unsorted(std::move(right)));
      return;
    }
    if (idx == entries.size()) return;
    const auto [value, count] = entries[idx];
    for (int k = 0; k <= count && k * value <= remaining; ++k) {
      taken[idx] = k;
      choose(idx + 1, remaining - k * value);
    }
    taken[idx] = 0;
  };
  choose(0, a);
  return result;
}

}  // namespace repst
