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

#include "repst/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "repst/error.hpp"
#include "repst/limits.hpp"

namespace repst {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) {
      fail(ErrorCode::InvalidArgument, "image vector is not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      if (from < 0 || from >= n) fail(ErrorCode::InvalidArgument, "cycle point out of range");
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));  // validates disjointness implicitly
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (apply(i) != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int i = 0; i < degree(); ++i) images[static_cast<std::size_t>(apply(i))] = i;
  return Permutation(std::move(images));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    fail(ErrorCode::ShapeMismatch, "composing permutations of different degrees");
  }
  std::vector<int> images(a.images_.size());
  for (int i = 0; i < a.degree(); ++i) images[static_cast<std::size_t>(i)] = a.apply(b.apply(i));
  return Permutation(std::move(images));
}

std::vector<std::vector<int>> Permutation::cycles(bool keep_fixed) const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int p = start;
    do {
      seen[static_cast<std::size_t>(p)] = true;
      cycle.push_back(p);
      p = apply(p);
    } while (p != start);
    if (cycle.size() > 1 || keep_fixed) result.push_back(std::move(cycle));
  }
  return result;
}

IntPartition Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& cycle : cycles(/*keep_fixed=*/true)) {
    lengths.push_back(static_cast<int>(cycle.size()));
  }
  return IntPartition::from_unsorted(std::move(lengths));
}

int Permutation::sign() const {
  int parity = 0;
  for (const auto& cycle : cycles()) parity += static_cast<int>(cycle.size()) - 1;
  return parity % 2 == 0 ? 1 : -1;
}

Permutation Permutation::extended(int n) const {
  if (n < degree()) fail(ErrorCode::InvalidArgument, "cannot shrink a permutation");
  std::vector<int> images = images_;
  for (int i = degree(); i < n; ++i) images.push_back(i);
  return Permutation(std::move(images));
}

std::string Permutation::to_string() const {
  const auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto& cycle : cs) {
    out << "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << " ";
      out << cycle[i] + 1;  // 1-based for display
    }
    out << ")";
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.to_string();
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "permutations of negative degree");
  const Integer order = factorial(n);
  if (order > limits().oracle_group_order_max) {
    fail(ErrorCode::CapExceeded, "S_n too large to enumerate", "n = " + std::to_string(n));
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> result;
  do {
    result.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;  // next_permutation on the sorted start emits sorted output
}

std::vector<Permutation> generate_closure(int degree,
                                          const std::vector<Permutation>& generators) {
  std::set<Permutation> elements;
  elements.insert(Permutation::identity(degree));
  std::vector<Permutation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& e : frontier) {
      for (const Permutation& g : generators) {
        if (g.degree() != degree) {
          fail(ErrorCode::ShapeMismatch, "generator degree mismatch");
        }
        Permutation product = g * e;
        if (elements.insert(product).second) {
          if (static_cast<long>(elements.size()) > limits().oracle_group_order_max) {
            fail(ErrorCode::CapExceeded, "group closure exceeds the configured order cap");
          }
          next.push_back(std::move(product));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<Permutation>(elements.begin(), elements.end());
}

std::vector<Permutation> centralizer_filter(const Permutation& sigma) {
  std::vector<Permutation> result;
  for (const Permutation& g : all_permutations(sigma.degree())) {
    if (g * sigma == sigma * g) result.push_back(g);
  }
  return result;
}

}  // namespace repst
