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

#include "repst/half_braiding.hpp"

#include <sstream>

#include "repst/error.hpp"

namespace repst {

std::map<Permutation, Rational> convolve(const std::map<Permutation, Rational>& a,
                                         const std::map<Permutation, Rational>& b) {
  std::map<Permutation, Rational> result;
  for (const auto& [u, cu] : a) {
    for (const auto& [v, cv] : b) {
      const Rational c = cu * cv;
      auto [it, inserted] = result.emplace(u * v, c);
      if (!inserted) it->second += c;
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    it = it->second.is_zero() ? result.erase(it) : std::next(it);
  }
  return result;
}

std::map<Permutation, Rational> trivial_idempotent(const std::vector<Permutation>& group) {
  if (group.empty()) fail(ErrorCode::InvalidArgument, "empty group");
  const Rational weight(1, static_cast<long>(group.size()));
  std::map<Permutation, Rational> e;
  for (const Permutation& g : group) e.emplace(g, weight);
  if (e.size() != group.size()) {
    fail(ErrorCode::InvalidArgument, "group list contains duplicates");
  }
  return e;
}

std::map<Permutation, Rational> sign_idempotent(const std::vector<Permutation>& group) {
  if (group.empty()) fail(ErrorCode::InvalidArgument, "empty group");
  const Rational weight(1, static_cast<long>(group.size()));
  std::map<Permutation, Rational> e;
  for (const Permutation& g : group) e.emplace(g, g.sign() > 0 ? weight : -weight);
  if (e.size() != group.size()) {
    fail(ErrorCode::InvalidArgument, "group list contains duplicates");
  }
  return e;
}

std::map<Permutation, Rational> linear_idempotent(
    const std::vector<Permutation>& group, const std::map<Permutation, Rational>& character) {
  if (group.empty()) fail(ErrorCode::InvalidArgument, "empty group");
  auto value = [&](const Permutation& g) -> Rational {
    auto it = character.find(g);
    if (it == character.end()) {
      fail(ErrorCode::NotFound, "character table lacks a group element", g.to_string());
    }
    return it->second;
  };
  for (const Permutation& g : group) {
    for (const Permutation& h : group) {
      if (value(g) * value(h) != value(g * h)) {
        fail(ErrorCode::InvalidArgument, "character values are not multiplicative");
      }
    }
  }
  const Rational weight(1, static_cast<long>(group.size()));
  std::map<Permutation, Rational> e;
  for (const Permutation& g : group) e.emplace(g, weight * value(g.inverse()));
  if (e.size() != group.size()) {
    fail(ErrorCode::InvalidArgument, "group list contains duplicates");
  }
  return e;
}

DiagramMorphism group_algebra_embedding(int n, const std::map<Permutation, Rational>& element) {
  DiagramMorphism result(n, n);
  for (const auto& [g, c] : element) {
    if (g.degree() != n) {
      fail(ErrorCode::ShapeMismatch, "group element degree does not match the strand count",
           g.to_string());
    }
    result += Polynomial(c) * x_basis_morphism(permutation_pattern(g));
  }
  return result;
}

SetPartition insertion_pattern(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n) {
    fail(ErrorCode::InvalidArgument, "insertion indices out of range");
  }
  const int lower = n + 1;  // offset of lower point p' = lower + p
  std::vector<std::vector<int>> blocks;
  for (int k = 1; k <= n; ++k) {
    if (k != i && k != j) blocks.push_back({k, lower + k});
  }
  // The fresh upper point joins the through-strand of i, the fresh lower
  // point the through-strand of j. Evaluated at an assignment this reads
  // the new value off coordinate i and writes coordinate j back out, which
  // is exactly the conjugation action the half-braiding needs; leaving the
  // strands i, j cut (fresh points paired off on their own) does not
  // satisfy the center conditions.
  if (i == j) {
    blocks.push_back({i, lower + i, n + 1, lower + (n + 1)});
  } else {
    blocks.push_back({i, lower + i, n + 1});
    blocks.push_back({j, lower + j, lower + (n + 1)});
  }
  return SetPartition(n + 1, n + 1, blocks);
}

DiagramMorphism twist_sum(const Permutation& sigma) {
  const int n = sigma.degree();
  DiagramMorphism result = DiagramMorphism::identity(n + 1);
  for (int i = 1; i <= n; ++i) {
    const int j = sigma.apply(i - 1) + 1;
    result += DiagramMorphism(insertion_pattern(n, i, j));
    result -= DiagramMorphism(insertion_pattern(n, i, i));
  }
  return result;
}

DiagramMorphism rotation_morphism(int n) {
  std::vector<int> cycle(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) cycle[static_cast<std::size_t>(i)] = i;
  return permutation_morphism(Permutation::from_cycles(n + 1, {cycle}));
}

DiagramMorphism half_braiding_d1(const Permutation& sigma, const DiagramMorphism& e) {
  const int n = sigma.degree();
  if (e.upper() != n || e.lower() != n) {
    fail(ErrorCode::ShapeMismatch, "idempotent shape does not match the permutation degree");
  }
  return compose(twist_sum(sigma), tensor(e, DiagramMorphism::identity(1)));
}

DiagramMorphism half_braiding(const Permutation& sigma, const DiagramMorphism& e) {
  return compose(half_braiding_d1(sigma, e), rotation_morphism(sigma.degree()));
}

std::string CenterCheckReport::to_string() const {
  auto word = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "unit_left: " << word(unit_left) << ", unit_right: " << word(unit_right)
     << ", merge: " << word(merge_compat) << ", crossing: " << word(crossing_compat);
  return os.str();
}

CenterCheckReport check_center(const DiagramMorphism& e, const DiagramMorphism& c) {
  const int n = e.upper();
  if (e.lower() != n) {
    fail(ErrorCode::ShapeMismatch, "idempotent must be an endomorphism");
  }
  if (c.upper() != n + 1 || c.lower() != n + 1) {
    fail(ErrorCode::ShapeMismatch, "braiding candidate must act on one extra strand");
  }
  const DiagramMorphism id1 = DiagramMorphism::identity(1);

  CenterCheckReport report;
  report.unit_left = compose(tensor(e, unit_morphism()), c) == tensor(unit_morphism(), e);
  report.unit_right = compose(c, tensor(counit_morphism(), e)) == tensor(e, counit_morphism());

  // The braiding against two strands.
  const DiagramMorphism c2 = compose(tensor(c, id1), tensor(id1, c));
  report.merge_compat =
      compose(tensor(e, merge_morphism()), c2) == compose(c2, tensor(merge_morphism(), e));
  report.crossing_compat =
      compose(tensor(e, crossing_morphism()), c2) == compose(c2, tensor(crossing_morphism(), e));
  return report;
}

}  // namespace repst
