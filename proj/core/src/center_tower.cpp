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

#include "repst/center_tower.hpp"

#include <algorithm>
#include <sstream>

#include "repst/error.hpp"
#include "repst/limits.hpp"

namespace repst {

namespace {

/// Enumerates the irreducible labels of a centralizer without building its
/// character table: the cartesian product of per-factor multipartition
/// lists, last factor fastest.
std::vector<CentralizerLabel> centralizer_labels(const CentralizerDescriptor& descriptor) {
  std::vector<std::vector<MultiPartition>> per_factor;
  per_factor.reserve(descriptor.factors.size());
  for (const WreathFactor& f : descriptor.factors) {
    per_factor.push_back(multipartitions(f.cycle, f.mult));
  }
  std::vector<CentralizerLabel> result;
  CentralizerLabel current;
  current.factors.resize(descriptor.factors.size());
  auto recurse = [&](auto&& self, std::size_t factor) -> void {
    if (factor == per_factor.size()) {
      result.push_back(current);
      return;
    }
    for (const MultiPartition& label : per_factor[factor]) {
      current.factors[factor] = label;
      self(self, factor + 1);
    }
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace

void validate_simple(const CenterSimple& simple) {
  if (simple.mu.size() != simple.n) {
    fail(ErrorCode::InvalidArgument, "cycle type does not partition the degree",
         simple.mu.to_string() + " vs n=" + std::to_string(simple.n));
  }
  const CentralizerDescriptor descriptor = CentralizerDescriptor::from_cycle_type(simple.mu);
  if (simple.irrep.factors.size() != descriptor.factors.size()) {
    fail(ErrorCode::ShapeMismatch, "irreducible label does not match the centralizer",
         simple.irrep.to_string());
  }
  for (std::size_t f = 0; f < descriptor.factors.size(); ++f) {
    const MultiPartition& part = simple.irrep.factors[f];
    if (part.slots() != descriptor.factors[f].cycle ||
        part.total() != descriptor.factors[f].mult) {
      fail(ErrorCode::ShapeMismatch, "irreducible label does not match the centralizer",
           simple.irrep.to_string());
    }
  }
}

std::string CenterSimple::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " mu=" << mu.to_string() << " V=" << irrep.to_string();
  return os.str();
}

std::vector<CenterSimple> center_simples(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative degree");
  std::vector<CenterSimple> result;
  for (const IntPartition& mu : partitions_of(n)) {
    const CentralizerDescriptor descriptor = CentralizerDescriptor::from_cycle_type(mu);
    for (CentralizerLabel& label : centralizer_labels(descriptor)) {
      result.push_back(CenterSimple{n, mu, std::move(label)});
    }
  }
  return result;
}

long center_rank(int n) { return static_cast<long>(center_simples(n).size()); }

Integer center_simple_dimension(const CenterSimple& simple) {
  validate_simple(simple);
  const CentralizerDescriptor descriptor = CentralizerDescriptor::from_cycle_type(simple.mu);
  const Integer group_order = factorial(simple.n);
  const Integer centralizer_order = descriptor.group_order();
  return group_order / centralizer_order *
         centralizer_irrep_dimension(descriptor, simple.irrep);
}

TowerElement induction_product(const CenterSimple& a, const CenterSimple& b) {
  validate_simple(a);
  validate_simple(b);
  const int n = a.n + b.n;
  if (n > limits().odot_degree_max) {
    fail(ErrorCode::CapExceeded, "induction product degree exceeds the cap",
         "cap " + std::to_string(limits().odot_degree_max));
  }
  const CentralizerDescriptor da = CentralizerDescriptor::from_cycle_type(a.mu);
  const CentralizerDescriptor db = CentralizerDescriptor::from_cycle_type(b.mu);
  const IntPartition fused_type = union_partitions(a.mu, b.mu);

  TowerElement result;
  for (auto& [label, mult] : decompose_induction(da, a.irrep, db, b.irrep)) {
    result.emplace(CenterSimple{n, fused_type, label}, mult);
  }
  return result;
}

TowerElement induction_product(const TowerElement& a, const TowerElement& b) {
  TowerElement result;
  for (const auto& [sa, ca] : a) {
    for (const auto& [sb, cb] : b) {
      for (const auto& [simple, mult] : induction_product(sa, sb)) {
        result[simple] += ca * cb * mult;
      }
    }
  }
  for (auto it = result.begin(); it != result.end();) {
    it = it->second == 0 ? result.erase(it) : std::next(it);
  }
  return result;
}

std::string tower_to_string(const TowerElement& element) {
  if (element.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [simple, mult] : element) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    os << "(" << simple.to_string() << ")";
  }
  return os.str();
}

// ---- Grothendieck-ring coordinates -------------------------------------------

bool operator<(const GrK0Basis& a, const GrK0Basis& b) {
  if (!(a.mu0 == b.mu0)) return a.mu0 < b.mu0;
  if (!(a.v0 == b.v0)) return a.v0 < b.v0;
  return a.lambda < b.lambda;
}

std::string GrK0Basis::to_string() const {
  std::ostringstream os;
  os << "mu0=" << mu0.to_string() << " V0=" << v0.to_string()
     << " lambda=" << lambda.to_string();
  return os.str();
}

GrK0Basis grk0_from_simple(const CenterSimple& simple) {
  validate_simple(simple);
  const CentralizerDescriptor descriptor = CentralizerDescriptor::from_cycle_type(simple.mu);
  const int fixed_factor = descriptor.factor_index(1);

  GrK0Basis basis;
  std::vector<int> mu0_parts;
  for (int part : simple.mu.parts()) {
    if (part != 1) mu0_parts.push_back(part);
  }
  basis.mu0 = IntPartition(mu0_parts);
  for (std::size_t f = 0; f < descriptor.factors.size(); ++f) {
    if (static_cast<int>(f) == fixed_factor) {
      basis.lambda = simple.irrep.factors[f].component(0);
    } else {
      basis.v0.factors.push_back(simple.irrep.factors[f]);
    }
  }
  return basis;
}

CenterSimple simple_from_grk0(const GrK0Basis& basis) {
  for (int part : basis.mu0.parts()) {
    if (part == 1) {
      fail(ErrorCode::InvalidArgument, "mu0 must not contain parts equal to 1",
           basis.mu0.to_string());
    }
  }
  const int r = basis.lambda.size();
  std::vector<int> parts = basis.mu0.parts();
  for (int i = 0; i < r; ++i) parts.push_back(1);
  CenterSimple simple;
  simple.mu = IntPartition::from_unsorted(parts);
  simple.n = simple.mu.size();
  // Cycle length 1 sorts first in the descriptor, so the fixed-point factor
  // is at the front exactly when r > 0.
  if (r > 0) {
    simple.irrep.factors.push_back(MultiPartition({basis.lambda}));
  }
  for (const MultiPartition& factor : basis.v0.factors) {
    simple.irrep.factors.push_back(factor);
  }
  validate_simple(simple);
  return simple;
}

std::map<GrK0Basis, long> grk0_center_product(const GrK0Basis& a, const GrK0Basis& b) {
  const TowerElement product = induction_product(simple_from_grk0(a), simple_from_grk0(b));
  std::map<GrK0Basis, long> result;
  for (const auto& [simple, mult] : product) {
    result.emplace(grk0_from_simple(simple), mult);
  }
  return result;
}

// ---- blocks -------------------------------------------------------------------

const BlockOracle& generic_block_oracle() {
  static const BlockOracle oracle = [](const IntPartition& lambda,
                                       const std::optional<long>&) -> std::string {
    return lambda.to_string();
  };
  return oracle;
}

bool operator<(const BlockLabel& a, const BlockLabel& b) {
  if (!(a.mu0 == b.mu0)) return a.mu0 < b.mu0;
  if (!(a.v0 == b.v0)) return a.v0 < b.v0;
  return a.block_id < b.block_id;
}

std::string BlockLabel::to_string() const {
  std::ostringstream os;
  os << "mu0=" << mu0.to_string() << " V0=" << v0.to_string() << " block=" << block_id;
  return os.str();
}

BlockLabel block_label(const GrK0Basis& basis, const std::optional<long>& t,
                       const BlockOracle& oracle) {
  return BlockLabel{basis.mu0, basis.v0, oracle(basis.lambda, t)};
}

std::map<BlockLabel, std::vector<CenterSimple>> center_blocks(int n, const std::optional<long>& t,
                                                              const BlockOracle& oracle) {
  std::map<BlockLabel, std::vector<CenterSimple>> result;
  for (const CenterSimple& simple : center_simples(n)) {
    result[block_label(grk0_from_simple(simple), t, oracle)].push_back(simple);
  }
  return result;
}

}  // namespace repst
