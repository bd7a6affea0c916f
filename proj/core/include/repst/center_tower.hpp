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
 * @file center_tower.hpp
 * @brief The tower of categorical centers over the symmetric groups: simple
 *        objects, the induction product, and Grothendieck-ring coordinates.
 *
 * A simple object of the n-th center is a pair (mu, V): a cycle type
 * mu of S_n and an irreducible V of the centralizer of a permutation of
 * that type. The induction product of simples of degrees n and m is a
 * nonnegative-integer combination of simples of degree n+m whose cycle type
 * is the concatenation mu union nu; the multiplicities come from inducing
 * the outer tensor product of the two centralizer irreducibles into the
 * centralizer of the product permutation.
 *
 * Grothendieck-ring coordinates split off the fixed-point part: a simple
 * with cycle type mu = mu0 union (1^r), where mu0 has no parts equal to 1,
 * carries an irreducible of Z(mu0) x S_r, i.e. a triple (mu0, V0, lambda).
 * In these coordinates the product of two classes with empty mu0 expands
 * with Littlewood–Richardson coefficients, matching the Grothendieck ring
 * of the interpolation category.
 */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repst/int_partition.hpp"
#include "repst/rational.hpp"
#include "repst/wreath.hpp"

namespace repst {

/// A simple object of the n-th center.
struct CenterSimple {
  int n = 0;
  IntPartition mu;          ///< cycle type, a partition of n
  CentralizerIrrep irrep;   ///< aligned with CentralizerDescriptor::from_cycle_type(mu)

  friend bool operator==(const CenterSimple& a, const CenterSimple& b) {
    return a.n == b.n && a.mu == b.mu && a.irrep == b.irrep;
  }
  friend bool operator!=(const CenterSimple& a, const CenterSimple& b) { return !(a == b); }
  friend bool operator<(const CenterSimple& a, const CenterSimple& b) {
    if (a.n != b.n) return a.n < b.n;
    if (!(a.mu == b.mu)) return a.mu < b.mu;
    return a.irrep < b.irrep;
  }
  /// Like "n=2 mu=(1,1) V=[(2)]".
  std::string to_string() const;
};

/// Validates that mu partitions n and that the irreducible label matches
/// the factor structure of the centralizer of mu; throws otherwise.
void validate_simple(const CenterSimple& simple);

/// All simples of the n-th center: cycle types in partitions_of(n) order,
/// centralizer irreducibles in product order within each type.
std::vector<CenterSimple> center_simples(int n);

/// The rank of the Grothendieck group of the n-th center.
long center_rank(int n);

/// Dimension of the underlying induced module, [S_n : Z(mu)] * dim V.
Integer center_simple_dimension(const CenterSimple& simple);

/// A formal nonnegative-integer combination of simples (degrees may mix).
using TowerElement = std::map<CenterSimple, long>;

/// The induction product of two simples; lands in degree a.n + b.n.
TowerElement induction_product(const CenterSimple& a, const CenterSimple& b);

/// Bilinear extension to formal combinations.
TowerElement induction_product(const TowerElement& a, const TowerElement& b);

std::string tower_to_string(const TowerElement& element);

// ---- Grothendieck-ring coordinates -------------------------------------------

/// The coordinates (mu0, V0, lambda) of a simple: cycle type with 1-parts
/// removed, the irreducible of the 1-free centralizer part, and the
/// partition carried by the fixed-point symmetric group.
struct GrK0Basis {
  IntPartition mu0;        ///< no parts equal to 1
  CentralizerIrrep v0;     ///< aligned with from_cycle_type(mu0)
  IntPartition lambda;     ///< arbitrary partition, the fixed-point label

  friend bool operator==(const GrK0Basis& a, const GrK0Basis& b) {
    return a.mu0 == b.mu0 && a.v0 == b.v0 && a.lambda == b.lambda;
  }
  friend bool operator!=(const GrK0Basis& a, const GrK0Basis& b) { return !(a == b); }
  friend bool operator<(const GrK0Basis& a, const GrK0Basis& b);
  std::string to_string() const;
};

GrK0Basis grk0_from_simple(const CenterSimple& simple);
CenterSimple simple_from_grk0(const GrK0Basis& basis);

/// The product in Grothendieck-ring coordinates: transport both classes to
/// simples, take the induction product, transport back.
std::map<GrK0Basis, long> grk0_center_product(const GrK0Basis& a, const GrK0Basis& b);

// ---- blocks -------------------------------------------------------------------

/// Decides which fixed-point labels lambda are linked. The default oracle
/// declares every lambda its own block (the generic-parameter answer, which
/// is also the default at integer parameters).
using BlockOracle = std::function<std::string(const IntPartition& lambda,
                                              const std::optional<long>& t)>;
const BlockOracle& generic_block_oracle();

/// A block label of the center: the rigid coordinates (mu0, V0) together
/// with the oracle's verdict on lambda.
struct BlockLabel {
  IntPartition mu0;
  CentralizerIrrep v0;
  std::string block_id;

  friend bool operator==(const BlockLabel& a, const BlockLabel& b) {
    return a.mu0 == b.mu0 && a.v0 == b.v0 && a.block_id == b.block_id;
  }
  friend bool operator<(const BlockLabel& a, const BlockLabel& b);
  std::string to_string() const;
};

BlockLabel block_label(const GrK0Basis& basis, const std::optional<long>& t,
                       const BlockOracle& oracle = generic_block_oracle());

/// The simples of the n-th center grouped by block label.
std::map<BlockLabel, std::vector<CenterSimple>> center_blocks(
    int n, const std::optional<long>& t, const BlockOracle& oracle = generic_block_oracle());

}  // namespace repst
