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
 * @file sn_characters.hpp
 * @brief Symmetric-group character tables and the Grothendieck-ring
 *        structure constants of the interpolation category.
 *
 * Character values are computed by the Murnaghan–Nakayama rule in its
 * beta-number form: removing an r-hook from lambda is removing r from one
 * beta number, with sign (-1)^(number of beta numbers jumped over). Full
 * tables are memoized in memory and cached on disk (see cache.hpp).
 *
 * The Grothendieck ring of the interpolation category at generic t has a
 * basis indexed by partitions of arbitrary size; the product of two basis
 * classes expands with Littlewood–Richardson coefficients, and induction
 * one strand up expands by removing horizontal strips.
 */

#include <map>
#include <vector>

#include "repst/int_partition.hpp"
#include "repst/rational.hpp"

namespace repst {

/// The irreducible character value chi^lambda(mu); |lambda| must equal |mu|.
Integer sn_character(const IntPartition& lambda, const IntPartition& mu);

/// A complete character table of S_n. Rows (irreducibles) and columns
/// (conjugacy classes) are both labeled by partitions_of(n) in its
/// deterministic order.
struct SnCharacterTable {
  int n = 0;
  std::vector<IntPartition> labels;
  std::vector<Integer> class_sizes;            ///< n! / z_mu per column
  std::vector<std::vector<Integer>> values;    ///< [irrep][class]

  int index_of(const IntPartition& label) const;
};

/// The table for S_n, memoized in memory and cached on disk. n is capped by
/// limits().sn_table_max_n.
const SnCharacterTable& sn_character_table(int n);

/// The classes reached from lambda by inducing one strand up: all partitions
/// obtained from lambda by removing a horizontal strip (lambda itself
/// included), in the deterministic removal order.
std::vector<IntPartition> pieri_induction(const IntPartition& lambda);

/// Structure constants of the Grothendieck ring of the interpolation
/// category at generic t: the product of the classes of a and b expands over
/// partitions of |a|+|b| with Littlewood–Richardson coefficients.
std::map<IntPartition, long> grk0_interpolation_product(const IntPartition& a,
                                                        const IntPartition& b);

}  // namespace repst
