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
 * @file limits.hpp
 * @brief Global, mutable size caps guarding the exponential corners.
 *
 * Almost everything in this library is small but super-exponential: set
 * partitions grow like Bell numbers, evaluation matrices like d^k, induced
 * modules like [G:H]*dim. The caps below make every blow-up an explicit
 * ErrorCode::CapExceeded instead of an OOM. They are process-global and
 * mutable so a caller (CLI flag, test, benchmark) can widen or narrow them;
 * the defaults are deliberately conservative.
 */

namespace repst {

struct Limits {
  /// Diagram arithmetic refuses morphisms with more than this many points
  /// (upper + lower) because coarsening lattices grow like Bell numbers.
  int diagram_points = 12;

  /// evaluate_diagram_functor refuses when d^k or d^l exceeds this.
  long eval_side = 32768;

  /// Symmetric-group character tables are built for n up to this bound.
  int sn_table_max_n = 10;

  /// Wreath-product character tables Z_c wr S_m are built while c*m stays
  /// within this bound.
  int wreath_table_max_points = 16;

  /// Induction product in the center tower refuses degrees n+m above this.
  int odot_degree_max = 10;

  /// ... and centralizer orders |Z(mu union nu)| above this.
  long odot_centralizer_order_max = 100000;

  /// Brute-force oracle: explicit permutation groups are materialized only up
  /// to this order.
  long oracle_group_order_max = 10000;

  /// Brute-force oracle: explicit induced modules only up to this dimension
  /// (index times dim of the inducing module).
  long oracle_induced_dim_max = 500;

  /// Frobenius-structure checks enumerate the big group; refuse above this.
  long frobenius_group_order_max = 200;
};

/// The process-global limits instance. Mutate fields to reconfigure.
Limits& limits() noexcept;

}  // namespace repst
