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
 * @file diagram.hpp
 * @brief The partition-diagram calculus: formal Q[t]-linear combinations of
 *        set partitions, with composition, tensor product, the x-basis and
 *        the integer-evaluation functor.
 *
 * Morphisms k -> l are Q[t]-linear combinations of set partitions of
 * {1..k, 1'..l'}. Composition stacks diagrams: compose(a, b) is "b after a"
 * (a: k -> l, b: l -> m, result k -> m); every connected component of the
 * stacked picture that touches neither the k outer upper points nor the m
 * outer lower points is deleted and contributes one factor of the parameter
 * t. Tensor places diagrams side by side.
 *
 * The x-basis is defined by the recursion
 *     x_pi = pi - sum over partitions tau strictly coarser than pi of x_tau,
 * an upper-unitriangular change of basis with respect to the coarsening
 * order.
 *
 * Evaluation at an integer d >= 0 sends a diagram pi (k -> l) to the
 * d^l x d^k matrix whose (j, i) entry is 1 exactly when the combined index
 * assignment (i on upper points, j on lower points) is constant on every
 * block of pi; coefficients evaluate at t = d. On x-basis elements the same
 * functor acts by the stricter rule: the assignment must be constant on
 * blocks and take distinct values on distinct blocks (the index partition
 * equals the block partition on the nose). That stricter rule is exposed
 * separately for cross-checks.
 */

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "repst/permutation.hpp"
#include "repst/polynomial.hpp"
#include "repst/set_partition.hpp"

namespace repst {

class DiagramMorphism {
 public:
  /// The zero morphism k -> l.
  DiagramMorphism(int upper, int lower);

  /// A single diagram with a coefficient.
  explicit DiagramMorphism(const SetPartition& diagram,
                           Polynomial coeff = Polynomial(Rational(1)));

  static DiagramMorphism zero(int upper, int lower) { return DiagramMorphism(upper, lower); }
  static DiagramMorphism identity(int k);

  int upper() const { return upper_; }
  int lower() const { return lower_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Terms in canonical (sorted) order; no zero coefficients are stored.
  const std::map<SetPartition, Polynomial>& terms() const { return terms_; }

  /// Coefficient of a diagram (zero if absent).
  Polynomial coefficient(const SetPartition& diagram) const;

  DiagramMorphism operator-() const;
  DiagramMorphism& operator+=(const DiagramMorphism& rhs);
  DiagramMorphism& operator-=(const DiagramMorphism& rhs);
  DiagramMorphism& operator*=(const Polynomial& scalar);

  friend DiagramMorphism operator+(DiagramMorphism lhs, const DiagramMorphism& rhs) {
    return lhs += rhs;
  }
  friend DiagramMorphism operator-(DiagramMorphism lhs, const DiagramMorphism& rhs) {
    return lhs -= rhs;
  }
  friend DiagramMorphism operator*(DiagramMorphism lhs, const Polynomial& scalar) {
    return lhs *= scalar;
  }
  friend DiagramMorphism operator*(const Polynomial& scalar, DiagramMorphism rhs) {
    return rhs *= scalar;
  }

  friend bool operator==(const DiagramMorphism& a, const DiagramMorphism& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const DiagramMorphism& a, const DiagramMorphism& b) {
    return !(a == b);
  }

  /// Like "(t - 1)*{1 1'} + {1 | 1'}".
  std::string to_string() const;

 private:
  void add_term(const SetPartition& diagram, const Polynomial& coeff);

  int upper_;
  int lower_;
  std::map<SetPartition, Polynomial> terms_;

  friend DiagramMorphism compose(const DiagramMorphism&, const DiagramMorphism&);
  friend DiagramMorphism tensor(const DiagramMorphism&, const DiagramMorphism&);
};

std::ostream& operator<<(std::ostream& os, const DiagramMorphism& m);

/// "b after a": a: k -> l, b: l -> m, result k -> m. Removed interior
/// components contribute factors of t.
DiagramMorphism compose(const DiagramMorphism& a, const DiagramMorphism& b);

/// Side-by-side: a: k1 -> l1, b: k2 -> l2, result k1+k2 -> l1+l2 with b's
/// points placed to the right of a's.
DiagramMorphism tensor(const DiagramMorphism& a, const DiagramMorphism& b);

/// Composition of a single pair of diagrams; also reports the number of
/// removed interior components (the power of t). Exposed for tests.
std::pair<SetPartition, int> compose_diagrams(const SetPartition& a, const SetPartition& b);

/// The x-basis element x_pi expanded in plain diagrams, via the recursion
/// x_pi = pi - sum of x_tau over tau strictly coarser. Memoized and safe to
/// call from several threads.
DiagramMorphism x_basis_morphism(const SetPartition& pi);

// ---- evaluation at integer d -----------------------------------------------

/// Dense matrix over Q. Rows/columns index tuples in {0..d-1}^l / {0..d-1}^k
/// big-endian (first tensor factor most significant).
struct RationalMatrix {
  long rows = 0;
  long cols = 0;
  std::vector<Rational> data;  // row-major

  RationalMatrix() = default;
  RationalMatrix(long r, long c) : rows(r), cols(c), data(static_cast<std::size_t>(r * c)) {}
  static RationalMatrix identity(long n);

  Rational& at(long r, long c) { return data[static_cast<std::size_t>(r * cols + c)]; }
  const Rational& at(long r, long c) const {
    return data[static_cast<std::size_t>(r * cols + c)];
  }

  Rational trace() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  static RationalMatrix kronecker(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }
};

/// The evaluation functor at integer d >= 0 on plain diagrams (see file
/// comment). Coefficients evaluate at t = d.
RationalMatrix evaluate_diagram_functor(const DiagramMorphism& m, long d);

/// Evaluation of the single x-basis element x_pi by the strict
/// distinct-blocks rule, bypassing the Moebius expansion. Equals
/// evaluate_diagram_functor(x_basis_morphism(pi), d); exposed as an
/// independent cross-check.
RationalMatrix evaluate_xbasis_functor(const SetPartition& pi, long d);

// ---- distinguished morphisms ------------------------------------------------

/// unit: 1 -> X (one lower point, single block).
DiagramMorphism unit_morphism();
/// counit: X -> 1 (one upper point, single block).
DiagramMorphism counit_morphism();
/// merge: X tensor X -> X tensor X, all four points in one block (the
/// Frobenius multiplication composed with duplication).
DiagramMorphism merge_morphism();
/// crossing: X tensor X -> X tensor X, {{1,2'},{2,1'}} (the symmetry).
DiagramMorphism crossing_morphism();

/// The commutative-Frobenius generator pack of the one-point object.
struct FrobeniusGenerators {
  DiagramMorphism unit;            ///< 1 -> X
  DiagramMorphism counit;          ///< X -> 1
  DiagramMorphism multiplication;  ///< the 2 -> 2 single-block merge pattern
  DiagramMorphism duplication;     ///< the 2 -> 2 crossing
};
FrobeniusGenerators frobenius_generators();

/// The pair partition {{i, g(i)'}} of a permutation g.
SetPartition permutation_pattern(const Permutation& g);

/// The permutation diagram as a plain morphism.
DiagramMorphism permutation_morphism(const Permutation& g);

}  // namespace repst
