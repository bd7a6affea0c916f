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
 * @file oracle.hpp
 * @brief Brute-force verification engines built from explicit permutation
 *        groups and exact matrix modules.
 *
 * Everything here trades asymptotics for directness: groups are stored as
 * sorted element lists, modules as one exact sparse cyclotomic matrix per
 * group element, induction walks cosets explicitly, and decomposition into
 * irreducibles is done by summing traces. These engines provide independent
 * answers that the character-theoretic fast paths are tested against:
 *
 *  - realize_centralizer builds the centralizer of a permutation as a
 *    concrete group, classifies its elements into wreath classes by cycle
 *    bookkeeping, and produces class representatives — validating the
 *    closed-form class data of the abstract tables by enumeration;
 *  - centralizer_irrep_module constructs each irreducible label as an
 *    honest matrix module (twisted seminormal modules induced from block
 *    subgroups, tensored across factors);
 *  - brute_induction_product recomputes the induction product of two center
 *    simples with explicit cosets and traces;
 *  - enumerate_graded_pairs induces every centralizer irreducible up to the
 *    full symmetric group and verifies the conjugation grading;
 *  - frobenius_check verifies that explicit induction along a subgroup pair
 *    carries the expected separable Frobenius structure (multiplication,
 *    comultiplication, unit, counit, exchange laws, equivariance).
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repst/center_tower.hpp"
#include "repst/cyclotomic.hpp"
#include "repst/int_partition.hpp"
#include "repst/permutation.hpp"
#include "repst/wreath.hpp"

namespace repst {

/// A finite permutation group as a closed, sorted element list.
struct PermGroup {
  int degree = 0;
  std::vector<Permutation> elements;

  /// Sorts, deduplicates and (for small lists) verifies closure.
  static PermGroup from_elements(int degree, std::vector<Permutation> elements);
  /// Closes the generators under multiplication; capped by
  /// limits().oracle_group_order_max.
  static PermGroup closure(int degree, const std::vector<Permutation>& generators);
  static PermGroup symmetric(int n);
  /// a acting on the first a.degree points, b shifted behind them.
  static PermGroup product_disjoint(const PermGroup& a, const PermGroup& b);

  long order() const { return static_cast<long>(elements.size()); }
  bool contains(const Permutation& g) const;
  /// Index in the sorted element list; NotFound if absent.
  int index_of(const Permutation& g) const;
  const Permutation& at(int index) const { return elements[static_cast<std::size_t>(index)]; }
};

/// A sparse column-major matrix over the cyclotomics.
struct LinearMap {
  int rows = 0;
  int cols = 0;
  /// columns[j] = sorted (row, value) pairs, no zero values.
  std::vector<std::vector<std::pair<int, Cyclotomic>>> columns;

  static LinearMap zero(int rows, int cols);
  static LinearMap identity(int n);

  /// Accumulates value at (row, col); call normalize() after bulk building.
  void add(int row, int col, const Cyclotomic& value);
  /// Sorts each column by row, merges duplicates, drops zeros.
  void normalize();

  Cyclotomic trace() const;

  /// Matrix product a*b (b applied first).
  friend LinearMap compose(const LinearMap& a, const LinearMap& b);
  static LinearMap kronecker(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }
};

/// A group represented by explicit matrices: action[i] belongs to
/// group.elements[i].
struct ExplicitModule {
  PermGroup group;
  int dim = 0;
  std::vector<LinearMap> action;

  const LinearMap& matrix_of(const Permutation& g) const;
};

ExplicitModule trivial_module(const PermGroup& group);
ExplicitModule sign_module(const PermGroup& group);
/// Pointwise tensor of two modules over the same group.
ExplicitModule tensor_modules(const ExplicitModule& a, const ExplicitModule& b);
/// Outer tensor over the disjoint product group.
ExplicitModule outer_tensor_module(const ExplicitModule& a, const ExplicitModule& b);

/// Exhaustively verifies the homomorphism property (quadratic in the group
/// order; intended for small groups).
bool verify_module(const ExplicitModule& module);

/// Character of a module: one trace per group element, element order.
std::vector<Cyclotomic> module_character(const ExplicitModule& module);

/// Induction along small.group <= big by explicit cosets. The coset
/// representatives are chosen deterministically (scan order, identity
/// first), so repeated calls agree.
struct InducedModule {
  ExplicitModule module;
  std::vector<Permutation> coset_reps;
  int inner_dim = 0;
};
InducedModule induce_module(const ExplicitModule& small, const PermGroup& big);

/// Young's seminormal form of the irreducible S_m-module of a shape:
/// exact rational matrices on the standard-tableaux basis.
class SeminormalRep {
 public:
  explicit SeminormalRep(const IntPartition& shape);

  int degree() const { return degree_; }
  int dim() const;
  /// Matrix of any permutation of matching degree, by word decomposition
  /// into adjacent transpositions.
  LinearMap matrix_of(const Permutation& g) const;

 private:
  IntPartition shape_;
  int degree_ = 0;
  int dim_ = 0;
  std::vector<LinearMap> adjacent_;  ///< matrices of the s_i
};

// ---- concrete centralizers ----------------------------------------------------

/// The canonical permutation of a cycle type: cycles on consecutive points,
/// shortest cycles first.
Permutation canonical_permutation(const IntPartition& mu);

/// A centralizer made concrete: the group, its factor structure, and the
/// cycle lists the wreath coordinates refer to.
struct RealizedCentralizer {
  Permutation sigma;
  CentralizerDescriptor descriptor;
  PermGroup group;
  /// factor_cycles[f][i] = the i-th cycle of the f-th factor, listed as
  /// (base, sigma(base), sigma^2(base), ...), bases increasing.
  std::vector<std::vector<std::vector<int>>> factor_cycles;
};

RealizedCentralizer realize_centralizer(const IntPartition& mu);
RealizedCentralizer realize_centralizer_of(const Permutation& sigma);

/// Wreath coordinates of one factor of a centralizer element: where each
/// cycle goes and the twist exponent picked up on the way.
struct FactorCoordinates {
  std::vector<int> cycle_image;
  std::vector<int> twists;
};
FactorCoordinates factor_coordinates(const RealizedCentralizer& rc, int factor,
                                     const Permutation& z);

/// The conjugacy-class label of a centralizer element.
CentralizerClass classify_element(const RealizedCentralizer& rc, const Permutation& z);

/// A representative element with the given class label.
Permutation class_representative(const RealizedCentralizer& rc, const CentralizerClass& label);

/// Counts every group element by class label (brute enumeration).
std::map<CentralizerClass, long> class_census(const RealizedCentralizer& rc);

/// The explicit irreducible module with the given label: per factor, a
/// zeta-twisted seminormal module induced from the block subgroup; factors
/// tensored together.
ExplicitModule centralizer_irrep_module(const RealizedCentralizer& rc,
                                        const CentralizerIrrep& irrep);

/// Decomposes a module over rc.group by character inner products against the
/// abstract table; verifies integrality.
std::map<CentralizerIrrep, long> brute_decompose(const RealizedCentralizer& rc,
                                                 const ExplicitModule& module);

/// The induction product recomputed with explicit modules, cosets and
/// traces.
TowerElement brute_induction_product(const CenterSimple& a, const CenterSimple& b);

/// For every cycle type of n and every centralizer irreducible, builds the
/// explicit module, induces it to S_n, and verifies the conjugation grading
/// of the induced basis. pairs counts the (cycle type, irreducible) pairs.
struct GradedPairCensus {
  int n = 0;
  long pairs = 0;
  bool all_consistent = false;
};
GradedPairCensus enumerate_graded_pairs(int n);

// ---- Frobenius structure of induction -----------------------------------------

/// Results of the separable-Frobenius verification for induction along
/// v.group <= big, on the module triple (v, w, u).
struct FrobeniusReport {
  bool separability = false;        ///< mu . delta is the identity
  bool exchange_left = false;       ///< delta after mu equals (mu x 1)(1 x delta)
  bool exchange_right = false;      ///< delta after mu equals (1 x mu)(delta x 1)
  bool unit_left = false;           ///< mu_{1,V} . (eta x 1) is the identity
  bool unit_right = false;          ///< mu_{V,1} . (1 x eta) is the identity
  bool counit_left = false;         ///< (eps x 1) . delta_{1,V} is the identity
  bool counit_right = false;        ///< (1 x eps) . delta_{V,1} is the identity
  bool mu_equivariant = false;      ///< mu commutes with every group action
  bool delta_equivariant = false;   ///< delta commutes with every group action
  bool eta_equivariant = false;     ///< eta lands in the invariants
  bool eps_equivariant = false;     ///< eps is constant on orbits

  bool passed() const;
  std::string to_string() const;
};

FrobeniusReport frobenius_check(const ExplicitModule& v, const ExplicitModule& w,
                                const ExplicitModule& u, const PermGroup& big);

}  // namespace repst
