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
 * @file wreath.hpp
 * @brief Character theory of cyclic wreath products Z_c wr S_m and of
 *        centralizers of permutations, which are products of such factors.
 *
 * Both the conjugacy classes and the irreducible characters of Z_c wr S_m
 * are labeled by c-tuples of partitions with total size m (multipartitions):
 * classes by the cycle-product residues of the S_m-part cycles, irreducibles
 * by decomposing the base torus action. Character values are computed by
 * inducing from the block subgroup prod_j (Z_c wr S_{m_j}) the product of
 * one-dimensional twists zeta_c^{j w(D)} with symmetric-group characters
 * chi^{Lambda_j}(type(D)), where for a class label D the weight w(D) is
 * sum_i i * length(D^{(i)}) and type(D) is the union of the components.
 * The centralizer order of a class labeled D inside Z_c wr S_m is
 * prod_j z(D^{(j)}) c^{length(D^{(j)})}; this closed form is validated
 * against brute-force enumeration in the test suite.
 *
 * The centralizer of a permutation of cycle type mu is the product over
 * distinct cycle lengths c of Z_c wr S_{m_c}. Its classes/irreducibles are
 * tuples of multipartitions, one per factor. When two permutations with
 * disjoint supports are multiplied, centralizer class labels fuse by
 * componentwise union, and induction of an outer tensor product of
 * irreducibles decomposes by exact cyclotomic character arithmetic.
 */

#include <map>
#include <string>
#include <vector>

#include "repst/cyclotomic.hpp"
#include "repst/int_partition.hpp"
#include "repst/rational.hpp"

namespace repst {

/// A tuple of partitions indexed by slots 0..slots-1 (residues mod c).
class MultiPartition {
 public:
  MultiPartition() = default;
  explicit MultiPartition(std::vector<IntPartition> components);

  int slots() const { return static_cast<int>(components_.size()); }
  int total() const;
  const IntPartition& component(int slot) const;
  const std::vector<IntPartition>& components() const { return components_; }

  friend bool operator==(const MultiPartition& a, const MultiPartition& b) {
    return a.components_ == b.components_;
  }
  friend bool operator!=(const MultiPartition& a, const MultiPartition& b) { return !(a == b); }
  friend bool operator<(const MultiPartition& a, const MultiPartition& b);

  /// Like "[(2),()]".
  std::string to_string() const;

 private:
  std::vector<IntPartition> components_;
};

/// All multipartitions with the given slot count and total size. Order:
/// slot-0 size descending, partitions_of order within a size, later slots
/// recursively; the first entry is [(m),(),...].
std::vector<MultiPartition> multipartitions(int slots, int total);

/// Centralizer order of the class labeled by D inside Z_c wr S_m:
/// prod_j z(D^{(j)}) c^{length(D^{(j)})}.
Integer wreath_class_centralizer_order(int c, const MultiPartition& label);

/// Dimension of the irreducible labeled by Lambda: the multinomial
/// coefficient of the slot sizes times the product of hook-length counts.
Integer wreath_irrep_dimension(int c, const MultiPartition& label);

/// Character table of Z_c wr S_m; rows (irreducibles) and columns (classes)
/// are both labeled by multipartitions(c, m).
struct WreathTable {
  int c = 1;
  int m = 0;
  std::vector<MultiPartition> labels;
  Integer group_order;
  std::vector<Integer> centralizer_orders;
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Cyclotomic>> values;  ///< [irrep][class]

  int index_of(const MultiPartition& label) const;
};

/// Memoized table; c*m is capped by limits().wreath_table_max_points.
const WreathTable& wreath_character_table(int c, int m);

/// One factor Z_cycle wr S_mult of a centralizer.
struct WreathFactor {
  int cycle = 1;
  int mult = 0;

  friend bool operator==(const WreathFactor& a, const WreathFactor& b) {
    return a.cycle == b.cycle && a.mult == b.mult;
  }
  friend bool operator<(const WreathFactor& a, const WreathFactor& b) {
    return a.cycle != b.cycle ? a.cycle < b.cycle : a.mult < b.mult;
  }
};

/// The factor structure of the centralizer of a permutation with the given
/// cycle type; cycle lengths strictly increasing.
struct CentralizerDescriptor {
  std::vector<WreathFactor> factors;

  static CentralizerDescriptor from_cycle_type(const IntPartition& mu);

  int degree() const;  ///< the number of permuted points, sum of cycle*mult
  Integer group_order() const;
  /// Index of the factor with the given cycle length, or -1.
  int factor_index(int cycle) const;

  friend bool operator==(const CentralizerDescriptor& a, const CentralizerDescriptor& b) {
    return a.factors == b.factors;
  }
  friend bool operator<(const CentralizerDescriptor& a, const CentralizerDescriptor& b) {
    return a.factors < b.factors;
  }
  /// Like "Z1wrS2 x Z3wrS1"; "1" when trivial.
  std::string to_string() const;
};

/// A class or irreducible label of a centralizer: one multipartition per
/// factor, aligned with the descriptor's factor list.
struct CentralizerLabel {
  std::vector<MultiPartition> factors;

  friend bool operator==(const CentralizerLabel& a, const CentralizerLabel& b) {
    return a.factors == b.factors;
  }
  friend bool operator!=(const CentralizerLabel& a, const CentralizerLabel& b) {
    return !(a == b);
  }
  friend bool operator<(const CentralizerLabel& a, const CentralizerLabel& b) {
    return a.factors < b.factors;
  }
  /// Like "[(1,1)] x [(1),()]".
  std::string to_string() const;
};
using CentralizerIrrep = CentralizerLabel;
using CentralizerClass = CentralizerLabel;

/// Character table of a centralizer: the factor-wise product of wreath
/// tables. Labels run through the cartesian product, last factor fastest.
struct CentralizerTable {
  CentralizerDescriptor descriptor;
  std::vector<CentralizerLabel> labels;
  Integer group_order;
  std::vector<Integer> centralizer_orders;
  std::vector<Integer> class_sizes;
  std::vector<std::vector<Cyclotomic>> values;  ///< [irrep][class]

  int index_of(const CentralizerLabel& label) const;
};

CentralizerTable centralizer_character_table(const CentralizerDescriptor& descriptor);

/// The trivial character's label: slot 0 carries (m) in every factor.
CentralizerIrrep trivial_centralizer_irrep(const CentralizerDescriptor& descriptor);

/// The restriction of the ambient sign character: for a factor with cycle
/// length c the base twist sits in slot c/2 (c even) or 0 (c odd), with
/// S_m-part (m) for even c and (1^m) for odd c.
CentralizerIrrep sign_centralizer_irrep(const CentralizerDescriptor& descriptor);

Integer centralizer_irrep_dimension(const CentralizerDescriptor& descriptor,
                                    const CentralizerIrrep& irrep);

/// Merges two centralizer structures of permutations with disjoint supports.
CentralizerDescriptor fuse_descriptors(const CentralizerDescriptor& a,
                                       const CentralizerDescriptor& b);

/// The class label of the product of two commuting elements with disjoint
/// supports: per cycle length, componentwise union of the multipartitions.
CentralizerClass fuse_classes(const CentralizerDescriptor& a, const CentralizerClass& ca,
                              const CentralizerDescriptor& b, const CentralizerClass& cb);

/// Decomposes the induction of Va (x) Vb from the product of two disjoint
/// centralizers into the centralizer of the product permutation. Exact
/// cyclotomic arithmetic; verifies integrality of every multiplicity and the
/// dimension count, and returns the nonzero multiplicities.
std::map<CentralizerIrrep, long> decompose_induction(const CentralizerDescriptor& a,
                                                     const CentralizerIrrep& va,
                                                     const CentralizerDescriptor& b,
                                                     const CentralizerIrrep& vb);

}  // namespace repst
