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

/**
 * @file test_center_tower.cpp
 * @brief Simple objects of the center tower, the induction product, and
 *        Grothendieck-ring coordinates with block labels.
 */

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "repst/center_tower.hpp"
#include "repst/error.hpp"
#include "repst/int_partition.hpp"
#include "repst/rational.hpp"
#include "repst/sn_characters.hpp"
#include "repst/wreath.hpp"

namespace {

using namespace repst;

/// The simple 1^zeta_slot of degree k: a single k-cycle with the linear
/// character of Z_k picked by the slot.
CenterSimple one_cycle_simple(int k, int slot) {
  std::vector<IntPartition> mp(k);
  mp[slot] = IntPartition({1});
  return CenterSimple{k, IntPartition({k}), CentralizerIrrep{{MultiPartition(mp)}}};
}

Integer binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

TEST_CASE("center ranks") {
  const std::vector<long> expected{1, 1, 4, 8, 21, 39, 92};
  for (int n = 0; n < static_cast<int>(expected.size()); ++n) {
    CHECK(center_rank(n) == expected[n]);
    CHECK(center_simples(n).size() == static_cast<std::size_t>(expected[n]));
  }
}

TEST_CASE("simple enumeration is ordered, valid, and complete") {
  for (int n = 0; n <= 5; ++n) {
    const auto simples = center_simples(n);
    const auto types = partitions_of(n);

    std::set<CenterSimple> unique(simples.begin(), simples.end());
    CHECK(unique.size() == simples.size());

    std::size_t cursor = 0;
    for (const auto& mu : types) {
      const auto descriptor = CentralizerDescriptor::from_cycle_type(mu);
      const auto table = centralizer_character_table(descriptor);
      for (const auto& label : table.labels) {
        REQUIRE(cursor < simples.size());
        const CenterSimple& simple = simples[cursor++];
        CHECK(simple.n == n);
        CHECK(simple.mu == mu);
        CHECK(simple.irrep == label);
        CHECK_NOTHROW(validate_simple(simple));
      }
    }
    CHECK(cursor == simples.size());
  }
}

TEST_CASE("simple rendering") {
  const auto simples = center_simples(2);
  REQUIRE(simples.size() == 4);
  CHECK(simples[0].to_string() == "n=2 mu=(2) V=[(1),()]");
  CHECK(simples[1].to_string() == "n=2 mu=(2) V=[(),(1)]");
  CHECK(simples[2].to_string() == "n=2 mu=(1,1) V=[(2)]");
  CHECK(simples[3].to_string() == "n=2 mu=(1,1) V=[(1,1)]");
}

TEST_CASE("simple validation rejects mismatched labels") {
  // Cycle type must partition n.
  CHECK_THROWS_AS(
      validate_simple(CenterSimple{3, IntPartition({2}),
                                   CentralizerIrrep{{MultiPartition({IntPartition(),
                                                                     IntPartition({1})})}}}),
      Error);
  // Factor count must match the centralizer structure.
  CHECK_THROWS_AS(validate_simple(CenterSimple{2, IntPartition({2}), CentralizerIrrep{}}),
                  Error);
  // Slot count of each multipartition must match the cycle length.
  CHECK_THROWS_AS(
      validate_simple(CenterSimple{2, IntPartition({2}),
                                   CentralizerIrrep{{MultiPartition({IntPartition({1})})}}}),
      Error);
  // Total size of each multipartition must match the factor multiplicity.
  CHECK_THROWS_AS(
      validate_simple(CenterSimple{2, IntPartition({2}),
                                   CentralizerIrrep{{MultiPartition({IntPartition({2}),
                                                                     IntPartition()})}}}),
      Error);
}

TEST_CASE("squared dimensions add up to the double's dimension") {
  // The sum over all simples of the n-th center of dim^2 is (n!)^2.
  for (int n = 0; n <= 5; ++n) {
    Integer sum(0);
    for (const auto& simple : center_simples(n)) {
      const Integer dim = center_simple_dimension(simple);
      CHECK(dim > 0);
      sum += dim * dim;
    }
    const Integer order = factorial(n);
    CHECK(sum == order * order);
  }
}

TEST_CASE("products of transposition simples") {
  // Degree 2 + 2: both classes on a pair of 2-cycles.
  const auto simples2 = center_simples(2);
  const auto& triv2 = simples2[0];   // mu=(2), trivial character
  const auto& sign2 = simples2[1];   // mu=(2), twisted character

  const auto plus = induction_product(triv2, triv2);
  REQUIRE(plus.size() == 2);
  const IntPartition mu22({2, 2});
  const CenterSimple v_pp{4, mu22,
                          CentralizerIrrep{{MultiPartition({IntPartition({2}), IntPartition()})}}};
  const CenterSimple v_pm{4, mu22,
                          CentralizerIrrep{
                              {MultiPartition({IntPartition({1, 1}), IntPartition()})}}};
  CHECK(plus.at(v_pp) == 1);
  CHECK(plus.at(v_pm) == 1);

  const auto minus = induction_product(sign2, sign2);
  REQUIRE(minus.size() == 2);
  const CenterSimple v_mp{4, mu22,
                          CentralizerIrrep{{MultiPartition({IntPartition(), IntPartition({2})})}}};
  const CenterSimple v_mm{4, mu22,
                          CentralizerIrrep{
                              {MultiPartition({IntPartition(), IntPartition({1, 1})})}}};
  CHECK(minus.at(v_mp) == 1);
  CHECK(minus.at(v_mm) == 1);

  const auto mixed = induction_product(triv2, sign2);
  REQUIRE(mixed.size() == 1);
  const CenterSimple v_2{4, mu22,
                         CentralizerIrrep{{MultiPartition({IntPartition({1}), IntPartition({1})})}}};
  CHECK(mixed.at(v_2) == 1);
  CHECK(mixed == induction_product(sign2, triv2));
}

TEST_CASE("products of long-cycle simples with twisted characters") {
  for (int k : {3, 4}) {
    CAPTURE(k);
    for (int slot1 = 1; slot1 < k; ++slot1) {
      for (int slot2 = slot1; slot2 < k; ++slot2) {
        const auto a = one_cycle_simple(k, slot1);
        const auto b = one_cycle_simple(k, slot2);
        const auto product = induction_product(a, b);
        const IntPartition mukk({k, k});
        if (slot1 == slot2) {
          // Same character: splits into the symmetric and antisymmetric parts.
          REQUIRE(product.size() == 2);
          std::vector<IntPartition> symmetric(k), antisymmetric(k);
          symmetric[slot1] = IntPartition({2});
          antisymmetric[slot1] = IntPartition({1, 1});
          CHECK(product.at(CenterSimple{2 * k, mukk,
                                        CentralizerIrrep{{MultiPartition(symmetric)}}}) == 1);
          CHECK(product.at(CenterSimple{2 * k, mukk,
                                        CentralizerIrrep{{MultiPartition(antisymmetric)}}}) ==
                1);
        } else {
          // Distinct characters: a single two-dimensional simple.
          REQUIRE(product.size() == 1);
          std::vector<IntPartition> mixed(k);
          mixed[slot1] = IntPartition({1});
          mixed[slot2] = IntPartition({1});
          const CenterSimple expected{2 * k, mukk,
                                      CentralizerIrrep{{MultiPartition(mixed)}}};
          CHECK(product.at(expected) == 1);
          CHECK(centralizer_irrep_dimension(
                    CentralizerDescriptor::from_cycle_type(mukk), expected.irrep) ==
                Integer(2));
        }
      }
    }
  }
}

TEST_CASE("product grading and dimension bookkeeping") {
  for (int n = 1; n <= 3; ++n) {
    for (int m = n; m <= 3; ++m) {
      if (n + m > 5) continue;
      for (const auto& a : center_simples(n)) {
        for (const auto& b : center_simples(m)) {
          const auto product = induction_product(a, b);
          REQUIRE_FALSE(product.empty());
          const IntPartition fused_type = union_partitions(a.mu, b.mu);
          Integer total(0);
          for (const auto& [simple, mult] : product) {
            CHECK(mult > 0);
            CHECK(simple.n == n + m);
            CHECK(simple.mu == fused_type);
            CHECK_NOTHROW(validate_simple(simple));
            total += Integer(mult) * center_simple_dimension(simple);
          }
          CHECK(total == binomial(n + m, n) * center_simple_dimension(a) *
                             center_simple_dimension(b));
        }
      }
    }
  }
}

TEST_CASE("the induction product is commutative and associative") {
  for (int n = 1; n <= 2; ++n) {
    for (int m = n; m <= 4 - n; ++m) {
      for (const auto& a : center_simples(n)) {
        for (const auto& b : center_simples(m)) {
          CHECK(induction_product(a, b) == induction_product(b, a));
        }
      }
    }
  }

  // Associativity through the bilinear extension, total degree <= 5.
  const auto deg1 = center_simples(1);
  const auto deg2 = center_simples(2);
  REQUIRE(deg1.size() == 1);
  for (const auto& a : deg2) {
    for (const auto& b : deg2) {
      const TowerElement ea{{a, 1}}, eb{{b, 1}}, ec{{deg1.front(), 1}};
      CHECK(induction_product(induction_product(ea, eb), ec) ==
            induction_product(ea, induction_product(eb, ec)));
    }
  }
}

TEST_CASE("bilinear extension distributes over sums") {
  const auto simples = center_simples(2);
  const TowerElement zero;
  const TowerElement sum{{simples[0], 2}, {simples[2], 1}};
  const TowerElement single{{simples[1], 3}};

  CHECK(induction_product(zero, sum).empty());
  CHECK(induction_product(sum, zero).empty());

  TowerElement expected;
  for (const auto& [a, ca] : sum) {
    for (const auto& [b, cb] : single) {
      for (const auto& [s, m] : induction_product(a, b)) {
        expected[s] += ca * cb * m;
      }
    }
  }
  CHECK(induction_product(sum, single) == expected);
}

TEST_CASE("tower rendering") {
  const auto e1 = one_cycle_simple(3, 1);
  CHECK(e1.to_string() == "n=3 mu=(3) V=[(),(1),()]");
  CHECK(tower_to_string(induction_product(e1, e1)) ==
        "(n=6 mu=(3,3) V=[(),(1,1),()]) + (n=6 mu=(3,3) V=[(),(2),()])");
  CHECK(tower_to_string(TowerElement{}) == "0");
}

TEST_CASE("Grothendieck coordinates round-trip through simples") {
  for (int n = 0; n <= 5; ++n) {
    for (const auto& simple : center_simples(n)) {
      const auto basis = grk0_from_simple(simple);
      // mu0 holds no fixed points; lambda absorbs them all.
      for (int part : basis.mu0.parts()) CHECK(part >= 2);
      CHECK(basis.mu0.size() + basis.lambda.size() == n);
      CHECK(simple_from_grk0(basis) == simple);
    }
  }

  const auto simple = center_simples(3)[3];  // mu = (2,1), trivial V
  const auto basis = grk0_from_simple(simple);
  CHECK(basis.to_string() == "mu0=(2) V0=[(1),()] lambda=(1)");
  CHECK(basis.mu0 == IntPartition({2}));
  CHECK(basis.lambda == IntPartition({1}));
}

TEST_CASE("anchored Grothendieck product reduces to Littlewood-Richardson") {
  const GrK0Basis unit{IntPartition(), CentralizerIrrep{}, IntPartition()};
  for (int a = 0; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          const GrK0Basis ca{IntPartition(), CentralizerIrrep{}, lambda};
          const GrK0Basis cb{IntPartition(), CentralizerIrrep{}, mu};
          const auto product = grk0_center_product(ca, cb);
          std::map<GrK0Basis, long> expected;
          for (const auto& [nu, mult] : grk0_interpolation_product(lambda, mu)) {
            expected.emplace(GrK0Basis{IntPartition(), CentralizerIrrep{}, nu}, mult);
          }
          CHECK(product == expected);
        }
      }
    }
  }
  CHECK(grk0_center_product(unit, unit) ==
        std::map<GrK0Basis, long>{{unit, 1}});
}

TEST_CASE("Grothendieck product transports the induction product") {
  for (int n = 1; n <= 2; ++n) {
    for (int m = n; m <= 3; ++m) {
      if (n + m > 5) continue;
      for (const auto& a : center_simples(n)) {
        for (const auto& b : center_simples(m)) {
          const auto via_grk0 =
              grk0_center_product(grk0_from_simple(a), grk0_from_simple(b));
          CHECK(via_grk0 ==
                grk0_center_product(grk0_from_simple(b), grk0_from_simple(a)));
          std::map<GrK0Basis, long> expected;
          for (const auto& [simple, mult] : induction_product(a, b)) {
            expected.emplace(grk0_from_simple(simple), mult);
          }
          CHECK(via_grk0 == expected);
        }
      }
    }
  }
}

TEST_CASE("generic blocks separate every fixed-point label") {
  for (int n = 0; n <= 4; ++n) {
    const auto blocks = center_blocks(n, std::nullopt);
    std::size_t members = 0;
    for (const auto& [label, simples] : blocks) {
      CHECK(simples.size() == 1);
      members += simples.size();
      for (const auto& simple : simples) {
        const auto basis = grk0_from_simple(simple);
        CHECK(label == block_label(basis, std::nullopt));
        CHECK(label.block_id == basis.lambda.to_string());
      }
    }
    CHECK(members == center_simples(n).size());
  }

  const auto basis = grk0_from_simple(center_simples(2)[2]);
  CHECK(block_label(basis, std::nullopt).to_string() == "mu0=() V0=[] block=(2)");
}

TEST_CASE("a custom block oracle can merge fixed-point labels") {
  // Group lambdas by their size parity and record the parameter passed in.
  std::vector<std::optional<long>> seen;
  const BlockOracle parity = [&seen](const IntPartition& lambda,
                                     const std::optional<long>& t) {
    seen.push_back(t);
    return lambda.size() % 2 == 0 ? std::string("even") : std::string("odd");
  };

  const auto blocks = center_blocks(3, 7, parity);
  REQUIRE_FALSE(seen.empty());
  for (const auto& t : seen) {
    REQUIRE(t.has_value());
    CHECK(*t == 7);
  }
  std::size_t members = 0;
  for (const auto& [label, simples] : blocks) {
    CHECK((label.block_id == "even" || label.block_id == "odd"));
    members += simples.size();
    for (const auto& simple : simples) {
      const auto basis = grk0_from_simple(simple);
      CHECK(label.mu0 == basis.mu0);
      CHECK(label.block_id == (basis.lambda.size() % 2 == 0 ? "even" : "odd"));
    }
  }
  CHECK(members == center_simples(3).size());

  // The trivial and sign simples on (1,1,1) share mu0 = (), and (3) with
  // (1) have distinct parities, so merging happens: fewer blocks than simples.
  CHECK(blocks.size() < center_simples(3).size());
}

}  // namespace
