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
 * @file test_sn_characters.cpp
 * @brief Symmetric-group character tables, Pieri induction, and the
 *        generic Grothendieck-ring structure constants.
 */

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "repst/error.hpp"
#include "repst/int_partition.hpp"
#include "repst/limits.hpp"
#include "repst/rational.hpp"
#include "repst/sn_characters.hpp"
#include "test_support.hpp"

namespace {

using namespace repst;

// Runs first (doctest preserves declaration order): the table for n = 5 has
// not been computed in this process yet, so building it must create the
// disk-cache file.
TEST_CASE("first table construction writes the disk cache") {
  testing::CacheScope scope("sn-table");
  const auto& table = sn_character_table(5);
  const auto path = scope.dir() / "sn_5.json";
  REQUIRE(std::filesystem::exists(path));

  std::ifstream in(path);
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc.at("n").get<int>() == 5);
  const auto& rows = doc.at("values");
  REQUIRE(rows.size() == table.labels.size());
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    const auto& row = rows.at(table.labels[i].to_string());
    REQUIRE(row.size() == table.labels.size());
    for (std::size_t j = 0; j < table.labels.size(); ++j) {
      CHECK(Integer(row[j].get<std::string>()) == table.values[i][j]);
    }
  }
}

TEST_CASE("character values of S_3 and S_4 are the classical tables") {
  // Classes in deterministic label order: (3), (2,1), (1,1,1).
  const IntPartition lam21({2, 1});
  const std::vector<Integer> expected21{Integer(-1), Integer(0), Integer(2)};
  const auto classes3 = partitions_of(3);
  for (std::size_t j = 0; j < classes3.size(); ++j) {
    CHECK(sn_character(lam21, classes3[j]) == expected21[j]);
  }

  // Classes of S_4 in label order: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
  const auto& t4 = sn_character_table(4);
  REQUIRE(t4.labels == partitions_of(4));
  const std::map<std::vector<int>, std::vector<long>> rows{
      {{4}, {1, 1, 1, 1, 1}},
      {{3, 1}, {-1, 0, -1, 1, 3}},
      {{2, 2}, {0, -1, 2, 0, 2}},
      {{2, 1, 1}, {1, 0, -1, -1, 3}},
      {{1, 1, 1, 1}, {-1, 1, 1, -1, 1}},
  };
  for (const auto& [parts, values] : rows) {
    const int i = t4.index_of(IntPartition(parts));
    for (std::size_t j = 0; j < values.size(); ++j) {
      CHECK(t4.values[i][j] == Integer(values[j]));
    }
  }
  CHECK(t4.class_sizes ==
        std::vector<Integer>{Integer(6), Integer(8), Integer(3), Integer(6), Integer(1)});
}

TEST_CASE("row and column orthogonality for every table up to n = 7") {
  for (int n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const auto& table = sn_character_table(n);
    const std::size_t k = table.labels.size();
    REQUIRE(table.labels == partitions_of(n));
    const Integer order = factorial(n);

    // Row orthogonality: sum_mu |C_mu| chi_i(mu) chi_j(mu) = delta_ij n!.
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i; j < k; ++j) {
        Integer sum(0);
        for (std::size_t m = 0; m < k; ++m) {
          sum += table.class_sizes[m] * table.values[i][m] * table.values[j][m];
        }
        CHECK(sum == (i == j ? order : Integer(0)));
      }
    }

    // Column orthogonality: sum_lambda chi(mu) chi(nu) = delta_mu_nu z_mu.
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a; b < k; ++b) {
        Integer sum(0);
        for (std::size_t i = 0; i < k; ++i) {
          sum += table.values[i][a] * table.values[i][b];
        }
        CHECK(sum == (a == b ? cycle_type_centralizer_order(table.labels[a]) : Integer(0)));
      }
    }

    // Sum of squared dimensions is the group order.
    const int identity_class = static_cast<int>(k) - 1;  // (1^n) is last
    Integer dim_sum(0);
    for (std::size_t i = 0; i < k; ++i) {
      dim_sum += table.values[i][identity_class] * table.values[i][identity_class];
    }
    CHECK(dim_sum == order);
  }
}

TEST_CASE("dimensions, standard rows, and conjugation symmetry") {
  for (int n = 1; n <= 7; ++n) {
    const auto& table = sn_character_table(n);
    const std::size_t k = table.labels.size();
    const int identity_class = table.index_of(IntPartition(std::vector<int>(n, 1)));

    const IntPartition trivial({n});
    const int trivial_row = table.index_of(trivial);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(table.values[trivial_row][j] == Integer(1));
    }

    for (std::size_t i = 0; i < k; ++i) {
      const IntPartition& lambda = table.labels[i];
      // chi(1^n) is the hook-length dimension.
      CHECK(table.values[i][identity_class] == hook_length_dimension(lambda));
      // chi^{lambda'}(mu) = sign(mu) chi^lambda(mu).
      const int conj_row = table.index_of(lambda.transpose());
      for (std::size_t j = 0; j < k; ++j) {
        const IntPartition& mu = table.labels[j];
        const int sign = (n - mu.length()) % 2 == 0 ? 1 : -1;
        CHECK(table.values[conj_row][j] == Integer(sign) * table.values[i][j]);
      }
    }

    if (n >= 2) {
      // The standard representation: chi^{(n-1,1)}(mu) = #(fixed points) - 1.
      const int std_row = table.index_of(IntPartition({n - 1, 1}));
      for (std::size_t j = 0; j < k; ++j) {
        const auto mults = table.labels[j].multiplicities();
        const auto it = mults.find(1);
        const int fixed = it == mults.end() ? 0 : it->second;
        CHECK(table.values[std_row][j] == Integer(fixed - 1));
      }
    }
  }
}

TEST_CASE("character argument and table bounds are validated") {
  CHECK_THROWS_AS(sn_character(IntPartition({2, 1}), IntPartition({2})), Error);
  CHECK_THROWS_AS(sn_character_table(-1), Error);
  CHECK_THROWS_AS(sn_character_table(limits().sn_table_max_n + 1), Error);
  CHECK_THROWS_AS(sn_character_table(3).index_of(IntPartition({4})), Error);
}

TEST_CASE("Pieri induction lists exactly the horizontal-strip removals") {
  // Frozen order for (2,1): the partition itself first, then reverse-lex.
  const auto from21 = pieri_induction(IntPartition({2, 1}));
  const std::vector<IntPartition> expected{IntPartition({2, 1}), IntPartition({2}),
                                           IntPartition({1, 1}), IntPartition({1})};
  CHECK(from21 == expected);

  for (int n = 0; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      CAPTURE(lambda.to_string());
      const auto reached = pieri_induction(lambda);
      REQUIRE_FALSE(reached.empty());
      CHECK(reached.front() == lambda);
      // Each entry appears once, is contained in lambda, and differs by a
      // horizontal strip; everything else of weight <= n is absent.
      std::set<IntPartition> seen(reached.begin(), reached.end());
      CHECK(seen.size() == reached.size());
      for (std::size_t i = 1; i < reached.size(); ++i) {
        CHECK(reached[i].size() < lambda.size());
      }
      for (int m = 0; m <= n; ++m) {
        for (const auto& mu : partitions_of(m)) {
          CHECK(seen.count(mu) == (is_horizontal_strip(lambda, mu) ? 1u : 0u));
        }
      }
    }
  }
}

TEST_CASE("generic Grothendieck product expands by Littlewood-Richardson") {
  const IntPartition s21({2, 1});
  const std::map<IntPartition, long> expected{
      {IntPartition({2, 2, 1, 1}), 1}, {IntPartition({2, 2, 2}), 1},
      {IntPartition({3, 1, 1, 1}), 1}, {IntPartition({3, 2, 1}), 2},
      {IntPartition({3, 3}), 1},       {IntPartition({4, 1, 1}), 1},
      {IntPartition({4, 2}), 1},
  };
  CHECK(grk0_interpolation_product(s21, s21) == expected);

  // The empty partition is the unit.
  const IntPartition empty;
  CHECK(grk0_interpolation_product(empty, s21) ==
        std::map<IntPartition, long>{{s21, 1}});
  CHECK(grk0_interpolation_product(empty, empty) ==
        std::map<IntPartition, long>{{empty, 1}});

  // Homogeneity, positivity, and agreement with lr_coefficient.
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (const auto& alpha : partitions_of(a)) {
        for (const auto& beta : partitions_of(b)) {
          const auto product = grk0_interpolation_product(alpha, beta);
          CHECK(product == grk0_interpolation_product(beta, alpha));
          for (const auto& [nu, mult] : product) {
            CHECK(nu.size() == a + b);
            CHECK(mult > 0);
            CHECK(mult == lr_coefficient(alpha, beta, nu));
          }
          // Completeness: absent keys have vanishing coefficient.
          for (const auto& nu : partitions_of(a + b)) {
            if (!product.count(nu)) CHECK(lr_coefficient(alpha, beta, nu) == 0);
          }
        }
      }
    }
  }
}

TEST_CASE("generic Grothendieck product is associative") {
  const std::vector<IntPartition> basis{IntPartition({1}), IntPartition({2}),
                                        IntPartition({1, 1}), IntPartition({2, 1})};
  auto multiply = [](const std::map<IntPartition, long>& element, const IntPartition& c) {
    std::map<IntPartition, long> result;
    for (const auto& [nu, mult] : element) {
      for (const auto& [kappa, extra] : grk0_interpolation_product(nu, c)) {
        result[kappa] += mult * extra;
      }
    }
    return result;
  };
  for (const auto& a : basis) {
    for (const auto& b : basis) {
      for (const auto& c : basis) {
        if (a.size() + b.size() + c.size() > 5) continue;
        CHECK(multiply(grk0_interpolation_product(a, b), c) ==
              multiply(grk0_interpolation_product(b, c), a));
      }
    }
  }
}

TEST_CASE("structure constants agree with induced-character inner products") {
  // c^lambda_{alpha,beta} = <chi^alpha x chi^beta, Res chi^lambda>, computed
  // with the exact 1/(z_mu1 z_mu2) pairing over pairs of cycle types.
  for (int a = 1; a <= 3; ++a) {
    for (int b = a; b <= 3; ++b) {
      if (a + b > 5) continue;
      for (const auto& alpha : partitions_of(a)) {
        for (const auto& beta : partitions_of(b)) {
          for (const auto& lambda : partitions_of(a + b)) {
            Rational pairing(0);
            for (const auto& mu1 : partitions_of(a)) {
              for (const auto& mu2 : partitions_of(b)) {
                const Rational weight =
                    Rational(1) / Rational(Integer(cycle_type_centralizer_order(mu1) *
                                                   cycle_type_centralizer_order(mu2)));
                const Integer traces = sn_character(alpha, mu1) * sn_character(beta, mu2) *
                                       sn_character(lambda, union_partitions(mu1, mu2));
                pairing += weight * Rational(traces);
              }
            }
            CHECK(pairing == Rational(lr_coefficient(alpha, beta, lambda)));
          }
        }
      }
    }
  }
}

TEST_CASE("padded-partition dimensions match the table") {
  // The interpolation basis label lambda specializes at n to the padded
  // partition (n - |lambda|, lambda); its dimension must agree with the
  // character table of S_n.
  for (int n = 2; n <= 7; ++n) {
    const auto& table = sn_character_table(n);
    const int identity_class = table.index_of(IntPartition(std::vector<int>(n, 1)));
    for (int k = 0; k <= 3; ++k) {
      for (const auto& lambda : partitions_of(k)) {
        if (lambda.part(0) > n - k) continue;
        const auto padded = pad_partition(lambda, n);
        CHECK(table.values[table.index_of(padded)][identity_class] ==
              hook_length_dimension(padded));
      }
    }
  }
}

}  // namespace
