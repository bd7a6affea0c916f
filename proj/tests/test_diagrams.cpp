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
 * @file test_diagrams.cpp
 * @brief Property tests for the diagram category: composition, the x-basis,
 * and the evaluation functor.
 *
 * The load-bearing identities: composition is associative and bilinear with
 * a power of t per removed interior component (cup after cap = t * id); the
 * x-basis change of basis is unitriangular for the coarsening order and
 * inverts via sum_{tau >= pi} x_tau = pi; evaluation at integer d is
 * functorial and monoidal, and the strict evaluation rule for x_pi agrees
 * with evaluating its expansion; the group-algebra embedding g -> x_{pattern}
 * is multiplicative.
 */

#include <map>
#include <random>
#include <vector>

#include "doctest.h"
#include "repst/diagram.hpp"
#include "repst/error.hpp"
#include "repst/half_braiding.hpp"
#include "repst/limits.hpp"
#include "test_support.hpp"

namespace {

using namespace repst;
using testing::random_choice;
using testing::random_rational;

DiagramMorphism random_morphism(std::mt19937& rng, int upper, int lower) {
  const auto diagrams = all_diagrams(upper, lower);
  std::uniform_int_distribution<int> terms(1, 3);
  DiagramMorphism m(upper, lower);
  const int count = terms(rng);
  for (int i = 0; i < count; ++i) {
    const Polynomial coeff =
        Polynomial(random_rational(rng)) + Polynomial::variable() * random_rational(rng);
    m += DiagramMorphism(random_choice(rng, diagrams), coeff);
  }
  return m;
}

TEST_CASE("compose: cup after cap gives t * id on the unit object") {
  const DiagramMorphism cup_cap = compose(unit_morphism(), counit_morphism());
  DiagramMorphism expected(0, 0);
  expected += DiagramMorphism(SetPartition(), Polynomial::variable());
  CHECK(cup_cap == expected);

  // The other order keeps the strand disconnected: a 1 -> 1 morphism with
  // two singleton blocks and no t factor.
  const DiagramMorphism cap_cup = compose(counit_morphism(), unit_morphism());
  CHECK(cap_cup == DiagramMorphism(SetPartition(1, 1, {{1}, {2}})));
}

TEST_CASE("compose: shape checks and identities") {
  std::mt19937 rng(20260310);
  const DiagramMorphism id2 = DiagramMorphism::identity(2);
  const DiagramMorphism m = random_morphism(rng, 2, 1);
  CHECK(compose(id2, m) == m);
  CHECK(compose(m, DiagramMorphism::identity(1)) == m);
  CHECK_THROWS_AS(compose(m, id2), Error);  // target 1 vs source 2
  CHECK(compose(m, DiagramMorphism::zero(1, 3)).is_zero());
}

TEST_CASE("compose: associative and bilinear on random triples") {
  std::mt19937 rng(20260311);
  std::uniform_int_distribution<int> side(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = side(rng), l = side(rng), m = side(rng), p = side(rng);
    const DiagramMorphism a = random_morphism(rng, k, l);
    const DiagramMorphism a2 = random_morphism(rng, k, l);
    const DiagramMorphism b = random_morphism(rng, l, m);
    const DiagramMorphism c = random_morphism(rng, m, p);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a + a2, b) == compose(a, b) + compose(a2, b));
    const Polynomial scalar = Polynomial::variable() - 2;
    CHECK(compose(a * scalar, b) == compose(a, b) * scalar);
    CHECK(compose(a, b * scalar) == compose(a, b) * scalar);
  }
}

TEST_CASE("tensor: shapes, bilinearity, interchange with compose") {
  std::mt19937 rng(20260312);
  for (int trial = 0; trial < 25; ++trial) {
    const DiagramMorphism a = random_morphism(rng, 1, 1);
    const DiagramMorphism b = random_morphism(rng, 1, 2);
    const DiagramMorphism c = random_morphism(rng, 1, 1);
    const DiagramMorphism d = random_morphism(rng, 2, 1);
    CHECK(tensor(a, b).upper() == 2);
    CHECK(tensor(a, b).lower() == 3);
    CHECK(tensor(a + c, b) == tensor(a, b) + tensor(c, b));
    // Interchange: (a tensor b) then (c tensor d) = (a;c) tensor (b;d).
    CHECK(compose(tensor(a, b), tensor(c, d)) ==
          tensor(compose(a, c), compose(b, d)));
  }
  CHECK(tensor(DiagramMorphism::identity(1), DiagramMorphism::identity(2)) ==
        DiagramMorphism::identity(3));
}

TEST_CASE("compose_diagrams: removed-component bookkeeping") {
  // unit then counit: the interior strand is removed as one component.
  const auto [diagram, removed] =
      compose_diagrams(unit_morphism().terms().begin()->first,
                       counit_morphism().terms().begin()->first);
  CHECK(diagram == SetPartition());
  CHECK(removed == 1);

  // Identity composed with itself removes nothing.
  const auto [id_diag, id_removed] =
      compose_diagrams(SetPartition::identity(2), SetPartition::identity(2));
  CHECK(id_diag == SetPartition::identity(2));
  CHECK(id_removed == 0);
}

TEST_CASE("x-basis: unitriangular over the coarsening order, <= 5 points") {
  for (int upper = 0; upper <= 3; ++upper) {
    for (int lower = 0; lower <= 2; ++lower) {
      if (upper + lower > 5) continue;
      for (const SetPartition& pi : all_diagrams(upper, lower)) {
        const DiagramMorphism x = x_basis_morphism(pi);
        // Coefficient of pi itself is exactly 1.
        CHECK(x.coefficient(pi) == Polynomial(1));
        // Support is contained in the coarsening interval above pi, and
        // every coefficient is a constant integer (a Moebius value).
        for (const auto& [tau, coeff] : x.terms()) {
          CHECK(tau.coarsens(pi));
          CHECK(coeff.is_constant());
          CHECK(coeff.as_constant().is_integer());
        }
      }
    }
  }
}

TEST_CASE("x-basis: Moebius round-trip pi = sum of x_tau over tau >= pi") {
  for (int upper = 0; upper <= 3; ++upper) {
    for (int lower = 0; lower <= 2; ++lower) {
      if (upper + lower > 5 || upper + lower == 0) continue;
      for (const SetPartition& pi : all_diagrams(upper, lower)) {
        DiagramMorphism sum = x_basis_morphism(pi);
        for (const SetPartition& tau : pi.strict_coarsenings()) {
          sum += x_basis_morphism(tau);
        }
        CHECK(sum == DiagramMorphism(pi));
      }
    }
  }
}

TEST_CASE("evaluation: functorial on composition, monoidal on tensor") {
  std::mt19937 rng(20260313);
  std::uniform_int_distribution<int> side(0, 2);
  std::uniform_int_distribution<long> dval(0, 4);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = side(rng), l = side(rng), m = side(rng);
    const long d = dval(rng);
    const DiagramMorphism a = random_morphism(rng, k, l);
    const DiagramMorphism b = random_morphism(rng, l, m);
    // compose(a, b) means b after a, so matrices multiply as F(b) * F(a).
    CHECK(evaluate_diagram_functor(compose(a, b), d) ==
          evaluate_diagram_functor(b, d) * evaluate_diagram_functor(a, d));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const DiagramMorphism a = random_morphism(rng, 1, 1);
    const DiagramMorphism b = random_morphism(rng, side(rng), 1);
    for (long d = 0; d <= 4; ++d) {
      CHECK(evaluate_diagram_functor(tensor(a, b), d) ==
            RationalMatrix::kronecker(evaluate_diagram_functor(a, d),
                                      evaluate_diagram_functor(b, d)));
    }
  }
  // Identity evaluates to the identity matrix of size d^k.
  CHECK(evaluate_diagram_functor(DiagramMorphism::identity(2), 3) ==
        RationalMatrix::identity(9));
}

TEST_CASE("evaluation: strict x-basis rule equals evaluating the expansion") {
  for (int upper = 0; upper <= 2; ++upper) {
    for (int lower = 0; lower <= 2; ++lower) {
      if (upper + lower == 0) continue;
      for (const SetPartition& pi : all_diagrams(upper, lower)) {
        for (long d = 0; d <= 4; ++d) {
          CHECK(evaluate_xbasis_functor(pi, d) ==
                evaluate_diagram_functor(x_basis_morphism(pi), d));
        }
      }
    }
  }
}

TEST_CASE("group-algebra embedding: multiplicative with unit x_1") {
  for (int n : {2, 3}) {
    const auto group = all_permutations(n);
    const DiagramMorphism unit =
        group_algebra_embedding(n, {{Permutation::identity(n), Rational(1)}});
    for (const Permutation& g : group) {
      const DiagramMorphism xg = group_algebra_embedding(n, {{g, Rational(1)}});
      CHECK(compose(unit, xg) == xg);
      CHECK(compose(xg, unit) == xg);
      for (const Permutation& h : group) {
        const DiagramMorphism xh = group_algebra_embedding(n, {{h, Rational(1)}});
        // compose(b, a) is "a after b", i.e. the algebra product x_a x_b.
        CHECK(compose(xh, xg) == group_algebra_embedding(n, {{g * h, Rational(1)}}));
      }
    }
  }
}

TEST_CASE("permutation diagrams compose contravariantly") {
  const Permutation g = Permutation::from_cycles(3, {{0, 1}});
  const Permutation h = Permutation::from_cycles(3, {{1, 2}});
  CHECK(compose(permutation_morphism(g), permutation_morphism(h)) ==
        permutation_morphism(h * g));
  CHECK(permutation_pattern(Permutation::identity(3)) == SetPartition::identity(3));
}

TEST_CASE("frobenius generators: single diagrams with coefficient 1") {
  const FrobeniusGenerators gen = frobenius_generators();
  for (const DiagramMorphism* m :
       {&gen.unit, &gen.counit, &gen.multiplication, &gen.duplication}) {
    CHECK(m->term_count() == 1);
    CHECK(m->terms().begin()->second == Polynomial(1));
  }
  CHECK(gen.unit.upper() == 0);
  CHECK(gen.unit.lower() == 1);
  CHECK(gen.counit.upper() == 1);
  CHECK(gen.counit.lower() == 0);
  CHECK(gen.multiplication ==
        DiagramMorphism(SetPartition(2, 2, {{1, 2, 3, 4}})));
  CHECK(gen.duplication ==
        DiagramMorphism(SetPartition::from_signed(2, 2, {{1, -2}, {2, -1}})));
  CHECK(gen.multiplication == merge_morphism());
  CHECK(gen.duplication == crossing_morphism());
}

TEST_CASE("caps: the point-count limit is enforced") {
  CHECK_THROWS_AS(DiagramMorphism(7, 6), Error);  // 13 points > default cap 12
  CHECK_NOTHROW(DiagramMorphism(6, 6));
  try {
    DiagramMorphism(7, 6);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
  // Evaluation refuses d^k beyond the cap.
  CHECK_THROWS_AS(
      evaluate_diagram_functor(DiagramMorphism::identity(6), 1000000),
      Error);
}

}  // namespace
