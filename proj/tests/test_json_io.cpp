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
 * @file test_json_io.cpp
 * @brief JSON encodings: deterministic bytes, round trips, big-integer
 *        stringification, and parse-error reporting.
 */

#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "repst/error.hpp"
#include "repst/half_braiding.hpp"
#include "repst/json_io.hpp"

namespace {

using namespace repst;

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& error) {
    return error.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

TEST_CASE("integers are numbers up to 2^53 and strings beyond") {
  CHECK(json_of(Integer(0)).dump() == "0");
  CHECK(json_of(Integer(-42)).dump() == "-42");
  CHECK(json_of(Integer(9007199254740992L)).dump() == "9007199254740992");
  CHECK(json_of(Integer("9007199254740993")).dump() == "\"9007199254740993\"");
  CHECK(json_of(Integer("-9007199254740993")).dump() == "\"-9007199254740993\"");
  CHECK(json_of(factorial(20)).dump() == "\"2432902008176640000\"");

  for (const char* text : {"0", "-1", "9007199254740993", "-123456789012345678901234567890"}) {
    const Integer value(text);
    CHECK(integer_from_json(json_of(value)) == value);
  }
  CHECK(integer_from_json(parse_json("7")) == Integer(7));
  CHECK(integer_from_json(parse_json("\"7\"")) == Integer(7));
}

TEST_CASE("rationals use p/q strings only when needed") {
  CHECK(json_of(Rational(-3)).dump() == "-3");
  CHECK(json_of(Rational(1, 2)).dump() == "\"1/2\"");
  CHECK(json_of(Rational(Integer(1), Integer("9007199254740993"))).dump() ==
        "\"1/9007199254740993\"");
  CHECK(json_of(Rational(Integer("9007199254740993"), Integer(1))).dump() ==
        "\"9007199254740993\"");

  for (const Rational value : {Rational(0), Rational(5), Rational(-7, 3), Rational(355, 113),
                               Rational(factorial(20)) / Rational(7)}) {
    CHECK(rational_from_json(json_of(value)) == value);
  }
}

TEST_CASE("polynomials are ascending coefficient arrays") {
  CHECK(json_of(Polynomial()).dump() == "[]");
  CHECK(json_of(Polynomial::variable()).dump() == "[0,1]");
  const Polynomial p = Polynomial::variable() * Polynomial::variable() -
                       Polynomial(Rational(3)) * Polynomial::variable() +
                       Polynomial(Rational(1, 2));
  CHECK(json_of(p).dump() == "[\"1/2\",-3,1]");
  CHECK(polynomial_from_json(json_of(p)) == p);
  CHECK(polynomial_from_json(parse_json("[]")) == Polynomial());
}

TEST_CASE("cyclotomics collapse to rationals when possible") {
  CHECK(json_of(Cyclotomic(Rational(5, 3))).dump() == "\"5/3\"");
  CHECK(json_of(Cyclotomic::root_of_unity(2, 1)).dump() == "-1");
  CHECK(json_of(Cyclotomic::root_of_unity(3, 1)).dump() == "{\"n\":3,\"c\":[0,1]}");
  CHECK(json_of(Cyclotomic::root_of_unity(4, 1)).dump() == "{\"n\":4,\"c\":[0,1]}");

  const std::vector<Cyclotomic> values{
      Cyclotomic(Rational(-2, 7)),
      Cyclotomic::root_of_unity(5, 2),
      Cyclotomic::root_of_unity(12, 7) + Cyclotomic(Rational(1, 3)),
      Cyclotomic::root_of_unity(8, 1).conjugate(),
  };
  for (const auto& value : values) {
    CHECK(cyclotomic_from_json(json_of(value)) == value);
  }
}

TEST_CASE("partitions and multipartitions") {
  CHECK(json_of(IntPartition({3, 1, 1})).dump() == "[3,1,1]");
  CHECK(json_of(IntPartition()).dump() == "[]");
  CHECK(partition_from_json(parse_json("[3,1,1]")) == IntPartition({3, 1, 1}));

  const MultiPartition mp({IntPartition({2}), IntPartition()});
  CHECK(json_of(mp).dump() == "[[2],[]]");
  CHECK(multipartition_from_json(json_of(mp)) == mp);

  CHECK(code_of([] { partition_from_json(parse_json("[1,2]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { partition_from_json(parse_json("[0]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { partition_from_json(parse_json("{}")); }) == ErrorCode::ParseError);
}

TEST_CASE("set partitions use signed points") {
  const SetPartition id2(2, 2, {{1, 3}, {2, 4}});
  CHECK(json_of(id2).dump() == "{\"k\":2,\"l\":2,\"blocks\":[[1,-1],[2,-2]]}");
  CHECK(set_partition_from_json(json_of(id2)) == id2);

  const SetPartition crossing(2, 2, {{1, 4}, {2, 3}});
  CHECK(set_partition_from_json(json_of(crossing)) == crossing);
  // Every diagram on <= 3+3 points round-trips.
  for (const auto& diagram : all_diagrams(3, 3)) {
    CHECK(set_partition_from_json(json_of(diagram)) == diagram);
  }

  CHECK(code_of([] { set_partition_from_json(parse_json("{\"k\":1,\"l\":0}")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          set_partition_from_json(parse_json("{\"k\":1,\"l\":1,\"blocks\":[[1]]}"));
        }) == ErrorCode::ParseError);  // -1 is missing
  CHECK(code_of([] {
          set_partition_from_json(parse_json("{\"k\":1,\"l\":1,\"blocks\":[[1,-1],[2,-2]]}"));
        }) == ErrorCode::ParseError);  // out of range
}

TEST_CASE("diagram morphisms carry polynomial coefficients") {
  const auto loop = compose(unit_morphism(), counit_morphism());
  CHECK(json_of(loop).dump() == "{\"k\":0,\"l\":0,\"terms\":[{\"blocks\":[],\"coeff\":[0,1]}]}");
  CHECK(morphism_from_json(json_of(loop)) == loop);

  // A two-term morphism with mixed coefficients.
  DiagramMorphism m = DiagramMorphism::identity(2) * Polynomial(Rational(1, 2)) +
                      crossing_morphism() * Polynomial::variable();
  CHECK(morphism_from_json(json_of(m)) == m);
  CHECK(morphism_from_json(json_of(DiagramMorphism::zero(1, 2))) ==
        DiagramMorphism::zero(1, 2));

  CHECK(code_of([] { morphism_from_json(parse_json("{\"k\":0,\"l\":0}")); }) ==
        ErrorCode::ParseError);
}

TEST_CASE("centralizer labels and center simples") {
  const auto simples = center_simples(2);
  CHECK(json_of(simples[1]).dump() ==
        "{\"n\":2,\"mu\":[2],\"irrep\":{\"factors\":[{\"c\":2,\"multipartition\":[[],[1]]}]}}");
  for (const auto& simple : simples) {
    CHECK(center_simple_from_json(json_of(simple)) == simple);
    CHECK(centralizer_label_from_json(json_of(simple.irrep)) == simple.irrep);
  }

  // Shortcuts: "triv"/"sign" and n derived from mu.
  CHECK(center_simple_from_json(parse_json("{\"mu\":[2],\"irrep\":\"triv\"}")) == simples[0]);
  CHECK(center_simple_from_json(parse_json("{\"mu\":[2],\"irrep\":\"sign\"}")) == simples[1]);
  CHECK(center_simple_from_json(parse_json("{\"mu\":[1,1],\"irrep\":\"sign\"}")) == simples[3]);

  CHECK(code_of([] {
          center_simple_from_json(parse_json("{\"mu\":[2],\"irrep\":\"bogus\"}"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          center_simple_from_json(
              parse_json("{\"n\":3,\"mu\":[2],\"irrep\":\"triv\"}"));
        }) == ErrorCode::ParseError);  // n contradicts mu
  CHECK(code_of([] {
          centralizer_label_from_json(parse_json("{\"factors\":[{\"c\":2}]}"));
        }) == ErrorCode::ParseError);
}

TEST_CASE("tower elements serialize in map order") {
  const auto simples = center_simples(2);
  const auto product = induction_product(simples[0], simples[0]);
  CHECK(json_of(product).dump() ==
        "[{\"n\":4,\"mu\":[2,2],\"irrep\":{\"factors\":[{\"c\":2,\"multipartition\":"
        "[[1,1],[]]}]},\"mult\":1},{\"n\":4,\"mu\":[2,2],\"irrep\":{\"factors\":[{\"c\":2,"
        "\"multipartition\":[[2],[]]}]},\"mult\":1}]");
  CHECK(json_of(TowerElement{}).dump() == "[]");
}

TEST_CASE("Grothendieck coordinates and products") {
  const GrK0Basis b{IntPartition(), CentralizerIrrep{}, IntPartition({2})};
  CHECK(json_of(b).dump() == "{\"mu0\":[],\"v0\":{\"factors\":[]},\"lambda\":[2]}");
  CHECK(grk0_from_json(json_of(b)) == b);
  CHECK(grk0_from_json(parse_json("{\"mu0\":[],\"v0\":\"triv\",\"lambda\":[1,1]}")) ==
        GrK0Basis{IntPartition(), CentralizerIrrep{}, IntPartition({1, 1})});

  CHECK(json_of(grk0_center_product(b, b)).dump() ==
        "[{\"mu0\":[],\"v0\":{\"factors\":[]},\"lambda\":[2,2],\"mult\":1},"
        "{\"mu0\":[],\"v0\":{\"factors\":[]},\"lambda\":[3,1],\"mult\":1},"
        "{\"mu0\":[],\"v0\":{\"factors\":[]},\"lambda\":[4],\"mult\":1}]");

  const GrK0Basis anchored{IntPartition({2}),
                           CentralizerIrrep{{MultiPartition({IntPartition({1}), IntPartition()})}},
                           IntPartition({1})};
  CHECK(grk0_from_json(json_of(anchored)) == anchored);
  CHECK(code_of([] {
          grk0_from_json(parse_json("{\"mu0\":[1],\"v0\":\"triv\",\"lambda\":[]}"));
        }) == ErrorCode::ParseError);  // mu0 must not contain 1-parts
}

TEST_CASE("tables and reports are flat objects") {
  CHECK(json_of(sn_character_table(2)).dump() ==
        "{\"n\":2,\"labels\":[[2],[1,1]],\"class_sizes\":[1,1],\"values\":[[1,1],[-1,1]]}");
  CHECK(json_of(wreath_character_table(2, 1)).dump() ==
        "{\"c\":2,\"m\":1,\"group_order\":2,\"labels\":[[[1],[]],[[],[1]]],"
        "\"centralizer_orders\":[2,2],\"class_sizes\":[1,1],\"values\":[[1,1],[1,-1]]}");
  CHECK(json_of(CentralizerDescriptor::from_cycle_type(IntPartition({2, 1}))).dump() ==
        "{\"factors\":[{\"c\":1,\"m\":1},{\"c\":2,\"m\":1}]}");

  const auto e = group_algebra_embedding(1, trivial_idempotent({Permutation::identity(1)}));
  const auto report = check_center(e, half_braiding(Permutation::identity(1), e));
  CHECK(json_of(report).dump() ==
        "{\"unit_left\":true,\"unit_right\":true,\"merge_compat\":true,"
        "\"crossing_compat\":true,\"passed\":true}");

  const auto blocks = json_of(center_blocks(2, std::nullopt));
  REQUIRE(blocks.is_array());
  REQUIRE(blocks.size() == 4);
  CHECK(blocks[0].at("block_id").get<std::string>() == "(1,1)");
  CHECK(blocks[0].at("simples").size() == 1);
}

TEST_CASE("malformed documents raise ParseError") {
  CHECK(code_of([] { parse_json("{oops"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_json(""); }) == ErrorCode::ParseError);
  CHECK(code_of([] { integer_from_json(parse_json("1.5")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { integer_from_json(parse_json("\"seven\"")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json(parse_json("\"1/0\"")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { rational_from_json(parse_json("[1]")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { cyclotomic_from_json(parse_json("{\"n\":3}")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { multipartition_from_json(parse_json("[3]")); }) == ErrorCode::ParseError);
}

}  // namespace
