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

#include "repst/json_io.hpp"

#include <limits>

#include "repst/error.hpp"

namespace repst {

namespace {

// 2^53: the largest magnitude safely represented by every JSON consumer.
const Integer kSafeBound = Integer(1) << 53;

[[noreturn]] void parse_fail(const std::string& message, const std::string& context = "") {
  fail(ErrorCode::ParseError, message, context);
}

long small_int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_fail(std::string(what) + " must be an integer", j.dump());
  return j.get<long>();
}

}  // namespace

// ---- emitters -------------------------------------------------------------------

Json json_of(const Integer& value) {
  if (value <= kSafeBound && value >= -kSafeBound) {
    return Json(value.get_si());
  }
  return Json(value.get_str());
}

Json json_of(const Rational& value) {
  if (value.is_integer()) return json_of(value.numerator());
  return Json(value.to_string());
}

Json json_of(const Polynomial& value) {
  Json coeffs = Json::array();
  for (const Rational& c : value.coeffs()) coeffs.push_back(json_of(c));
  return coeffs;
}

Json json_of(const Cyclotomic& value) {
  if (value.is_rational()) return json_of(value.as_rational());
  Json j;
  j["n"] = value.conductor();
  Json coeffs = Json::array();
  for (const Rational& c : value.coeffs()) coeffs.push_back(json_of(c));
  j["c"] = std::move(coeffs);
  return j;
}

Json json_of(const IntPartition& value) {
  Json parts = Json::array();
  for (int p : value.parts()) parts.push_back(p);
  return parts;
}

Json json_of(const MultiPartition& value) {
  Json slots = Json::array();
  for (const IntPartition& component : value.components()) slots.push_back(json_of(component));
  return slots;
}

Json json_of(const SetPartition& value) {
  Json j;
  j["k"] = value.upper();
  j["l"] = value.lower();
  Json blocks = Json::array();
  for (const auto& block : value.signed_blocks()) {
    Json points = Json::array();
    for (int p : block) points.push_back(p);
    blocks.push_back(std::move(points));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json json_of(const DiagramMorphism& value) {
  Json j;
  j["k"] = value.upper();
  j["l"] = value.lower();
  Json terms = Json::array();
  for (const auto& [diagram, coeff] : value.terms()) {
    Json term;
    Json blocks = Json::array();
    for (const auto& block : diagram.signed_blocks()) {
      Json points = Json::array();
      for (int p : block) points.push_back(p);
      blocks.push_back(std::move(points));
    }
    term["blocks"] = std::move(blocks);
    term["coeff"] = json_of(coeff);
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j;
}

Json json_of(const CentralizerDescriptor& value) {
  Json factors = Json::array();
  for (const WreathFactor& f : value.factors) {
    Json factor;
    factor["c"] = f.cycle;
    factor["m"] = f.mult;
    factors.push_back(std::move(factor));
  }
  Json j;
  j["factors"] = std::move(factors);
  return j;
}

Json json_of(const CentralizerLabel& value) {
  Json factors = Json::array();
  for (const MultiPartition& part : value.factors) {
    Json factor;
    factor["c"] = part.slots();
    factor["multipartition"] = json_of(part);
    factors.push_back(std::move(factor));
  }
  Json j;
  j["factors"] = std::move(factors);
  return j;
}

Json json_of(const CenterSimple& value) {
  Json j;
  j["n"] = value.n;
  j["mu"] = json_of(value.mu);
  j["irrep"] = json_of(value.irrep);
  return j;
}

Json json_of(const TowerElement& value) {
  Json terms = Json::array();
  for (const auto& [simple, mult] : value) {
    Json term = json_of(simple);
    term["mult"] = mult;
    terms.push_back(std::move(term));
  }
  return terms;
}

Json json_of(const GrK0Basis& value) {
  Json j;
  j["mu0"] = json_of(value.mu0);
  j["v0"] = json_of(value.v0);
  j["lambda"] = json_of(value.lambda);
  return j;
}

Json json_of(const std::map<GrK0Basis, long>& value) {
  Json terms = Json::array();
  for (const auto& [basis, mult] : value) {
    Json term = json_of(basis);
    term["mult"] = mult;
    terms.push_back(std::move(term));
  }
  return terms;
}

Json json_of(const SnCharacterTable& value) {
  Json j;
  j["n"] = value.n;
  Json labels = Json::array();
  for (const IntPartition& label : value.labels) labels.push_back(json_of(label));
  j["labels"] = std::move(labels);
  Json sizes = Json::array();
  for (const Integer& size : value.class_sizes) sizes.push_back(json_of(size));
  j["class_sizes"] = std::move(sizes);
  Json rows = Json::array();
  for (const auto& row : value.values) {
    Json cells = Json::array();
    for (const Integer& cell : row) cells.push_back(json_of(cell));
    rows.push_back(std::move(cells));
  }
  j["values"] = std::move(rows);
  return j;
}

Json json_of(const WreathTable& value) {
  Json j;
  j["c"] = value.c;
  j["m"] = value.m;
  j["group_order"] = json_of(value.group_order);
  Json labels = Json::array();
  for (const MultiPartition& label : value.labels) labels.push_back(json_of(label));
  j["labels"] = std::move(labels);
  Json orders = Json::array();
  for (const Integer& z : value.centralizer_orders) orders.push_back(json_of(z));
  j["centralizer_orders"] = std::move(orders);
  Json sizes = Json::array();
  for (const Integer& size : value.class_sizes) sizes.push_back(json_of(size));
  j["class_sizes"] = std::move(sizes);
  Json rows = Json::array();
  for (const auto& row : value.values) {
    Json cells = Json::array();
    for (const Cyclotomic& cell : row) cells.push_back(json_of(cell));
    rows.push_back(std::move(cells));
  }
  j["values"] = std::move(rows);
  return j;
}

Json json_of(const CentralizerTable& value) {
  Json j;
  j["descriptor"] = json_of(value.descriptor);
  j["group_order"] = json_of(value.group_order);
  Json labels = Json::array();
  for (const CentralizerLabel& label : value.labels) labels.push_back(json_of(label));
  j["labels"] = std::move(labels);
  Json orders = Json::array();
  for (const Integer& z : value.centralizer_orders) orders.push_back(json_of(z));
  j["centralizer_orders"] = std::move(orders);
  Json sizes = Json::array();
  for (const Integer& size : value.class_sizes) sizes.push_back(json_of(size));
  j["class_sizes"] = std::move(sizes);
  Json rows = Json::array();
  for (const auto& row : value.values) {
    Json cells = Json::array();
    for (const Cyclotomic& cell : row) cells.push_back(json_of(cell));
    rows.push_back(std::move(cells));
  }
  j["values"] = std::move(rows);
  return j;
}

Json json_of(const CenterCheckReport& value) {
  Json j;
  j["unit_left"] = value.unit_left;
  j["unit_right"] = value.unit_right;
  j["merge_compat"] = value.merge_compat;
  j["crossing_compat"] = value.crossing_compat;
  j["passed"] = value.passed();
  return j;
}

Json json_of(const FrobeniusReport& value) {
  Json j;
  j["separability"] = value.separability;
  j["exchange_left"] = value.exchange_left;
  j["exchange_right"] = value.exchange_right;
  j["unit_left"] = value.unit_left;
  j["unit_right"] = value.unit_right;
  j["counit_left"] = value.counit_left;
  j["counit_right"] = value.counit_right;
  j["mu_equivariant"] = value.mu_equivariant;
  j["delta_equivariant"] = value.delta_equivariant;
  j["eta_equivariant"] = value.eta_equivariant;
  j["eps_equivariant"] = value.eps_equivariant;
  j["passed"] = value.passed();
  return j;
}

Json json_of(const std::map<BlockLabel, std::vector<CenterSimple>>& value) {
  Json blocks = Json::array();
  for (const auto& [label, simples] : value) {
    Json block;
    block["mu0"] = json_of(label.mu0);
    block["v0"] = json_of(label.v0);
    block["block_id"] = label.block_id;
    Json members = Json::array();
    for (const CenterSimple& simple : simples) members.push_back(json_of(simple));
    block["simples"] = std::move(members);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// ---- parsers --------------------------------------------------------------------

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    parse_fail("invalid JSON", e.what());
  }
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      parse_fail("invalid integer string", j.get<std::string>());
    }
  }
  parse_fail("expected an integer or a decimal string", j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  parse_fail("expected an integer or a \"p/q\" string", j.dump());
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("polynomial must be an array of coefficients", j.dump());
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& cell : j) coeffs.push_back(rational_from_json(cell));
  return Polynomial(std::move(coeffs));
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("n") || !j.contains("c")) {
      parse_fail("cyclotomic object must have \"n\" and \"c\"", j.dump());
    }
    const long n = small_int_from_json(j.at("n"), "conductor");
    if (n < 1) parse_fail("conductor must be positive", j.dump());
    if (!j.at("c").is_array()) parse_fail("\"c\" must be an array", j.dump());
    std::vector<Rational> coeffs;
    for (const auto& cell : j.at("c")) coeffs.push_back(rational_from_json(cell));
    return Cyclotomic::from_coeffs(static_cast<unsigned>(n), std::move(coeffs));
  }
  return Cyclotomic(rational_from_json(j));
}

IntPartition partition_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("partition must be an array of parts", j.dump());
  std::vector<int> parts;
  parts.reserve(j.size());
  for (const auto& cell : j) {
    parts.push_back(static_cast<int>(small_int_from_json(cell, "partition part")));
  }
  try {
    return IntPartition(std::move(parts));
  } catch (const Error& e) {
    parse_fail("invalid partition", e.what());
  }
}

MultiPartition multipartition_from_json(const Json& j) {
  if (!j.is_array()) parse_fail("multipartition must be an array of partitions", j.dump());
  std::vector<IntPartition> components;
  components.reserve(j.size());
  for (const auto& cell : j) components.push_back(partition_from_json(cell));
  return MultiPartition(std::move(components));
}

SetPartition set_partition_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("blocks")) {
    parse_fail("set partition must be {\"k\", \"l\", \"blocks\"}", j.dump());
  }
  const int k = static_cast<int>(small_int_from_json(j.at("k"), "k"));
  const int l = static_cast<int>(small_int_from_json(j.at("l"), "l"));
  if (!j.at("blocks").is_array()) parse_fail("\"blocks\" must be an array", j.dump());
  std::vector<std::vector<int>> blocks;
  for (const auto& block : j.at("blocks")) {
    if (!block.is_array()) parse_fail("each block must be an array of points", j.dump());
    std::vector<int> points;
    for (const auto& cell : block) {
      points.push_back(static_cast<int>(small_int_from_json(cell, "point")));
    }
    blocks.push_back(std::move(points));
  }
  try {
    return SetPartition::from_signed(k, l, blocks);
  } catch (const Error& e) {
    parse_fail("invalid set partition", e.what());
  }
}

DiagramMorphism morphism_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("k") || !j.contains("l") || !j.contains("terms")) {
    parse_fail("morphism must be {\"k\", \"l\", \"terms\"}", j.dump());
  }
  const int k = static_cast<int>(small_int_from_json(j.at("k"), "k"));
  const int l = static_cast<int>(small_int_from_json(j.at("l"), "l"));
  if (!j.at("terms").is_array()) parse_fail("\"terms\" must be an array", j.dump());
  DiagramMorphism result(k, l);
  for (const auto& term : j.at("terms")) {
    if (!term.is_object() || !term.contains("blocks") || !term.contains("coeff")) {
      parse_fail("each term must be {\"blocks\", \"coeff\"}", term.dump());
    }
    Json with_shape;
    with_shape["k"] = k;
    with_shape["l"] = l;
    with_shape["blocks"] = term.at("blocks");
    const SetPartition diagram = set_partition_from_json(with_shape);
    result += DiagramMorphism(diagram, polynomial_from_json(term.at("coeff")));
  }
  return result;
}

CentralizerLabel centralizer_label_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors")) {
    parse_fail("label must be {\"factors\": [...]}", j.dump());
  }
  if (!j.at("factors").is_array()) parse_fail("\"factors\" must be an array", j.dump());
  CentralizerLabel label;
  for (const auto& factor : j.at("factors")) {
    if (!factor.is_object() || !factor.contains("c") || !factor.contains("multipartition")) {
      parse_fail("each factor must be {\"c\", \"multipartition\"}", factor.dump());
    }
    const long c = small_int_from_json(factor.at("c"), "factor cycle length");
    MultiPartition part = multipartition_from_json(factor.at("multipartition"));
    if (part.slots() != c) {
      parse_fail("multipartition must have exactly c components", factor.dump());
    }
    label.factors.push_back(std::move(part));
  }
  return label;
}

namespace {

CentralizerIrrep irrep_from_json(const Json& j, const CentralizerDescriptor& descriptor) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "triv") return trivial_centralizer_irrep(descriptor);
    if (name == "sign") return sign_centralizer_irrep(descriptor);
    parse_fail("unknown irrep shortcut (use \"triv\", \"sign\" or a factors object)", name);
  }
  return centralizer_label_from_json(j);
}

}  // namespace

CenterSimple center_simple_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mu") || !j.contains("irrep")) {
    parse_fail("simple must be {\"mu\", \"irrep\"} with optional \"n\"", j.dump());
  }
  CenterSimple simple;
  simple.mu = partition_from_json(j.at("mu"));
  simple.n = simple.mu.size();
  if (j.contains("n") && small_int_from_json(j.at("n"), "n") != simple.n) {
    parse_fail("\"n\" must equal the size of mu", j.dump());
  }
  simple.irrep =
      irrep_from_json(j.at("irrep"), CentralizerDescriptor::from_cycle_type(simple.mu));
  validate_simple(simple);
  return simple;
}

GrK0Basis grk0_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("mu0") || !j.contains("v0") || !j.contains("lambda")) {
    parse_fail("basis element must be {\"mu0\", \"v0\", \"lambda\"}", j.dump());
  }
  GrK0Basis basis;
  basis.mu0 = partition_from_json(j.at("mu0"));
  for (int part : basis.mu0.parts()) {
    if (part == 1) parse_fail("mu0 must have no parts equal to 1", j.dump());
  }
  basis.v0 = irrep_from_json(j.at("v0"), CentralizerDescriptor::from_cycle_type(basis.mu0));
  basis.lambda = partition_from_json(j.at("lambda"));
  // Validation via the simple it denotes.
  validate_simple(simple_from_grk0(basis));
  return basis;
}

}  // namespace repst
