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
 * @file repst_cli.cpp
 * @brief The repst command-line interface: diagram arithmetic, character
 * tables, center-tower products and brute-force verification suites.
 *
 * All payloads are JSON (see json_io.hpp for the schemas). Morphism flags
 * additionally accept the named generators unit, counit, merge, crossing and
 * id:K. Any payload flag accepts @path to read the JSON from a file.
 *
 * Output is deterministic: compact JSON plus a trailing newline, keys and
 * array orders fixed by the library's canonical orders. --format pretty
 * renders human-readable text instead; the JSON form is the stable contract.
 *
 * Exit codes: 0 success, 1 domain error (error object on stderr), 2 usage
 * error.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repst/cache.hpp"
#include "repst/center_tower.hpp"
#include "repst/diagram.hpp"
#include "repst/error.hpp"
#include "repst/json_io.hpp"
#include "repst/oracle.hpp"
#include "repst/sn_characters.hpp"
#include "repst/wreath.hpp"

namespace {

using repst::Json;

struct Options {
  std::string format = "json";

  bool pretty() const { return format == "pretty"; }
};

void emit_json(const Json& j) { std::cout << j.dump() << "\n"; }

void emit_text(const std::string& text) { std::cout << text << "\n"; }

/// Payload flags accept inline JSON or @path.
std::string load_payload(const std::string& argument) {
  if (argument.empty() || argument.front() != '@') return argument;
  std::ifstream in(argument.substr(1), std::ios::binary);
  if (!in) {
    repst::fail(repst::ErrorCode::NotFound, "cannot read payload file", argument.substr(1));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

repst::DiagramMorphism morphism_from_text(const std::string& argument) {
  const std::string text = load_payload(argument);
  if (text == "unit") return repst::unit_morphism();
  if (text == "counit") return repst::counit_morphism();
  if (text == "merge") return repst::merge_morphism();
  if (text == "crossing") return repst::crossing_morphism();
  if (text.rfind("id:", 0) == 0) {
    try {
      return repst::DiagramMorphism::identity(std::stoi(text.substr(3)));
    } catch (const std::logic_error&) {
      repst::fail(repst::ErrorCode::ParseError, "id:K needs an integer strand count", text);
    }
  }
  const Json j = repst::parse_json(text);
  if (j.is_object() && j.contains("terms")) return repst::morphism_from_json(j);
  if (j.is_object() && j.contains("blocks")) {
    return repst::DiagramMorphism(repst::set_partition_from_json(j), repst::Polynomial(1));
  }
  repst::fail(repst::ErrorCode::ParseError,
              "expected a named morphism, a morphism object or a set partition object", text);
}

repst::IntPartition partition_from_text(const std::string& argument) {
  return repst::partition_from_json(repst::parse_json(load_payload(argument)));
}

repst::CenterSimple simple_from_text(const std::string& argument) {
  return repst::center_simple_from_json(repst::parse_json(load_payload(argument)));
}

repst::GrK0Basis grk0_from_text(const std::string& argument) {
  return repst::grk0_from_json(repst::parse_json(load_payload(argument)));
}

Json json_of_matrix(const repst::RationalMatrix& matrix) {
  Json j;
  j["rows"] = matrix.rows;
  j["cols"] = matrix.cols;
  Json rows = Json::array();
  for (long r = 0; r < matrix.rows; ++r) {
    Json row = Json::array();
    for (long c = 0; c < matrix.cols; ++c) row.push_back(repst::json_of(matrix.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return j;
}

std::string pretty_matrix(const repst::RationalMatrix& matrix) {
  std::ostringstream os;
  for (long r = 0; r < matrix.rows; ++r) {
    for (long c = 0; c < matrix.cols; ++c) {
      if (c > 0) os << "\t";
      os << matrix.at(r, c).to_string();
    }
    if (r + 1 < matrix.rows) os << "\n";
  }
  return os.str();
}

std::string pretty_grk0(const std::map<repst::GrK0Basis, long>& product) {
  if (product.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [basis, mult] : product) {
    if (!first) os << " + ";
    first = false;
    if (mult != 1) os << mult << "*";
    os << basis.to_string();
  }
  return os.str();
}

// ---- verification suites --------------------------------------------------------

/// Class data of one centralizer versus brute enumeration.
Json verify_census(const repst::IntPartition& mu) {
  const repst::RealizedCentralizer rc = repst::realize_centralizer(mu);
  const repst::CentralizerTable table = repst::centralizer_character_table(rc.descriptor);
  const auto census = repst::class_census(rc);

  bool sizes_match = census.size() == table.labels.size();
  if (sizes_match) {
    for (std::size_t i = 0; i < table.labels.size(); ++i) {
      const auto it = census.find(table.labels[i]);
      if (it == census.end() || repst::Integer(it->second) != table.class_sizes[i]) {
        sizes_match = false;
        break;
      }
    }
  }

  bool representatives_match = true;
  for (const auto& label : table.labels) {
    const repst::Permutation z = repst::class_representative(rc, label);
    if (!(repst::classify_element(rc, z) == label)) representatives_match = false;
  }

  // For small degrees, double-check the group against a full filter of S_n.
  std::optional<bool> filter_matches;
  if (mu.size() <= 7) {
    filter_matches = repst::centralizer_filter(rc.sigma) == rc.group.elements;
  }

  Json j;
  j["mu"] = repst::json_of(mu);
  j["group_order"] = repst::json_of(repst::Integer(rc.group.order()));
  j["classes"] = table.labels.size();
  j["census_matches"] = sizes_match;
  j["representatives_match"] = representatives_match;
  if (filter_matches) {
    j["filter_matches"] = *filter_matches;
  } else {
    j["filter_matches"] = nullptr;
  }
  j["passed"] = sizes_match && representatives_match && filter_matches.value_or(true);
  return j;
}

/// Character-theoretic induction products versus explicit induce-and-trace,
/// over every pair of simples within the caps.
Json verify_odot(int max_n, long max_order) {
  long pairs = 0;
  long skipped = 0;
  Json mismatches = Json::array();
  for (int na = 1; na + 1 <= max_n; ++na) {
    const auto simples_a = repst::center_simples(na);
    for (int nb = 1; na + nb <= max_n; ++nb) {
      const auto simples_b = repst::center_simples(nb);
      for (const auto& a : simples_a) {
        for (const auto& b : simples_b) {
          const repst::IntPartition fused = repst::union_partitions(a.mu, b.mu);
          if (repst::cycle_type_centralizer_order(fused) > max_order) {
            ++skipped;
            continue;
          }
          const repst::TowerElement expected = repst::induction_product(a, b);
          const repst::TowerElement actual = repst::brute_induction_product(a, b);
          ++pairs;
          if (expected != actual) {
            Json bad;
            bad["a"] = repst::json_of(a);
            bad["b"] = repst::json_of(b);
            bad["character_theoretic"] = repst::json_of(expected);
            bad["brute_force"] = repst::json_of(actual);
            mismatches.push_back(std::move(bad));
          }
        }
      }
    }
  }
  Json j;
  j["max_n"] = max_n;
  j["max_centralizer_order"] = max_order;
  j["pairs_checked"] = pairs;
  j["pairs_skipped"] = skipped;
  j["mismatches"] = std::move(mismatches);
  j["passed"] = j["mismatches"].empty() && pairs > 0;
  return j;
}

/// The irreducible modules of the Young subgroup of shape mu inside S_n,
/// on consecutive blocks of points.
std::vector<repst::ExplicitModule> young_irreducibles(const repst::IntPartition& mu) {
  std::vector<std::vector<repst::IntPartition>> per_part;
  for (int part : mu.parts()) per_part.push_back(repst::partitions_of(part));

  std::vector<repst::ExplicitModule> result;
  std::vector<std::size_t> index(per_part.size(), 0);
  while (true) {
    std::optional<repst::ExplicitModule> module;
    for (std::size_t i = 0; i < per_part.size(); ++i) {
      const repst::IntPartition& shape = per_part[i][index[i]];
      const repst::SeminormalRep rep(shape);
      repst::ExplicitModule part_module;
      part_module.group = repst::PermGroup::symmetric(shape.size());
      part_module.dim = rep.dim();
      for (const repst::Permutation& g : part_module.group.elements) {
        part_module.action.push_back(rep.matrix_of(g));
      }
      module = module ? repst::outer_tensor_module(*module, part_module)
                      : std::move(part_module);
    }
    result.push_back(std::move(*module));

    std::size_t pos = per_part.size();
    while (pos > 0 && ++index[pos - 1] == per_part[pos - 1].size()) {
      index[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return result;
}

/// Separable-Frobenius checks for induction from every Young subgroup of
/// S_n, over all pairs of irreducibles (the third module runs over both).
Json verify_frobenius(int n) {
  const repst::PermGroup big = repst::PermGroup::symmetric(n);
  long checks = 0;
  Json failures = Json::array();
  for (const repst::IntPartition& mu : repst::partitions_of(n)) {
    const auto irreducibles = young_irreducibles(mu);
    for (std::size_t vi = 0; vi < irreducibles.size(); ++vi) {
      for (std::size_t wi = 0; wi < irreducibles.size(); ++wi) {
        for (const std::size_t ui : {vi, wi}) {
          const repst::FrobeniusReport report = repst::frobenius_check(
              irreducibles[vi], irreducibles[wi], irreducibles[ui], big);
          ++checks;
          if (!report.passed()) {
            Json bad;
            bad["young_shape"] = repst::json_of(mu);
            bad["v"] = vi;
            bad["w"] = wi;
            bad["u"] = ui;
            bad["report"] = repst::json_of(report);
            failures.push_back(std::move(bad));
          }
          if (vi == wi) break;  // u in {v, w} collapses to one choice
        }
      }
    }
  }
  Json j;
  j["n"] = n;
  j["checks"] = checks;
  j["failures"] = std::move(failures);
  j["passed"] = j["failures"].empty() && checks > 0;
  return j;
}

Json verify_graded(int n) {
  const repst::GradedPairCensus census = repst::enumerate_graded_pairs(n);
  Json j;
  j["n"] = census.n;
  j["pairs"] = census.pairs;
  j["all_consistent"] = census.all_consistent;
  j["rank"] = repst::center_rank(n);
  j["rank_matches"] = census.pairs == repst::center_rank(n);
  j["passed"] = census.all_consistent && census.pairs == repst::center_rank(n);
  return j;
}

/// Inducing the regular module of the centralizer must give dimension n!.
Json verify_regular(const repst::IntPartition& mu) {
  const repst::RealizedCentralizer rc = repst::realize_centralizer(mu);
  const repst::PermGroup big = repst::PermGroup::symmetric(mu.size());

  repst::ExplicitModule regular;
  regular.group = rc.group;
  regular.dim = static_cast<int>(rc.group.order());
  for (const repst::Permutation& z : rc.group.elements) {
    repst::LinearMap m = repst::LinearMap::zero(regular.dim, regular.dim);
    for (int col = 0; col < regular.dim; ++col) {
      m.add(rc.group.index_of(z * rc.group.at(col)), col,
            repst::Cyclotomic(repst::Rational(1)));
    }
    m.normalize();
    regular.action.push_back(std::move(m));
  }

  const bool homomorphism = repst::verify_module(regular);
  const repst::InducedModule induced = repst::induce_module(regular, big);
  const repst::Integer expected = repst::factorial(mu.size());

  Json j;
  j["mu"] = repst::json_of(mu);
  j["centralizer_order"] = repst::json_of(repst::Integer(rc.group.order()));
  j["regular_is_module"] = homomorphism;
  j["induced_dim"] = induced.module.dim;
  j["expected_dim"] = repst::json_of(expected);
  j["passed"] = homomorphism && repst::Integer(induced.module.dim) == expected;
  return j;
}

/// The seminormal matrices of one shape form a module whose traces match
/// the character table row.
Json verify_seminormal(const repst::IntPartition& lambda) {
  const repst::SeminormalRep rep(lambda);
  const int m = lambda.size();
  repst::ExplicitModule module;
  module.group = repst::PermGroup::symmetric(m);
  module.dim = rep.dim();
  for (const repst::Permutation& g : module.group.elements) {
    module.action.push_back(rep.matrix_of(g));
  }
  const bool homomorphism = repst::verify_module(module);

  bool traces_match = true;
  for (const repst::Permutation& g : module.group.elements) {
    const repst::Cyclotomic trace = module.matrix_of(g).trace();
    const repst::Integer expected = repst::sn_character(lambda, g.cycle_type());
    if (trace != repst::Cyclotomic(repst::Rational(expected))) traces_match = false;
  }

  Json j;
  j["lambda"] = repst::json_of(lambda);
  j["dim"] = rep.dim();
  j["is_module"] = homomorphism;
  j["traces_match_characters"] = traces_match;
  j["passed"] = homomorphism && traces_match;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repst: exact partition-diagram calculus and centralizer towers"};
  app.require_subcommand(1);

  auto options = std::make_shared<Options>();
  app.add_option("--format", options->format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir,
                 "Cache directory (overrides REPST_CACHE_DIR for this run)");

  // ---- diagrams ----
  auto* diagrams = app.add_subcommand("diagrams", "Partition-diagram morphism arithmetic");
  diagrams->require_subcommand(1);

  std::string arg_a, arg_b, arg_m, arg_pi;
  long arg_d = 0;

  auto* d_compose = diagrams->add_subcommand("compose", "Compose two morphisms (b after a)");
  d_compose->add_option("--a", arg_a, "First morphism (applied first)")->required();
  d_compose->add_option("--b", arg_b, "Second morphism")->required();
  d_compose->callback([&, options] {
    const auto result = compose(morphism_from_text(arg_a), morphism_from_text(arg_b));
    options->pretty() ? emit_text(result.to_string()) : emit_json(repst::json_of(result));
  });

  auto* d_tensor = diagrams->add_subcommand("tensor", "Tensor two morphisms side by side");
  d_tensor->add_option("--a", arg_a, "Left morphism")->required();
  d_tensor->add_option("--b", arg_b, "Right morphism")->required();
  d_tensor->callback([&, options] {
    const auto result = tensor(morphism_from_text(arg_a), morphism_from_text(arg_b));
    options->pretty() ? emit_text(result.to_string()) : emit_json(repst::json_of(result));
  });

  auto* d_xbasis = diagrams->add_subcommand(
      "xbasis", "Expand the x-basis element of a set partition in plain diagrams");
  d_xbasis->add_option("--pi", arg_pi, "Set partition {\"k\",\"l\",\"blocks\"}")->required();
  d_xbasis->callback([&, options] {
    const auto pi = repst::set_partition_from_json(repst::parse_json(load_payload(arg_pi)));
    const auto result = repst::x_basis_morphism(pi);
    options->pretty() ? emit_text(result.to_string()) : emit_json(repst::json_of(result));
  });

  auto* d_eval = diagrams->add_subcommand(
      "eval", "Evaluate a morphism to an explicit matrix at integer parameter d");
  d_eval->add_option("--m", arg_m, "Morphism")->required();
  d_eval->add_option("--d", arg_d, "Evaluation parameter (basis size)")->required();
  d_eval->callback([&, options] {
    const auto matrix = repst::evaluate_diagram_functor(morphism_from_text(arg_m), arg_d);
    options->pretty() ? emit_text(pretty_matrix(matrix)) : emit_json(json_of_matrix(matrix));
  });

  // ---- chars ----
  auto* chars = app.add_subcommand("chars", "Character tables");
  chars->require_subcommand(1);

  int arg_n = 0, arg_c = 1, arg_wm = 0;
  std::string arg_mu;

  auto* c_sn = chars->add_subcommand("sn", "Symmetric-group character table");
  c_sn->add_option("--n", arg_n, "Degree n")->required();
  c_sn->callback([&, options] {
    const auto& table = repst::sn_character_table(arg_n);
    if (options->pretty()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < table.labels.size(); ++i) {
        os << table.labels[i].to_string() << ":";
        for (const auto& value : table.values[i]) os << "\t" << value.get_str();
        if (i + 1 < table.labels.size()) os << "\n";
      }
      emit_text(os.str());
    } else {
      emit_json(repst::json_of(table));
    }
  });

  auto* c_wreath = chars->add_subcommand("wreath", "Wreath-product character table");
  c_wreath->add_option("--c", arg_c, "Cyclic base order c")->required();
  c_wreath->add_option("--m", arg_wm, "Top symmetric degree m")->required();
  c_wreath->callback([&, options] {
    const auto& table = repst::wreath_character_table(arg_c, arg_wm);
    if (options->pretty()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < table.labels.size(); ++i) {
        os << table.labels[i].to_string() << ":";
        for (const auto& value : table.values[i]) os << "\t" << value.to_string();
        if (i + 1 < table.labels.size()) os << "\n";
      }
      emit_text(os.str());
    } else {
      emit_json(repst::json_of(table));
    }
  });

  auto* c_centralizer =
      chars->add_subcommand("centralizer", "Character table of the centralizer of a cycle type");
  c_centralizer->add_option("--mu", arg_mu, "Cycle type, e.g. [2,1]")->required();
  c_centralizer->callback([&, options] {
    const auto table = repst::centralizer_character_table(
        repst::CentralizerDescriptor::from_cycle_type(partition_from_text(arg_mu)));
    if (options->pretty()) {
      std::ostringstream os;
      os << table.descriptor.to_string();
      for (std::size_t i = 0; i < table.labels.size(); ++i) {
        os << "\n" << table.labels[i].to_string() << ":";
        for (const auto& value : table.values[i]) os << "\t" << value.to_string();
      }
      emit_text(os.str());
    } else {
      emit_json(repst::json_of(table));
    }
  });

  // ---- center ----
  auto* center = app.add_subcommand("center", "The tower of center categories");
  center->require_subcommand(1);

  std::optional<long> arg_t;

  auto* ct_simples = center->add_subcommand("simples", "All simple objects in degree n");
  ct_simples->add_option("--n", arg_n, "Degree n")->required();
  ct_simples->callback([&, options] {
    const auto simples = repst::center_simples(arg_n);
    if (options->pretty()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < simples.size(); ++i) {
        if (i > 0) os << "\n";
        os << simples[i].to_string();
      }
      emit_text(os.str());
    } else {
      Json j = Json::array();
      for (const auto& simple : simples) j.push_back(repst::json_of(simple));
      emit_json(j);
    }
  });

  auto* ct_odot = center->add_subcommand("odot", "Induction product of two simples");
  ct_odot->add_option("--a", arg_a, "First simple {\"mu\",\"irrep\"}")->required();
  ct_odot->add_option("--b", arg_b, "Second simple")->required();
  ct_odot->callback([&, options] {
    const auto result =
        repst::induction_product(simple_from_text(arg_a), simple_from_text(arg_b));
    options->pretty() ? emit_text(repst::tower_to_string(result))
                      : emit_json(repst::json_of(result));
  });

  auto* ct_rank = center->add_subcommand("k0-rank", "Number of simples in degree n");
  ct_rank->add_option("--n", arg_n, "Degree n")->required();
  ct_rank->callback([&] { emit_text(std::to_string(repst::center_rank(arg_n))); });

  auto* ct_blocks = center->add_subcommand("blocks", "Block partition of the simples");
  ct_blocks->add_option("--n", arg_n, "Degree n")->required();
  ct_blocks->add_option("--t", arg_t, "Integer parameter (omit for generic)");
  ct_blocks->callback([&, options] {
    const auto blocks = repst::center_blocks(arg_n, arg_t);
    if (options->pretty()) {
      std::ostringstream os;
      bool first = true;
      for (const auto& [label, simples] : blocks) {
        if (!first) os << "\n";
        first = false;
        os << "mu0=" << label.mu0.to_string() << " V0=" << label.v0.to_string()
           << " block=" << label.block_id << ":";
        for (const auto& simple : simples) os << " {" << simple.to_string() << "}";
      }
      emit_text(os.str());
    } else {
      emit_json(repst::json_of(blocks));
    }
  });

  // ---- grk0 ----
  auto* grk0 = app.add_subcommand("grk0", "Graded Grothendieck-ring structure constants");
  grk0->require_subcommand(1);

  auto* g_product = grk0->add_subcommand("product", "Product of two center basis classes");
  g_product->add_option("--a", arg_a, "First class {\"mu0\",\"v0\",\"lambda\"}")->required();
  g_product->add_option("--b", arg_b, "Second class")->required();
  g_product->callback([&, options] {
    const auto result = repst::grk0_center_product(grk0_from_text(arg_a), grk0_from_text(arg_b));
    if (options->pretty()) {
      emit_text(pretty_grk0(result));
    } else {
      emit_json(repst::json_of(result));
    }
  });

  auto* g_repst = grk0->add_subcommand(
      "repst-product", "Product of two interpolation-category classes (LR expansion)");
  g_repst->add_option("--a", arg_a, "First partition")->required();
  g_repst->add_option("--b", arg_b, "Second partition")->required();
  g_repst->callback([&, options] {
    const auto result = repst::grk0_interpolation_product(partition_from_text(arg_a),
                                                          partition_from_text(arg_b));
    if (options->pretty()) {
      std::ostringstream os;
      bool first = true;
      for (const auto& [lambda, mult] : result) {
        if (!first) os << " + ";
        first = false;
        if (mult != 1) os << mult << "*";
        os << "X" << lambda.to_string();
      }
      emit_text(first ? "0" : os.str());
    } else {
      Json terms = Json::array();
      for (const auto& [lambda, mult] : result) {
        Json term;
        term["lambda"] = repst::json_of(lambda);
        term["mult"] = mult;
        terms.push_back(std::move(term));
      }
      emit_json(terms);
    }
  });

  // ---- pieri ----
  std::string arg_lambda;
  auto* pieri = app.add_subcommand(
      "pieri", "Labels under one induction step (horizontal strip removals)");
  pieri->add_option("--lambda", arg_lambda, "Partition")->required();
  pieri->callback([&, options] {
    const auto labels = repst::pieri_induction(partition_from_text(arg_lambda));
    if (options->pretty()) {
      std::ostringstream os;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) os << " + ";
        os << "X" << labels[i].to_string();
      }
      emit_text(labels.empty() ? "0" : os.str());
    } else {
      Json j = Json::array();
      for (const auto& label : labels) j.push_back(repst::json_of(label));
      emit_json(j);
    }
  });

  // ---- oracle ----
  auto* oracle = app.add_subcommand("oracle", "Brute-force verification");
  oracle->require_subcommand(1);
  auto* verify = oracle->add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);

  int arg_max_n = 4;
  long arg_max_order = 200;

  auto* v_census = verify->add_subcommand(
      "census", "Centralizer class labels and sizes versus brute enumeration");
  v_census->add_option("--mu", arg_mu, "Cycle type")->required();
  v_census->callback([&] { emit_json(verify_census(partition_from_text(arg_mu))); });

  auto* v_odot = verify->add_subcommand(
      "odot", "Induction products versus explicit induce-and-decompose");
  v_odot->add_option("--max-n", arg_max_n, "Largest total degree")->capture_default_str();
  v_odot->add_option("--max-order", arg_max_order, "Largest centralizer order")
      ->capture_default_str();
  v_odot->callback([&] { emit_json(verify_odot(arg_max_n, arg_max_order)); });

  auto* v_frobenius = verify->add_subcommand(
      "frobenius", "Separable Frobenius structure of induction from Young subgroups");
  v_frobenius->add_option("--n", arg_n, "Symmetric group degree")->required();
  v_frobenius->callback([&] { emit_json(verify_frobenius(arg_n)); });

  auto* v_graded = verify->add_subcommand(
      "graded", "Conjugation grading of every induced simple in degree n");
  v_graded->add_option("--n", arg_n, "Degree n")->required();
  v_graded->callback([&] { emit_json(verify_graded(arg_n)); });

  auto* v_regular = verify->add_subcommand(
      "regular", "Induced regular module has dimension n!");
  v_regular->add_option("--mu", arg_mu, "Cycle type")->required();
  v_regular->callback([&] { emit_json(verify_regular(partition_from_text(arg_mu))); });

  auto* v_seminormal = verify->add_subcommand(
      "seminormal", "Seminormal matrices form a module with the right traces");
  v_seminormal->add_option("--lambda", arg_lambda, "Shape")->required();
  v_seminormal->callback([&] { emit_json(verify_seminormal(partition_from_text(arg_lambda))); });

  // ---- cache ----
  auto* cache = app.add_subcommand("cache", "Character-table cache management");
  cache->require_subcommand(1);

  auto* cache_clear_cmd = cache->add_subcommand("clear", "Delete all cached tables");
  cache_clear_cmd->callback([&, options] {
    const long cleared = repst::cache_clear();
    if (options->pretty()) {
      emit_text("cleared " + std::to_string(cleared) + " file(s)");
    } else {
      Json j;
      j["cleared"] = cleared;
      emit_json(j);
    }
  });

  auto* cache_path_cmd = cache->add_subcommand("path", "Print the cache directory");
  cache_path_cmd->callback([&, options] {
    const std::string path = repst::cache_directory().string();
    if (options->pretty()) {
      emit_text(path);
    } else {
      Json j;
      j["path"] = path;
      emit_json(j);
    }
  });

  // Apply --cache-dir before any callback runs.
  app.parse_complete_callback([&] {
    if (!cache_dir.empty()) {
      ::setenv("REPST_CACHE_DIR", cache_dir.c_str(), /*overwrite=*/1);
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    Json j;
    j["error"] = "usage";
    j["message"] = e.what();
    j["context"] = "";
    std::cerr << j.dump() << "\n";
    return 2;
  } catch (const repst::Error& e) {
    Json j;
    j["error"] = repst::error_code_name(e.code());
    j["message"] = e.what();
    j["context"] = e.context();
    std::cerr << j.dump() << "\n";
    return 1;
  }
  return 0;
}
