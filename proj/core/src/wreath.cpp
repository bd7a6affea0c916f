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

#include "repst/wreath.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "repst/cache.hpp"
#include "repst/error.hpp"
#include "repst/limits.hpp"
#include "repst/oracle.hpp"
#include "repst/sn_characters.hpp"

namespace repst {

namespace {

/// Advances a mixed-radix tuple (last position fastest); false on wrap.
bool advance_tuple(std::vector<int>& index, const std::vector<int>& sizes) {
  for (int i = static_cast<int>(index.size()) - 1; i >= 0; --i) {
    if (++index[static_cast<std::size_t>(i)] < sizes[static_cast<std::size_t>(i)]) return true;
    index[static_cast<std::size_t>(i)] = 0;
  }
  return false;
}

Integer integer_power(long base, int exponent) {
  Integer result = 1;
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// Sum over slots of slot * number-of-parts: the total base twist of a class.
int twist_weight(const MultiPartition& label) {
  int weight = 0;
  for (int i = 0; i < label.slots(); ++i) weight += i * label.component(i).length();
  return weight;
}

/// The underlying cycle type in S_m: the union of all components.
IntPartition type_of(const MultiPartition& label) {
  IntPartition result;
  for (const IntPartition& component : label.components()) {
    result = union_partitions(result, component);
  }
  return result;
}

MultiPartition fuse_multipartitions(const MultiPartition& a, const MultiPartition& b) {
  if (a.slots() != b.slots()) {
    fail(ErrorCode::ShapeMismatch, "multipartition slot counts differ");
  }
  std::vector<IntPartition> components;
  components.reserve(static_cast<std::size_t>(a.slots()));
  for (int i = 0; i < a.slots(); ++i) {
    components.push_back(union_partitions(a.component(i), b.component(i)));
  }
  return MultiPartition(std::move(components));
}

Integer exact_quotient(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || a % b != 0) {
    fail(ErrorCode::NotIntegral, what);
  }
  return a / b;
}

}  // namespace

// ---- MultiPartition ---------------------------------------------------------

MultiPartition::MultiPartition(std::vector<IntPartition> components)
    : components_(std::move(components)) {}

int MultiPartition::total() const {
  int sum = 0;
  for (const IntPartition& component : components_) sum += component.size();
  return sum;
}

const IntPartition& MultiPartition::component(int slot) const {
  if (slot < 0 || slot >= slots()) {
    fail(ErrorCode::InvalidArgument, "multipartition slot out of range");
  }
  return components_[static_cast<std::size_t>(slot)];
}

bool operator<(const MultiPartition& a, const MultiPartition& b) {
  return a.components_ < b.components_;
}

std::string MultiPartition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) os << ",";
    os << components_[i].to_string();
  }
  os << "]";
  return os.str();
}

std::vector<MultiPartition> multipartitions(int slots, int total) {
  if (slots < 1 || total < 0) {
    fail(ErrorCode::InvalidArgument, "multipartitions requires slots >= 1 and total >= 0");
  }
  std::vector<MultiPartition> result;
  std::vector<IntPartition> current(static_cast<std::size_t>(slots));
  auto recurse = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == slots - 1) {
      for (const IntPartition& last : partitions_of(remaining)) {
        current[static_cast<std::size_t>(slot)] = last;
        result.push_back(MultiPartition(current));
      }
      return;
    }
    for (int size = remaining; size >= 0; --size) {
      for (const IntPartition& here : partitions_of(size)) {
        current[static_cast<std::size_t>(slot)] = here;
        self(self, slot + 1, remaining - size);
      }
    }
  };
  recurse(recurse, 0, total);
  return result;
}

Integer wreath_class_centralizer_order(int c, const MultiPartition& label) {
  Integer order = 1;
  for (const IntPartition& component : label.components()) {
    order *= cycle_type_centralizer_order(component);
    order *= integer_power(c, component.length());
  }
  return order;
}

Integer wreath_irrep_dimension(int c, const MultiPartition& label) {
  if (label.slots() != c) {
    fail(ErrorCode::ShapeMismatch, "irreducible label has the wrong slot count");
  }
  Integer dim = factorial(label.total());
  for (const IntPartition& component : label.components()) {
    dim = exact_quotient(dim, factorial(component.size()), "multinomial is not integral");
    dim *= hook_length_dimension(component);
  }
  return dim;
}

// ---- WreathTable ------------------------------------------------------------

int WreathTable::index_of(const MultiPartition& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    fail(ErrorCode::NotFound, "label is not part of this wreath table", label.to_string());
  }
  return static_cast<int>(it - labels.begin());
}

namespace {

constexpr int kWreathCacheVersion = 1;

// Cache file: {"version":…, "c":…, "m":…, "values":{"[label]":[cell,…]}},
// one row per irreducible label, classes in multipartitions(c, m) order;
// cell = {"n": conductor, "c": [rational strings]} in the power basis.
bool load_wreath_from_cache(int c, int m, const std::vector<MultiPartition>& labels,
                            std::vector<std::vector<Cyclotomic>>& values) {
  const auto text =
      cache_read("wreath_" + std::to_string(c) + "_" + std::to_string(m) + ".json");
  if (!text) return false;
  try {
    const auto doc = nlohmann::json::parse(*text);
    if (doc.at("version").get<int>() != kWreathCacheVersion) return false;
    if (doc.at("c").get<int>() != c || doc.at("m").get<int>() != m) return false;
    const auto& rows = doc.at("values");
    if (rows.size() != labels.size()) return false;
    std::vector<std::vector<Cyclotomic>> loaded;
    loaded.reserve(labels.size());
    for (const MultiPartition& label : labels) {
      const auto it = rows.find(label.to_string());
      if (it == rows.end() || it->size() != labels.size()) return false;
      std::vector<Cyclotomic> out_row;
      out_row.reserve(labels.size());
      for (const auto& cell : *it) {
        std::vector<Rational> coeffs;
        for (const auto& coeff : cell.at("c")) {
          coeffs.push_back(Rational::parse(coeff.get<std::string>()));
        }
        out_row.push_back(Cyclotomic::from_coeffs(cell.at("n").get<unsigned>(),
                                                  std::move(coeffs)));
      }
      loaded.push_back(std::move(out_row));
    }
    values = std::move(loaded);
    return true;
  } catch (...) {
    return false;
  }
}

void store_wreath_in_cache(const WreathTable& table) {
  nlohmann::ordered_json doc;
  doc["version"] = kWreathCacheVersion;
  doc["c"] = table.c;
  doc["m"] = table.m;
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Cyclotomic& value : table.values[i]) {
      nlohmann::ordered_json cell;
      cell["n"] = value.conductor();
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (const Rational& coeff : value.coeffs()) coeffs.push_back(coeff.to_string());
      cell["c"] = std::move(coeffs);
      cells.push_back(std::move(cell));
    }
    rows[table.labels[i].to_string()] = std::move(cells);
  }
  doc["values"] = std::move(rows);
  cache_write("wreath_" + std::to_string(table.c) + "_" + std::to_string(table.m) + ".json",
              doc.dump());
}

WreathTable build_wreath_table(int c, int m) {
  WreathTable table;
  table.c = c;
  table.m = m;
  table.labels = multipartitions(c, m);
  table.group_order = integer_power(c, m) * factorial(m);
  const std::size_t count = table.labels.size();
  table.centralizer_orders.reserve(count);
  table.class_sizes.reserve(count);
  for (const MultiPartition& label : table.labels) {
    const Integer z = wreath_class_centralizer_order(c, label);
    table.centralizer_orders.push_back(z);
    table.class_sizes.push_back(
        exact_quotient(table.group_order, z, "class centralizer order does not divide"));
  }

  // The class-size formula is convention-heavy, so whenever the group is
  // small enough to enumerate, every class label and size is checked against
  // an element-by-element census before anything is cached.
  if (m >= 1 && table.group_order <= limits().oracle_group_order_max) {
    const RealizedCentralizer rc =
        realize_centralizer(IntPartition(std::vector<int>(static_cast<std::size_t>(m), c)));
    const auto census = class_census(rc);
    if (census.size() != count) {
      fail(ErrorCode::InvalidArgument, "wreath class census disagrees with the labels");
    }
    for (std::size_t i = 0; i < count; ++i) {
      CentralizerClass key;
      key.factors.push_back(table.labels[i]);
      const auto it = census.find(key);
      if (it == census.end() || Integer(it->second) != table.class_sizes[i]) {
        fail(ErrorCode::InvalidArgument, "wreath class size formula disagrees with census",
             table.labels[i].to_string());
      }
    }
  }

  if (load_wreath_from_cache(c, m, table.labels, table.values)) return table;

  table.values.assign(count, std::vector<Cyclotomic>(count));
  for (std::size_t irrep = 0; irrep < count; ++irrep) {
    const MultiPartition& lambda = table.labels[irrep];

    // Classes of the block subgroup prod_j (Z_c wr S_{m_j}): one
    // multipartition of m_j per slot j.
    std::vector<std::vector<MultiPartition>> slot_classes;
    slot_classes.reserve(static_cast<std::size_t>(c));
    std::vector<int> sizes;
    for (int j = 0; j < c; ++j) {
      slot_classes.push_back(multipartitions(c, lambda.component(j).size()));
      sizes.push_back(static_cast<int>(slot_classes.back().size()));
    }

    // Induced-character accumulation: acc[C] = sum over block classes D
    // fusing to C of (block character value at D) / z_H(D).
    std::map<MultiPartition, Cyclotomic> acc;
    std::vector<int> index(static_cast<std::size_t>(c), 0);
    do {
      Cyclotomic block_value(Rational(1));
      Integer z_h = 1;
      MultiPartition fused(std::vector<IntPartition>(static_cast<std::size_t>(c)));
      for (int j = 0; j < c; ++j) {
        const MultiPartition& d = slot_classes[static_cast<std::size_t>(j)]
                                              [static_cast<std::size_t>(index[static_cast<std::size_t>(j)])];
        z_h *= wreath_class_centralizer_order(c, d);
        block_value = block_value * Cyclotomic::root_of_unity(
                                        static_cast<unsigned>(c),
                                        static_cast<long>(j) * twist_weight(d));
        block_value = block_value * Cyclotomic(Rational(sn_character(lambda.component(j), type_of(d))));
        fused = fuse_multipartitions(fused, d);
      }
      Cyclotomic& slot = acc[fused];
      slot = slot + block_value * Cyclotomic(Rational(Integer(1), z_h));
    } while (advance_tuple(index, sizes));

    for (std::size_t cls = 0; cls < count; ++cls) {
      auto it = acc.find(table.labels[cls]);
      if (it == acc.end()) continue;
      table.values[irrep][cls] =
          it->second * Cyclotomic(Rational(table.centralizer_orders[cls]));
    }
  }
  store_wreath_in_cache(table);
  return table;
}

}  // namespace

const WreathTable& wreath_character_table(int c, int m) {
  if (c < 1 || m < 0) {
    fail(ErrorCode::InvalidArgument, "wreath table requires c >= 1 and m >= 0");
  }
  if (c * m > limits().wreath_table_max_points) {
    fail(ErrorCode::CapExceeded, "wreath table size exceeds the cap",
         "cap " + std::to_string(limits().wreath_table_max_points) + " points");
  }
  static std::map<std::pair<int, int>, WreathTable> tables;
  static std::mutex tables_mutex;
  const std::pair<int, int> key(c, m);
  {
    std::lock_guard<std::mutex> lock(tables_mutex);
    auto it = tables.find(key);
    if (it != tables.end()) return it->second;
  }
  WreathTable table = build_wreath_table(c, m);
  std::lock_guard<std::mutex> lock(tables_mutex);
  return tables.emplace(key, std::move(table)).first->second;
}

// ---- CentralizerDescriptor ---------------------------------------------------

CentralizerDescriptor CentralizerDescriptor::from_cycle_type(const IntPartition& mu) {
  CentralizerDescriptor descriptor;
  for (const auto& [cycle, mult] : mu.multiplicities()) {
    descriptor.factors.push_back(WreathFactor{cycle, mult});
  }
  return descriptor;
}

int CentralizerDescriptor::degree() const {
  int sum = 0;
  for (const WreathFactor& f : factors) sum += f.cycle * f.mult;
  return sum;
}

Integer CentralizerDescriptor::group_order() const {
  Integer order = 1;
  for (const WreathFactor& f : factors) {
    order *= integer_power(f.cycle, f.mult) * factorial(f.mult);
  }
  return order;
}

int CentralizerDescriptor::factor_index(int cycle) const {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].cycle == cycle) return static_cast<int>(i);
  }
  return -1;
}

std::string CentralizerDescriptor::to_string() const {
  if (factors.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << " x ";
    os << "Z" << factors[i].cycle << "wrS" << factors[i].mult;
  }
  return os.str();
}

std::string CentralizerLabel::to_string() const {
  if (factors.empty()) return "[]";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i > 0) os << " x ";
    os << factors[i].to_string();
  }
  return os.str();
}

// ---- CentralizerTable --------------------------------------------------------

int CentralizerTable::index_of(const CentralizerLabel& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    fail(ErrorCode::NotFound, "label is not part of this centralizer table", label.to_string());
  }
  return static_cast<int>(it - labels.begin());
}

CentralizerTable centralizer_character_table(const CentralizerDescriptor& descriptor) {
  CentralizerTable table;
  table.descriptor = descriptor;

  std::vector<const WreathTable*> factor_tables;
  std::vector<int> sizes;
  for (const WreathFactor& f : descriptor.factors) {
    factor_tables.push_back(&wreath_character_table(f.cycle, f.mult));
    sizes.push_back(static_cast<int>(factor_tables.back()->labels.size()));
  }
  table.group_order = descriptor.group_order();

  // Cartesian product of the factor labels, last factor fastest.
  std::vector<int> index(descriptor.factors.size(), 0);
  std::vector<std::vector<int>> tuples;
  do {
    CentralizerLabel label;
    Integer z = 1;
    for (std::size_t f = 0; f < factor_tables.size(); ++f) {
      label.factors.push_back(factor_tables[f]->labels[static_cast<std::size_t>(index[f])]);
      z *= factor_tables[f]->centralizer_orders[static_cast<std::size_t>(index[f])];
    }
    table.labels.push_back(std::move(label));
    table.centralizer_orders.push_back(z);
    table.class_sizes.push_back(
        exact_quotient(table.group_order, z, "class centralizer order does not divide"));
    tuples.push_back(index);
  } while (advance_tuple(index, sizes));

  const std::size_t count = table.labels.size();
  table.values.assign(count, std::vector<Cyclotomic>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      Cyclotomic value(Rational(1));
      for (std::size_t f = 0; f < factor_tables.size(); ++f) {
        value = value * factor_tables[f]->values[static_cast<std::size_t>(tuples[i][f])]
                                                [static_cast<std::size_t>(tuples[j][f])];
      }
      table.values[i][j] = value;
    }
  }
  return table;
}

namespace {

MultiPartition single_slot_label(int c, int slot, const IntPartition& shape) {
  std::vector<IntPartition> components(static_cast<std::size_t>(c));
  components[static_cast<std::size_t>(slot)] = shape;
  return MultiPartition(std::move(components));
}

std::vector<int> ones_partition(int m) { return std::vector<int>(static_cast<std::size_t>(m), 1); }

}  // namespace

CentralizerIrrep trivial_centralizer_irrep(const CentralizerDescriptor& descriptor) {
  CentralizerIrrep irrep;
  for (const WreathFactor& f : descriptor.factors) {
    irrep.factors.push_back(
        single_slot_label(f.cycle, 0, f.mult > 0 ? IntPartition({f.mult}) : IntPartition()));
  }
  return irrep;
}

CentralizerIrrep sign_centralizer_irrep(const CentralizerDescriptor& descriptor) {
  CentralizerIrrep irrep;
  for (const WreathFactor& f : descriptor.factors) {
    const int slot = f.cycle % 2 == 0 ? f.cycle / 2 : 0;
    IntPartition shape;
    if (f.mult > 0) {
      shape = f.cycle % 2 == 0 ? IntPartition({f.mult}) : IntPartition(ones_partition(f.mult));
    }
    irrep.factors.push_back(single_slot_label(f.cycle, slot, shape));
  }
  return irrep;
}

Integer centralizer_irrep_dimension(const CentralizerDescriptor& descriptor,
                                    const CentralizerIrrep& irrep) {
  if (irrep.factors.size() != descriptor.factors.size()) {
    fail(ErrorCode::ShapeMismatch, "label factor count does not match the descriptor");
  }
  Integer dim = 1;
  for (std::size_t f = 0; f < descriptor.factors.size(); ++f) {
    dim *= wreath_irrep_dimension(descriptor.factors[f].cycle, irrep.factors[f]);
  }
  return dim;
}

// ---- fusion and induction ----------------------------------------------------

CentralizerDescriptor fuse_descriptors(const CentralizerDescriptor& a,
                                       const CentralizerDescriptor& b) {
  std::map<int, int> mults;
  for (const WreathFactor& f : a.factors) mults[f.cycle] += f.mult;
  for (const WreathFactor& f : b.factors) mults[f.cycle] += f.mult;
  CentralizerDescriptor fused;
  for (const auto& [cycle, mult] : mults) fused.factors.push_back(WreathFactor{cycle, mult});
  return fused;
}

CentralizerClass fuse_classes(const CentralizerDescriptor& a, const CentralizerClass& ca,
                              const CentralizerDescriptor& b, const CentralizerClass& cb) {
  if (ca.factors.size() != a.factors.size() || cb.factors.size() != b.factors.size()) {
    fail(ErrorCode::ShapeMismatch, "class label does not match its descriptor");
  }
  const CentralizerDescriptor fused = fuse_descriptors(a, b);
  CentralizerClass result;
  for (const WreathFactor& f : fused.factors) {
    const int ia = a.factor_index(f.cycle);
    const int ib = b.factor_index(f.cycle);
    MultiPartition part(std::vector<IntPartition>(static_cast<std::size_t>(f.cycle)));
    if (ia >= 0) part = fuse_multipartitions(part, ca.factors[static_cast<std::size_t>(ia)]);
    if (ib >= 0) part = fuse_multipartitions(part, cb.factors[static_cast<std::size_t>(ib)]);
    result.factors.push_back(std::move(part));
  }
  return result;
}

std::map<CentralizerIrrep, long> decompose_induction(const CentralizerDescriptor& a,
                                                     const CentralizerIrrep& va,
                                                     const CentralizerDescriptor& b,
                                                     const CentralizerIrrep& vb) {
  const CentralizerDescriptor fused = fuse_descriptors(a, b);
  if (fused.group_order() > limits().odot_centralizer_order_max) {
    fail(ErrorCode::CapExceeded, "fused centralizer order exceeds the cap",
         "cap " + std::to_string(limits().odot_centralizer_order_max));
  }

  const CentralizerTable ta = centralizer_character_table(a);
  const CentralizerTable tb = centralizer_character_table(b);
  const CentralizerTable tf = centralizer_character_table(fused);
  const int ia = ta.index_of(va);
  const int ib = tb.index_of(vb);

  // Index of the fused class for every pair of subgroup classes.
  const std::size_t na = ta.labels.size();
  const std::size_t nb = tb.labels.size();
  std::vector<std::vector<int>> fuse_index(na, std::vector<int>(nb));
  for (std::size_t ja = 0; ja < na; ++ja) {
    for (std::size_t jb = 0; jb < nb; ++jb) {
      fuse_index[ja][jb] = tf.index_of(fuse_classes(a, ta.labels[ja], b, tb.labels[jb]));
    }
  }

  const Integer index = exact_quotient(tf.group_order, ta.group_order * tb.group_order,
                                       "subgroup order does not divide the group order");

  std::map<CentralizerIrrep, long> result;
  Integer dimension_sum = 0;
  for (std::size_t l = 0; l < tf.labels.size(); ++l) {
    Cyclotomic sum(Rational(0));
    for (std::size_t ja = 0; ja < na; ++ja) {
      for (std::size_t jb = 0; jb < nb; ++jb) {
        Cyclotomic term = ta.values[static_cast<std::size_t>(ia)][ja] *
                          tb.values[static_cast<std::size_t>(ib)][jb] *
                          tf.values[l][static_cast<std::size_t>(fuse_index[ja][jb])].conjugate();
        const Integer weight = ta.centralizer_orders[ja] * tb.centralizer_orders[jb];
        sum = sum + term * Cyclotomic(Rational(Integer(1), weight));
      }
    }
    const Integer mult = sum.as_rational().as_integer();
    if (mult < 0) {
      fail(ErrorCode::NotIntegral, "negative induced multiplicity",
           tf.labels[l].to_string());
    }
    if (mult != 0) {
      result.emplace(tf.labels[l], mult.get_si());
      dimension_sum += mult * centralizer_irrep_dimension(fused, tf.labels[l]);
    }
  }

  const Integer expected =
      index * centralizer_irrep_dimension(a, va) * centralizer_irrep_dimension(b, vb);
  if (dimension_sum != expected) {
    fail(ErrorCode::NotIntegral, "induced dimensions do not add up",
         dimension_sum.get_str() + " vs " + expected.get_str());
  }
  return result;
}

}  // namespace repst
