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

#include "repst/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "repst/error.hpp"
#include "repst/limits.hpp"

namespace repst {

// ---- PermGroup ----------------------------------------------------------------

PermGroup PermGroup::from_elements(int degree, std::vector<Permutation> elements) {
  for (const Permutation& g : elements) {
    if (g.degree() != degree) {
      fail(ErrorCode::ShapeMismatch, "group element degree mismatch", g.to_string());
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup group{degree, std::move(elements)};
  if (!group.contains(Permutation::identity(degree))) {
    fail(ErrorCode::InvalidArgument, "group must contain the identity");
  }
  // Exhaustive closure check for small lists; larger lists are trusted.
  if (group.order() <= 500) {
    for (const Permutation& g : group.elements) {
      for (const Permutation& h : group.elements) {
        if (!group.contains(g * h)) {
          fail(ErrorCode::InvalidArgument, "element list is not closed under products");
        }
      }
    }
  }
  return group;
}

PermGroup PermGroup::closure(int degree, const std::vector<Permutation>& generators) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) {
      fail(ErrorCode::ShapeMismatch, "generator degree mismatch", g.to_string());
    }
  }
  std::set<Permutation> seen;
  std::deque<Permutation> frontier;
  seen.insert(Permutation::identity(degree));
  frontier.push_back(Permutation::identity(degree));
  while (!frontier.empty()) {
    const Permutation current = frontier.front();
    frontier.pop_front();
    for (const Permutation& g : generators) {
      Permutation next = current * g;
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > limits().oracle_group_order_max) {
          fail(ErrorCode::CapExceeded, "group closure exceeds the order cap",
               "cap " + std::to_string(limits().oracle_group_order_max));
        }
        frontier.push_back(std::move(next));
      }
    }
  }
  PermGroup group;
  group.degree = degree;
  group.elements.assign(seen.begin(), seen.end());
  return group;
}

PermGroup PermGroup::symmetric(int n) {
  PermGroup group;
  group.degree = n;
  group.elements = all_permutations(n);
  return group;
}

PermGroup PermGroup::product_disjoint(const PermGroup& a, const PermGroup& b) {
  PermGroup group;
  group.degree = a.degree + b.degree;
  group.elements.reserve(static_cast<std::size_t>(a.order() * b.order()));
  for (const Permutation& ga : a.elements) {
    for (const Permutation& gb : b.elements) {
      std::vector<int> images(static_cast<std::size_t>(group.degree));
      for (int i = 0; i < a.degree; ++i) images[static_cast<std::size_t>(i)] = ga.apply(i);
      for (int i = 0; i < b.degree; ++i) {
        images[static_cast<std::size_t>(a.degree + i)] = a.degree + gb.apply(i);
      }
      group.elements.emplace_back(std::move(images));
    }
  }
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

bool PermGroup::contains(const Permutation& g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

int PermGroup::index_of(const Permutation& g) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), g);
  if (it == elements.end() || !(*it == g)) {
    fail(ErrorCode::NotFound, "permutation is not a group element", g.to_string());
  }
  return static_cast<int>(it - elements.begin());
}

// ---- LinearMap ------------------------------------------------------------------

LinearMap LinearMap::zero(int rows, int cols) {
  LinearMap map;
  map.rows = rows;
  map.cols = cols;
  map.columns.assign(static_cast<std::size_t>(cols), {});
  return map;
}

LinearMap LinearMap::identity(int n) {
  LinearMap map = zero(n, n);
  for (int i = 0; i < n; ++i) {
    map.columns[static_cast<std::size_t>(i)].emplace_back(i, Cyclotomic(Rational(1)));
  }
  return map;
}

void LinearMap::add(int row, int col, const Cyclotomic& value) {
  if (row < 0 || row >= rows || col < 0 || col >= cols) {
    fail(ErrorCode::ShapeMismatch, "matrix entry out of range");
  }
  if (!value.is_zero()) columns[static_cast<std::size_t>(col)].emplace_back(row, value);
}

void LinearMap::normalize() {
  for (auto& column : columns) {
    std::sort(column.begin(), column.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Cyclotomic>> merged;
    for (auto& [row, value] : column) {
      if (!merged.empty() && merged.back().first == row) {
        merged.back().second = merged.back().second + value;
      } else {
        merged.emplace_back(row, value);
      }
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const auto& e) { return e.second.is_zero(); }),
                 merged.end());
    column = std::move(merged);
  }
}

Cyclotomic LinearMap::trace() const {
  if (rows != cols) fail(ErrorCode::ShapeMismatch, "trace of a non-square map");
  Cyclotomic sum(Rational(0));
  for (int j = 0; j < cols; ++j) {
    for (const auto& [row, value] : columns[static_cast<std::size_t>(j)]) {
      if (row == j) sum = sum + value;
    }
  }
  return sum;
}

LinearMap compose(const LinearMap& a, const LinearMap& b) {
  if (a.cols != b.rows) {
    fail(ErrorCode::ShapeMismatch, "map composition shape mismatch",
         std::to_string(a.cols) + " vs " + std::to_string(b.rows));
  }
  LinearMap result = LinearMap::zero(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    for (const auto& [mid, bv] : b.columns[static_cast<std::size_t>(j)]) {
      for (const auto& [row, av] : a.columns[static_cast<std::size_t>(mid)]) {
        result.columns[static_cast<std::size_t>(j)].emplace_back(row, av * bv);
      }
    }
  }
  result.normalize();
  return result;
}

LinearMap LinearMap::kronecker(const LinearMap& a, const LinearMap& b) {
  LinearMap result = zero(a.rows * b.rows, a.cols * b.cols);
  for (int ja = 0; ja < a.cols; ++ja) {
    for (const auto& [ra, va] : a.columns[static_cast<std::size_t>(ja)]) {
      for (int jb = 0; jb < b.cols; ++jb) {
        for (const auto& [rb, vb] : b.columns[static_cast<std::size_t>(jb)]) {
          result.columns[static_cast<std::size_t>(ja * b.cols + jb)].emplace_back(
              ra * b.rows + rb, va * vb);
        }
      }
    }
  }
  result.normalize();
  return result;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  LinearMap na = a;
  LinearMap nb = b;
  na.normalize();
  nb.normalize();
  return na.columns == nb.columns;
}

namespace {

LinearMap scale(LinearMap map, const Cyclotomic& factor) {
  for (auto& column : map.columns) {
    for (auto& [row, value] : column) value = value * factor;
  }
  map.normalize();
  return map;
}

}  // namespace

// ---- modules --------------------------------------------------------------------

const LinearMap& ExplicitModule::matrix_of(const Permutation& g) const {
  return action[static_cast<std::size_t>(group.index_of(g))];
}

ExplicitModule trivial_module(const PermGroup& group) {
  ExplicitModule module;
  module.group = group;
  module.dim = 1;
  module.action.assign(static_cast<std::size_t>(group.order()), LinearMap::identity(1));
  return module;
}

ExplicitModule sign_module(const PermGroup& group) {
  ExplicitModule module;
  module.group = group;
  module.dim = 1;
  module.action.reserve(static_cast<std::size_t>(group.order()));
  for (const Permutation& g : group.elements) {
    LinearMap m = LinearMap::zero(1, 1);
    m.add(0, 0, Cyclotomic(Rational(g.sign())));
    module.action.push_back(std::move(m));
  }
  return module;
}

ExplicitModule tensor_modules(const ExplicitModule& a, const ExplicitModule& b) {
  if (!(a.group.elements == b.group.elements)) {
    fail(ErrorCode::ShapeMismatch, "tensor of modules over different groups");
  }
  ExplicitModule module;
  module.group = a.group;
  module.dim = a.dim * b.dim;
  module.action.reserve(a.action.size());
  for (std::size_t i = 0; i < a.action.size(); ++i) {
    module.action.push_back(LinearMap::kronecker(a.action[i], b.action[i]));
  }
  return module;
}

ExplicitModule outer_tensor_module(const ExplicitModule& a, const ExplicitModule& b) {
  const int da = a.group.degree;
  const int db = b.group.degree;
  ExplicitModule module;
  module.group = PermGroup::product_disjoint(a.group, b.group);
  module.dim = a.dim * b.dim;
  module.action.reserve(static_cast<std::size_t>(module.group.order()));
  for (const Permutation& g : module.group.elements) {
    std::vector<int> left(static_cast<std::size_t>(da));
    std::vector<int> right(static_cast<std::size_t>(db));
    for (int i = 0; i < da; ++i) left[static_cast<std::size_t>(i)] = g.apply(i);
    for (int i = 0; i < db; ++i) right[static_cast<std::size_t>(i)] = g.apply(da + i) - da;
    module.action.push_back(LinearMap::kronecker(a.matrix_of(Permutation(left)),
                                                 b.matrix_of(Permutation(right))));
  }
  return module;
}

bool verify_module(const ExplicitModule& module) {
  for (std::size_t i = 0; i < module.action.size(); ++i) {
    for (std::size_t j = 0; j < module.action.size(); ++j) {
      const Permutation product = module.group.elements[i] * module.group.elements[j];
      if (!(compose(module.action[i], module.action[j]) == module.matrix_of(product))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Cyclotomic> module_character(const ExplicitModule& module) {
  std::vector<Cyclotomic> character;
  character.reserve(module.action.size());
  for (const LinearMap& m : module.action) character.push_back(m.trace());
  return character;
}

InducedModule induce_module(const ExplicitModule& small, const PermGroup& big) {
  const PermGroup& sub = small.group;
  if (sub.degree != big.degree) {
    fail(ErrorCode::ShapeMismatch, "subgroup and group act on different point counts");
  }
  for (const Permutation& g : sub.elements) {
    if (!big.contains(g)) {
      fail(ErrorCode::InvalidArgument, "module group is not a subgroup", g.to_string());
    }
  }

  // Left cosets rep*G, representatives in scan order (identity first).
  std::vector<int> coset_of(static_cast<std::size_t>(big.order()), -1);
  std::vector<Permutation> reps;
  for (int idx = 0; idx < big.order(); ++idx) {
    if (coset_of[static_cast<std::size_t>(idx)] >= 0) continue;
    const Permutation& rep = big.at(idx);
    const int coset = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (const Permutation& u : sub.elements) {
      coset_of[static_cast<std::size_t>(big.index_of(rep * u))] = coset;
    }
  }

  const int cosets = static_cast<int>(reps.size());
  const long induced_dim = static_cast<long>(cosets) * small.dim;
  if (induced_dim > limits().oracle_induced_dim_max) {
    fail(ErrorCode::CapExceeded, "induced module dimension exceeds the cap",
         "cap " + std::to_string(limits().oracle_induced_dim_max));
  }

  InducedModule induced;
  induced.coset_reps = reps;
  induced.inner_dim = small.dim;
  induced.module.group = big;
  induced.module.dim = static_cast<int>(induced_dim);
  induced.module.action.reserve(static_cast<std::size_t>(big.order()));
  for (const Permutation& g : big.elements) {
    LinearMap m = LinearMap::zero(induced.module.dim, induced.module.dim);
    for (int alpha = 0; alpha < cosets; ++alpha) {
      const Permutation moved = g * reps[static_cast<std::size_t>(alpha)];
      const int beta = coset_of[static_cast<std::size_t>(big.index_of(moved))];
      const Permutation u = reps[static_cast<std::size_t>(beta)].inverse() * moved;
      const LinearMap& inner = small.matrix_of(u);
      for (int j = 0; j < small.dim; ++j) {
        for (const auto& [r, v] : inner.columns[static_cast<std::size_t>(j)]) {
          m.add(beta * small.dim + r, alpha * small.dim + j, v);
        }
      }
    }
    m.normalize();
    induced.module.action.push_back(std::move(m));
  }
  return induced;
}

// ---- seminormal representations ----------------------------------------------

namespace {

/// Standard tableaux of a shape: per tableau, the (row, col) of each value
/// (0-based value index). Deterministic order: values placed in increasing
/// order, candidate rows tried top to bottom.
std::vector<std::vector<std::pair<int, int>>> standard_tableaux(const IntPartition& shape) {
  const int m = shape.size();
  const int height = shape.length();
  std::vector<std::vector<std::pair<int, int>>> result;
  std::vector<std::pair<int, int>> current(static_cast<std::size_t>(m));
  std::vector<int> filled(static_cast<std::size_t>(height), 0);
  auto recurse = [&](auto&& self, int value) -> void {
    if (value == m) {
      result.push_back(current);
      return;
    }
    for (int row = 0; row < height; ++row) {
      const int col = filled[static_cast<std::size_t>(row)];
      if (col >= shape.part(row)) continue;
      if (row > 0 && filled[static_cast<std::size_t>(row - 1)] <= col) continue;
      filled[static_cast<std::size_t>(row)] = col + 1;
      current[static_cast<std::size_t>(value)] = {row, col};
      self(self, value + 1);
      filled[static_cast<std::size_t>(row)] = col;
    }
  };
  recurse(recurse, 0);
  return result;
}

}  // namespace

SeminormalRep::SeminormalRep(const IntPartition& shape) : shape_(shape), degree_(shape.size()) {
  const auto tableaux = standard_tableaux(shape);
  const int dim = static_cast<int>(tableaux.size());

  std::map<std::vector<std::pair<int, int>>, int> index_of;
  for (int t = 0; t < dim; ++t) index_of.emplace(tableaux[static_cast<std::size_t>(t)], t);

  adjacent_.reserve(degree_ > 0 ? static_cast<std::size_t>(degree_ - 1) : 0);
  for (int k = 0; k + 1 < degree_; ++k) {
    LinearMap m = LinearMap::zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
      const auto& tab = tableaux[static_cast<std::size_t>(t)];
      const auto [row_a, col_a] = tab[static_cast<std::size_t>(k)];
      const auto [row_b, col_b] = tab[static_cast<std::size_t>(k + 1)];
      const int d = (col_b - row_b) - (col_a - row_a);  // axial distance
      m.add(t, t, Cyclotomic(Rational(1, d)));
      if (d != 1 && d != -1) {
        auto swapped = tab;
        std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k + 1)]);
        const int other = index_of.at(swapped);
        const Rational cross = d > 0 ? Rational(1) - Rational(1, static_cast<long>(d) * d)
                                     : Rational(1);
        m.add(other, t, Cyclotomic(cross));
      }
    }
    m.normalize();
    adjacent_.push_back(std::move(m));
  }
  dim_ = dim;
}

int SeminormalRep::dim() const { return dim_; }

LinearMap SeminormalRep::matrix_of(const Permutation& g) const {
  if (g.degree() != degree_) {
    fail(ErrorCode::ShapeMismatch, "permutation degree does not match the shape size");
  }
  // Sort g to the identity by adjacent swaps; the reversed word gives g.
  std::vector<int> word;
  Permutation w = g;
  while (!w.is_identity()) {
    for (int i = 0; i + 1 < degree_; ++i) {
      if (w.apply(i) > w.apply(i + 1)) {
        w = w * Permutation::from_cycles(degree_, {{i, i + 1}});
        word.push_back(i);
        break;
      }
    }
  }
  LinearMap result = LinearMap::identity(dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    result = compose(result, adjacent_[static_cast<std::size_t>(*it)]);
  }
  return result;
}

// ---- concrete centralizers -----------------------------------------------------

Permutation canonical_permutation(const IntPartition& mu) {
  const int n = mu.size();
  std::vector<std::vector<int>> cycles;
  int base = 0;
  // Shortest cycles first, on consecutive points.
  const std::vector<int>& parts = mu.parts();
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    std::vector<int> cycle(static_cast<std::size_t>(*it));
    for (int p = 0; p < *it; ++p) cycle[static_cast<std::size_t>(p)] = base + p;
    cycles.push_back(std::move(cycle));
    base += *it;
  }
  return Permutation::from_cycles(n, cycles);
}

RealizedCentralizer realize_centralizer(const IntPartition& mu) {
  return realize_centralizer_of(canonical_permutation(mu));
}

RealizedCentralizer realize_centralizer_of(const Permutation& sigma) {
  RealizedCentralizer rc;
  rc.sigma = sigma;
  const int n = sigma.degree();

  // Cycles grouped by length, ascending; within a length, by least point.
  std::map<int, std::vector<std::vector<int>>> by_length;
  for (const std::vector<int>& cycle : sigma.cycles(/*keep_fixed=*/true)) {
    by_length[static_cast<int>(cycle.size())].push_back(cycle);
  }
  std::vector<Permutation> generators;
  for (const auto& [length, cycles] : by_length) {
    rc.descriptor.factors.push_back(WreathFactor{length, static_cast<int>(cycles.size())});
    rc.factor_cycles.push_back(cycles);
    if (length > 1) {
      generators.push_back(Permutation::from_cycles(n, {cycles.front()}));
    }
    for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
      for (int p = 0; p < length; ++p) {
        images[static_cast<std::size_t>(cycles[i][static_cast<std::size_t>(p)])] =
            cycles[i + 1][static_cast<std::size_t>(p)];
        images[static_cast<std::size_t>(cycles[i + 1][static_cast<std::size_t>(p)])] =
            cycles[i][static_cast<std::size_t>(p)];
      }
      generators.emplace_back(std::move(images));
    }
  }
  rc.group = PermGroup::closure(n, generators);
  if (Integer(rc.group.order()) != rc.descriptor.group_order()) {
    fail(ErrorCode::InvalidArgument, "centralizer closure has unexpected order",
         std::to_string(rc.group.order()));
  }
  return rc;
}

namespace {

/// point -> (cycle index, position) lookup for one factor.
std::vector<std::pair<int, int>> factor_locations(const RealizedCentralizer& rc, int factor) {
  const int n = rc.sigma.degree();
  std::vector<std::pair<int, int>> location(static_cast<std::size_t>(n), {-1, -1});
  const auto& cycles = rc.factor_cycles[static_cast<std::size_t>(factor)];
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t p = 0; p < cycles[i].size(); ++p) {
      location[static_cast<std::size_t>(cycles[i][p])] = {static_cast<int>(i),
                                                          static_cast<int>(p)};
    }
  }
  return location;
}

}  // namespace

FactorCoordinates factor_coordinates(const RealizedCentralizer& rc, int factor,
                                     const Permutation& z) {
  const auto& cycles = rc.factor_cycles[static_cast<std::size_t>(factor)];
  const auto location = factor_locations(rc, factor);
  FactorCoordinates coords;
  coords.cycle_image.reserve(cycles.size());
  coords.twists.reserve(cycles.size());
  for (const auto& cycle : cycles) {
    const int image = z.apply(cycle.front());
    const auto [image_cycle, position] = location[static_cast<std::size_t>(image)];
    if (image_cycle < 0) {
      fail(ErrorCode::ShapeMismatch, "element does not preserve the cycle structure",
           z.to_string());
    }
    coords.cycle_image.push_back(image_cycle);
    coords.twists.push_back(position);
  }
  return coords;
}

CentralizerClass classify_element(const RealizedCentralizer& rc, const Permutation& z) {
  if (z.degree() != rc.sigma.degree()) {
    fail(ErrorCode::ShapeMismatch, "element degree does not match the centralizer");
  }
  CentralizerClass label;
  for (std::size_t f = 0; f < rc.descriptor.factors.size(); ++f) {
    const int c = rc.descriptor.factors[f].cycle;
    const FactorCoordinates coords = factor_coordinates(rc, static_cast<int>(f), z);
    const Permutation on_cycles{std::vector<int>(coords.cycle_image)};
    std::vector<std::vector<int>> slot_parts(static_cast<std::size_t>(c));
    for (const std::vector<int>& orbit : on_cycles.cycles(/*keep_fixed=*/true)) {
      long twist = 0;
      for (int index : orbit) twist += coords.twists[static_cast<std::size_t>(index)];
      const int residue = static_cast<int>(((twist % c) + c) % c);
      slot_parts[static_cast<std::size_t>(residue)].push_back(static_cast<int>(orbit.size()));
    }
    std::vector<IntPartition> components;
    components.reserve(static_cast<std::size_t>(c));
    for (auto& parts : slot_parts) components.push_back(IntPartition::from_unsorted(parts));
    label.factors.push_back(MultiPartition(std::move(components)));
  }
  return label;
}

Permutation class_representative(const RealizedCentralizer& rc, const CentralizerClass& label) {
  if (label.factors.size() != rc.descriptor.factors.size()) {
    fail(ErrorCode::ShapeMismatch, "class label does not match the centralizer");
  }
  const int n = rc.sigma.degree();
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;

  for (std::size_t f = 0; f < rc.descriptor.factors.size(); ++f) {
    const int c = rc.descriptor.factors[f].cycle;
    const int m = rc.descriptor.factors[f].mult;
    const MultiPartition& part = label.factors[f];
    if (part.slots() != c || part.total() != m) {
      fail(ErrorCode::ShapeMismatch, "class label does not match the centralizer",
           part.to_string());
    }
    const auto& cycles = rc.factor_cycles[f];
    int next = 0;
    for (int slot = 0; slot < c; ++slot) {
      for (int length : part.component(slot).parts()) {
        for (int a = 0; a < length; ++a) {
          const auto& src = cycles[static_cast<std::size_t>(next + a)];
          const auto& dst = cycles[static_cast<std::size_t>(next + (a + 1) % length)];
          const int twist = a + 1 == length ? slot : 0;
          for (int p = 0; p < c; ++p) {
            images[static_cast<std::size_t>(src[static_cast<std::size_t>(p)])] =
                dst[static_cast<std::size_t>((p + twist) % c)];
          }
        }
        next += length;
      }
    }
  }

  Permutation z{std::move(images)};
  if (!rc.group.contains(z)) {
    fail(ErrorCode::InvalidArgument, "constructed representative is not in the centralizer");
  }
  if (!(classify_element(rc, z) == label)) {
    fail(ErrorCode::InvalidArgument, "constructed representative has the wrong class");
  }
  return z;
}

std::map<CentralizerClass, long> class_census(const RealizedCentralizer& rc) {
  std::map<CentralizerClass, long> census;
  for (const Permutation& z : rc.group.elements) {
    ++census[classify_element(rc, z)];
  }
  return census;
}

// ---- explicit centralizer irreducibles -----------------------------------------

namespace {

/// The factor subgroup of rc on the f-th factor's points (identity off it).
PermGroup factor_group(const RealizedCentralizer& rc, int f) {
  const int n = rc.sigma.degree();
  const auto& cycles = rc.factor_cycles[static_cast<std::size_t>(f)];
  const int length = rc.descriptor.factors[static_cast<std::size_t>(f)].cycle;
  std::vector<Permutation> generators;
  if (length > 1) {
    generators.push_back(Permutation::from_cycles(n, {cycles.front()}));
  }
  for (std::size_t i = 0; i + 1 < cycles.size(); ++i) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
    for (int p = 0; p < length; ++p) {
      images[static_cast<std::size_t>(cycles[i][static_cast<std::size_t>(p)])] =
          cycles[i + 1][static_cast<std::size_t>(p)];
      images[static_cast<std::size_t>(cycles[i + 1][static_cast<std::size_t>(p)])] =
          cycles[i][static_cast<std::size_t>(p)];
    }
    generators.emplace_back(std::move(images));
  }
  return PermGroup::closure(n, generators);
}

/// The block subgroup of the f-th factor for the slot sizes of an
/// irreducible label: consecutive cycles are assigned to slots.
PermGroup block_subgroup(const RealizedCentralizer& rc, int f, const MultiPartition& label) {
  const int n = rc.sigma.degree();
  const auto& cycles = rc.factor_cycles[static_cast<std::size_t>(f)];
  const int length = rc.descriptor.factors[static_cast<std::size_t>(f)].cycle;
  std::vector<Permutation> generators;
  int offset = 0;
  for (int slot = 0; slot < label.slots(); ++slot) {
    const int size = label.component(slot).size();
    if (size > 0 && length > 1) {
      generators.push_back(
          Permutation::from_cycles(n, {cycles[static_cast<std::size_t>(offset)]}));
    }
    for (int i = offset; i + 1 < offset + size; ++i) {
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
      for (int p = 0; p < length; ++p) {
        images[static_cast<std::size_t>(
            cycles[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)])] =
            cycles[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p)];
        images[static_cast<std::size_t>(
            cycles[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(p)])] =
            cycles[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
      }
      generators.emplace_back(std::move(images));
    }
    offset += size;
  }
  return PermGroup::closure(n, generators);
}

/// The explicit irreducible of one wreath factor: the block subgroup acts by
/// zeta-twisted outer tensors of seminormal modules; induce up to the factor
/// group.
ExplicitModule factor_irrep_module(const RealizedCentralizer& rc, int f,
                                   const MultiPartition& label) {
  const int c = rc.descriptor.factors[static_cast<std::size_t>(f)].cycle;
  PermGroup block = block_subgroup(rc, f, label);

  std::vector<SeminormalRep> slot_reps;
  std::vector<int> offsets;
  int offset = 0;
  int dim = 1;
  for (int slot = 0; slot < c; ++slot) {
    slot_reps.emplace_back(label.component(slot));
    offsets.push_back(offset);
    offset += label.component(slot).size();
    dim *= slot_reps.back().dim();
  }

  ExplicitModule inner;
  inner.dim = dim;
  inner.action.reserve(static_cast<std::size_t>(block.order()));
  for (const Permutation& h : block.elements) {
    const FactorCoordinates coords = factor_coordinates(rc, f, h);
    LinearMap matrix = LinearMap::identity(1);
    Cyclotomic twist(Rational(1));
    for (int slot = 0; slot < c; ++slot) {
      const int size = label.component(slot).size();
      const int base = offsets[static_cast<std::size_t>(slot)];
      std::vector<int> images(static_cast<std::size_t>(size));
      long twist_sum = 0;
      for (int i = 0; i < size; ++i) {
        const int image = coords.cycle_image[static_cast<std::size_t>(base + i)] - base;
        if (image < 0 || image >= size) {
          fail(ErrorCode::ShapeMismatch, "block element leaves its slot");
        }
        images[static_cast<std::size_t>(i)] = image;
        twist_sum += coords.twists[static_cast<std::size_t>(base + i)];
      }
      twist = twist * Cyclotomic::root_of_unity(static_cast<unsigned>(c),
                                                static_cast<long>(slot) * twist_sum);
      matrix = LinearMap::kronecker(
          matrix, slot_reps[static_cast<std::size_t>(slot)].matrix_of(Permutation(images)));
    }
    inner.action.push_back(scale(std::move(matrix), twist));
  }
  inner.group = std::move(block);

  PermGroup factor = factor_group(rc, f);
  return induce_module(inner, factor).module;
}

}  // namespace

ExplicitModule centralizer_irrep_module(const RealizedCentralizer& rc,
                                        const CentralizerIrrep& irrep) {
  if (irrep.factors.size() != rc.descriptor.factors.size()) {
    fail(ErrorCode::ShapeMismatch, "irreducible label does not match the centralizer");
  }
  const int n = rc.sigma.degree();
  std::vector<ExplicitModule> factor_modules;
  for (std::size_t f = 0; f < rc.descriptor.factors.size(); ++f) {
    const WreathFactor& factor = rc.descriptor.factors[f];
    if (irrep.factors[f].slots() != factor.cycle || irrep.factors[f].total() != factor.mult) {
      fail(ErrorCode::ShapeMismatch, "irreducible label does not match the centralizer",
           irrep.factors[f].to_string());
    }
    factor_modules.push_back(factor_irrep_module(rc, static_cast<int>(f), irrep.factors[f]));
  }

  ExplicitModule module;
  module.group = rc.group;
  module.dim = 1;
  for (const ExplicitModule& fm : factor_modules) module.dim *= fm.dim;
  module.action.reserve(static_cast<std::size_t>(rc.group.order()));
  for (const Permutation& z : rc.group.elements) {
    LinearMap matrix = LinearMap::identity(1);
    for (std::size_t f = 0; f < factor_modules.size(); ++f) {
      // The restriction of z to this factor's points, identity elsewhere.
      std::vector<int> images(static_cast<std::size_t>(n));
      for (int p = 0; p < n; ++p) images[static_cast<std::size_t>(p)] = p;
      for (const auto& cycle : rc.factor_cycles[f]) {
        for (int p : cycle) images[static_cast<std::size_t>(p)] = z.apply(p);
      }
      matrix = LinearMap::kronecker(matrix, factor_modules[f].matrix_of(Permutation(images)));
    }
    module.action.push_back(std::move(matrix));
  }
  return module;
}

std::map<CentralizerIrrep, long> brute_decompose(const RealizedCentralizer& rc,
                                                 const ExplicitModule& module) {
  if (!(module.group.elements == rc.group.elements)) {
    fail(ErrorCode::ShapeMismatch, "module group differs from the centralizer");
  }
  const CentralizerTable table = centralizer_character_table(rc.descriptor);

  std::vector<int> class_index;
  class_index.reserve(static_cast<std::size_t>(rc.group.order()));
  for (const Permutation& z : rc.group.elements) {
    class_index.push_back(table.index_of(classify_element(rc, z)));
  }
  const std::vector<Cyclotomic> character = module_character(module);

  std::map<CentralizerIrrep, long> result;
  Integer dimension_sum = 0;
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    Cyclotomic sum(Rational(0));
    for (std::size_t e = 0; e < character.size(); ++e) {
      sum = sum + character[e] * table.values[i][static_cast<std::size_t>(class_index[e])]
                                     .conjugate();
    }
    const Rational scaled = (sum * Cyclotomic(Rational(1, rc.group.order()))).as_rational();
    const Integer mult = scaled.as_integer();
    if (mult < 0) {
      fail(ErrorCode::NotIntegral, "negative multiplicity in trace decomposition");
    }
    if (mult != 0) {
      result.emplace(table.labels[i], mult.get_si());
      dimension_sum += mult * centralizer_irrep_dimension(rc.descriptor, table.labels[i]);
    }
  }
  if (dimension_sum != module.dim) {
    fail(ErrorCode::NotIntegral, "trace decomposition does not account for the dimension",
         dimension_sum.get_str() + " vs " + std::to_string(module.dim));
  }
  return result;
}

TowerElement brute_induction_product(const CenterSimple& a, const CenterSimple& b) {
  const RealizedCentralizer rca = realize_centralizer(a.mu);
  const RealizedCentralizer rcb = realize_centralizer(b.mu);
  const ExplicitModule mod_a = centralizer_irrep_module(rca, a.irrep);
  const ExplicitModule mod_b = centralizer_irrep_module(rcb, b.irrep);
  const ExplicitModule combined = outer_tensor_module(mod_a, mod_b);

  const int n = a.n;
  const int m = b.n;
  std::vector<int> images(static_cast<std::size_t>(n + m));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = rca.sigma.apply(i);
  for (int i = 0; i < m; ++i) images[static_cast<std::size_t>(n + i)] = n + rcb.sigma.apply(i);
  const RealizedCentralizer rc = realize_centralizer_of(Permutation(images));

  const InducedModule induced = induce_module(combined, rc.group);
  TowerElement result;
  const IntPartition fused = union_partitions(a.mu, b.mu);
  for (auto& [label, mult] : brute_decompose(rc, induced.module)) {
    result.emplace(CenterSimple{n + m, fused, label}, mult);
  }
  return result;
}

GradedPairCensus enumerate_graded_pairs(int n) {
  GradedPairCensus census;
  census.n = n;
  census.all_consistent = true;
  const PermGroup sym = PermGroup::symmetric(n);

  for (const IntPartition& mu : partitions_of(n)) {
    const RealizedCentralizer rc = realize_centralizer(mu);
    const CentralizerTable table = centralizer_character_table(rc.descriptor);
    for (const CentralizerIrrep& irrep : table.labels) {
      const ExplicitModule module = centralizer_irrep_module(rc, irrep);
      const InducedModule induced = induce_module(module, sym);

      // Grade of coset alpha: the conjugate rep*sigma*rep^{-1}.
      std::map<Permutation, int> grade_of;
      for (std::size_t alpha = 0; alpha < induced.coset_reps.size(); ++alpha) {
        const Permutation& rep = induced.coset_reps[alpha];
        grade_of.emplace(rep * rc.sigma * rep.inverse(), static_cast<int>(alpha));
      }

      bool consistent = grade_of.size() == induced.coset_reps.size();
      for (std::size_t e = 0; consistent && e < sym.elements.size(); ++e) {
        const Permutation& g = sym.elements[e];
        const LinearMap& matrix = induced.module.action[e];
        for (int col = 0; consistent && col < matrix.cols; ++col) {
          const int alpha = col / induced.inner_dim;
          const Permutation conjugate =
              g * (induced.coset_reps[static_cast<std::size_t>(alpha)] * rc.sigma *
                   induced.coset_reps[static_cast<std::size_t>(alpha)].inverse()) *
              g.inverse();
          const int beta = grade_of.at(conjugate);
          for (const auto& [row, value] : matrix.columns[static_cast<std::size_t>(col)]) {
            if (row / induced.inner_dim != beta) consistent = false;
          }
        }
      }
      census.all_consistent = census.all_consistent && consistent;
      ++census.pairs;
    }
  }
  return census;
}

// ---- Frobenius structure --------------------------------------------------------

namespace {

/// F(V) (x) F(W) -> F(V (x) W): diagonal on matching cosets.
LinearMap frobenius_mu(int dim_v, int dim_w, int cosets) {
  LinearMap m = LinearMap::zero(cosets * dim_v * dim_w, cosets * dim_v * cosets * dim_w);
  const Cyclotomic one(Rational(1));
  for (int alpha = 0; alpha < cosets; ++alpha) {
    for (int i = 0; i < dim_v; ++i) {
      for (int j = 0; j < dim_w; ++j) {
        const int col = (alpha * dim_v + i) * cosets * dim_w + alpha * dim_w + j;
        m.add(alpha * dim_v * dim_w + i * dim_w + j, col, one);
      }
    }
  }
  m.normalize();
  return m;
}

/// F(V (x) W) -> F(V) (x) F(W): duplicate the coset index.
LinearMap frobenius_delta(int dim_v, int dim_w, int cosets) {
  LinearMap m = LinearMap::zero(cosets * dim_v * cosets * dim_w, cosets * dim_v * dim_w);
  const Cyclotomic one(Rational(1));
  for (int alpha = 0; alpha < cosets; ++alpha) {
    for (int i = 0; i < dim_v; ++i) {
      for (int j = 0; j < dim_w; ++j) {
        m.add((alpha * dim_v + i) * cosets * dim_w + alpha * dim_w + j,
              alpha * dim_v * dim_w + i * dim_w + j, one);
      }
    }
  }
  m.normalize();
  return m;
}

LinearMap frobenius_eta(int cosets) {
  LinearMap m = LinearMap::zero(cosets, 1);
  for (int alpha = 0; alpha < cosets; ++alpha) m.add(alpha, 0, Cyclotomic(Rational(1)));
  m.normalize();
  return m;
}

LinearMap frobenius_eps(int cosets) {
  LinearMap m = LinearMap::zero(1, cosets);
  for (int alpha = 0; alpha < cosets; ++alpha) m.add(0, alpha, Cyclotomic(Rational(1)));
  m.normalize();
  return m;
}

}  // namespace

bool FrobeniusReport::passed() const {
  return separability && exchange_left && exchange_right && unit_left && unit_right &&
         counit_left && counit_right && mu_equivariant && delta_equivariant &&
         eta_equivariant && eps_equivariant;
}

std::string FrobeniusReport::to_string() const {
  auto word = [](bool b) { return b ? "pass" : "FAIL"; };
  std::ostringstream os;
  os << "separability: " << word(separability) << ", exchange_left: " << word(exchange_left)
     << ", exchange_right: " << word(exchange_right) << ", unit_left: " << word(unit_left)
     << ", unit_right: " << word(unit_right) << ", counit_left: " << word(counit_left)
     << ", counit_right: " << word(counit_right) << ", mu_equivariant: " << word(mu_equivariant)
     << ", delta_equivariant: " << word(delta_equivariant)
     << ", eta_equivariant: " << word(eta_equivariant)
     << ", eps_equivariant: " << word(eps_equivariant);
  return os.str();
}

FrobeniusReport frobenius_check(const ExplicitModule& v, const ExplicitModule& w,
                                const ExplicitModule& u, const PermGroup& big) {
  if (!(v.group.elements == w.group.elements) || !(v.group.elements == u.group.elements)) {
    fail(ErrorCode::ShapeMismatch, "modules must share one group");
  }
  if (big.order() > limits().frobenius_group_order_max) {
    fail(ErrorCode::CapExceeded, "group order exceeds the verification cap",
         "cap " + std::to_string(limits().frobenius_group_order_max));
  }

  const ExplicitModule vw = tensor_modules(v, w);
  const ExplicitModule wu = tensor_modules(w, u);
  const ExplicitModule vwu = tensor_modules(v, wu);
  const ExplicitModule triv = trivial_module(v.group);

  const InducedModule fv = induce_module(v, big);
  const InducedModule fw = induce_module(w, big);
  const InducedModule fu = induce_module(u, big);
  const InducedModule fvw = induce_module(vw, big);
  const InducedModule fwu = induce_module(wu, big);
  const InducedModule fvwu = induce_module(vwu, big);
  const InducedModule ftriv = induce_module(triv, big);
  const int k = static_cast<int>(fv.coset_reps.size());

  const LinearMap mu_vw = frobenius_mu(v.dim, w.dim, k);
  const LinearMap mu_wu = frobenius_mu(w.dim, u.dim, k);
  const LinearMap mu_v_wu = frobenius_mu(v.dim, w.dim * u.dim, k);
  const LinearMap mu_vw_u = frobenius_mu(v.dim * w.dim, u.dim, k);
  const LinearMap delta_vw = frobenius_delta(v.dim, w.dim, k);
  const LinearMap delta_wu = frobenius_delta(w.dim, u.dim, k);
  const LinearMap delta_v_wu = frobenius_delta(v.dim, w.dim * u.dim, k);
  const LinearMap delta_vw_u = frobenius_delta(v.dim * w.dim, u.dim, k);
  const LinearMap eta = frobenius_eta(k);
  const LinearMap eps = frobenius_eps(k);

  FrobeniusReport report;
  report.separability = compose(mu_vw, delta_vw) == LinearMap::identity(fvw.module.dim);

  report.exchange_left =
      compose(delta_vw_u, mu_v_wu) ==
      compose(LinearMap::kronecker(mu_vw, LinearMap::identity(fu.module.dim)),
              LinearMap::kronecker(LinearMap::identity(fv.module.dim), delta_wu));
  report.exchange_right =
      compose(delta_v_wu, mu_vw_u) ==
      compose(LinearMap::kronecker(LinearMap::identity(fv.module.dim), mu_wu),
              LinearMap::kronecker(delta_vw, LinearMap::identity(fu.module.dim)));

  report.unit_left =
      compose(frobenius_mu(1, v.dim, k),
              LinearMap::kronecker(eta, LinearMap::identity(fv.module.dim))) ==
      LinearMap::identity(fv.module.dim);
  report.unit_right =
      compose(frobenius_mu(v.dim, 1, k),
              LinearMap::kronecker(LinearMap::identity(fv.module.dim), eta)) ==
      LinearMap::identity(fv.module.dim);
  report.counit_left =
      compose(LinearMap::kronecker(eps, LinearMap::identity(fv.module.dim)),
              frobenius_delta(1, v.dim, k)) == LinearMap::identity(fv.module.dim);
  report.counit_right =
      compose(LinearMap::kronecker(LinearMap::identity(fv.module.dim), eps),
              frobenius_delta(v.dim, 1, k)) == LinearMap::identity(fv.module.dim);

  report.mu_equivariant = true;
  report.delta_equivariant = true;
  report.eta_equivariant = true;
  report.eps_equivariant = true;
  for (std::size_t e = 0; e < big.elements.size(); ++e) {
    const LinearMap fv_fw = LinearMap::kronecker(fv.module.action[e], fw.module.action[e]);
    if (!(compose(mu_vw, fv_fw) == compose(fvw.module.action[e], mu_vw))) {
      report.mu_equivariant = false;
    }
    if (!(compose(delta_vw, fvw.module.action[e]) == compose(fv_fw, delta_vw))) {
      report.delta_equivariant = false;
    }
    const LinearMap fv_fwu = LinearMap::kronecker(fv.module.action[e], fwu.module.action[e]);
    if (!(compose(mu_v_wu, fv_fwu) == compose(fvwu.module.action[e], mu_v_wu))) {
      report.mu_equivariant = false;
    }
    if (!(compose(delta_v_wu, fvwu.module.action[e]) == compose(fv_fwu, delta_v_wu))) {
      report.delta_equivariant = false;
    }
    if (!(compose(ftriv.module.action[e], eta) == eta)) report.eta_equivariant = false;
    if (!(compose(eps, ftriv.module.action[e]) == eps)) report.eps_equivariant = false;
  }
  return report;
}

}  // namespace repst
