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

#include "repst/diagram.hpp"

#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "repst/error.hpp"
#include "repst/limits.hpp"

namespace repst {

namespace {

void check_shape_cap(int upper, int lower) {
  if (upper < 0 || lower < 0) {
    fail(ErrorCode::InvalidArgument, "negative point count for a diagram morphism");
  }
  if (upper + lower > limits().diagram_points) {
    fail(ErrorCode::CapExceeded,
         "diagram morphism exceeds the point-count cap",
         std::to_string(upper) + " + " + std::to_string(lower) + " points, cap " +
             std::to_string(limits().diagram_points));
  }
}

/// Minimal union-find on 0..n-1 with path halving.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[b] = a;
  }

 private:
  std::vector<int> parent_;
};

long checked_power(long d, int exponent) {
  long result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (d != 0 && result > limits().eval_side / d) {
      fail(ErrorCode::CapExceeded, "evaluation matrix side exceeds the cap",
           "cap " + std::to_string(limits().eval_side));
    }
    result *= d;
  }
  if (result > limits().eval_side) {
    fail(ErrorCode::CapExceeded, "evaluation matrix side exceeds the cap",
         "cap " + std::to_string(limits().eval_side));
  }
  return result;
}

}  // namespace

DiagramMorphism::DiagramMorphism(int upper, int lower) : upper_(upper), lower_(lower) {
  check_shape_cap(upper, lower);
}

DiagramMorphism::DiagramMorphism(const SetPartition& diagram, Polynomial coeff)
    : upper_(diagram.upper()), lower_(diagram.lower()) {
  check_shape_cap(upper_, lower_);
  add_term(diagram, coeff);
}

DiagramMorphism DiagramMorphism::identity(int k) {
  return DiagramMorphism(SetPartition::identity(k));
}

Polynomial DiagramMorphism::coefficient(const SetPartition& diagram) const {
  auto it = terms_.find(diagram);
  return it == terms_.end() ? Polynomial() : it->second;
}

void DiagramMorphism::add_term(const SetPartition& diagram, const Polynomial& coeff) {
  if (coeff.is_zero()) return;
  if (diagram.upper() != upper_ || diagram.lower() != lower_) {
    fail(ErrorCode::ShapeMismatch, "diagram shape does not match the morphism shape");
  }
  auto [it, inserted] = terms_.emplace(diagram, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DiagramMorphism DiagramMorphism::operator-() const {
  DiagramMorphism result(upper_, lower_);
  for (const auto& [diagram, coeff] : terms_) result.terms_.emplace(diagram, -coeff);
  return result;
}

DiagramMorphism& DiagramMorphism::operator+=(const DiagramMorphism& rhs) {
  if (upper_ != rhs.upper_ || lower_ != rhs.lower_) {
    fail(ErrorCode::ShapeMismatch, "cannot add morphisms of different shapes");
  }
  for (const auto& [diagram, coeff] : rhs.terms_) add_term(diagram, coeff);
  return *this;
}

DiagramMorphism& DiagramMorphism::operator-=(const DiagramMorphism& rhs) {
  if (upper_ != rhs.upper_ || lower_ != rhs.lower_) {
    fail(ErrorCode::ShapeMismatch, "cannot subtract morphisms of different shapes");
  }
  for (const auto& [diagram, coeff] : rhs.terms_) add_term(diagram, -coeff);
  return *this;
}

DiagramMorphism& DiagramMorphism::operator*=(const Polynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [diagram, coeff] : terms_) coeff *= scalar;
  return *this;
}

std::string DiagramMorphism::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [diagram, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    const std::string c = coeff.to_string("t");
    if (c != "1") {
      if (c.find(' ') != std::string::npos) {
        os << "(" << c << ")*";
      } else {
        os << c << "*";
      }
    }
    os << diagram.to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DiagramMorphism& m) {
  return os << m.to_string();
}

std::pair<SetPartition, int> compose_diagrams(const SetPartition& a, const SetPartition& b) {
  if (a.lower() != b.upper()) {
    fail(ErrorCode::ShapeMismatch, "inner shapes differ in diagram composition",
         std::to_string(a.lower()) + " vs " + std::to_string(b.upper()));
  }
  const int k = a.upper();
  const int l = a.lower();
  const int m = b.lower();

  // Points 0..k-1: outer upper. Points k..k+l-1: interior. Points
  // k+l..k+l+m-1: outer lower.
  UnionFind uf(k + l + m);
  for (const auto& block : a.blocks()) {
    const int anchor = block.front() <= k ? block.front() - 1 : k + (block.front() - k - 1);
    for (int p : block) {
      const int id = p <= k ? p - 1 : k + (p - k - 1);
      uf.unite(anchor, id);
    }
  }
  for (const auto& block : b.blocks()) {
    const int first = block.front();
    const int anchor = first <= l ? k + (first - 1) : k + l + (first - l - 1);
    for (int p : block) {
      const int id = p <= l ? k + (p - 1) : k + l + (p - l - 1);
      uf.unite(anchor, id);
    }
  }

  // Group the outer points by component and count interior-only components.
  std::map<int, std::vector<int>> outer_blocks;
  for (int i = 1; i <= k; ++i) outer_blocks[uf.find(i - 1)].push_back(i);
  for (int j = 1; j <= m; ++j) outer_blocks[uf.find(k + l + j - 1)].push_back(k + j);

  std::vector<int> roots;
  for (int id = 0; id < k + l + m; ++id) roots.push_back(uf.find(id));
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  const int removed = static_cast<int>(roots.size() - outer_blocks.size());

  std::vector<std::vector<int>> blocks;
  blocks.reserve(outer_blocks.size());
  for (auto& [root, block] : outer_blocks) blocks.push_back(std::move(block));
  return {SetPartition(k, m, blocks), removed};
}

DiagramMorphism compose(const DiagramMorphism& a, const DiagramMorphism& b) {
  if (a.lower_ != b.upper_) {
    fail(ErrorCode::ShapeMismatch, "inner shapes differ in composition",
         std::to_string(a.lower_) + " vs " + std::to_string(b.upper_));
  }
  DiagramMorphism result(a.upper_, b.lower_);
  for (const auto& [da, ca] : a.terms_) {
    for (const auto& [db, cb] : b.terms_) {
      auto [diagram, removed] = compose_diagrams(da, db);
      result.add_term(diagram, ca * cb * Polynomial::monomial(removed, Rational(1)));
    }
  }
  return result;
}

DiagramMorphism tensor(const DiagramMorphism& a, const DiagramMorphism& b) {
  DiagramMorphism result(a.upper_ + b.upper_, a.lower_ + b.lower_);
  for (const auto& [da, ca] : a.terms_) {
    const auto signed_a = da.signed_blocks();
    for (const auto& [db, cb] : b.terms_) {
      std::vector<std::vector<int>> blocks = signed_a;
      for (const auto& block : db.signed_blocks()) {
        std::vector<int> shifted;
        shifted.reserve(block.size());
        for (int p : block) {
          shifted.push_back(p > 0 ? a.upper_ + p : p - a.lower_);
        }
        blocks.push_back(std::move(shifted));
      }
      result.add_term(SetPartition::from_signed(a.upper_ + b.upper_, a.lower_ + b.lower_, blocks),
                      ca * cb);
    }
  }
  return result;
}

DiagramMorphism x_basis_morphism(const SetPartition& pi) {
  static std::map<SetPartition, DiagramMorphism> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(pi);
    if (it != memo.end()) return it->second;
  }
  DiagramMorphism result(pi);
  for (const SetPartition& tau : pi.strict_coarsenings()) {
    result -= x_basis_morphism(tau);
  }
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(pi, result);
  }
  return result;
}

// ---- matrices ---------------------------------------------------------------

RationalMatrix RationalMatrix::identity(long n) {
  RationalMatrix m(n, n);
  for (long i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Rational RationalMatrix::trace() const {
  if (rows != cols) {
    fail(ErrorCode::ShapeMismatch, "trace of a non-square matrix");
  }
  Rational sum;
  for (long i = 0; i < rows; ++i) sum += at(i, i);
  return sum;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols != b.rows) {
    fail(ErrorCode::ShapeMismatch, "matrix product shape mismatch",
         std::to_string(a.cols) + " vs " + std::to_string(b.rows));
  }
  RationalMatrix result(a.rows, b.cols);
  for (long i = 0; i < a.rows; ++i) {
    for (long k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (long j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) result.at(i, j) += aik * bkj;
      }
    }
  }
  return result;
}

RationalMatrix RationalMatrix::kronecker(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix result(a.rows * b.rows, a.cols * b.cols);
  for (long ia = 0; ia < a.rows; ++ia) {
    for (long ja = 0; ja < a.cols; ++ja) {
      const Rational& v = a.at(ia, ja);
      if (v.is_zero()) continue;
      for (long ib = 0; ib < b.rows; ++ib) {
        for (long jb = 0; jb < b.cols; ++jb) {
          const Rational& w = b.at(ib, jb);
          if (!w.is_zero()) result.at(ia * b.rows + ib, ja * b.cols + jb) = v * w;
        }
      }
    }
  }
  return result;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

// ---- evaluation -------------------------------------------------------------

namespace {

/// Adds coeff to every entry of the matrix selected by assignments of values
/// to the blocks of the diagram. With distinct_values set, assignments must
/// be injective on blocks.
void accumulate_assignments(const SetPartition& diagram, long d, const Rational& coeff,
                            bool distinct_values, RationalMatrix& out) {
  const int k = diagram.upper();
  const int l = diagram.lower();
  const int blocks = diagram.block_count();

  std::vector<long> value(blocks, 0);
  std::vector<bool> used(static_cast<std::size_t>(d), false);

  // Recursive odometer over block values.
  auto recurse = [&](auto&& self, int block) -> void {
    if (block == blocks) {
      long col = 0;
      for (int p = 1; p <= k; ++p) col = col * d + value[diagram.block_index_of(p)];
      long row = 0;
      for (int p = k + 1; p <= k + l; ++p) row = row * d + value[diagram.block_index_of(p)];
      out.at(row, col) += coeff;
      return;
    }
    for (long v = 0; v < d; ++v) {
      if (distinct_values) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = true;
      }
      value[block] = v;
      self(self, block + 1);
      if (distinct_values) used[static_cast<std::size_t>(v)] = false;
    }
  };
  recurse(recurse, 0);
}

}  // namespace

RationalMatrix evaluate_diagram_functor(const DiagramMorphism& m, long d) {
  if (d < 0) {
    fail(ErrorCode::InvalidArgument, "evaluation requires a non-negative integer");
  }
  const long rows = checked_power(d, m.lower());
  const long cols = checked_power(d, m.upper());
  RationalMatrix out(rows, cols);
  for (const auto& [diagram, coeff] : m.terms()) {
    const Rational value = coeff.evaluate(Rational(d));
    if (value.is_zero()) continue;
    accumulate_assignments(diagram, d, value, /*distinct_values=*/false, out);
  }
  return out;
}

RationalMatrix evaluate_xbasis_functor(const SetPartition& pi, long d) {
  if (d < 0) {
    fail(ErrorCode::InvalidArgument, "evaluation requires a non-negative integer");
  }
  const long rows = checked_power(d, pi.lower());
  const long cols = checked_power(d, pi.upper());
  RationalMatrix out(rows, cols);
  accumulate_assignments(pi, d, Rational(1), /*distinct_values=*/true, out);
  return out;
}

// ---- distinguished morphisms ------------------------------------------------

DiagramMorphism unit_morphism() { return DiagramMorphism(SetPartition(0, 1, {{1}})); }

DiagramMorphism counit_morphism() { return DiagramMorphism(SetPartition(1, 0, {{1}})); }

DiagramMorphism merge_morphism() { return DiagramMorphism(SetPartition(2, 2, {{1, 2, 3, 4}})); }

DiagramMorphism crossing_morphism() {
  return DiagramMorphism(SetPartition(2, 2, {{1, 4}, {2, 3}}));
}

FrobeniusGenerators frobenius_generators() {
  return FrobeniusGenerators{unit_morphism(), counit_morphism(), merge_morphism(),
                             crossing_morphism()};
}

SetPartition permutation_pattern(const Permutation& g) {
  const int n = g.degree();
  std::vector<std::vector<int>> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    blocks.push_back({i + 1, n + g.apply(i) + 1});
  }
  return SetPartition(n, n, blocks);
}

DiagramMorphism permutation_morphism(const Permutation& g) {
  return DiagramMorphism(permutation_pattern(g));
}

}  // namespace repst
