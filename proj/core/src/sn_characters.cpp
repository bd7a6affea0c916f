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

#include "repst/sn_characters.hpp"

#include <algorithm>
#include <mutex>
#include <string>

#include <json.hpp>

#include "repst/cache.hpp"
#include "repst/error.hpp"
#include "repst/limits.hpp"

namespace repst {

namespace {

/// Beta numbers of lambda with m = length(lambda) rows: strictly decreasing
/// lambda_i + (m - 1 - i), 0-based.
std::vector<long> beta_numbers(const IntPartition& lambda) {
  const int m = lambda.length();
  std::vector<long> betas(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    betas[static_cast<std::size_t>(i)] = lambda.part(i) + (m - 1 - i);
  }
  return betas;
}

IntPartition partition_from_betas(std::vector<long> betas) {
  std::sort(betas.begin(), betas.end(), std::greater<long>());
  const int m = static_cast<int>(betas.size());
  std::vector<int> parts;
  for (int i = 0; i < m; ++i) {
    const long part = betas[static_cast<std::size_t>(i)] - (m - 1 - i);
    if (part > 0) parts.push_back(static_cast<int>(part));
  }
  return IntPartition(parts);
}

Integer sn_character_recurse(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.empty()) return 1;

  static std::map<std::pair<IntPartition, IntPartition>, Integer> memo;
  static std::mutex memo_mutex;
  const std::pair<IntPartition, IntPartition> key(lambda, mu);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }

  // Strip the largest part of mu as an r-hook of lambda in all ways.
  const long r = mu.part(0);
  std::vector<int> rest_parts(mu.parts().begin() + 1, mu.parts().end());
  const IntPartition rest(rest_parts);

  const std::vector<long> betas = beta_numbers(lambda);
  Integer total = 0;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const long target = betas[i] - r;
    if (target < 0) continue;
    if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
    long jumped = 0;
    for (long b : betas) {
      if (target < b && b < betas[i]) ++jumped;
    }
    std::vector<long> next = betas;
    next[i] = target;
    const Integer sub = sn_character_recurse(partition_from_betas(std::move(next)), rest);
    total += (jumped % 2 == 0) ? sub : -sub;
  }

  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(key, total);
  return total;
}

constexpr int kTableCacheVersion = 1;

// Cache file: {"version":…, "n":…, "values":{"(λ)":[row in class order]}},
// one row of character values per irreducible label, classes in
// partitions_of(n) order.
bool load_table_from_cache(int n, const std::vector<IntPartition>& labels,
                           std::vector<std::vector<Integer>>& values) {
  const auto text = cache_read("sn_" + std::to_string(n) + ".json");
  if (!text) return false;
  try {
    const auto doc = nlohmann::json::parse(*text);
    if (doc.at("version").get<int>() != kTableCacheVersion) return false;
    if (doc.at("n").get<int>() != n) return false;
    const auto& rows = doc.at("values");
    if (rows.size() != labels.size()) return false;
    std::vector<std::vector<Integer>> loaded;
    loaded.reserve(labels.size());
    for (const IntPartition& label : labels) {
      const auto it = rows.find(label.to_string());
      if (it == rows.end() || it->size() != labels.size()) return false;
      std::vector<Integer> out_row;
      out_row.reserve(labels.size());
      for (const auto& cell : *it) {
        out_row.emplace_back(cell.get<std::string>());
      }
      loaded.push_back(std::move(out_row));
    }
    values = std::move(loaded);
    return true;
  } catch (...) {
    return false;
  }
}

void store_table_in_cache(const SnCharacterTable& table) {
  nlohmann::ordered_json doc;
  doc["version"] = kTableCacheVersion;
  doc["n"] = table.n;
  nlohmann::ordered_json rows = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Integer& value : table.values[i]) cells.push_back(value.get_str());
    rows[table.labels[i].to_string()] = std::move(cells);
  }
  doc["values"] = std::move(rows);
  cache_write("sn_" + std::to_string(table.n) + ".json", doc.dump());
}

SnCharacterTable build_table(int n) {
  SnCharacterTable table;
  table.n = n;
  table.labels = partitions_of(n);
  const Integer order = factorial(n);
  table.class_sizes.reserve(table.labels.size());
  for (const IntPartition& mu : table.labels) {
    table.class_sizes.push_back(order / cycle_type_centralizer_order(mu));
  }
  if (load_table_from_cache(n, table.labels, table.values)) return table;

  table.values.assign(table.labels.size(), {});
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    table.values[i].reserve(table.labels.size());
    for (std::size_t j = 0; j < table.labels.size(); ++j) {
      table.values[i].push_back(sn_character(table.labels[i], table.labels[j]));
    }
  }
  store_table_in_cache(table);
  return table;
}

}  // namespace

Integer sn_character(const IntPartition& lambda, const IntPartition& mu) {
  if (lambda.size() != mu.size()) {
    fail(ErrorCode::InvalidArgument, "character argument sizes differ",
         lambda.to_string() + " vs " + mu.to_string());
  }
  return sn_character_recurse(lambda, mu);
}

int SnCharacterTable::index_of(const IntPartition& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    fail(ErrorCode::NotFound, "partition is not a label of this table", label.to_string());
  }
  return static_cast<int>(it - labels.begin());
}

const SnCharacterTable& sn_character_table(int n) {
  if (n < 0) fail(ErrorCode::InvalidArgument, "negative symmetric group degree");
  if (n > limits().sn_table_max_n) {
    fail(ErrorCode::CapExceeded, "character table degree exceeds the cap",
         "cap " + std::to_string(limits().sn_table_max_n));
  }
  static std::map<int, SnCharacterTable> tables;
  static std::mutex tables_mutex;
  {
    std::lock_guard<std::mutex> lock(tables_mutex);
    auto it = tables.find(n);
    if (it != tables.end()) return it->second;
  }
  SnCharacterTable table = build_table(n);
  std::lock_guard<std::mutex> lock(tables_mutex);
  return tables.emplace(n, std::move(table)).first->second;
}

std::vector<IntPartition> pieri_induction(const IntPartition& lambda) {
  return horizontal_strip_removals(lambda);
}

std::map<IntPartition, long> grk0_interpolation_product(const IntPartition& a,
                                                        const IntPartition& b) {
  std::map<IntPartition, long> result;
  for (const IntPartition& lambda : partitions_of(a.size() + b.size())) {
    const long c = lr_coefficient(a, b, lambda);
    if (c > 0) result.emplace(lambda, c);
  }
  return result;
}

}  // namespace repst
