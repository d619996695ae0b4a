// Copyright 2026 The pflab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pflab/pfaffian_number.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "pflab/errors.hpp"
#include "pflab/matchings.hpp"

namespace pflab {

namespace {

using Words = std::vector<std::uint64_t>;

// Distinct sign vectors up to negation. Bit r of a vector is set when the
// sign of matching r differs from the sign of matching 0.
struct SignVectors {
  std::size_t rows = 0;
  Words all_rows;
  std::vector<Words> vectors;
  std::vector<std::size_t> class_of;
};

SignVectors collect_sign_vectors(const std::vector<Orientation>& reps,
                                 const std::vector<Matching>& matchings) {
  SignVectors out;
  out.rows = matchings.size();
  const std::size_t words = (out.rows + 63) / 64;
  out.all_rows.assign(words, 0);
  for (std::size_t r = 0; r < out.rows; ++r) out.all_rows[r / 64] |= 1ull << (r % 64);
  std::map<Words, std::size_t> seen;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    Words v(words, 0);
    const Sign base = matching_sign(reps[c], matchings.front());
    for (std::size_t r = 1; r < out.rows; ++r) {
      if (matching_sign(reps[c], matchings[r]) != base) v[r / 64] |= 1ull << (r % 64);
    }
    if (seen.emplace(v, out.vectors.size()).second) {
      out.vectors.push_back(std::move(v));
      out.class_of.push_back(c);
    }
  }
  return out;
}

// Whether 1 lies in the column span of the ±1 matrix whose rows are the
// patterns present in a subset's signature matrix. Bit j of pattern p is set
// when column j is -1 in that row.
class FeasibilityCache {
 public:
  explicit FeasibilityCache(int k) : k_(k) {
    if (k_ <= 4) table_.assign(std::size_t{1} << (1u << k_), -1);
  }

  bool feasible(const Words& present) {
    if (k_ <= 4) {
      std::int8_t& slot = table_[present[0]];
      if (slot < 0) slot = compute(present) ? 1 : 0;
      return slot == 1;
    }
    auto it = map_.find(present);
    if (it != map_.end()) return it->second;
    bool f = compute(present);
    map_.emplace(present, f);
    return f;
  }

 private:
  bool compute(const Words& present) const {
    std::vector<RationalVector> rows;
    const std::size_t patterns = std::size_t{1} << k_;
    for (std::size_t p = 0; p < patterns; ++p) {
      if (!(present[p / 64] >> (p % 64) & 1u)) continue;
      RationalVector row(k_);
      for (int j = 0; j < k_; ++j) row[j] = (p >> j & 1u) ? -1 : 1;
      rows.push_back(std::move(row));
    }
    RationalMatrix a = RationalMatrix::from_rows(rows);
    return solve(a, RationalVector(rows.size(), Rational(1))).has_value();
  }

  int k_;
  std::vector<std::int8_t> table_;
  std::map<Words, bool> map_;
};

struct SharedState {
  std::atomic<std::size_t> best_first;
  std::atomic<bool> timed_out{false};
  std::chrono::steady_clock::time_point deadline;
  bool has_deadline = false;
};

// Lexicographic search of k-subsets with a fixed first element.
class SubsetSearch {
 public:
  SubsetSearch(const SignVectors& sv, int k, SharedState& shared)
      : sv_(sv), k_(k), shared_(shared), cache_(k),
        pattern_words_(((std::size_t{1} << k) + 63) / 64) {}

  std::optional<std::vector<std::size_t>> run(std::size_t first) {
    chosen_.assign(1, first);
    std::vector<Words> masks{sv_.all_rows};
    if (k_ == 1) {
      if (leaf(masks, first)) return chosen_;
      return std::nullopt;
    }
    std::vector<Words> next = split(masks, sv_.vectors[first]);
    if (extend(1, first + 1, next)) return chosen_;
    return std::nullopt;
  }

 private:
  bool aborted() {
    if (shared_.timed_out.load(std::memory_order_relaxed)) return true;
    if (shared_.best_first.load(std::memory_order_relaxed) < chosen_.front()) {
      return true;
    }
    if (shared_.has_deadline && ++ticks_ % 4096 == 0 &&
        std::chrono::steady_clock::now() > shared_.deadline) {
      shared_.timed_out.store(true);
      return true;
    }
    return false;
  }

  std::vector<Words> split(const std::vector<Words>& masks, const Words& v) const {
    const std::size_t half = masks.size();
    std::vector<Words> out(2 * half, Words(v.size(), 0));
    for (std::size_t q = 0; q < half; ++q) {
      for (std::size_t w = 0; w < v.size(); ++w) {
        out[q][w] = masks[q][w] & ~v[w];
        out[q + half][w] = masks[q][w] & v[w];
      }
    }
    return out;
  }

  // Tests the subset chosen_ + {c}; masks partition the rows by the patterns
  // of the columns chosen so far.
  bool leaf(const std::vector<Words>& masks, std::size_t c) {
    const Words& v = sv_.vectors[c];
    const std::size_t half = masks.size();
    Words present(pattern_words_, 0);
    for (std::size_t q = 0; q < half; ++q) {
      bool low = false, high = false;
      for (std::size_t w = 0; w < v.size(); ++w) {
        low = low || (masks[q][w] & ~v[w]) != 0;
        high = high || (masks[q][w] & v[w]) != 0;
      }
      if (low) present[q / 64] |= 1ull << (q % 64);
      if (high) present[(q + half) / 64] |= 1ull << ((q + half) % 64);
    }
    return cache_.feasible(present);
  }

  bool extend(int depth, std::size_t start, const std::vector<Words>& masks) {
    const std::size_t n = sv_.vectors.size();
    if (depth == k_ - 1) {
      for (std::size_t c = start; c < n; ++c) {
        if (aborted()) return false;
        if (leaf(masks, c)) {
          chosen_.push_back(c);
          return true;
        }
      }
      return false;
    }
    const std::size_t needed = static_cast<std::size_t>(k_ - depth);
    for (std::size_t c = start; c + needed <= n; ++c) {
      if (aborted()) return false;
      std::vector<Words> next = split(masks, sv_.vectors[c]);
      chosen_.push_back(c);
      if (extend(depth + 1, c + 1, next)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const SignVectors& sv_;
  int k_;
  SharedState& shared_;
  FeasibilityCache cache_;
  std::size_t pattern_words_;
  std::vector<std::size_t> chosen_;
  std::uint64_t ticks_ = 0;
};

// Lexicographically first feasible k-subset, or nullopt (check timed_out).
std::optional<std::vector<std::size_t>> search_k(const SignVectors& sv, int k,
                                                 int jobs, SharedState& shared) {
  const std::size_t n = sv.vectors.size();
  if (static_cast<std::size_t>(k) > n) return std::nullopt;
  const std::size_t firsts = n - static_cast<std::size_t>(k) + 1;
  shared.best_first.store(firsts);
  std::vector<std::optional<std::vector<std::size_t>>> found(firsts);
  auto worker = [&](std::size_t offset, std::size_t stride) {
    SubsetSearch search(sv, k, shared);
    for (std::size_t first = offset; first < firsts; first += stride) {
      if (shared.timed_out.load() || shared.best_first.load() < first) return;
      auto hit = search.run(first);
      if (hit) {
        found[first] = std::move(hit);
        std::size_t current = shared.best_first.load();
        while (first < current &&
               !shared.best_first.compare_exchange_weak(current, first)) {
        }
        return;
      }
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, firsts));
  if (workers == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(worker, w, workers);
    for (auto& t : threads) t.join();
  }
  for (auto& hit : found) {
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace

PfaffianNumberResult pfaffian_number(const Graph& g, const SearchOptions& options) {
  if (options.k_budget < 1) throw DomainError("k budget must be at least 1");
  auto matchings = enumerate_perfect_matchings(g);
  if (matchings.empty()) throw DomainError("pfaffian_number: graph is not matchable");
  GraphPtr shared_graph = share(g);
  auto reps = orientation_class_representatives(shared_graph, options.limits);
  SignVectors sv = collect_sign_vectors(reps, matchings);

  PfaffianNumberResult result;
  result.class_count = reps.size();
  result.distinct_sign_vectors = sv.vectors.size();
  result.matching_count = matchings.size();

  SharedState shared;
  if (options.time_budget.count() > 0) {
    shared.has_deadline = true;
    shared.deadline = std::chrono::steady_clock::now() + options.time_budget;
  }
  for (int k = 1; k <= options.k_budget; ++k) {
    auto hit = search_k(sv, k, std::max(1, options.jobs), shared);
    if (shared.timed_out.load()) {
      result.k = k;
      result.status = SearchStatus::kLowerBoundOnly;
      result.budget_note = "time budget exhausted while searching k = " +
                           std::to_string(k);
      return result;
    }
    if (!hit) continue;
    std::vector<Orientation> columns;
    for (std::size_t idx : *hit) {
      result.witness_classes.push_back(sv.class_of[idx]);
      columns.push_back(reps[sv.class_of[idx]]);
    }
    KOrientation witness(std::move(columns));
    auto solution = solve_pfaffian_system(signature_matrix(witness, matchings));
    if (!solution) {
      throw VerificationError("pfaffian_number: witness failed the exact solve");
    }
    result.k = k;
    result.status = SearchStatus::kExact;
    result.witness = std::move(witness);
    result.solution = std::move(solution);
    return result;
  }
  result.k = options.k_budget + 1;
  result.status = SearchStatus::kLowerBoundOnly;
  result.budget_note = "k budget " + std::to_string(options.k_budget) + " exhausted";
  return result;
}

}  // namespace pflab
