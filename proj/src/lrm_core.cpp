// Copyright 2026 The lrmgray Authors.
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

#include "lrm/lrm_core.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>

#include "lrm/errors.hpp"

namespace lrm {

LrmParams LrmParams::make(std::size_t s, std::size_t t, std::size_t n) {
  if (s < 1) throw ParameterError("s >= 1 violated");
  if (s > t) throw ParameterError("s <= t violated");
  if (t > n) throw ParameterError("t <= n violated");
  if (n % s != 0) throw ParameterError("s | n violated");
  if (t > 255) throw ParameterError("t <= 255 violated");
  return LrmParams(s, t, n);
}

LocalPermSequence::LocalPermSequence(const LrmParams& params,
                                     std::span<const Permutation> perms)
    : params_(params) {
  if (perms.size() != params.window_count()) {
    throw ParameterError("expected " + std::to_string(params.window_count()) +
                         " windows, got " + std::to_string(perms.size()));
  }
  ranks_.reserve(params.window_count() * params.t());
  for (const auto& p : perms) {
    if (p.size() != params.t()) {
      throw InvalidPermutation("window of size " + std::to_string(p.size()) +
                               ", expected " + std::to_string(params.t()));
    }
    ranks_.insert(ranks_.end(), p.ranks().begin(), p.ranks().end());
  }
}

LocalPermSequence LocalPermSequence::from_ranks(const LrmParams& params,
                                                std::vector<int> flat) {
  const std::size_t t = params.t();
  if (flat.size() != params.window_count() * t) {
    throw ParameterError("expected " +
                         std::to_string(params.window_count() * t) +
                         " ranks, got " + std::to_string(flat.size()));
  }
  std::vector<bool> seen(t);
  for (std::size_t k = 0; k < params.window_count(); ++k) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t i = 0; i < t; ++i) {
      const int r = flat[k * t + i];
      if (r < 0 || static_cast<std::size_t>(r) >= t || seen[r]) {
        throw InvalidPermutation("window " + std::to_string(k) +
                                 " is not a permutation");
      }
      seen[r] = true;
    }
  }
  return LocalPermSequence(params, std::move(flat));
}

Permutation LocalPermSequence::perm(std::size_t k) const {
  const auto r = ranks(k);
  return Permutation(std::vector<int>(r.begin(), r.end()));
}

std::string LocalPermSequence::key() const {
  return std::string(ranks_.begin(), ranks_.end());
}

SuccinctState::SuccinctState(const LrmParams& params, std::vector<int> digits)
    : params_(params), digits_(std::move(digits)) {
  if (digits_.size() != params.n()) {
    throw ParameterError("expected " + std::to_string(params.n()) +
                         " digits, got " + std::to_string(digits_.size()));
  }
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (digits_[i] < 0 || digits_[i] > params.digit_max(i)) {
      throw DigitOutOfRange("digit " + std::to_string(i) + " = " +
                            std::to_string(digits_[i]) + " outside [0," +
                            std::to_string(params.digit_max(i)) + "]");
    }
  }
}

std::string SuccinctState::key() const {
  return std::string(digits_.begin(), digits_.end());
}

LocalPermSequence demodulate(const ChargeVector& c, const LrmParams& p) {
  const std::size_t n = p.n();
  const std::size_t t = p.t();
  if (c.size() != n) {
    throw ParameterError("expected " + std::to_string(n) + " charges, got " +
                         std::to_string(c.size()));
  }
  std::vector<int> flat(p.window_count() * t, 0);
  for (std::size_t k = 0; k < p.window_count(); ++k) {
    const std::size_t start = k * p.s();
    int* out = flat.data() + k * t;
    for (std::size_t i = 0; i < t; ++i) {
      const Charge ci = c[(start + i) % n];
      for (std::size_t j = 0; j < t; ++j) {
        if (c[(start + j) % n] < ci) ++out[i];
      }
    }
  }
  return LocalPermSequence::from_ranks(p, std::move(flat));
}

SuccinctState succinct(const LocalPermSequence& f) {
  const LrmParams& p = f.params();
  std::vector<int> digits(p.n());
  for (std::size_t k = 0; k < p.window_count(); ++k) {
    const auto r = f.ranks(k);
    for (std::size_t i = 0; i < p.s(); ++i) {
      int d = 0;
      for (std::size_t j = i + 1; j < p.t(); ++j) {
        if (r[j] < r[i]) ++d;
      }
      digits[k * p.s() + i] = d;
    }
  }
  return SuccinctState(p, std::move(digits));
}

namespace {

// Pairwise order relation over the cells: rel[a*n+b] is +1 if a is known to
// be lower than b, -1 if higher, 0 if unrelated.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n) : n_(n), rel_(n * n, 0) {}

  // Records a < b. Returns false on a contradiction.
  bool add_less(std::size_t a, std::size_t b) {
    std::int8_t& ab = rel_[a * n_ + b];
    if (ab == -1) return false;
    if (ab == 0) {
      ab = 1;
      rel_[b * n_ + a] = -1;
      log_.push_back(a * n_ + b);
    }
    return true;
  }

  std::size_t mark() const { return log_.size(); }
  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const std::size_t ab = log_.back();
      log_.pop_back();
      rel_[ab] = 0;
      rel_[(ab % n_) * n_ + ab / n_] = 0;
    }
  }

  // Imposes the order of one window. Returns false on a contradiction.
  bool add_window(std::size_t start, std::span<const int> ranks) {
    const std::size_t t = ranks.size();
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        if (ranks[i] < ranks[j] &&
            !add_less((start + i) % n_, (start + j) % n_)) {
          return false;
        }
      }
    }
    return true;
  }

  // Kahn's algorithm over the "lower than" edges. Returns the cells from
  // lowest to highest, or an empty vector on a cycle.
  std::vector<std::size_t> topological_order(std::mt19937_64* rng) const {
    std::vector<std::size_t> indegree(n_, 0);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (rel_[a * n_ + b] == 1) ++indegree[b];
      }
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < n_; ++v) {
      if (indegree[v] == 0) ready.push_back(v);
    }
    std::vector<std::size_t> order;
    order.reserve(n_);
    while (!ready.empty()) {
      std::size_t pick = 0;
      if (rng != nullptr) {
        pick = std::uniform_int_distribution<std::size_t>(
            0, ready.size() - 1)(*rng);
      } else {
        pick = static_cast<std::size_t>(
            std::min_element(ready.begin(), ready.end()) - ready.begin());
      }
      const std::size_t v = ready[pick];
      ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
      order.push_back(v);
      for (std::size_t b = 0; b < n_; ++b) {
        if (rel_[v * n_ + b] == 1 && --indegree[b] == 0) ready.push_back(b);
      }
    }
    if (order.size() != n_) order.clear();
    return order;
  }

 private:
  std::size_t n_;
  std::vector<std::int8_t> rel_;
  std::vector<std::size_t> log_;
};

}  // namespace

Realizability check_realizability(const LocalPermSequence& f) {
  const LrmParams& p = f.params();
  OrderRelation rel(p.n());
  for (std::size_t k = 0; k < p.window_count(); ++k) {
    if (!rel.add_window(k * p.s(), f.ranks(k))) {
      return Realizability::kContradictory;
    }
  }
  return rel.topological_order(nullptr).empty() ? Realizability::kCyclic
                                                : Realizability::kRealizable;
}

ChargeVector realize(const LocalPermSequence& f, std::mt19937_64* rng) {
  const LrmParams& p = f.params();
  OrderRelation rel(p.n());
  for (std::size_t k = 0; k < p.window_count(); ++k) {
    if (!rel.add_window(k * p.s(), f.ranks(k))) {
      throw NotRealizable("windows disagree on a shared pair of cells");
    }
  }
  const auto order = rel.topological_order(rng);
  if (order.empty()) throw NotRealizable("window orders form a cycle");
  std::vector<Charge> charges(p.n());
  for (std::size_t r = 0; r < order.size(); ++r) {
    charges[order[r]] = static_cast<Charge>(r);
  }
  return ChargeVector(std::move(charges));
}

namespace {

// All permutations of [t] whose first s factoradic digits equal `prefix`,
// in lexicographic order of their remaining digits.
std::vector<std::vector<int>> completions(std::span<const int> prefix,
                                          std::size_t t) {
  const std::size_t s = prefix.size();
  std::vector<int> digits(prefix.begin(), prefix.end());
  digits.resize(t, 0);
  std::vector<std::vector<int>> out;
  while (true) {
    const auto perm = from_factoradic(FactoradicDigits(digits));
    out.emplace_back(perm.ranks().begin(), perm.ranks().end());
    // Odometer over positions [s, t); position i has radix t - i.
    std::size_t i = t;
    bool wrapped = true;
    while (i > s) {
      --i;
      if (static_cast<std::size_t>(digits[i]) + 1 < t - i) {
        ++digits[i];
        wrapped = false;
        break;
      }
      digits[i] = 0;
    }
    if (wrapped) return out;
  }
}

}  // namespace

bool for_each_completion(
    const SuccinctState& state,
    const std::function<bool(const LocalPermSequence&)>& visit,
    std::size_t max_cells) {
  const LrmParams& p = state.params();
  if (p.n() > max_cells) {
    throw TooLarge("completion search limited to " + std::to_string(max_cells) +
                   " cells");
  }
  const std::size_t windows = p.window_count();
  const std::size_t t = p.t();
  std::vector<std::vector<std::vector<int>>> options(windows);
  for (std::size_t k = 0; k < windows; ++k) {
    options[k] = completions(state.group(k), t);
  }
  OrderRelation rel(p.n());
  std::vector<int> flat(windows * t);
  bool keep_going = true;

  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (!keep_going) return;
    if (k == windows) {
      if (rel.topological_order(nullptr).empty()) return;
      keep_going = visit(LocalPermSequence::from_ranks(p, flat));
      return;
    }
    for (const auto& ranks : options[k]) {
      const std::size_t m = rel.mark();
      if (rel.add_window(k * p.s(), ranks)) {
        std::copy(ranks.begin(), ranks.end(), flat.begin() + k * t);
        descend(k + 1);
      }
      rel.undo(m);
      if (!keep_going) return;
    }
  };
  descend(0);
  return keep_going;
}

ChargeVector realize_succinct(const SuccinctState& state,
                              std::size_t max_cells) {
  std::optional<ChargeVector> found;
  for_each_completion(
      state,
      [&](const LocalPermSequence& f) {
        found = realize(f);
        return false;
      },
      max_cells);
  if (!found) throw NotRealizable("no realizable completion of the digits");
  return *found;
}

namespace {

template <typename Visit>
void for_each_ordering(const LrmParams& p, std::size_t limit, Visit visit) {
  if (p.n() > limit) {
    throw TooLarge("enumeration limited to n <= " + std::to_string(limit));
  }
  std::vector<Charge> charges(p.n());
  std::iota(charges.begin(), charges.end(), 0.0);
  do {
    visit(demodulate(ChargeVector(charges), p));
  } while (std::next_permutation(charges.begin(), charges.end()));
}

}  // namespace

std::vector<LocalPermSequence> enumerate_states(const LrmParams& p,
                                                std::size_t limit) {
  std::unordered_set<std::string> unique;
  for_each_ordering(
      p, limit, [&](const LocalPermSequence& f) { unique.insert(f.key()); });
  std::vector<std::string> keys(unique.begin(), unique.end());
  std::sort(keys.begin(), keys.end());
  std::vector<LocalPermSequence> out;
  out.reserve(keys.size());
  for (const auto& k : keys) {
    out.push_back(
        LocalPermSequence::from_ranks(p, std::vector<int>(k.begin(), k.end())));
  }
  return out;
}

StateCensus census(const LrmParams& p, std::size_t limit) {
  std::unordered_set<std::string> keys;
  std::unordered_set<std::string> succinct_keys;
  for_each_ordering(p, limit, [&](const LocalPermSequence& f) {
    keys.insert(f.key());
    succinct_keys.insert(succinct(f).key());
  });
  return {keys.size(), succinct_keys.size()};
}

BigInt count_bound(const LrmParams& p) {
  const auto s = static_cast<unsigned>(p.s());
  const auto t = static_cast<unsigned>(p.t());
  return factorial(t - s) *
         boost::multiprecision::pow(falling_factorial(t, s),
                                    static_cast<unsigned>(p.window_count()));
}

}  // namespace lrm
