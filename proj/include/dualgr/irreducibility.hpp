#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dualgr/degree.hpp"

namespace dualgr {

/// Degrees of irreducible factors, sorted descending.
using DegreeMultiset = std::vector<int>;

inline DegreeMultiset normalized(DegreeMultiset d) {
  std::sort(d.begin(), d.end(), std::greater<int>());
  return d;
}

inline int degree_sum(const DegreeMultiset& d) {
  int s = 0;
  for (int x : d) s += x;
  return s;
}

inline std::string degrees_to_string(const DegreeMultiset& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "+" : "") + std::to_string(d[i]);
  return s;
}

/// Factor degrees of a specialization of det H_{k,N}, with where they came from.
struct FactorPattern {
  DegreeMultiset degrees;
  std::string provenance;
};

/// Every multiset obtained by summing the blocks of a partition of `pattern`.
inline std::set<DegreeMultiset> coarsenings(const DegreeMultiset& pattern) {
  if (pattern.size() > 12) throw std::invalid_argument("coarsenings limited to 12 parts");
  std::set<DegreeMultiset> seen{normalized(pattern)};
  std::vector<DegreeMultiset> todo{normalized(pattern)};
  while (!todo.empty()) {
    DegreeMultiset cur = todo.back();
    todo.pop_back();
    for (std::size_t i = 0; i < cur.size(); ++i)
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        DegreeMultiset next;
        for (std::size_t l = 0; l < cur.size(); ++l)
          if (l != i && l != j) next.push_back(cur[l]);
        next.push_back(cur[i] + cur[j]);
        next = normalized(next);
        if (seen.insert(next).second) todo.push_back(next);
      }
  }
  return seen;
}

/// Multisets of feasible degrees summing to total.
inline std::set<DegreeMultiset> feasible_multisets(int total, const std::vector<int>& feasible) {
  std::set<DegreeMultiset> out;
  std::vector<int> desc(feasible.rbegin(), feasible.rend());
  DegreeMultiset cur;
  std::function<void(int, std::size_t)> rec = [&](int left, std::size_t from) {
    if (left == 0) {
      out.insert(cur);
      return;
    }
    for (std::size_t i = from; i < desc.size(); ++i) {
      if (desc[i] > left) continue;
      cur.push_back(desc[i]);
      rec(left - desc[i], i);
      cur.pop_back();
    }
  };
  rec(total, 0);
  return out;
}

struct Verdict {
  bool irreducible = false;
  int total = 0;
  std::set<DegreeMultiset> candidates;  // factorizations not yet excluded
};

/// Intersects the coarsenings of every pattern, keeps multisets made of
/// feasible degrees, and declares irreducibility when only {total} survives.
inline Verdict irreducible_verdict(int k, int N, const std::vector<FactorPattern>& patterns) {
  const int total = k * (N - k);
  const auto feasible = feasible_degrees(k, N);
  Verdict v;
  v.total = total;
  std::set<DegreeMultiset> cand = feasible_multisets(total, feasible);
  for (const auto& p : patterns) {
    if (degree_sum(p.degrees) != total)
      throw std::invalid_argument("pattern " + degrees_to_string(p.degrees) + " does not sum to " + std::to_string(total));
    std::set<DegreeMultiset> c = coarsenings(p.degrees), keep;
    for (const auto& m : cand)
      if (c.count(m)) keep.insert(m);
    cand = std::move(keep);
  }
  if (cand.empty()) throw std::logic_error("factor patterns are mutually inconsistent");
  v.candidates = cand;
  v.irreducible = cand.size() == 1 && *cand.begin() == DegreeMultiset{total};
  return v;
}

enum class FactorStatus { zero, known, unknown };

struct FactorInfo {
  FactorStatus status = FactorStatus::unknown;
  DegreeMultiset degrees;
  std::string source;
};

/// Factorizations established outside the degree argument.
class KnownFactorTable {
 public:
  static KnownFactorTable defaults() {
    KnownFactorTable t;
    t.add(3, 6, {3, 3, 3}, "cube of an irreducible cubic (direct computation)");
    t.add(3, 7, {6, 6}, "square of an irreducible sextic (cited computation)");
    t.add(3, 9, {18}, "irreducible (cited computer computation)");
    t.add(4, 8, {16}, "irreducible (cited computer computation)");
    t.add(4, 9, {20}, "irreducible (cited computer computation)");
    t.add(5, 10, {25}, "irreducible (cited computer computation)");
    t.add(7, 14, {49}, "irreducible (cited computer computation)");
    return t;
  }

  void add(int k, int N, DegreeMultiset d, std::string source) {
    if (degree_sum(d) != k * (N - k)) throw std::invalid_argument("table entry does not sum to k(N-k)");
    entries_[{k, N}] = {FactorStatus::known, normalized(std::move(d)), std::move(source)};
  }

  std::optional<FactorInfo> find(int k, int N) const {
    auto it = entries_.find({k, N});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<std::pair<int, int>, FactorInfo> entries_;
};

struct ScheduleStep {
  int k = 0, N = 0, total = 0;
  std::vector<int> feasible;
  std::vector<FactorPattern> patterns;
  std::optional<Verdict> verdict;
  FactorInfo result;
  std::string rule;
};

/// Resolves factor degrees of det H_{k,N} from smaller cases: duality,
/// the k=2 Pfaffian structure, specialization embeddings and the table.
class FactorOracle {
 public:
  explicit FactorOracle(KnownFactorTable table = KnownFactorTable::defaults()) : table_(std::move(table)) {}

  const FactorInfo& resolve(int k, int N) {
    if (k < 1 || N <= k) throw std::invalid_argument("factor oracle needs 1 <= k < N");
    auto it = memo_.find({k, N});
    if (it != memo_.end()) return it->second;
    FactorInfo info = compute(k, N);
    return memo_.emplace(std::make_pair(k, N), info).first->second;
  }

  const std::vector<ScheduleStep>& steps() const { return steps_; }

 private:
  FactorInfo compute(int k, int N) {
    const int m = N - k;
    if (k == 1 || m == 1) return {FactorStatus::zero, {}, "Hessian vanishes identically"};
    if (N < 2 * k) {
      FactorInfo d = resolve(m, N);
      d.source = "dual of (" + std::to_string(m) + "," + std::to_string(N) + "): " + d.source;
      return d;
    }
    if (k == 2) {
      if (m % 2) return {FactorStatus::zero, {}, "k=2, odd N-k: skew block of odd size"};
      return {FactorStatus::known, DegreeMultiset(4, m / 2), "k=2: determinant is a Pfaffian to the fourth power"};
    }

    ScheduleStep step;
    step.k = k;
    step.N = N;
    step.total = k * m;
    step.feasible = feasible_degrees(k, N);
    FactorInfo out;
    if (step.feasible.size() == 1) {
      step.rule = "only feasible degree is the total";
      out = {FactorStatus::known, {step.total}, step.rule};
    } else {
      step.patterns = patterns_for(k, N);
      step.verdict = irreducible_verdict(k, N, step.patterns);
      auto seed = table_.find(k, N);
      if (step.verdict->irreducible) {
        step.rule = "degree patterns leave only the total";
        out = {FactorStatus::known, {step.total}, step.rule};
        if (seed && seed->degrees != out.degrees)
          throw std::logic_error("table entry for (" + std::to_string(k) + "," + std::to_string(N) + ") contradicts degree argument");
      } else if (seed) {
        step.rule = "table: " + seed->source;
        bool allowed = step.verdict->candidates.count(seed->degrees) > 0;
        if (!allowed) throw std::logic_error("table entry excluded by degree argument");
        out = *seed;
      } else {
        step.rule = "undecided";
        out = {FactorStatus::unknown, {}, step.rule};
      }
    }
    step.result = out;
    steps_.push_back(step);
    return out;
  }

  std::vector<FactorPattern> patterns_for(int k, int N) {
    const int m = N - k;
    std::vector<FactorPattern> out;
    std::set<DegreeMultiset> seen;
    auto push = [&](DegreeMultiset d, std::string why) {
      d = normalized(std::move(d));
      if (seen.insert(d).second) out.push_back({d, std::move(why)});
    };
    auto name = [](int a, int b) { return "H(" + std::to_string(a) + "," + std::to_string(b) + ")"; };
    for (int m1 = 2; m1 + 2 <= m && m1 <= m - m1; ++m1) {
      const FactorInfo& a = resolve(k, k + m1);
      const FactorInfo& b = resolve(k, k + m - m1);
      if (a.status != FactorStatus::known || b.status != FactorStatus::known) continue;
      DegreeMultiset d = a.degrees;
      d.insert(d.end(), b.degrees.begin(), b.degrees.end());
      push(d, name(k, k + m1) + " + " + name(k, k + m - m1) + " (value split)");
    }
    for (int k1 = 2; k1 + 2 <= k && k1 <= k - k1; ++k1) {
      const FactorInfo& a = resolve(k1, k1 + m);
      const FactorInfo& b = resolve(k - k1, k - k1 + m);
      if (a.status != FactorStatus::known || b.status != FactorStatus::known) continue;
      DegreeMultiset d = a.degrees;
      d.insert(d.end(), b.degrees.begin(), b.degrees.end());
      push(d, name(k1, k1 + m) + " + " + name(k - k1, k - k1 + m) + " (position split)");
    }
    if (k == 4) push({2 * m, 2 * m}, "A34 = 0 gives a square (cited)");
    return out;
  }

  KnownFactorTable table_;
  std::map<std::pair<int, int>, FactorInfo> memo_;
  std::vector<ScheduleStep> steps_;
};

/// Resolves det H_{k,N} for N from 2k (6 when k = 3) up to N_max.
inline std::vector<ScheduleStep> run_schedule(int k, int N_max, KnownFactorTable table = KnownFactorTable::defaults()) {
  FactorOracle oracle(std::move(table));
  std::vector<ScheduleStep> out;
  for (int N = 2 * k; N <= N_max; ++N) {
    const FactorInfo& info = oracle.resolve(k, N);
    auto it = std::find_if(oracle.steps().begin(), oracle.steps().end(), [&](const ScheduleStep& s) { return s.k == k && s.N == N; });
    if (it != oracle.steps().end()) {
      out.push_back(*it);
    } else {
      ScheduleStep s;
      s.k = k;
      s.N = N;
      s.total = k * (N - k);
      s.feasible = feasible_degrees(k, N);
      s.result = info;
      s.rule = info.source;
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace dualgr
