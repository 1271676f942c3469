#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace dualgr {

/// A k-tuple of 1-based indices in [1, N]. Sorted tuples name coordinates;
/// unsorted ones carry positional meaning.
using MultiIndex = std::vector<int>;

struct SignedIndex {
  MultiIndex index;  // strictly increasing when sign != 0
  int sign = 0;      // -1, 0 or +1
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

inline std::string to_string(const MultiIndex& I) {
  std::string s = "(";
  for (std::size_t i = 0; i < I.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(I[i]);
  }
  return s + ")";
}

inline void check_range(const MultiIndex& I, int N) {
  for (int v : I)
    if (v < 1 || v > N)
      throw std::out_of_range("index entry " + std::to_string(v) + " outside [1," + std::to_string(N) + "]");
}

inline bool is_strictly_increasing(const MultiIndex& I) {
  for (std::size_t i = 1; i < I.size(); ++i)
    if (I[i - 1] >= I[i]) return false;
  return true;
}

/// Sorts a tuple and reports the parity of the sorting permutation.
/// Repeated entries give sign 0 (the coordinate is alternating).
inline SignedIndex sort_with_sign(const MultiIndex& I, int N) {
  check_range(I, N);
  SignedIndex out{I, 1};
  auto& v = out.index;
  for (std::size_t i = 1; i < v.size(); ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] >= v[j]; --j) {
      if (v[j - 1] == v[j]) {
        out.sign = 0;
        std::sort(v.begin(), v.end());
        return out;
      }
      std::swap(v[j - 1], v[j]);
      out.sign = -out.sign;
    }
  }
  return out;
}

/// All strictly increasing k-tuples in [1, N], lexicographic.
inline std::vector<MultiIndex> enumerate_indices(int k, int N) {
  if (k < 0 || N < 0 || k > N) throw std::invalid_argument("enumerate_indices needs 0 <= k <= N");
  std::vector<MultiIndex> out;
  MultiIndex cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == N - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// Lexicographic position of every sorted k-index, for dense coordinate vectors.
class IndexSpace {
 public:
  IndexSpace(int k, int N) : k_(k), N_(N), all_(enumerate_indices(k, N)) {
    for (std::size_t i = 0; i < all_.size(); ++i) pos_.emplace(all_[i], i);
  }
  int k() const { return k_; }
  int N() const { return N_; }
  std::size_t size() const { return all_.size(); }
  const MultiIndex& operator[](std::size_t i) const { return all_[i]; }
  const std::vector<MultiIndex>& all() const { return all_; }
  std::size_t position(const MultiIndex& sorted) const {
    auto it = pos_.find(sorted);
    if (it == pos_.end()) throw std::out_of_range("not a sorted index: " + to_string(sorted));
    return it->second;
  }

 private:
  int k_, N_;
  std::vector<MultiIndex> all_;
  std::map<MultiIndex, std::size_t> pos_;
};

inline MultiIndex first_index(int k) {
  MultiIndex I(k);
  for (int i = 0; i < k; ++i) I[i] = i + 1;
  return I;
}

inline MultiIndex last_index(int k, int N) {
  MultiIndex I(k);
  for (int i = 0; i < k; ++i) I[i] = N - k + i + 1;
  return I;
}

inline int intersection_size(const MultiIndex& I, const MultiIndex& J) {
  int c = 0;
  for (int v : I)
    if (std::find(J.begin(), J.end(), v) != J.end()) ++c;
  return c;
}

inline bool contains(const MultiIndex& I, int v) { return std::find(I.begin(), I.end(), v) != I.end(); }

/// Sorted indices differing from J in at most one entry, J included.
inline std::vector<MultiIndex> star(const MultiIndex& J, int N) {
  if (!is_strictly_increasing(J)) throw std::invalid_argument("star needs a sorted index");
  check_range(J, N);
  std::set<MultiIndex> out{J};
  for (std::size_t pos = 0; pos < J.size(); ++pos) {
    for (int v = 1; v <= N; ++v) {
      if (contains(J, v)) continue;
      MultiIndex I = J;
      I[pos] = v;
      std::sort(I.begin(), I.end());
      out.insert(I);
    }
  }
  return {out.begin(), out.end()};
}

/// A k-subset J of I^f ∪ I^ℓ describing a node candidate, with the
/// order-preserving pairing between I^f and I^ℓ it induces.
class NodeIndexSet {
 public:
  NodeIndexSet(int k, int N, MultiIndex J) : k_(k), N_(N), J_(std::move(J)) {
    if (k < 1 || N < 2 * k) throw std::invalid_argument("node index set needs N >= 2k");
    if (static_cast<int>(J_.size()) != k) throw std::invalid_argument("J must have k entries");
    std::sort(J_.begin(), J_.end());
    if (!is_strictly_increasing(J_)) throw std::invalid_argument("J has repeated entries");
    check_range(J_, N);
    for (int v : J_)
      if (v > k && v <= N - k) throw std::invalid_argument("J must lie in I^f ∪ I^ℓ");
    build_pairing();
  }

  int k() const { return k_; }
  int N() const { return N_; }
  const MultiIndex& J() const { return J_; }

  /// I^f ∩ J
  MultiIndex first_in_j() const { return filter(first_index(k_), true); }
  /// I^f \ J
  MultiIndex first_not_in_j() const { return filter(first_index(k_), false); }
  /// I^ℓ ∩ J
  MultiIndex last_in_j() const { return filter(last_index(k_, N_), true); }
  /// I^ℓ \ J
  MultiIndex last_not_in_j() const { return filter(last_index(k_, N_), false); }
  /// J̄: I^f ∖ J together with I^ℓ ∖ J
  MultiIndex complement() const {
    MultiIndex c = first_not_in_j();
    for (int v : last_not_in_j()) c.push_back(v);
    return c;
  }

  /// r(p) for p in I^f.
  int pair(int p) const {
    auto it = pairing_.find(p);
    if (it == pairing_.end()) throw std::out_of_range("position outside I^f");
    return it->second;
  }
  const std::map<int, int>& pairing() const { return pairing_; }

  /// Index obtained from I^f by replacing each p in P with r(p), sorted with sign.
  SignedIndex replace(const MultiIndex& P) const {
    MultiIndex tuple = first_index(k_);
    for (int p : P) {
      if (p < 1 || p > k_) throw std::out_of_range("replacement position outside I^f");
      tuple[p - 1] = pair(p);
    }
    return sort_with_sign(tuple, N_);
  }

 private:
  MultiIndex filter(const MultiIndex& base, bool in) const {
    MultiIndex out;
    for (int v : base)
      if (contains(J_, v) == in) out.push_back(v);
    return out;
  }

  void build_pairing() {
    MultiIndex a = first_in_j(), b = last_not_in_j();
    for (std::size_t i = 0; i < a.size(); ++i) pairing_[a[i]] = b[i];
    MultiIndex c = first_not_in_j(), d = last_in_j();
    for (std::size_t i = 0; i < c.size(); ++i) pairing_[c[i]] = d[i];
  }

  int k_, N_;
  MultiIndex J_;
  std::map<int, int> pairing_;
};

}  // namespace dualgr
