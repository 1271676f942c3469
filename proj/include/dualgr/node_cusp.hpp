#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgr/exterior_form.hpp"
#include "dualgr/hessian.hpp"
#include "dualgr/matrix.hpp"
#include "dualgr/multiindex.hpp"
#include "dualgr/random.hpp"

namespace dualgr {

/// Singular at the origin with a degenerate Hessian there.
inline bool cusp_membership(const Chart& chart, const IntArray& A) {
  if (!nabla_membership(A, first_index(A.k()))) return false;
  return is_zero(det(assemble(chart, A).m));
}

inline bool cusp_membership(const IntArray& A) { return cusp_membership(Chart(A.k(), A.N()), A); }

/// Zero on every index meeting I^f or I^ℓ in at least k-1 entries.
template <class T>
bool generic_node_membership(const ExteriorArray<T>& A) {
  const MultiIndex f = first_index(A.k()), l = last_index(A.k(), A.N());
  for (const auto& [I, v] : A.entries()) {
    if (is_zero(v)) continue;
    if (intersection_size(I, f) >= A.k() - 1 || intersection_size(I, l) >= A.k() - 1) return false;
  }
  return true;
}

/// The k×N frame x(J, T): identity in the first block, T at (r, r(r)) for
/// r in I^f ∩ J and T^{-1} at (r, r(r)) for r in I^f \ J.
inline Matrix<Laurent> x_J_T_symbolic(const NodeIndexSet& J) {
  const int k = J.k(), N = J.N();
  Matrix<Laurent> K(k, N);
  for (int r = 1; r <= k; ++r) {
    K(r - 1, r - 1) = Laurent(1);
    K(r - 1, J.pair(r) - 1) = Laurent::monomial(contains(J.J(), r) ? 1 : -1);
  }
  return K;
}

inline Matrix<Rational> x_J_T(const NodeIndexSet& J, const Rational& T) {
  if (is_zero(T)) throw std::invalid_argument("x(J,T) needs T != 0");
  Matrix<Laurent> K = x_J_T_symbolic(J);
  return K.map<Rational>([&](const Laurent& l) { return l.evaluate(T); });
}

/// Linear forms on the array coordinates with Laurent coefficients in T.
struct FormFamily {
  int k = 0, N = 0;
  std::vector<std::vector<Laurent>> rows;  // one entry per sorted index (lex order)
  std::vector<std::string> labels;
};

inline std::vector<Laurent> normalize_form(std::vector<Laurent> row) {
  std::optional<int> v;
  for (const auto& c : row)
    if (!c.is_zero()) v = v ? std::min(*v, c.min_exponent()) : c.min_exponent();
  if (!v) return row;
  for (auto& c : row) c = c.shifted(-*v);
  return row;
}

/// F and its k(N-k) chart partials at x(J, T), as linear forms in A, each
/// scaled by the power of T that makes its lowest exponent zero.
inline FormFamily defining_forms_at(const NodeIndexSet& J) {
  const int k = J.k(), N = J.N();
  const IndexSpace space(k, N);
  const Matrix<Laurent> K = x_J_T_symbolic(J);
  FormFamily fam{k, N, {}, {}};
  std::vector<Laurent> F;
  for (const auto& I : space.all()) F.push_back(frame_minor(K, I));
  fam.rows.push_back(normalize_form(F));
  fam.labels.push_back("F");
  for (int p = 1; p <= k; ++p)
    for (int t = k + 1; t <= N; ++t) {
      std::vector<Laurent> row;
      for (const auto& I : space.all()) {
        auto it = std::find(I.begin(), I.end(), t);
        if (it == I.end()) {
          row.emplace_back();
          continue;
        }
        const int ci = static_cast<int>(it - I.begin());
        std::vector<std::size_t> rows, cols;
        for (int r = 0; r < k; ++r)
          if (r != p - 1) rows.push_back(static_cast<std::size_t>(r));
        for (int c : I)
          if (c != t) cols.push_back(static_cast<std::size_t>(c - 1));
        Laurent m = det_cofactor(K.submatrix(rows, cols));
        row.push_back(((p - 1) + ci) % 2 ? -m : m);
      }
      fam.rows.push_back(normalize_form(row));
      fam.labels.push_back("dF/dx_" + std::to_string(p) + "_" + std::to_string(t));
    }
  return fam;
}

/// Coordinate forms a_I for I in the given list.
inline FormFamily coordinate_forms(int k, int N, const std::vector<MultiIndex>& indices, const std::string& tag) {
  const IndexSpace space(k, N);
  FormFamily fam{k, N, {}, {}};
  for (const auto& I : indices) {
    std::vector<Laurent> row(space.size());
    row[space.position(I)] = Laurent(1);
    fam.rows.push_back(std::move(row));
    fam.labels.push_back(tag + to_string(I));
  }
  return fam;
}

inline FormFamily concat(FormFamily a, const FormFamily& b) {
  a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
  a.labels.insert(a.labels.end(), b.labels.begin(), b.labels.end());
  return a;
}

enum class LimitMode {
  substitute,  // set T = 0 and insist on independence
  saturate     // divide out T-adic dependencies first (flat limit)
};

struct LimitResult {
  Matrix<Integer> forms;  // independent rows at T = 0
  int reductions = 0;     // rows replaced by (combination)/T
};

/// Limit of the span of a family as T -> 0. Rows must be polynomial in T.
inline LimitResult limit_T0(FormFamily fam, LimitMode mode = LimitMode::saturate, int max_steps = 100000) {
  const std::size_t R = fam.rows.size(), C = R ? fam.rows[0].size() : 0;
  for (auto& row : fam.rows)
    for (auto& c : row)
      if (!c.is_zero() && c.min_exponent() < 0) throw std::invalid_argument("limit needs forms polynomial in T");
  LimitResult res;
  while (true) {
    Matrix<Rational> M0(C, R);  // columns are the rows at T = 0
    for (std::size_t i = 0; i < R; ++i)
      for (std::size_t j = 0; j < C; ++j) M0(j, i) = Rational(fam.rows[i][j].coefficient(0));
    auto deps = nullspace(M0);
    if (deps.empty()) {
      res.forms = Matrix<Integer>(R, C);
      for (std::size_t i = 0; i < R; ++i)
        for (std::size_t j = 0; j < C; ++j) res.forms(i, j) = fam.rows[i][j].coefficient(0);
      return res;
    }
    if (mode == LimitMode::substitute) throw std::domain_error("forms become dependent at T = 0");
    if (++res.reductions > max_steps) throw std::domain_error("T-adic reduction did not terminate");
    std::vector<Rational>& c = deps[0];
    Integer l = 1;
    for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::size_t pick = R;
    std::vector<Integer> ci(R);
    for (std::size_t i = 0; i < R; ++i) {
      ci[i] = c[i].get_num() * (l / c[i].get_den());
      if (!is_zero(ci[i]) && pick == R) pick = i;
    }
    std::vector<Laurent> combo(C);
    bool nonzero = false;
    for (std::size_t j = 0; j < C; ++j) {
      Laurent s;
      for (std::size_t i = 0; i < R; ++i)
        if (!is_zero(ci[i])) s += fam.rows[i][j] * Laurent(ci[i]);
      combo[j] = s.shifted(-1);
      nonzero = nonzero || !s.is_zero();
    }
    if (!nonzero) throw std::domain_error("forms are dependent for generic T");
    fam.rows[pick] = std::move(combo);
    fam.labels[pick] = "(" + fam.labels[pick] + ")/T";
  }
}

/// For |I^f ∩ J| = k-2, with J \ I^f = {α, α'} and I^f \ J = {t, t'}: the
/// four forms Σ_{j ∈ I^f ∩ J} a^{r(j) v}_{j s} for v in {α, α'}, s in {t, t'}.
inline Matrix<Integer> extra_equations(const NodeIndexSet& J) {
  const int k = J.k(), N = J.N();
  const MultiIndex common = J.first_in_j(), outs = J.first_not_in_j(), news = J.last_in_j();
  if (static_cast<int>(common.size()) != k - 2) throw std::invalid_argument("extra equations need |I^f ∩ J| = k-2");
  const IndexSpace space(k, N);
  Matrix<Integer> out(4, space.size());
  std::size_t row = 0;
  for (int v : news)
    for (int s : outs) {
      for (int j : common) {
        MultiIndex tuple = first_index(k);
        tuple[j - 1] = J.pair(j);
        tuple[s - 1] = v;
        SignedIndex si = sort_with_sign(tuple, N);
        if (si.sign == 0) continue;
        out(row, space.position(si.index)) += si.sign;
      }
      ++row;
    }
  return out;
}

inline Matrix<Integer> coordinate_rows(int k, int N, const std::vector<MultiIndex>& indices) {
  const IndexSpace space(k, N);
  Matrix<Integer> m(indices.size(), space.size());
  for (std::size_t i = 0; i < indices.size(); ++i) m(i, space.position(indices[i])) = 1;
  return m;
}

struct LimitLemmaReport {
  MultiIndex J;
  int common = 0;  // |I^f ∩ J|
  std::size_t limit_rank = 0, expected_rank = 0;
  int reductions = 0;
  bool spans_equal = false;
};

/// Compares lim_{T->0} ∇(x⁰) ∩ ∇(x(J,T)) with the span of the coordinate
/// forms on star(I^f) ∪ star(J), plus the extra forms when |I^f ∩ J| = k-2.
inline LimitLemmaReport limit_lemma_check(const NodeIndexSet& J) {
  const int k = J.k(), N = J.N();
  LimitLemmaReport rep;
  rep.J = J.J();
  rep.common = static_cast<int>(J.first_in_j().size());
  const auto base_star = star(first_index(k), N);
  FormFamily fam = concat(coordinate_forms(k, N, base_star, "a"), defining_forms_at(J));
  LimitResult lim = limit_T0(fam);
  rep.reductions = lim.reductions;
  std::vector<MultiIndex> idx = base_star;
  for (const auto& I : star(J.J(), N))
    if (std::find(idx.begin(), idx.end(), I) == idx.end()) idx.push_back(I);
  Matrix<Integer> expected = coordinate_rows(k, N, idx);
  if (rep.common == k - 2) expected = stack(expected, extra_equations(J));
  rep.limit_rank = rank_exact(lim.forms);
  rep.expected_rank = rank_exact(expected);
  rep.spans_equal = same_row_space(lim.forms, expected);
  return rep;
}

/// Shared-entry conditions between H(x⁰) and H(x') for k = 3.
struct NodeConditionReport {
  bool i = false, ii = false, iii = false, iv = false;
  bool iv_literal = false;     // third rows against A23 as printed
  bool global_reading = false; // (ii)-(iv) with columns read as values N-3, N-4, N-5
  std::string column_reading = "within-block";
  std::vector<std::string> violations;
  std::vector<int> signs;  // uniform sign found per compared row (0 if none)

  bool all() const { return i && ii && iii && iv; }
};

namespace detail {
// B_q row r against column `col` (within-block, 1-based) of A_{a}, compared on
// the middle values; equal up to one overall sign.
inline int compare_shared(const IntHessian& H0, const IntHessian& H1, std::pair<int, int> bq, int r,
                          std::pair<int, int> ab, int col, std::vector<std::string>* why, const std::string& tag) {
  const int k = 3, N = H0.N;
  int sign = 0;
  bool ok = true, any = false;
  for (int m = k + 1; m <= N - k; ++m) {
    const Integer& b = H1.at(bq.first, k + r, bq.second, k + m);
    const Integer& a = H0.at(ab.first, m, ab.second, k + col);
    if (is_zero(a) && is_zero(b)) continue;
    any = true;
    int s = b == a ? 1 : (b == -a ? -1 : 0);
    if (s == 0 || (sign != 0 && s != sign)) {
      ok = false;
      if (why) why->push_back(tag + ": mismatch at middle value " + std::to_string(m));
      break;
    }
    sign = s;
  }
  if (!ok) return 0;
  return any ? sign : 1;
}
}  // namespace detail

/// Checks conditions (i)-(iv) for a k = 3 pair (H(x⁰), H(x')).
inline NodeConditionReport check_node_conditions_k3(const IntHessian& H0, const IntHessian& H1) {
  if (H0.k != 3 || H1.k != 3 || H0.N != H1.N) throw std::invalid_argument("node conditions need a k=3 pair of equal N");
  const int N = H0.N, b = N - 3;
  if (b < 6) throw std::invalid_argument("node conditions need N >= 9");
  NodeConditionReport rep;
  const std::pair<int, int> blocks[3] = {{1, 2}, {1, 3}, {2, 3}};
  rep.i = true;
  for (auto [p, q] : blocks) {
    Matrix<Integer> A = H0.block(p, q), B = H1.block(p, q);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        if (!is_zero(A(b - 3 + r, b - 3 + c))) {
          rep.i = false;
          rep.violations.push_back("(i): A" + std::to_string(p) + std::to_string(q) + " last 3x3 block nonzero");
        }
        if (!is_zero(B(r, c))) {
          rep.i = false;
          rep.violations.push_back("(i): B" + std::to_string(p) + std::to_string(q) + " first 3x3 block nonzero");
        }
      }
  }
  // Row r of B_q is matched with column (N-3, N-4, N-5)[q] of A_{target(r)}.
  const int cols[3] = {N - 3, N - 4, N - 5};
  auto run = [&](int r, std::pair<int, int> target, bool global, std::vector<std::string>* why, const std::string& name) {
    bool ok = true;
    for (int q = 0; q < 3; ++q) {
      int col = global ? cols[q] - 3 : cols[q];
      std::string tag = name + " B" + std::to_string(blocks[q].first) + std::to_string(blocks[q].second);
      int s = detail::compare_shared(H0, H1, blocks[q], r, target, col, why, tag);
      if (!global && why) rep.signs.push_back(s);
      ok = ok && s != 0;
    }
    return ok;
  };
  rep.ii = run(1, {2, 3}, false, &rep.violations, "(ii)");
  rep.iii = run(2, {1, 3}, false, &rep.violations, "(iii)");
  rep.iv = run(3, {1, 2}, false, &rep.violations, "(iv)");
  rep.iv_literal = run(3, {2, 3}, false, nullptr, "(iv) literal");
  rep.global_reading = run(1, {2, 3}, true, nullptr, "") && run(2, {1, 3}, true, nullptr, "") && run(3, {1, 2}, true, nullptr, "");
  return rep;
}

struct NodePairReport {
  int N = 0;
  NodeConditionReport conditions;
  bool structure_ok = false;
  bool generic_node = false;
  Integer det0, det1;
  int seeds_tried = 0;
  std::optional<std::uint64_t> seed_used;
  bool pass = false;
};

/// Indices {m, m', ℓ}: two middle values and one from I^ℓ. These are the
/// entries of H(x') not pinned by H(x⁰).
inline std::vector<MultiIndex> node_free_indices(int N) {
  std::vector<MultiIndex> out;
  for (int m = 4; m <= N - 3; ++m)
    for (int m2 = m + 1; m2 <= N - 3; ++m2)
      for (int l = N - 2; l <= N; ++l) out.push_back({m, m2, l});
  return out;
}

/// Completes the array behind H(x⁰) with seeded entries in {-2..2} until both
/// Hessians are invertible (at most `attempts` seeds) and checks (i)-(iv).
inline NodePairReport verify_node_pair_k3(const IntHessian& H0, std::uint64_t seed = 0, int attempts = 8) {
  if (H0.k != 3) throw std::invalid_argument("node pair check is for k = 3");
  NodePairReport rep;
  rep.N = H0.N;
  rep.structure_ok = structure_violations(H0).empty();
  IntArray A = array_from_hessian(H0);
  const Chart chart(3, H0.N);
  rep.structure_ok = rep.structure_ok && assemble(chart, A) == H0;
  rep.det0 = det(H0.m);
  const Rng root(seed);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    ++rep.seeds_tried;
    Rng rng = root.split(static_cast<std::uint64_t>(attempt));
    IntArray C = A;
    for (const auto& I : node_free_indices(H0.N)) C.set(I, Integer(static_cast<long>(rng.uniform(-2, 2))));
    IntHessian H1 = assemble_dual(chart, C);
    Integer d1 = det(H1.m);
    if (is_zero(d1)) continue;
    rep.det1 = d1;
    rep.seed_used = static_cast<std::uint64_t>(attempt);
    rep.generic_node = generic_node_membership(C);
    rep.conditions = check_node_conditions_k3(H0, H1);
    break;
  }
  rep.pass = rep.structure_ok && rep.generic_node && !is_zero(rep.det0) && rep.seed_used.has_value() && rep.conditions.all();
  return rep;
}

struct K4TupleReport {
  int common_entries = 0;
  int nonzero_common = 0;
  std::vector<std::string> mismatches;
  bool holds() const { return mismatches.empty(); }
};

/// Relation between the 36 shared entries of H(x⁰) and H(x') for k = 4:
/// (H0_{αβ})_{γθ} = ε (H1_{complement γθ})_{complement αβ}, with ε the
/// product of the two positional sorting signs.
inline K4TupleReport verify_k4_tuple(const IntHessian& H0, const IntHessian& H1) {
  if (H0.k != 4 || H1.k != 4 || H0.N != H1.N) throw std::invalid_argument("k=4 tuple needs two H(4,N) of equal N");
  const int N = H0.N;
  K4TupleReport rep;
  auto complement = [](int a, int b) {
    std::vector<int> c;
    for (int x = 1; x <= 4; ++x)
      if (x != a && x != b) c.push_back(x);
    return c;
  };
  const MultiIndex L = last_index(4, N);
  for (int al = 1; al <= 4; ++al)
    for (int be = al + 1; be <= 4; ++be)
      for (int ga = 1; ga <= 4; ++ga)
        for (int th = ga + 1; th <= 4; ++th) {
          ++rep.common_entries;
          auto cg = complement(ga, th), ca = complement(al, be);
          MultiIndex t0 = first_index(4);
          t0[al - 1] = L[ga - 1];
          t0[be - 1] = L[th - 1];
          MultiIndex t1 = L;
          t1[cg[0] - 1] = ca[0];
          t1[cg[1] - 1] = ca[1];
          int eps = sort_with_sign(t0, N).sign * sort_with_sign(t1, N).sign;
          const Integer& lhs = H0.at(al, L[ga - 1], be, L[th - 1]);
          const Integer& rhs = H1.at(cg[0], 4 + ca[0], cg[1], 4 + ca[1]);
          if (!is_zero(lhs)) ++rep.nonzero_common;
          if (lhs != eps * rhs)
            rep.mismatches.push_back("block " + std::to_string(al) + std::to_string(be) + " entry " + std::to_string(ga) +
                                     std::to_string(th));
        }
  return rep;
}

/// H(x') determined by H(x⁰) through the shared quadratic coefficients.
inline IntHessian k4_partner(const IntHessian& H0) { return assemble_dual(array_from_hessian(H0)); }

}  // namespace dualgr
