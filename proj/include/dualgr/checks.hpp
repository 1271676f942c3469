#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dualgr/exterior_form.hpp"
#include "dualgr/hessian.hpp"
#include "dualgr/json_io.hpp"
#include "dualgr/random.hpp"

namespace dualgr {

inline const char* version() { return "0.1.0"; }

/// 3×3 matrix of the nine H(3,6) entries: rows (12), (13), (23), columns
/// (45), (46), (56). With sorted = true each entry is the coefficient of the
/// sorted index, otherwise the Hessian entry itself.
inline Matrix<IntPoly> h36_minor_matrix(bool sorted = true) {
  const auto slots = symbolic_slots(3, 6);
  Matrix<IntPoly> M(3, 3);
  const std::vector<std::pair<int, int>> rows = {{1, 2}, {1, 3}, {2, 3}}, cols = {{4, 5}, {4, 6}, {5, 6}};
  for (std::size_t v = 0; v < slots.size(); ++v) {
    const auto& s = slots[v];
    std::size_t r = 0, c = 0;
    while (rows[r] != std::make_pair(s.p, s.p2)) ++r;
    while (cols[c] != std::make_pair(s.t, s.t2)) ++c;
    MultiIndex tuple = first_index(3);
    tuple[s.p - 1] = s.t;
    tuple[s.p2 - 1] = s.t2;
    int sign = sorted ? sort_with_sign(tuple, 6).sign : 1;
    M(r, c) = IntPoly::variable(slots.size(), v) * Integer(sign);
  }
  return M;
}

/// Degree-≤n polynomial det(H0 + s H1), interpolated exactly from n+1 values.
inline QPoly det_on_line(const IntHessian& H0, const IntHessian& H1) {
  const std::size_t n = H0.side();
  std::vector<Rational> xs, ys;
  for (std::size_t i = 0; i <= n; ++i) {
    const Integer s = static_cast<long>(i);
    Matrix<Integer> M = H0.m;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) M(r, c) += s * H1.m(r, c);
    xs.emplace_back(s);
    ys.emplace_back(det(M));
  }
  return interpolate(xs, ys);
}

struct LineTrial {
  int degree = -1;
  bool power = false;
  std::string root;
};

struct LinePowerReport {
  int k = 0, N = 0, r = 0;
  std::vector<LineTrial> trials;
  bool pass() const {
    for (const auto& t : trials)
      if (!t.power) return false;
    return !trials.empty();
  }
};

/// Restricts det H_{k,N} to random integer lines and tests for an r-th power
/// up to a constant. A vanishing restriction counts as a failure.
inline LinePowerReport line_power_check(int k, int N, int r, int trials, std::uint64_t seed,
                                        const std::set<std::pair<int, int>>& zero_blocks = {}) {
  LinePowerReport rep{k, N, r, {}};
  const Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    IntHessian H0 = random_hessian(k, N, rng, 5, zero_blocks), H1 = random_hessian(k, N, rng, 5, zero_blocks);
    QPoly f = det_on_line(H0, H1);
    LineTrial lt;
    lt.degree = f.degree();
    if (!f.is_zero()) {
      auto g = uni_root_structure(f, r);
      lt.power = g.has_value();
      if (g) lt.root = g->to_string();
    }
    rep.trials.push_back(lt);
  }
  return rep;
}

struct IdentityH36Report {
  bool symbolic_checked = false;
  bool symbolic_zero = false;
  std::size_t det_terms = 0, difference_terms = 0;
  std::optional<int> unsorted_constant;  // c with det H = c det^3 M for Hessian-entry M, if ±2
  int point_trials = 0, point_agreements = 0;
  LinePowerReport cube;
  bool pass() const { return (!symbolic_checked || symbolic_zero) && point_agreements == point_trials && cube.pass(); }

  json to_json() const {
    json j;
    j["symbolic_checked"] = symbolic_checked;
    if (symbolic_checked) {
      j["symbolic_zero"] = symbolic_zero;
      j["det_terms"] = det_terms;
      j["difference_terms"] = difference_terms;
      j["hessian_entry_constant"] = unsorted_constant ? json(*unsorted_constant) : json(nullptr);
    }
    j["point_trials"] = point_trials;
    j["point_agreements"] = point_agreements;
    j["prime"] = kDefaultPrime;
    json lines = json::array();
    for (const auto& t : cube.trials) lines.push_back({{"degree", t.degree}, {"cube", t.power}});
    j["cube_lines"] = lines;
    j["pass"] = pass();
    return j;
  }
};

/// det H(3,6) = 2 det^3 M: symbolic expansion, prime-field points and
/// line restrictions.
inline IdentityH36Report identity_h36(int trials, std::uint64_t seed, bool symbolic = true, int cube_trials = 20) {
  IdentityH36Report rep;
  const auto H = assemble_symbolic(3, 6);
  const auto M = h36_minor_matrix(true);
  const Rng root(seed);
  if (symbolic) {
    rep.symbolic_checked = true;
    IntPoly D = det(H.m);
    IntPoly C = det(M).pow(3);
    IntPoly diff = D - C * Integer(2);
    rep.det_terms = D.size();
    rep.difference_terms = diff.size();
    rep.symbolic_zero = diff.is_zero();
    IntPoly Cu = det(h36_minor_matrix(false)).pow(3);
    for (int c : {2, -2})
      if ((D - Cu * Integer(c)).is_zero()) rep.unsorted_constant = c;
  }
  const Rng points = root.split(1);
  for (int t = 0; t < trials; ++t) {
    Rng rng = points.split(static_cast<std::uint64_t>(t));
    std::vector<Fp> pt;
    for (std::size_t v = 0; v < 9; ++v) pt.push_back(Fp(static_cast<long long>(rng.uniform(0, static_cast<std::int64_t>(kDefaultPrime) - 1))));
    auto at = [&](const IntPoly& q) { return q.evaluate<Fp>(pt); };
    Fp lhs = det(H.m.map<Fp>(at));
    Fp m = det(M.map<Fp>(at));
    ++rep.point_trials;
    if (lhs == Fp(2) * m * m * m) ++rep.point_agreements;
  }
  rep.cube = line_power_check(3, 6, 3, cube_trials, root.split(2).seed());
  return rep;
}

struct DualityReport {
  int k = 0, N = 0;
  bool symbolic_checked = false, pattern_ok = false, det_equal = false;
  int numeric_trials = 0, numeric_ok = 0;
  std::vector<std::string> problems;
  bool pass() const { return (!symbolic_checked || (pattern_ok && det_equal)) && numeric_ok == numeric_trials; }
};

/// Regrouping rows and columns of H(k,N) by value gives an H(N-k,N) with the
/// same determinant.
inline DualityReport duality_check(int k, int N, int trials, std::uint64_t seed, bool symbolic) {
  DualityReport rep;
  rep.k = k;
  rep.N = N;
  if (symbolic) {
    rep.symbolic_checked = true;
    const auto H = assemble_symbolic(k, N);
    const auto D = apply_duality(H);
    const auto ref = assemble_symbolic(N - k, N);
    auto v = structure_violations(D);
    bool same = v.empty();
    for (std::size_t r = 0; r < D.side(); ++r)
      for (std::size_t c = 0; c < D.side(); ++c)
        if (D.m(r, c).is_zero() != ref.m(r, c).is_zero()) same = false;
    rep.pattern_ok = same;
    if (!same) rep.problems.push_back("zero pattern differs from H(" + std::to_string(N - k) + "," + std::to_string(N) + ")");
    rep.det_equal = det(D.m) == det(H.m);
    if (!rep.det_equal) rep.problems.push_back("symbolic determinants differ");
  }
  const Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    IntArray A = random_array(k, N, rng);
    IntHessian H = assemble(A);
    IntHessian D = apply_duality(H);
    ++rep.numeric_trials;
    bool ok = structure_violations(D).empty() && assemble(array_from_hessian(D)) == D && det(D.m) == det(H.m);
    if (ok) ++rep.numeric_ok;
    else rep.problems.push_back("random array " + std::to_string(t) + " fails");
  }
  return rep;
}

struct SpecializationReport {
  int trials = 0, exact = 0, nonzero = 0;
  std::vector<std::string> problems;
  bool pass() const { return exact == trials; }
};

/// det(specialize_embed(H1, H2)) = ±det H1 det H2 for random pairs.
inline SpecializationReport specialization_check(int k, int N1, int N2, int trials, std::uint64_t seed) {
  SpecializationReport rep;
  const Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    IntHessian H1 = random_hessian(k, N1, rng), H2 = random_hessian(k, N2, rng);
    Integer d = det(specialize_embed(H1, H2).m), prod = det(H1.m) * det(H2.m);
    ++rep.trials;
    if (d == prod || d == -prod) ++rep.exact;
    else rep.problems.push_back("pair " + std::to_string(t) + ": " + d.get_str() + " vs " + prod.get_str());
    if (!is_zero(prod)) ++rep.nonzero;
  }
  return rep;
}

struct ParityReport {
  int N = 0, trials = 0, zero = 0;
};

/// det H(2,N) on random arrays.
inline ParityReport k2_parity(int N, int trials, std::uint64_t seed) {
  ParityReport rep{N, 0, 0};
  const Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    ++rep.trials;
    if (is_zero(det(assemble(random_array(2, N, rng)).m))) ++rep.zero;
  }
  return rep;
}

struct EquivarianceReport {
  int instances = 0, agree = 0;
  std::vector<std::string> problems;
  bool pass() const { return instances > 0 && agree == instances; }
};

/// Translating the chart commutes with criticality and Hessian assembly.
/// Odd instances are made critical at X; even ones are generic.
inline EquivarianceReport equivariance_check(int k, int N, int instances, std::uint64_t seed) {
  EquivarianceReport rep;
  const Chart chart(k, N);
  const Rng root(seed);
  for (int t = 0; t < instances; ++t) {
    Rng rng = root.split(static_cast<std::uint64_t>(t));
    Matrix<Integer> X = random_matrix(k, N - k, rng, 2);
    Matrix<Integer> minus_X = X.map<Integer>([](const Integer& v) { return Integer(-v); });
    IntArray A = t % 2 ? act_gl(random_critical_array(k, N, rng), translation_matrix(minus_X).transpose()) : random_array(k, N, rng);
    IntArray moved = act_gl(A, translation_matrix(X).transpose());
    bool ok = act_translation(chart, A, X) == moved;
    ok = ok && hessian_at(chart, A, X) == assemble(chart, moved);
    Matrix<Integer> origin(k, N - k);
    bool crit = is_critical(chart, A, X);
    ok = ok && crit == is_critical(chart, moved, origin) && crit == (t % 2 == 1);
    ++rep.instances;
    if (ok) ++rep.agree;
    else rep.problems.push_back("instance " + std::to_string(t) + " of (" + std::to_string(k) + "," + std::to_string(N) + ")");
  }
  return rep;
}

}  // namespace dualgr
