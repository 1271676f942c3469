#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "dualgr.hpp"

using namespace dualgr;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const Rng kRoot(0);

std::uint64_t seed_for(int criterion) { return kRoot.split(static_cast<std::uint64_t>(criterion)).seed(); }

Outcome corank_certificates() {
  std::string detail;
  bool ok = true;
  for (const std::string id : {"corank-3-9", "corank-3-10", "corank-3-11", "corank-4-8", "corank-4-9", "corank-5-10"}) {
    IntHessian H = certificate_hessian(load_certificate(id));
    std::size_t r = rank_exact(H);
    bool rows = true;
    for (int i = 1; i <= H.k; ++i) rows = rows && block_row_rank(H, i) == H.block_size();
    ok = ok && r + 1 == H.side() && rows && structure_violations(H).empty();
    detail += id + " rank " + std::to_string(r) + "/" + std::to_string(H.side()) + (rows ? "" : " (block row deficient)") + "; ";
  }
  return {ok, detail};
}

Outcome invertible_certificate() {
  Integer d = det(certificate_hessian(load_certificate("invertible-4-8")).m);
  return {!is_zero(d), "det " + d.get_str()};
}

Outcome node_certificates() {
  std::string detail;
  bool ok = true;
  for (const std::string id : {"node-3-9", "node-3-10", "node-3-11"}) {
    NodePairReport r = verify_node_pair_k3(certificate_hessian(load_certificate(id)), seed_for(3), 8);
    ok = ok && r.pass && r.seeds_tried <= 8;
    detail += id + " det0 " + r.det0.get_str() + " det1 " + r.det1.get_str() + " seeds " + std::to_string(r.seeds_tried) + "; ";
  }
  return {ok, detail};
}

Outcome identity_h36_criterion() {
  auto t0 = std::chrono::steady_clock::now();
  IdentityH36Report sym = identity_h36(0, seed_for(4), true, 0);
  auto t1 = std::chrono::steady_clock::now();
  IdentityH36Report pts = identity_h36(20, seed_for(4), false, 0);
  auto t2 = std::chrono::steady_clock::now();
  double ts = std::chrono::duration<double>(t1 - t0).count(), tp = std::chrono::duration<double>(t2 - t1).count();
  bool ok = sym.symbolic_zero && pts.point_agreements == 20 && ts < 300 && tp < 1;
  char buf[160];
  std::snprintf(buf, sizeof buf, "difference terms %zu, points %d/20, symbolic %.2fs, points %.3fs", sym.difference_terms,
                pts.point_agreements, ts, tp);
  return {ok, buf};
}

Outcome line_restrictions() {
  auto t0 = std::chrono::steady_clock::now();
  LinePowerReport cube = line_power_check(3, 6, 3, 20, seed_for(5));
  LinePowerReport square = line_power_check(3, 7, 2, 20, kRoot.split(105).seed());
  double per = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / 40;
  int c = 0, s = 0;
  for (const auto& t : cube.trials) c += t.power;
  for (const auto& t : square.trials) s += t.power;
  char buf[120];
  std::snprintf(buf, sizeof buf, "cubes %d/20, squares %d/20, %.3fs per trial", c, s, per);
  return {cube.pass() && square.pass() && per < 5, buf};
}

Outcome degree_arithmetic() {
  bool ok = feasible_degrees(3, 6) == std::vector<int>{3, 6, 9} && feasible_degrees(3, 7) == std::vector<int>{6, 12} &&
            feasible_degrees(3, 8) == std::vector<int>{15} && feasible_degrees(3, 10) == std::vector<int>{21} &&
            feasible_degrees(5, 12) == std::vector<int>{35};
  return {ok, "(3,6) (3,7) (3,8) (3,10) (5,12)"};
}

bool step_has(const FactorOracle& o, int k, int N, std::vector<DegreeMultiset> want) {
  for (const auto& s : o.steps()) {
    if (s.k != k || s.N != N) continue;
    for (auto w : want) {
      bool found = false;
      for (const auto& p : s.patterns) found = found || p.degrees == normalized(w);
      if (!found) return false;
    }
    return s.verdict && s.verdict->irreducible;
  }
  return false;
}

Outcome irreducibility_engine() {
  FactorOracle o;
  bool ok = true;
  std::string bad;
  for (int N = 8; N <= 20; ++N)
    if (o.resolve(3, N).degrees != DegreeMultiset{3 * (N - 3)}) ok = false, bad += " (3," + std::to_string(N) + ")";
  for (int N = 8; N <= 16; ++N)
    if (o.resolve(4, N).degrees != DegreeMultiset{4 * (N - 4)}) ok = false, bad += " (4," + std::to_string(N) + ")";
  o.resolve(5, 11);
  bool p311 = step_has(o, 3, 11, {{3, 3, 3, 15}, {6, 6, 6, 6}});
  bool p511 = step_has(o, 5, 11, {{15, 15}, {18, 3, 3, 3, 3}});
  ok = ok && p311 && p511 && o.resolve(5, 11).degrees == DegreeMultiset{30};
  return {ok, std::string("k=3 N<=20, k=4 N<=16") + (bad.empty() ? "" : "; not irreducible:" + bad) + "; (3,11) patterns " +
                  (p311 ? "ok" : "missing") + "; (5,11) patterns " + (p511 ? "ok" : "missing")};
}

Outcome duality() {
  DualityReport a = duality_check(3, 7, 10, seed_for(8), true);
  DualityReport b = duality_check(3, 8, 10, kRoot.split(108).seed(), false);
  return {a.pass() && b.pass(), "symbolic (3,7) pattern " + std::string(a.pattern_ok ? "ok" : "differs") + ", det " +
                                    (a.det_equal ? "equal" : "differs") + "; numeric " + std::to_string(a.numeric_ok + b.numeric_ok) +
                                    "/20"};
}

Outcome specialization() {
  SpecializationReport a = specialization_check(3, 6, 6, 20, seed_for(9));
  SpecializationReport b = specialization_check(4, 6, 8, 20, kRoot.split(109).seed());
  return {a.pass() && b.pass() && a.nonzero > 0 && b.nonzero > 0,
          "(3,6+6) " + std::to_string(a.exact) + "/20, (4,6+8) " + std::to_string(b.exact) + "/20, nonzero products " +
              std::to_string(a.nonzero + b.nonzero)};
}

Outcome limit_lemma() {
  int checked = 0, equal = 0, extra = 0, extra_equal = 0;
  for (auto [k, N] : std::vector<std::pair<int, int>>{{3, 7}, {4, 8}, {4, 9}}) {
    for (const auto& Jv : enumerate_indices(k, N)) {
      bool admissible = true;
      for (int v : Jv) admissible = admissible && (v <= k || v > N - k);
      if (!admissible) continue;
      NodeIndexSet J(k, N, Jv);
      int common = static_cast<int>(J.first_in_j().size());
      bool small = common <= k - 3;
      bool two = common == k - 2 && k == 4 && N == 8;
      if (!small && !two) continue;
      bool same = limit_lemma_check(J).spans_equal;
      if (small) ++checked, equal += same;
      if (two) ++extra, extra_equal += same;
    }
  }
  return {checked > 0 && extra > 0 && equal == checked && extra_equal == extra,
          "star spans " + std::to_string(equal) + "/" + std::to_string(checked) + ", with four extra equations " +
              std::to_string(extra_equal) + "/" + std::to_string(extra)};
}

Outcome parity_criterion() {
  bool ok = true;
  std::string detail;
  for (int N : {5, 7, 9}) {
    ParityReport r = k2_parity(N, 10, kRoot.split(110 + N).seed());
    ok = ok && r.zero == 10;
    detail += "N=" + std::to_string(N) + " zero " + std::to_string(r.zero) + "/10; ";
  }
  for (int N : {4, 6, 8}) {
    ParityReport r = k2_parity(N, 10, kRoot.split(110 + N).seed());
    ok = ok && r.zero < 10;
    detail += "N=" + std::to_string(N) + " nonzero " + std::to_string(10 - r.zero) + "/10; ";
  }
  return {ok, detail};
}

Outcome a34_square() {
  LinePowerReport r = line_power_check(4, 8, 2, 20, seed_for(12), {{3, 4}});
  int s = 0;
  for (const auto& t : r.trials) s += t.power;
  return {r.pass(), "squares " + std::to_string(s) + "/20, degree " + std::to_string(r.trials.front().degree)};
}

Outcome equivariance() {
  EquivarianceReport a = equivariance_check(3, 6, 17, seed_for(13));
  EquivarianceReport b = equivariance_check(3, 7, 17, kRoot.split(113).seed());
  EquivarianceReport c = equivariance_check(4, 8, 16, kRoot.split(213).seed());
  int agree = a.agree + b.agree + c.agree, total = a.instances + b.instances + c.instances;
  return {agree == total && total == 50, std::to_string(agree) + "/" + std::to_string(total) + " instances"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "corank certificates", 10, corank_certificates},
      {2, "invertibility certificate", 1, invertible_certificate},
      {3, "node certificates", 30, node_certificates},
      {4, "det H(3,6) identity", 301, identity_h36_criterion},
      {5, "factor structure on lines", 200, line_restrictions},
      {6, "degree arithmetic", 1, degree_arithmetic},
      {7, "irreducibility engine", 10, irreducibility_engine},
      {8, "duality", 10, duality},
      {9, "specialization multiplicativity", 10, specialization},
      {10, "limit lemma spans", 60, limit_lemma},
      {11, "k=2 parity", 5, parity_criterion},
      {12, "perfect square with A34 = 0", 30, a34_square},
      {13, "translation equivariance", 30, equivariance},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool pass = o.ok && secs < c.limit_seconds;
    if (!pass) ++failed;
    std::printf("%s criterion %2d %s: %s [%.2fs, limit %.0fs]\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(), o.detail.c_str(),
                secs, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
