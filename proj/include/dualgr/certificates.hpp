#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dualgr/certificates_data.hpp"
#include "dualgr/hessian.hpp"
#include "dualgr/json_io.hpp"
#include "dualgr/node_cusp.hpp"
#include "dualgr/random.hpp"

namespace dualgr {

struct Certificate {
  std::string id, kind;  // kind: corank1, invertible or nodepair
  int k = 0, N = 0;
  std::map<std::string, Matrix<Integer>> blocks;
  std::string claim;
};

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Stable text form of the payload; the checksum is taken over it.
inline std::string canonical_form(const Certificate& c) {
  std::string s = c.id + "|" + c.kind + "|" + std::to_string(c.k) + "|" + std::to_string(c.N);
  for (const auto& [name, m] : c.blocks) {
    s += "|" + name + "=";
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i) s += ";";
      for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + m(i, j).get_str();
    }
  }
  return s;
}

inline std::uint64_t checksum(const Certificate& c) { return fnv1a64(canonical_form(c)); }

inline std::string checksum_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[i] = digits[h & 15];
  return s;
}

inline std::vector<std::string> certificate_ids() {
  std::vector<std::string> ids;
  for (const auto& r : certificate_records()) ids.push_back(r.id);
  return ids;
}

/// Embedded certificate by id; the stored checksum must match the payload.
inline Certificate load_certificate(const std::string& id) {
  for (const auto& r : certificate_records()) {
    if (r.id != id) continue;
    Certificate c{r.id, r.kind, r.k, r.N, {}, r.claim};
    for (const auto& [name, rows] : r.blocks) {
      Matrix<Integer> m(rows.size(), rows.empty() ? 0 : rows[0].size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
      c.blocks.emplace(name, std::move(m));
    }
    if (checksum(c) != r.checksum) throw std::runtime_error("certificate " + id + " fails its checksum");
    return c;
  }
  throw std::invalid_argument("unknown certificate id '" + id + "'");
}

inline std::uint64_t embedded_checksum(const std::string& id) {
  for (const auto& r : certificate_records())
    if (r.id == id) return r.checksum;
  throw std::invalid_argument("unknown certificate id '" + id + "'");
}

/// Hessian described by a certificate: upper blocks A_ij, or a full matrix "H".
inline IntHessian certificate_hessian(const Certificate& c) {
  auto full = c.blocks.find("H");
  if (full != c.blocks.end()) return IntHessian(c.k, c.N, full->second);
  std::map<std::pair<int, int>, Matrix<Integer>> upper;
  for (const auto& [name, m] : c.blocks) {
    if (name.size() != 3 || name[0] != 'A' || name[1] < '1' || name[1] > '9' || name[2] < '1' || name[2] > '9')
      throw std::invalid_argument("unexpected block name '" + name + "'");
    if (m.rows() != static_cast<std::size_t>(c.N - c.k) || !m.square()) throw std::invalid_argument("block " + name + " has wrong size");
    upper[{name[1] - '0', name[2] - '0'}] = m;
  }
  return from_upper_blocks(c.k, c.N, upper);
}

/// Entries where c differs from the embedded record with the same id.
inline std::vector<std::string> diff_against_embedded(const Certificate& c) {
  std::vector<std::string> out;
  bool known = false;
  for (const auto& r : certificate_records()) known = known || r.id == c.id;
  if (!known) return out;
  const Certificate ref = load_certificate(c.id);
  for (const auto& [name, m] : ref.blocks) {
    auto it = c.blocks.find(name);
    if (it == c.blocks.end()) {
      out.push_back("block " + name + " missing");
      continue;
    }
    const auto& o = it->second;
    if (o.rows() != m.rows() || o.cols() != m.cols()) {
      out.push_back("block " + name + " has shape " + std::to_string(o.rows()) + "x" + std::to_string(o.cols()));
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (o(i, j) != m(i, j))
          out.push_back(name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] is " + o(i, j).get_str() +
                        ", embedded value " + m(i, j).get_str());
  }
  for (const auto& [name, m] : c.blocks)
    if (!ref.blocks.count(name)) out.push_back("unexpected block " + name);
  return out;
}

struct VerifyReport {
  std::string id, kind;
  int k = 0, N = 0;
  bool pass = false;
  std::vector<std::string> discrepancies;
  std::optional<std::size_t> rank, corank;
  std::vector<std::size_t> block_row_ranks;       // height N-k
  std::vector<std::size_t> dual_block_row_ranks;  // height k
  std::optional<bool> adjugate_rank_one;
  std::optional<Integer> det;
  std::optional<NodePairReport> node;
  std::uint64_t checksum = 0;

  json to_json() const {
    json j;
    j["id"] = id;
    j["kind"] = kind;
    j["k"] = k;
    j["N"] = N;
    j["pass"] = pass;
    j["checksum"] = checksum_hex(checksum);
    if (rank) j["rank"] = *rank;
    if (corank) j["corank"] = *corank;
    if (!block_row_ranks.empty()) j["block_row_ranks"] = block_row_ranks;
    if (!dual_block_row_ranks.empty()) j["dual_block_row_ranks"] = dual_block_row_ranks;
    if (adjugate_rank_one) j["adjugate_rank_one"] = *adjugate_rank_one;
    if (det) j["det"] = det->get_str();
    if (node) {
      const auto& n = *node;
      json c;
      c["i"] = n.conditions.i;
      c["ii"] = n.conditions.ii;
      c["iii"] = n.conditions.iii;
      c["iv"] = n.conditions.iv;
      c["iv_literal_A23"] = n.conditions.iv_literal;
      c["global_column_reading"] = n.conditions.global_reading;
      c["column_reading"] = n.conditions.column_reading;
      c["row_signs"] = n.conditions.signs;
      j["conditions"] = c;
      j["det_x0"] = n.det0.get_str();
      j["det_x1"] = n.det1.get_str();
      j["seeds_tried"] = n.seeds_tried;
      if (n.seed_used) j["seed_used"] = *n.seed_used;
      j["generic_node"] = n.generic_node;
    }
    j["discrepancies"] = discrepancies;
    return j;
  }
};

/// Checks the certificate's claim from scratch with exact arithmetic.
inline VerifyReport verify_certificate(const Certificate& c, std::uint64_t seed = 0) {
  VerifyReport rep;
  rep.id = c.id;
  rep.kind = c.kind;
  rep.k = c.k;
  rep.N = c.N;
  rep.checksum = checksum(c);
  IntHessian H = certificate_hessian(c);
  rep.discrepancies = structure_violations(H);
  const auto tampered = diff_against_embedded(c);
  for (const auto& d : tampered) rep.discrepancies.push_back("differs from embedded payload: " + d);
  const bool shape_ok = rep.discrepancies.empty();
  if (c.kind == "corank1") {
    rep.rank = rank_exact(H);
    rep.corank = H.side() - *rep.rank;
    bool rows_ok = true;
    for (int i = 1; i <= c.k; ++i) {
      rep.block_row_ranks.push_back(block_row_rank(H, i));
      if (rep.block_row_ranks.back() != H.block_size()) {
        rows_ok = false;
        rep.discrepancies.push_back("block row " + std::to_string(i) + " has rank " + std::to_string(rep.block_row_ranks.back()));
      }
    }
    for (int t = c.k + 1; t <= c.N; ++t) rep.dual_block_row_ranks.push_back(dual_block_row_rank(H, t));
    rep.adjugate_rank_one = adjugate_rank_check(H);
    if (*rep.corank != 1) rep.discrepancies.push_back("corank is " + std::to_string(*rep.corank));
    rep.pass = shape_ok && *rep.corank == 1 && rows_ok && *rep.adjugate_rank_one;
  } else if (c.kind == "invertible") {
    rep.det = det(H.m);
    if (is_zero(*rep.det)) rep.discrepancies.push_back("determinant vanishes");
    rep.pass = shape_ok && !is_zero(*rep.det);
  } else if (c.kind == "nodepair") {
    rep.node = verify_node_pair_k3(H, seed);
    rep.det = rep.node->det0;
    for (const auto& v : rep.node->conditions.violations) rep.discrepancies.push_back(v);
    if (!rep.node->seed_used) rep.discrepancies.push_back("no completion with invertible H(x') within the seed budget");
    rep.pass = shape_ok && rep.node->pass;
  } else {
    throw std::invalid_argument("unknown certificate kind '" + c.kind + "'");
  }
  return rep;
}

inline json export_certificate(const Certificate& c) {
  json j;
  j["id"] = c.id;
  j["kind"] = c.kind;
  j["k"] = c.k;
  j["N"] = c.N;
  j["blocks"] = json::object();
  for (const auto& [name, m] : c.blocks) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json r = json::array();
      for (std::size_t col = 0; col < m.cols(); ++col) {
        if (m(i, col).fits_slong_p()) r.push_back(m(i, col).get_si());
        else r.push_back(m(i, col).get_str());
      }
      rows.push_back(r);
    }
    j["blocks"][name] = rows;
  }
  j["claim"] = c.claim;
  j["checksum"] = checksum_hex(checksum(c));
  return j;
}

/// Reads a certificate; a present checksum must match the payload.
inline Certificate import_certificate(const json& j) {
  Certificate c;
  if (!j.is_object() || !j.contains("id") || !j.at("id").is_string()) throw std::invalid_argument("certificate needs a string 'id'");
  if (!j.contains("kind") || !j.at("kind").is_string()) throw std::invalid_argument("certificate needs a string 'kind'");
  c.id = j.at("id").get<std::string>();
  c.kind = j.at("kind").get<std::string>();
  if (c.kind != "corank1" && c.kind != "invertible" && c.kind != "nodepair") throw std::invalid_argument("unknown certificate kind '" + c.kind + "'");
  c.k = require_int(j, "k");
  c.N = require_int(j, "N");
  if (c.k < 2 || c.N <= c.k) throw std::invalid_argument("certificate needs 2 <= k < N");
  if (!j.contains("blocks") || !j.at("blocks").is_object()) throw std::invalid_argument("certificate needs a 'blocks' object");
  for (const auto& [name, rows] : j.at("blocks").items()) c.blocks.emplace(name, rows_from_json(rows));
  if (j.contains("claim") && j.at("claim").is_string()) c.claim = j.at("claim").get<std::string>();
  if (j.contains("checksum")) {
    if (!j.at("checksum").is_string() || j.at("checksum").get<std::string>() != checksum_hex(checksum(c)))
      throw std::invalid_argument("certificate checksum does not match its payload");
  }
  certificate_hessian(c);
  return c;
}

/// Seeded search for an invertible Hessian of shape (k, N).
inline IntHessian find_invertible_hessian(int k, int N, std::uint64_t seed = 0, int attempts = 64) {
  const Rng root(seed);
  for (int a = 0; a < attempts; ++a) {
    Rng rng = root.split(static_cast<std::uint64_t>(a));
    IntHessian H = random_hessian(k, N, rng, 2);
    if (rank_mod_p<kDefaultPrime>(H.m) == H.side()) return H;
  }
  throw std::domain_error("no invertible Hessian found for (" + std::to_string(k) + "," + std::to_string(N) + ")");
}

/// Corank-one Hessian for (k, N) from the embedded ones and the four
/// specialization rules: H(3,6)+H(3,a) -> H(3,a+3), H(4,6)+H(4,a) -> H(4,a+2),
/// H(5,8)+H(5,a) -> H(5,a+3), and H(3,N-k+3)+H(k-3,N-3) -> H(k,N).
inline IntHessian build_corank_hessian(int k, int N, std::uint64_t seed = 0) {
  const std::string id = "corank-" + std::to_string(k) + "-" + std::to_string(N);
  for (const auto& r : certificate_records())
    if (r.id == id) return certificate_hessian(load_certificate(id));
  if (k == 3 && N - 3 >= 9) return specialize_embed(find_invertible_hessian(3, 6, seed), build_corank_hessian(3, N - 3, seed));
  if (k == 4 && N - 2 >= 8) return specialize_embed(find_invertible_hessian(4, 6, seed), build_corank_hessian(4, N - 2, seed));
  if (k == 5 && N - 3 >= 10) return specialize_embed(find_invertible_hessian(5, 8, seed), build_corank_hessian(5, N - 3, seed));
  if (k >= 5 && N - k + 3 >= 9)
    return specialize_embed_positions(build_corank_hessian(3, N - k + 3, seed), find_invertible_hessian(k - 3, N - 3, seed));
  throw std::invalid_argument("no specialization rule reaches (" + std::to_string(k) + "," + std::to_string(N) + ")");
}

inline Certificate build_corank_certificate(int k, int N, std::uint64_t seed = 0) {
  IntHessian H = build_corank_hessian(k, N, seed);
  Certificate c{"built-corank-" + std::to_string(k) + "-" + std::to_string(N), "corank1", k, N, {}, "rank k(N-k)-1 with every block row of full rank"};
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) c.blocks.emplace("A" + std::to_string(i) + std::to_string(j), H.block(i, j));
  return c;
}

}  // namespace dualgr
