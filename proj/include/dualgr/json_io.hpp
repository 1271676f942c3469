#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "dualgr/exterior_form.hpp"
#include "dualgr/hessian.hpp"
#include "dualgr/multiindex.hpp"

namespace dualgr {

using json = nlohmann::ordered_json;

inline int require_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

/// Coefficients travel as decimal strings; plain JSON integers are accepted on input.
inline Integer integer_from_json(const json& j) {
  if (j.is_string()) return parse_integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(j.dump(), 10);
  throw std::invalid_argument("coefficient must be a decimal string or integer");
}

inline json to_json(const MultiIndex& I) {
  json a = json::array();
  for (int v : I) a.push_back(v);
  return a;
}

inline MultiIndex index_from_json(const json& j, int N) {
  if (!j.is_array()) throw std::invalid_argument("index must be an array of integers");
  MultiIndex I;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("index entries must be integers");
    I.push_back(v.get<int>());
  }
  check_range(I, N);
  return I;
}

inline json to_json(const IntArray& A) {
  json j;
  j["k"] = A.k();
  j["N"] = A.N();
  j["entries"] = json::array();
  for (const auto& [I, c] : A.entries()) j["entries"].push_back({{"I", to_json(I)}, {"c", c.get_str()}});
  return j;
}

/// Rejects unsorted or repeated keys: arrays are stored on sorted keys only.
inline IntArray array_from_json(const json& j) {
  const int k = require_int(j, "k"), N = require_int(j, "N");
  if (k < 1 || N < k) throw std::invalid_argument("array needs 1 <= k <= N");
  if (!j.contains("entries") || !j.at("entries").is_array()) throw std::invalid_argument("missing 'entries' array");
  IntArray A(k, N);
  std::set<MultiIndex> seen;
  for (const auto& e : j.at("entries")) {
    if (!e.is_object() || !e.contains("I") || !e.contains("c")) throw std::invalid_argument("entry needs 'I' and 'c'");
    MultiIndex I = index_from_json(e.at("I"), N);
    if (static_cast<int>(I.size()) != k) throw std::invalid_argument("entry index has wrong length");
    if (!is_strictly_increasing(I)) throw std::invalid_argument("entry index not strictly increasing: " + to_string(I));
    if (!seen.insert(I).second) throw std::invalid_argument("duplicate entry " + to_string(I));
    A.set(I, integer_from_json(e.at("c")));
  }
  return A;
}

inline json rows_to_json(const Matrix<Integer>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(m(i, c).get_str());
    rows.push_back(r);
  }
  return rows;
}

inline Matrix<Integer> rows_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty()) throw std::invalid_argument("'rows' must be a nonempty array");
  const std::size_t n = rows.size(), c = rows[0].is_array() ? rows[0].size() : 0;
  Matrix<Integer> m(n, c);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = integer_from_json(rows[i][j]);
  }
  return m;
}

inline json to_json(const IntHessian& H) {
  json j;
  j["k"] = H.k;
  j["N"] = H.N;
  j["rows"] = rows_to_json(H.m);
  return j;
}

inline IntHessian hessian_from_json(const json& j) {
  const int k = require_int(j, "k"), N = require_int(j, "N");
  if (!j.contains("rows")) throw std::invalid_argument("missing 'rows'");
  return IntHessian(k, N, rows_from_json(j.at("rows")));
}

inline json to_json(const HessianMatrix<IntPoly>& H, const std::vector<std::string>& names) {
  json j;
  j["k"] = H.k;
  j["N"] = H.N;
  j["variables"] = names;
  j["rows"] = json::array();
  for (std::size_t i = 0; i < H.side(); ++i) {
    json r = json::array();
    for (std::size_t c = 0; c < H.side(); ++c) r.push_back(H.m(i, c).to_string(names));
    j["rows"].push_back(r);
  }
  return j;
}

}  // namespace dualgr
