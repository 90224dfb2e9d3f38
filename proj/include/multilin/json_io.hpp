#pragma once

/**
 * @file json_io.hpp
 * @brief JSON interchange for scalars, matrices, polynomial maps and
 * multilinear maps.
 *
 * Output is canonical: object keys sorted, entries listed in rank order, zero
 * entries omitted. Every reader validates its input and reports the
 * offending field path through SchemaError.
 */

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "multilin/alt_matrix.hpp"
#include "multilin/multilinear.hpp"
#include "multilin/polymap.hpp"
#include "multilin/sym_matrix.hpp"

namespace multilin::io {

using Json = nlohmann::json;

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw SchemaError(path + ": " + what);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing");
  return *it;
}

inline int get_count(const Json& j, const std::string& key, const std::string& path) {
  const Json& v = field(j, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 1'000'000) {
    fail(path + "." + key, "expected a nonnegative integer");
  }
  return v.get<int>();
}

inline void expect_kind(const Json& j, const std::string& kind, const std::string& path) {
  const Json& v = field(j, "kind", path);
  if (!v.is_string() || v.get<std::string>() != kind) fail(path + ".kind", "expected \"" + kind + "\"");
}

inline std::vector<int> int_array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an integer array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<int>());
  }
  return out;
}

inline MultiIndex multi_index(const Json& j, int n, int weight, const std::string& path) {
  auto v = int_array(j, path);
  if (static_cast<int>(v.size()) != n) fail(path, "length " + std::to_string(v.size()) + " != " + std::to_string(n));
  for (int x : v) {
    if (x < 0) fail(path, "negative multi-index entry");
  }
  MultiIndex m(std::move(v));
  if (m.weight() != weight) fail(path, "weight " + std::to_string(m.weight()) + " != " + std::to_string(weight));
  return m;
}

inline StrictIndex strict_index(const Json& j, int n, int p, const std::string& path) {
  auto v = int_array(j, path);
  if (static_cast<int>(v.size()) != p) fail(path, "length " + std::to_string(v.size()) + " != " + std::to_string(p));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > n) fail(path, "entry outside 1.." + std::to_string(n));
    if (i > 0 && v[i - 1] >= v[i]) fail(path, "entries must strictly increase");
  }
  return StrictIndex(std::move(v), n);
}

}  // namespace detail

inline Json to_json(const Rational& x) { return x.str(); }

inline Rational rational_from_json(const Json& j, const std::string& path = "value") {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) detail::fail(path, "expected a rational string \"num/den\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const SchemaError& e) {
    detail::fail(path, e.what());
  }
}

inline Json to_json(const MultiIndex& a) { return a.entries(); }
inline Json to_json(const StrictIndex& a) { return a.entries(); }

inline Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

inline DenseMatrix dense_from_json(const Json& j, const std::string& path = "$") {
  const int rows = detail::get_count(j, "rows", path);
  const int cols = detail::get_count(j, "cols", path);
  const Json& e = detail::field(j, "entries", path);
  if (!e.is_array() || static_cast<int>(e.size()) != rows) detail::fail(path + ".entries", "expected " + std::to_string(rows) + " rows");
  DenseMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i) {
    const std::string rp = path + ".entries[" + std::to_string(i) + "]";
    if (!e[static_cast<std::size_t>(i)].is_array() || static_cast<int>(e[static_cast<std::size_t>(i)].size()) != cols) {
      detail::fail(rp, "expected " + std::to_string(cols) + " values");
    }
    for (int c = 0; c < cols; ++c) {
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) =
          rational_from_json(e[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], rp + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

inline Json to_json(const SymMatrix& a) {
  Json entries = Json::array();
  const auto rows = enumerate_stratum(a.n(), a.p());
  const auto cols = enumerate_stratum(a.n_prime(), a.p_prime());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rational& v = a.flat()(i, j);
      if (v.is_zero()) continue;
      entries.push_back(Json{{"row", to_json(rows[i])}, {"col", to_json(cols[j])}, {"value", to_json(v)}});
    }
  }
  return Json{{"kind", "sym"}, {"n", a.n()}, {"n_prime", a.n_prime()}, {"p", a.p()}, {"p_prime", a.p_prime()},
              {"entries", std::move(entries)}};
}

inline SymMatrix sym_from_json(const Json& j, const std::string& path = "$") {
  detail::expect_kind(j, "sym", path);
  const int n = detail::get_count(j, "n", path);
  const int np = detail::get_count(j, "n_prime", path);
  const int p = detail::get_count(j, "p", path);
  const int pp = detail::get_count(j, "p_prime", path);
  SymMatrix a(n, np, p, pp);
  const Json& e = detail::field(j, "entries", path);
  if (!e.is_array()) detail::fail(path + ".entries", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::string ep = path + ".entries[" + std::to_string(k) + "]";
    auto row = detail::multi_index(detail::field(e[k], "row", ep), n, p, ep + ".row");
    auto col = detail::multi_index(detail::field(e[k], "col", ep), np, pp, ep + ".col");
    if (!seen.insert({rank_index(row), rank_index(col)}).second) detail::fail(ep, "duplicate entry");
    a.set(row, col, rational_from_json(detail::field(e[k], "value", ep), ep + ".value"));
  }
  return a;
}

inline Json to_json(const AltMatrix& a) {
  Json entries = Json::array();
  const auto rows = enumerate_strict(a.n(), a.p());
  const auto cols = enumerate_strict(a.n_prime(), a.p_prime());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rational& v = a.flat()(i, j);
      if (v.is_zero()) continue;
      entries.push_back(Json{{"row", to_json(rows[i])}, {"col", to_json(cols[j])}, {"value", to_json(v)}});
    }
  }
  return Json{{"kind", "alt"}, {"n", a.n()}, {"n_prime", a.n_prime()}, {"p", a.p()}, {"p_prime", a.p_prime()},
              {"entries", std::move(entries)}};
}

inline AltMatrix alt_from_json(const Json& j, const std::string& path = "$") {
  detail::expect_kind(j, "alt", path);
  const int n = detail::get_count(j, "n", path);
  const int np = detail::get_count(j, "n_prime", path);
  const int p = detail::get_count(j, "p", path);
  const int pp = detail::get_count(j, "p_prime", path);
  AltMatrix a(n, np, p, pp);
  const Json& e = detail::field(j, "entries", path);
  if (!e.is_array()) detail::fail(path + ".entries", "expected an array");
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t k = 0; k < e.size(); ++k) {
    const std::string ep = path + ".entries[" + std::to_string(k) + "]";
    auto row = detail::strict_index(detail::field(e[k], "row", ep), n, p, ep + ".row");
    auto col = detail::strict_index(detail::field(e[k], "col", ep), np, pp, ep + ".col");
    if (!seen.insert({rank_strict(row), rank_strict(col)}).second) detail::fail(ep, "duplicate entry");
    a.set(row, col, rational_from_json(detail::field(e[k], "value", ep), ep + ".value"));
  }
  return a;
}

inline Json to_json(const PolyMap& m) {
  Json blocks = Json::array();
  for (const auto& b : m.blocks()) {
    Json jb = to_json(b);
    blocks.push_back(std::move(jb));
  }
  return Json{{"n_in", m.n_in()}, {"n_out", m.n_out()}, {"blocks", std::move(blocks)}};
}

inline PolyMap polymap_from_json(const Json& j, const std::string& path = "$") {
  const int n_in = detail::get_count(j, "n_in", path);
  const int n_out = detail::get_count(j, "n_out", path);
  const Json& blocks = detail::field(j, "blocks", path);
  if (!blocks.is_array()) detail::fail(path + ".blocks", "expected an array");
  PolyMap m(n_in, n_out);
  std::set<int> seen;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::string bp = path + ".blocks[" + std::to_string(k) + "]";
    SymMatrix b = sym_from_json(blocks[k], bp);
    if (b.p() != 1) detail::fail(bp + ".p", "polynomial map blocks have row weight 1");
    if (b.n() != n_out) detail::fail(bp + ".n", "does not match n_out");
    if (b.p_prime() > 0 && b.n_prime() != n_in) detail::fail(bp + ".n_prime", "does not match n_in");
    if (!seen.insert(b.p_prime()).second) detail::fail(bp + ".p_prime", "duplicate block");
    m.set_block(b);
  }
  return m;
}

inline Json to_json(const SymMultiMap& m) {
  Json j = to_json(m.matrix());
  j["arity"] = m.arity();
  return j;
}

inline SymMultiMap sym_multimap_from_json(const Json& j, const std::string& path = "$") {
  SymMatrix a = sym_from_json(j, path);
  const int arity = detail::get_count(j, "arity", path);
  if (a.p() != 1) detail::fail(path + ".p", "multilinear map matrices have row weight 1");
  if (arity != a.p_prime()) detail::fail(path + ".arity", "does not match p_prime");
  return SymMultiMap(std::move(a));
}

inline Json to_json(const AltMultiMap& m) {
  Json j = to_json(m.matrix());
  j["arity"] = m.arity();
  return j;
}

inline AltMultiMap alt_multimap_from_json(const Json& j, const std::string& path = "$") {
  AltMatrix a = alt_from_json(j, path);
  const int arity = detail::get_count(j, "arity", path);
  if (a.p() != 1) detail::fail(path + ".p", "multilinear map matrices have row weight 1");
  if (arity != a.p_prime()) detail::fail(path + ".arity", "does not match p_prime");
  return AltMultiMap(std::move(a));
}

inline Json to_json(const BilinearMap& c) {
  Json j = to_json(c.matrix());
  j["first_dim"] = c.first_dim();
  return j;
}

/// `first_dim` may be omitted when the caller knows the split.
inline BilinearMap bilinear_from_json(const Json& j, int default_first_dim, const std::string& path = "$") {
  SymMatrix c = sym_from_json(j, path);
  if (c.p() != 1 || c.p_prime() != 2) detail::fail(path + ".p", "bilinear map matrices have weight (1,2)");
  int first = default_first_dim;
  if (j.contains("first_dim")) first = detail::get_count(j, "first_dim", path);
  if (first < 0 || first > c.n_prime()) detail::fail(path + ".first_dim", "outside the concatenated space");
  return BilinearMap(std::move(c), first);
}

}  // namespace multilin::io
