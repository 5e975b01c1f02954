#pragma once

#include <json.hpp>

#include "flagcert/matrix.hpp"

namespace flagcert {

using json = nlohmann::json;

json to_json_scalar(const Rational& q);
json to_json_scalar(const QuadExt& x);  // {"1","sqrt2","sqrt3","sqrt6"}

Rational rational_from_json(const json& j);
QuadExt quad_from_json(const json& j);  // also accepts a plain "p/q" string

template <class T>
T scalar_from_json(const json& j);
template <>
inline Rational scalar_from_json<Rational>(const json& j) { return rational_from_json(j); }
template <>
inline QuadExt scalar_from_json<QuadExt>(const json& j) { return quad_from_json(j); }

// Full row-major nested array.
template <class T>
json to_json_rows(const SymMatrix<T>& m) {
  json rows = json::array();
  for (int i = 0; i < m.order(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(to_json_scalar(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
SymMatrix<T> sym_from_json_rows(const json& rows) {
  std::vector<Vec<T>> r;
  for (const auto& row : rows) {
    Vec<T> v;
    for (const auto& x : row) v.push_back(scalar_from_json<T>(x));
    r.push_back(std::move(v));
  }
  return SymMatrix<T>::from_rows(r);
}

// Matrix dump: [{"type": ..., "order": n, "entries": rows}, ...]
template <class T>
json to_json_blocks(const BlockSymMatrix<T>& m) {
  json out = json::array();
  for (const auto& b : m.blocks())
    out.push_back({{"type", b.type}, {"order", b.matrix.order()}, {"entries", to_json_rows(b.matrix)}});
  return out;
}

}  // namespace flagcert
