#include "trinelab/json_io.hpp"

#include <stdexcept>

namespace trinelab {

using nlohmann::json;

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

json to_json(const Ket& v) {
  json arr = json::array();
  for (int k = 0; k < v.dim(); ++k) arr.push_back(to_json(v[k]));
  return arr;
}

json to_json(const CMat& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Povm& p) {
  json els = json::array();
  for (const CMat& el : p.elements) els.push_back(to_json(el));
  return json{{"elements", els}, {"closure", to_json(p.closure)}};
}

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

Ket ket_from_json(const json& j) {
  const int dim = static_cast<int>(j.size());
  Ket v(dim);
  for (int k = 0; k < dim; ++k) v[k] = complex_from_json(j[k]);
  return v;
}

CMat cmat_from_json(const json& j) {
  const int dim = static_cast<int>(j.size());
  CMat m(dim);
  for (int r = 0; r < dim; ++r) {
    if (static_cast<int>(j[r].size()) != dim) throw std::invalid_argument("ragged matrix");
    for (int c = 0; c < dim; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

Povm povm_from_json(const json& j) {
  Povm p;
  p.elements.clear();
  for (const json& el : j.at("elements")) p.elements.push_back(cmat_from_json(el));
  p.closure = cmat_from_json(j.at("closure"));
  return p;
}

}  // namespace trinelab
