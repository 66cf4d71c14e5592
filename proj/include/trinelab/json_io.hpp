// json_io.hpp — JSON encoding of the wire types: complex numbers as [re, im]
// pairs, matrices as row-major nested arrays, POVMs as {elements, closure}.
// Round-trips are bit-exact at double precision.

#pragma once

#include <json.hpp>

#include "trinelab/min_error.hpp"

namespace trinelab {

nlohmann::json to_json(const Complex& z);
nlohmann::json to_json(const Ket& v);
nlohmann::json to_json(const CMat& m);
nlohmann::json to_json(const Povm& p);

Complex complex_from_json(const nlohmann::json& j);
Ket ket_from_json(const nlohmann::json& j);
CMat cmat_from_json(const nlohmann::json& j);
Povm povm_from_json(const nlohmann::json& j);

}  // namespace trinelab
