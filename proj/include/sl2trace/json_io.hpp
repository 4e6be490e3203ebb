#pragma once

#include <json.hpp>

#include "sl2trace/homcheck.hpp"
#include "sl2trace/normalize.hpp"
#include "sl2trace/reconstruct.hpp"
#include "sl2trace/relator.hpp"
#include "sl2trace/tracepoly.hpp"

namespace sl2trace::json_io {

using nlohmann::json;

// Complex values are [re, im]; a bare number is accepted on input.
json to_json(Complex z);
Complex complex_from_json(const json& j);

// [[[re,im],[re,im]],[[re,im],[re,im]]], row-major. Input is determinant-checked.
json to_json(const Mat2C& m);
Mat2C matrix_from_json(const json& j, double det_tol = Tolerances{}.det);
std::vector<Mat2C> matrices_from_json(const json& j, double det_tol = Tolerances{}.det);

// [{"coeff": "-2", "monomial": {"t1": 2}}, ...] in canonical term order.
json to_json(const TracePoly& p);
TracePoly poly_from_json(const json& j);

json to_json(const TraceValues& values);
TraceValues values_from_json(const json& j);

json to_json(const CanonicalPair& f);

// {"n": int, "traces": {"t1": [re, im], ...}}
json to_json(const TraceCoordinates& c);
TraceCoordinates coordinates_from_json(const json& j);

json to_json(const ReconstructedGroup& g);
json to_json(const TraceCheck& c);
json to_json(const HomVerdict& v);
json to_json(const RelatorReport& r);
json to_json(const LocalSolution& s);

/// {"error": {"code": "...", "message": "...", ...details}}
json error_to_json(const Error& e);

}  // namespace sl2trace::json_io
