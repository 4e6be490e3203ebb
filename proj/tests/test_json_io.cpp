#include "support.hpp"

#include "sl2trace/json_io.hpp"
#include "sl2trace/reduce.hpp"
#include "sl2trace/word.hpp"

using namespace sl2trace;
using namespace sl2trace::test;
using json_io::json;

TEST_CASE("complex and matrix encoding") {
    CHECK(json_io::to_json(Complex(1.5, -2.0)) == json::parse("[1.5, -2.0]"));
    CHECK(json_io::complex_from_json(json::parse("[1.5, -2.0]")) == Complex(1.5, -2.0));
    CHECK(json_io::complex_from_json(json::parse("3")) == Complex(3.0, 0.0));
    CHECK(thrown_code([] { json_io::complex_from_json(json::parse("\"1\"")); }) == Errc::Schema);
    CHECK(thrown_code([] { json_io::complex_from_json(json::parse("[1, 2, 3]")); }) == Errc::Schema);

    const Mat2C m{Complex(1.0, 1.0), 2.0, Complex(0.0, -0.5), Complex(0.5, 0.25)};
    const Mat2C valid = renormalize_det(m);
    CHECK(json_io::matrix_from_json(json_io::to_json(valid)) == valid);
    CHECK(thrown_code([] { json_io::matrix_from_json(json::parse("[[1, 1], [1, 1]]")); }) == Errc::InvalidMatrix);
    CHECK(thrown_code([] { json_io::matrix_from_json(json::parse("[[1, 0]]")); }) == Errc::Schema);
}

TEST_CASE("polynomials round trip with big coefficients") {
    TracePoly p = reduce_trace(parse_word("A1^40 A2^3"), 2);
    const json j = json_io::to_json(p);
    CHECK(json_io::poly_from_json(j) == p);
    for (const json& term : j) CHECK(term["coeff"].is_string());
    CHECK(thrown_code([] { json_io::poly_from_json(json::parse(R"([{"coeff": 1, "monomial": {}}])")); }) ==
          Errc::Schema);
    CHECK(thrown_code([] {
              json_io::poly_from_json(json::parse(R"([{"coeff": "x", "monomial": {}}])"));
          }) == Errc::Schema);
}

TEST_CASE("coordinates") {
    const json j = json::parse(R"({"n": 2, "traces": {"t1": [3, 0], "t2": 3, "t12": [0, 1]}})");
    const TraceCoordinates c = json_io::coordinates_from_json(j);
    CHECK(c.at({1, 2}) == Complex(0.0, 1.0));
    CHECK(json_io::coordinates_from_json(json_io::to_json(c)).values() == c.values());
    CHECK(thrown_code([] { json_io::coordinates_from_json(json::parse(R"({"traces": {}})")); }) == Errc::Schema);
    CHECK(thrown_code([] {
              json_io::coordinates_from_json(json::parse(R"({"n": 2, "traces": {"t1": 1, "t2": 1, "t21": 1}})"));
          }) == Errc::Schema);
}

TEST_CASE("errors carry their details") {
    const json e = json_io::error_to_json(InconsistentCoordinatesError(3, 2.5));
    CHECK(e["error"]["code"] == "InconsistentCoordinates");
    CHECK(e["error"]["generator"] == 3);
    CHECK(e["error"]["residual"] == 2.5);
    const json s = json_io::error_to_json(SyntaxError(4, "bad"));
    CHECK(s["error"]["position"] == 4);
    const json t = json_io::error_to_json(TraceMismatchError(MismatchedTrace::G1G2, "x"));
    CHECK(t["error"]["code"] == "TraceMismatch");
    CHECK(t["error"]["which"] == "g1g2");
}
