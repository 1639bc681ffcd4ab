#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "polymat/document.hpp"

using namespace polymat;
using testsup::p;

namespace {

Json demo_json() {
    return Json::parse(R"({
        "ring": {"vars": ["z1", "z2", "z3"], "order": "lex"},
        "matrix": [["z1*z2 - 1", "0"], ["z3", "1/2*z1"]],
        "divisors": [{"var": "z1", "rhs": "z2", "power": 2}]
    })");
}

}  // namespace

TEST_CASE("documents parse into matrices and divisors") {
    const MatrixDocument doc = MatrixDocument::from_json(demo_json());
    CHECK(doc.ring()->nvars() == 3);
    CHECK(doc.ring()->order().kind == OrderKind::lex);
    CHECK(doc.matrix.rows() == 2);
    CHECK(doc.matrix.cols() == 2);
    CHECK(doc.matrix.at(0, 0) == p(doc.ring(), "z1*z2 - 1"));
    CHECK(doc.matrix.at(1, 1) == p(doc.ring(), "1/2*z1"));
    REQUIRE(doc.divisors.size() == 1);
    CHECK(doc.divisors[0].first.var() == 0);
    CHECK(doc.divisors[0].first.rhs() == p(doc.ring(), "z2"));
    CHECK(doc.divisors[0].second == 2);
}

TEST_CASE("defaults: order lex, power 1, divisors optional") {
    const MatrixDocument doc = MatrixDocument::from_json(Json::parse(
        R"({"ring": {"vars": ["x", "y"]}, "matrix": [["x + y"]],
            "divisors": [{"var": "y", "rhs": "x^2"}]})"));
    CHECK(doc.ring()->order().kind == OrderKind::lex);
    CHECK(doc.divisors[0].second == 1);

    const MatrixDocument bare = MatrixDocument::from_json(
        Json::parse(R"({"ring": {"vars": ["x"]}, "matrix": [["x"]]})"));
    CHECK(bare.divisors.empty());
}

TEST_CASE("document round trips through JSON and disk") {
    const MatrixDocument doc = MatrixDocument::from_json(demo_json());
    const MatrixDocument again = MatrixDocument::from_json(doc.to_json());
    CHECK(again.matrix == doc.matrix);
    CHECK(again.divisors.size() == doc.divisors.size());
    CHECK(again.divisors[0].first.to_poly() == doc.divisors[0].first.to_poly());
    CHECK(again.divisors[0].second == doc.divisors[0].second);

    const std::string path = "document_test_roundtrip.json";
    doc.save(path);
    const MatrixDocument loaded = MatrixDocument::load(path);
    CHECK(loaded.matrix == doc.matrix);
    std::remove(path.c_str());
}

TEST_CASE("malformed documents are rejected with ParseError") {
    const auto reject = [](const char* text) {
        CHECK_THROWS_AS(MatrixDocument::from_json(Json::parse(text)),
                        ParseError);
    };
    reject(R"({"matrix": [["1"]]})");                            // no ring
    reject(R"({"ring": {"vars": []}, "matrix": [["1"]]})");      // no vars
    reject(R"({"ring": {"vars": ["x"], "order": "weird"}, "matrix": [["x"]]})");
    reject(R"({"ring": {"vars": ["x"]}, "matrix": []})");        // empty matrix
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["x"], ["x", "x"]]})");
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["y"]]})");   // unknown var
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["x +"]]})"); // syntax
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["x"]],
               "divisors": [{"var": "q", "rhs": "0"}]})");       // bad var
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["x"]],
               "divisors": [{"var": "x", "rhs": "0", "power": 0}]})");
    reject(R"({"ring": {"vars": ["x"]}, "matrix": [["x"]],
               "divisors": [{"var": "x", "rhs": "0", "power": -1}]})");
    reject(R"({"ring": {"vars": ["x", "x"]}, "matrix": [["x"]]})");

    // rhs involving the divisor variable violates the divisor's invariant.
    CHECK_THROWS(MatrixDocument::from_json(Json::parse(
        R"({"ring": {"vars": ["x"]}, "matrix": [["x"]],
            "divisors": [{"var": "x", "rhs": "x"}]})")));
}

TEST_CASE("load failures carry the path or byte position") {
    CHECK_THROWS_AS(MatrixDocument::load("no_such_file.json"), ParseError);
    const std::string path = "document_test_invalid.json";
    {
        std::ofstream out(path);
        out << "{ not json";
    }
    try {
        MatrixDocument::load(path);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() != std::string::npos);
    }
    std::remove(path.c_str());
}

TEST_CASE("digest is stable and input-sensitive") {
    // Pinned reference value for the empty string (offset basis of the hash)
    // and for a known short string.
    CHECK(fnv1a_digest("") == "fnv1a:cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "fnv1a:af63dc4c8601ec8c");
    CHECK(fnv1a_digest("ab") != fnv1a_digest("ba"));
    CHECK(fnv1a_digest(std::string(1, '\0')) != fnv1a_digest(""));
}

TEST_CASE("ring order can be swapped while keeping variables") {
    const RingPtr lex = testsup::z3_ring(OrderKind::lex);
    const RingPtr swapped = ring_with_order(lex, OrderKind::grevlex);
    CHECK(swapped->order().kind == OrderKind::grevlex);
    CHECK(swapped->var_names() == lex->var_names());
    CHECK(ring_with_order(lex, OrderKind::lex) == lex);  // no-op shares state
}

TEST_CASE("report renderers emit the expected fields") {
    const RingPtr ring = testsup::z3_ring();
    const PolyMatrix f = testsup::demo_matrix(ring);
    const LinearDivisor d(0, p(ring, "z2"));

    SUBCASE("ring and matrix") {
        const Json rj = ring_to_json(ring);
        CHECK(rj["vars"].size() == 3);
        CHECK(rj["order"] == "lex");
        const Json mj = matrix_to_json(f);
        REQUIRE(mj.is_array());
        CHECK(mj.size() == 3);
        // Entries re-parse to the original polynomials.
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(p(ring, mj[i][j].get<std::string>()) == f.at(i, j));
    }
    SUBCASE("class report") {
        const Json cj = class_report_to_json(classify(f, d));
        CHECK(cj["classes"]["S"] == true);
        CHECK(cj["classes"]["S1"] == false);
        CHECK(cj["classes"]["S2"] == false);
        CHECK(cj["classes"]["S3"] == true);
        CHECK(p(ring, cj["d_l"].get<std::string>()) ==
              p(ring, "(z1 - z2)*(z2 + z3)^2"));
        CHECK(cj["eta"] == 1);
        CHECK(cj["gamma"] == 9);
        CHECK(cj["certificates"]["s3"]["is_unit"] == true);
    }
    SUBCASE("factorization and verification") {
        const FactorizationResult result = factor_once(f, d);
        const Json fj = factorization_to_json(result);
        CHECK(fj["steps"].size() == 1);
        CHECK(fj["steps"][0]["divisor"] == "z1 - z2");
        CHECK(fj["verification"]["pass"] == true);
        // The rendered factor matrix re-parses to the in-memory factor.
        const Json gj = fj["steps"][0]["g"];
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(p(ring, gj[i][j].get<std::string>()) ==
                      result.steps[0].g.at(i, j));
        const Json vj = verify_report_to_json(result.verification);
        CHECK(vj["pass"] == true);
        CHECK(vj["conditions"].size() >= 2);
    }
}
