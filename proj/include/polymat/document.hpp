#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "polymat/factorizer.hpp"
#include "polymat/matrix.hpp"

namespace polymat {

using Json = nlohmann::json;

// On-disk description of a matrix problem:
// {
//   "ring": {"vars": ["z1", "z2", "z3"], "order": "lex"},
//   "matrix": [["z1*z2 - 1", "0"], ...],
//   "divisors": [{"var": "z1", "rhs": "z2", "power": 1}]
// }
// "order" defaults to "lex"; "divisors" may be absent or empty; "power"
// defaults to 1 and must be >= 1.
struct MatrixDocument {
    PolyMatrix matrix;
    std::vector<std::pair<LinearDivisor, unsigned>> divisors;

    const RingPtr& ring() const { return matrix.ring(); }

    static MatrixDocument from_json(const Json& j);
    static MatrixDocument load(const std::string& path);
    Json to_json() const;
    void save(const std::string& path) const;
};

// Ring with the document's variables but a caller-chosen order kind.
RingPtr ring_with_order(const RingPtr& ring, OrderKind kind);

// 64-bit FNV-1a digest of a byte string, rendered as "fnv1a:<16 hex digits>".
std::string fnv1a_digest(const std::string& bytes);

Json ring_to_json(const RingPtr& ring);
Json matrix_to_json(const PolyMatrix& m);
Json groebner_to_json(const GroebnerBasis& gb);
Json class_report_to_json(const ClassReport& report);
Json verify_report_to_json(const VerifyReport& report);
Json factorization_to_json(const FactorizationResult& result);

}  // namespace polymat
