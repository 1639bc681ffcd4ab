#include "polymat/document.hpp"

#include <fstream>
#include <sstream>

namespace polymat {
namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(std::string("document is missing the '") + key + "' field");
    return j.at(key);
}

std::string require_string(const Json& j, const char* what) {
    if (!j.is_string()) fail(std::string(what) + " must be a string");
    return j.get<std::string>();
}

}  // namespace

MatrixDocument MatrixDocument::from_json(const Json& j) {
    const Json& ring_j = require(j, "ring");
    const Json& vars_j = require(ring_j, "vars");
    if (!vars_j.is_array() || vars_j.empty())
        fail("'ring.vars' must be a non-empty array of variable names");
    std::vector<std::string> vars;
    for (const auto& v : vars_j) vars.push_back(require_string(v, "variable name"));
    OrderKind kind = OrderKind::lex;
    if (ring_j.contains("order")) {
        const std::string name =
            require_string(ring_j.at("order"), "'ring.order'");
        try {
            kind = order_kind_from_string(name);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    }
    RingPtr ring;
    try {
        ring = PolyRing::make(std::move(vars), {kind, {}});
    } catch (const DomainError& e) {
        fail(e.what());
    }

    const Json& matrix_j = require(j, "matrix");
    if (!matrix_j.is_array() || matrix_j.empty())
        fail("'matrix' must be a non-empty array of rows");
    std::vector<std::vector<Poly>> rows;
    for (const auto& row_j : matrix_j) {
        if (!row_j.is_array() || row_j.empty())
            fail("matrix rows must be non-empty arrays of polynomial strings");
        std::vector<Poly> row;
        for (const auto& cell : row_j)
            row.push_back(parse_poly(ring, require_string(cell, "matrix entry")));
        rows.push_back(std::move(row));
    }

    MatrixDocument doc;
    try {
        doc.matrix = PolyMatrix::from_rows(ring, std::move(rows));
    } catch (const DimensionError& e) {
        fail(e.what());
    }

    if (j.contains("divisors")) {
        const Json& divs = j.at("divisors");
        if (!divs.is_array()) fail("'divisors' must be an array");
        for (const auto& d : divs) {
            const std::string var_name = require_string(require(d, "var"), "'var'");
            const std::size_t var = ring->var_index(var_name);
            if (var == static_cast<std::size_t>(-1))
                fail("divisor variable '" + var_name + "' is not a ring variable");
            const Poly rhs =
                parse_poly(ring, require_string(require(d, "rhs"), "'rhs'"));
            unsigned power = 1;
            if (d.contains("power")) {
                if (!d.at("power").is_number_unsigned() ||
                    d.at("power").get<unsigned>() == 0)
                    fail("divisor 'power' must be a positive integer");
                power = d.at("power").get<unsigned>();
            }
            doc.divisors.emplace_back(LinearDivisor(var, rhs), power);
        }
    }
    return doc;
}

MatrixDocument MatrixDocument::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what(),
                         e.byte > 0 ? static_cast<std::size_t>(e.byte - 1)
                                    : std::string::npos);
    }
    try {
        return from_json(j);
    } catch (const DomainError& e) {
        throw ParseError(std::string(e.what()) + " (in '" + path + "')");
    }
}

Json MatrixDocument::to_json() const {
    Json j;
    j["ring"] = ring_to_json(ring());
    j["matrix"] = matrix_to_json(matrix);
    Json divs = Json::array();
    for (const auto& [div, power] : divisors) {
        Json d;
        d["var"] = div.ring()->var_names()[div.var()];
        d["rhs"] = div.rhs().str();
        d["power"] = power;
        divs.push_back(std::move(d));
    }
    j["divisors"] = std::move(divs);
    return j;
}

void MatrixDocument::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << to_json().dump(2) << '\n';
}

RingPtr ring_with_order(const RingPtr& ring, OrderKind kind) {
    if (ring->order().kind == kind && ring->order().priority.empty()) return ring;
    return PolyRing::make(ring->var_names(), {kind, {}});
}

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (const unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4)
        os << "0123456789abcdef"[(h >> shift) & 0xF];
    return os.str();
}

Json ring_to_json(const RingPtr& ring) {
    Json j;
    j["vars"] = ring->var_names();
    j["order"] = to_string(ring->order().kind);
    return j;
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Json groebner_to_json(const GroebnerBasis& gb) {
    Json j;
    j["order"] = gb.working_ring() ? to_string(gb.order().kind) : "lex";
    Json elems = Json::array();
    for (const auto& e : gb.elements()) elems.push_back(e.str());
    j["elements"] = std::move(elems);
    j["is_unit"] = gb.is_unit();
    return j;
}

Json class_report_to_json(const ClassReport& report) {
    Json j;
    j["d_l"] = report.d_l.str();
    j["d_l_minus_1"] = report.d_l_minus_1.str();
    j["eta"] = report.eta;
    j["gamma"] = report.gamma;
    j["divides_d_l"] = report.divides_d_l;
    j["gcd_d_dl1"] = report.gcd_d_dl1.str();
    Json e = Json::array();
    for (const auto& p : report.e) e.push_back(p.str());
    j["e"] = std::move(e);
    Json h = Json::array();
    for (const auto& p : report.h) h.push_back(p.str());
    j["h"] = std::move(h);
    j["classes"] = Json{{"S", report.in_s},
                        {"S1", report.in_s1},
                        {"S2", report.in_s2},
                        {"S3", report.in_s3}};
    Json certs;
    if (report.gb_s1) certs["s1"] = groebner_to_json(*report.gb_s1);
    if (report.gb_s2) certs["s2"] = groebner_to_json(*report.gb_s2);
    if (report.gb_s3) certs["s3"] = groebner_to_json(*report.gb_s3);
    if (report.gb_d_dl1) certs["d_dl1"] = groebner_to_json(*report.gb_d_dl1);
    j["certificates"] = std::move(certs);
    return j;
}

Json verify_report_to_json(const VerifyReport& report) {
    Json j;
    j["pass"] = report.pass;
    Json conds = Json::array();
    for (const auto& c : report.conditions) {
        conds.push_back(
            Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["conditions"] = std::move(conds);
    return j;
}

Json factorization_to_json(const FactorizationResult& result) {
    Json j;
    j["original"] = matrix_to_json(result.original);
    Json steps = Json::array();
    for (const auto& step : result.steps) {
        Json s;
        s["divisor"] = step.divisor.str();
        s["divisor_var"] =
            step.divisor.ring()->var_names()[step.divisor.var()];
        s["divisor_rhs"] = step.divisor.rhs().str();
        s["substituted"] = matrix_to_json(step.f_hat);
        Json w = Json::array();
        for (const auto& p : step.w.components) w.push_back(p.str());
        s["w"] = std::move(w);
        s["w_content"] = step.w.content.str();
        s["v"] = matrix_to_json(step.completion.v);
        s["u"] = matrix_to_json(step.completion.u);
        s["g"] = matrix_to_json(step.g);
        s["residual"] = matrix_to_json(step.residual);
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    j["residual"] = matrix_to_json(result.residual);
    j["verification"] = verify_report_to_json(result.verification);
    if (result.class_report)
        j["class_report"] = class_report_to_json(*result.class_report);
    return j;
}

}  // namespace polymat
