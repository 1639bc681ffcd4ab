#pragma once
// Shared fixtures and deterministic random generators for the test suite.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "polymat/factorizer.hpp"
#include "polymat/matrix.hpp"
#include "polymat/poly.hpp"

namespace testsup {

using namespace polymat;

using Rng = std::mt19937_64;

inline RingPtr z3_ring(OrderKind kind = OrderKind::lex) {
    return PolyRing::make({"z1", "z2", "z3"}, MonomialOrder{kind, {}});
}

inline Poly p(const RingPtr& ring, const std::string& text) {
    return parse_poly(ring, text);
}

inline PolyMatrix matrix_of(const RingPtr& ring,
                            const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::vector<Poly>> parsed;
    for (const auto& row : rows) {
        std::vector<Poly> prow;
        for (const auto& text : row) prow.push_back(parse_poly(ring, text));
        parsed.push_back(std::move(prow));
    }
    return PolyMatrix::from_rows(ring, std::move(parsed));
}

// The 3x3 demo matrix exercised throughout the suite; its determinant is
// (z1 - z2) * (z2 + z3)^2.
inline PolyMatrix demo_matrix(const RingPtr& ring) {
    return matrix_of(
        ring,
        {{"z1*z2 - z1 - z2^2 - z2*z3", "z1*z3 + z1 - z2*z3 - z2 - z3^2 - z3",
          "-z1*z2 + z1*z3 + 2*z1 + z2^2 - z2 - z3^2 - 2*z3 - 1"},
         {"-z1*z2 - z1*z3 + z2 + z3", "z2 + z3", "z1*z2 + z1*z3"},
         {"z1", "-z1 + z2 + z3", "-2*z1 + z2 + z3 + 1"}});
}

// Reference factorization of demo_matrix with respect to z1 - z2: the
// upper-triangular completion pair and the factor/residual it produces.
inline PolyMatrix demo_u(const RingPtr& ring) {
    return matrix_of(ring, {{"1", "0", "z3 + 1"}, {"0", "1", "0"}, {"0", "0", "1"}});
}

inline PolyMatrix demo_v(const RingPtr& ring) {
    return matrix_of(ring,
                     {{"1", "0", "-z3 - 1"}, {"0", "1", "0"}, {"0", "0", "1"}});
}

inline PolyMatrix demo_g(const RingPtr& ring) {
    return matrix_of(
        ring, {{"z1 - z2", "0", "-z3 - 1"}, {"0", "1", "0"}, {"0", "0", "1"}});
}

inline PolyMatrix demo_residual(const RingPtr& ring) {
    return matrix_of(
        ring,
        {{"z2 + z3", "0", "-z2 - z3"},
         {"-z1*z2 - z1*z3 + z2 + z3", "z2 + z3", "z1*z2 + z1*z3"},
         {"z1", "-z1 + z2 + z3", "-2*z1 + z2 + z3 + 1"}});
}

// demo_matrix with z1 replaced by z2 (entries free of z1, rank 2).
inline PolyMatrix demo_substituted(const RingPtr& ring) {
    return matrix_of(ring,
                     {{"-z2*z3 - z2", "-z3^2 - z3", "-z3^2 + z2*z3 - 2*z3 + z2 - 1"},
                      {"-z2^2 - z2*z3 + z2 + z3", "z2 + z3", "z2^2 + z2*z3"},
                      {"z2", "z3", "-z2 + z3 + 1"}});
}

// Nonzero integer in {-3,...,3}.
inline Rational random_coeff(Rng& rng) {
    static const int values[] = {-3, -2, -1, 1, 2, 3};
    std::uniform_int_distribution<std::size_t> dist(0, 5);
    return Rational(values[dist(rng)]);
}

constexpr std::size_t kNoExclude = static_cast<std::size_t>(-1);

// Monomial of total degree <= max_deg, avoiding the excluded variable.
inline Monomial random_monomial(Rng& rng, const RingPtr& ring,
                                std::size_t max_deg,
                                std::size_t exclude = kNoExclude) {
    Monomial mono = mono_one(ring->nvars());
    std::uniform_int_distribution<std::size_t> deg_dist(0, max_deg);
    std::uniform_int_distribution<std::size_t> var_dist(0, ring->nvars() - 1);
    const std::size_t total = deg_dist(rng);
    for (std::size_t t = 0; t < total; ++t) {
        std::size_t v = var_dist(rng);
        while (v == exclude) v = var_dist(rng);
        ++mono[v];
    }
    return mono;
}

inline Poly random_poly(Rng& rng, const RingPtr& ring, std::size_t max_deg,
                        std::size_t max_terms,
                        std::size_t exclude = kNoExclude) {
    std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
    Poly acc = Poly::zero(ring);
    const std::size_t k = nterms(rng);
    for (std::size_t t = 0; t < k; ++t)
        acc += Poly::monomial_term(ring, random_monomial(rng, ring, max_deg, exclude),
                                   random_coeff(rng));
    return acc;
}

inline Poly random_nonzero_poly(Rng& rng, const RingPtr& ring,
                                std::size_t max_deg, std::size_t max_terms,
                                std::size_t exclude = kNoExclude) {
    for (;;) {
        Poly q = random_poly(rng, ring, max_deg, max_terms, exclude);
        if (!q.is_zero()) return q;
    }
}

inline PolyMatrix random_matrix(Rng& rng, const RingPtr& ring, std::size_t rows,
                                std::size_t cols, std::size_t max_deg,
                                std::size_t max_terms,
                                std::size_t exclude = kNoExclude) {
    PolyMatrix m(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = random_poly(rng, ring, max_deg, max_terms, exclude);
    return m;
}

// Product of elementary transvections I + c * mono * E_ij; determinant 1 by
// construction. With exclude set, every entry stays free of that variable.
inline PolyMatrix random_unimodular(Rng& rng, const RingPtr& ring,
                                    std::size_t n, std::size_t ops,
                                    std::size_t max_deg = 1,
                                    std::size_t exclude = kNoExclude) {
    PolyMatrix m = PolyMatrix::identity(ring, n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (std::size_t t = 0; t < ops; ++t) {
        std::size_t i = idx(rng);
        std::size_t j = idx(rng);
        while (j == i) j = idx(rng);
        PolyMatrix e = PolyMatrix::identity(ring, n);
        e.at(i, j) = Poly::monomial_term(
            ring, random_monomial(rng, ring, max_deg, exclude), random_coeff(rng));
        m = m * e;
    }
    return m;
}

}  // namespace testsup
