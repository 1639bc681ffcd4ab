#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polymat/ring.hpp"

namespace polymat {

using Rational = mpq_class;

std::string rational_to_string(const Rational& q);

struct Term {
    Monomial mono;
    Rational coeff;  // never zero in a stored polynomial

    bool operator==(const Term& other) const {
        return mono == other.mono && coeff == other.coeff;
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept sorted in strictly descending monomial order, which makes
// the representation (and the printed form) canonical for the ring.
class Poly {
public:
    Poly() = default;  // invalid until assigned; use the factories below
    explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}  // zero

    static Poly zero(RingPtr ring);
    static Poly one(RingPtr ring);
    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, std::size_t index);
    static Poly monomial_term(RingPtr ring, Monomial mono, Rational coeff);
    // Sorts, merges duplicates and drops zeros.
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    // The constant value; requires is_constant().
    Rational constant_value() const;

    const Term& leading_term() const;  // requires nonzero
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;
    std::uint64_t total_degree() const;  // 0 for the zero polynomial
    std::uint32_t degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;

    Poly operator-() const;
    Poly operator+(const Poly& other) const;
    Poly operator-(const Poly& other) const;
    Poly operator*(const Poly& other) const;
    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly operator*(const Rational& c) const;
    Poly mul_term(const Monomial& mono, const Rational& coeff) const;
    Poly pow(std::uint32_t e) const;

    bool operator==(const Poly& other) const;
    bool operator!=(const Poly& other) const { return !(*this == other); }

    // Scaled so the leading coefficient is 1 (zero stays zero).
    Poly monic() const;

    // Replaces variable `var` by `value`, which must not involve `var`.
    Poly substitute(std::size_t var, const Poly& value) const;

    // Quotient of an exact division; throws DivisionError when there is a
    // remainder and DomainError when dividing by zero.
    Poly exact_divide(const Poly& divisor) const;
    std::optional<Poly> try_exact_divide(const Poly& divisor) const;

    // Canonical text form; parse(str(p)) == p.
    std::string str() const;

private:
    void check_same_ring(const Poly& other) const;

    RingPtr ring_;
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Parses the grammar: + - * ^ ( ), integer and a/b rational literals,
// identifiers matching [A-Za-z][A-Za-z0-9]*. '*' is mandatory between
// factors; '^' takes a positive integer; whitespace is ignored.
Poly parse_poly(const RingPtr& ring, const std::string& text);

// Re-expresses `p` in `ring`, which must have the same variable names
// (the monomial order may differ; terms are re-sorted).
Poly convert_to_ring(const Poly& p, const RingPtr& ring);

// GCD of two polynomials, normalized monic; gcd(0, 0) == 0.
Poly gcd(const Poly& a, const Poly& b);
// Monic LCM; lcm(p, 0) == 0.
Poly lcm(const Poly& a, const Poly& b);
// Folds gcd over a list; the empty list has GCD 0.
Poly gcd_many(const std::vector<Poly>& polys);

}  // namespace polymat
