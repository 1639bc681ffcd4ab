#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "polymat/errors.hpp"

namespace polymat {

// Exponent tuple, one entry per ring variable.
using Monomial = std::vector<std::uint32_t>;

Monomial mono_one(std::size_t nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b);
// a / b; requires b | a.
Monomial mono_div(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
bool mono_is_one(const Monomial& a);
std::uint64_t mono_total_degree(const Monomial& a);

enum class OrderKind { lex, grlex, grevlex };

OrderKind order_kind_from_string(const std::string& s);
std::string to_string(OrderKind k);

// A monomial order: one of the three standard kinds plus a variable priority.
// `priority` is a permutation of {0..n-1}; priority[0] is the most significant
// variable. An empty priority means the identity (declaration order).
struct MonomialOrder {
    OrderKind kind = OrderKind::lex;
    std::vector<std::size_t> priority;

    bool operator==(const MonomialOrder& other) const;
};

// Immutable ring descriptor k[z] with a fixed variable list and monomial
// order. Shared by every polynomial built over it.
class PolyRing {
public:
    static std::shared_ptr<const PolyRing> make(std::vector<std::string> vars,
                                                MonomialOrder order = {});

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& var_names() const { return vars_; }
    const MonomialOrder& order() const { return order_; }

    // Index of a variable name; npos when absent.
    std::size_t var_index(const std::string& name) const;

    // Three-way comparison of monomials under this ring's order:
    // negative, zero or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;

    bool same_as(const PolyRing& other) const;

private:
    PolyRing(std::vector<std::string> vars, MonomialOrder order);

    std::vector<std::string> vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

}  // namespace polymat
