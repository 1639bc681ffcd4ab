#include <algorithm>
#include <vector>

#include "polymat/groebner.hpp"
#include "polymat/poly.hpp"

namespace polymat {
namespace {

// Name reserved for the elimination variable; the parser can never produce
// it, so it cannot collide with a user variable.
const char* kEliminationVar = "$t";

Poly embed_with_t(const RingPtr& tring, const Poly& p, bool times_t,
                  bool times_one_minus_t) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Monomial m(t.mono.size() + 1, 0);
        std::copy(t.mono.begin(), t.mono.end(), m.begin() + 1);
        terms.push_back({std::move(m), t.coeff});
    }
    Poly base = Poly::from_terms(tring, std::move(terms));
    if (times_t) base *= Poly::variable(tring, 0);
    if (times_one_minus_t)
        base *= Poly::one(tring) - Poly::variable(tring, 0);
    return base;
}

Poly project_drop_t(const RingPtr& ring, const Poly& p) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        if (t.mono[0] != 0)
            throw InternalError("projection of a polynomial involving the "
                                "elimination variable");
        Monomial m(t.mono.begin() + 1, t.mono.end());
        terms.push_back({std::move(m), t.coeff});
    }
    return Poly::from_terms(ring, std::move(terms));
}

// Generator of (a) ∩ (b) via lex elimination of t from <t*a, (1-t)*b>.
Poly lcm_by_elimination(const Poly& a, const Poly& b) {
    const RingPtr& ring = a.ring();
    std::vector<std::string> tvars;
    tvars.reserve(ring->nvars() + 1);
    tvars.push_back(kEliminationVar);
    for (const auto& v : ring->var_names()) tvars.push_back(v);
    const RingPtr tring = PolyRing::make(std::move(tvars), {OrderKind::lex, {}});
    const Poly g1 = embed_with_t(tring, a, true, false);
    const Poly g2 = embed_with_t(tring, b, false, true);
    const GroebnerBasis gb = reduced_gb({g1, g2});
    std::vector<Poly> free_of_t;
    for (const auto& e : gb.elements())
        if (!e.involves(0)) free_of_t.push_back(e);
    if (free_of_t.size() != 1)
        throw InternalError("elimination ideal of an LCM computation is not "
                            "principal as presented");
    return project_drop_t(ring, free_of_t[0]).monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw RingMismatchError("gcd operands live in different rings");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one(a.ring());
    // Trial division settles the common nested case cheaply.
    const Poly& big = a.total_degree() >= b.total_degree() ? a : b;
    const Poly& small = a.total_degree() >= b.total_degree() ? b : a;
    if (big.try_exact_divide(small)) return small.monic();
    const Poly l = lcm_by_elimination(a, b);
    return (a * b).exact_divide(l).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (!a.ring()->same_as(*b.ring()))
        throw RingMismatchError("lcm operands live in different rings");
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.ring());
    return (a * b).exact_divide(gcd(a, b)).monic();
}

Poly gcd_many(const std::vector<Poly>& polys) {
    if (polys.empty()) throw DomainError("GCD of an empty list is undefined");
    std::vector<const Poly*> sorted;
    sorted.reserve(polys.size());
    for (const auto& p : polys) sorted.push_back(&p);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const Poly* x, const Poly* y) {
                         return x->total_degree() < y->total_degree();
                     });
    Poly acc = Poly::zero(polys[0].ring());
    for (const Poly* p : sorted) {
        acc = gcd(acc, *p);
        if (!acc.is_zero() && acc.is_constant()) return Poly::one(acc.ring());
    }
    return acc;
}

}  // namespace polymat
