#include "polymat/poly.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace polymat {

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Poly Poly::zero(RingPtr ring) { return Poly(std::move(ring)); }

Poly Poly::one(RingPtr ring) { return constant(std::move(ring), 1); }

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_.push_back({mono_one(p.ring_->nvars()), c});
    return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
    if (index >= ring->nvars()) throw DomainError("variable index out of range");
    Poly p(std::move(ring));
    Monomial m = mono_one(p.ring_->nvars());
    m[index] = 1;
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
}

Poly Poly::monomial_term(RingPtr ring, Monomial mono, Rational coeff) {
    if (mono.size() != ring->nvars())
        throw DomainError("monomial arity does not match the ring");
    Poly p(std::move(ring));
    if (coeff != 0) p.terms_.push_back({std::move(mono), std::move(coeff)});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    const PolyRing& r = *ring;
    std::sort(terms.begin(), terms.end(), [&r](const Term& a, const Term& b) {
        return r.compare(a.mono, b.mono) > 0;
    });
    Poly p(std::move(ring));
    for (auto& t : terms) {
        if (t.mono.size() != r.nvars())
            throw DomainError("monomial arity does not match the ring");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_is_one(terms_[0].mono));
}

bool Poly::is_one() const {
    return terms_.size() == 1 && mono_is_one(terms_[0].mono) &&
           terms_[0].coeff == 1;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw DomainError("polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw DomainError("the zero polynomial has no leading term");
    return terms_.front();
}

const Monomial& Poly::leading_monomial() const { return leading_term().mono; }

const Rational& Poly::leading_coeff() const { return leading_term().coeff; }

std::uint64_t Poly::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, mono_total_degree(t.mono));
    return d;
}

std::uint32_t Poly::degree_in(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[var]);
    return d;
}

bool Poly::involves(std::size_t var) const {
    for (const auto& t : terms_)
        if (t.mono[var] != 0) return true;
    return false;
}

void Poly::check_same_ring(const Poly& other) const {
    if (!ring_ || !other.ring_)
        throw RingMismatchError("operation on a default-constructed polynomial");
    if (ring_ == other.ring_) return;
    if (!ring_->same_as(*other.ring_))
        throw RingMismatchError("operands live in different rings");
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Poly Poly::operator+(const Poly& other) const {
    check_same_ring(other);
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + other.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < other.terms_.size()) {
        const int c = ring_->compare(terms_[i].mono, other.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(other.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + other.terms_[j].coeff;
            if (s != 0) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
    return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
    check_same_ring(other);
    const PolyRing& r = *ring_;
    const auto desc = [&r](const Monomial& a, const Monomial& b) {
        return r.compare(a, b) > 0;
    };
    std::map<Monomial, Rational, decltype(desc)> acc(desc);
    for (const auto& ta : terms_) {
        for (const auto& tb : other.terms_) {
            Monomial m = mono_mul(ta.mono, tb.mono);
            acc[std::move(m)] += ta.coeff * tb.coeff;
        }
    }
    Poly out(ring_);
    for (auto& [mono, coeff] : acc)
        if (coeff != 0) out.terms_.push_back({mono, std::move(coeff)});
    return out;
}

Poly& Poly::operator+=(const Poly& other) { return *this = *this + other; }
Poly& Poly::operator-=(const Poly& other) { return *this = *this - other; }
Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly::zero(ring_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

Poly Poly::mul_term(const Monomial& mono, const Rational& coeff) const {
    if (coeff == 0) return Poly::zero(ring_);
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({mono_mul(t.mono, mono), t.coeff * coeff});
    return r;  // shifting by a fixed monomial preserves the term order
}

Poly Poly::pow(std::uint32_t e) const {
    Poly acc = Poly::one(ring_);
    Poly base(*this);
    while (e > 0) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return acc;
}

bool Poly::operator==(const Poly& other) const {
    check_same_ring(other);
    return terms_ == other.terms_;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coeff();
    return *this * inv;
}

Poly Poly::substitute(std::size_t var, const Poly& value) const {
    check_same_ring(value);
    if (var >= ring_->nvars()) throw DomainError("variable index out of range");
    if (value.involves(var))
        throw DomainError("substitution value involves the substituted variable");
    if (!involves(var)) return *this;
    // Split into power layers of `var`, then recombine by Horner steps.
    std::map<std::uint32_t, Poly> layers;
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        const std::uint32_t e = m[var];
        m[var] = 0;
        auto it = layers.find(e);
        if (it == layers.end())
            it = layers.emplace(e, Poly::zero(ring_)).first;
        it->second += Poly::monomial_term(ring_, std::move(m), t.coeff);
    }
    Poly acc = Poly::zero(ring_);
    std::uint32_t prev = 0;
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        if (it != layers.rbegin()) acc *= value.pow(prev - it->first);
        acc += it->second;
        prev = it->first;
    }
    if (prev > 0) acc *= value.pow(prev);
    return acc;
}

std::optional<Poly> Poly::try_exact_divide(const Poly& divisor) const {
    check_same_ring(divisor);
    if (divisor.is_zero())
        throw DivisionError("division by the zero polynomial");
    Poly rem(*this);
    Poly quot(ring_);
    const Term& dl = divisor.leading_term();
    while (!rem.is_zero()) {
        const Term& rl = rem.leading_term();
        if (!mono_divides(dl.mono, rl.mono)) return std::nullopt;
        const Monomial q = mono_div(rl.mono, dl.mono);
        const Rational c = rl.coeff / dl.coeff;
        quot.terms_.push_back({q, c});
        rem -= divisor.mul_term(q, c);
    }
    // Quotient terms were appended in strictly descending order.
    return quot;
}

Poly Poly::exact_divide(const Poly& divisor) const {
    auto q = try_exact_divide(divisor);
    if (!q)
        throw DivisionError("exact division failed: " + str() +
                            " is not a multiple of " + divisor.str());
    return *q;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        const bool negative = t.coeff < 0;
        Rational mag = negative ? Rational(-t.coeff) : t.coeff;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        std::string vars;
        for (std::size_t i = 0; i < t.mono.size(); ++i) {
            if (t.mono[i] == 0) continue;
            if (!vars.empty()) vars += '*';
            vars += ring_->var_names()[i];
            if (t.mono[i] > 1) vars += '^' + std::to_string(t.mono[i]);
        }
        if (vars.empty()) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << vars;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

Poly convert_to_ring(const Poly& p, const RingPtr& ring) {
    if (p.ring() == ring) return p;
    if (p.ring()->var_names() != ring->var_names())
        throw RingMismatchError("cannot convert between different variable sets");
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    return Poly::from_terms(ring, std::move(terms));
}

}  // namespace polymat
