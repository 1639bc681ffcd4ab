#include "polymat/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace polymat {

Monomial mono_one(std::size_t nvars) { return Monomial(nvars, 0); }

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b[i] > a[i]) throw DomainError("monomial division is not exact");
        r[i] = a[i] - b[i];
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) return false;
    return true;
}

bool mono_is_one(const Monomial& a) {
    return std::all_of(a.begin(), a.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t mono_total_degree(const Monomial& a) {
    std::uint64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

OrderKind order_kind_from_string(const std::string& s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grlex") return OrderKind::grlex;
    if (s == "grevlex") return OrderKind::grevlex;
    throw DomainError("unknown monomial order '" + s +
                      "' (expected lex, grlex or grevlex)");
}

std::string to_string(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::grlex: return "grlex";
        case OrderKind::grevlex: return "grevlex";
    }
    return "lex";
}

namespace {

bool is_identity_permutation(const std::vector<std::size_t>& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

}  // namespace

bool MonomialOrder::operator==(const MonomialOrder& other) const {
    if (kind != other.kind) return false;
    const bool a_id = priority.empty() || is_identity_permutation(priority);
    const bool b_id = other.priority.empty() || is_identity_permutation(other.priority);
    if (a_id && b_id) return true;
    return priority == other.priority;
}

PolyRing::PolyRing(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(std::move(order)) {}

std::shared_ptr<const PolyRing> PolyRing::make(std::vector<std::string> vars,
                                               MonomialOrder order) {
    if (vars.empty()) throw DomainError("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw DomainError("empty variable name");
        if (!seen.insert(v).second)
            throw DomainError("duplicate variable name '" + v + "'");
    }
    if (!order.priority.empty()) {
        if (order.priority.size() != vars.size())
            throw DomainError("order priority size does not match variable count");
        std::vector<std::size_t> sorted = order.priority;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < sorted.size(); ++i)
            if (sorted[i] != i)
                throw DomainError("order priority is not a permutation");
    }
    return std::shared_ptr<const PolyRing>(
        new PolyRing(std::move(vars), std::move(order)));
}

std::size_t PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    return static_cast<std::size_t>(-1);
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != nvars() || b.size() != nvars())
        throw DomainError("monomial arity does not match the ring");
    const auto at = [this](const Monomial& m, std::size_t i) {
        return order_.priority.empty() ? m[i] : m[order_.priority[i]];
    };
    switch (order_.kind) {
        case OrderKind::lex: {
            for (std::size_t i = 0; i < nvars(); ++i) {
                const auto x = at(a, i), y = at(b, i);
                if (x != y) return x < y ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::grlex: {
            const auto da = mono_total_degree(a), db = mono_total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = 0; i < nvars(); ++i) {
                const auto x = at(a, i), y = at(b, i);
                if (x != y) return x < y ? -1 : 1;
            }
            return 0;
        }
        case OrderKind::grevlex: {
            const auto da = mono_total_degree(a), db = mono_total_degree(b);
            if (da != db) return da < db ? -1 : 1;
            for (std::size_t i = nvars(); i-- > 0;) {
                const auto x = at(a, i), y = at(b, i);
                // Reverse-lex tie break: the smaller trailing exponent wins.
                if (x != y) return x > y ? -1 : 1;
            }
            return 0;
        }
    }
    return 0;
}

bool PolyRing::same_as(const PolyRing& other) const {
    return vars_ == other.vars_ && order_ == other.order_;
}

}  // namespace polymat
