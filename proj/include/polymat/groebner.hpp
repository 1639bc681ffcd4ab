#pragma once

#include <utility>
#include <vector>

#include "polymat/poly.hpp"

namespace polymat {

// Reduced Groebner basis of an ideal, under a chosen monomial order.
// Elements live in a working ring with the same variables as the input ring
// but carrying `order`; they are monic, inter-reduced, and sorted in strictly
// descending leading-monomial order, so the representation is unique for the
// ideal and order.
class GroebnerBasis {
public:
    GroebnerBasis() = default;  // empty basis of the zero ideal
    GroebnerBasis(RingPtr input_ring, RingPtr working_ring,
                  std::vector<Poly> elements);

    const RingPtr& input_ring() const { return input_ring_; }
    const RingPtr& working_ring() const { return working_ring_; }
    const MonomialOrder& order() const { return working_ring_->order(); }
    const std::vector<Poly>& elements() const { return elements_; }

    bool is_empty() const { return elements_.empty(); }
    bool is_unit() const;  // basis == {1}

    // Fully reduced normal form of `p` modulo the basis, returned in the ring
    // of `p` (which must share the input ring's variables).
    Poly normal_form(const Poly& p) const;
    bool contains(const Poly& p) const;  // ideal membership

private:
    RingPtr input_ring_;
    RingPtr working_ring_;
    std::vector<Poly> elements_;
};

// Reduced Groebner basis of <gens>. The empty list (or all-zero list) yields
// the empty basis of the zero ideal. When `order` equals the generators'
// ring order the elements stay in that ring.
GroebnerBasis reduced_gb(const std::vector<Poly>& gens,
                         const MonomialOrder& order);
GroebnerBasis reduced_gb(const std::vector<Poly>& gens);  // ring's own order

// Whether <gens> is the whole ring, together with the certifying basis.
std::pair<bool, GroebnerBasis> is_unit_ideal(const std::vector<Poly>& gens);

// Certificate that `target` lies in <generators>: target == sum of
// cofactors[i] * generators[i], exactly.
struct LiftCertificate {
    Poly target;
    std::vector<Poly> generators;
    std::vector<Poly> cofactors;

    bool check() const;
};

// Expresses `target` as a combination of `gens`; throws DomainError when
// `target` is not in the ideal. Deterministic: cofactors come from tracked
// representations through Buchberger completion plus the division quotients.
LiftCertificate lift(const Poly& target, const std::vector<Poly>& gens);

class PolyMatrix;

enum class SyzygySide { left, right };

// Generating set of the left (row vectors p with p*M == 0) or right (column
// vectors q with M*q == 0) syzygy module of a polynomial matrix.
struct SyzygyBasis {
    std::size_t rows = 0;
    std::size_t cols = 0;
    SyzygySide side = SyzygySide::left;
    // Left: each generator has `rows` entries. Right: `cols` entries.
    std::vector<std::vector<Poly>> generators;
};

SyzygyBasis syzygy(const PolyMatrix& m, SyzygySide side);

}  // namespace polymat
