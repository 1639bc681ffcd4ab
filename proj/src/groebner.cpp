#include "polymat/groebner.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

#include "polymat/matrix.hpp"

namespace polymat {
namespace {

// One term of a free-module element: coefficient * x^mono * e_pos.
struct ModTerm {
    std::size_t pos;
    Monomial mono;
    Rational coeff;
};

// Position-over-term order: a lower component index dominates; ties are
// broken by the ring's monomial order.
int mt_cmp(const PolyRing& ring, std::size_t pa, const Monomial& ma,
           std::size_t pb, const Monomial& mb) {
    if (pa != pb) return pa < pb ? 1 : -1;
    return ring.compare(ma, mb);
}

// Module element with terms sorted strictly descending under mt_cmp.
struct ModVec {
    std::vector<ModTerm> terms;

    bool is_zero() const { return terms.empty(); }
    const ModTerm& lead() const { return terms.front(); }
};

ModVec mv_shift_scale(const ModVec& v, const Monomial& shift, const Rational& c) {
    ModVec r;
    if (c == 0) return r;
    r.terms.reserve(v.terms.size());
    for (const auto& t : v.terms)
        r.terms.push_back({t.pos, mono_mul(t.mono, shift), t.coeff * c});
    return r;  // shifting by a fixed monomial preserves the term order
}

// a + c * x^shift * b
ModVec mv_axpy(const PolyRing& ring, const ModVec& a, const Rational& c,
               const Monomial& shift, const ModVec& b) {
    ModVec r;
    if (c == 0) return a;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    const auto shifted = [&](std::size_t k) {
        return ModTerm{b.terms[k].pos, mono_mul(b.terms[k].mono, shift),
                       b.terms[k].coeff * c};
    };
    while (i < a.terms.size() && j < b.terms.size()) {
        ModTerm bt = shifted(j);
        const int cmp =
            mt_cmp(ring, a.terms[i].pos, a.terms[i].mono, bt.pos, bt.mono);
        if (cmp > 0) {
            r.terms.push_back(a.terms[i++]);
        } else if (cmp < 0) {
            r.terms.push_back(std::move(bt));
            ++j;
        } else {
            Rational s = a.terms[i].coeff + bt.coeff;
            if (s != 0) r.terms.push_back({bt.pos, std::move(bt.mono), std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < a.terms.size(); ++i) r.terms.push_back(a.terms[i]);
    for (; j < b.terms.size(); ++j) r.terms.push_back(shifted(j));
    return r;
}

void mv_make_monic(ModVec& v, std::vector<Poly>* rep) {
    if (v.is_zero()) return;
    const Rational lc = v.lead().coeff;
    if (lc == 1) return;
    const Rational inv = 1 / lc;
    for (auto& t : v.terms) t.coeff *= inv;
    if (rep)
        for (auto& p : *rep) p = p * inv;
}

Poly mv_component(const RingPtr& ring, const ModVec& v, std::size_t pos) {
    std::vector<Term> terms;
    for (const auto& t : v.terms)
        if (t.pos == pos) terms.push_back({t.mono, t.coeff});
    return Poly::from_terms(ring, std::move(terms));
}

ModVec mv_from_components(const RingPtr& ring, const std::vector<Poly>& comps,
                          std::size_t ncomp) {
    ModVec v;
    for (std::size_t pos = 0; pos < comps.size() && pos < ncomp; ++pos)
        for (const auto& t : comps[pos].terms())
            v.terms.push_back({pos, t.mono, t.coeff});
    std::sort(v.terms.begin(), v.terms.end(),
              [&](const ModTerm& a, const ModTerm& b) {
                  return mt_cmp(*ring, a.pos, a.mono, b.pos, b.mono) > 0;
              });
    return v;
}

// Buchberger completion over a free module with the POT order, with optional
// tracking of each basis element as a combination of the raw inputs.
class Engine {
public:
    Engine(RingPtr ring, std::size_t ncomp, bool track)
        : ring_(std::move(ring)), ncomp_(ncomp), track_(track) {}

    void add_input(ModVec v) { inputs_.push_back(std::move(v)); }

    void run() {
        for (std::size_t i = 0; i < inputs_.size(); ++i) {
            std::vector<Poly> rep;
            if (track_) {
                rep.assign(inputs_.size(), Poly::zero(ring_));
                rep[i] = Poly::one(ring_);
            }
            ModVec v = reduce_full(inputs_[i], track_ ? &rep : nullptr);
            insert(std::move(v), std::move(rep));
        }
        while (!pairs_.empty()) {
            const Pair pr = pop_pair();
            auto [s, rep] = spoly(pr);
            s = reduce_full(std::move(s), track_ ? &rep : nullptr);
            insert(std::move(s), std::move(rep));
        }
        finalize();
    }

    const std::vector<ModVec>& basis() const { return g_; }
    const std::vector<std::vector<Poly>>& reps() const { return reps_; }
    const RingPtr& ring() const { return ring_; }

    // Full normal form of v against the (finalized) basis; optionally records
    // the division quotients per basis element.
    ModVec normal_form(ModVec v, std::vector<Poly>* quotients) const {
        if (quotients) quotients->assign(g_.size(), Poly::zero(ring_));
        ModVec rem;
        while (!v.is_zero()) {
            const ModTerm& lt = v.lead();
            bool reduced = false;
            for (std::size_t k = 0; k < g_.size(); ++k) {
                const ModTerm& gl = g_[k].lead();
                if (gl.pos != lt.pos || !mono_divides(gl.mono, lt.mono)) continue;
                const Monomial shift = mono_div(lt.mono, gl.mono);
                const Rational c = lt.coeff / gl.coeff;
                if (quotients)
                    (*quotients)[k] += Poly::monomial_term(ring_, shift, c);
                v = mv_axpy(*ring_, v, -c, shift, g_[k]);
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.terms.push_back(lt);
                v.terms.erase(v.terms.begin());
            }
        }
        return rem;
    }

private:
    struct Pair {
        std::size_t i, j;
        std::size_t pos;
        Monomial lcm;
    };

    static bool lead_divides(const ModTerm& a, const ModTerm& b) {
        return a.pos == b.pos && mono_divides(a.mono, b.mono);
    }

    // Smaller under the module order on (pos, lcm); ties by indices.
    bool pair_less(const Pair& a, const Pair& b) const {
        const int c = mt_cmp(*ring_, a.pos, a.lcm, b.pos, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    Pair pop_pair() {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k)
            if (pair_less(pairs_[k], pairs_[best])) best = k;
        Pair pr = pairs_[best];
        pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
        return pr;
    }

    std::pair<ModVec, std::vector<Poly>> spoly(const Pair& pr) {
        const ModVec& f = g_[pr.i];
        const ModVec& h = g_[pr.j];
        const Monomial sf = mono_div(pr.lcm, f.lead().mono);
        const Monomial sh = mono_div(pr.lcm, h.lead().mono);
        const Rational cf = 1 / f.lead().coeff;
        const Rational ch = 1 / h.lead().coeff;
        ModVec s = mv_axpy(*ring_, mv_shift_scale(f, sf, cf), -ch, sh, h);
        std::vector<Poly> rep;
        if (track_) {
            rep.assign(inputs_.size(), Poly::zero(ring_));
            for (std::size_t t = 0; t < inputs_.size(); ++t) {
                rep[t] = reps_[pr.i][t].mul_term(sf, cf) -
                         reps_[pr.j][t].mul_term(sh, ch);
            }
        }
        return {std::move(s), std::move(rep)};
    }

    ModVec reduce_full(ModVec v, std::vector<Poly>* rep) const {
        ModVec rem;
        while (!v.is_zero()) {
            const ModTerm lt = v.lead();
            bool reduced = false;
            for (std::size_t k = 0; k < g_.size(); ++k) {
                const ModTerm& gl = g_[k].lead();
                if (!lead_divides(gl, lt)) continue;
                const Monomial shift = mono_div(lt.mono, gl.mono);
                const Rational c = lt.coeff / gl.coeff;
                v = mv_axpy(*ring_, v, -c, shift, g_[k]);
                if (rep)
                    for (std::size_t t = 0; t < rep->size(); ++t)
                        (*rep)[t] -= reps_[k][t].mul_term(shift, c);
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.terms.push_back(lt);
                v.terms.erase(v.terms.begin());
            }
        }
        return rem;
    }

    void insert(ModVec v, std::vector<Poly> rep) {
        if (v.is_zero()) return;
        mv_make_monic(v, track_ ? &rep : nullptr);
        const std::size_t t = g_.size();
        g_.push_back(std::move(v));
        if (track_) reps_.push_back(std::move(rep));
        update_pairs(t);
    }

    void update_pairs(std::size_t t) {
        const ModTerm& lt = g_[t].lead();
        std::vector<Pair> cand;
        for (std::size_t i = 0; i < t; ++i) {
            const ModTerm& li = g_[i].lead();
            if (li.pos != lt.pos) continue;
            cand.push_back({i, t, lt.pos, mono_lcm(li.mono, lt.mono)});
        }
        // Drop pairs whose lcm is a proper multiple of another new pair's lcm.
        std::vector<char> keep(cand.size(), 1);
        for (std::size_t a = 0; a < cand.size(); ++a) {
            for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
                if (a == b) continue;
                if (cand[b].lcm != cand[a].lcm &&
                    mono_divides(cand[b].lcm, cand[a].lcm))
                    keep[a] = 0;
            }
        }
        // Among equal lcms keep the first pair only; an equal-lcm group with a
        // coprime member (ideal case) vanishes entirely.
        for (std::size_t a = 0; a < cand.size(); ++a) {
            if (!keep[a]) continue;
            bool group_coprime =
                ncomp_ == 1 &&
                mono_coprime(g_[cand[a].i].lead().mono, lt.mono);
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
                if (!keep[b] || cand[b].lcm != cand[a].lcm) continue;
                keep[b] = 0;
                if (ncomp_ == 1 &&
                    mono_coprime(g_[cand[b].i].lead().mono, lt.mono))
                    group_coprime = true;
            }
            if (group_coprime) keep[a] = 0;
        }
        // Coprime leading monomials: the S-element reduces to zero (ideals only).
        if (ncomp_ == 1)
            for (std::size_t a = 0; a < cand.size(); ++a)
                if (keep[a] &&
                    mono_coprime(g_[cand[a].i].lead().mono, lt.mono))
                    keep[a] = 0;
        // Chain criterion on the queued pairs.
        std::vector<Pair> remaining;
        remaining.reserve(pairs_.size());
        for (const auto& old : pairs_) {
            bool drop = false;
            if (old.pos == lt.pos && mono_divides(lt.mono, old.lcm)) {
                const Monomial l_it =
                    mono_lcm(g_[old.i].lead().mono, lt.mono);
                const Monomial l_jt =
                    mono_lcm(g_[old.j].lead().mono, lt.mono);
                if (l_it != old.lcm && l_jt != old.lcm) drop = true;
            }
            if (!drop) remaining.push_back(old);
        }
        pairs_ = std::move(remaining);
        for (std::size_t a = 0; a < cand.size(); ++a)
            if (keep[a]) pairs_.push_back(cand[a]);
    }

    void finalize() {
        // Minimalize: keep only elements whose lead no other kept lead divides.
        std::vector<std::size_t> order(g_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            const int c = mt_cmp(*ring_, g_[a].lead().pos, g_[a].lead().mono,
                                 g_[b].lead().pos, g_[b].lead().mono);
            if (c != 0) return c < 0;
            return a < b;
        });
        std::vector<std::size_t> kept;
        for (const std::size_t idx : order) {
            bool dominated = false;
            for (const std::size_t k : kept)
                if (lead_divides(g_[k].lead(), g_[idx].lead())) {
                    dominated = true;
                    break;
                }
            if (!dominated) kept.push_back(idx);
        }
        std::vector<ModVec> mg;
        std::vector<std::vector<Poly>> mreps;
        for (const std::size_t idx : kept) {
            mg.push_back(std::move(g_[idx]));
            if (track_) mreps.push_back(std::move(reps_[idx]));
        }
        g_ = std::move(mg);
        reps_ = std::move(mreps);
        // Inter-reduce tails. Leads are pairwise non-divisible, so each
        // element's lead survives its own reduction against the others.
        for (std::size_t k = 0; k < g_.size(); ++k) {
            ModVec v = std::move(g_[k]);
            ModVec without_lead = v;
            without_lead.terms.erase(without_lead.terms.begin());
            ModTerm lead = v.lead();
            std::vector<Poly>* rep = track_ ? &reps_[k] : nullptr;
            g_[k] = ModVec{};  // exclude element k from its own reduction
            ModVec tail = reduce_tail(without_lead, rep);
            ModVec out;
            out.terms.reserve(tail.terms.size() + 1);
            out.terms.push_back(std::move(lead));
            for (auto& t : tail.terms) out.terms.push_back(std::move(t));
            g_[k] = std::move(out);
        }
        // Canonical presentation: strictly descending leads.
        std::vector<std::size_t> final_order(g_.size());
        for (std::size_t i = 0; i < final_order.size(); ++i) final_order[i] = i;
        std::sort(final_order.begin(), final_order.end(),
                  [&](std::size_t a, std::size_t b) {
                      return mt_cmp(*ring_, g_[a].lead().pos, g_[a].lead().mono,
                                    g_[b].lead().pos, g_[b].lead().mono) > 0;
                  });
        std::vector<ModVec> fg;
        std::vector<std::vector<Poly>> freps;
        for (const std::size_t idx : final_order) {
            fg.push_back(std::move(g_[idx]));
            if (track_) freps.push_back(std::move(reps_[idx]));
        }
        g_ = std::move(fg);
        reps_ = std::move(freps);
    }

    // Like reduce_full but the element being reduced is a tail whose own slot
    // in g_ has been blanked; zero basis entries are skipped.
    ModVec reduce_tail(ModVec v, std::vector<Poly>* rep) const {
        ModVec rem;
        while (!v.is_zero()) {
            const ModTerm lt = v.lead();
            bool reduced = false;
            for (std::size_t k = 0; k < g_.size(); ++k) {
                if (g_[k].is_zero()) continue;
                const ModTerm& gl = g_[k].lead();
                if (!lead_divides(gl, lt)) continue;
                const Monomial shift = mono_div(lt.mono, gl.mono);
                const Rational c = lt.coeff / gl.coeff;
                v = mv_axpy(*ring_, v, -c, shift, g_[k]);
                if (rep)
                    for (std::size_t t = 0; t < rep->size(); ++t)
                        (*rep)[t] -= reps_[k][t].mul_term(shift, c);
                reduced = true;
                break;
            }
            if (!reduced) {
                rem.terms.push_back(lt);
                v.terms.erase(v.terms.begin());
            }
        }
        return rem;
    }

    RingPtr ring_;
    std::size_t ncomp_;
    bool track_;
    std::vector<ModVec> inputs_;
    std::vector<ModVec> g_;
    std::vector<std::vector<Poly>> reps_;
    std::vector<Pair> pairs_;
};

RingPtr working_ring_for(const RingPtr& ring, const MonomialOrder& order) {
    if (ring->order() == order) return ring;
    return PolyRing::make(ring->var_names(), order);
}

void check_common_ring(const std::vector<Poly>& polys) {
    for (std::size_t i = 1; i < polys.size(); ++i)
        if (!polys[i].ring()->same_as(*polys[0].ring()))
            throw RingMismatchError("generators live in different rings");
}

}  // namespace

GroebnerBasis::GroebnerBasis(RingPtr input_ring, RingPtr working_ring,
                             std::vector<Poly> elements)
    : input_ring_(std::move(input_ring)),
      working_ring_(std::move(working_ring)),
      elements_(std::move(elements)) {}

bool GroebnerBasis::is_unit() const {
    return elements_.size() == 1 && elements_[0].is_one();
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
    if (elements_.empty() || p.is_zero()) return p;
    Poly v = convert_to_ring(p, working_ring_);
    Poly rem = Poly::zero(working_ring_);
    while (!v.is_zero()) {
        const Term lt = v.leading_term();
        bool reduced = false;
        for (const Poly& g : elements_) {
            if (!mono_divides(g.leading_monomial(), lt.mono)) continue;
            const Monomial shift = mono_div(lt.mono, g.leading_monomial());
            const Rational c = lt.coeff / g.leading_coeff();
            v -= g.mul_term(shift, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem += Poly::monomial_term(working_ring_, lt.mono, lt.coeff);
            v -= Poly::monomial_term(working_ring_, lt.mono, lt.coeff);
        }
    }
    return convert_to_ring(rem, p.ring());
}

bool GroebnerBasis::contains(const Poly& p) const {
    return normal_form(p).is_zero();
}

GroebnerBasis reduced_gb(const std::vector<Poly>& gens,
                         const MonomialOrder& order) {
    if (gens.empty()) return GroebnerBasis(nullptr, nullptr, {});
    check_common_ring(gens);
    const RingPtr input_ring = gens[0].ring();
    const RingPtr wring = working_ring_for(input_ring, order);
    Engine engine(wring, 1, false);
    for (const auto& g : gens) {
        const Poly cg = convert_to_ring(g, wring);
        if (!cg.is_zero()) engine.add_input(mv_from_components(wring, {cg}, 1));
    }
    engine.run();
    std::vector<Poly> elements;
    elements.reserve(engine.basis().size());
    for (const auto& v : engine.basis())
        elements.push_back(mv_component(wring, v, 0));
    return GroebnerBasis(input_ring, wring, std::move(elements));
}

GroebnerBasis reduced_gb(const std::vector<Poly>& gens) {
    if (gens.empty()) return GroebnerBasis(nullptr, nullptr, {});
    return reduced_gb(gens, gens[0].ring()->order());
}

std::pair<bool, GroebnerBasis> is_unit_ideal(const std::vector<Poly>& gens) {
    GroebnerBasis gb = reduced_gb(gens);
    const bool unit = gb.is_unit();
    return {unit, std::move(gb)};
}

bool LiftCertificate::check() const {
    if (generators.size() != cofactors.size()) return false;
    Poly acc = Poly::zero(target.ring());
    for (std::size_t i = 0; i < generators.size(); ++i)
        acc += cofactors[i] * generators[i];
    return acc == target;
}

LiftCertificate lift(const Poly& target, const std::vector<Poly>& gens) {
    if (gens.empty())
        throw DomainError("cannot lift against an empty generator list");
    check_common_ring(gens);
    if (!target.ring()->same_as(*gens[0].ring()))
        throw RingMismatchError("lift target lives in a different ring");
    const RingPtr ring = gens[0].ring();
    Engine engine(ring, 1, true);
    std::vector<std::size_t> live;  // original index per engine input
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        engine.add_input(mv_from_components(ring, {gens[i]}, 1));
        live.push_back(i);
    }
    if (live.empty()) {
        if (target.is_zero()) {
            LiftCertificate cert{target, gens,
                                 std::vector<Poly>(gens.size(), Poly::zero(ring))};
            return cert;
        }
        throw DomainError("target is not in the zero ideal");
    }
    engine.run();
    std::vector<Poly> quotients;
    const ModVec rem =
        engine.normal_form(mv_from_components(ring, {target}, 1), &quotients);
    if (!rem.is_zero()) {
        throw DomainError("lift target is not in the ideal; normal form: " +
                          mv_component(ring, rem, 0).str());
    }
    std::vector<Poly> cofactors(gens.size(), Poly::zero(ring));
    const auto& reps = engine.reps();
    for (std::size_t k = 0; k < quotients.size(); ++k) {
        if (quotients[k].is_zero()) continue;
        for (std::size_t t = 0; t < live.size(); ++t)
            cofactors[live[t]] += quotients[k] * reps[k][t];
    }
    LiftCertificate cert{target, gens, std::move(cofactors)};
    if (!cert.check())
        throw InternalError("lift certificate failed its own verification");
    return cert;
}

SyzygyBasis syzygy(const PolyMatrix& m, SyzygySide side) {
    if (side == SyzygySide::right) {
        SyzygyBasis basis = syzygy(m.transpose(), SyzygySide::left);
        basis.side = SyzygySide::right;
        basis.rows = m.rows();
        basis.cols = m.cols();
        return basis;
    }
    const RingPtr ring = m.ring();
    const std::size_t l = m.rows(), w = m.cols();
    const std::size_t ncomp = w + l;
    Engine engine(ring, ncomp, false);
    for (std::size_t i = 0; i < l; ++i) {
        std::vector<Poly> comps(ncomp, Poly::zero(ring));
        for (std::size_t j = 0; j < w; ++j) comps[j] = m.at(i, j);
        comps[w + i] = Poly::one(ring);
        engine.add_input(mv_from_components(ring, comps, ncomp));
    }
    engine.run();
    SyzygyBasis out;
    out.rows = l;
    out.cols = w;
    out.side = SyzygySide::left;
    for (const auto& v : engine.basis()) {
        if (v.lead().pos < w) continue;  // leading term still in the matrix block
        std::vector<Poly> gen(l, Poly::zero(ring));
        for (std::size_t i = 0; i < l; ++i) gen[i] = mv_component(ring, v, w + i);
        // The matrix block must vanish entirely, not just the lead.
        bool pure = true;
        for (const auto& t : v.terms)
            if (t.pos < w) pure = false;
        if (!pure)
            throw InternalError("syzygy extraction saw a mixed basis element");
        for (std::size_t j = 0; j < w; ++j) {
            Poly dot = Poly::zero(ring);
            for (std::size_t i = 0; i < l; ++i) dot += gen[i] * m.at(i, j);
            if (!dot.is_zero())
                throw InternalError("syzygy generator does not annihilate");
        }
        out.generators.push_back(std::move(gen));
    }
    return out;
}

}  // namespace polymat
