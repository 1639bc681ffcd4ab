#include "polymat/factorizer.hpp"

#include <cstdlib>
#include <sstream>
#include <utility>

namespace polymat {
namespace {

std::string polys_to_text(const std::vector<Poly>& polys) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < polys.size(); ++i) {
        if (i) os << ", ";
        os << polys[i].str();
    }
    os << '}';
    return os.str();
}

RingPtr lex_ring_of(const RingPtr& ring) {
    const MonomialOrder lex_order{OrderKind::lex, {}};
    if (ring->order() == lex_order) return ring;
    return PolyRing::make(ring->var_names(), lex_order);
}

void check_divisor_ring(const PolyMatrix& f, const LinearDivisor& d) {
    if (!f.ring()->same_as(*d.ring()))
        throw RingMismatchError("divisor and matrix live in different rings");
}

// Leading (position, monomial) of a module vector under the POT order:
// the first nonzero component dominates.
std::pair<std::size_t, Monomial> pot_lead(const std::vector<Poly>& vec) {
    for (std::size_t i = 0; i < vec.size(); ++i)
        if (!vec[i].is_zero()) return {i, vec[i].leading_monomial()};
    throw DomainError("zero vector has no leading term");
}

PolyMatrix row_matrix(const RingPtr& ring, const std::vector<Poly>& comps) {
    PolyMatrix m(ring, 1, comps.size());
    m.set_row(0, comps);
    return m;
}

std::vector<Poly> mat_vec_row(const std::vector<Poly>& row, const PolyMatrix& m) {
    std::vector<Poly> out(m.cols(), Poly::zero(m.ring()));
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            out[j] += row[i] * m.at(i, j);
    return out;
}

}  // namespace

LinearDivisor::LinearDivisor(std::size_t var, Poly rhs)
    : var_(var), rhs_(std::move(rhs)) {
    if (!rhs_.ring()) throw DomainError("divisor right-hand side has no ring");
    if (var_ >= rhs_.ring()->nvars())
        throw DomainError("divisor variable index out of range");
    if (rhs_.involves(var_))
        throw DomainError("divisor right-hand side involves its own variable");
}

std::optional<LinearDivisor> LinearDivisor::from_poly(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    const RingPtr& ring = p.ring();
    for (std::size_t v = 0; v < ring->nvars(); ++v) {
        if (p.degree_in(v) != 1) continue;
        // Split p = coef * z_v + rest with rest free of z_v.
        Poly coef = Poly::zero(ring);
        Poly rest = Poly::zero(ring);
        for (const auto& t : p.terms()) {
            if (t.mono[v] == 0) {
                rest += Poly::monomial_term(ring, t.mono, t.coeff);
            } else {
                Monomial m = t.mono;
                m[v] = 0;
                coef += Poly::monomial_term(ring, std::move(m), t.coeff);
            }
        }
        if (!coef.is_one()) continue;
        return LinearDivisor(v, -rest);
    }
    return std::nullopt;
}

Poly LinearDivisor::to_poly() const {
    return Poly::variable(ring(), var_) - rhs_;
}

std::string LinearDivisor::str() const { return to_poly().str(); }

Poly DivisorProduct::expanded() const {
    if (factors.empty()) throw DomainError("empty divisor product");
    Poly acc = Poly::one(factors[0].first.ring());
    for (const auto& [div, power] : factors)
        acc *= div.to_poly().pow(power);
    return acc;
}

std::vector<LinearDivisor> DivisorProduct::unrolled() const {
    std::vector<LinearDivisor> out;
    for (const auto& [div, power] : factors)
        for (unsigned k = 0; k < power; ++k) out.push_back(div);
    return out;
}

std::size_t DivisorProduct::total_power() const {
    std::size_t n = 0;
    for (const auto& [div, power] : factors) n += power;
    return n;
}

std::string DivisorProduct::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " * ";
        os << '(' << factors[i].first.str() << ')';
        if (factors[i].second > 1) os << '^' << factors[i].second;
    }
    return os.str();
}

ClassReport classify(const PolyMatrix& f, const LinearDivisor& d) {
    check_divisor_ring(f, d);
    const std::size_t l = f.rows(), m = f.cols();
    if (l > m)
        throw DomainError("matrix has more rows than columns; classes are "
                          "defined for wide matrices");
    const RingPtr ring = f.ring();
    const RingPtr lexring = lex_ring_of(ring);
    const Poly dp = d.to_poly();

    ClassReport report;
    const MinorReport top = minors(f, l);
    report.d_l = top.gcd;
    report.eta = top.minors.size();
    if (report.d_l.is_zero())
        throw HypothesisError(
            "matrix does not have full row rank: every maximal minor is zero");

    std::vector<Poly> c_minors;  // order-(l-1) minors
    if (l >= 2) {
        const MinorReport sub = minors(f, l - 1);
        report.d_l_minus_1 = sub.gcd;
        report.gamma = sub.minors.size();
        report.h = sub.reduced;
        c_minors = sub.minors;
    } else {
        // Convention: the empty minor is 1.
        report.d_l_minus_1 = Poly::one(ring);
        report.gamma = 1;
        report.h = {Poly::one(ring)};
        c_minors = {Poly::one(ring)};
    }

    report.gcd_d_dl1 = gcd(dp, report.d_l_minus_1);
    report.gb_d_dl1 = reduced_gb(
        {convert_to_ring(dp, lexring), convert_to_ring(report.d_l_minus_1, lexring)});

    report.divides_d_l = static_cast<bool>(report.d_l.try_exact_divide(dp));
    if (!report.divides_d_l) return report;  // all classes stay false

    report.e.reserve(top.minors.size());
    for (const auto& minor : top.minors)
        report.e.push_back(minor.exact_divide(dp));

    const auto lex_family = [&](const std::vector<Poly>& polys) {
        std::vector<Poly> gens;
        gens.reserve(polys.size() + 1);
        gens.push_back(convert_to_ring(dp, lexring));
        for (const auto& p : polys) gens.push_back(convert_to_ring(p, lexring));
        return reduced_gb(gens);
    };

    report.gb_s1 = lex_family(report.e);
    report.gb_s2 = lex_family(c_minors);
    report.gb_s3 = lex_family(report.h);

    report.in_s = report.gcd_d_dl1.is_one();
    report.in_s1 = report.gb_s1->is_unit();
    report.in_s2 = report.gb_s2->is_unit();
    report.in_s3 = report.in_s && report.gb_s3->is_unit();
    return report;
}

PolyMatrix substituted(const PolyMatrix& f, const LinearDivisor& d) {
    check_divisor_ring(f, d);
    PolyMatrix out(f.ring(), f.rows(), f.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) {
            out.at(i, j) = f.at(i, j).substitute(d.var(), d.rhs());
            if (out.at(i, j).involves(d.var()))
                throw InternalError("substituted entry still involves the "
                                    "divisor variable");
        }
    return out;
}

ZlpVector zlp_vector(const PolyMatrix& f_hat) {
    const RingPtr ring = f_hat.ring();
    const std::size_t l = f_hat.rows();
    const std::size_t r = rank(f_hat);
    if (r != l - 1) {
        std::ostringstream os;
        os << "substituted matrix has rank " << r << " but rank " << (l - 1)
           << " is required for a rank-one left kernel";
        throw HypothesisError(os.str());
    }
    const SyzygyBasis syz = syzygy(f_hat, SyzygySide::left);
    if (syz.generators.empty())
        throw InternalError("rank-deficient matrix produced no syzygy generators");
    // Select the generator with the smallest POT leading term.
    std::size_t best = 0;
    auto best_lead = pot_lead(syz.generators[0]);
    for (std::size_t k = 1; k < syz.generators.size(); ++k) {
        const auto lead = pot_lead(syz.generators[k]);
        int cmp;
        if (lead.first != best_lead.first)
            cmp = lead.first < best_lead.first ? 1 : -1;
        else
            cmp = ring->compare(lead.second, best_lead.second);
        if (cmp < 0) {
            best = k;
            best_lead = lead;
        }
    }
    ZlpVector out;
    out.raw = syz.generators[best];
    out.content = gcd_many(out.raw);
    out.components.reserve(out.raw.size());
    for (const auto& p : out.raw)
        out.components.push_back(p.exact_divide(out.content));
    if (!gcd_many(out.components).is_one())
        throw InternalError("content removal left a nontrivial component GCD");
    const std::vector<Poly> check = mat_vec_row(out.components, f_hat);
    for (const auto& p : check)
        if (!p.is_zero())
            throw InternalError("kernel vector does not annihilate the matrix");
    auto [unit, gb] = is_unit_ideal(out.components);
    if (!unit)
        throw HypothesisError(
            "kernel vector components do not generate the unit ideal; reduced "
            "basis: " +
            polys_to_text(gb.elements()));
    out.unit_certificate = std::move(gb);
    return out;
}

CompleteOptions CompleteOptions::from_env() {
    CompleteOptions opts;
    if (const char* env = std::getenv("POLYMAT_MAX_SUBSET_SEARCH")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') opts.max_search = static_cast<std::size_t>(v);
    }
    return opts;
}

namespace {

std::optional<PolyMatrix> try_completion_subsets(
    const RingPtr& ring, const std::vector<Poly>& q1,
    const std::vector<std::vector<Poly>>& gens, std::size_t need,
    std::size_t& attempts, std::size_t budget) {
    const std::size_t l = q1.size();
    for (const auto& subset : index_combinations(gens.size(), need)) {
        if (attempts >= budget) return std::nullopt;
        ++attempts;
        PolyMatrix v(ring, l, l);
        v.set_col(0, q1);
        for (std::size_t k = 0; k < need; ++k) v.set_col(k + 1, gens[subset[k]]);
        const Poly det = determinant(v);
        if (det.is_constant() && !det.is_zero()) return v;
    }
    return std::nullopt;
}

}  // namespace

Completion complete(const ZlpVector& w, const CompleteOptions& opts) {
    const std::size_t l = w.size();
    if (l == 0) throw DomainError("cannot complete an empty vector");
    const RingPtr ring = w.components[0].ring();
    LiftCertificate q1_cert = lift(Poly::one(ring), w.components);
    const std::vector<Poly>& q1 = q1_cert.cofactors;

    const SyzygyBasis syz = syzygy(row_matrix(ring, w.components),
                                   SyzygySide::right);
    const std::size_t need = l - 1;
    std::size_t attempts = 0;
    std::optional<PolyMatrix> found = try_completion_subsets(
        ring, q1, syz.generators, need, attempts, opts.max_search);
    if (!found && need >= 1) {
        // Bounded fallback: replace one generator by a small-integer
        // recombination with another and retry the subset search.
        for (std::size_t a = 0; a < syz.generators.size() && !found; ++a) {
            for (std::size_t b = 0; b < syz.generators.size() && !found; ++b) {
                if (a == b) continue;
                for (int c = -2; c <= 2 && !found; ++c) {
                    if (c == 0) continue;
                    if (attempts >= opts.max_search) break;
                    auto recombined = syz.generators;
                    for (std::size_t i = 0; i < l; ++i)
                        recombined[a][i] +=
                            recombined[b][i] * Rational(c);
                    found = try_completion_subsets(ring, q1, recombined, need,
                                                   attempts, opts.max_search);
                }
            }
        }
    }
    if (!found) {
        std::ostringstream os;
        os << "unimodular completion search exhausted after " << attempts
           << " candidate bases (budget " << opts.max_search
           << "); kernel generating set has " << syz.generators.size()
           << " elements";
        throw CompletionError(os.str());
    }
    PolyMatrix v = std::move(*found);
    Poly det = determinant(v);
    if (!det.is_one()) {
        if (l == 1)
            throw CompletionError(
                "cannot normalize the determinant without rescaling the "
                "lifted column");
        const Rational scale = 1 / det.constant_value();
        std::vector<Poly> last = v.col(l - 1);
        for (auto& p : last) p = p * scale;
        v.set_col(l - 1, last);
        det = determinant(v);
        if (!det.is_one())
            throw InternalError("determinant normalization failed");
    }
    // w annihilates every completion column and pairs to 1 with q1.
    for (std::size_t j = 0; j < l; ++j) {
        Poly dot = Poly::zero(ring);
        for (std::size_t i = 0; i < l; ++i)
            dot += w.components[i] * v.at(i, j);
        if (j == 0 ? !dot.is_one() : !dot.is_zero())
            throw InternalError("completion columns lost the kernel pairing");
    }
    PolyMatrix u = inverse_unimodular(v);
    for (std::size_t i = 0; i < l; ++i)
        if (u.at(0, i) != w.components[i])
            throw InternalError("inverse does not start with the kernel vector");
    return Completion{std::move(v), std::move(u), std::move(q1_cert)};
}

namespace {

std::string class_failure_detail(const ClassReport& report,
                                 const LinearDivisor& d) {
    std::ostringstream os;
    os << "class test failed for divisor " << d.str() << ": ";
    if (!report.divides_d_l) {
        os << "divisor does not divide the maximal-minor GCD "
           << report.d_l.str();
    } else if (!report.in_s) {
        os << "GCD(d, d_(l-1)) = " << report.gcd_d_dl1.str()
           << " is not 1, so the matrix is outside S";
    } else {
        os << "the ideal generated by d and the reduced minors is not the "
              "whole ring; reduced basis: "
           << polys_to_text(report.gb_s3 ? report.gb_s3->elements()
                                         : std::vector<Poly>{});
    }
    return os.str();
}

FactorStep run_single_step(const PolyMatrix& f, const LinearDivisor& d,
                           const FactorOptions& opts) {
    const PolyMatrix f_hat = substituted(f, d);
    ZlpVector w = zlp_vector(f_hat);
    Completion comp = complete(w, opts.completion);
    const Poly dp = d.to_poly();
    const PolyMatrix uf = comp.u * f;
    PolyMatrix residual = uf;
    for (std::size_t j = 0; j < f.cols(); ++j) {
        auto q = uf.at(0, j).try_exact_divide(dp);
        if (!q)
            throw InternalError(
                "divisor does not divide the transformed first row");
        residual.at(0, j) = std::move(*q);
    }
    std::vector<Poly> diag(f.rows(), Poly::one(f.ring()));
    diag[0] = dp;
    const PolyMatrix d_mat = PolyMatrix::diagonal(f.ring(), f.rows(), diag);
    PolyMatrix g = comp.v * d_mat;
    return FactorStep{d,
                      f_hat,
                      std::move(w),
                      std::move(comp),
                      std::move(g),
                      std::move(residual)};
}

void require_wide(const PolyMatrix& f) {
    if (f.rows() > f.cols())
        throw DomainError("factorization needs rows <= cols");
}

}  // namespace

PolyMatrix FactorizationResult::combined_factor() const {
    if (steps.empty())
        return PolyMatrix::identity(original.ring(), original.rows());
    PolyMatrix acc = steps[0].g;
    for (std::size_t k = 1; k < steps.size(); ++k) acc = acc * steps[k].g;
    return acc;
}

FactorizationResult factor_once(const PolyMatrix& f, const LinearDivisor& d,
                                const FactorOptions& opts) {
    check_divisor_ring(f, d);
    require_wide(f);
    std::optional<ClassReport> report;
    if (!opts.skip_class_check) {
        report = classify(f, d);
        if (!report->in_s3)
            throw HypothesisError(class_failure_detail(*report, d));
    }
    FactorStep step = run_single_step(f, d, opts);
    FactorizationResult result{f,
                               {},
                               step.residual,
                               {},
                               std::move(report)};
    result.verification = verify_factorization(f, {step.g}, {d.to_poly()},
                                               step.residual);
    result.steps.push_back(std::move(step));
    if (!result.verification.pass)
        throw InternalError("single-step factorization failed verification");
    return result;
}

FactorizationResult factor_chain(const PolyMatrix& f, const DivisorProduct& d0,
                                 const FactorOptions& opts) {
    if (d0.factors.empty()) throw DomainError("empty divisor product");
    for (const auto& [div, power] : d0.factors) {
        check_divisor_ring(f, div);
        if (power == 0) throw DomainError("divisor powers must be positive");
    }
    require_wide(f);
    const RingPtr ring = f.ring();
    const std::size_t l = f.rows();
    const Poly product = d0.expanded();

    // Product hypotheses, checked once; the per-step class checks are skipped.
    const MinorReport top = minors(f, l);
    if (top.gcd.is_zero())
        throw HypothesisError(
            "matrix does not have full row rank: every maximal minor is zero");
    if (!top.gcd.try_exact_divide(product))
        throw HypothesisError("divisor product " + product.str() +
                              " does not divide the maximal-minor GCD " +
                              top.gcd.str());
    Poly d_sub = Poly::one(ring);
    std::vector<Poly> h = {Poly::one(ring)};
    if (l >= 2) {
        const MinorReport sub = minors(f, l - 1);
        d_sub = sub.gcd;
        h = sub.reduced;
    }
    const Poly common = gcd(product, d_sub);
    if (!common.is_one())
        throw HypothesisError("divisor product shares the factor " +
                              common.str() +
                              " with the order-(l-1) minor GCD " + d_sub.str());
    std::vector<Poly> unit_gens;
    unit_gens.push_back(product);
    for (const auto& p : h) unit_gens.push_back(p);
    auto [unit, gb] = is_unit_ideal(unit_gens);
    if (!unit)
        throw HypothesisError(
            "divisor product and reduced minors do not generate the unit "
            "ideal; reduced basis: " +
            polys_to_text(gb.elements()));

    FactorOptions step_opts = opts;
    step_opts.skip_class_check = true;
    FactorizationResult result{f, {}, f, {}, std::nullopt};
    PolyMatrix current = f;
    for (const LinearDivisor& div : d0.unrolled()) {
        FactorStep step = run_single_step(current, div, step_opts);
        current = step.residual;
        result.steps.push_back(std::move(step));
    }
    result.residual = current;

    std::vector<PolyMatrix> factors;
    std::vector<std::optional<Poly>> dets;
    for (const auto& step : result.steps) {
        factors.push_back(step.g);
        dets.push_back(step.divisor.to_poly());
    }
    result.verification =
        verify_factorization(f, factors, dets, result.residual);
    if (!result.verification.pass)
        throw InternalError("chained factorization failed verification");
    const Poly combined_det = determinant(result.combined_factor());
    if (combined_det != product)
        throw InternalError("combined determinant drifted from the divisor "
                            "product");
    return result;
}

VerifyReport verify_factorization(
    const PolyMatrix& f, const std::vector<PolyMatrix>& factors,
    const std::vector<std::optional<Poly>>& expected_dets,
    const PolyMatrix& residual) {
    if (expected_dets.size() != factors.size())
        throw DomainError("one expected determinant per factor is required");
    VerifyReport report;
    const auto fail = [&](const std::string& name, const std::string& detail) {
        report.conditions.push_back({name, false, detail});
    };
    const auto pass = [&](const std::string& name, const std::string& detail) {
        report.conditions.push_back({name, true, detail});
    };

    bool shapes_ok = residual.rows() == f.rows() && residual.cols() == f.cols();
    for (const auto& g : factors)
        shapes_ok = shapes_ok && g.rows() == f.rows() && g.cols() == f.rows();
    if (shapes_ok)
        pass("shapes", "factor and residual shapes are compatible");
    else
        fail("shapes", "factor or residual shape does not match the input");

    if (shapes_ok) {
        PolyMatrix prod = residual;
        for (std::size_t k = factors.size(); k-- > 0;) prod = factors[k] * prod;
        if (prod == f) {
            pass("product", "factors * residual equals the input exactly");
        } else {
            std::string detail = "product differs from the input";
            for (std::size_t i = 0; i < f.rows() && detail.size() < 400; ++i)
                for (std::size_t j = 0; j < f.cols(); ++j)
                    if (prod.at(i, j) != f.at(i, j)) {
                        detail = "entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") is " +
                                 prod.at(i, j).str() + " but the input has " +
                                 f.at(i, j).str();
                        i = f.rows();
                        break;
                    }
            fail("product", detail);
        }
    }

    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (!expected_dets[k]) continue;
        const std::string name = "det factor " + std::to_string(k);
        try {
            const Poly det = determinant(factors[k]);
            if (det == *expected_dets[k])
                pass(name, "determinant equals " + det.str());
            else
                fail(name, "determinant is " + det.str() + " but " +
                               expected_dets[k]->str() + " was expected");
        } catch (const Error& e) {
            fail(name, e.what());
        }
    }

    report.pass = true;
    for (const auto& c : report.conditions) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace polymat
