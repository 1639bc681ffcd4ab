#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymat/groebner.hpp"
#include "polymat/matrix.hpp"
#include "polymat/poly.hpp"

namespace polymat {

// Linear divisor d = z_var - rhs with rhs free of z_var.
class LinearDivisor {
public:
    LinearDivisor(std::size_t var, Poly rhs);

    // Recognizes a polynomial of the shape z_i - f with f free of z_i
    // (monic, degree 1 in z_i); nullopt when it has no such shape.
    static std::optional<LinearDivisor> from_poly(const Poly& p);

    std::size_t var() const { return var_; }
    const Poly& rhs() const { return rhs_; }
    const RingPtr& ring() const { return rhs_.ring(); }
    Poly to_poly() const;
    std::string str() const;

private:
    std::size_t var_;
    Poly rhs_;
};

// Product of linear divisors with multiplicities: d0 = prod d_t ^ q_t.
struct DivisorProduct {
    std::vector<std::pair<LinearDivisor, unsigned>> factors;

    Poly expanded() const;                      // the product polynomial
    std::vector<LinearDivisor> unrolled() const;  // factors repeated by power
    std::size_t total_power() const;
    std::string str() const;
};

// Everything the class-membership tests produce for one divisor.
struct ClassReport {
    Poly d_l;          // GCD of the l x l minors
    Poly d_l_minus_1;  // GCD of the (l-1) x (l-1) minors (1 when l == 1)
    std::size_t eta = 0;    // number of l x l minors
    std::size_t gamma = 0;  // number of (l-1) x (l-1) minors
    bool divides_d_l = false;       // d | d_l(F)
    Poly gcd_d_dl1;                 // GCD(d, d_{l-1}(F))
    std::vector<Poly> e;  // a_i / d for the l x l minors a_i (when divisible)
    std::vector<Poly> h;  // reduced (l-1) x (l-1) minors, b_i = c_i / d_{l-1}
    bool in_s = false;
    bool in_s1 = false;
    bool in_s2 = false;
    bool in_s3 = false;
    // Certifying reduced bases (lex order): <d, e_1..>, <d, c_1..>, <d, h_1..>
    // and the diagnostic <d, d_{l-1}>.
    std::optional<GroebnerBasis> gb_s1;
    std::optional<GroebnerBasis> gb_s2;
    std::optional<GroebnerBasis> gb_s3;
    std::optional<GroebnerBasis> gb_d_dl1;
};

// Class membership of F with respect to d. Requires rows <= cols and full
// row rank (nonzero d_l); when d does not divide d_l all classes are false.
ClassReport classify(const PolyMatrix& f, const LinearDivisor& d);

// F with z_var replaced by d.rhs() in every entry; entries of the result are
// free of z_var.
PolyMatrix substituted(const PolyMatrix& f, const LinearDivisor& d);

// Primitive generator of the rank-one left kernel of a substituted matrix,
// with its certificates.
struct ZlpVector {
    std::vector<Poly> components;      // content-free, normalized
    std::vector<Poly> raw;             // syzygy generator before normalization
    Poly content;                      // GCD divided out of `raw`
    GroebnerBasis unit_certificate;    // reduced GB of <components> == {1}

    std::size_t size() const { return components.size(); }
};

// Computes the minimal left annihilator of f_hat (which must have rank
// exactly rows-1) and certifies that its components generate the unit ideal.
// Throws HypothesisError when the rank or the unit-ideal test fails.
ZlpVector zlp_vector(const PolyMatrix& f_hat);

struct CompleteOptions {
    // Bound on how many column subsets / recombination attempts are tried.
    std::size_t max_search = 20000;

    static CompleteOptions from_env();  // honors POLYMAT_MAX_SUBSET_SEARCH
};

// Unimodular completion of a ZLP row vector w: V = [q1 | q2 .. ql] with
// det V == 1, U = V^{-1}, first row of U equal to w.
struct Completion {
    PolyMatrix v;
    PolyMatrix u;
    LiftCertificate q1_lift;  // 1 == w * q1
};

Completion complete(const ZlpVector& w,
                    const CompleteOptions& opts = CompleteOptions::from_env());

struct VerifyCondition {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    bool pass = false;
    std::vector<VerifyCondition> conditions;
};

// One extraction step F = G * F1 with det G = d.
struct FactorStep {
    LinearDivisor divisor;
    PolyMatrix f_hat;      // input with z_var := rhs
    ZlpVector w;
    Completion completion;
    PolyMatrix g;          // V * diag(d, 1, .., 1)
    PolyMatrix residual;   // F1
};

struct FactorizationResult {
    PolyMatrix original;
    std::vector<FactorStep> steps;
    PolyMatrix residual;
    VerifyReport verification;
    std::optional<ClassReport> class_report;

    PolyMatrix combined_factor() const;  // product of the step factors
};

struct FactorOptions {
    bool skip_class_check = false;
    CompleteOptions completion = CompleteOptions::from_env();
};

// Single extraction of a linear divisor. Hypothesis failures (class test,
// rank, kernel unit-ideal test) throw HypothesisError; completion budget
// exhaustion throws CompletionError. The returned factorization has been
// re-verified exactly (F == G * F1, det G == d).
FactorizationResult factor_once(const PolyMatrix& f, const LinearDivisor& d,
                                const FactorOptions& opts = {});

// Chained extraction of a product of linear divisors. The product hypotheses
// (d0 | d_l(F), GCD(d0, d_{l-1}(F)) == 1, <d0, reduced minors> == (1)) are
// checked once up front; per-step class checks are skipped.
FactorizationResult factor_chain(const PolyMatrix& f, const DivisorProduct& d0,
                                 const FactorOptions& opts = {});

// Checks F == factors[0] * .. * factors.back() * residual and, for each
// factor with an expected determinant, det(factor) == expected. Reports
// condition-by-condition; never throws on mere verification failure.
VerifyReport verify_factorization(
    const PolyMatrix& f, const std::vector<PolyMatrix>& factors,
    const std::vector<std::optional<Poly>>& expected_dets,
    const PolyMatrix& residual);

}  // namespace polymat
