#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "siegel2/identities.hpp"
#include "siegel2/monomial.hpp"
#include "siegel2/sympl.hpp"
#include "siegel2/theta.hpp"

namespace siegel2 {

struct JacobiRow {
    OddPair pair;
    CharSet quad;
    int printed_sign = 1;
    int computed_sign = 0;      // sign of D / prod theta at this point
    double residual = 0;        // |D - printed_sign * prod theta|
    double budget = 0;
    double modulus_residual = 0;  // ||D| - |prod theta||
    bool pass() const { return residual <= budget; }
};

struct JacobiReport {
    std::vector<JacobiRow> rows;
    bool bijective = false;     // quads are 15 distinct C4minus elements
    int printed_sign_passes = 0;
};

template <class Real>
JacobiReport verify_jacobi_table(const ThetaSnapshot<Real>& snap)
{
    JacobiReport rep;
    std::set<std::uint16_t> seen;
    bool all_c4m = true;
    for (const auto& e : jacobi_table()) {
        JacobiRow row;
        row.pair = e.pair;
        row.quad = e.quad;
        row.printed_sign = e.printed_sign;
        ApproxValue<Real> prod{Complex<Real>(Real(1)), 0};
        for (int m : e.quad.members())
            prod = prod * snap.even(m);
        auto d = snap.det(e.pair);
        auto diff = d - scaled(prod, Complex<Real>(Real(e.printed_sign)));
        row.residual = diff.magnitude();
        row.budget = diff.abs_error;
        row.modulus_residual = std::abs(d.magnitude() - prod.magnitude());
        row.computed_sign = to_double((d.value * prod.value.conj()).re) >= 0 ? 1 : -1;
        rep.printed_sign_passes += row.pass();
        rep.rows.push_back(row);
        seen.insert(e.quad.mask());
        all_c4m = all_c4m && classify_set(e.quad) == OrbitClass::C4Minus;
    }
    rep.bijective = all_c4m && seen.size() == 15;
    return rep;
}

template <class Real>
JacobiReport verify_jacobi_table(const SiegelPoint<Real>& tau, double eps)
{
    return verify_jacobi_table(evaluate_snapshot(tau, EvalOptions{eps}));
}

struct RelationCheck {
    std::string id;
    Residual res;
};

template <class Real>
std::vector<RelationCheck> verify_relations(const std::vector<Relation>& rels, const FormValues<Real>& v)
{
    std::vector<RelationCheck> out;
    for (const auto& r : rels)
        out.push_back({std::string(to_string(r.family)) + " " + r.key.label(), residual(r.terms, v)});
    return out;
}

// The listed biquadratic and quartic relations exactly as transcribed.
template <class Real>
std::vector<RelationCheck> verify_riemann(const SiegelPoint<Real>& tau, double eps)
{
    auto v = FormValues<Real>::from(evaluate_snapshot(tau, EvalOptions{eps}));
    auto rels = printed_biquadratic();
    auto q = printed_quartic();
    rels.insert(rels.end(), q.begin(), q.end());
    return verify_relations(rels, v);
}

// theta_a theta_b for two even indices (weight 1)
struct ThetaPairObject {
    int a = 0, b = 0;
};

// D(N) (weight 2)
struct DetObject {
    OddPair pair;
};

using ModularObject = std::variant<ThetaPairObject, DetObject>;

inline std::string to_string(const ModularObject& o)
{
    if (auto* t = std::get_if<ThetaPairObject>(&o))
        return "t" + std::to_string(t->a + 1) + "*t" + std::to_string(t->b + 1);
    return std::get<DetObject>(o).pair.label();
}

struct TransformCheck {
    double residual = 0;
    double budget = 0;
    double scale = 0;
    int sign = 1;  // kappa^2 * chi
};

// |f(g tau) - kappa^2(g) chi(g) det(c tau + d)^w f(tau)|
template <class Real>
TransformCheck verify_transformation(const SpMatrix& g, const ModularObject& obj, const ThetaSnapshot<Real>& at_tau,
                                     const ThetaSnapshot<Real>& at_gtau)
{
    if (!in_gamma_2_4(g))
        throw std::invalid_argument("verify_transformation: matrix is not in Gamma(2,4)");
    TransformCheck out;
    int k2 = kappa_squared(g).sign();
    Complex<Real> j = det_c_tau_d(g, at_tau.tau);
    ApproxValue<Real> lhs, rhs;
    if (auto* t = std::get_if<ThetaPairObject>(&obj)) {
        if (t->a < 0 || t->a > 9 || t->b < 0 || t->b > 9)
            throw std::invalid_argument("verify_transformation: unsupported object");
        out.sign = k2 * chi_m(g, kEven[t->a]) * chi_m(g, kEven[t->b]);
        lhs = at_gtau.even(t->a) * at_gtau.even(t->b);
        rhs = scaled(at_tau.even(t->a) * at_tau.even(t->b), j * Real(out.sign));
    } else {
        OddPair n = std::get<DetObject>(obj).pair;
        out.sign = k2 * chi_pair(g, n);
        lhs = at_gtau.det(n);
        rhs = scaled(at_tau.det(n), j * j * Real(out.sign));
    }
    auto diff = lhs - rhs;
    out.residual = diff.magnitude();
    out.budget = diff.abs_error;
    out.scale = std::max(lhs.magnitude(), rhs.magnitude());
    return out;
}

template <class Real>
TransformCheck verify_transformation(const SpMatrix& g, const ModularObject& obj, const SiegelPoint<Real>& tau,
                                     double eps)
{
    return verify_transformation(g, obj, evaluate_snapshot(tau, EvalOptions{eps}),
                                 evaluate_snapshot(act(g, tau), EvalOptions{eps}));
}

struct SiegelLimitRow {
    double lambda = 0;
    double form = 0;         // |f|
    double form_error = 0;
    double reference = 0;    // |theta_1|^{2w}
    double ratio = 0;        // |f| / |theta_1|^{2w}
};

struct SiegelLimitReport {
    std::vector<SiegelLimitRow> rows;
    bool decaying = false;   // ratio strictly decreasing, or identically zero
    bool vanishing = false;  // every value below its error bound
};

// f on [[tau1, z12], [z12, i lambda]] for increasing lambda.
template <class Real>
SiegelLimitReport siegel_limit(const Monomial& form, std::complex<double> tau1, const std::vector<double>& lambdas,
                               std::complex<double> z12 = {0, 0})
{
    SiegelLimitReport rep;
    const int w2 = form.twice_weight();
    for (double lam : lambdas) {
        auto tau = SiegelPoint<Real>::from_doubles(tau1.real(), tau1.imag(), z12.real(), z12.imag(), 0, lam);
        // absolute tail far below the smallest value of interest
        auto snap = evaluate_snapshot(tau, EvalOptions{1e-250, 0, false});
        auto v = FormValues<Real>::from(snap);
        auto f = evaluate(form, v);
        auto ref = power(snap.even(0), w2);
        SiegelLimitRow row{lam, f.magnitude(), f.abs_error, ref.magnitude(), 0};
        row.ratio = row.reference > 0 ? row.form / row.reference : 0;
        rep.rows.push_back(row);
    }
    rep.vanishing = std::all_of(rep.rows.begin(), rep.rows.end(),
                                [](const SiegelLimitRow& r) { return r.form <= r.form_error; });
    rep.decaying = rep.vanishing;
    if (!rep.vanishing) {
        rep.decaying = true;
        for (std::size_t k = 1; k < rep.rows.size(); ++k)
            rep.decaying = rep.decaying && rep.rows[k].ratio < rep.rows[k - 1].ratio;
    }
    return rep;
}

struct RadiusCheck {
    int radius = 0;
    int doubled = 0;
    double max_change = 0;     // max |v_R - v_2R|
    double max_excess = 0;     // max (|v_R - v_2R| / abs_error_R)
    bool pass() const { return max_excess <= 1; }
};

// Doubling the truncation radius moves no value by more than its claimed error.
template <class Real>
RadiusCheck radius_doubling_check(const SiegelPoint<Real>& tau, double eps)
{
    auto a = evaluate_snapshot(tau, EvalOptions{eps});
    auto b = evaluate_snapshot(tau, EvalOptions{eps, 2 * a.radius});
    RadiusCheck rc{a.radius, b.radius, 0, 0};
    auto upd = [&](const ApproxValue<Real>& x, const ApproxValue<Real>& y) {
        double d = to_double((x.value - y.value).abs());
        rc.max_change = std::max(rc.max_change, d);
        rc.max_excess = std::max(rc.max_excess, x.abs_error > 0 ? d / x.abs_error : (d > 0 ? INFINITY : 0));
    };
    for (int m = 0; m < 16; ++m) {
        upd(a.theta[m], b.theta[m]);
        upd(a.grad[m].g1, b.grad[m].g1);
        upd(a.grad[m].g2, b.grad[m].g2);
    }
    return rc;
}

struct FiniteDifferenceCheck {
    double h = 0;
    double max_difference = 0;  // max over odd n and both partials
};

// Analytic gradient against central differences of theta_n(tau, +-h e_j).
template <class Real>
FiniteDifferenceCheck gradient_fd_check(const SiegelPoint<Real>& tau, double h, double eps)
{
    FiniteDifferenceCheck out{h, 0};
    auto snap = evaluate_snapshot(tau, EvalOptions{eps});
    EvalOptions opt{eps};
    for (Char2 n : kOdd) {
        const auto& g = snap.grad_of(n);
        for (int j = 0; j < 2; ++j) {
            std::array<double, 2> zp{0, 0}, zm{0, 0};
            zp[j] = h;
            zm[j] = -h;
            auto fp = theta_series(IntChar::from(n), tau, zp, opt);
            auto fm = theta_series(IntChar::from(n), tau, zm, opt);
            Complex<Real> fd = (fp.value - fm.value) * Real(1 / (2 * h));
            const auto& an = j == 0 ? g.g1 : g.g2;
            out.max_difference = std::max(out.max_difference, to_double((fd - an.value).abs()));
        }
    }
    return out;
}

} // namespace siegel2
