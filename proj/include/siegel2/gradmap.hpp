#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/sympl.hpp"
#include "siegel2/theta.hpp"

namespace siegel2 {

// [D(N_1) : ... : D(N_15)] in the S-table row order, divided by the largest coordinate.
struct ProjPoint15 {
    std::array<std::complex<double>, 15> coords{};
    int norm_index = 0;
    double abs_error = 0;  // bound on every normalized coordinate
};

using SignPattern = std::array<int, 15>;

template <class Real>
ProjPoint15 pgr_th2(const ThetaSnapshot<Real>& snap)
{
    std::array<ApproxValue<Real>, 15> d;
    int k = 0;
    for (int i = 0; i < 15; ++i) {
        d[i] = snap.det(kTable2Order[i]);
        if (d[i].magnitude() > d[k].magnitude())
            k = i;
    }
    const double big = d[k].magnitude();
    if (!(big > d[k].abs_error))
        throw std::domain_error("all Jacobian determinants vanish within error at this tau");
    ProjPoint15 p;
    p.norm_index = k;
    for (int i = 0; i < 15; ++i) {
        Complex<Real> c = d[i].value / d[k].value;
        p.coords[i] = c.to_std();
        double ci = std::abs(p.coords[i]);
        p.abs_error = std::max(p.abs_error, (d[i].abs_error + ci * d[k].abs_error) / (big - d[k].abs_error));
    }
    return p;
}

template <class Real>
ProjPoint15 pgr_th2(const SiegelPoint<Real>& tau, double eps)
{
    return pgr_th2(evaluate_snapshot(tau, EvalOptions{eps}));
}

// Chordal distance between unit representatives after the optimal phase alignment.
inline double projective_distance(const ProjPoint15& p, const ProjPoint15& q)
{
    double np = 0, nq = 0;
    std::complex<double> inner = 0;
    for (int i = 0; i < 15; ++i) {
        np += std::norm(p.coords[i]);
        nq += std::norm(q.coords[i]);
        inner += std::conj(q.coords[i]) * p.coords[i];
    }
    np = std::sqrt(np);
    nq = std::sqrt(nq);
    std::complex<double> phase = std::abs(inner) > 0 ? inner / std::abs(inner) : 1.0;
    double s = 0;
    for (int i = 0; i < 15; ++i)
        s += std::norm(p.coords[i] / np - phase * q.coords[i] / nq);
    return std::sqrt(s);
}

inline ProjPoint15 apply_pattern(ProjPoint15 p, const SignPattern& s)
{
    for (int i = 0; i < 15; ++i)
        p.coords[i] *= double(s[i]);
    return p;
}

// (kappa^2(gamma) chi_{N_i}(gamma))_i in the S-table row order.
inline SignPattern sign_pattern(const SpMatrix& g)
{
    if (!in_gamma_2_4(g))
        throw std::invalid_argument("sign_pattern: matrix is not in Gamma(2,4)");
    const int k2 = kappa_squared(g).sign();
    SignPattern s;
    for (int i = 0; i < 15; ++i)
        s[i] = k2 * chi_pair(g, kTable2Order[i]);
    return s;
}

inline std::string to_string(const SignPattern& s)
{
    std::string r;
    for (int x : s)
        r += x > 0 ? '+' : '-';
    return r;
}

inline constexpr int kPublishedImageCount = 64;

struct PatternCensus {
    int classes = 0;
    int distinct_patterns = 0;
    int kernel_size = 0;
    int kernel_dimension = 0;
    bool counting_consistent = false;    // distinct * |kernel| == 512
    bool kernel_matches_gamma = false;   // trivial pattern <=> in_Gamma on all representatives
    int published_count = kPublishedImageCount;
    bool agrees_with_published = false;
    std::map<SignPattern, GVector> witnesses;  // pattern -> smallest G vector realizing it
};

inline PatternCensus pattern_census()
{
    PatternCensus c;
    const SignPattern trivial = [] {
        SignPattern s;
        s.fill(1);
        return s;
    }();
    c.kernel_matches_gamma = true;
    const auto& reps = g_representatives();
    for (unsigned v = 0; v < reps.size(); ++v) {
        auto s = sign_pattern(reps[v]);
        ++c.classes;
        c.witnesses.emplace(s, GVector{std::uint16_t(v)});
        bool in_kernel = s == trivial;
        c.kernel_size += in_kernel;
        c.kernel_matches_gamma = c.kernel_matches_gamma && (in_kernel == in_Gamma(reps[v]));
    }
    c.distinct_patterns = int(c.witnesses.size());
    c.kernel_dimension = int(std::lround(std::log2(double(c.kernel_size))));
    c.counting_consistent = c.distinct_patterns * c.kernel_size == c.classes;
    c.agrees_with_published = c.distinct_patterns == c.published_count;
    return c;
}

struct InvarianceSample {
    std::string matrix;
    double distance = 0;     // d(P(tau), P(gamma tau)) or d(P(gamma tau), s * P(tau))
    double tolerance = 0;
    double unsigned_distance = 0;  // d(P(tau), P(gamma tau)) for the non-member checks
    SignPattern pattern{};
};

struct InvarianceReport {
    std::vector<InvarianceSample> members;       // Gamma words
    std::vector<InvarianceSample> non_members;   // G basis matrices
    int rejected_draws = 0;                      // gamma tau too close to the boundary
    double max_member_distance = 0;
    double max_non_member_distance = 0;
};

// Keeps gamma tau away from the boundary so the truncation radius stays moderate.
inline constexpr double kMinImageLambda = 0.05;

template <class Real>
InvarianceReport gamma_invariance_suite(int samples, std::uint64_t seed, double eps = 1e-14, int word_length = 2)
{
    InvarianceReport rep;
    std::mt19937_64 rng(seed);
    WordSampler ws(seed ^ 0x9e3779b97f4a7c15ULL);
    auto tol = [](const ProjPoint15& a, const ProjPoint15& b) { return 4 * (a.abs_error + b.abs_error) + 1e-12; };
    for (int s = 0; s < samples; ++s) {
        for (;;) {
            auto tau = random_tau<Real>(rng, 0.8);
            SpMatrix g = ws.gamma_word(word_length, s % 2 == 1);
            auto gt = act(g, tau);
            if (gt.lambda_min() < kMinImageLambda) {
                ++rep.rejected_draws;
                continue;
            }
            auto p = pgr_th2(tau, eps), q = pgr_th2(gt, eps);
            InvarianceSample x{to_string(g), projective_distance(p, q), tol(p, q), 0, sign_pattern(g)};
            rep.max_member_distance = std::max(rep.max_member_distance, x.distance);
            rep.members.push_back(x);
            break;
        }
    }
    auto tau = random_tau<Real>(rng, 0.8);
    auto p = pgr_th2(tau, eps);
    for (const auto& g : g_basis()) {
        auto q = pgr_th2(act(g, tau), eps);
        auto s = sign_pattern(g);
        InvarianceSample x{to_string(g), projective_distance(q, apply_pattern(p, s)), tol(p, q),
                           projective_distance(p, q), s};
        rep.max_non_member_distance = std::max(rep.max_non_member_distance, x.distance);
        rep.non_members.push_back(x);
    }
    return rep;
}

} // namespace siegel2
