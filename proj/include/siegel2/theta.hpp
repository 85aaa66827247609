#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/precision.hpp"
#include "siegel2/spmatrix.hpp"

namespace siegel2 {

// Point of the genus-2 Siegel upper half space.
template <class Real>
struct SiegelPoint {
    Complex<Real> t11, t12, t22;

    SiegelPoint() : t11(Real(0), Real(1)), t12(), t22(Real(0), Real(1)) {}
    SiegelPoint(Complex<Real> a, Complex<Real> b, Complex<Real> c) : t11(a), t12(b), t22(c) { validate(); }

    static SiegelPoint from_doubles(double r11, double i11, double r12, double i12, double r22, double i22)
    {
        return SiegelPoint(Complex<Real>(Real(r11), Real(i11)), Complex<Real>(Real(r12), Real(i12)),
                           Complex<Real>(Real(r22), Real(i22)));
    }

    // "re11,im11,re12,im12,re22,im22"
    static SiegelPoint parse(const std::string& text)
    {
        std::string s = text;
        for (char& ch : s)
            if (ch == ',' || ch == ';')
                ch = ' ';
        std::istringstream is(s);
        std::array<double, 6> v{};
        int k = 0;
        double x;
        while (is >> x) {
            if (k == 6)
                throw std::invalid_argument("tau: expected 6 reals");
            v[k++] = x;
        }
        if (!is.eof() || k != 6)
            throw std::invalid_argument("tau: expected 6 reals re11,im11,re12,im12,re22,im22");
        return from_doubles(v[0], v[1], v[2], v[3], v[4], v[5]);
    }

    void validate() const
    {
        if (!(t11.im > 0) || !(t11.im * t22.im - t12.im * t12.im > 0))
            throw std::domain_error("Im tau is not positive definite");
    }

    // Smallest eigenvalue of Im tau.
    double lambda_min() const
    {
        double a = to_double(t11.im), b = to_double(t12.im), c = to_double(t22.im);
        return (a + c) / 2 - std::sqrt((a - c) * (a - c) / 4 + b * b);
    }

    std::array<double, 6> to_doubles() const
    {
        return {to_double(t11.re), to_double(t11.im), to_double(t12.re),
                to_double(t12.im), to_double(t22.re), to_double(t22.im)};
    }

    template <class Other>
    SiegelPoint<Other> convert() const
    {
        auto v = to_doubles();
        return SiegelPoint<Other>::from_doubles(v[0], v[1], v[2], v[3], v[4], v[5]);
    }
};

// tau = X + iY, X symmetric uniform in [-1,1], Y = tQ Q + 0.3.
template <class Real>
SiegelPoint<Real> random_tau(std::mt19937_64& rng, double shift = 0.3)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double x11 = u(rng), x12 = u(rng), x22 = u(rng);
    double q[2][2] = {{u(rng), u(rng)}, {u(rng), u(rng)}};
    double y11 = q[0][0] * q[0][0] + q[1][0] * q[1][0] + shift;
    double y12 = q[0][0] * q[0][1] + q[1][0] * q[1][1];
    double y22 = q[0][1] * q[0][1] + q[1][1] * q[1][1] + shift;
    return SiegelPoint<Real>::from_doubles(x11, y11, x12, y12, x22, y22);
}

// Value with a bound on its absolute error.
template <class Real>
struct ApproxValue {
    Complex<Real> value;
    double abs_error = 0;

    double magnitude() const { return to_double(value.abs()); }
};

namespace detail {

template <class Real>
double round_err(const Complex<Real>& v)
{
    return 4 * unit_roundoff<Real>() * to_double(v.abs1());
}

} // namespace detail

template <class Real>
ApproxValue<Real> operator*(const ApproxValue<Real>& a, const ApproxValue<Real>& b)
{
    ApproxValue<Real> r{a.value * b.value, 0};
    double ma = a.magnitude(), mb = b.magnitude();
    r.abs_error = ma * b.abs_error + mb * a.abs_error + a.abs_error * b.abs_error + detail::round_err(r.value);
    return r;
}

template <class Real>
ApproxValue<Real> operator+(const ApproxValue<Real>& a, const ApproxValue<Real>& b)
{
    ApproxValue<Real> r{a.value + b.value, a.abs_error + b.abs_error};
    r.abs_error += detail::round_err(r.value);
    return r;
}

template <class Real>
ApproxValue<Real> operator-(const ApproxValue<Real>& a, const ApproxValue<Real>& b)
{
    ApproxValue<Real> r{a.value - b.value, a.abs_error + b.abs_error};
    r.abs_error += detail::round_err(r.value);
    return r;
}

template <class Real>
ApproxValue<Real> scaled(const ApproxValue<Real>& a, const Complex<Real>& s)
{
    double ms = to_double(s.abs());
    ApproxValue<Real> r{a.value * s, a.abs_error * ms};
    r.abs_error += detail::round_err(r.value);
    return r;
}

template <class Real>
ApproxValue<Real> power(const ApproxValue<Real>& a, int k)
{
    ApproxValue<Real> r{Complex<Real>(Real(1)), 0};
    for (int i = 0; i < k; ++i)
        r = r * a;
    return r;
}

template <class Real>
struct GradientValue {
    ApproxValue<Real> g1, g2;
};

// Upper bound for the sum over lattice points with |x| > R of |x|^w exp(-pi lambda |x|^2),
// shell k < |x| <= k+1 holding at most pi (k + 1 + sqrt(2)/2)^2 points.
inline double lattice_tail(double lambda, int radius, bool gradient)
{
    const double pi = 3.14159265358979323846;
    double total = 0;
    for (int k = radius;; ++k) {
        double count = pi * (k + 1.7072) * (k + 1.7072);
        double weight = gradient ? 2 * pi * (k + 1) : 1.0;
        double log_term = std::log(count * weight) - pi * lambda * double(k) * double(k);
        double term = std::exp(log_term);
        total += term;
        if (log_term < -745 || (k > radius + 4 && term < 1e-20 * total))
            break;
    }
    return total;
}

// Smallest radius whose theta and gradient tails are below eps.
inline int choose_radius(double lambda, double eps)
{
    if (!(lambda > 0))
        throw std::domain_error("Im tau is not positive definite");
    const int limit = 100000;
    for (int r = 1; r < limit; ++r)
        if (lattice_tail(lambda, r, true) <= eps && lattice_tail(lambda, r, false) <= eps)
            return r;
    throw std::domain_error("tau too close to the boundary: truncation radius exceeds limit");
}

// Tail target and optional fixed radius for one evaluation.
struct EvalOptions {
    double eps = 1e-14;
    int radius = 0;            // 0: choose from eps
    bool check_achievable = true;
};

template <class Real>
void check_eps(double eps)
{
    if (!(eps > 0))
        throw std::invalid_argument("eps must be positive");
    if (eps < 100 * unit_roundoff<Real>()) {
        std::ostringstream os;
        os << "eps " << eps << " is unachievable with this precision backend";
        throw std::domain_error(os.str());
    }
}

namespace detail {

// Theta sums and gradient sums over x = n + m'/2 for several m'' at once.
template <class Real>
struct Sweep {
    std::vector<Complex<Real>> theta;
    std::vector<std::array<Complex<Real>, 2>> grad;  // sum of x_j * term; scaled by 2 pi i later
    double abs_sum = 0;
    double rel_factor = 0;
    int radius = 0;
};

// m'' entries are arbitrary integers; z is real.
template <class Real>
Sweep<Real> sweep(const SiegelPoint<Real>& tau, Int mp1, Int mp2, const std::vector<std::array<Int, 2>>& mpps,
                  int radius, std::array<double, 2> z = {0, 0}, bool want_grad = true)
{
    using C = Complex<Real>;
    const std::size_t nk = mpps.size();
    Sweep<Real> s;
    s.theta.assign(nk, C());
    s.grad.assign(nk, {C(), C()});
    s.radius = radius;

    const Real two(2);
    const Real z1(z[0]), z2(z[1]);
    const C q = exp_pi_i(tau.t22 * two);
    const double R = radius;
    const double y12 = to_double(tau.t12.im), y22 = to_double(tau.t22.im);
    Real abs_sum(0);

    // rows x1 = n1 + mp1/2, |x1| <= R
    const Int n1_lo = Int(std::ceil(-R - mp1 / 2.0)), n1_hi = Int(std::floor(R - mp1 / 2.0));
    for (Int n1 = n1_lo; n1 <= n1_hi; ++n1) {
        const double x1d = n1 + mp1 / 2.0;
        const double half_width = std::sqrt(std::max(0.0, R * R - x1d * x1d));
        const Int n2_lo = Int(std::ceil(-half_width - mp2 / 2.0));
        const Int n2_hi = Int(std::floor(half_width - mp2 / 2.0));
        if (n2_lo > n2_hi)
            continue;
        // row maximum of |term| near x2 = -(y12/y22) x1
        Int n2c = Int(std::llround(-(y12 / y22) * x1d - mp2 / 2.0));
        n2c = std::clamp(n2c, n2_lo, n2_hi);

        const Real x1 = Real(2 * n1 + mp1) / two;
        const Real xc = Real(2 * n2c + mp2) / two;
        const C lin = tau.t12 * (two * x1) + C(two * z2);
        // term(x1, x2) = exp(pi i (t11 x1^2 + 2 t12 x1 x2 + t22 x2^2 + 2 x1 z1 + 2 x2 z2))
        const C seed = exp_pi_i(tau.t11 * (x1 * x1) + tau.t12 * (two * x1 * xc) + tau.t22 * (xc * xc) +
                                C(two * (x1 * z1 + xc * z2)));
        const C up0 = exp_pi_i(tau.t22 * (two * xc + Real(1)) + lin);
        const C down0 = exp_pi_i(-(tau.t22 * (two * xc - Real(1)) + lin));

        auto accumulate = [&](const C& term, Int n2) {
            abs_sum += term.abs1();
            const Int a = 2 * n1 + mp1, b = 2 * n2 + mp2;
            const Real x2 = Real(b) / two;
            for (std::size_t k = 0; k < nk; ++k) {
                // exp(pi i x.m'') = i^{(2 n1 + m'1) m''1 + (2 n2 + m'2) m''2}
                int e = int(detail::mod(a * mpps[k][0] + b * mpps[k][1], 4));
                C t = term.times_i_pow(e);
                s.theta[k] += t;
                if (want_grad) {
                    s.grad[k][0] += t * x1;
                    s.grad[k][1] += t * x2;
                }
            }
        };

        C term = seed, ratio = up0;
        for (Int n2 = n2c; n2 <= n2_hi; ++n2) {
            accumulate(term, n2);
            term *= ratio;
            ratio *= q;
        }
        term = seed * down0;
        ratio = down0 * q;
        for (Int n2 = n2c - 1; n2 >= n2_lo; --n2) {
            accumulate(term, n2);
            term *= ratio;
            ratio *= q;
        }
    }

    // a priori relative error per term: argument size of the seed exponential plus
    // error growth along the row recurrence
    const double pi_d = 3.14159265358979323846;
    const double t22 = to_double(tau.t22.abs()), t12 = to_double(tau.t12.abs()), t11 = to_double(tau.t11.abs());
    const double steps = R + 2;
    const double a_seed = pi_d * (t11 + 2 * t12 + t22) * (R + 1) * (R + 1) + 2 * pi_d * (std::abs(z[0]) + std::abs(z[1])) * (R + 1);
    const double a_ratio = pi_d * (t22 * (2 * R + 3) + 2 * t12 * (R + 1) + 2 * std::abs(z[1]));
    const double a_q = 2 * pi_d * t22;
    s.rel_factor = 8 * unit_roundoff<Real>() * (4 + a_seed + steps * (2 + a_ratio) + steps * steps * a_q);
    s.abs_sum = to_double(abs_sum);
    return s;
}

template <class Real>
ApproxValue<Real> finish_theta(const Complex<Real>& sum, const Sweep<Real>& s, double tail)
{
    return ApproxValue<Real>{sum, tail + s.rel_factor * s.abs_sum};
}

template <class Real>
GradientValue<Real> finish_grad(const std::array<Complex<Real>, 2>& sum, const Sweep<Real>& s, double tail)
{
    const Complex<Real> f(Real(0), pi<Real>() * 2);
    const double pi_d = 3.14159265358979323846;
    const double round = s.rel_factor * s.abs_sum * 2 * pi_d * (s.radius + 1);
    return GradientValue<Real>{ApproxValue<Real>{sum[0] * f, tail + round},
                               ApproxValue<Real>{sum[1] * f, tail + round}};
}

inline int resolve_radius(double lambda, const EvalOptions& opt)
{
    return opt.radius > 0 ? opt.radius : choose_radius(lambda, opt.eps / 2);
}

template <class Real>
void check_result(double err, const EvalOptions& opt)
{
    if (opt.check_achievable && opt.radius == 0 && err > opt.eps)
    {
        std::ostringstream os;
        os << "eps " << opt.eps << " is unachievable with this precision backend (error bound " << err << ")";
        throw std::domain_error(os.str());
    }
}

} // namespace detail

// All 16 theta constants and gradients at one tau, from four lattice sweeps.
template <class Real>
struct ThetaSnapshot {
    SiegelPoint<Real> tau;
    int radius = 0;
    std::array<ApproxValue<Real>, 16> theta;   // indexed by Char2 bits
    std::array<GradientValue<Real>, 16> grad;

    const ApproxValue<Real>& theta_of(Char2 m) const { return theta[m.bits()]; }
    const ApproxValue<Real>& even(int i) const { return theta[kEven[i].bits()]; }
    const GradientValue<Real>& grad_of(Char2 m) const { return grad[m.bits()]; }

    // (1/pi^2) det [grad n_a ; grad n_b]
    ApproxValue<Real> det(Char2 a, Char2 b) const
    {
        if (!is_odd(a) || !is_odd(b))
            throw std::invalid_argument("jacobian_det: characteristics must be odd");
        const auto& ga = grad_of(a);
        const auto& gb = grad_of(b);
        ApproxValue<Real> d = ga.g1 * gb.g2 - ga.g2 * gb.g1;
        Real s = Real(1) / (pi<Real>() * pi<Real>());
        return scaled(d, Complex<Real>(s));
    }

    ApproxValue<Real> det(OddPair n) const { return det(kOdd[n.i], kOdd[n.j]); }
};

template <class Real>
ThetaSnapshot<Real> evaluate_snapshot(const SiegelPoint<Real>& tau, const EvalOptions& opt = {})
{
    tau.validate();
    if (opt.check_achievable)
        check_eps<Real>(opt.eps);
    const double lambda = tau.lambda_min();
    const int R = detail::resolve_radius(lambda, opt);
    const double tail_t = lattice_tail(lambda, R, false), tail_g = lattice_tail(lambda, R, true);
    const std::vector<std::array<Int, 2>> mpps = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};

    ThetaSnapshot<Real> snap;
    snap.tau = tau;
    snap.radius = R;
    for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2) {
            auto s = detail::sweep(tau, p1, p2, mpps, R);
            for (int k = 0; k < 4; ++k) {
                Char2 m(p1, p2, int(mpps[k][0]), int(mpps[k][1]));
                snap.theta[m.bits()] = detail::finish_theta(s.theta[k], s, tail_t);
                snap.grad[m.bits()] = detail::finish_grad(s.grad[k], s, tail_g);
                detail::check_result<Real>(snap.theta[m.bits()].abs_error, opt);
                detail::check_result<Real>(snap.grad[m.bits()].g1.abs_error, opt);
            }
        }
    return snap;
}

// theta_m(tau, z) for an integer characteristic and real z.
template <class Real>
ApproxValue<Real> theta_series(const IntChar& m, const SiegelPoint<Real>& tau, std::array<double, 2> z,
                               const EvalOptions& opt = {})
{
    tau.validate();
    if (opt.check_achievable)
        check_eps<Real>(opt.eps);
    const double lambda = tau.lambda_min();
    const int R = detail::resolve_radius(lambda, opt);
    auto s = detail::sweep(tau, m.mp[0], m.mp[1], {m.mpp}, R, z, false);
    auto v = detail::finish_theta(s.theta[0], s, lattice_tail(lambda, R, false));
    detail::check_result<Real>(v.abs_error, opt);
    return v;
}

template <class Real>
ApproxValue<Real> theta_constant(const IntChar& m, const SiegelPoint<Real>& tau, double eps)
{
    return theta_series(m, tau, {0, 0}, EvalOptions{eps});
}

template <class Real>
ApproxValue<Real> theta_constant(Char2 m, const SiegelPoint<Real>& tau, double eps)
{
    return theta_constant(IntChar::from(m), tau, eps);
}

template <class Real>
GradientValue<Real> theta_gradient(Char2 n, const SiegelPoint<Real>& tau, double eps)
{
    if (!is_odd(n))
        throw std::invalid_argument("theta_gradient: characteristic " + n.to_string() + " is even");
    tau.validate();
    EvalOptions opt{eps};
    check_eps<Real>(eps);
    const double lambda = tau.lambda_min();
    const int R = detail::resolve_radius(lambda, opt);
    auto s = detail::sweep(tau, n.mprime(0), n.mprime(1), {{n.mdprime(0), n.mdprime(1)}}, R);
    auto g = detail::finish_grad(s.grad[0], s, lattice_tail(lambda, R, true));
    detail::check_result<Real>(g.g1.abs_error, opt);
    return g;
}

template <class Real>
ApproxValue<Real> jacobian_det(Char2 a, Char2 b, const SiegelPoint<Real>& tau, double eps)
{
    if (!is_odd(a) || !is_odd(b))
        throw std::invalid_argument("jacobian_det: characteristics must be odd");
    if (a == b)
        return ApproxValue<Real>{};
    auto ga = theta_gradient(a, tau, eps);
    auto gb = theta_gradient(b, tau, eps);
    ApproxValue<Real> d = ga.g1 * gb.g2 - ga.g2 * gb.g1;
    return scaled(d, Complex<Real>(Real(1) / (pi<Real>() * pi<Real>())));
}

template <class Real>
ApproxValue<Real> jacobian_det(OddPair n, const SiegelPoint<Real>& tau, double eps)
{
    return jacobian_det(kOdd[n.i], kOdd[n.j], tau, eps);
}

// Genus-1 theta constant sum_n exp(pi i (n + a/2)^2 t + pi i (n + a/2) b).
template <class Real>
ApproxValue<Real> theta_constant_g1(int a, int b, const Complex<Real>& t, double eps)
{
    if (!(t.im > 0))
        throw std::domain_error("Im tau is not positive");
    check_eps<Real>(eps);
    const double pi_d = 3.14159265358979323846;
    const double y = to_double(t.im);
    int R = 1;
    // two-sided geometric tail bound beyond |x| > R
    auto tail = [&](int r) { return 2 * std::exp(-pi_d * y * r * r) / (1 - std::exp(-2 * pi_d * y * r)); };
    while (tail(R) > eps / 2)
        ++R;
    Complex<Real> sum;
    Real abs_sum(0);
    for (int n = -R - 1; n <= R + 1; ++n) {
        const int twice = 2 * n + a;
        if (std::abs(twice) > 2 * R)
            continue;
        const Real x = Real(twice) / Real(2);
        Complex<Real> term = exp_pi_i(t * (x * x)).times_i_pow(int(detail::mod(Int(twice) * b, 4)));
        sum += term;
        abs_sum += term.abs1();
    }
    double round = 8 * unit_roundoff<Real>() * (4 + pi_d * to_double(t.abs()) * (R + 1) * (R + 1)) * to_double(abs_sum);
    return ApproxValue<Real>{sum, tail(R) + round};
}

// gamma . tau = (a tau + b)(c tau + d)^-1
template <class Real>
struct Mat2c {
    Complex<Real> e00, e01, e10, e11;

    Complex<Real> det() const { return e00 * e11 - e01 * e10; }
};

namespace detail {

template <class Real>
Mat2c<Real> affine(const Mat2i& x, const SiegelPoint<Real>& tau, const Mat2i& y)
{
    using C = Complex<Real>;
    auto r = [](Int v) { return C(Real(v)); };
    Mat2c<Real> m;
    m.e00 = r(x(0, 0)) * tau.t11 + r(x(0, 1)) * tau.t12 + r(y(0, 0));
    m.e01 = r(x(0, 0)) * tau.t12 + r(x(0, 1)) * tau.t22 + r(y(0, 1));
    m.e10 = r(x(1, 0)) * tau.t11 + r(x(1, 1)) * tau.t12 + r(y(1, 0));
    m.e11 = r(x(1, 0)) * tau.t12 + r(x(1, 1)) * tau.t22 + r(y(1, 1));
    return m;
}

} // namespace detail

template <class Real>
Complex<Real> det_c_tau_d(const SpMatrix& g, const SiegelPoint<Real>& tau)
{
    return detail::affine(g.c(), tau, g.d()).det();
}

template <class Real>
SiegelPoint<Real> act(const SpMatrix& g, const SiegelPoint<Real>& tau)
{
    using C = Complex<Real>;
    auto num = detail::affine(g.a(), tau, g.b());
    auto den = detail::affine(g.c(), tau, g.d());
    C dt = den.det();
    // inverse of den
    C i00 = den.e11 / dt, i01 = -den.e01 / dt, i10 = -den.e10 / dt, i11 = den.e00 / dt;
    C r00 = num.e00 * i00 + num.e01 * i10;
    C r01 = num.e00 * i01 + num.e01 * i11;
    C r10 = num.e10 * i00 + num.e11 * i10;
    C r11 = num.e10 * i01 + num.e11 * i11;
    C off = (r01 + r10) * Real(0.5);
    return SiegelPoint<Real>(r00, off, r11);
}

} // namespace siegel2
