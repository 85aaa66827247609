#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/float128.hpp>

namespace siegel2 {

using Quad = boost::multiprecision::float128;
using Bin50 = boost::multiprecision::cpp_bin_float_50;
using Bin100 = boost::multiprecision::cpp_bin_float_100;

template <class Real>
inline Real pi()
{
    return boost::math::constants::pi<Real>();
}

template <class Real>
inline double unit_roundoff()
{
    return static_cast<double>(std::numeric_limits<Real>::epsilon());
}

template <class Real>
inline double to_double(const Real& x)
{
    return static_cast<double>(x);
}

// Minimal complex value over an arbitrary real backend.
template <class Real>
struct Complex {
    Real re{0};
    Real im{0};

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    static Complex from(std::complex<double> z) { return Complex(Real(z.real()), Real(z.imag())); }

    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o)
    {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator*(Complex a, const Real& s)
    {
        a.re *= s;
        a.im *= s;
        return a;
    }
    friend Complex operator*(const Real& s, Complex a) { return a * s; }
    Complex operator-() const { return Complex(-re, -im); }

    friend Complex operator/(const Complex& a, const Complex& b)
    {
        Real n = b.re * b.re + b.im * b.im;
        return Complex((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
    }

    Complex conj() const { return Complex(re, -im); }
    Real norm() const { return re * re + im * im; }
    Real abs() const
    {
        using std::sqrt;
        return sqrt(norm());
    }
    // |re| + |im|, an upper bound for abs() within a factor sqrt(2)
    Real abs1() const
    {
        using std::abs;
        return abs(re) + abs(im);
    }

    // Multiply by i^k.
    Complex times_i_pow(int k) const
    {
        switch (k & 3) {
        case 0: return *this;
        case 1: return Complex(-im, re);
        case 2: return Complex(-re, -im);
        default: return Complex(im, -re);
        }
    }

    std::complex<double> to_std() const { return {to_double(re), to_double(im)}; }
};

template <class Real>
inline Complex<Real> cexp(const Complex<Real>& z)
{
    using std::cos;
    using std::exp;
    using std::sin;
    Real m = exp(z.re);
    return Complex<Real>(m * cos(z.im), m * sin(z.im));
}

// exp(pi i z)
template <class Real>
inline Complex<Real> exp_pi_i(const Complex<Real>& z)
{
    return cexp(Complex<Real>(-z.im * pi<Real>(), z.re * pi<Real>()));
}

template <class Real>
inline Complex<Real> csqrt(const Complex<Real>& z)
{
    using std::sqrt;
    Real r = z.abs();
    Real a = sqrt((r + z.re) / 2);
    Real b = sqrt((r - z.re) / 2);
    return Complex<Real>(a, z.im < 0 ? Real(-b) : b);
}

enum class Backend { Double, Quad, Bin50, Bin100 };

inline const char* to_string(Backend b)
{
    switch (b) {
    case Backend::Double: return "double";
    case Backend::Quad: return "float128";
    case Backend::Bin50: return "cpp_bin_float_50";
    case Backend::Bin100: return "cpp_bin_float_100";
    }
    return "?";
}

// Smallest backend that carries at least the requested decimal digits.
inline Backend backend_for_digits(int digits)
{
    if (digits <= 0)
        throw std::invalid_argument("digits must be positive");
    if (digits <= 15)
        return Backend::Double;
    if (digits <= 33)
        return Backend::Quad;
    if (digits <= 50)
        return Backend::Bin50;
    if (digits <= 100)
        return Backend::Bin100;
    throw std::invalid_argument("at most 100 digits are supported");
}

template <class T>
struct RealTag {
    using type = T;
};

// Calls f(RealTag<Real>{}) for the backend selected by digits.
template <class F>
decltype(auto) with_backend(int digits, F&& f)
{
    switch (backend_for_digits(digits)) {
    case Backend::Double: return f(RealTag<double>{});
    case Backend::Quad: return f(RealTag<Quad>{});
    case Backend::Bin50: return f(RealTag<Bin50>{});
    default: return f(RealTag<Bin100>{});
    }
}

} // namespace siegel2
