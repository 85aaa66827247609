#pragma once

#include <array>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siegel2 {

using Int = std::int64_t;

namespace detail {

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix product");
    return r;
}

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix product");
    return r;
}

// Mathematical mod, result in [0, n).
inline Int mod(Int a, Int n)
{
    Int r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace detail

struct Mat2i {
    std::array<Int, 4> e{};

    constexpr Int operator()(int i, int j) const { return e[2 * i + j]; }
    constexpr Int& operator()(int i, int j) { return e[2 * i + j]; }

    friend constexpr bool operator==(const Mat2i&, const Mat2i&) = default;

    static constexpr Mat2i identity() { return Mat2i{{1, 0, 0, 1}}; }

    constexpr Mat2i transposed() const { return Mat2i{{e[0], e[2], e[1], e[3]}}; }
    constexpr Int trace() const { return e[0] + e[3]; }
};

inline Mat2i operator*(const Mat2i& x, const Mat2i& y)
{
    Mat2i r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r(i, j) = detail::checked_add(detail::checked_mul(x(i, 0), y(0, j)),
                                          detail::checked_mul(x(i, 1), y(1, j)));
    return r;
}

// Plain 4x4 integer matrix, row major.
struct Mat4i {
    std::array<Int, 16> e{};

    constexpr Int operator()(int i, int j) const { return e[4 * i + j]; }
    constexpr Int& operator()(int i, int j) { return e[4 * i + j]; }

    friend constexpr bool operator==(const Mat4i&, const Mat4i&) = default;

    static constexpr Mat4i identity()
    {
        Mat4i m;
        for (int i = 0; i < 4; ++i)
            m(i, i) = 1;
        return m;
    }

    static constexpr Mat4i J()
    {
        Mat4i m;
        m(0, 2) = 1;
        m(1, 3) = 1;
        m(2, 0) = -1;
        m(3, 1) = -1;
        return m;
    }

    static constexpr Mat4i from_blocks(const Mat2i& a, const Mat2i& b, const Mat2i& c, const Mat2i& d)
    {
        Mat4i m;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                m(i, j) = a(i, j);
                m(i, j + 2) = b(i, j);
                m(i + 2, j) = c(i, j);
                m(i + 2, j + 2) = d(i, j);
            }
        return m;
    }

    constexpr Mat2i block(int bi, int bj) const
    {
        Mat2i r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r(i, j) = (*this)(2 * bi + i, 2 * bj + j);
        return r;
    }

    constexpr Mat4i transposed() const
    {
        Mat4i r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                r(i, j) = (*this)(j, i);
        return r;
    }

    constexpr Mat4i operator-() const
    {
        Mat4i r;
        for (int k = 0; k < 16; ++k)
            r.e[k] = -e[k];
        return r;
    }
};

inline Mat4i operator*(const Mat4i& x, const Mat4i& y)
{
    Mat4i r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int s = 0;
            for (int k = 0; k < 4; ++k)
                s = detail::checked_add(s, detail::checked_mul(x(i, k), y(k, j)));
            r(i, j) = s;
        }
    return r;
}

inline bool is_symplectic(const Mat4i& m)
{
    return m.transposed() * Mat4i::J() * m == Mat4i::J();
}

inline std::string to_string(const Mat4i& m)
{
    std::ostringstream os;
    for (int k = 0; k < 16; ++k)
        os << (k ? " " : "") << m.e[k];
    return os.str();
}

// Reads 16 integers separated by whitespace or commas, row major.
inline Mat4i parse_mat4(std::string_view text)
{
    std::string s(text);
    for (char& ch : s)
        if (ch == ',' || ch == ';' || ch == '[' || ch == ']')
            ch = ' ';
    std::istringstream is(s);
    Mat4i m;
    int k = 0;
    long long v;
    while (is >> v) {
        if (k == 16)
            throw std::invalid_argument("matrix: more than 16 entries");
        m.e[k++] = v;
    }
    if (!is.eof())
        throw std::invalid_argument("matrix: non-integer entry");
    if (k != 16)
        throw std::invalid_argument("matrix: expected 16 integers, got " + std::to_string(k));
    return m;
}

// A 4x4 integer matrix known to satisfy tM J M = J.
class SpMatrix {
public:
    SpMatrix() : m_(Mat4i::identity()) {}

    explicit SpMatrix(const Mat4i& m) : m_(m)
    {
        if (!is_symplectic(m))
            throw std::invalid_argument("matrix is not symplectic: " + to_string(m));
    }

    static SpMatrix identity() { return SpMatrix(); }
    static SpMatrix J() { return SpMatrix(Mat4i::J(), Unchecked{}); }
    static SpMatrix minus_identity() { return SpMatrix(-Mat4i::identity(), Unchecked{}); }

    // [[1, s], [0, 1]] for symmetric s.
    static SpMatrix translation(const Mat2i& s)
    {
        return SpMatrix(Mat4i::from_blocks(Mat2i::identity(), s, Mat2i{}, Mat2i::identity()));
    }

    // [[u, 0], [0, u^-T]] for u in GL(2, Z).
    static SpMatrix gl_embedding(const Mat2i& u)
    {
        Int det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
        if (det != 1 && det != -1)
            throw std::invalid_argument("gl_embedding: matrix not in GL(2,Z)");
        // u^-T = (1/det) [[u11, -u10], [-u01, u00]]
        Mat2i inv_t{{det * u(1, 1), -det * u(1, 0), -det * u(0, 1), det * u(0, 0)}};
        return SpMatrix(Mat4i::from_blocks(u, Mat2i{}, Mat2i{}, inv_t));
    }

    const Mat4i& mat() const { return m_; }
    Int operator()(int i, int j) const { return m_(i, j); }

    Mat2i a() const { return m_.block(0, 0); }
    Mat2i b() const { return m_.block(0, 1); }
    Mat2i c() const { return m_.block(1, 0); }
    Mat2i d() const { return m_.block(1, 1); }

    // Symplectic inverse [[tD, -tB], [-tC, tA]].
    SpMatrix inverse() const
    {
        Mat2i na = b().transposed(), nc = c().transposed();
        for (auto& v : na.e)
            v = -v;
        for (auto& v : nc.e)
            v = -v;
        return SpMatrix(Mat4i::from_blocks(d().transposed(), na, nc, a().transposed()), Unchecked{});
    }

    SpMatrix operator-() const { return SpMatrix(-m_, Unchecked{}); }

    friend SpMatrix operator*(const SpMatrix& x, const SpMatrix& y)
    {
        return SpMatrix(x.m_ * y.m_, Unchecked{});
    }

    friend bool operator==(const SpMatrix& x, const SpMatrix& y) { return x.m_ == y.m_; }

    SpMatrix pow(int k) const
    {
        SpMatrix base = k < 0 ? inverse() : *this;
        SpMatrix r;
        for (int i = 0; i < (k < 0 ? -k : k); ++i)
            r = r * base;
        return r;
    }

private:
    struct Unchecked {};
    SpMatrix(const Mat4i& m, Unchecked) : m_(m) {}

    Mat4i m_;
};

inline std::string to_string(const SpMatrix& g) { return to_string(g.mat()); }

} // namespace siegel2
