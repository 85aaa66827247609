#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/gf2.hpp"
#include "siegel2/spmatrix.hpp"

namespace siegel2 {

struct CongruenceFlags {
    bool level_n = false;          // Gamma(n)
    bool level_n_2n = false;       // Gamma(n, 2n)
    bool level_n_2n_4n = false;    // Gamma(n, 2n, 4n)
};

namespace detail {

inline bool congruent_to_identity(const Mat4i& m, Int n)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (mod(m(i, j) - (i == j ? 1 : 0), n) != 0)
                return false;
    return true;
}

inline bool theta_condition(const SpMatrix& g, Int n)
{
    Mat2i atb = g.a() * g.b().transposed();
    Mat2i ctd = g.c() * g.d().transposed();
    for (int i = 0; i < 2; ++i)
        if (mod(atb(i, i), 2 * n) != 0 || mod(ctd(i, i), 2 * n) != 0)
            return false;
    return true;
}

inline bool in_level(const SpMatrix& g, Int n)
{
    return congruent_to_identity(g.mat(), n) && theta_condition(g, n);
}

} // namespace detail

inline CongruenceFlags congruence_level(const SpMatrix& g, int n)
{
    if (n <= 0)
        throw std::invalid_argument("congruence_level: n must be positive");
    CongruenceFlags f;
    f.level_n = detail::congruent_to_identity(g.mat(), n);
    f.level_n_2n = f.level_n && detail::theta_condition(g, n);
    // Gamma_g(n,2n,4n) = { g in Gamma_g(2n,4n) : Tr(a) = g mod n }, genus g = 2
    f.level_n_2n_4n = detail::in_level(g, 2 * Int(n)) && detail::mod(g.a().trace() - 2, n) == 0;
    return f;
}

inline bool in_gamma_2(const SpMatrix& g) { return detail::congruent_to_identity(g.mat(), 2); }
inline bool in_gamma_2_4(const SpMatrix& g) { return detail::in_level(g, 2); }
inline bool in_gamma_4_8(const SpMatrix& g) { return detail::in_level(g, 4); }
inline bool in_pm_gamma_4_8(const SpMatrix& g) { return in_gamma_4_8(g) || in_gamma_4_8(-g); }

// Basis of G = Gamma(2,4)/{+-Gamma(4,8)}, order A11 A12 A21 B12 B2_11 B2_22 C12 C2_11 C2_22.
inline const std::array<SpMatrix, 9>& g_basis()
{
    static const std::array<SpMatrix, 9> basis = [] {
        auto mk = [](std::array<Int, 16> e) { return SpMatrix(Mat4i{e}); };
        return std::array<SpMatrix, 9>{
            mk({-1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 0, 1}),
            mk({1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -2, 1}),
            mk({1, 0, 0, 0, 2, 1, 0, 0, 0, 0, 1, -2, 0, 0, 0, 1}),
            mk({1, 0, 0, 2, 0, 1, 2, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
            mk({1, 0, 4, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}),
            mk({1, 0, 0, 0, 0, 1, 0, 4, 0, 0, 1, 0, 0, 0, 0, 1}),
            mk({1, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 2, 0, 0, 1}),
            mk({1, 0, 0, 0, 0, 1, 0, 0, 4, 0, 1, 0, 0, 0, 0, 1}),
            mk({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 4, 0, 1}),
        };
    }();
    return basis;
}

inline constexpr std::array<const char*, 9> kBasisNames = {
    "A11", "A12", "A21", "B12", "B2_11", "B2_22", "C12", "C2_11", "C2_22",
};

// Class in G as coordinates over the basis; bit i is the exponent of basis element i.
struct GVector {
    std::uint16_t bits = 0;

    constexpr bool operator[](int i) const { return (bits >> i) & 1; }
    friend constexpr bool operator==(GVector, GVector) = default;
    friend constexpr GVector operator+(GVector x, GVector y) { return GVector{std::uint16_t(x.bits ^ y.bits)}; }

    std::string to_string() const
    {
        std::string s;
        for (int i = 0; i < 9; ++i)
            s.push_back((*this)[i] ? '1' : '0');
        return s;
    }
};

// Product basis_0^e0 * ... * basis_8^e8.
inline SpMatrix g_representative(GVector v)
{
    SpMatrix r;
    for (int i = 0; i < 9; ++i)
        if (v[i])
            r = r * g_basis()[i];
    return r;
}

inline const std::array<SpMatrix, 512>& g_representatives()
{
    static const std::array<SpMatrix, 512> reps = [] {
        std::array<SpMatrix, 512> r;
        for (unsigned v = 0; v < 512; ++v)
            r[v] = g_representative(GVector{std::uint16_t(v)});
        return r;
    }();
    return reps;
}

inline GVector g_coordinates(const SpMatrix& g)
{
    if (!in_gamma_2_4(g))
        throw std::invalid_argument("g_coordinates: matrix is not in Gamma(2,4)");
    const auto& reps = g_representatives();
    for (unsigned v = 0; v < 512; ++v)
        if (in_pm_gamma_4_8(g * reps[v].inverse()))
            return GVector{std::uint16_t(v)};
    throw std::logic_error("g_coordinates: no coset representative found");
}

// i^k, k in 0..3.
struct QuarterTurn {
    int k = 0;

    friend constexpr bool operator==(QuarterTurn, QuarterTurn) = default;

    int sign() const
    {
        if (k % 2)
            throw std::domain_error("fourth root of unity is not real");
        return k == 0 ? 1 : -1;
    }
};

// kappa^2 = i^Tr(a - 1) on Gamma(2).
inline QuarterTurn kappa_squared(const SpMatrix& g)
{
    if (!in_gamma_2(g))
        throw std::invalid_argument("kappa_squared: matrix is not in Gamma(2)");
    return QuarterTurn{int(detail::mod(g.a().trace() - 2, 4))};
}

namespace detail {

inline Int quad(const std::array<Int, 2>& x, const Mat2i& m, const std::array<Int, 2>& y)
{
    Int s = 0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            s += x[i] * m(i, j) * y[j];
    return s;
}

// 8 phi_m(gamma) as an exact integer.
inline Int eight_phi(const SpMatrix& g, Char2 m)
{
    std::array<Int, 2> p{m.mprime(0), m.mprime(1)}, q{m.mdprime(0), m.mdprime(1)};
    Mat2i a = g.a(), b = g.b(), c = g.c(), d = g.d();
    Mat2i btd = b.transposed() * d, atc = a.transposed() * c, btc = b.transposed() * c;
    Int first = quad(p, btd, p) + quad(q, atc, q) - 2 * quad(p, btc, q);
    Mat2i atb = a * b.transposed();
    Int second = 0;
    for (int i = 0; i < 2; ++i) {
        Int v = d(i, 0) * p[0] + d(i, 1) * p[1] - c(i, 0) * q[0] - c(i, 1) * q[1];
        second += atb(i, i) * v;
    }
    return -first - 2 * second;
}

} // namespace detail

// chi_m on Gamma(2,4): e^{2 pi i phi_m(gamma)} times the sign (-1)^{m'.n''} that
// reduces theta_{gamma m} = theta_{m + 2n} back to theta_m.
inline int chi_m(const SpMatrix& g, Char2 m)
{
    if (!in_gamma_2_4(g))
        throw std::invalid_argument("chi_m: matrix is not in Gamma(2,4)");
    Int t = detail::eight_phi(g, m);
    if (detail::mod(t, 4) != 0)
        throw std::domain_error("chi_m: phi_m is not a multiple of 1/2");
    IntChar gm = char_action_integer(g, m);
    Int red = 0;
    for (int i = 0; i < 2; ++i) {
        Int r = detail::mod(gm.mpp[i], 2);
        Int n = (gm.mpp[i] - r) / 2;
        red += detail::mod(gm.mp[i], 2) * n;
    }
    return detail::mod(t / 4 + red, 2) ? -1 : 1;
}

inline int chi_pair(const SpMatrix& g, OddPair n) { return chi_m(g, kOdd[n.i]) * chi_m(g, kOdd[n.j]); }

inline int chi_pair(const SpMatrix& g, Char2 n1, Char2 n2)
{
    if (!is_odd(n1) || !is_odd(n2) || n1 == n2)
        throw std::invalid_argument("chi_pair: need two distinct odd characteristics");
    return chi_m(g, n1) * chi_m(g, n2);
}

using CharacterTable = std::array<std::array<int, 9>, 15>;

inline CharacterTable character_table()
{
    CharacterTable t;
    for (int r = 0; r < 15; ++r)
        for (int c = 0; c < 9; ++c)
            t[r][c] = chi_pair(g_basis()[c], OddPair::from_index(r));
    return t;
}

inline int character_table_gf2_rank(const CharacterTable& t)
{
    std::vector<std::uint64_t> rows;
    for (const auto& row : t) {
        std::uint64_t bits = 0;
        for (int c = 0; c < 9; ++c)
            if (row[c] == -1)
                bits |= std::uint64_t(1) << c;
        rows.push_back(bits);
    }
    return gf2::rank(rows);
}

inline bool in_Gamma(const SpMatrix& g)
{
    if (!in_gamma_2_4(g))
        return false;
    for (int k = 0; k < 15; ++k)
        if (chi_pair(g, OddPair::from_index(k)) != 1)
            return false;
    return true;
}

// Generators of Gamma over Gamma(4,8).
inline const std::array<SpMatrix, 4>& gamma_generators()
{
    static const std::array<SpMatrix, 4> gens = {
        SpMatrix(Mat4i{{1, 2, 4, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 4, -2, 1}}),
        SpMatrix(Mat4i{{1, 0, 0, 0, 2, 1, 0, 4, 4, 0, 1, -2, 0, 0, 0, 1}}),
        SpMatrix(Mat4i{{1, 0, 4, 2, 0, 1, 2, 4, 0, 0, 1, 0, 0, 0, 0, 1}}),
        SpMatrix(Mat4i{{1, 0, 0, 0, 0, 1, 0, 0, 4, 2, 1, 0, 2, 4, 0, 1}}),
    };
    return gens;
}

inline constexpr std::array<const char*, 4> kGammaGeneratorNames = {
    "A12*B2_11*C2_22", "A21*B2_22*C2_11", "B12*B2_11*B2_22", "C12*C2_11*C2_22",
};

// Odd pairs whose characters multiply to kappa^2 on G.
inline std::vector<OddPair> kappa_squared_witness()
{
    std::vector<std::uint64_t> cols;
    for (int k = 0; k < 15; ++k) {
        std::uint64_t bits = 0;
        for (int c = 0; c < 9; ++c)
            if (chi_pair(g_basis()[c], OddPair::from_index(k)) == -1)
                bits |= std::uint64_t(1) << c;
        cols.push_back(bits);
    }
    std::uint64_t target = 0;
    for (int c = 0; c < 9; ++c)
        if (kappa_squared(g_basis()[c]).sign() == -1)
            target |= std::uint64_t(1) << c;
    auto sol = gf2::solve(cols, target);
    if (!sol)
        throw std::logic_error("kappa^2 is not in the span of the chi_N");
    std::vector<OddPair> r;
    for (int k = 0; k < 15; ++k)
        if ((*sol >> k) & 1)
            r.push_back(OddPair::from_index(k));
    return r;
}

// Smallest k <= bound with g^k = 1, or nullopt.
inline std::optional<int> order_check(const SpMatrix& g, int bound = 12)
{
    SpMatrix p = g;
    for (int k = 1; k <= bound; ++k) {
        if (p == SpMatrix::identity())
            return k;
        p = p * g;
    }
    return std::nullopt;
}

// Random elements built as words in fixed generating sets.
class WordSampler {
public:
    explicit WordSampler(std::uint64_t seed) : rng_(seed) {}

    // Word in J, translations by symmetric integer matrices and GL(2,Z) embeddings.
    SpMatrix modular_word(int length)
    {
        static const std::vector<SpMatrix> letters = [] {
            std::vector<SpMatrix> g = {
                SpMatrix::J(),
                SpMatrix::translation(Mat2i{{1, 0, 0, 0}}),
                SpMatrix::translation(Mat2i{{0, 0, 0, 1}}),
                SpMatrix::translation(Mat2i{{0, 1, 1, 0}}),
                SpMatrix::gl_embedding(Mat2i{{0, 1, 1, 0}}),
                SpMatrix::gl_embedding(Mat2i{{1, 1, 0, 1}}),
                SpMatrix::gl_embedding(Mat2i{{-1, 0, 0, 1}}),
            };
            std::size_t n = g.size();
            for (std::size_t i = 0; i < n; ++i)
                g.push_back(g[i].inverse());
            return g;
        }();
        return word(letters, length);
    }

    // Word in the G basis, their inverses and -1.
    SpMatrix level_2_4_word(int length)
    {
        static const std::vector<SpMatrix> letters = [] {
            std::vector<SpMatrix> g(g_basis().begin(), g_basis().end());
            for (const auto& b : g_basis())
                g.push_back(b.inverse());
            g.push_back(SpMatrix::minus_identity());
            return g;
        }();
        return word(letters, length);
    }

    // Element of Gamma(4,8): conjugated squares of Gamma(2,4) words.
    SpMatrix level_4_8_element()
    {
        SpMatrix r;
        for (int k = 0; k < 2; ++k) {
            SpMatrix x = level_2_4_word(2);
            SpMatrix d = modular_word(uniform(0, 1));
            r = r * d.inverse() * x * x * d;
        }
        if (!in_gamma_4_8(r))
            throw std::logic_error("level_4_8_element: sample left Gamma(4,8)");
        return r;
    }

    // Word in the Gamma generators and their inverses, optionally times a Gamma(4,8) element.
    SpMatrix gamma_word(int length, bool with_level_4_8 = false)
    {
        static const std::vector<SpMatrix> letters = [] {
            std::vector<SpMatrix> g(gamma_generators().begin(), gamma_generators().end());
            for (const auto& x : gamma_generators())
                g.push_back(x.inverse());
            return g;
        }();
        SpMatrix w = word(letters, length);
        return with_level_4_8 ? w * level_4_8_element() : w;
    }

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    std::mt19937_64& rng() { return rng_; }

private:
    SpMatrix word(const std::vector<SpMatrix>& letters, int length)
    {
        SpMatrix r;
        for (int i = 0; i < length; ++i)
            r = r * letters[std::size_t(uniform(0, int(letters.size()) - 1))];
        return r;
    }

    std::mt19937_64 rng_;
};

struct NormalityReport {
    int conjugators = 0;
    int checks = 0;
    int failures = 0;
    std::string first_failure;
};

// gamma^-1 eta gamma stays in Gamma for every generator eta.
inline NormalityReport verify_normality(int sample_size, std::uint64_t seed, int word_length = 6)
{
    WordSampler ws(seed);
    NormalityReport rep;
    std::vector<SpMatrix> conj = {SpMatrix::identity(), SpMatrix::J()};
    for (int s = 0; s < sample_size; ++s)
        conj.push_back(ws.modular_word(word_length));
    for (const auto& g : conj) {
        ++rep.conjugators;
        for (const auto& eta : gamma_generators()) {
            ++rep.checks;
            if (!in_Gamma(g.inverse() * eta * g)) {
                if (rep.failures++ == 0)
                    rep.first_failure = to_string(g);
            }
        }
    }
    return rep;
}

} // namespace siegel2
