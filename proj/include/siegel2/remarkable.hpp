#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/identities.hpp"
#include "siegel2/monomial.hpp"
#include "siegel2/sympl.hpp"

namespace siegel2 {

// Set of distinct Jacobian determinants, bit k = OddPair::from_index(k).
class PairSet {
public:
    constexpr PairSet() = default;
    constexpr explicit PairSet(std::uint16_t mask) : mask_(mask & 0x7FFF) {}
    PairSet(std::initializer_list<OddPair> pairs)
    {
        for (OddPair p : pairs)
            insert(p);
    }

    static PairSet from_pairs(const std::vector<OddPair>& pairs)
    {
        PairSet s;
        for (OddPair p : pairs)
            s.insert(p);
        return s;
    }

    constexpr std::uint16_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(OddPair p) const { return (mask_ >> p.index()) & 1; }
    void insert(OddPair p) { mask_ |= std::uint16_t(1u << p.index()); }

    friend constexpr bool operator==(PairSet, PairSet) = default;
    friend constexpr auto operator<=>(PairSet, PairSet) = default;
    friend constexpr PairSet operator-(PairSet a, PairSet b) { return PairSet(a.mask_ & ~b.mask_); }

    std::vector<OddPair> members() const
    {
        std::vector<OddPair> r;
        for (int k = 0; k < 15; ++k)
            if ((mask_ >> k) & 1)
                r.push_back(OddPair::from_index(k));
        return r;
    }

    // "D12*D34"
    std::string to_string() const
    {
        std::string s;
        for (OddPair p : members())
            s += (s.empty() ? "" : "*") + p.label();
        return s.empty() ? "1" : s;
    }

    // Accepts "D12*D34", "12,34" or "12 34".
    static PairSet parse(const std::string& text)
    {
        PairSet s;
        std::string digits;
        auto flush = [&] {
            if (digits.empty())
                return;
            if (digits.size() != 2)
                throw std::invalid_argument("bad determinant label in '" + text + "'");
            s.insert(OddPair::make(digits[0] - '1', digits[1] - '1'));
            digits.clear();
        };
        for (char ch : text) {
            if (ch >= '0' && ch <= '9')
                digits += ch;
            else if (ch == 'D' || ch == 'd' || ch == '*' || ch == ',' || ch == ' ')
                flush();
            else
                throw std::invalid_argument("bad character in determinant list '" + text + "'");
        }
        flush();
        return s;
    }

private:
    std::uint16_t mask_ = 0;
};

using SumVector = Char2;

// S(N) = n_i + n_j
inline SumVector s_vector(OddPair n) { return kOdd[n.i] + kOdd[n.j]; }

// "(1111)" in the order m'1 m'2 m''1 m''2
inline std::string to_string_plain(SumVector v)
{
    return "(" + std::to_string(v.mprime(0)) + std::to_string(v.mprime(1)) + std::to_string(v.mdprime(0)) +
           std::to_string(v.mdprime(1)) + ")";
}

inline SumVector s_sum(PairSet p)
{
    SumVector s;
    for (OddPair n : p.members())
        s = s + s_vector(n);
    return s;
}

// Sum of the even characteristics of the Jacobi quadruples, with multiplicity.
inline bool remarkable_by_evens(PairSet p)
{
    Char2 s;
    for (OddPair n : p.members())
        s = s + jacobi_quad(n).sum();
    return s == Char2();
}

inline bool is_remarkable(PairSet p)
{
    bool by_s = s_sum(p) == Char2();
    if (by_s != remarkable_by_evens(p))
        throw std::logic_error("remarkable-factor criteria disagree on " + p.to_string());
    return by_s;
}

// A remarkable factor with a proper nonempty remarkable sub-product.
inline bool is_reducible(PairSet p)
{
    if (!is_remarkable(p))
        return false;
    const std::uint16_t full = p.mask();
    for (std::uint16_t sub = (full - 1) & full; sub; sub = (sub - 1) & full)
        if (s_sum(PairSet(sub)) == Char2())
            return true;
    return false;
}

enum class FactorType { NotRemarkable, Reducible, Type1, Type2, Type3, Type4, Type5, Type6, Unmatched };

inline const char* to_string(FactorType t)
{
    switch (t) {
    case FactorType::NotRemarkable: return "not remarkable";
    case FactorType::Reducible: return "reducible";
    case FactorType::Type1: return "1";
    case FactorType::Type2: return "2";
    case FactorType::Type3: return "3";
    case FactorType::Type4: return "4";
    case FactorType::Type5: return "5";
    case FactorType::Type6: return "6";
    case FactorType::Unmatched: return "unmatched";
    }
    return "?";
}

namespace detail {

inline std::array<int, 6> degrees(PairSet p)
{
    std::array<int, 6> d{};
    for (OddPair n : p.members()) {
        ++d[n.i];
        ++d[n.j];
    }
    return d;
}

inline int count_degree(const std::array<int, 6>& d, int k)
{
    int c = 0;
    for (int x : d)
        c += x == k;
    return c;
}

// Graph pattern of a set of edges on the six odd characteristics.
inline FactorType match_pattern(PairSet p)
{
    auto d = degrees(p);
    const int e = p.size();
    const int d0 = count_degree(d, 0), d1 = count_degree(d, 1), d2 = count_degree(d, 2), d3 = count_degree(d, 3),
              d5 = count_degree(d, 5);
    // with every vertex of degree 2 the edges form a single cycle when e <= 5
    if (e == 3 && d2 == 3 && d0 == 3)
        return FactorType::Type1;
    if (e == 3 && d1 == 6)
        return FactorType::Type2;
    if (e == 4 && d2 == 4 && d0 == 2)
        return FactorType::Type3;
    if (e == 4 && d3 == 1 && d1 == 5)
        return FactorType::Type4;
    if (e == 5 && d2 == 5 && d0 == 1)
        return FactorType::Type5;
    if (e == 5 && d3 == 2 && d1 == 4) {
        // two adjacent centres of degree 3
        int a = -1, b = -1;
        for (int v = 0; v < 6; ++v)
            if (d[v] == 3)
                (a < 0 ? a : b) = v;
        if (p.contains(OddPair::make(a, b)))
            return FactorType::Type6;
    }
    // star on all six characteristics: the two centres of the type-6 pattern coincide
    if (e == 5 && d5 == 1 && d1 == 5)
        return FactorType::Type6;
    return FactorType::Unmatched;
}

} // namespace detail

inline FactorType classify_nonreducible(PairSet p)
{
    if (p.empty() || !is_remarkable(p))
        return FactorType::NotRemarkable;
    if (is_reducible(p))
        return FactorType::Reducible;
    return detail::match_pattern(p);
}

// P = chi5^h * prod theta_m^(2 e_m), up to the product of Jacobi signs.
struct ThetaFactor {
    int h = 0;
    std::array<int, 10> square_exp{};  // e_m

    Monomial monomial() const
    {
        Monomial m;
        for (int i = 0; i < 10; ++i)
            m.theta[i] = 2 * square_exp[i] + h;
        return m;
    }
};

// Iterated F(M_i)F(M_j) = F(M_i xor M_j) prod_{M_i cap M_j} theta^2 over the Jacobi quadruples.
inline ThetaFactor factor_as_theta_monomial(PairSet p)
{
    if (!is_remarkable(p))
        throw std::invalid_argument(p.to_string() + " is not a remarkable factor");
    CharSet cur;
    ThetaFactor f;
    for (OddPair n : p.members()) {
        CharSet q = jacobi_quad(n);
        for (int m : (cur & q).members())
            ++f.square_exp[m];
        cur = cur ^ q;
    }
    if (cur.empty())
        f.h = 0;
    else if (cur == CharSet::all())
        f.h = 1;
    else
        throw std::logic_error("F-map reduction of " + p.to_string() + " ends at " + cur.to_string());
    return f;
}

// N tN == h [[0,1],[1,0]] mod 2 for the 4 x 2h matrix of odd characteristics.
inline bool modular_gamma_2_4(PairSet p)
{
    std::array<std::array<int, 4>, 4> a{};
    for (OddPair n : p.members())
        for (Char2 c : {kOdd[n.i], kOdd[n.j]}) {
            int v[4] = {c.mprime(0), c.mprime(1), c.mdprime(0), c.mdprime(1)};
            for (int r = 0; r < 4; ++r)
                for (int s = 0; s < 4; ++s)
                    a[r][s] ^= v[r] & v[s];
        }
    const int h = p.size() & 1;
    for (int r = 0; r < 4; ++r)
        for (int s = 0; s < 4; ++s) {
            int expect = (s == (r + 2) % 4) ? h : 0;
            if (a[r][s] != expect)
                return false;
        }
    return true;
}

// kappa^(2h) prod chi_N == 1 on the nine G basis matrices.
inline bool modular_by_characters(PairSet p)
{
    for (const auto& g : g_basis()) {
        int v = p.size() % 2 ? kappa_squared(g).sign() : 1;
        for (OddPair n : p.members())
            v *= chi_pair(g, n);
        if (v != 1)
            return false;
    }
    return true;
}

inline std::vector<PairSet> pair_subsets_of_size(int k)
{
    std::vector<PairSet> r;
    for (std::uint32_t m = 1; m < (1u << 15); ++m)
        if (std::popcount(m) == k)
            r.push_back(PairSet(std::uint16_t(m)));
    return r;
}

} // namespace siegel2
