#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "siegel2/spmatrix.hpp"

namespace siegel2 {

// Genus-2 theta characteristic m = (m', m'') over Z/2.
// Packed as bits (m'1, m'2, m''1, m''2) from most to least significant.
class Char2 {
public:
    constexpr Char2() = default;
    constexpr explicit Char2(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 15u)) {}
    constexpr Char2(int p1, int p2, int q1, int q2)
        : bits_(static_cast<std::uint8_t>(((p1 & 1) << 3) | ((p2 & 1) << 2) | ((q1 & 1) << 1) | (q2 & 1)))
    {}

    constexpr unsigned bits() const { return bits_; }
    constexpr int mprime(int i) const { return (bits_ >> (3 - i)) & 1; }
    constexpr int mdprime(int i) const { return (bits_ >> (1 - i)) & 1; }

    friend constexpr Char2 operator+(Char2 x, Char2 y) { return Char2(x.bits_ ^ y.bits_); }
    friend constexpr bool operator==(Char2, Char2) = default;
    friend constexpr auto operator<=>(Char2, Char2) = default;

    // "ab|cd" with a b = m', c d = m''.
    std::string to_string() const
    {
        std::string s = "00|00";
        s[0] = char('0' + mprime(0));
        s[1] = char('0' + mprime(1));
        s[3] = char('0' + mdprime(0));
        s[4] = char('0' + mdprime(1));
        return s;
    }

    static Char2 parse(std::string_view text)
    {
        std::string digits;
        for (char ch : text) {
            if (ch == '0' || ch == '1')
                digits.push_back(ch);
            else if (ch != '|' && ch != ' ' && ch != ';' && ch != ',')
                throw std::invalid_argument("characteristic: unexpected character in '" + std::string(text) + "'");
        }
        if (digits.size() != 4)
            throw std::invalid_argument("characteristic: expected 4 bits in '" + std::string(text) + "'");
        return Char2(digits[0] - '0', digits[1] - '0', digits[2] - '0', digits[3] - '0');
    }

private:
    std::uint8_t bits_ = 0;
};

// (-1)^(m'.m'')
constexpr int parity(Char2 m)
{
    return ((m.mprime(0) * m.mdprime(0) + m.mprime(1) * m.mdprime(1)) & 1) ? -1 : 1;
}

constexpr bool is_even(Char2 m) { return parity(m) == 1; }
constexpr bool is_odd(Char2 m) { return parity(m) == -1; }

// m(1)..m(10), stored 0-based.
inline constexpr std::array<Char2, 10> kEven = {
    Char2(0, 0, 0, 0), Char2(0, 0, 0, 1), Char2(0, 0, 1, 0), Char2(0, 0, 1, 1), Char2(0, 1, 0, 0),
    Char2(1, 0, 0, 0), Char2(1, 1, 0, 0), Char2(0, 1, 1, 0), Char2(1, 0, 0, 1), Char2(1, 1, 1, 1),
};

// n(1)..n(6), stored 0-based.
inline constexpr std::array<Char2, 6> kOdd = {
    Char2(0, 1, 0, 1), Char2(1, 0, 1, 0), Char2(0, 1, 1, 1),
    Char2(1, 0, 1, 1), Char2(1, 1, 0, 1), Char2(1, 1, 1, 0),
};

inline std::optional<int> even_index(Char2 m)
{
    for (int i = 0; i < 10; ++i)
        if (kEven[i] == m)
            return i;
    return std::nullopt;
}

inline std::optional<int> odd_index(Char2 m)
{
    for (int i = 0; i < 6; ++i)
        if (kOdd[i] == m)
            return i;
    return std::nullopt;
}

// Integer characteristic, used for the symplectic action before reduction mod 2.
struct IntChar {
    std::array<Int, 2> mp{};
    std::array<Int, 2> mpp{};

    Char2 reduced() const
    {
        return Char2(int(detail::mod(mp[0], 2)), int(detail::mod(mp[1], 2)),
                     int(detail::mod(mpp[0], 2)), int(detail::mod(mpp[1], 2)));
    }

    static IntChar from(Char2 m) { return IntChar{{m.mprime(0), m.mprime(1)}, {m.mdprime(0), m.mdprime(1)}}; }
};

// gamma.m before reduction:
//   m' -> d m' - c m'' + diag(c td),  m'' -> -b m' + a m'' + diag(a tb)
inline IntChar char_action_integer(const SpMatrix& g, Char2 m)
{
    Mat2i a = g.a(), b = g.b(), c = g.c(), d = g.d();
    Mat2i ctd = c * d.transposed(), atb = a * b.transposed();
    IntChar r;
    for (int i = 0; i < 2; ++i) {
        r.mp[i] = d(i, 0) * m.mprime(0) + d(i, 1) * m.mprime(1) - c(i, 0) * m.mdprime(0) - c(i, 1) * m.mdprime(1) + ctd(i, i);
        r.mpp[i] = -b(i, 0) * m.mprime(0) - b(i, 1) * m.mprime(1) + a(i, 0) * m.mdprime(0) + a(i, 1) * m.mdprime(1) + atb(i, i);
    }
    return r;
}

inline Char2 char_action(const SpMatrix& g, Char2 m) { return char_action_integer(g, m).reduced(); }

inline Char2 char_action(const Mat4i& g, Char2 m) { return char_action(SpMatrix(g), m); }

// Subset of the ten even characteristics; bit i stands for m(i+1).
class CharSet {
public:
    constexpr CharSet() = default;
    constexpr explicit CharSet(std::uint16_t mask) : mask_(mask & 0x3FF) {}
    CharSet(std::initializer_list<int> indices)
    {
        for (int i : indices)
            insert(i);
    }

    static CharSet from_indices(const std::vector<int>& indices)
    {
        CharSet s;
        for (int i : indices)
            s.insert(i);
        return s;
    }

    static CharSet from_chars(const std::vector<Char2>& chars)
    {
        CharSet s;
        for (Char2 m : chars) {
            auto i = even_index(m);
            if (!i)
                throw std::invalid_argument("characteristic " + m.to_string() + " is odd");
            s.insert(*i);
        }
        return s;
    }

    static constexpr CharSet all() { return CharSet(0x3FF); }

    constexpr std::uint16_t mask() const { return mask_; }
    constexpr int size() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(int i) const { return (mask_ >> i) & 1; }
    constexpr bool contains(CharSet o) const { return (mask_ & o.mask_) == o.mask_; }

    void insert(int i)
    {
        if (i < 0 || i >= 10)
            throw std::out_of_range("even characteristic index out of range");
        mask_ |= std::uint16_t(1u << i);
    }
    void erase(int i) { mask_ &= std::uint16_t(~(1u << i)); }

    constexpr CharSet complement() const { return CharSet(std::uint16_t(~mask_ & 0x3FF)); }

    friend constexpr CharSet operator|(CharSet x, CharSet y) { return CharSet(x.mask_ | y.mask_); }
    friend constexpr CharSet operator&(CharSet x, CharSet y) { return CharSet(x.mask_ & y.mask_); }
    friend constexpr CharSet operator^(CharSet x, CharSet y) { return CharSet(x.mask_ ^ y.mask_); }
    friend constexpr CharSet operator-(CharSet x, CharSet y) { return CharSet(x.mask_ & ~y.mask_); }
    friend constexpr bool operator==(CharSet, CharSet) = default;
    friend constexpr auto operator<=>(CharSet, CharSet) = default;

    std::vector<int> members() const
    {
        std::vector<int> r;
        for (int i = 0; i < 10; ++i)
            if (contains(i))
                r.push_back(i);
        return r;
    }

    // Sum of the member characteristics.
    Char2 sum() const
    {
        Char2 s;
        for (int i : members())
            s = s + kEven[i];
        return s;
    }

    // Sorted 1-based list, e.g. "{2,3,5,6}".
    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (int i : members()) {
            s += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
        return s + "}";
    }

    std::vector<int> one_based() const
    {
        std::vector<int> r;
        for (int i : members())
            r.push_back(i + 1);
        return r;
    }

    // Accepts "2,3,5,6", "{2 3 5 6}" (1-based).
    static CharSet parse(std::string_view text)
    {
        std::string s(text);
        for (char& ch : s)
            if (ch == ',' || ch == '{' || ch == '}' || ch == '[' || ch == ']')
                ch = ' ';
        std::istringstream is(s);
        CharSet r;
        int v;
        while (is >> v) {
            if (v < 1 || v > 10)
                throw std::invalid_argument("even index must be in 1..10");
            if (r.contains(v - 1))
                throw std::invalid_argument("repeated even index");
            r.insert(v - 1);
        }
        if (!is.eof())
            throw std::invalid_argument("set: non-integer entry");
        return r;
    }

private:
    std::uint16_t mask_ = 0;
};

inline CharSet char_action(const SpMatrix& g, CharSet s)
{
    CharSet r;
    for (int i : s.members())
        r.insert(*even_index(char_action(g, kEven[i])));
    return r;
}

// All subsets of {0..9} of size k, in increasing mask order.
inline std::vector<CharSet> subsets_of_size(int k)
{
    std::vector<CharSet> r;
    for (unsigned m = 0; m < 1024; ++m)
        if (std::popcount(m) == k)
            r.push_back(CharSet(std::uint16_t(m)));
    return r;
}

inline std::vector<CharSet> subsets_of(CharSet s, int k)
{
    std::vector<CharSet> r;
    for (unsigned m = 0; m < 1024; ++m)
        if (std::popcount(m) == k && (m & ~unsigned(s.mask())) == 0)
            r.push_back(CharSet(std::uint16_t(m)));
    return r;
}

enum class OrbitClass {
    C2,
    C3Minus, C3Plus,
    C4Minus, C4Plus, C4Star,
    C5Minus, C5Plus, C5Star,
    C6Minus, C6Plus, C6Star,
    C7Minus, C7Plus,
    C8,
    Unclassified,
};

inline const char* to_string(OrbitClass c)
{
    switch (c) {
    case OrbitClass::C2: return "C2";
    case OrbitClass::C3Minus: return "C3minus";
    case OrbitClass::C3Plus: return "C3plus";
    case OrbitClass::C4Minus: return "C4minus";
    case OrbitClass::C4Plus: return "C4plus";
    case OrbitClass::C4Star: return "C4star";
    case OrbitClass::C5Minus: return "C5minus";
    case OrbitClass::C5Plus: return "C5plus";
    case OrbitClass::C5Star: return "C5star";
    case OrbitClass::C6Minus: return "C6minus";
    case OrbitClass::C6Plus: return "C6plus";
    case OrbitClass::C6Star: return "C6star";
    case OrbitClass::C7Minus: return "C7minus";
    case OrbitClass::C7Plus: return "C7plus";
    case OrbitClass::C8: return "C8";
    case OrbitClass::Unclassified: return "Unclassified";
    }
    return "?";
}

namespace detail {

inline bool triple_minus(CharSet t) { return is_odd(t.sum()); }

inline OrbitClass classify_small(CharSet s)
{
    switch (s.size()) {
    case 2:
        return OrbitClass::C2;
    case 3:
        return triple_minus(s) ? OrbitClass::C3Minus : OrbitClass::C3Plus;
    case 4: {
        int minus = 0;
        for (CharSet t : subsets_of(s, 3))
            minus += triple_minus(t);
        if (minus == 4)
            return OrbitClass::C4Minus;
        if (minus == 0)
            return OrbitClass::C4Plus;
        return OrbitClass::C4Star;
    }
    case 5: {
        int minus = 0, plus = 0;
        for (CharSet q : subsets_of(s, 4)) {
            OrbitClass c = classify_small(q);
            minus += c == OrbitClass::C4Minus;
            plus += c == OrbitClass::C4Plus;
        }
        if (minus == 1 && plus == 0)
            return OrbitClass::C5Minus;
        if (plus == 1 && minus == 0)
            return OrbitClass::C5Plus;
        if (minus == 0 && plus == 0)
            return OrbitClass::C5Star;
        return OrbitClass::Unclassified;
    }
    default:
        return OrbitClass::Unclassified;
    }
}

} // namespace detail

inline OrbitClass classify_set(CharSet s)
{
    int k = s.size();
    if (k < 2 || k > 8)
        return OrbitClass::Unclassified;
    if (k <= 5)
        return detail::classify_small(s);
    OrbitClass c = detail::classify_small(s.complement());
    switch (k) {
    case 6:
        if (c == OrbitClass::C4Plus)
            return OrbitClass::C6Minus;
        if (c == OrbitClass::C4Minus)
            return OrbitClass::C6Plus;
        return c == OrbitClass::C4Star ? OrbitClass::C6Star : OrbitClass::Unclassified;
    case 7:
        return c == OrbitClass::C3Plus ? OrbitClass::C7Minus : OrbitClass::C7Plus;
    default:
        return OrbitClass::C8;
    }
}

inline OrbitClass classify_chars(const std::vector<Char2>& chars)
{
    for (Char2 m : chars)
        if (!is_even(m))
            throw std::invalid_argument("classify_set: odd characteristic " + m.to_string());
    CharSet s = CharSet::from_chars(chars);
    if (s.size() != int(chars.size()))
        throw std::invalid_argument("classify_set: repeated characteristic");
    return classify_set(s);
}

inline std::map<OrbitClass, int> orbit_census(int max_size = 6)
{
    std::map<OrbitClass, int> counts;
    for (int k = 2; k <= max_size; ++k)
        for (CharSet s : subsets_of_size(k))
            ++counts[classify_set(s)];
    return counts;
}

// Elements of one orbit class among all subsets, ascending by mask.
inline std::vector<CharSet> orbit_members(OrbitClass c)
{
    std::vector<CharSet> r;
    for (unsigned m = 0; m < 1024; ++m)
        if (classify_set(CharSet(std::uint16_t(m))) == c)
            r.push_back(CharSet(std::uint16_t(m)));
    return r;
}

// Unique even index n with s + {n} in C4minus (C4plus) for s in C3minus (C3plus).
inline int complete_to_c4(CharSet s)
{
    OrbitClass c = classify_set(s);
    if (s.size() != 3 || (c != OrbitClass::C3Minus && c != OrbitClass::C3Plus))
        throw std::invalid_argument("complete_to_c4: input is not a classified triple");
    OrbitClass target = c == OrbitClass::C3Minus ? OrbitClass::C4Minus : OrbitClass::C4Plus;
    int found = -1;
    for (int n : s.complement().members()) {
        CharSet q = s;
        q.insert(n);
        if (classify_set(q) == target) {
            if (found >= 0)
                throw std::logic_error("complete_to_c4: completion is not unique");
            found = n;
        }
    }
    if (found < 0)
        throw std::logic_error("complete_to_c4: no completion");
    return found;
}

// Unordered pair of distinct odd characteristics, 0-based with i < j.
struct OddPair {
    int i = 0;
    int j = 1;

    friend constexpr bool operator==(OddPair, OddPair) = default;
    friend constexpr auto operator<=>(OddPair, OddPair) = default;

    // 0..14 in lexicographic order 12, 13, ..., 56.
    constexpr int index() const { return i * (11 - i) / 2 + (j - i - 1); }

    static constexpr OddPair from_index(int k)
    {
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                if (OddPair{a, b}.index() == k)
                    return OddPair{a, b};
        return OddPair{};
    }

    static OddPair make(int a, int b)
    {
        if (a == b || a < 0 || b < 0 || a > 5 || b > 5)
            throw std::invalid_argument("odd pair needs two distinct indices in 1..6");
        return a < b ? OddPair{a, b} : OddPair{b, a};
    }

    // "D12" style label, 1-based.
    std::string label() const { return "D" + std::to_string(i + 1) + std::to_string(j + 1); }
};

inline std::array<OddPair, 15> all_odd_pairs()
{
    std::array<OddPair, 15> r;
    for (int k = 0; k < 15; ++k)
        r[k] = OddPair::from_index(k);
    return r;
}

// Row order of the S(N) table: D12 D13 D23 D14 D24 D15 D25 D16 D26 D34 D35 D36 D45 D46 D56.
inline constexpr std::array<OddPair, 15> kTable2Order = {
    OddPair{0, 1}, OddPair{0, 2}, OddPair{1, 2}, OddPair{0, 3}, OddPair{1, 3},
    OddPair{0, 4}, OddPair{1, 4}, OddPair{0, 5}, OddPair{1, 5}, OddPair{2, 3},
    OddPair{2, 4}, OddPair{2, 5}, OddPair{3, 4}, OddPair{3, 5}, OddPair{4, 5},
};

} // namespace siegel2
