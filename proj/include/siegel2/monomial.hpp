#pragma once

#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/theta.hpp"

namespace siegel2 {

// coeff * prod theta_i^theta[i] * prod D_k^det[k]; D indices in lexicographic pair order.
struct Monomial {
    long long coeff = 1;
    std::array<int, 10> theta{};
    std::array<int, 15> det{};

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Twice the weight: each theta has weight 1/2, each D weight 2.
    int twice_weight() const
    {
        return std::accumulate(theta.begin(), theta.end(), 0) + 4 * std::accumulate(det.begin(), det.end(), 0);
    }

    bool same_variables(const Monomial& o) const { return theta == o.theta && det == o.det; }

    Monomial times(const Monomial& o) const
    {
        Monomial r;
        r.coeff = coeff * o.coeff;
        for (int i = 0; i < 10; ++i)
            r.theta[i] = theta[i] + o.theta[i];
        for (int k = 0; k < 15; ++k)
            r.det[k] = det[k] + o.det[k];
        return r;
    }

    Monomial negated() const
    {
        Monomial r = *this;
        r.coeff = -coeff;
        return r;
    }

    static Monomial theta_power(int i, int e)
    {
        Monomial m;
        m.theta[i] = e;
        return m;
    }

    static Monomial det_power(OddPair n, int e)
    {
        Monomial m;
        m.det[n.index()] = e;
        return m;
    }

    static Monomial of_set(CharSet s, int e = 1)
    {
        Monomial m;
        for (int i : s.members())
            m.theta[i] = e;
        return m;
    }

    // chi5 = theta_1 ... theta_10
    static Monomial chi5() { return of_set(CharSet::all()); }

    // "+1*t2^2*t3^2*D12"
    std::string to_string() const
    {
        std::string s = (coeff >= 0 ? "+" : "") + std::to_string(coeff);
        for (int i = 0; i < 10; ++i)
            if (theta[i])
                s += "*t" + std::to_string(i + 1) + (theta[i] > 1 ? "^" + std::to_string(theta[i]) : "");
        for (int k = 0; k < 15; ++k)
            if (det[k])
                s += "*" + OddPair::from_index(k).label() + (det[k] > 1 ? "^" + std::to_string(det[k]) : "");
        return s;
    }
};

enum class Family { R2, R4, rb1, rb2, rb3, rb4, rb5, rb6, rb7, rb8, rc1, rc2, rc3, rc4, rc5 };

inline const char* to_string(Family f)
{
    static const char* names[] = {"R2", "R4", "rb1", "rb2", "rb3", "rb4", "rb5", "rb6",
                                  "rb7", "rb8", "rc1", "rc2", "rc3", "rc4", "rc5"};
    return names[int(f)];
}

inline Family parse_family(const std::string& s)
{
    for (int f = 0; f <= int(Family::rc5); ++f)
        if (s == to_string(Family(f)))
            return Family(f);
    throw std::invalid_argument("unknown relation family '" + s + "'");
}

// Indexing object of a relation: a set of evens, a list of determinants, or both.
struct RelationKey {
    CharSet evens;
    std::vector<OddPair> pairs;
    std::string extra;

    std::string label() const
    {
        std::string s;
        if (!evens.empty())
            s += evens.to_string();
        if (!pairs.empty()) {
            s += s.empty() ? "" : " ";
            for (std::size_t k = 0; k < pairs.size(); ++k)
                s += (k ? "*" : "") + pairs[k].label();
        }
        if (!extra.empty())
            s += (s.empty() ? "" : " ") + extra;
        return s;
    }
};

// sum of terms = 0
struct Relation {
    Family family = Family::R2;
    RelationKey key;
    std::vector<Monomial> terms;
    std::string note;

    bool homogeneous() const
    {
        for (const auto& t : terms)
            if (t.twice_weight() != terms.front().twice_weight())
                return false;
        return true;
    }

    std::string to_string() const
    {
        std::string s;
        for (const auto& t : terms)
            s += t.to_string() + " ";
        return s + "= 0";
    }
};

// Theta constants and determinants at one point, with error bounds.
template <class Real>
struct FormValues {
    std::array<ApproxValue<Real>, 10> theta;
    std::array<ApproxValue<Real>, 15> det;

    static FormValues from(const ThetaSnapshot<Real>& s)
    {
        FormValues v;
        for (int i = 0; i < 10; ++i)
            v.theta[i] = s.even(i);
        for (int k = 0; k < 15; ++k)
            v.det[k] = s.det(OddPair::from_index(k));
        return v;
    }
};

template <class Real>
ApproxValue<Real> evaluate(const Monomial& m, const FormValues<Real>& v)
{
    ApproxValue<Real> r{Complex<Real>(Real(m.coeff)), 0};
    for (int i = 0; i < 10; ++i)
        for (int e = 0; e < m.theta[i]; ++e)
            r = r * v.theta[i];
    for (int k = 0; k < 15; ++k)
        for (int e = 0; e < m.det[k]; ++e)
            r = r * v.det[k];
    return r;
}

template <class Real>
ApproxValue<Real> evaluate(const std::vector<Monomial>& terms, const FormValues<Real>& v)
{
    ApproxValue<Real> r{};
    for (const auto& t : terms)
        r = r + evaluate(t, v);
    return r;
}

struct Residual {
    double residual = 0;
    double budget = 0;
    double scale = 0;  // largest term magnitude

    bool pass() const { return residual <= budget; }
};

template <class Real>
Residual residual(const std::vector<Monomial>& terms, const FormValues<Real>& v)
{
    Residual r;
    ApproxValue<Real> sum{};
    for (const auto& t : terms) {
        auto x = evaluate(t, v);
        r.scale = std::max(r.scale, x.magnitude());
        sum = sum + x;
    }
    r.residual = sum.magnitude();
    r.budget = sum.abs_error;
    return r;
}

} // namespace siegel2
