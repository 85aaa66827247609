#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/monomial.hpp"
#include "siegel2/tables.hpp"

namespace siegel2 {

// D(n_i, n_j) = printed_sign * prod_{m in quad} theta_m
struct JacobiIdentity {
    OddPair pair;
    CharSet quad;
    int printed_sign = 1;
};

inline const std::array<JacobiIdentity, 15>& jacobi_table()
{
    static const std::array<JacobiIdentity, 15> table = [] {
        std::array<JacobiIdentity, 15> t;
        for (const auto& e : tables::kJacobi) {
            OddPair p{e.i - 1, e.j - 1};
            CharSet q;
            for (int m : e.evens)
                q.insert(m - 1);
            t[p.index()] = JacobiIdentity{p, q, e.sign};
        }
        return t;
    }();
    return table;
}

inline CharSet jacobi_quad(OddPair n) { return jacobi_table()[n.index()].quad; }

inline OddPair jacobi_pair(CharSet quad)
{
    for (const auto& e : jacobi_table())
        if (e.quad == quad)
            return e.pair;
    throw std::invalid_argument("no Jacobian determinant for " + quad.to_string());
}

// Transcribed biquadratic relations, keyed by their support.
inline std::vector<Relation> printed_biquadratic()
{
    std::vector<Relation> out;
    for (const auto& rel : tables::kBiquadratic) {
        Relation r;
        r.family = Family::R2;
        for (const auto& t : rel) {
            Monomial m;
            m.coeff = t.coeff;
            m.theta[t.a - 1] = 2;
            m.theta[t.b - 1] = 2;
            r.terms.push_back(m);
            r.key.evens.insert(t.a - 1);
            r.key.evens.insert(t.b - 1);
        }
        out.push_back(r);
    }
    return out;
}

inline std::vector<Relation> printed_quartic()
{
    std::vector<Relation> out;
    for (const auto& rel : tables::kQuartic) {
        Relation r;
        r.family = Family::R4;
        for (const auto& t : rel) {
            Monomial m;
            m.coeff = t.coeff;
            m.theta[t.a - 1] = 4;
            r.terms.push_back(m);
            r.key.evens.insert(t.a - 1);
        }
        out.push_back(r);
    }
    return out;
}

} // namespace siegel2
