#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "siegel2/chars.hpp"
#include "siegel2/gf2.hpp"
#include "siegel2/identities.hpp"
#include "siegel2/monomial.hpp"
#include "siegel2/remarkable.hpp"
#include "siegel2/tables.hpp"
#include "siegel2/theta.hpp"

namespace siegel2 {

struct Certification {
    int points = 0;
    double max_residual = 0;
    double max_budget = 0;   // budget at the point of the worst residual/budget ratio
    double max_scale = 0;
    bool pass = true;
};

struct CertifiedRelation {
    Relation relation;
    Certification cert;
};

// Theta data at seeded random points: 5 for sign search, 10 for certification.
template <class Real>
class Certifier {
public:
    explicit Certifier(std::uint64_t seed = 1, double eps = 1e-14, int search_points = 5, int cert_points = 10)
        : seed_(seed), eps_(eps)
    {
        std::mt19937_64 rng(seed);
        for (int k = 0; k < search_points + cert_points; ++k) {
            auto tau = random_tau<Real>(rng);
            auto v = FormValues<Real>::from(evaluate_snapshot(tau, EvalOptions{eps}));
            (k < search_points ? search_ : cert_).push_back(v);
            taus_.push_back(tau);
        }
    }

    std::uint64_t seed() const { return seed_; }
    double eps() const { return eps_; }
    const std::vector<FormValues<Real>>& search_values() const { return search_; }
    const std::vector<FormValues<Real>>& cert_values() const { return cert_; }
    const std::vector<SiegelPoint<Real>>& points() const { return taus_; }

    static bool holds_at(const std::vector<Monomial>& terms, const std::vector<FormValues<Real>>& vals)
    {
        for (const auto& v : vals)
            if (!residual(terms, v).pass())
                return false;
        return true;
    }

    // All sign vectors (first term +1) under which the terms vanish at every search point.
    std::vector<std::vector<Monomial>> sign_solutions(const std::vector<Monomial>& terms) const
    {
        std::vector<std::vector<Monomial>> out;
        const int n = int(terms.size());
        for (std::uint32_t s = 0; s < (1u << (n - 1)); ++s) {
            auto t = terms;
            t[0].coeff = std::abs(t[0].coeff);
            for (int k = 1; k < n; ++k)
                t[k].coeff = ((s >> (k - 1)) & 1) ? -std::abs(t[k].coeff) : std::abs(t[k].coeff);
            if (holds_at(t, search_))
                out.push_back(t);
        }
        return out;
    }

    std::vector<Monomial> resolve_signs(const std::vector<Monomial>& terms, const std::string& what) const
    {
        auto sols = sign_solutions(terms);
        if (sols.size() != 1)
            throw std::logic_error("sign search for " + what + " found " + std::to_string(sols.size()) +
                                   " solutions");
        return sols.front();
    }

    Certification certify(const std::vector<Monomial>& terms) const
    {
        Certification c;
        double worst = -1;
        for (const auto& v : cert_) {
            auto r = residual(terms, v);
            ++c.points;
            c.pass = c.pass && r.pass();
            c.max_residual = std::max(c.max_residual, r.residual);
            c.max_scale = std::max(c.max_scale, r.scale);
            double ratio = r.budget > 0 ? r.residual / r.budget : 0;
            if (ratio > worst) {
                worst = ratio;
                c.max_budget = r.budget;
            }
        }
        return c;
    }

    CertifiedRelation certified(Relation r) const
    {
        auto c = certify(r.terms);
        return CertifiedRelation{std::move(r), c};
    }

private:
    std::uint64_t seed_;
    double eps_;
    std::vector<FormValues<Real>> search_, cert_;
    std::vector<SiegelPoint<Real>> taus_;
};

// Sign of D(N) / prod theta over its Jacobi quadruple, read off at one point.
template <class Real>
std::array<int, 15> computed_jacobi_signs(const FormValues<Real>& v)
{
    std::array<int, 15> s{};
    for (int k = 0; k < 15; ++k) {
        Complex<Real> p(Real(1));
        for (int m : jacobi_quad(OddPair::from_index(k)).members())
            p = p * v.theta[m].value;
        s[k] = to_double((v.det[k].value * p.conj()).re) >= 0 ? 1 : -1;
    }
    return s;
}

// Replaces every D(N) by sign_N prod_{m in M} theta_m.
inline std::vector<Monomial> substitute_jacobi(const std::vector<Monomial>& terms, const std::array<int, 15>& signs)
{
    std::vector<Monomial> out;
    for (const auto& t : terms) {
        Monomial m;
        m.coeff = t.coeff;
        m.theta = t.theta;
        for (int k = 0; k < 15; ++k)
            for (int e = 0; e < t.det[k]; ++e) {
                m.coeff *= signs[k];
                for (int i : jacobi_quad(OddPair::from_index(k)).members())
                    ++m.theta[i];
            }
        out.push_back(m);
    }
    return out;
}

namespace detail {

inline Monomial det_product(const std::vector<CharSet>& quads, int exponent = 1)
{
    Monomial m;
    for (CharSet q : quads)
        m.det[jacobi_pair(q).index()] += exponent;
    return m;
}

inline Monomial det_monomial(std::initializer_list<std::pair<CharSet, int>> factors)
{
    Monomial m;
    for (auto [q, e] : factors)
        m.det[jacobi_pair(q).index()] += e;
    return m;
}

inline std::vector<CharSet> quads_containing(CharSet s)
{
    static const std::vector<CharSet> c4m = orbit_members(OrbitClass::C4Minus);
    std::vector<CharSet> r;
    for (CharSet q : c4m)
        if (q.contains(s))
            r.push_back(q);
    return r;
}

inline CharSet single(int m) { return CharSet{m}; }

inline std::array<int, 10> quartic_vector(const std::array<tables::QuarticTerm, 4>& rel)
{
    std::array<int, 10> v{};
    for (const auto& t : rel)
        v[t.a - 1] = t.coeff;
    return v;
}

inline std::string key_m(int m) { return "m=" + std::to_string(m + 1); }

} // namespace detail

// Transcribed biquadratic relations; entries failing certification are sign-resolved on the
// same three monomials and flagged.
template <class Real>
std::vector<CertifiedRelation> r2_catalog(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (auto r : printed_biquadratic()) {
        auto cert = c.certify(r.terms);
        if (!cert.pass) {
            auto fixed = c.resolve_signs(r.terms, "R2 " + r.key.label());
            if (fixed.front().coeff != r.terms.front().coeff)
                for (auto& t : fixed)
                    t.coeff = -t.coeff;
            r.note = "printed sign corrected: " + r.to_string();
            r.terms = fixed;
            cert = c.certify(r.terms);
        }
        out.push_back({r, cert});
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> r4_catalog(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (auto& r : printed_quartic())
        out.push_back(c.certified(r));
    return out;
}

// The three squared pairs (a, b) of the biquadratic relation supported on M.
inline std::vector<std::pair<int, int>> r2_pairing(const Relation& r2)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& t : r2.terms) {
        std::vector<int> idx;
        for (int i = 0; i < 10; ++i)
            if (t.theta[i])
                idx.push_back(i);
        out.push_back({idx.at(0), idx.at(1)});
    }
    return out;
}

// Quartic relation supported on Q: the {-1,0,1} combination of the five listed quartics with
// fewest nonzero coefficients, normalized so the smallest member has coefficient +1.
inline std::optional<Relation> derived_quartic(CharSet q)
{
    std::vector<std::array<int, 10>> vecs;
    for (const auto& rel : tables::kQuartic)
        vecs.push_back(detail::quartic_vector(rel));
    std::optional<std::array<int, 10>> best;
    int best_nonzero = 99;
    std::array<int, 5> coef{};
    for (int code = 0; code < 243; ++code) {
        int x = code, nz = 0;
        for (int k = 4; k >= 0; --k) {
            coef[k] = x % 3 - 1;
            x /= 3;
            nz += coef[k] != 0;
        }
        std::array<int, 10> v{};
        for (int k = 0; k < 5; ++k)
            for (int i = 0; i < 10; ++i)
                v[i] += coef[k] * vecs[k][i];
        bool ok = true;
        for (int i = 0; i < 10 && ok; ++i)
            ok = q.contains(i) ? std::abs(v[i]) == 1 : v[i] == 0;
        if (ok && nz < best_nonzero) {
            best = v;
            best_nonzero = nz;
        }
    }
    if (!best)
        return std::nullopt;
    int lead = (*best)[q.members().front()];
    Relation r;
    r.family = Family::R4;
    r.key.evens = q;
    for (int i : q.members())
        r.terms.push_back([&] {
            Monomial m = Monomial::theta_power(i, 4);
            m.coeff = (*best)[i] * lead;
            return m;
        }());
    r.note = "derived from the listed quartics";
    return r;
}

// One quartic relation per C4- element: the listed one where available, else derived.
template <class Real>
std::vector<CertifiedRelation> quartic_per_c4minus(const Certifier<Real>& c)
{
    auto listed = r4_catalog(c);
    std::vector<CertifiedRelation> out;
    for (CharSet q : orbit_members(OrbitClass::C4Minus)) {
        auto it = std::find_if(listed.begin(), listed.end(),
                               [&](const CertifiedRelation& e) { return e.relation.key.evens == q; });
        if (it != listed.end()) {
            out.push_back(*it);
            continue;
        }
        auto d = derived_quartic(q);
        if (!d)
            throw std::logic_error("no quartic relation derivable on " + q.to_string());
        out.push_back(c.certified(*d));
    }
    return out;
}

// For m in Q: the two C4- quadruples through m with symmetric difference Q^c.
inline std::vector<std::pair<CharSet, CharSet>> rb5_pairs(CharSet q)
{
    std::vector<std::pair<CharSet, CharSet>> out;
    for (int m : q.members()) {
        auto qs = detail::quads_containing(detail::single(m));
        std::vector<std::pair<CharSet, CharSet>> found;
        for (std::size_t a = 0; a < qs.size(); ++a)
            for (std::size_t b = a + 1; b < qs.size(); ++b)
                if ((qs[a] ^ qs[b]) == q.complement())
                    found.push_back({qs[a], qs[b]});
        if (found.size() != 1)
            throw std::logic_error("rb5 structure: " + std::to_string(found.size()) + " pairs through m" +
                                   std::to_string(m + 1));
        out.push_back(found.front());
    }
    return out;
}

namespace detail {

template <class Real>
std::vector<CertifiedRelation> rb1(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (int m = 0; m < 10; ++m) {
        auto qs = quads_containing(single(m));
        std::optional<std::pair<std::vector<CharSet>, std::vector<CharSet>>> split;
        int splits = 0;
        for (std::size_t a = 0; a < qs.size(); ++a)
            for (std::size_t b = a + 1; b < qs.size(); ++b)
                for (std::size_t d = b + 1; d < qs.size(); ++d) {
                    if (a != 0)
                        continue;  // unordered split: the first triple holds qs[0]
                    CharSet x = qs[a], y = qs[b], z = qs[d];
                    if ((x & y & z) != single(m) || (x & y).size() != 1 || (x & z).size() != 1 ||
                        (y & z).size() != 1)
                        continue;
                    std::vector<CharSet> rest;
                    for (std::size_t k = 0; k < qs.size(); ++k)
                        if (k != a && k != b && k != d)
                            rest.push_back(qs[k]);
                    if ((rest[0] & rest[1] & rest[2]) != single(m))
                        continue;
                    ++splits;
                    split = {{x, y, z}, rest};
                }
        if (splits != 1)
            throw std::logic_error("rb1 structure at " + key_m(m));
        Relation r;
        r.family = Family::rb1;
        r.key.evens = single(m);
        r.key.extra = key_m(m);
        r.terms = c.resolve_signs({det_product(split->first), det_product(split->second)}, "rb1 " + key_m(m));
        out.push_back(c.certified(r));
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> rb2(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (CharSet mm : orbit_members(OrbitClass::C6Plus)) {
        std::vector<CharSet> ts;
        for (CharSet q : orbit_members(OrbitClass::C4Minus))
            if ((q & mm).size() == 3)
                ts.push_back(q);
        if (ts.size() != 8)
            throw std::logic_error("rb2 structure: " + std::to_string(ts.size()) + " quadruples meet " +
                                   mm.to_string() + " in a triple");
        auto multiset = [](const std::vector<CharSet>& g) {
            std::array<int, 10> cnt{};
            for (CharSet q : g)
                for (int i : q.members())
                    ++cnt[i];
            return cnt;
        };
        std::vector<std::pair<std::vector<CharSet>, std::vector<CharSet>>> splits;
        for (std::uint32_t sel = 0; sel < 256; ++sel) {
            if (std::popcount(sel) != 4 || !(sel & 1))
                continue;
            std::vector<CharSet> g1, g2;
            for (int k = 0; k < 8; ++k)
                ((sel >> k) & 1 ? g1 : g2).push_back(ts[k]);
            if (multiset(g1) == multiset(g2))
                splits.push_back({g1, g2});
        }
        if (splits.size() != 1)
            throw std::logic_error("rb2 structure at " + mm.to_string());
        Relation r;
        r.family = Family::rb2;
        r.key.evens = mm;
        r.terms = c.resolve_signs({det_product(splits[0].first), det_product(splits[0].second)},
                                  "rb2 " + mm.to_string());
        out.push_back(c.certified(r));
    }
    return out;
}

inline const Relation& r2_for(const std::vector<CertifiedRelation>& r2, CharSet support)
{
    for (const auto& e : r2)
        if (e.relation.key.evens == support)
            return e.relation;
    throw std::logic_error("no biquadratic relation on " + support.to_string());
}

template <class Real>
std::vector<CertifiedRelation> rb3(const Certifier<Real>& c, const std::vector<CertifiedRelation>& r2)
{
    std::vector<CertifiedRelation> out;
    for (CharSet mm : orbit_members(OrbitClass::C6Plus)) {
        std::vector<Monomial> terms;
        for (auto [a, b] : r2_pairing(r2_for(r2, mm))) {
            auto qs = quads_containing(CharSet{a, b});
            if (qs.size() != 2)
                throw std::logic_error("rb3 structure at " + mm.to_string());
            terms.push_back(det_product(qs));
        }
        Relation r;
        r.family = Family::rb3;
        r.key.evens = mm;
        r.terms = c.resolve_signs(terms, "rb3 " + mm.to_string());
        out.push_back(c.certified(r));
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> rb4(const Certifier<Real>& c, const std::vector<CertifiedRelation>& r2)
{
    std::vector<CertifiedRelation> out;
    for (CharSet mm : orbit_members(OrbitClass::C6Plus)) {
        const CharSet mc = mm.complement();
        const auto pairing = r2_pairing(r2_for(r2, mm));
        for (int s : mc.members()) {
            std::vector<Monomial> terms;
            for (auto [a, b] : pairing) {
                std::vector<CharSet> sq;
                for (CharSet q : quads_containing(CharSet{a, b}))
                    if (!q.contains(s))
                        sq.push_back(q);
                CharSet miss = (mc - single(s)) - sq.at(0);
                if (sq.size() != 1 || miss.size() != 1)
                    throw std::logic_error("rb4 structure at " + mm.to_string());
                int rr = miss.members().front();
                std::vector<CharSet> mult;
                for (CharSet q : quads_containing(single(rr)))
                    if ((q & mm).size() == 3)
                        mult.push_back(q);
                if (mult.size() != 2)
                    throw std::logic_error("rb4 multiplier structure at " + mm.to_string());
                terms.push_back(det_monomial({{sq[0], 2}, {mult[0], 1}, {mult[1], 1}}));
            }
            Relation r;
            r.family = Family::rb4;
            r.key.evens = mm;
            r.key.extra = "s=" + std::to_string(s + 1);
            r.terms = c.resolve_signs(terms, "rb4 " + r.key.label());
            out.push_back(c.certified(r));
        }
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> rb5(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (CharSet q : orbit_members(OrbitClass::C4Minus)) {
        std::vector<Monomial> terms;
        for (auto [a, b] : rb5_pairs(q))
            terms.push_back(det_monomial({{a, 2}, {b, 2}}));
        Relation r;
        r.family = Family::rb5;
        r.key.evens = q;
        r.terms = c.resolve_signs(terms, "rb5 " + q.to_string());
        out.push_back(c.certified(r));
    }
    return out;
}

// Which member of each rb5 pair carries the cube: rb6 fixes it by the smaller C6+ set over the
// first three members of Q, rb7 is the complementary labelling.
template <class Real>
std::vector<CertifiedRelation> rb67(const Certifier<Real>& c, bool complement)
{
    std::vector<CertifiedRelation> out;
    for (CharSet q : orbit_members(OrbitClass::C4Minus)) {
        auto pp = rb5_pairs(q);
        auto mem = q.members();
        CharSet triple{mem[0], mem[1], mem[2]};
        std::optional<CharSet> mt;
        for (CharSet m6 : orbit_members(OrbitClass::C6Plus))
            if (m6.contains(triple) && (!mt || m6.one_based() < mt->one_based()))
                mt = m6;
        if (!mt)
            throw std::logic_error("rb6 structure at " + q.to_string());
        const CharSet t4 = *mt - triple;
        // cube in the m4 term: the quadruple equal to {m4} + T4
        auto [a4, b4] = pp[3];
        const bool flip4 = (b4 - single(mem[3])) != t4;
        if ((flip4 ? a4 : b4) - single(mem[3]) != t4)
            throw std::logic_error("rb6 labelling at " + q.to_string());
        std::vector<std::vector<Monomial>> found;
        for (int lab = 0; lab < 8; ++lab) {
            std::vector<Monomial> terms;
            for (int i = 0; i < 4; ++i) {
                bool flip = i == 3 ? flip4 : ((lab >> i) & 1);
                if (complement)
                    flip = !flip;
                auto [x, y] = pp[i];
                if (flip)
                    std::swap(x, y);
                terms.push_back(det_monomial({{x, 1}, {y, 3}}));
            }
            for (auto& s : c.sign_solutions(terms))
                found.push_back(s);
        }
        if (found.size() != 1)
            throw std::logic_error("rb6/rb7 search at " + q.to_string() + " found " + std::to_string(found.size()));
        Relation r;
        r.family = complement ? Family::rb7 : Family::rb6;
        r.key.evens = q;
        r.terms = found.front();
        out.push_back(c.certified(r));
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> rb8(const Certifier<Real>& c)
{
    std::vector<CertifiedRelation> out;
    for (int m = 0; m < 10; ++m) {
        std::vector<Monomial> terms;
        for (CharSet q : quads_containing(single(m)))
            terms.push_back(det_monomial({{q, 4}}));
        Relation r;
        r.family = Family::rb8;
        r.key.evens = single(m);
        r.key.extra = key_m(m);
        r.terms = c.resolve_signs(terms, "rb8 " + key_m(m));
        out.push_back(c.certified(r));
    }
    return out;
}

template <class Real>
CertifiedRelation rc_relation(const Certifier<Real>& c, Family f, PairSet p)
{
    Monomial lhs;
    for (OddPair n : p.members())
        lhs.det[n.index()] = 1;
    Relation r;
    r.family = f;
    r.key.pairs = p.members();
    r.terms = c.resolve_signs({lhs, factor_as_theta_monomial(p).monomial()}, std::string(to_string(f)) + " " + p.to_string());
    return c.certified(r);
}

// Two edge-disjoint triangles.
inline bool two_triangles(PairSet p)
{
    if (p.size() != 6)
        return false;
    for (PairSet t : pair_subsets_of_size(3))
        if ((t.mask() & p.mask()) == t.mask() && detail::match_pattern(t) == FactorType::Type1 &&
            detail::match_pattern(p - t) == FactorType::Type1)
            return true;
    return false;
}

} // namespace detail

// Structural candidates for the rc families with two or more determinants.
inline std::vector<PairSet> rc_candidates(Family f)
{
    std::vector<PairSet> out;
    auto pick = [&](int size, FactorType type) {
        for (PairSet p : pair_subsets_of_size(size))
            if (classify_nonreducible(p) == type && modular_gamma_2_4(p))
                out.push_back(p);
    };
    switch (f) {
    case Family::rc2: pick(3, FactorType::Type2); break;
    case Family::rc3: pick(4, FactorType::Type3); break;
    case Family::rc4: pick(5, FactorType::Type6); break;
    case Family::rc5:
        for (PairSet p : pair_subsets_of_size(6))
            if (is_remarkable(p) && detail::two_triangles(p))
                out.push_back(p);
        break;
    default: throw std::invalid_argument("rc_candidates: family must be rc2..rc5");
    }
    return out;
}

template <class Real>
std::vector<CertifiedRelation> catalog(Family f, const Certifier<Real>& c)
{
    using namespace detail;
    switch (f) {
    case Family::R2: return r2_catalog(c);
    case Family::R4: return r4_catalog(c);
    case Family::rb1: return rb1(c);
    case Family::rb2: return rb2(c);
    case Family::rb3: return rb3(c, r2_catalog(c));
    case Family::rb4: return rb4(c, r2_catalog(c));
    case Family::rb5: return rb5(c);
    case Family::rb6: return rb67(c, false);
    case Family::rb7: return rb67(c, true);
    case Family::rb8: return rb8(c);
    case Family::rc1: {
        std::vector<CertifiedRelation> out;
        for (OddPair n : all_odd_pairs()) {
            Relation r;
            r.family = Family::rc1;
            r.key.pairs = {n};
            r.key.evens = jacobi_quad(n);
            Monomial rhs = Monomial::of_set(jacobi_quad(n), 2);
            rhs.coeff = -1;
            r.terms = {Monomial::det_power(n, 2), rhs};
            out.push_back(c.certified(r));
        }
        return out;
    }
    default: {
        std::vector<CertifiedRelation> out;
        for (PairSet p : rc_candidates(f))
            out.push_back(rc_relation(c, f, p));
        return out;
    }
    }
}

struct RankReport {
    int relations = 0;
    int rational_rank = 0;
    int gf2_rank = 0;
};

// Linear rank of the coefficient matrix over the monomial basis.
inline RankReport coefficient_rank(const std::vector<CertifiedRelation>& rels)
{
    std::vector<Monomial> basis;
    for (const auto& e : rels)
        for (const auto& t : e.relation.terms)
            if (std::none_of(basis.begin(), basis.end(), [&](const Monomial& b) { return b.same_variables(t); }))
                basis.push_back(t);
    if (basis.size() > 64)
        throw std::invalid_argument("coefficient_rank: more than 64 monomials");
    std::vector<std::vector<long long>> rows;
    std::vector<std::uint64_t> bits;
    for (const auto& e : rels) {
        std::vector<long long> row(basis.size(), 0);
        std::uint64_t b = 0;
        for (const auto& t : e.relation.terms)
            for (std::size_t k = 0; k < basis.size(); ++k)
                if (basis[k].same_variables(t)) {
                    row[k] += t.coeff;
                    if (t.coeff % 2)
                        b ^= std::uint64_t(1) << k;
                }
        rows.push_back(row);
        bits.push_back(b);
    }
    return RankReport{int(rels.size()), rational_rank(rows), gf2::rank(bits)};
}

struct CuspGenerator {
    std::string label;
    Monomial form;
};

// The 15 D(M), then theta_j^4 prod_{Q5 - j} theta^2 for Q5 in C5* and j in Q5.
inline std::vector<CuspGenerator> cusp_generators()
{
    std::vector<CuspGenerator> out;
    for (OddPair n : all_odd_pairs())
        out.push_back({n.label(), Monomial::det_power(n, 1)});
    for (CharSet q : orbit_members(OrbitClass::C5Star))
        for (int j : q.members()) {
            Monomial m = Monomial::of_set(q, 2);
            m.theta[j] = 4;
            out.push_back({q.to_string() + " j=" + std::to_string(j + 1), m});
        }
    return out;
}

inline const std::vector<Family>& all_families()
{
    static const std::vector<Family> f = {Family::R2,  Family::R4,  Family::rb1, Family::rb2, Family::rb3,
                                          Family::rb4, Family::rb5, Family::rb6, Family::rb7, Family::rb8,
                                          Family::rc1, Family::rc2, Family::rc3, Family::rc4, Family::rc5};
    return f;
}

} // namespace siegel2
