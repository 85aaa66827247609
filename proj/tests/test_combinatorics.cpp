#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "siegel2/chars.hpp"
#include "siegel2/gf2.hpp"
#include "siegel2/lemmas.hpp"
#include "siegel2/remarkable.hpp"
#include "siegel2/sympl.hpp"
#include "siegel2/tables.hpp"

using namespace siegel2;

namespace {

// Characteristic as (m'1, m'2, m''1, m''2) bits, independent of Char2.
using Bits = std::array<int, 4>;

Bits bits_of(Char2 m) { return {m.mprime(0), m.mprime(1), m.mdprime(0), m.mdprime(1)}; }

int oracle_parity(const Bits& m) { return ((m[0] * m[2] + m[1] * m[3]) % 2) ? -1 : 1; }

// g.m = [[d, -c], [-b, a]] m + (diag(c tD), diag(a tB)) mod 2
Bits oracle_act(const SpMatrix& g, const Bits& m)
{
    const auto& x = g.mat();
    auto M = [&](int i, int j) { return long(x(i, j)); };
    Bits r{};
    for (int i = 0; i < 2; ++i) {
        long p = M(2 + i, 2) * m[0] + M(2 + i, 3) * m[1] - M(2 + i, 0) * m[2] - M(2 + i, 1) * m[3];
        long q = -M(i, 2) * m[0] - M(i, 3) * m[1] + M(i, 0) * m[2] + M(i, 1) * m[3];
        long dc = M(2 + i, 0) * M(2 + i, 2) + M(2 + i, 1) * M(2 + i, 3);
        long db = M(i, 0) * M(i, 2) + M(i, 1) * M(i, 3);
        r[i] = int(((p + dc) % 2 + 2) % 2);
        r[2 + i] = int(((q + db) % 2 + 2) % 2);
    }
    return r;
}

std::vector<SpMatrix> sp4_generators()
{
    Mat2i e11{{1, 0, 0, 0}}, e22{{0, 0, 0, 1}}, e12{{0, 1, 1, 0}};
    return {SpMatrix::J(),
            SpMatrix::translation(e11),
            SpMatrix::translation(e22),
            SpMatrix::translation(e12),
            SpMatrix::gl_embedding(Mat2i{{0, 1, 1, 0}}),
            SpMatrix::gl_embedding(Mat2i{{1, 1, 0, 1}})};
}

int even_slot(const Bits& m)
{
    for (int i = 0; i < 10; ++i)
        if (bits_of(kEven[i]) == m)
            return i;
    return -1;
}

// Orbits of Sp(4,Z) on k-subsets of the ten even characteristics, by breadth-first search.
std::vector<std::vector<unsigned>> oracle_orbits(int k)
{
    auto gens = sp4_generators();
    std::vector<std::array<int, 10>> perms;
    for (const auto& g : gens) {
        std::array<int, 10> p{};
        for (int i = 0; i < 10; ++i)
            p[i] = even_slot(oracle_act(g, bits_of(kEven[i])));
        perms.push_back(p);
    }
    std::vector<int> seen(1024, 0);
    std::vector<std::vector<unsigned>> orbits;
    for (unsigned s = 0; s < 1024; ++s) {
        if (std::popcount(s) != k || seen[s])
            continue;
        std::vector<unsigned> orbit{s};
        seen[s] = 1;
        for (std::size_t h = 0; h < orbit.size(); ++h)
            for (const auto& p : perms) {
                unsigned t = 0;
                for (int i = 0; i < 10; ++i)
                    if ((orbit[h] >> i) & 1)
                        t |= 1u << p[i];
                if (!seen[t]) {
                    seen[t] = 1;
                    orbit.push_back(t);
                }
            }
        orbits.push_back(orbit);
    }
    return orbits;
}

CharSet charset_of(unsigned mask)
{
    CharSet s;
    for (int i = 0; i < 10; ++i)
        if ((mask >> i) & 1)
            s.insert(i);
    return s;
}

bool oracle_in_gamma_2_4(const SpMatrix& g)
{
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (((g(i, j) - (i == j)) % 2 + 2) % 2)
                return false;
    for (int i = 0; i < 2; ++i) {
        long atb = g(i, 0) * g(i, 2) + g(i, 1) * g(i, 3);
        long ctd = g(2 + i, 0) * g(2 + i, 2) + g(2 + i, 1) * g(2 + i, 3);
        if (atb % 4 || ctd % 4)
            return false;
    }
    return true;
}

} // namespace

TEST(Characteristics, TenEvenSixOdd)
{
    int even = 0, odd = 0;
    for (unsigned b = 0; b < 16; ++b) {
        Char2 m(b);
        EXPECT_EQ(parity(m), oracle_parity(bits_of(m)));
        (is_even(m) ? even : odd)++;
    }
    EXPECT_EQ(even, 10);
    EXPECT_EQ(odd, 6);
    for (Char2 m : kEven)
        EXPECT_EQ(oracle_parity(bits_of(m)), 1);
    for (Char2 m : kOdd)
        EXPECT_EQ(oracle_parity(bits_of(m)), -1);
}

TEST(Characteristics, ActionPreservesParityAndMatchesLibrary)
{
    WordSampler ws(11);
    for (int t = 0; t < 200; ++t) {
        SpMatrix g = ws.modular_word(6);
        for (unsigned b = 0; b < 16; ++b) {
            Char2 m(b);
            Bits r = oracle_act(g, bits_of(m));
            EXPECT_EQ(oracle_parity(r), parity(m));
            EXPECT_EQ(bits_of(char_action(g, m)), r);
        }
    }
}

TEST(OrbitCensus, BreadthFirstOrbitsMatchClassification)
{
    std::map<std::string, int> expected;
    for (const auto& e : tables::kOrbitCensus)
        expected[e.name] = e.count;
    for (int k = 2; k <= 5; ++k) {
        for (const auto& orbit : oracle_orbits(k)) {
            OrbitClass c = classify_set(charset_of(orbit.front()));
            for (unsigned s : orbit)
                ASSERT_EQ(classify_set(charset_of(s)), c) << charset_of(s).to_string();
            auto it = expected.find(to_string(c));
            ASSERT_NE(it, expected.end()) << to_string(c);
            EXPECT_EQ(int(orbit.size()), it->second) << to_string(c);
        }
    }
    EXPECT_EQ(oracle_orbits(2).size(), 1u);
    EXPECT_EQ(oracle_orbits(3).size(), 2u);
    EXPECT_EQ(oracle_orbits(4).size(), 3u);
    EXPECT_EQ(oracle_orbits(5).size(), 3u);
}

TEST(OrbitCensus, LibraryCountsAgree)
{
    auto census = orbit_census(6);
    for (const auto& e : tables::kOrbitCensus) {
        int n = 0;
        for (auto [c, k] : census)
            if (std::string(to_string(c)) == e.name)
                n = k;
        EXPECT_EQ(n, e.count) << e.name;
    }
    EXPECT_EQ(45, 10 * 9 / 2);
}

TEST(Lemmas, AllHoldExhaustively)
{
    std::set<std::string> ids;
    for (const auto& l : verify_orbit_lemmas()) {
        EXPECT_TRUE(l.holds) << l.id << ": " << l.detail;
        EXPECT_GT(l.cases, 0) << l.id;
        ids.insert(l.id);
    }
    for (const char* id : {"l1", "l0", "l0+", "c4+", "c1", "l1t", "l2t", "c5-c4-", "c6-c5-", "c6-sum0", "l00c", "pA",
                           "pB", "pC"})
        EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Membership, LevelTwoFourAgreesWithDefinition)
{
    WordSampler ws(5);
    int members = 0;
    for (int t = 0; t < 2000; ++t) {
        SpMatrix g = t % 2 ? ws.level_2_4_word(3) : ws.modular_word(4);
        EXPECT_EQ(in_gamma_2_4(g), oracle_in_gamma_2_4(g)) << to_string(g);
        members += oracle_in_gamma_2_4(g);
    }
    EXPECT_GT(members, 900);
}

TEST(Membership, GeneratorsInGammaBasisNot)
{
    for (const auto& g : gamma_generators())
        EXPECT_TRUE(in_Gamma(g)) << to_string(g);
    for (const auto& g : g_basis()) {
        EXPECT_TRUE(oracle_in_gamma_2_4(g));
        EXPECT_FALSE(in_Gamma(g)) << to_string(g);
    }
}

TEST(Membership, KappaSquaredTrivialOnGamma)
{
    int n = 0;
    for (const auto& g : g_representatives())
        if (in_Gamma(g)) {
            ++n;
            EXPECT_EQ(kappa_squared(g).sign(), 1) << to_string(g);
        }
    EXPECT_EQ(n, 16);
}

TEST(Membership, GCoordinatesInvertRepresentatives)
{
    for (unsigned v = 0; v < 512; v += 7)
        EXPECT_EQ(g_coordinates(g_representatives()[v]).bits, v);
}

TEST(Membership, CongruenceFlagsOnIdentityAndBasis)
{
    auto f = congruence_level(SpMatrix::identity(), 3);
    EXPECT_TRUE(f.level_n && f.level_n_2n && f.level_n_2n_4n);
    auto h = congruence_level(g_basis()[3], 2);
    EXPECT_TRUE(h.level_n);
    EXPECT_EQ(h.level_n_2n, oracle_in_gamma_2_4(g_basis()[3]));
}

TEST(CharacterTable, MatchesPublishedEntries)
{
    auto t = character_table();
    int n = 0;
    for (int k = 0; k < 15; ++k)
        for (int b = 0; b < 9; ++b) {
            EXPECT_EQ(t[k][b], tables::kCharacterTable[k][b]) << k << "," << b;
            ++n;
        }
    EXPECT_EQ(n, 135);
}

TEST(CharacterTable, CharactersAreHomomorphisms)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<unsigned> d(0, 511);
    for (int t = 0; t < 100; ++t) {
        GVector u{std::uint16_t(d(rng))}, v{std::uint16_t(d(rng))};
        SpMatrix gu = g_representative(u), gv = g_representative(v);
        for (OddPair n : all_odd_pairs())
            EXPECT_EQ(chi_pair(gu * gv, n), chi_pair(gu, n) * chi_pair(gv, n));
        EXPECT_EQ(kappa_squared(gu * gv).sign(), kappa_squared(gu).sign() * kappa_squared(gv).sign());
    }
}

TEST(Gf2, RankOfKnownMatrices)
{
    EXPECT_EQ(gf2::rank({0b011, 0b110, 0b101}), 2);
    EXPECT_EQ(gf2::rank({1, 2, 4, 8}), 4);
    EXPECT_EQ(rational_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, -1}}), 2);
    EXPECT_EQ(rational_rank({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}), 3);
}

namespace {

// S-vector of an odd pair from raw bits.
unsigned oracle_s(OddPair n) { return kOdd[n.i].bits() ^ kOdd[n.j].bits(); }

unsigned oracle_s_sum(unsigned mask)
{
    unsigned s = 0;
    for (int k = 0; k < 15; ++k)
        if ((mask >> k) & 1)
            s ^= oracle_s(OddPair::from_index(k));
    return s;
}

// Canonical form of an edge set on six vertices under all 720 relabellings.
unsigned canonical_graph(unsigned mask)
{
    std::array<int, 6> p{0, 1, 2, 3, 4, 5};
    unsigned best = ~0u;
    do {
        unsigned m = 0;
        for (int k = 0; k < 15; ++k)
            if ((mask >> k) & 1) {
                OddPair e = OddPair::from_index(k);
                m |= 1u << OddPair::make(p[e.i], p[e.j]).index();
            }
        best = std::min(best, m);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

unsigned graph(std::initializer_list<std::pair<int, int>> edges)
{
    unsigned m = 0;
    for (auto [a, b] : edges)
        m |= 1u << OddPair::make(a, b).index();
    return canonical_graph(m);
}

} // namespace

TEST(Remarkable, SumVectorsMatchTable)
{
    for (int i = 0; i < 15; ++i) {
        Char2 s = s_vector(kTable2Order[i]);
        const auto& row = tables::kSumVectors[i];
        EXPECT_EQ((std::array<int, 4>{s.mprime(0), s.mprime(1), s.mdprime(0), s.mdprime(1)}), row)
            << kTable2Order[i].label();
        EXPECT_EQ(s.bits(), oracle_s(kTable2Order[i]));
    }
}

TEST(Remarkable, ClassificationMatchesBruteForce)
{
    std::vector<int> remarkable(16, 0);
    std::vector<char> is_rem(1u << 15, 0);
    for (unsigned m = 1; m < (1u << 15); ++m)
        is_rem[m] = oracle_s_sum(m) == 0;
    std::set<unsigned> nonreducible_shapes;
    std::map<FactorType, int> by_type;
    for (unsigned m = 1; m < (1u << 15); ++m) {
        if (std::popcount(m) > 6)
            continue;
        PairSet p{std::uint16_t(m)};
        ASSERT_EQ(is_remarkable(p), bool(is_rem[m])) << p.to_string();
        if (!is_rem[m])
            continue;
        bool reducible = false;
        for (unsigned s = (m - 1) & m; s; s = (s - 1) & m)
            reducible = reducible || is_rem[s];
        ASSERT_EQ(is_reducible(p), reducible) << p.to_string();
        if (reducible)
            continue;
        FactorType t = classify_nonreducible(p);
        EXPECT_NE(t, FactorType::Unmatched) << p.to_string();
        ++by_type[t];
        nonreducible_shapes.insert(canonical_graph(m));
    }
    std::set<unsigned> expected = {
        graph({{0, 1}, {1, 2}, {0, 2}}),                          // triangle
        graph({{0, 1}, {2, 3}, {4, 5}}),                          // perfect matching
        graph({{0, 1}, {1, 2}, {2, 3}, {0, 3}}),                  // 4-cycle
        graph({{0, 1}, {0, 2}, {0, 3}, {4, 5}}),                  // 3-star plus an edge
        graph({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}),          // 5-cycle
        graph({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}}),          // two adjacent 3-centres
        graph({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}}),          // 5-star
    };
    EXPECT_EQ(nonreducible_shapes, expected);
    EXPECT_EQ(by_type[FactorType::Type1], 20);
    EXPECT_EQ(by_type[FactorType::Type2], 15);
    EXPECT_EQ(by_type[FactorType::Type3], 45);
    EXPECT_EQ(by_type[FactorType::Type4], 60);
    EXPECT_EQ(by_type[FactorType::Type5], 72);
    EXPECT_EQ(by_type[FactorType::Type6], 90 + 6);
}

TEST(Remarkable, ThetaFactorDegreeAndParity)
{
    for (unsigned m = 1; m < (1u << 15); ++m) {
        if (std::popcount(m) > 5)
            continue;
        PairSet p{std::uint16_t(m)};
        if (!is_remarkable(p) || is_reducible(p))
            continue;
        auto f = factor_as_theta_monomial(p);
        auto mono = f.monomial();
        int deg = std::accumulate(mono.theta.begin(), mono.theta.end(), 0);
        EXPECT_EQ(deg, 4 * p.size()) << p.to_string();
        unsigned x = 0;
        for (OddPair n : p.members())
            x ^= jacobi_quad(n).mask();
        ASSERT_TRUE(x == 0 || x == 0x3FF) << p.to_string();
        FactorType t = classify_nonreducible(p);
        bool odd_type = t == FactorType::Type1 || t == FactorType::Type4 || t == FactorType::Type5;
        EXPECT_EQ(f.h, x ? 1 : 0) << p.to_string();
        EXPECT_EQ(f.h, odd_type ? 1 : 0)
            << p.to_string();
    }
}

TEST(Remarkable, ModularCriteriaAgree)
{
    for (unsigned m = 1; m < (1u << 15); ++m) {
        if (std::popcount(m) > 6)
            continue;
        PairSet p{std::uint16_t(m)};
        if (!is_remarkable(p))
            continue;
        EXPECT_EQ(modular_gamma_2_4(p), modular_by_characters(p)) << p.to_string();
    }
}

TEST(Remarkable, ParseRoundTrip)
{
    PairSet p = PairSet::parse("D12*D34*D56");
    EXPECT_EQ(p.size(), 3);
    EXPECT_EQ(PairSet::parse(p.to_string()), p);
    EXPECT_EQ(PairSet::parse("12,34 56"), p);
    EXPECT_THROW(PairSet::parse("D1"), std::invalid_argument);
}
