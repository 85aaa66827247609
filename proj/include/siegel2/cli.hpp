#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "siegel2/chars.hpp"
#include "siegel2/gradmap.hpp"
#include "siegel2/identities.hpp"
#include "siegel2/io.hpp"
#include "siegel2/lemmas.hpp"
#include "siegel2/relations.hpp"
#include "siegel2/sympl.hpp"
#include "siegel2/tables.hpp"
#include "siegel2/theta.hpp"
#include "siegel2/verify.hpp"

namespace siegel2::cli {

using io::json;

// Bad user input; reported with exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    double eps = 1e-14;
    int digits = 0;  // 0: 2 * -log10(eps), at least 15
    std::uint64_t seed = 1;
    int samples = 10;
    std::string format = "json";

    int min_digits() const { return std::max(1, int(std::ceil(-2 * std::log10(eps) - 1e-9))); }
    int resolved_digits() const { return digits > 0 ? digits : std::max(15, min_digits()); }

    void validate() const
    {
        if (!(eps > 0) || !(eps < 1))
            throw UsageError("--eps must lie in (0, 1)");
        if (digits > 0 && digits < min_digits())
            throw UsageError("--digits " + std::to_string(digits) + " is below 2*(-log10 eps) = " +
                             std::to_string(min_digits()));
        if (resolved_digits() > 100)
            throw UsageError("at most 100 digits are supported");
        if (samples < 1)
            throw UsageError("--samples must be positive");
    }

    json to_json() const
    {
        return {{"eps", eps},
                {"digits", resolved_digits()},
                {"backend", to_string(backend_for_digits(resolved_digits()))},
                {"seed", seed},
                {"samples", samples},
                {"format", format}};
    }
};

struct Report {
    json result = json::object();
    std::optional<io::Table> table;
    bool pass = true;
};

// Command-specific inputs.
struct Inputs {
    std::string tau = "0,1,0,0,0,1";
    std::string character;
    std::string pair;
    std::string set;
    std::string matrix;
    std::string family = "all";
    int level = 2;
    int check = 0;
};

namespace detail {

template <class Real>
SiegelPoint<Real> parse_tau(const std::string& text)
{
    try {
        return SiegelPoint<Real>::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--tau: ") + e.what());
    }
}

inline SpMatrix parse_matrix(const std::string& text)
{
    try {
        return SpMatrix(parse_mat4(text));
    } catch (const std::exception& e) {
        throw UsageError(std::string("--matrix: ") + e.what());
    }
}

inline Char2 parse_char(const std::string& text)
{
    try {
        return Char2::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--char: ") + e.what());
    }
}

inline OddPair parse_pair(const std::string& text)
{
    std::string d;
    for (char ch : text)
        if (ch >= '0' && ch <= '9')
            d += ch;
        else if (ch != 'D' && ch != 'd' && ch != ',' && ch != ' ')
            throw UsageError("--pair: expected two odd indices such as 12 or D12");
    if (d.size() != 2)
        throw UsageError("--pair: expected two odd indices such as 12 or D12");
    try {
        return OddPair::make(d[0] - '1', d[1] - '1');
    } catch (const std::exception& e) {
        throw UsageError(std::string("--pair: ") + e.what());
    }
}

inline std::string backend_name(const RunConfig& c) { return to_string(backend_for_digits(c.resolved_digits())); }

template <class F>
Report with_real(const RunConfig& c, F&& f)
{
    return with_backend(c.resolved_digits(), [&](auto tag) { return f(tag); });
}

inline std::mt19937_64 rng_for(const RunConfig& c) { return std::mt19937_64(c.seed); }

inline json kappa_json(QuarterTurn q) { return q.k; }

// key,value rows for the scalar members of a result.
inline io::Table scalar_table(const json& result)
{
    io::Table t{{"key", "value"}, {}};
    for (auto it = result.begin(); it != result.end(); ++it)
        if (!it.value().is_structured())
            t.rows.push_back({it.key(), it.value()});
    return t;
}

} // namespace detail

inline Report cmd_eval_theta(const RunConfig& c, const Inputs& in)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        auto tau = detail::parse_tau<Real>(in.tau);
        auto snap = evaluate_snapshot(tau, EvalOptions{c.eps});
        std::vector<Char2> chars;
        if (!in.character.empty())
            chars.push_back(detail::parse_char(in.character));
        else
            for (unsigned b = 0; b < 16; ++b)
                chars.push_back(Char2(b));
        Report r;
        r.table = io::Table{{"char", "parity", "re", "im", "abs_error"}, {}};
        json values = json::array();
        for (Char2 m : chars) {
            const auto& v = snap.theta_of(m);
            auto ei = even_index(m);
            auto z = v.value.to_std();
            values.push_back({{"char", m.to_string()},
                              {"parity", is_even(m) ? "even" : "odd"},
                              {"even_index", ei ? json(*ei + 1) : json(nullptr)},
                              {"value", io::complex_json(z)},
                              {"abs_error", v.abs_error}});
            r.table->rows.push_back({m.to_string(), is_even(m) ? "even" : "odd", z.real(), z.imag(), v.abs_error});
        }
        r.result = {{"tau", io::tau_json(tau)}, {"radius", snap.radius}, {"values", values}};
        return r;
    });
}

inline Report cmd_eval_grad(const RunConfig& c, const Inputs& in)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        auto tau = detail::parse_tau<Real>(in.tau);
        std::vector<Char2> chars;
        if (!in.character.empty()) {
            Char2 n = detail::parse_char(in.character);
            if (!is_odd(n))
                throw UsageError("--char: gradients are taken for odd characteristics only");
            chars.push_back(n);
        } else {
            chars.assign(kOdd.begin(), kOdd.end());
        }
        auto snap = evaluate_snapshot(tau, EvalOptions{c.eps});
        Report r;
        r.table = io::Table{{"char", "odd_index", "d1_re", "d1_im", "d2_re", "d2_im", "abs_error"}, {}};
        json values = json::array();
        for (Char2 n : chars) {
            const auto& g = snap.grad_of(n);
            auto a = g.g1.value.to_std(), b = g.g2.value.to_std();
            double err = std::max(g.g1.abs_error, g.g2.abs_error);
            int oi = *odd_index(n) + 1;
            values.push_back({{"char", n.to_string()},
                              {"odd_index", oi},
                              {"d1", io::complex_json(a)},
                              {"d2", io::complex_json(b)},
                              {"abs_error", err}});
            r.table->rows.push_back({n.to_string(), oi, a.real(), a.imag(), b.real(), b.imag(), err});
        }
        r.result = {{"tau", io::tau_json(tau)}, {"radius", snap.radius}, {"gradients", values}};
        return r;
    });
}

inline Report cmd_eval_det(const RunConfig& c, const Inputs& in)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        auto tau = detail::parse_tau<Real>(in.tau);
        std::vector<OddPair> pairs;
        if (!in.pair.empty())
            pairs.push_back(detail::parse_pair(in.pair));
        else
            pairs.assign(kTable2Order.begin(), kTable2Order.end());
        auto snap = evaluate_snapshot(tau, EvalOptions{c.eps});
        Report r;
        r.table = io::Table{{"pair", "re", "im", "abs_error", "quad"}, {}};
        json values = json::array();
        for (OddPair n : pairs) {
            auto d = snap.det(n);
            auto z = d.value.to_std();
            values.push_back({{"pair", n.label()},
                              {"value", io::complex_json(z)},
                              {"abs_error", d.abs_error},
                              {"quad", jacobi_quad(n).to_string()}});
            r.table->rows.push_back({n.label(), z.real(), z.imag(), d.abs_error, jacobi_quad(n).to_string()});
        }
        r.result = {{"tau", io::tau_json(tau)}, {"radius", snap.radius}, {"determinants", values}};
        return r;
    });
}

inline Report cmd_classify_set(const RunConfig&, const Inputs& in)
{
    CharSet s;
    try {
        s = CharSet::parse(in.set);
    } catch (const std::exception& e) {
        throw UsageError(std::string("--set: ") + e.what());
    }
    Report r;
    r.result = {{"set", s.to_string()},
                {"size", s.size()},
                {"class", to_string(classify_set(s))},
                {"sum", s.sum().to_string()}};
    r.table = detail::scalar_table(r.result);
    return r;
}

inline Report cmd_orbit_census(const RunConfig&, const Inputs&)
{
    auto counts = orbit_census(6);
    Report r;
    r.table = io::Table{{"class", "count", "published", "match"}, {}};
    json rows = json::array();
    std::map<std::string, int> by_name;
    for (auto [cls, n] : counts)
        by_name[to_string(cls)] = n;
    for (auto cls : {OrbitClass::C2, OrbitClass::C3Minus, OrbitClass::C3Plus, OrbitClass::C4Minus,
                     OrbitClass::C4Plus, OrbitClass::C4Star, OrbitClass::C5Minus, OrbitClass::C5Plus,
                     OrbitClass::C5Star, OrbitClass::C6Minus, OrbitClass::C6Plus, OrbitClass::C6Star}) {
        std::string name = to_string(cls);
        json pub = nullptr;
        for (const auto& e : tables::kOrbitCensus)
            if (name == e.name)
                pub = e.count;
        bool match = pub.is_null() || pub.get<int>() == by_name[name];
        r.pass = r.pass && match;
        rows.push_back({{"class", name}, {"count", by_name[name]}, {"published", pub}, {"match", match}});
        r.table->rows.push_back({name, by_name[name], pub, match});
    }
    r.result = {{"classes", rows}};
    return r;
}

inline Report cmd_char_table(const RunConfig&, const Inputs&)
{
    auto t = character_table();
    Report r;
    io::Table tab{{"chi"}, {}};
    for (auto n : kBasisNames)
        tab.header.push_back(n);
    json rows = json::array();
    int mismatches = 0;
    for (int k = 0; k < 15; ++k) {
        std::string label = "chi" + OddPair::from_index(k).label().substr(1);
        std::vector<json> row{label};
        json vals = json::array();
        for (int b = 0; b < 9; ++b) {
            vals.push_back(t[k][b]);
            row.push_back(t[k][b]);
            mismatches += t[k][b] != tables::kCharacterTable[k][b];
        }
        rows.push_back({{"character", label}, {"values", vals}});
        tab.rows.push_back(row);
    }
    json kappa = json::array();
    for (const auto& g : g_basis())
        kappa.push_back(kappa_squared(g).sign());
    r.pass = mismatches == 0;
    r.result = {{"basis", kBasisNames},
                {"rows", rows},
                {"kappa_squared", kappa},
                {"mismatches", mismatches},
                {"matches_published", mismatches == 0},
                {"gf2_rank", character_table_gf2_rank(t)}};
    r.table = tab;
    return r;
}

inline Report cmd_check_member(const RunConfig&, const Inputs& in)
{
    if (in.matrix.empty())
        throw UsageError("--matrix is required");
    if (in.level < 1)
        throw UsageError("--level must be positive");
    SpMatrix g = detail::parse_matrix(in.matrix);
    auto flags = congruence_level(g, in.level);
    Report r;
    json res = {{"matrix", to_string(g)},
                {"level", in.level},
                {"gamma_n", flags.level_n},
                {"gamma_n_2n", flags.level_n_2n},
                {"gamma_n_2n_4n", flags.level_n_2n_4n},
                {"in_gamma_2_4", in_gamma_2_4(g)},
                {"in_gamma_4_8", in_gamma_4_8(g)},
                {"in_pm_gamma_4_8", in_pm_gamma_4_8(g)},
                {"member", in_Gamma(g)}};
    if (in_gamma_2_4(g)) {
        res["g_coordinates"] = g_coordinates(g).to_string();
        res["kappa_squared"] = kappa_squared(g).sign();
        json chis = json::object();
        for (OddPair n : all_odd_pairs())
            chis["chi" + n.label().substr(1)] = chi_pair(g, n);
        res["characters"] = chis;
    } else {
        res["g_coordinates"] = nullptr;
        res["kappa_squared"] = nullptr;
        res["characters"] = nullptr;
    }
    r.result = res;
    r.table = detail::scalar_table(res);
    return r;
}

inline Report cmd_verify_riemann(const RunConfig& c, const Inputs&)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        Certifier<Real> cert(c.seed, c.eps, 5, c.samples);
        auto rels = r2_catalog(cert);
        auto r4 = r4_catalog(cert);
        rels.insert(rels.end(), r4.begin(), r4.end());
        Report r;
        r.table = io::Table{{"family", "key", "max_residual", "budget", "pass"}, {}};
        json list = json::array();
        json errata = json::array();
        for (const auto& e : rels) {
            list.push_back(io::relation_json(e));
            r.table->rows.push_back({to_string(e.relation.family), e.relation.key.label(), e.cert.max_residual,
                                     e.cert.max_budget, e.cert.pass});
            r.pass = r.pass && e.cert.pass;
            if (!e.relation.note.empty())
                errata.push_back({{"key", e.relation.key.label()}, {"note", e.relation.note}});
        }
        r.result = {{"points", c.samples}, {"relations", list}, {"corrected_entries", errata}};
        return r;
    });
}

inline Report cmd_verify_jacobi(const RunConfig& c, const Inputs&)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        auto rng = detail::rng_for(c);
        struct Acc {
            double residual = 0, budget = 0, modulus = 0;
            bool pass = true;
            std::optional<int> sign;
            bool sign_stable = true;
        };
        std::array<Acc, 15> acc;
        bool bijective = true;
        for (int s = 0; s < c.samples; ++s) {
            auto rep = verify_jacobi_table(random_tau<Real>(rng), c.eps);
            bijective = bijective && rep.bijective;
            for (const auto& row : rep.rows) {
                auto& a = acc[row.pair.index()];
                if (row.residual > a.residual) {
                    a.residual = row.residual;
                    a.budget = row.budget;
                }
                a.modulus = std::max(a.modulus, row.modulus_residual);
                a.pass = a.pass && row.pass();
                if (a.sign && *a.sign != row.computed_sign)
                    a.sign_stable = false;
                a.sign = row.computed_sign;
            }
        }
        Report r;
        r.table = io::Table{{"pair", "quad", "printed_sign", "computed_sign", "max_residual", "budget", "pass"}, {}};
        json rows = json::array();
        int passes = 0;
        for (const auto& e : jacobi_table()) {
            const auto& a = acc[e.pair.index()];
            passes += a.pass;
            r.pass = r.pass && a.pass;
            rows.push_back({{"pair", e.pair.label()},
                            {"quad", e.quad.to_string()},
                            {"printed_sign", e.printed_sign},
                            {"computed_sign", a.sign_stable ? json(*a.sign) : json(nullptr)},
                            {"max_residual", a.residual},
                            {"budget", a.budget},
                            {"max_modulus_residual", a.modulus},
                            {"pass", a.pass}});
            r.table->rows.push_back({e.pair.label(), e.quad.to_string(), e.printed_sign,
                                     a.sign_stable ? json(*a.sign) : json(nullptr), a.residual, a.budget, a.pass});
        }
        r.result = {{"points", c.samples},
                    {"bijective_onto_c4minus", bijective},
                    {"printed_sign_passes", passes},
                    {"identities", rows}};
        return r;
    });
}

inline Report cmd_verify_transform(const RunConfig& c, const Inputs& in)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        std::vector<std::pair<std::string, SpMatrix>> mats;
        if (!in.matrix.empty()) {
            SpMatrix g = detail::parse_matrix(in.matrix);
            if (!in_gamma_2_4(g))
                throw UsageError("--matrix: the transformation laws are checked on Gamma(2,4)");
            mats.push_back({to_string(g), g});
        } else {
            for (int b = 0; b < 9; ++b)
                mats.push_back({kBasisNames[b], g_basis()[b]});
        }
        auto rng = detail::rng_for(c);
        std::vector<SiegelPoint<Real>> taus;
        for (int s = 0; s < c.samples; ++s)
            taus.push_back(random_tau<Real>(rng));
        Report r;
        r.table = io::Table{{"matrix", "object", "max_residual", "budget", "pass"}, {}};
        json rows = json::array();
        for (const auto& [name, g] : mats) {
            double res_t = 0, bud_t = 0, res_d = 0, bud_d = 0;
            bool pass_t = true, pass_d = true;
            for (const auto& tau : taus) {
                auto s0 = evaluate_snapshot(tau, EvalOptions{c.eps});
                auto s1 = evaluate_snapshot(act(g, tau), EvalOptions{c.eps});
                for (int a = 0; a < 10; ++a)
                    for (int b = a; b < 10; ++b) {
                        auto x = verify_transformation(g, ModularObject{ThetaPairObject{a, b}}, s0, s1);
                        pass_t = pass_t && x.residual <= x.budget;
                        if (x.residual >= res_t) {
                            res_t = x.residual;
                            bud_t = x.budget;
                        }
                    }
                for (OddPair n : all_odd_pairs()) {
                    auto x = verify_transformation(g, ModularObject{DetObject{n}}, s0, s1);
                    pass_d = pass_d && x.residual <= x.budget;
                    if (x.residual >= res_d) {
                        res_d = x.residual;
                        bud_d = x.budget;
                    }
                }
            }
            r.pass = r.pass && pass_t && pass_d;
            rows.push_back({{"matrix", name},
                            {"theta_pairs", {{"max_residual", res_t}, {"budget", bud_t}, {"pass", pass_t}}},
                            {"determinants", {{"max_residual", res_d}, {"budget", bud_d}, {"pass", pass_d}}}});
            r.table->rows.push_back({name, "theta_pair", res_t, bud_t, pass_t});
            r.table->rows.push_back({name, "determinant", res_d, bud_d, pass_d});
        }
        r.result = {{"points", c.samples}, {"matrices", rows}};
        return r;
    });
}

inline std::vector<Family> parse_families(const std::string& text)
{
    if (text == "all")
        return all_families();
    try {
        return {parse_family(text)};
    } catch (const std::exception& e) {
        throw UsageError(std::string("--family: ") + e.what());
    }
}

inline Report cmd_catalog(const RunConfig& c, const Inputs& in)
{
    auto fams = parse_families(in.family);
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        Certifier<Real> cert(c.seed, c.eps, 5, c.samples);
        Report r;
        r.table = io::Table{{"family", "key", "max_residual", "budget", "pass"}, {}};
        json out = json::array();
        for (Family f : fams) {
            auto cat = catalog(f, cert);
            json rels = json::array();
            bool all = true;
            for (const auto& e : cat) {
                rels.push_back(io::relation_json(e));
                all = all && e.cert.pass;
                r.table->rows.push_back({to_string(f), e.relation.key.label(), e.cert.max_residual,
                                         e.cert.max_budget, e.cert.pass});
            }
            r.pass = r.pass && all;
            json fam = {{"family", to_string(f)}, {"count", cat.size()}, {"all_certified", all}};
            if (f == Family::rb8) {
                auto rk = coefficient_rank(cat);
                fam["rational_rank"] = rk.rational_rank;
                fam["gf2_rank"] = rk.gf2_rank;
                fam["published_independent"] = tables::kPublishedRb8Independent;
            }
            fam["relations"] = rels;
            out.push_back(fam);
        }
        r.result = {{"search_points", 5}, {"certification_points", c.samples}, {"families", out}};
        return r;
    });
}

inline Report cmd_cusp_gens(const RunConfig& c, const Inputs& in)
{
    if (in.check < 0)
        throw UsageError("--check must be non-negative");
    auto gens = cusp_generators();
    Report r;
    json list = json::array();
    for (const auto& g : gens)
        list.push_back({{"label", g.label}, {"weight", g.form.twice_weight() / 2.0}, {"monomial", io::monomial_json(g.form)}});
    json checks = json::array();
    r.table = io::Table{{"label", "weight", "ratio_lambda5", "ratio_lambda40", "decays"}, {}};
    if (in.check > 0) {
        detail::with_real(c, [&](auto tag) {
            using Real = typename decltype(tag)::type;
            const int n = std::min<int>(in.check, int(gens.size()));
            for (int k = 0; k < n; ++k) {
                const auto& g = gens[std::size_t(k) * gens.size() / std::size_t(n)];
                auto sl = siegel_limit<Real>(g.form, {0.1, 1.1}, {5, 40}, {0.1, 0.05});
                double rel = sl.rows[0].ratio > 0 ? sl.rows[1].ratio / sl.rows[0].ratio : 0;
                bool ok = rel < 1e-6 && sl.rows[1].reference > 0.1 * sl.rows[0].reference;
                r.pass = r.pass && ok;
                checks.push_back({{"label", g.label},
                                  {"ratio_lambda5", sl.rows[0].ratio},
                                  {"ratio_lambda40", sl.rows[1].ratio},
                                  {"relative_decay", rel},
                                  {"reference_lambda5", sl.rows[0].reference},
                                  {"reference_lambda40", sl.rows[1].reference},
                                  {"pass", ok}});
                r.table->rows.push_back({g.label, g.form.twice_weight() / 2.0, sl.rows[0].ratio, sl.rows[1].ratio, ok});
            }
            return Report{};
        });
    } else {
        for (const auto& g : gens)
            r.table->rows.push_back({g.label, g.form.twice_weight() / 2.0, nullptr, nullptr, nullptr});
    }
    r.result = {{"count", gens.size()}, {"generators", list}, {"siegel_limit_checks", checks}};
    return r;
}

inline Report cmd_grad_map(const RunConfig& c, const Inputs& in)
{
    return detail::with_real(c, [&](auto tag) {
        using Real = typename decltype(tag)::type;
        auto tau = detail::parse_tau<Real>(in.tau);
        auto p = pgr_th2(tau, c.eps);
        Report r;
        r.result = {{"tau", io::tau_json(tau)}, {"order", json::array()}, {"image", io::proj_point_json(p)}};
        for (OddPair n : kTable2Order)
            r.result["order"].push_back(n.label());
        r.table = io::Table{{"pair", "re", "im"}, {}};
        for (int i = 0; i < 15; ++i)
            r.table->rows.push_back({kTable2Order[i].label(), p.coords[i].real(), p.coords[i].imag()});
        if (!in.matrix.empty()) {
            SpMatrix g = detail::parse_matrix(in.matrix);
            if (!in_gamma_2_4(g))
                throw UsageError("--matrix: sign patterns are defined on Gamma(2,4)");
            auto q = pgr_th2(act(g, tau), c.eps);
            auto s = sign_pattern(g);
            double d_raw = projective_distance(p, q), d_signed = projective_distance(q, apply_pattern(p, s));
            double tol = 4 * (p.abs_error + q.abs_error) + 1e-12;
            r.pass = d_signed <= tol;
            r.result["transformed"] = {{"matrix", to_string(g)},
                                       {"member", in_Gamma(g)},
                                       {"sign_pattern", to_string(s)},
                                       {"image", io::proj_point_json(q)},
                                       {"distance", d_raw},
                                       {"distance_after_pattern", d_signed},
                                       {"tolerance", tol}};
        }
        return r;
    });
}

inline Report cmd_pattern_census(const RunConfig&, const Inputs&)
{
    auto pc = pattern_census();
    Report r;
    json w = json::array();
    r.table = io::Table{{"pattern", "g_coordinates"}, {}};
    for (const auto& [pat, g] : pc.witnesses) {
        w.push_back({{"pattern", to_string(pat)}, {"g_coordinates", g.to_string()}});
        r.table->rows.push_back({to_string(pat), g.to_string()});
    }
    r.pass = pc.counting_consistent && pc.kernel_matches_gamma;
    r.result = {{"classes", pc.classes},
                {"distinct_patterns", pc.distinct_patterns},
                {"kernel_size", pc.kernel_size},
                {"kernel_dimension", pc.kernel_dimension},
                {"counting_consistent", pc.counting_consistent},
                {"kernel_matches_gamma", pc.kernel_matches_gamma},
                {"published_count", pc.published_count},
                {"agrees_with_published", pc.agrees_with_published},
                {"witnesses", w}};
    return r;
}

inline Report cmd_verify_lemmas(const RunConfig&, const Inputs&)
{
    Report r;
    r.table = io::Table{{"id", "holds", "cases", "detail"}, {}};
    json list = json::array();
    for (const auto& l : verify_orbit_lemmas()) {
        r.pass = r.pass && l.holds;
        list.push_back({{"id", l.id}, {"holds", l.holds}, {"cases", l.cases}, {"detail", l.detail}});
        r.table->rows.push_back({l.id, l.holds, l.cases, l.detail});
    }
    r.result = {{"lemmas", list}};
    return r;
}

using Command = std::function<Report(const RunConfig&, const Inputs&)>;

struct CommandSpec {
    const char* name;
    const char* help;
    Command run;
};

inline const std::vector<CommandSpec>& commands()
{
    static const std::vector<CommandSpec> c = {
        {"eval-theta", "theta constants at --tau (all 16, or --char)", cmd_eval_theta},
        {"eval-grad", "z-gradients of odd theta functions at --tau", cmd_eval_grad},
        {"eval-det", "Jacobian determinants D(N) at --tau (all 15, or --pair)", cmd_eval_det},
        {"classify-set", "orbit class of a set of even characteristics (--set)", cmd_classify_set},
        {"orbit-census", "orbit sizes on subsets of even characteristics", cmd_orbit_census},
        {"char-table", "characters chi_N on the G basis", cmd_char_table},
        {"check-member", "congruence flags, G coordinates and Gamma membership of --matrix", cmd_check_member},
        {"verify-riemann", "certify the biquadratic and quartic theta relations", cmd_verify_riemann},
        {"verify-jacobi", "check D(N) = sign * theta^4 with the listed signs", cmd_verify_jacobi},
        {"verify-transform", "transformation laws of theta_m theta_n and D(N)", cmd_verify_transform},
        {"catalog", "generate and certify relation families (--family)", cmd_catalog},
        {"cusp-gens", "cusp ideal generators, optional Siegel-limit checks (--check)", cmd_cusp_gens},
        {"grad-map", "projective image of the gradients map at --tau", cmd_grad_map},
        {"pattern-census", "sign patterns of the gradients map over G", cmd_pattern_census},
        {"verify-lemmas", "exhaustive checks of the orbit lemmas", cmd_verify_lemmas},
    };
    return c;
}

inline void emit(std::ostream& out, const std::string& name, const RunConfig& c, const Report& r)
{
    if (c.format == "csv") {
        out << "# command=" << name << " eps=" << json(c.eps).dump() << " digits=" << c.resolved_digits()
            << " seed=" << c.seed << " samples=" << c.samples << " pass=" << (r.pass ? "true" : "false") << "\n";
        out << (r.table ? *r.table : detail::scalar_table(r.result)).to_csv();
        return;
    }
    json doc = {{"command", name}, {"config", c.to_json()}, {"pass", r.pass}, {"result", r.result}};
    out << doc.dump(2) << "\n";
}

// Exit codes: 0 all checks pass, 1 a certification failed, 2 usage error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Genus-2 theta constants, gradients and modular relations"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    Inputs in;
    app.add_option("--eps", cfg.eps, "tail bound for every series value")->envname("SIEGEL2_EPS");
    app.add_option("--digits", cfg.digits, "working precision in decimal digits (default 2*-log10 eps)")
        ->envname("SIEGEL2_DIGITS");
    app.add_option("--seed", cfg.seed, "seed of the random tau and word generator")->envname("SIEGEL2_SEED");
    app.add_option("--samples", cfg.samples, "number of random points")->envname("SIEGEL2_SAMPLES");
    app.add_option("--format", cfg.format, "json or csv")
        ->envname("SIEGEL2_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}));
    for (const auto& spec : commands()) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        const std::string name = spec.name;
        if (name.rfind("eval-", 0) == 0 || name == "grad-map")
            sub->add_option("--tau", in.tau, "re11,im11,re12,im12,re22,im22 (default i*1)");
        if (name == "eval-theta" || name == "eval-grad")
            sub->add_option("--char", in.character, "characteristic ab|cd");
        if (name == "eval-det")
            sub->add_option("--pair", in.pair, "odd pair such as 12 or D12");
        if (name == "classify-set")
            sub->add_option("--set", in.set, "even indices 1..10, e.g. {1,2,5,10}")->required();
        if (name == "check-member" || name == "verify-transform" || name == "grad-map")
            sub->add_option("--matrix", in.matrix, "16 integers, row major");
        if (name == "check-member")
            sub->add_option("--level", in.level, "n for the Gamma(n), Gamma(n,2n), Gamma(n,2n,4n) flags");
        if (name == "catalog")
            sub->add_option("--family", in.family, "R2, R4, rb1..rb8, rc1..rc5 or all");
        if (name == "cusp-gens")
            sub->add_option("--check", in.check, "Siegel-limit checks on this many generators");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        cfg.validate();
        for (const auto& spec : commands())
            if (name == spec.name) {
                Report r = spec.run(cfg, in);
                emit(out, name, cfg, r);
                return r.pass ? 0 : 1;
            }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace siegel2::cli
