#pragma once

#include <complex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "siegel2/gradmap.hpp"
#include "siegel2/monomial.hpp"
#include "siegel2/relations.hpp"
#include "siegel2/theta.hpp"

namespace siegel2::io {

using json = nlohmann::ordered_json;

inline json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

template <class Real>
json approx_json(const ApproxValue<Real>& v)
{
    return {{"value", complex_json(v.value.to_std())}, {"abs_error", v.abs_error}};
}

template <class Real>
json tau_json(const SiegelPoint<Real>& t)
{
    return t.to_doubles();
}

inline json monomial_json(const Monomial& m)
{
    return {{"coeff", m.coeff}, {"theta_exp", m.theta}, {"det_exp", m.det}, {"text", m.to_string()}};
}

inline json terms_json(const std::vector<Monomial>& terms)
{
    json a = json::array();
    for (const auto& t : terms)
        a.push_back(monomial_json(t));
    return a;
}

inline json certification_json(const Certification& c)
{
    return {{"points", c.points},
            {"max_residual", c.max_residual},
            {"budget", c.max_budget},
            {"max_term", c.max_scale},
            {"pass", c.pass}};
}

inline json relation_json(const CertifiedRelation& e)
{
    json j = {{"family", to_string(e.relation.family)},
              {"key", e.relation.key.label()},
              {"terms", terms_json(e.relation.terms)},
              {"text", e.relation.to_string()},
              {"certification", certification_json(e.cert)}};
    if (!e.relation.note.empty())
        j["note"] = e.relation.note;
    return j;
}

inline json proj_point_json(const ProjPoint15& p)
{
    json c = json::array();
    for (auto z : p.coords)
        c.push_back(complex_json(z));
    return {{"coords", c}, {"norm_index", p.norm_index}, {"abs_error", p.abs_error}};
}

// Minimal CSV: quotes fields containing separators or quotes.
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string r = "\"";
    for (char ch : s)
        r += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return r + "\"";
}

inline std::string csv_value(const json& v)
{
    if (v.is_string())
        return csv_field(v.get<std::string>());
    return csv_field(v.dump());
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<json>> rows;

    std::string to_csv() const
    {
        std::ostringstream os;
        for (std::size_t k = 0; k < header.size(); ++k)
            os << (k ? "," : "") << csv_field(header[k]);
        os << "\n";
        for (const auto& r : rows) {
            for (std::size_t k = 0; k < r.size(); ++k)
                os << (k ? "," : "") << csv_value(r[k]);
            os << "\n";
        }
        return os.str();
    }
};

} // namespace siegel2::io
