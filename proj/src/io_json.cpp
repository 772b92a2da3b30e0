#include "thetaprod/io_json.hpp"

#include <sstream>

namespace thetaprod {

json qseries_to_json(const QSeries& s) {
    json terms = json::array();
    for (const auto& [k, c] : s.nonzero_terms()) terms.push_back({k, rat_to_string(c)});
    return json{{"denom", s.denom()}, {"trunc", s.trunc_key()}, {"terms", terms}};
}

QSeries qseries_from_json(const json& j) {
    long denom = j.at("denom").get<long>();
    long trunc = j.at("trunc").get<long>();
    std::map<long, Rat> terms;
    for (const auto& t : j.at("terms")) {
        long k = t.at(0).get<long>();
        terms[k] = parse_rat(t.at(1).get<std::string>());
    }
    return QSeries::from_terms(denom, trunc, terms);
}

json gram_to_json(const GramMatrix& G) {
    json rows = json::array();
    for (const auto& row : G.g) rows.push_back(row);
    return json{{"rank", G.rank}, {"gram", rows}, {"even", G.even}};
}

GramMatrix gram_from_json(const json& j) {
    std::vector<std::vector<long>> rows;
    for (const auto& r : j.at("gram")) rows.push_back(r.get<std::vector<long>>());
    bool even = j.value("even", true);
    GramMatrix G(rows, even);
    if (j.contains("rank") && j.at("rank").get<int>() != G.rank)
        throw std::invalid_argument("rank field disagrees with the matrix size");
    return G;
}

json vvs_to_json(const VectorValuedSeries& F) {
    json comps = json::object();
    for (long h = 0; h < F.modulus; ++h)
        comps[std::to_string(h)] = qseries_to_json(F.components[h]);
    return json{{"modulus", F.modulus},
                {"components", comps},
                {"scalarized", qseries_to_json(F.scalarized())}};
}

json multipoly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (const auto& [mono, c] : p.terms()) {
        json b = json::array();
        for (int i = 0; i < p.m(); ++i) b.push_back(mono.b[i]);
        terms.push_back({{"q2", mono.a}, {"r", b}, {"s2", mono.g}, {"coeff", c.get_str()}});
    }
    return json{{"m", p.m()}, {"grading_bound", p.grading_bound()}, {"terms", terms}};
}

json cm_report_to_json(const RootReport& r) {
    json evals = json::array();
    for (const auto& e : r.evaluations)
        evals.push_back({{"representative", {e.point.A, e.point.B, e.point.C}},
                         {"abs_value", e.abs_value},
                         {"tail_bound", e.tail_bound},
                         {"pass", e.pass}});
    return json{{"N", r.cls.N},       {"d", r.cls.d},
                {"h", r.cls.h},       {"tol", r.tol},
                {"trunc", r.trunc},   {"evaluations", evals},
                {"all_pass", r.all_pass}};
}

std::string pretty_series(const QSeries& s, std::size_t max_terms) {
    auto terms = s.nonzero_terms();
    if (terms.empty()) return "0";
    std::ostringstream os;
    std::size_t shown = 0;
    for (const auto& [k, c] : terms) {
        if (max_terms && shown >= max_terms) {
            os << " + ...";
            break;
        }
        Rat coeff = c;
        if (shown == 0) {
            if (coeff < 0) {
                os << "-";
                coeff = -coeff;
            }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        bool unit = (coeff == 1) && k != 0;
        if (!unit) os << rat_to_string(coeff);
        if (k != 0) {
            if (!unit) os << "*";
            os << "q";
            if (k != s.denom()) {
                if (k % s.denom() == 0)
                    os << "^" << k / s.denom();
                else
                    os << "^(" << k << "/" << s.denom() << ")";
            }
        }
        ++shown;
    }
    return os.str();
}

}  // namespace thetaprod
