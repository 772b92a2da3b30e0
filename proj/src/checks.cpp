#include "thetaprod/checks.hpp"

#include <sstream>

#include "thetaprod/modforms.hpp"

namespace thetaprod {

const std::vector<Int>& class_number_one_j_values() {
    static const std::vector<Int> table = [] {
        auto cube = [](long x) -> Int { return Int(x) * x * x; };
        std::vector<Int> t;
        t.push_back(0);
        t.push_back(cube(12));
        t.push_back(-cube(15));
        t.push_back(cube(20));
        t.push_back(-cube(32));
        t.push_back(2 * cube(15));
        t.push_back(cube(66));
        t.push_back(-cube(96));
        t.push_back(-3 * cube(160));
        t.push_back(cube(255));
        t.push_back(-cube(960));
        t.push_back(-cube(5280));
        t.push_back(-cube(640320));
        return t;
    }();
    return table;
}

CheckOutcome fricke_modular_check(const GramMatrix& G, long N, long T) {
    std::ostringstream detail;
    Int disc = G.det();
    Int target(1);
    if (G.rank % 2 != 0) return {"fricke", false, "odd rank lattice"};
    for (int i = 0; i < G.rank / 2; ++i) target *= N;
    if (disc != target) {
        detail << "discriminant != N^(r/2): " << disc.get_str() << " vs " << target.get_str();
        return {"fricke", false, detail.str()};
    }
    DualResult dual = rescaled_dual(G, N);
    if (!dual.gram) return {"fricke", false, "rescaled dual: " + dual.failure};
    QSeries t1 = theta_series(G, T);
    QSeries t2 = theta_series(*dual.gram, T);
    if (auto diff = first_mismatch(t1, t2)) {
        detail << "theta series differ first at q^" << diff->get_str();
        return {"fricke", false, detail.str()};
    }
    detail << "theta series agree below q^" << T;
    return {"fricke", true, detail.str()};
}

LeechReport leech_identity_check(long T) {
    if (T < 3) throw std::invalid_argument("leech check needs T >= 3");
    QSeries e4 = eisenstein(4, T);
    QSeries dl = delta(T);
    QSeries lhs = pow(e4, 3) - Rat(720) * dl;
    QSeries rhs = dl * (j_invariant(T) - QSeries::monomial(Rat(720), 0, T));
    LeechReport rep;
    rep.series = lhs;
    rep.matches_product = agree_to_trunc(lhs, rhs);
    rep.q1_vanishes = (lhs.coeff_at(Rat(1)) == 0);
    rep.q2_coefficient = lhs.coeff_at(Rat(2)).get_num();
    bool found = false;
    for (const Int& v : class_number_one_j_values())
        if (v == 720) found = true;
    rep.table_excludes_720 = !found;
    return rep;
}

QSeries quaternary_counterexample_theta(long T) {
    if (T < 6) throw std::invalid_argument("need T >= 6");
    return theta_series(named_lattice("sec6.2q"), T);
}

QSeries sec64_theta(long T) {
    if (T < 5) throw std::invalid_argument("need T >= 5");
    return theta_series(named_lattice("sec6.4"), T);
}

std::vector<CheckOutcome> run_all_checks(long T) {
    std::vector<CheckOutcome> out;
    auto fricke_case = [&](const std::string& name, long N, bool expect_pass) {
        CheckOutcome c = fricke_modular_check(named_lattice(name), N, T);
        c.name = "fricke_" + name + "_N" + std::to_string(N);
        bool ok = c.pass == expect_pass;
        out.push_back({c.name, ok, c.detail});
    };
    fricke_case("A2", 3, true);
    fricke_case("D4", 2, true);
    fricke_case("E8", 1, true);
    fricke_case("A4", 5, false);
    fricke_case("D6", named_lattice("D6").level(), false);
    fricke_case("E6", named_lattice("E6").level(), false);

    LeechReport leech = leech_identity_check(std::max(T, 3L));
    out.push_back({"leech_two_routes", leech.matches_product,
                   "E4^3 - 720*delta vs delta*(j-720)"});
    out.push_back({"leech_q1_zero", leech.q1_vanishes, "q^1 coefficient vanishes"});
    out.push_back({"leech_q2_kissing", leech.q2_coefficient == 196560,
                   "q^2 coefficient " + leech.q2_coefficient.get_str()});
    out.push_back({"leech_720_not_cm_j", leech.table_excludes_720,
                   "720 absent from the 13 class-number-one j values"});

    {
        QSeries t = quaternary_counterexample_theta(std::max(T, 6L));
        std::vector<long> expect{1, 0, 18, 12, 0, 36};
        bool ok = true;
        for (long k = 0; k < (long)expect.size(); ++k)
            ok = ok && t.coeff_at(Rat(k)) == expect[k];
        Int disc = named_lattice("sec6.2q").det();
        out.push_back({"quaternary_sqrt3_theta", ok && disc == 81,
                       "1 + 18q^2 + 12q^3 + 36q^5, discriminant " + disc.get_str()});
    }
    {
        QSeries t = sec64_theta(std::max(T, 5L));
        std::vector<long> expect{1, 6, 18, 24, 42};
        bool ok = true;
        for (long k = 0; k < (long)expect.size(); ++k)
            ok = ok && t.coeff_at(Rat(k)) == expect[k];
        Int disc = named_lattice("sec6.4").det();
        out.push_back({"disc25_level5_theta", ok && disc == 25,
                       "1 + 6q + 18q^2 + 24q^3 + 42q^4, discriminant " + disc.get_str()});
    }
    return out;
}

}  // namespace thetaprod
