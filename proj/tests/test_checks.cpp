#include <doctest.h>

#include "thetaprod/checks.hpp"
#include "thetaprod/modforms.hpp"

using namespace thetaprod;

TEST_CASE("class number one table") {
    const auto& t = class_number_one_j_values();
    CHECK(t.size() == 13);
    CHECK(t.front() == 0);
    Int last("-262537412640768000");  // -640320^3
    CHECK(t.back() == last);
    for (const Int& v : t) CHECK(v != 720);
}

TEST_CASE("fricke criterion passes for A2, D4, E8") {
    CHECK(fricke_modular_check(named_lattice("A2"), 3).pass);
    CHECK(fricke_modular_check(named_lattice("D4"), 2).pass);
    CHECK(fricke_modular_check(named_lattice("E8"), 1).pass);
}

TEST_CASE("fricke criterion fails for A4, D6, E6 at the discriminant test") {
    for (auto [name, N] : std::vector<std::pair<std::string, long>>{
             {"A4", 5}, {"D6", named_lattice("D6").level()}, {"E6", 3}}) {
        CheckOutcome c = fricke_modular_check(named_lattice(name), N);
        CAPTURE(name);
        CHECK(!c.pass);
        CHECK(c.detail.find("discriminant") != std::string::npos);
    }
}

TEST_CASE("fricke pass implies exact theta agreement") {
    GramMatrix a2 = named_lattice("A2");
    auto dual = rescaled_dual(a2, 3);
    REQUIRE(dual.gram.has_value());
    CHECK(!first_mismatch(theta_series(a2, 40), theta_series(*dual.gram, 40)).has_value());
}

TEST_CASE("leech identity") {
    LeechReport rep = leech_identity_check(21);
    CHECK(rep.matches_product);
    CHECK(rep.q1_vanishes);
    CHECK(rep.q2_coefficient == 196560);
    CHECK(rep.table_excludes_720);
    // a theta series: constant term 1 and nonnegative integer coefficients
    CHECK(rep.series.coeff_key(0) == 1);
    for (const auto& [k, c] : rep.series.nonzero_terms()) {
        (void)k;
        CHECK(c >= 0);
        CHECK(is_integer(c));
    }
}

TEST_CASE("quaternary counterexample theta") {
    QSeries t = quaternary_counterexample_theta(8);
    std::vector<long> expect{1, 0, 18, 12, 0, 36};
    for (long k = 0; k < 6; ++k) CHECK(t.coeff_key(k) == expect[k]);
    CHECK(named_lattice("sec6.2q").det() == 81);

    // q^6 from an independent box brute force
    GramMatrix g = named_lattice("sec6.2q");
    long count = 0;
    for (long x0 = -6; x0 <= 6; ++x0)
        for (long x1 = -6; x1 <= 6; ++x1)
            for (long x2 = -6; x2 <= 6; ++x2)
                for (long x3 = -6; x3 <= 6; ++x3)
                    if (g.quadratic_value({x0, x1, x2, x3}) == 6) ++count;
    CHECK(t.coeff_key(6) == count);
}

TEST_CASE("section 6.4 theta") {
    QSeries t = sec64_theta(7);
    std::vector<long> expect{1, 6, 18, 24, 42};
    for (long k = 0; k < 5; ++k) CHECK(t.coeff_key(k) == expect[k]);
    CHECK(named_lattice("sec6.4").det() == 25);
    CHECK(named_lattice("sec6.4").level() == 5);

    GramMatrix g = named_lattice("sec6.4");
    long count = 0;
    for (long x0 = -7; x0 <= 7; ++x0)
        for (long x1 = -7; x1 <= 7; ++x1)
            for (long x2 = -7; x2 <= 7; ++x2)
                for (long x3 = -7; x3 <= 7; ++x3)
                    if (g.quadratic_value({x0, x1, x2, x3}) == 5) ++count;
    CHECK(t.coeff_key(5) == count);
}

TEST_CASE("checks battery runs green") {
    auto outcomes = run_all_checks(20);
    for (const auto& c : outcomes) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(outcomes.size() >= 12);
}
