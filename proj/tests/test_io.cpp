#include <doctest.h>

#include <random>

#include "thetaprod/io_json.hpp"
#include "thetaprod/modforms.hpp"
#include "test_util.hpp"

using namespace thetaprod;

TEST_CASE("qseries json round trip") {
    std::mt19937 rng(3);
    for (int it = 0; it < 50; ++it) {
        QSeries a = testutil::random_series(rng, 12, 4);
        json j = qseries_to_json(a);
        QSeries b = qseries_from_json(j);
        CHECK(agree_to_trunc(a, b));
        CHECK(a.denom() == b.denom());
        CHECK(a.trunc_key() == b.trunc_key());
    }
    // schema shape: coefficients as strings, no zero terms stored
    QSeries h = named_series("eta:2,1;4,-2", 6);
    json j = qseries_to_json(h);
    CHECK(j["denom"] == 4);
    for (const auto& t : j["terms"]) {
        CHECK(t[1].is_string());
        CHECK(parse_rat(t[1].get<std::string>()) != 0);
    }
}

TEST_CASE("gram json round trip") {
    GramMatrix g = named_lattice("sec6.4");
    json j = gram_to_json(g);
    GramMatrix g2 = gram_from_json(j);
    CHECK(g.g == g2.g);
    CHECK(g.even == g2.even);
    CHECK_THROWS(gram_from_json(json{{"rank", 2}, {"gram", {{2, 3}, {3, 2}}}, {"even", true}}));
}

TEST_CASE("pretty printing") {
    QSeries th = jacobi_theta(10);
    CHECK(pretty_series(th) == "1 + 2*q + 2*q^4 + 2*q^9");
    QSeries h = named_series("eta:2,1;4,-2", 4);
    CHECK(pretty_series(h) == "q^(-1/4) - q^(7/4) + q^(15/4)");
    CHECK(pretty_series(QSeries::zero(5)) == "0");
}

TEST_CASE("vector valued series json") {
    VectorValuedSeries F = borcherds_input_FA(QuadForm(1, 1, 1), 14);
    json j = vvs_to_json(F);
    CHECK(j["modulus"] == 6);
    CHECK(j["components"].size() == 6);
    QSeries s = qseries_from_json(j["scalarized"]);
    CHECK(s.coeff_key(1) == -12);
}
