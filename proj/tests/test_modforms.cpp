#include <doctest.h>

#include "thetaprod/gram.hpp"
#include "thetaprod/modforms.hpp"

using namespace thetaprod;

TEST_CASE("jacobi theta expansion") {
    QSeries th = jacobi_theta(10);
    CHECK(th.coeff_key(0) == 1);
    CHECK(th.coeff_key(1) == 2);
    CHECK(th.coeff_key(4) == 2);
    CHECK(th.coeff_key(9) == 2);
    CHECK(th.term_count() == 4);

    CHECK(jacobi_theta(1).term_count() == 1);

    QSeries big = jacobi_theta(200);
    for (long n = 0; n < 200; ++n) {
        long r = 0;
        while (r * r < n) ++r;
        long expect = (n == 0) ? 1 : (r * r == n ? 2 : 0);
        CHECK(big.coeff_key(n) == expect);
    }
}

TEST_CASE("eta quotient h = eta(2t)/eta(4t)^2") {
    QSeries h = eta_quotient(EtaQuotientSpec::parse("2,1;4,-2"), 12);
    CHECK(h.denom() == 4);
    CHECK(h.lead_exponent() == make_rat(-1, 4));
    std::vector<long> expect{1, 0, -1, 0, 1, 0, -2, 0, 3, 0, -4};
    for (long k = 0; k < (long)expect.size(); ++k)
        CHECK(h.coeff_at(make_rat(-1, 4) + Rat(k)) == expect[k]);
}

TEST_CASE("eta(t)^24 equals delta") {
    QSeries e24 = eta_quotient(EtaQuotientSpec::parse("1,24"), 16);
    CHECK(agree_to_trunc(e24, delta(16)));
}

TEST_CASE("eta(4t)^2/eta(2t) inverts h") {
    QSeries hinv = eta_quotient(EtaQuotientSpec::parse("4,2;2,-1"), 12);
    QSeries h = eta_quotient(EtaQuotientSpec::parse("2,1;4,-2"), 14);
    CHECK(agree_to_trunc(hinv, invert(h)));
}

TEST_CASE("eisenstein series") {
    QSeries e2 = eisenstein(2, 8);
    CHECK(e2.coeff_key(0) == 1);
    CHECK(e2.coeff_key(1) == -24);
    CHECK(e2.coeff_key(2) == -72);

    QSeries e4 = eisenstein(4, 8);
    CHECK(e4.coeff_key(0) == 1);
    CHECK(e4.coeff_key(1) == 240);
    CHECK(e4.coeff_key(2) == 2160);
    CHECK(e4.coeff_key(3) == 6720);

    QSeries e6 = eisenstein(6, 8);
    CHECK(e6.coeff_key(1) == -504);

    // (E4^3 - E6^2)/1728 = delta, exact division
    QSeries diff = pow(e4, 3) - pow(e6, 2);
    for (const auto& [k, c] : diff.nonzero_terms()) {
        (void)k;
        CHECK(is_integer(c / 1728));
    }
    QSeries dl = make_rat(1, 1728) * diff;
    CHECK(agree_to_trunc(dl, delta(8)));
}

TEST_CASE("j invariant") {
    QSeries j = j_invariant(6);
    CHECK(j.lead_key() == -1);
    CHECK(j.coeff_key(-1) == 1);
    CHECK(j.coeff_key(0) == 744);
    CHECK(j.coeff_key(1) == 196884);
    CHECK(j.coeff_key(2) == 21493760);
}

TEST_CASE("theta with characteristic") {
    QuadForm A(1, 1, 1);
    // zero characteristic reduces to the plain theta
    QSeries t0 = theta_characteristic(A, {0, 0}, {0, 0}, 14);
    QSeries plain = theta_series(hermitian_to_gram(A), 14);
    CHECK(agree_to_trunc(t0, plain));

    // oracle: direct double sum over a wide box
    auto oracle = [&](int m1, int m2, int n1, int n2, long T) {
        std::map<long, Rat> terms;
        for (long x = -40; x <= 40; ++x)
            for (long y = -40; y <= 40; ++y) {
                long u = 2 * x + m1, v = 2 * y + m2;
                long q4 = u * u + u * v + v * v;
                if (q4 >= 4 * T) continue;
                terms[q4] += ((n1 * x + n2 * y) % 2 + 2) % 2 ? Rat(-1) : Rat(1);
            }
        return QSeries::from_terms(4, 4 * T, terms);
    };
    QSeries t10 = theta_characteristic(A, {0, 0}, {1, 0}, 12);
    CHECK(agree_to_trunc(t10, oracle(0, 0, 1, 0, 12)));
    QSeries t11 = theta_characteristic(A, {1, 1}, {0, 0}, 12);
    CHECK(agree_to_trunc(t11, oracle(1, 1, 0, 0, 12)));

    // all ten even characteristics have integer coefficients
    int evens = 0;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            int m1 = mu & 1, m2 = mu >> 1, n1 = nu & 1, n2 = nu >> 1;
            if ((m1 * n1 + m2 * n2) % 2 != 0) continue;
            ++evens;
            QSeries t = theta_characteristic(A, {m1, m2}, {n1, n2}, 10);
            for (const auto& [k, c] : t.nonzero_terms()) {
                (void)k;
                CHECK(is_integer(c));
            }
        }
    CHECK(evens == 10);

    CHECK_THROWS_AS(theta_characteristic(A, {1, 0}, {1, 0}, 8), std::invalid_argument);
}

TEST_CASE("named series registry") {
    CHECK(agree_to_trunc(named_series("theta", 9), jacobi_theta(9)));
    CHECK(agree_to_trunc(named_series("inv_theta", 9), invert(jacobi_theta(9))));
    CHECK(agree_to_trunc(named_series("E4", 9), eisenstein(4, 9)));
    CHECK(agree_to_trunc(named_series("delta", 9), delta(9)));
    CHECK(named_series("j", 5).lead_key() == -1);
    CHECK(named_series("eta:2,1;4,-2", 6).lead_exponent() == make_rat(-1, 4));
    CHECK_THROWS_AS(named_series("nope", 5), std::invalid_argument);
}
