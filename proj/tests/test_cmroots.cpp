#include <doctest.h>

#include <cmath>

#include "thetaprod/cmroots.hpp"
#include "thetaprod/gram.hpp"

using namespace thetaprod;

TEST_CASE("root classes of [1,1,1]") {
    RootSearchResult r = cm_root_classes(QuadForm(1, 1, 1));
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0].N == 3);
    CHECK(r.classes[0].d == -3);
    CHECK(r.classes[0].h == 3);
    // the four candidate tuples: one accepted with (h,d) = (3,-3),
    // three rejected with (h,d) = (5,13)
    REQUIRE(r.candidates.size() == 4);
    int accepted = 0, rejected = 0;
    for (const auto& c : r.candidates) {
        if (c.accepted) {
            ++accepted;
            CHECK(c.h == 3);
            CHECK(c.d == -3);
            CHECK(std::array{c.alpha, c.beta, c.gamma} == std::array<long, 3>{2, -1, 2});
        } else {
            ++rejected;
            CHECK(c.h == 5);
            CHECK(c.d == 13);
        }
    }
    CHECK(accepted == 1);
    CHECK(rejected == 3);
}

TEST_CASE("[1,0,1] has no roots") {
    RootSearchResult r = cm_root_classes(QuadForm(1, 0, 1));
    CHECK(r.classes.empty());
    for (const auto& c : r.candidates) CHECK(c.d == 0);  // rejected boundary cases

    // falsification scan: theta is bounded away from zero on a coarse grid
    // over x in [-1/2, 1/2], y in [0.15, 1.2] (grid step 1/24)
    QSeries th = theta_series(hermitian_to_gram(QuadForm(1, 0, 1)), 120);
    double minmod = 1e9;
    for (int xi = -12; xi <= 12; ++xi)
        for (int yi = 4; yi <= 29; ++yi) {
            std::complex<double> tau(xi / 24.0, yi / 24.0);
            minmod = std::min(minmod, std::abs(evaluate_numeric(th, tau).value));
        }
    CHECK(minmod > 1e-2);
}

TEST_CASE("representatives of Q_{3,-3,3}") {
    CMClass cls(3, -3, 3);
    auto reps = cm_representatives(cls, 4);
    REQUIRE(reps.size() == 4);
    CHECK(reps[0].A == 3);
    CHECK(reps[0].B == 3);
    CHECK(reps[0].C == 1);
    for (const auto& p : reps) {
        CHECK(p.B * p.B - 4 * p.A * p.C == -3);
        CHECK(p.A % 3 == 0);
        CHECK(((p.B - 3) % 6 + 6) % 6 == 0);
    }
    std::complex<double> tau = reps[0].tau(-3);
    CHECK(std::abs(tau - std::complex<double>(-0.5, std::sqrt(3.0) / 6.0)) < 1e-14);

    CHECK_THROWS_AS(CMClass(3, -4, 3), std::invalid_argument);  // h^2 != d mod 4N
    CHECK_THROWS_AS(CMClass(3, 5, 1), std::invalid_argument);   // d >= 0
}

TEST_CASE("verify_root at the CM point of [1,1,1]") {
    QuadForm A(1, 1, 1);
    RootReport rep = verify_root(A, CMClass(3, -3, 3), 200, 1e-6);
    CHECK(rep.all_pass);
    for (const auto& e : rep.evaluations) {
        CHECK(e.abs_value < 1e-6);
        CHECK(e.tail_bound < 5e-7);
    }

    // non-root point: the same series is far from zero at tau = i
    QSeries th = theta_series(hermitian_to_gram(A), 200);
    NumericEval at_i = evaluate_numeric(th, {0.0, 1.0});
    CHECK(std::abs(at_i.value) > 0.5);

    // too-tight tolerance trips the tail precondition
    CHECK_THROWS_AS(verify_root(A, CMClass(3, -3, 3), 200, 1e-300), std::invalid_argument);
}

TEST_CASE("root classes verify numerically for all small discriminants") {
    // every binary form with |D| <= 20 (up to the scan box), every reported
    // class, first three representatives
    int forms = 0, classes_checked = 0;
    for (long a = 1; a <= 5; ++a)
        for (long c = 1; c <= 5; ++c)
            for (long b = -4; b <= 4; ++b) {
                long D = b * b - 4 * a * c;
                if (D >= 0 || -D > 20) continue;
                QuadForm A(a, b, c);
                ++forms;
                RootSearchResult r = cm_root_classes(A);
                if (r.classes.empty()) continue;
                // pick T so that the tail bound at the worst representative
                // (largest A, hence smallest Im tau) stays below tol/2
                for (const CMClass& cls : r.classes) {
                    // d = D occurs (the [1,1,1] root class has d = D = -3)
                    CHECK(cls.d >= D);
                    CHECK(cls.d < 0);
                    CHECK(((cls.h * cls.h - cls.d) % (4 * cls.N)) == 0);
                    double im = std::sqrt((double)-cls.d) / (2.0 * 3 * cls.N);
                    long T = std::max(300L, (long)(30.0 / im) + 50);
                    RootReport rep = verify_root(A, cls, T, 1e-5);
                    CAPTURE(A.to_string());
                    CAPTURE(cls.d);
                    CAPTURE(cls.h);
                    CHECK(rep.all_pass);
                    ++classes_checked;
                }
            }
    CHECK(forms > 30);
    CHECK(classes_checked > 10);
}
