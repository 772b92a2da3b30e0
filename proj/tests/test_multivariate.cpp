#include <doctest.h>

#include "thetaprod/borcherds.hpp"

using namespace thetaprod;

TEST_CASE("theta constant monomials for m=1") {
    MultiPoly t = theta_constant_m_truncated(1, 2);
    CHECK(t.coeff(Monomial{}) == 1);
    // (lambda,mu) = (1,1),(-1,-1) give q^(1/2) r s^(1/2)
    Monomial m;
    m.a = 1;
    m.g = 1;
    m.b = {1, 0, 0};
    CHECK(t.coeff(m) == 2);
    m.b = {-1, 0, 0};
    CHECK(t.coeff(m) == 2);
    m.b = {0, 0, 0};
    CHECK(t.coeff(m) == 0);
    // pure q side counts 2 per nonzero integer
    Monomial q1;
    q1.a = 1;
    CHECK(t.coeff(q1) == 2);
}

TEST_CASE("psi constant term") {
    MultiPoly p = psi_m_truncated(1, 1);
    CHECK(p.coeff(Monomial{}) == 1);
}

TEST_CASE("psi equals theta constant: m=1") {
    for (int B = 1; B <= 3; ++B) {
        MultiPoly p = psi_m_truncated(1, B);
        MultiPoly t = theta_constant_m_truncated(1, B);
        CAPTURE(B);
        CHECK(p == t);
    }
}

TEST_CASE("psi equals theta constant: m=2") {
    MultiPoly p = psi_m_truncated(2, 2);
    MultiPoly t = theta_constant_m_truncated(2, 2);
    CHECK(p == t);
}

TEST_CASE("psi equals theta constant: m=3") {
    MultiPoly p = psi_m_truncated(3, 1);
    MultiPoly t = theta_constant_m_truncated(3, 1);
    CHECK(p == t);
}
