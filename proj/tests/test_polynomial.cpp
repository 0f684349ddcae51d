#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "qtcomb/polynomial.hpp"

using namespace qtcomb;

TEST_CASE("monomial ordering is lexicographic on (q, t, z)") {
    CHECK(Monomial{0, 0, 1} < Monomial{0, 1, 0});
    CHECK(Monomial{0, 1, 0} < Monomial{1, 0, 0});
    CHECK(Monomial{0, 2, 5} < Monomial{1, 0, 0});
    CHECK(Monomial{1, 2, 3} == Monomial{1, 2, 3});
}

TEST_CASE("construction and term access") {
    Polynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.str() == "0");

    Polynomial c{7};
    CHECK(c.coeff({}) == 7);
    CHECK(c.str() == "7");

    Polynomial m{2, Monomial{1, 2, 0}};
    CHECK(m.str() == "2*q*t^2");
    CHECK(m.coeff(Monomial{1, 2, 0}) == 2);
    CHECK(m.coeff(Monomial{0, 0, 0}) == 0);

    CHECK(Polynomial::q().str() == "q");
    CHECK(Polynomial::t(3).str() == "t^3");
    CHECK(Polynomial::z(2).str() == "z^2");
    CHECK(Polynomial{0}.is_zero());
}

TEST_CASE("canonical order puts z terms before t terms before q terms") {
    const Polynomial p = Polynomial::q() + Polynomial::t() + Polynomial::z();
    CHECK(p.str() == "z + t + q");
}

TEST_CASE("negative exponents are rejected") {
    Polynomial p;
    CHECK_THROWS_AS(p.add_term(Monomial{-1, 0, 0}, 1), std::invalid_argument);
    CHECK_THROWS_AS(p.add_term(Monomial{0, -2, 0}, 1), std::invalid_argument);
}

TEST_CASE("arithmetic keeps canonical form") {
    const Polynomial t = Polynomial::t();
    const Polynomial a = t + Polynomial{1};
    const Polynomial b = t - Polynomial{1};
    CHECK(b.str() == "-1 + t");
    CHECK((a * b).str() == "-1 + t^2");
    CHECK((a - a).is_zero());
    CHECK((-b).str() == "1 - t");

    Polynomial sum;
    sum.add_term(Monomial{0, 1, 0}, 2);
    sum.add_term(Monomial{0, 1, 0}, -2);
    CHECK(sum.is_zero());
}

TEST_CASE("multiplication distributes over mixed variables") {
    const Polynomial p = (Polynomial::q() + Polynomial::t()) * (Polynomial::q() - Polynomial::t());
    CHECK(p == Polynomial::q(2) - Polynomial::t(2));
}

TEST_CASE("substitution") {
    const Polynomial p = q_analog(3);
    CHECK(p.substitute_q(1) == Polynomial{3});
    CHECK(p.substitute_q(-1) == Polynomial{1});

    const Polynomial graded = Polynomial::t() * Polynomial::z() + Polynomial::z(2);
    CHECK(graded.substitute_z(1) == Polynomial::t() + Polynomial{1});

    const Polynomial left = q_analog(2) * q_analog(3);
    CHECK(left.substitute_q(-1) == q_analog(2).substitute_q(-1) * q_analog(3).substitute_q(-1));
    CHECK(left.substitute_q(5) == q_analog(2).substitute_q(5) * q_analog(3).substitute_q(5));
}

TEST_CASE("coefficient_sum is evaluation at 1") {
    CHECK(t_factorial(4).coefficient_sum() == 24);
    CHECK(Polynomial{}.coefficient_sum() == 0);
    CHECK((Polynomial::q() - Polynomial::t()).coefficient_sum() == 0);
}

TEST_CASE("t-analogues") {
    CHECK(t_analog(0).is_zero());
    CHECK(t_analog(1) == Polynomial{1});
    CHECK(t_analog(3).str() == "1 + t + t^2");
    CHECK(q_analog(2).str() == "1 + q");
    CHECK(t_factorial(0) == Polynomial{1});
    CHECK(t_factorial(3).str() == "1 + 2*t + 2*t^2 + t^3");
    for (int n = 1; n <= 6; ++n) CHECK(t_factorial(n) == t_factorial(n - 1) * t_analog(n));
    CHECK_THROWS_AS(t_analog(-1), std::invalid_argument);
    CHECK_THROWS_AS(t_factorial(-2), std::invalid_argument);
}

TEST_CASE("overflow throws instead of wrapping") {
    const auto big = std::numeric_limits<Polynomial::Coeff>::max();
    Polynomial p{big};
    CHECK_THROWS_AS(p += Polynomial{big}, std::overflow_error);

    Polynomial pow = Polynomial{1, Monomial{70, 0, 0}};
    CHECK_THROWS_AS(pow.substitute_q(2), std::overflow_error);

    CHECK_THROWS_AS(Polynomial{big} * Polynomial{2}, std::overflow_error);
}

TEST_CASE("str renders signs and magnitudes") {
    Polynomial p;
    p.add_term(Monomial{0, 0, 0}, -3);
    p.add_term(Monomial{0, 1, 0}, 1);
    p.add_term(Monomial{0, 2, 0}, -1);
    CHECK(p.str() == "-3 + t - t^2");
    CHECK(Polynomial{-5}.str() == "-5");
    const auto low = std::numeric_limits<Polynomial::Coeff>::min();
    CHECK(Polynomial{low}.str() == "-9223372036854775808");
}
