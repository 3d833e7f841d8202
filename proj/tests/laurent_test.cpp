#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "superkl/laurent.hpp"

#include <stdexcept>

using skl::Int;
using skl::Laurent;
using skl::exact_div;
using skl::quantum_factorial;
using skl::quantum_int;

static Laurent L(const char* s) { return Laurent::parse(s); }

TEST_CASE("arithmetic basics") {
    Laurent a = L("q^2 + 1");
    Laurent b = L("q + q^-1");
    CHECK(a + b == L("q^2 + q + 1 + q^-1"));
    CHECK(a - a == Laurent());
    CHECK(a * b == L("q^3 + 2*q + q^-1"));
    CHECK((-b) == L("-q - q^-1"));
    CHECK(Laurent(0).is_zero());
    CHECK(Laurent(7).eval_at_one() == 7);
}

TEST_CASE("quantum integers") {
    CHECK(quantum_int(0).is_zero());
    CHECK(quantum_int(1) == Laurent(1));
    CHECK(quantum_int(2) == L("q + q^-1"));
    CHECK(quantum_int(3) == L("q^2 + 1 + q^-2"));
    CHECK(quantum_int(-2) == -quantum_int(2));
    // [n] at q = 1 is n.
    for (int n = 0; n <= 6; ++n) CHECK(quantum_int(n).eval_at_one() == n);
    // Defining relation [n](q - q^-1) = q^n - q^-n.
    for (int n = 1; n <= 6; ++n) {
        Laurent lhs = quantum_int(n) * L("q - q^-1");
        Laurent rhs = Laurent::q(n) - Laurent::q(-n);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("quantum factorial") {
    CHECK(quantum_factorial(0) == Laurent(1));
    CHECK(quantum_factorial(1) == Laurent(1));
    CHECK(quantum_factorial(2) == L("q + q^-1"));
    CHECK(quantum_factorial(3) == L("q^3 + 2*q + 2*q^-1 + q^-3"));
    CHECK(quantum_factorial(4).eval_at_one() == 24);
    for (int n = 1; n <= 5; ++n) {
        CHECK(quantum_factorial(n) == quantum_factorial(n - 1) * quantum_int(n));
        CHECK(quantum_factorial(n).bar_symmetric());
    }
}

TEST_CASE("bar and sign-twisted substitution") {
    Laurent a = L("q^3 - 2*q + 5 + q^-2");
    CHECK(a.bar() == L("q^2 + 5 - 2*q^-1 + q^-3"));
    CHECK(a.bar().bar() == a);
    CHECK(a.substitute_neg_inv() == L("q^2 + 5 + 2*q^-1 - q^-3"));
    CHECK(a.substitute_neg_inv().substitute_neg_inv() == a);
    CHECK(quantum_int(4).bar() == quantum_int(4));
}

TEST_CASE("exact division") {
    CHECK(exact_div(L("q^2 + 1"), L("q + q^-1")) == L("q"));
    CHECK(exact_div(quantum_factorial(4), quantum_factorial(3)) == quantum_int(4));
    CHECK(exact_div(Laurent(), L("q + 1")).is_zero());
    Laurent a = L("q^3 - 4*q + 2 + 7*q^-2");
    Laurent b = L("q^2 - 3 + q^-1");
    CHECK(exact_div(a * b, b) == a);
    CHECK(exact_div(a * b, a) == b);
    CHECK_THROWS_AS(exact_div(L("q + 1"), L("q - 1")), std::domain_error);
    CHECK_THROWS_AS(exact_div(L("1"), L("q + 1")), std::domain_error);
    CHECK_THROWS_AS(exact_div(L("q"), Laurent()), std::domain_error);
    CHECK_THROWS_AS(exact_div(L("2*q"), L("4*q")), std::domain_error);
}

TEST_CASE("text form") {
    CHECK(L("q^3 + 2*q + q^-1").str() == "q^3 + 2*q + q^-1");
    CHECK(L("q^2 - 3*q").str() == "q^2 - 3*q");
    CHECK(Laurent().str() == "0");
    CHECK(L("-5").str() == "-5");
    CHECK(L("-q + 1").str() == "-q + 1");
    CHECK(L("q^-2").str() == "q^-2");
    CHECK(Laurent::parse("0").is_zero());
    // Round trips.
    for (const char* s : {"q^5 - 2*q^3 + 17 - q^-4", "3", "-q^-1", "q"}) {
        CHECK(Laurent::parse(Laurent::parse(s).str()) == Laurent::parse(s));
        CHECK(Laurent::parse(s).str() == s);
    }
}

TEST_CASE("coefficient ranges and slicing") {
    Laurent a = L("q^2 + q^-3");
    CHECK(a.min_exp() == -3);
    CHECK(a.max_exp() == 2);
    CHECK(a.coeff(2) == 1);
    CHECK(a.coeff(0) == 0);
    CHECK(a.slice(0, 2) == L("q^2"));
    CHECK(L("q^2 + q").in_q_z_q());
    CHECK(!L("q^2 + 1").in_q_z_q());
    CHECK(L("q^2 + 1").in_z_q());
    CHECK(L("q^-1 + 1").in_z_qinv());
    CHECK(L("q^-1").in_qinv_z_qinv());
    CHECK(L("q + 2").nonneg_coeffs());
    CHECK(!L("q - 2").nonneg_coeffs());
    // Big coefficients survive exactly.
    Laurent big = Laurent::term(Int("123456789012345678901234567890"), 1);
    CHECK((big * big).coeff(2) == Int("15241578753238836750495351562536198787501905199875019052100"));
}
