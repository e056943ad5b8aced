#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lss/polynomial.hpp"

using namespace lss;

namespace {

Polynomial random_poly(std::mt19937_64& rng) {
    Polynomial p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        int factors = static_cast<int>(rng() % 3);
        for (int f = 0; f < factors; ++f) {
            Variable v{1 + static_cast<int>(rng() % 3),
                       1 + static_cast<int>(rng() % 3)};
            m = m * Monomial::var(v, 1 + static_cast<int>(rng() % 2));
        }
        long c = static_cast<long>(rng() % 9) - 4;
        p += from_terms({{m, BigInt(c)}});
    }
    return p;
}

} // namespace

TEST_CASE("basic arithmetic") {
    Polynomial x = Polynomial::var({1, 1});
    Polynomial y = Polynomial::var({2, 1});
    Polynomial p = (x + y) * (x - y);
    Polynomial q = x * x - y * y;
    CHECK(p == q);
    CHECK((p - q).is_zero());
    CHECK(p.degree() == 2);
    CHECK(Polynomial::zero().degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 1000; ++iter) {
        Polynomial a = random_poly(rng), b = random_poly(rng),
                   c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical form") {
    Polynomial x = Polynomial::var({1, 1});
    Polynomial y = Polynomial::var({1, 2});
    Polynomial p = from_terms({{Monomial::var({1, 1}), BigInt(-6)},
                               {Monomial::var({1, 2}), BigInt(4)}});
    Polynomial canon = p.canonicalized();
    // Content 1 and positive leading coefficient (x_{1,1} leads).
    CHECK(canon == from_terms({{Monomial::var({1, 1}), BigInt(3)},
                               {Monomial::var({1, 2}), BigInt(-2)}}));
    CHECK(canon.canonicalized() == canon);
    CHECK(Polynomial::zero().canonicalized().is_zero());

    // Scalar multiples collapse.
    CHECK((p * Polynomial::constant(-7)).canonicalized() == canon);
}

TEST_CASE("grlex order") {
    Monomial x = Monomial::var({1, 1});
    Monomial y = Monomial::var({1, 2});
    CHECK(Monomial::grlex_less(x, x * y));       // lower degree first
    CHECK(Monomial::grlex_less(y, x));           // earlier variable is larger
    CHECK(Monomial::grlex_less(x * y, x * x));   // larger exponent on x wins
    CHECK_FALSE(Monomial::grlex_less(x, x));
    // The leading term of a polynomial is its grlex maximum.
    Polynomial p = Polynomial::var({1, 2}) + Polynomial::var({1, 1});
    CHECK(p.terms().front().first == x);
}

TEST_CASE("evaluation") {
    Polynomial p = Polynomial::var({1, 1}) * Polynomial::var({2, 1}) +
                   Polynomial::constant(3);
    auto value_of = [](Variable v) {
        return v.i == 1 ? Rational(1, 2) : Rational(4);
    };
    CHECK(p.evaluate(value_of) == Rational(5));
}

TEST_CASE("printing") {
    Polynomial p = Polynomial::var({1, 1}) * Polynomial::var({1, 1}) -
                   Polynomial::constant(2) * Polynomial::var({2, 3});
    auto name = [](Variable v) {
        return "x_" + std::to_string(v.i) + "_" + std::to_string(v.j);
    };
    CHECK(p.to_string(name) == "x_1_1^2-2*x_2_3");
    CHECK(Polynomial::zero().to_string(name) == "0");
}
