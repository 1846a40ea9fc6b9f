#include "doctest.h"

#include "chroma/error.hpp"
#include "chroma/polynomial.hpp"

using namespace chroma;

TEST_CASE("polynomial normal form and degree") {
    IntPolynomial p(std::vector<Int>{1, 2, 0, 0});
    CHECK(p.degree() == 1);
    CHECK(IntPolynomial().is_zero());
    CHECK(IntPolynomial(std::vector<Int>{0, 0}).is_zero());
    CHECK(IntPolynomial::monomial(3).degree() == 3);
    CHECK(IntPolynomial::monomial(3).is_monic());
}

TEST_CASE("polynomial arithmetic and evaluation") {
    IntPolynomial chi(std::vector<Int>{0, 2, -3, 1});  // n^3 - 3n^2 + 2n
    CHECK(chi(0) == 0);
    CHECK(chi(3) == 6);
    CHECK(chi(Int(-1)) == -6);
    IntPolynomial nm1(std::vector<Int>{-1, 1});
    CHECK(nm1 * nm1 == IntPolynomial(std::vector<Int>{1, -2, 1}));
    CHECK(chi - chi == IntPolynomial::zero());
    CHECK(chi + IntPolynomial::zero() == chi);
    CHECK((chi * Int(2))(3) == 12);
}

TEST_CASE("shift by t") {
    IntPolynomial p(std::vector<Int>{0, 1, 10, 7});
    CHECK(p.shifted_down() == IntPolynomial(std::vector<Int>{1, 10, 7}));
    CHECK(p.shifted_down().shifted_up(1) == p);
    CHECK_THROWS_AS(IntPolynomial::constant(3).shifted_down(), DomainError);
    CHECK(IntPolynomial::zero().shifted_down().is_zero());
}

TEST_CASE("printing") {
    IntPolynomial chi(std::vector<Int>{0, 2, -3, 1});
    CHECK(chi.to_string() == "n^3 - 3n^2 + 2n");
    CHECK(chi.coefficient_string() == "0 2 -3 1");
    CHECK(IntPolynomial::zero().coefficient_string() == "0");
    CHECK(IntPolynomial::zero().to_string() == "0");
}
