/*
   Copyright 2026 The qdeform Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "qdeform/exactalg.hpp"

using namespace qdeform;

namespace {

TruncatedLaurentSeries poly_series(std::initializer_list<long> c, int order, int low = 0) {
  return TruncatedLaurentSeries::from_polynomial(LaurentPolynomial(low, IntPolynomial(c)), order);
}

std::vector<BigRat> ints(std::initializer_list<long> c) {
  std::vector<BigRat> out;
  for (long v : c) out.emplace_back(v);
  return out;
}

IntPolynomial random_poly(std::mt19937& rng, int max_degree, bool unit_constant = false) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-9, 9);
  std::vector<BigInt> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coef(rng);
  if (unit_constant) c[0] = 1;
  return IntPolynomial(std::move(c));
}

oracle::Poly to_oracle(const IntPolynomial& p) { return oracle::from_dense(p.coeffs()); }

}  // namespace

TEST_CASE("polynomials are trimmed and report degree and valuation") {
  const IntPolynomial p{0, 0, 3, 0, 0};
  CHECK(p.degree() == 2);
  CHECK(p.valuation() == 2);
  CHECK(p.coeffs().size() == 3);
  CHECK(IntPolynomial{}.is_zero());
  CHECK(IntPolynomial{0, 0}.degree() == -1);
  CHECK((IntPolynomial{1, 1} - IntPolynomial{1, 1}).is_zero());
}

TEST_CASE("coefficients are exact beyond 64 bits") {
  IntPolynomial p{1, 1};
  IntPolynomial acc{1};
  for (int i = 0; i < 200; ++i) acc *= p;
  BigInt binom;
  mpz_bin_uiui(binom.get_mpz_t(), 200, 100);
  CHECK(acc.coeff(100) == binom);
  CHECK(acc.eval(BigInt(1)) == BigInt(1) << 200);
}

TEST_CASE("exact division and gcd") {
  const IntPolynomial a{1, 1, 2, 2, 1};
  const IntPolynomial b{1, 1, 2, 1};
  const IntPolynomial g{1, 1};  // 1 + q
  CHECK(divide_exact(a * g, g) == a);
  CHECK(gcd(a * g, b * g) == g);
  CHECK(gcd(IntPolynomial{2, 4}, IntPolynomial{3, 6}) == IntPolynomial{1, 2});
  CHECK_THROWS_AS(divide_exact(a, IntPolynomial{1, 2}), DomainError);
  CHECK(IntPolynomial{6, 4, -2}.content() == 2);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20260415);
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial a = random_poly(rng, 6);
    const IntPolynomial b = random_poly(rng, 6);
    const IntPolynomial c = random_poly(rng, 6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(to_oracle(a * b) == oracle::mul(to_oracle(a), to_oracle(b)));
  }
}

TEST_CASE("Laurent polynomials normalize their q-power") {
  const LaurentPolynomial p(-2, IntPolynomial{0, 1, 1});
  CHECK(p.min_degree() == -1);
  CHECK(p.max_degree() == 0);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.shifted(1) == LaurentPolynomial(IntPolynomial{1, 1}));
  CHECK((p * LaurentPolynomial::q_power(1)).is_polynomial());
  CHECK(LaurentPolynomial::q_power(3).is_monomial());
}

TEST_CASE("series addition cancels within the window") {
  const auto s = poly_series({1, 1}, 5) + poly_series({1, -1}, 5);
  CHECK(s.min_degree() == 0);
  CHECK(s.order() == 5);
  CHECK(s.coeffs() == ints({2, 0, 0, 0, 0}));
}

TEST_CASE("series product with a truncated geometric inverse") {
  const auto s = poly_series({1, 1}, 5) * poly_series({1, -1, 1, -1, 1}, 5);
  CHECK(s.order() == 5);
  CHECK(s.coeffs() == ints({1, 0, 0, 0, 0}));
}

TEST_CASE("Laurent shift keeps the window honest") {
  // Both factors known through q^3; the product is certain through q^2.
  const auto inv_q = TruncatedLaurentSeries(-1, ints({1, 0, 0, 0, 0}));
  const auto s = inv_q * poly_series({0, 1, 1}, 4);
  CHECK(s.min_degree() == 0);
  CHECK(s.order() == 3);
  CHECK(s.coeffs() == ints({1, 1, 0}));
  // The exact monomial factor shifts the window instead.
  const auto exact = LaurentPolynomial::q_power(-1) * poly_series({0, 1, 1}, 4);
  CHECK(exact.order() == 3);
  CHECK(exact.coeff(1) == 1);
}

TEST_CASE("an empty window is a precision error") {
  CHECK_THROWS_AS(TruncatedLaurentSeries(0, {}), PrecisionError);
  const auto s = poly_series({1, 1}, 3);
  CHECK_THROWS_AS(static_cast<void>(s.coeff(3)), PrecisionError);
}

TEST_CASE("series division examples") {
  const auto s = series_div(IntPolynomial{1, 1, 2, 2, 1}, IntPolynomial{1, 1, 2, 1}, 13);
  CHECK(s.coeffs() == ints({1, 0, 0, 1, 0, -2, 1, 3, -3, -4, 7, 4, -14}));
  CHECK(series_div(IntPolynomial{1}, IntPolynomial{1, -1}, 4).coeffs() == ints({1, 1, 1, 1}));
  const auto half = series_div(IntPolynomial{0, 1}, IntPolynomial{1, 1}, 4);
  CHECK(half.min_degree() == 1);
  CHECK(half.coeffs() == ints({1, -1, 1}));
  CHECK_THROWS_AS(series_div(IntPolynomial{1}, IntPolynomial{}, 4), DomainError);
}

TEST_CASE("series division agrees with long division") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial num = random_poly(rng, 8);
    IntPolynomial den = random_poly(rng, 6, true);
    if (trial % 3 == 0) den = den.shifted_up(2);
    if (num.is_zero()) continue;
    const auto s = series_div(num, den, 20);
    const auto expected = oracle::long_division(to_oracle(num), to_oracle(den), 20);
    for (int d = s.min_degree(); d < 20; ++d) {
      const auto it = expected.find(d);
      CHECK(s.coeff(d) == (it == expected.end() ? BigRat(0) : it->second));
    }
  }
}

TEST_CASE("series division round trip") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntPolynomial num = random_poly(rng, 8);
    const IntPolynomial den = random_poly(rng, 6, true);
    if (num.is_zero()) continue;
    const int n = 25;
    const auto s = series_div(num, den, n);
    CHECK(s.is_integral());
    const auto back = LaurentPolynomial(den) * s;
    for (int d = 0; d < n; ++d) CHECK(back.coeff(d) == BigRat(num.coeff(d)));
  }
}

TEST_CASE("square root examples") {
  CHECK(series_sqrt(poly_series({1}, 5), 5).coeffs() == ints({1, 0, 0, 0, 0}));
  CHECK(series_sqrt(poly_series({1, 2, 1}, 5), 5).coeffs() == ints({1, 1, 0, 0, 0}));
  CHECK(series_sqrt(poly_series({1, 2, -1, 2, 1}, 8), 3).coeffs() == ints({1, 1, -1}));
  CHECK_THROWS_AS(series_sqrt(poly_series({2, 1}, 5), 5), DomainError);
  CHECK_THROWS_AS(series_sqrt(poly_series({0, 1}, 5), 5), DomainError);
}

TEST_CASE("square root round trip with rational intermediates") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const IntPolynomial p = random_poly(rng, 6, true);
    const int n = 15;
    const auto s = TruncatedLaurentSeries::from_polynomial(LaurentPolynomial(p), n);
    const auto r = series_sqrt(s, n);
    const auto sq = r * r;
    for (int d = 0; d < n; ++d) CHECK(sq.coeff(d) == s.coeff(d));
  }
  // 1 + q has a non-integral square root: 1 + q/2 - q^2/8 + ...
  const auto r = series_sqrt(poly_series({1, 1}, 4), 4);
  CHECK(r.coeff(1) == BigRat(1, 2));
  CHECK(r.coeff(2) == BigRat(-1, 8));
  CHECK_FALSE(r.is_integral());
}

TEST_CASE("arithmetic is deterministic") {
  const auto a = series_div(IntPolynomial{1, 3, 5, 7}, IntPolynomial{1, -2, 4}, 40);
  const auto b = series_div(IntPolynomial{1, 3, 5, 7}, IntPolynomial{1, -2, 4}, 40);
  CHECK(a == b);
  CHECK(to_string(a) == to_string(b));
}
