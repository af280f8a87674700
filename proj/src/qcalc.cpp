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

#include "qdeform/qcalc.hpp"

#include <utility>

namespace qdeform {

namespace {

int as_degree(Term a) {
  if (a > (1 << 24)) throw DomainError("partial quotient " + std::to_string(a) + " too large to deform");
  return static_cast<int>(a);
}

IntPolynomial q_integer_poly(Term a) {
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(as_degree(a)), BigInt(1)));
}

IntPolynomial q_pow(Term a) { return IntPolynomial::monomial(1, as_degree(a)); }

const QRational kOne{IntPolynomial{1}, IntPolynomial{1}};

}  // namespace

void QRational::validate() const {
  for (const IntPolynomial* p : {&num, &den}) {
    if (p->is_zero()) throw ConsistencyError("q-rational with a zero polynomial");
    for (const auto& c : p->coeffs()) {
      if (c < 1) throw ConsistencyError("q-rational coefficient not positive: " + to_string(*p));
    }
    if (p->coeffs().front() != 1 || p->leading() != 1) {
      throw ConsistencyError("q-rational extreme coefficients not 1: " + to_string(*p));
    }
  }
}

BigRat QRational::value_at_one() const {
  BigRat v(num.eval(BigInt(1)), den.eval(BigInt(1)));
  v.canonicalize();
  return v;
}

LaurentPolynomial q_integer(Term a) {
  if (a >= 0) return LaurentPolynomial(q_integer_poly(a));
  // -q^-1 - q^-2 - ... - q^a
  return LaurentPolynomial(static_cast<int>(a), -q_integer_poly(-a));
}

// ---------------------------------------------------------------------------

PolyMatrix PolyMatrix::identity() { return {IntPolynomial{1}, {}, {}, IntPolynomial{1}}; }

IntPolynomial PolyMatrix::det() const { return a * d - b * c; }

PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

PolyMatrix odd_factor(Term a) { return {q_integer_poly(a), q_pow(a), IntPolynomial{1}, {}}; }

PolyMatrix even_factor(Term a) { return {q_integer_poly(a).shifted_up(1), IntPolynomial{1}, q_pow(a), {}}; }

PolyMatrix convergent_matrix(std::span<const Term> terms) {
  PolyMatrix m = PolyMatrix::identity();
  for (std::size_t i = 0; i < terms.size(); ++i) m = m * (i % 2 == 0 ? odd_factor(terms[i]) : even_factor(terms[i]));
  return m;
}

QRational q_rational_matrix(const FiniteCF& cf) {
  if (cf.size() == 1 && cf[0] == 1) return kOne;
  if (cf.size() % 2 != 0) throw DomainError("q_rational_matrix: odd-length continued fraction; evenize first");
  const PolyMatrix m = convergent_matrix(cf.terms());
  QRational out{m.a.shifted_down(1), m.c.shifted_down(1)};
  out.validate();
  return out;
}

QRational q_rational_cf(const FiniteCF& cf) {
  if (cf.size() == 1 && cf[0] == 1) return kOne;
  if (cf.size() % 2 != 0) throw DomainError("q_rational_cf: odd-length continued fraction; evenize first");

  // Level i contributes head_i + weight_i / (deeper levels), with
  // head = [a]_q, weight = q^a at odd levels and head = [a]_{1/q},
  // weight = q^-a at even levels.
  auto head = [](std::size_t level, Term a) {
    const LaurentPolynomial qa(q_integer_poly(a));
    return level % 2 == 1 ? qa : qa.shifted(1 - as_degree(a));
  };
  auto weight = [](std::size_t level, Term a) {
    return LaurentPolynomial::q_power(level % 2 == 1 ? as_degree(a) : -as_degree(a));
  };

  const std::size_t n = cf.size();
  LaurentPolynomial num = head(n, cf[n - 1]);
  LaurentPolynomial den = LaurentPolynomial::q_power(0);
  for (std::size_t level = n - 1; level >= 1; --level) {
    const Term a = cf[level - 1];
    LaurentPolynomial next_num = head(level, a) * num + weight(level, a) * den;
    den = std::move(num);
    num = std::move(next_num);
  }

  if (num.min_degree() != den.min_degree()) {
    throw ConsistencyError("q_rational_cf: unexpected q-power unit in " + format_cf(cf));
  }
  IntPolynomial r = num.body();
  IntPolynomial s = den.body();
  const IntPolynomial g = gcd(r, s);
  r = divide_exact(r, g);
  s = divide_exact(s, g);
  if (s.lowest() < 0) {
    r = -r;
    s = -s;
  }
  QRational out{std::move(r), std::move(s)};
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------

FareyTriangle FareyTriangle::base() {
  return {FareyVertex{0, 1, IntPolynomial{}, IntPolynomial{1}}, FareyVertex{1, 0, IntPolynomial{1}, IntPolynomial{}}, 0};
}

FareyVertex FareyTriangle::mediant() const {
  const IntPolynomial w = IntPolynomial::monomial(1, ell);
  return {left.r + right.r, left.s + right.s, left.num + w * right.num, left.den + w * right.den};
}

FareyTriangle FareyTriangle::left_child() const { return {left, mediant(), 1}; }

FareyTriangle FareyTriangle::right_child() const { return {mediant(), right, ell + 1}; }

std::vector<FareyTriangle> farey_path(const BigInt& r_in, const BigInt& s_in) {
  BigRat x(r_in, s_in);
  if (s_in == 0) throw DomainError("farey_path: zero denominator");
  x.canonicalize();
  if (x < 1) throw DomainError("q_rational_farey: " + x.get_str() + " is below 1");
  const BigInt r = x.get_num();
  const BigInt s = x.get_den();

  std::vector<FareyTriangle> path{FareyTriangle::base()};
  while (true) {
    const FareyTriangle& t = path.back();
    const BigInt mr = t.left.r + t.right.r;
    const BigInt ms = t.left.s + t.right.s;
    const int cmp = ::cmp(BigInt(r * ms), BigInt(mr * s));
    if (cmp == 0) return path;
    path.push_back(cmp < 0 ? t.left_child() : t.right_child());
  }
}

QRational q_rational_farey(const BigInt& r, const BigInt& s) {
  const FareyVertex v = farey_path(r, s).back().mediant();
  QRational out{v.num, v.den};
  out.validate();
  return out;
}

QRational q_rational(const BigRat& x) { return q_rational_matrix(cf_of_rational(x)); }

TruncatedLaurentSeries taylor(const QRational& x, int order) { return series_div(x.num, x.den, order); }

// ---------------------------------------------------------------------------

std::optional<std::pair<int, int>> as_unit_monomial(const IntPolynomial& p) {
  if (p.is_zero()) return std::nullopt;
  const int v = p.valuation();
  if (v != p.degree()) return std::nullopt;
  const BigInt& c = p.leading();
  if (c != 1 && c != -1) return std::nullopt;
  return std::make_pair(v, c > 0 ? 1 : -1);
}

int expected_det_exponent(std::span<const Term> raw, std::size_t n) {
  const std::size_t m = n % 2 == 0 ? n : n - 1;
  Term sum = 0;
  for (std::size_t i = 0; i < m; ++i) sum += raw[i];
  return static_cast<int>(sum - 1);
}

DetIdentity det_identity(const CFStream& stream, std::size_t n) {
  if (n < 2) throw DomainError("det_identity: n must be >= 2");
  const std::vector<Term> raw = stream.take(n);
  if (raw.size() < n) throw DomainError("det_identity: stream '" + stream.name() + "' too short");
  const QRational prev = q_rational_matrix(FiniteCF(evenize({raw.begin(), raw.end() - 1})));
  const QRational cur = q_rational_matrix(FiniteCF(evenize(raw)));
  const IntPolynomial d = cur.num * prev.den - cur.den * prev.num;
  const auto mono = as_unit_monomial(d);
  const int want_exp = expected_det_exponent(raw, n);
  const int want_sign = n % 2 == 0 ? 1 : -1;
  if (!mono || mono->first != want_exp || mono->second != want_sign) {
    throw ConsistencyError("determinant identity violated at n=" + std::to_string(n) + " for '" + stream.name() +
                           "': got " + to_string(d));
  }
  return {mono->first, mono->second};
}

std::pair<int, int> farey_neighbor_relations(const FareyTriangle& t) {
  const FareyVertex m = t.mediant();
  const auto outer = as_unit_monomial(t.right.num * t.left.den - t.right.den * t.left.num);
  if (!outer || outer->second != 1) throw ConsistencyError("Farey parents are not a positive unit pair");
  const int a = outer->first;
  const auto with_left = as_unit_monomial(m.num * t.left.den - m.den * t.left.num);
  const auto with_right = as_unit_monomial(m.num * t.right.den - m.den * t.right.num);
  if (!with_left || *with_left != std::make_pair(a + t.ell, 1)) {
    throw ConsistencyError("left neighbor relation fails at mediant " + m.r.get_str() + "/" + m.s.get_str());
  }
  if (!with_right || *with_right != std::make_pair(a, -1)) {
    throw ConsistencyError("right neighbor relation fails at mediant " + m.r.get_str() + "/" + m.s.get_str());
  }
  return {a + t.ell, a};
}

}  // namespace qdeform
