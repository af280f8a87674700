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

#include "qdeform/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace qdeform {

std::string to_string(const BigInt& v) { return v.get_str(); }

std::string to_string(const BigRat& v) { return v.get_str(); }

namespace {

// Renders sum of c_k q^k for the nonzero terms, degrees ascending.
template <class Coeff>
void append_term(std::ostringstream& os, bool& first, const Coeff& c, int degree,
                 const std::string& var) {
  if (c == 0) return;
  const bool negative = c < 0;
  Coeff mag = negative ? Coeff(-c) : c;
  if (first) {
    if (negative) os << "-";
  } else {
    os << (negative ? " - " : " + ");
  }
  first = false;
  const bool unit = (mag == 1);
  if (degree == 0) {
    os << mag.get_str();
    return;
  }
  if (!unit) os << mag.get_str() << "*";
  os << var;
  if (degree != 1) os << "^" << degree;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw DomainError("monomial: negative degree");
  std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int IntPolynomial::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

BigInt IntPolynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

const BigInt& IntPolynomial::leading() const {
  if (is_zero()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

const BigInt& IntPolynomial::lowest() const {
  if (is_zero()) throw DomainError("lowest coefficient of the zero polynomial");
  return coeffs_[static_cast<std::size_t>(valuation())];
}

BigInt IntPolynomial::eval(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

BigRat IntPolynomial::eval(const BigRat& q) const {
  BigRat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + BigRat(*it);
  acc.canonicalize();
  return acc;
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::shifted_up(int k) const {
  if (k < 0) throw DomainError("shifted_up: negative shift");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted_down(int k) const {
  if (k < 0) throw DomainError("shifted_down: negative shift");
  if (is_zero()) return {};
  if (valuation() < k) throw DomainError("shifted_down: q^k does not divide the polynomial");
  return IntPolynomial(std::vector<BigInt>(coeffs_.begin() + k, coeffs_.end()));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
IntPolynomial operator-(const IntPolynomial& a) { return a * BigInt(-1); }
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial r = a;
  r *= b;
  return r;
}
IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }

IntPolynomial divide_exact(const IntPolynomial& a, const BigInt& c) {
  if (c == 0) throw DomainError("division by zero");
  std::vector<BigInt> v = a.coeffs();
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) {
      throw DomainError("divide_exact: coefficient not divisible");
    }
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw DomainError("divide_exact: not divisible");
  std::vector<BigInt> rem = a.coeffs();
  const int db = b.degree();
  const BigInt& lb = b.leading();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt& top = rem[static_cast<std::size_t>(k + db)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw DomainError("divide_exact: not divisible");
    }
    BigInt qk;
    mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[static_cast<std::size_t>(k + j)].get_mpz_t(), qk.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[static_cast<std::size_t>(k)] = std::move(qk);
  }
  for (const auto& r : rem) {
    if (r != 0) throw DomainError("divide_exact: not divisible");
  }
  return IntPolynomial(std::move(quot));
}

namespace {

IntPolynomial primitive_part(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  BigInt c = p.content();
  if (p.leading() < 0) c = -c;
  return divide_exact(p, c);
}

// lc(b)^(deg a - deg b + 1) * a mod b, up to a nonzero scalar.
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
  const int db = b.degree();
  const BigInt lb = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    const BigInt la = a.leading();
    const int shift = a.degree() - db;
    a = a * lb - b.shifted_up(shift) * la;
  }
  return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero()) return primitive_part(b) * (b.is_zero() ? BigInt(0) : b.content());
  if (b.is_zero()) return primitive_part(a) * a.content();
  BigInt scalar;
  const BigInt ca = a.content();
  const BigInt cb = b.content();
  mpz_gcd(scalar.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  IntPolynomial x = primitive_part(a);
  IntPolynomial y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_part(x) * scalar;
}

std::string to_string(const IntPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) append_term(os, first, p.coeffs()[static_cast<std::size_t>(k)], k, var);
  return os.str();
}

// ---------------------------------------------------------------------------
// LaurentPolynomial
// ---------------------------------------------------------------------------

LaurentPolynomial::LaurentPolynomial(const IntPolynomial& p) : low_(0), body_(p) { normalize(); }

LaurentPolynomial::LaurentPolynomial(int low, IntPolynomial body) : low_(low), body_(std::move(body)) {
  normalize();
}

void LaurentPolynomial::normalize() {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  const int v = body_.valuation();
  if (v > 0) {
    body_ = body_.shifted_down(v);
    low_ += v;
  }
}

LaurentPolynomial LaurentPolynomial::q_power(int k, const BigInt& c) {
  return LaurentPolynomial(k, IntPolynomial::constant(c));
}

BigInt LaurentPolynomial::coeff(int degree) const { return body_.coeff(degree - low_); }

IntPolynomial LaurentPolynomial::to_polynomial() const {
  if (!is_polynomial()) throw DomainError("Laurent polynomial has negative powers: " + to_string(*this));
  return body_.shifted_up(low_);
}

bool LaurentPolynomial::is_monomial() const { return !is_zero() && body_.degree() == 0; }

BigRat LaurentPolynomial::eval(const BigRat& q) const {
  BigRat base = body_.eval(q);
  BigRat scale = 1;
  mpz_pow_ui(scale.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
  mpz_pow_ui(scale.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(std::abs(low_)));
  scale.canonicalize();
  BigRat out = low_ >= 0 ? BigRat(base * scale) : BigRat(base / scale);
  out.canonicalize();
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  if (is_zero()) return *this;
  return LaurentPolynomial(low_ + k, body_);
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.min_degree(), b.min_degree());
  IntPolynomial sum = a.body().shifted_up(a.min_degree() - low) + b.body().shifted_up(b.min_degree() - low);
  return LaurentPolynomial(low, std::move(sum));
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  return LaurentPolynomial(a.min_degree(), -a.body());
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPolynomial(a.min_degree() + b.min_degree(), a.body() * b.body());
}

std::string to_string(const LaurentPolynomial& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.min_degree(); k <= p.max_degree(); ++k) append_term(os, first, p.coeff(k), k, var);
  return os.str();
}

// ---------------------------------------------------------------------------
// TruncatedLaurentSeries
// ---------------------------------------------------------------------------

TruncatedLaurentSeries::TruncatedLaurentSeries(int min_degree, std::vector<BigRat> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PrecisionError("empty series window: insufficient precision");
  // A series vanishing on its window keeps one zero at degree order-1.
  std::size_t lead = 0;
  while (lead + 1 < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  min_degree_ += static_cast<int>(lead);
}

TruncatedLaurentSeries TruncatedLaurentSeries::zero(int order) {
  return TruncatedLaurentSeries(order - 1, std::vector<BigRat>{BigRat(0)});
}

TruncatedLaurentSeries TruncatedLaurentSeries::from_polynomial(const LaurentPolynomial& p, int order) {
  if (p.is_zero() || p.min_degree() >= order) return zero(order);
  std::vector<BigRat> v;
  for (int k = p.min_degree(); k < order; ++k) v.emplace_back(p.coeff(k));
  return TruncatedLaurentSeries(p.min_degree(), std::move(v));
}

BigRat TruncatedLaurentSeries::coeff(int degree) const {
  if (degree >= order()) {
    throw PrecisionError("coefficient of degree " + std::to_string(degree) +
                         " is outside the series window (order " + std::to_string(order()) + ")");
  }
  if (degree < min_degree_) return 0;
  return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

bool TruncatedLaurentSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRat& c) { return c == 0; });
}

bool TruncatedLaurentSeries::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const BigRat& c) { return c.get_den() == 1; });
}

std::vector<BigInt> TruncatedLaurentSeries::integer_coeffs() const {
  std::vector<BigInt> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.get_den() != 1) throw DomainError("series coefficient is not an integer: " + c.get_str());
    out.push_back(c.get_num());
  }
  return out;
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(int new_order) const {
  if (new_order > order()) {
    throw PrecisionError("cannot widen a series window from order " + std::to_string(order()) +
                         " to " + std::to_string(new_order));
  }
  if (new_order <= min_degree_) return zero(new_order);
  return TruncatedLaurentSeries(
      min_degree_, std::vector<BigRat>(coeffs_.begin(), coeffs_.begin() + (new_order - min_degree_)));
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(int k) const {
  return TruncatedLaurentSeries(min_degree_ + k, coeffs_);
}

namespace {

// True valuation bound: a series that vanishes on its window has no known
// nonzero term, so its valuation is at least its order.
int valuation_bound(const TruncatedLaurentSeries& s) { return s.is_zero() ? s.order() : s.min_degree(); }

}  // namespace

TruncatedLaurentSeries series_arith(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b,
                                    SeriesOp op) {
  if (op == SeriesOp::mul) {
    const int va = valuation_bound(a);
    const int vb = valuation_bound(b);
    const int order = std::min(va + b.order(), vb + a.order());
    const int start = va + vb;
    if (order <= start) return TruncatedLaurentSeries::zero(order);
    std::vector<BigRat> out(static_cast<std::size_t>(order - start));
    for (int i = va; i < a.order(); ++i) {
      const BigRat ca = a.coeff(i);
      if (ca == 0) continue;
      for (int j = vb; i + j < order; ++j) {
        out[static_cast<std::size_t>(i + j - start)] += ca * b.coeff(j);
      }
    }
    return TruncatedLaurentSeries(start, std::move(out));
  }
  const int order = std::min(a.order(), b.order());
  const int start = std::min(a.min_degree(), b.min_degree());
  if (order <= start) return TruncatedLaurentSeries::zero(order);
  std::vector<BigRat> out;
  out.reserve(static_cast<std::size_t>(order - start));
  for (int k = start; k < order; ++k) {
    out.push_back(op == SeriesOp::add ? BigRat(a.coeff(k) + b.coeff(k)) : BigRat(a.coeff(k) - b.coeff(k)));
  }
  return TruncatedLaurentSeries(start, std::move(out));
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  return series_arith(a, b, SeriesOp::add);
}
TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  return series_arith(a, b, SeriesOp::sub);
}
TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  return series_arith(a, b, SeriesOp::mul);
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a) {
  std::vector<BigRat> v = a.coeffs();
  for (auto& c : v) c = -c;
  return TruncatedLaurentSeries(a.min_degree(), std::move(v));
}

TruncatedLaurentSeries operator*(const BigRat& c, const TruncatedLaurentSeries& a) {
  std::vector<BigRat> v = a.coeffs();
  for (auto& x : v) x *= c;
  return TruncatedLaurentSeries(a.min_degree(), std::move(v));
}

TruncatedLaurentSeries operator*(const LaurentPolynomial& p, const TruncatedLaurentSeries& a) {
  if (p.is_zero()) return TruncatedLaurentSeries::zero(a.order());
  const int order = a.order() + p.min_degree();
  const int start = a.min_degree() + p.min_degree();
  std::vector<BigRat> out(static_cast<std::size_t>(order - start));
  for (int i = p.min_degree(); i <= p.max_degree(); ++i) {
    const BigInt c = p.coeff(i);
    if (c == 0) continue;
    for (int j = a.min_degree(); i + j < order; ++j) {
      out[static_cast<std::size_t>(i + j - start)] += BigRat(c) * a.coeff(j);
    }
  }
  return TruncatedLaurentSeries(start, std::move(out));
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const LaurentPolynomial& p) {
  return a + TruncatedLaurentSeries::from_polynomial(p, a.order());
}

namespace {

// Coefficients r_0..r_{count-1} of n/d where d_0 != 0, by long division.
std::vector<BigRat> divide_coefficients(const std::vector<BigRat>& n, const std::vector<BigRat>& d,
                                        int count) {
  std::vector<BigRat> r(static_cast<std::size_t>(std::max(count, 0)));
  const BigRat inv_d0 = 1 / d[0];
  for (int k = 0; k < count; ++k) {
    BigRat acc = k < static_cast<int>(n.size()) ? n[static_cast<std::size_t>(k)] : BigRat(0);
    const int top = std::min<int>(k, static_cast<int>(d.size()) - 1);
    for (int j = 1; j <= top; ++j) acc -= d[static_cast<std::size_t>(j)] * r[static_cast<std::size_t>(k - j)];
    r[static_cast<std::size_t>(k)] = acc * inv_d0;
  }
  return r;
}

std::vector<BigRat> as_rationals(const IntPolynomial& p, int skip) {
  std::vector<BigRat> out;
  for (int k = skip; k <= p.degree(); ++k) out.emplace_back(p.coeffs()[static_cast<std::size_t>(k)]);
  return out;
}

}  // namespace

TruncatedLaurentSeries series_div(const IntPolynomial& num, const IntPolynomial& den, int order) {
  if (den.is_zero()) throw DomainError("series_div: denominator is identically zero");
  if (num.is_zero()) return TruncatedLaurentSeries::zero(order);
  const int v = den.valuation();
  const int u = num.valuation();
  const int start = u - v;
  if (start >= order) return TruncatedLaurentSeries::zero(order);
  std::vector<BigRat> r = divide_coefficients(as_rationals(num, u), as_rationals(den, v), order - start);
  TruncatedLaurentSeries out(start, std::move(r));
  const BigInt& d0 = den.lowest();
  if ((d0 == 1 || d0 == -1) && !out.is_integral()) {
    throw ConsistencyError("series_div: unit leading denominator produced a non-integer coefficient");
  }
  return out;
}

TruncatedLaurentSeries series_div(const LaurentPolynomial& num, const LaurentPolynomial& den, int order) {
  if (den.is_zero()) throw DomainError("series_div: denominator is identically zero");
  const int offset = num.min_degree() - den.min_degree();
  return series_div(num.body(), den.body(), order - offset).shifted(offset);
}

TruncatedLaurentSeries series_div(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
  if (b.is_zero()) throw PrecisionError("series_div: divisor vanishes on its window");
  const int vb = b.min_degree();
  const int rel_order = std::min(a.order(), valuation_bound(a) + (b.order() - vb));
  const int start = valuation_bound(a) - vb;
  const int order = rel_order - vb;
  if (order <= start) return TruncatedLaurentSeries::zero(order);
  std::vector<BigRat> n;
  for (int k = valuation_bound(a); k < rel_order; ++k) n.push_back(a.coeff(k));
  return TruncatedLaurentSeries(start, divide_coefficients(n, b.coeffs(), order - start));
}

TruncatedLaurentSeries series_sqrt(const TruncatedLaurentSeries& s, int order) {
  if (s.is_zero() || s.coeffs().front() != 1) {
    throw DomainError("series_sqrt: lowest coefficient must be 1 (branch ambiguity)");
  }
  if (s.min_degree() % 2 != 0) throw DomainError("series_sqrt: odd leading degree");
  const int half = s.min_degree() / 2;
  const int target = std::min(order, s.order() - half);
  if (target <= half) return TruncatedLaurentSeries::zero(target);
  const int count = target - half;
  const auto& t = s.coeffs();
  std::vector<BigRat> r(static_cast<std::size_t>(count));
  r[0] = 1;
  for (int n = 1; n < count; ++n) {
    BigRat acc = t[static_cast<std::size_t>(n)];
    for (int i = 1; i < n; ++i) acc -= r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(n - i)];
    r[static_cast<std::size_t>(n)] = acc / 2;
  }
  return TruncatedLaurentSeries(half, std::move(r));
}

std::string to_string(const TruncatedLaurentSeries& s, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (int k = s.min_degree(); k < s.order(); ++k) append_term(os, first, s.coeff(k), k, var);
  if (first) os << "0";
  os << " + O(" << var << "^" << s.order() << ")";
  return os.str();
}

}  // namespace qdeform
