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

#ifndef QDEFORM_EXACTALG_HPP
#define QDEFORM_EXACTALG_HPP

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdeform {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series operation would have to claim coefficients outside its window.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Input outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A proven identity failed to hold. Always an implementation bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& v);

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

/// Dense polynomial in q over arbitrary-precision integers.
///
/// Coefficients are stored in ascending degree. The coefficient vector never
/// ends in zero, so the zero polynomial has an empty vector and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * q^degree
  static IntPolynomial monomial(const BigInt& c, int degree);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Degree of the lowest nonzero coefficient; -1 for the zero polynomial.
  [[nodiscard]] int valuation() const;
  [[nodiscard]] BigInt coeff(int degree) const;
  [[nodiscard]] const std::vector<BigInt>& coeffs() const { return coeffs_; }
  [[nodiscard]] const BigInt& leading() const;
  [[nodiscard]] const BigInt& lowest() const;

  [[nodiscard]] BigInt eval(const BigInt& q) const;
  [[nodiscard]] BigRat eval(const BigRat& q) const;
  /// Non-negative gcd of the coefficients; 0 for the zero polynomial.
  [[nodiscard]] BigInt content() const;
  /// Multiply by q^k, k >= 0.
  [[nodiscard]] IntPolynomial shifted_up(int k) const;
  /// Divide by q^k. Throws DomainError when q^k does not divide.
  [[nodiscard]] IntPolynomial shifted_down(int k) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b);
IntPolynomial operator-(const IntPolynomial& a);
IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial operator*(IntPolynomial a, const BigInt& c);
IntPolynomial operator*(const BigInt& c, IntPolynomial a);

/// Exact quotient over Z[q]; throws DomainError if b does not divide a.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Exact division of every coefficient by c.
IntPolynomial divide_exact(const IntPolynomial& a, const BigInt& c);
/// Greatest common divisor in Z[q], with positive leading coefficient.
/// gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

std::string to_string(const IntPolynomial& p, const std::string& var = "q");

// ---------------------------------------------------------------------------
// LaurentPolynomial
// ---------------------------------------------------------------------------

/// q^low * body, with body(0) != 0 unless the value is zero.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  LaurentPolynomial(const IntPolynomial& p);  // NOLINT(google-explicit-constructor)
  LaurentPolynomial(int low, IntPolynomial body);

  static LaurentPolynomial q_power(int k, const BigInt& c = 1);

  [[nodiscard]] bool is_zero() const { return body_.is_zero(); }
  [[nodiscard]] int min_degree() const { return low_; }
  [[nodiscard]] int max_degree() const { return low_ + body_.degree(); }
  [[nodiscard]] BigInt coeff(int degree) const;
  [[nodiscard]] const IntPolynomial& body() const { return body_; }
  [[nodiscard]] bool is_polynomial() const { return is_zero() || low_ >= 0; }
  /// The polynomial value; DomainError if negative powers are present.
  [[nodiscard]] IntPolynomial to_polynomial() const;
  [[nodiscard]] bool is_monomial() const;
  [[nodiscard]] BigRat eval(const BigRat& q) const;

  [[nodiscard]] LaurentPolynomial shifted(int k) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  void normalize();
  int low_ = 0;
  IntPolynomial body_;
};

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
LaurentPolynomial operator-(const LaurentPolynomial& a);
LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

std::string to_string(const LaurentPolynomial& p, const std::string& var = "q");

// ---------------------------------------------------------------------------
// TruncatedLaurentSeries
// ---------------------------------------------------------------------------

/// Finitely many exact coefficients of a Laurent series.
///
/// Coefficients are known for degrees min_degree .. order-1; nothing is
/// claimed at or above `order`. Leading zeros are stripped, so the
/// coefficient at min_degree is nonzero unless the series vanishes on its
/// whole window, in which case a single zero at degree order-1 is kept.
class TruncatedLaurentSeries {
 public:
  /// Throws PrecisionError for an empty coefficient list.
  TruncatedLaurentSeries(int min_degree, std::vector<BigRat> coeffs);

  static TruncatedLaurentSeries zero(int order);
  static TruncatedLaurentSeries from_polynomial(const LaurentPolynomial& p, int order);

  [[nodiscard]] int min_degree() const { return min_degree_; }
  [[nodiscard]] int order() const { return min_degree_ + static_cast<int>(coeffs_.size()); }
  /// Coefficient of q^degree; zero below min_degree. Throws PrecisionError at
  /// or above order.
  [[nodiscard]] BigRat coeff(int degree) const;
  [[nodiscard]] const std::vector<BigRat>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_integral() const;
  /// Integer coefficients over min_degree..order-1. Throws DomainError if
  /// any coefficient is not an integer.
  [[nodiscard]] std::vector<BigInt> integer_coeffs() const;

  /// Narrow the window to `new_order` (which must not exceed order()).
  [[nodiscard]] TruncatedLaurentSeries truncated(int new_order) const;
  /// Multiply by q^k.
  [[nodiscard]] TruncatedLaurentSeries shifted(int k) const;

  friend bool operator==(const TruncatedLaurentSeries&, const TruncatedLaurentSeries&) = default;

 private:
  int min_degree_;
  std::vector<BigRat> coeffs_;
};

enum class SeriesOp { add, sub, mul };

TruncatedLaurentSeries series_arith(const TruncatedLaurentSeries& a,
                                    const TruncatedLaurentSeries& b, SeriesOp op);

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);
TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a);
TruncatedLaurentSeries operator*(const BigRat& c, const TruncatedLaurentSeries& a);
/// Product with an exact Laurent polynomial; the window shifts by p's
/// valuation instead of shrinking.
TruncatedLaurentSeries operator*(const LaurentPolynomial& p, const TruncatedLaurentSeries& a);
/// Sum with an exact Laurent polynomial (window unchanged).
TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const LaurentPolynomial& p);

/// Taylor/Laurent expansion of num/den at q = 0, valid through degree
/// order-1. Throws DomainError when den is zero.
TruncatedLaurentSeries series_div(const IntPolynomial& num, const IntPolynomial& den, int order);
TruncatedLaurentSeries series_div(const LaurentPolynomial& num, const LaurentPolynomial& den,
                                  int order);
/// a / b for series. b's lowest coefficient must be nonzero on its window.
TruncatedLaurentSeries series_div(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b);

/// Square root with leading term q^(min_degree/2). The input must have even
/// min_degree and lowest coefficient 1. The result window is capped by what
/// the input determines.
TruncatedLaurentSeries series_sqrt(const TruncatedLaurentSeries& s, int order);

std::string to_string(const TruncatedLaurentSeries& s, const std::string& var = "q");

}  // namespace qdeform

#endif  // QDEFORM_EXACTALG_HPP
