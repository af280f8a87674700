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

#ifndef QDEFORM_QUADRATIC_HPP
#define QDEFORM_QUADRATIC_HPP

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdeform/contfrac.hpp"
#include "qdeform/exactalg.hpp"
#include "qdeform/qreal.hpp"

namespace qdeform {

/// alpha X^2 + beta X + gamma = 0 over Z[q, 1/q].
struct QQuadraticEquation {
  LaurentPolynomial alpha;
  LaurentPolynomial beta;
  LaurentPolynomial gamma;

  /// Canonical representative of the equation's class up to units and
  /// common factors: polynomial coefficients with no common q-power, content
  /// or polynomial factor, and alpha with positive leading coefficient.
  [[nodiscard]] QQuadraticEquation normalized() const;
  /// Value of the equation's left side at X for q = 1.
  [[nodiscard]] BigRat at_one(const BigRat& x) const;

  friend bool operator==(const QQuadraticEquation&, const QQuadraticEquation&) = default;
};

/// True iff a and b differ by a nonzero Laurent-polynomial factor.
bool equivalent(const QQuadraticEquation& a, const QQuadraticEquation& b);

/// Functional equation satisfied by the q-deformation of a periodic
/// continued fraction.
QQuadraticEquation derive_equation(const PeriodicCF& pcf);

/// X = (-beta + branch sqrt(Delta)) / (2 alpha).
struct ClosedForm {
  LaurentPolynomial linear_part;
  LaurentPolynomial discriminant;
  LaurentPolynomial alpha;
  /// m when alpha = q^m, otherwise -1.
  int denominator_exponent = -1;
  int branch = 1;

  /// Expansion of the selected root through degree order-1.
  [[nodiscard]] TruncatedLaurentSeries expand(int order) const;
  [[nodiscard]] TruncatedLaurentSeries expand_branch(int sign, int order) const;
  /// Numeric value of the selected root at q = 1.
  [[nodiscard]] double value_at_one() const;
};

/// Closed form of eq with the branch chosen to match `reference` on at least
/// `min_match` terms. Throws ConsistencyError if neither branch matches or
/// the other branch does not split off within three terms.
ClosedForm closed_form(const QQuadraticEquation& eq, const StabilizedSeries& reference, int min_match = 10);

/// Number of leading terms on which a series and a reference agree, counted
/// from the reference's lowest degree and capped at `terms`.
int agreement(const TruncatedLaurentSeries& s, const StabilizedSeries& reference, int terms);

/// True iff alpha s^2 + beta s + gamma vanishes on the window fixed by the
/// first n certified terms of s. Throws PrecisionError if fewer than n terms
/// are certified.
bool verify_equation(const QQuadraticEquation& eq, const StabilizedSeries& series, int n);

/// Sequence values keyed by index, as read from a b-file.
struct BFile {
  std::map<long, BigInt> values;
  long offset = 0;

  [[nodiscard]] bool has(long n) const { return values.count(n) != 0; }
  [[nodiscard]] const BigInt& at(long n) const;
};

BFile parse_bfile(std::istream& in);
BFile read_bfile(const std::string& path);

/// Outcome of comparing kappa_k with (-1)^k b_(k-offset).
struct SignedComparison {
  int from = 0;
  int checked = 0;
  std::optional<int> first_mismatch;
  /// True when the series window reaches past the b-file.
  bool partial = false;

  [[nodiscard]] bool ok() const { return !first_mismatch && checked > 0; }
};

SignedComparison compare_signed(const StabilizedSeries& series, const BFile& bfile, long offset, int from);

struct GoldenReport {
  SignedComparison catalan;
  /// The five-term recurrence holds for every k in [recurrence_from, recurrence_to].
  int recurrence_from = 0;
  int recurrence_to = -1;
  /// Values of k in [0, recurrence_to] where it fails.
  std::vector<int> recurrence_failures;
};

/// Residual (k+1)f_k + (2k-1)f_(k-1) + (2-k)f_(k-2) + (2k-7)f_(k-3) + (k-5)f_(k-4),
/// with f_j = 0 for j < 0.
BigInt golden_recurrence_residual(const StabilizedSeries& series, int k);

GoldenReport golden_specials(const StabilizedSeries& series, const BFile& bfile);

}  // namespace qdeform

#endif  // QDEFORM_QUADRATIC_HPP
