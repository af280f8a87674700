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

#ifndef QDEFORM_QREAL_HPP
#define QDEFORM_QREAL_HPP

#include <string>
#include <vector>

#include "qdeform/contfrac.hpp"
#include "qdeform/exactalg.hpp"
#include "qdeform/qcalc.hpp"

namespace qdeform {

/// Integer Laurent series [x]_q with a certified prefix.
///
/// coeffs[i] is the coefficient of q^(min_degree + i). The first
/// guaranteed_terms entries are certified; anything after them was computed
/// but is not known to be stable.
struct StabilizedSeries {
  int min_degree = 0;
  std::vector<BigInt> coeffs;
  int guaranteed_terms = 0;
  std::string source;
  /// Number of partial quotients consumed.
  std::size_t depth = 0;

  /// Exclusive end degree of the certified window.
  [[nodiscard]] int certified_order() const { return min_degree + guaranteed_terms; }
  /// Certified coefficient of q^degree; zero below min_degree, PrecisionError
  /// at or beyond certified_order().
  [[nodiscard]] BigInt coeff(int degree) const;
  /// The certified window as an exact series.
  [[nodiscard]] TruncatedLaurentSeries certified() const;
  /// Keep at most `terms` coefficients starting at min_degree.
  [[nodiscard]] StabilizedSeries truncated(int terms) const;
};

/// Certified expansion of the value described by a continued-fraction stream.
///
/// Takes the shortest even prefix a_1..a_n with a_1+...+a_n-1 >= terms,
/// expands the q-deformed convergents n-1 and n, checks that they agree
/// below degree a_1+...+a_n-1 and differ there by exactly +-1, and returns
/// the common prefix. A finite stream that ends first yields the exact
/// expansion of its rational value; an infinite stream that runs dry yields
/// a partial result with a smaller guarantee.
StabilizedSeries stabilize(const CFStream& stream, int terms);

/// q-deformation of an arbitrary rational: num(q) / den(q) with num a
/// Laurent polynomial and den a polynomial with den(0) > 0.
struct QFraction {
  LaurentPolynomial num;
  IntPolynomial den;

  static QFraction from(const QRational& x);
  /// Cancels common factors and moves q-powers into the numerator.
  [[nodiscard]] QFraction normalized() const;
  [[nodiscard]] TruncatedLaurentSeries expand(int order) const;

  friend bool operator==(const QFraction&, const QFraction&) = default;
};

/// [x]_q for any rational x, reached from x + k >= 1 by k left translations.
QFraction q_fraction(const BigRat& x);

/// f -> q f + 1, k times.
QFraction translate_up(const QFraction& f, int k);
StabilizedSeries translate_up(const StabilizedSeries& f, int k);
/// f -> (f - 1) / q, k times.
QFraction translate_down(const QFraction& f, int k);
StabilizedSeries translate_down(const StabilizedSeries& f, int k);

/// x = value(base) - shift, with value(base) >= 1.
///
/// label and offset only feed describe(): x = (value named by label) + offset.
/// An empty label falls back to the base stream's name.
struct RealSpec {
  std::int64_t shift = 0;
  CFStream base;
  std::string label;
  std::int64_t offset = 0;

  static RealSpec of(CFStream stream);
  /// x + k, re-expressed with the smallest shift that keeps the base >= 1.
  [[nodiscard]] RealSpec translated(std::int64_t k) const;
  /// -x.
  [[nodiscard]] RealSpec negated() const;
  [[nodiscard]] std::string describe() const;

 private:
  [[nodiscard]] RealSpec negated_value() const;
};

/// [x]_q with `terms` coefficients counted from its lowest degree.
StabilizedSeries q_real(const RealSpec& spec, int terms);

/// For k <= x <= k+1: true iff the series starts 1 + q + ... + q^(k-1) + 0 q^k.
/// Throws PrecisionError if fewer than k+1 terms are certified.
bool gap_check(const StabilizedSeries& series, int k);

enum class Side { left, right };

/// Members (n r + r'')/(n s + s'') (right) or (n r + r')/(n s + s') (left)
/// for n = 1..depth, where r'/s' and r''/s'' are the Farey parents of r/s.
std::vector<BigRat> neighbor_sequence(const BigInt& r, const BigInt& s, Side side, int depth);

/// Empirical stabilization of the neighbor sequence at r/s >= 1: the common
/// prefix (at most `terms` long) of the expansions of its last two members.
StabilizedSeries one_sided_probe(const BigInt& r, const BigInt& s, Side side, int terms, int depth);

}  // namespace qdeform

#endif  // QDEFORM_QREAL_HPP
