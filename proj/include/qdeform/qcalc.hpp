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

#ifndef QDEFORM_QCALC_HPP
#define QDEFORM_QCALC_HPP

#include <span>
#include <utility>
#include <vector>

#include "qdeform/contfrac.hpp"
#include "qdeform/exactalg.hpp"

namespace qdeform {

/// q-deformed rational num(q) / den(q) of a rational r/s >= 1.
///
/// Both polynomials have positive coefficients with lowest and highest
/// coefficient 1, and num(1)/den(1) = r/s.
struct QRational {
  IntPolynomial num;
  IntPolynomial den;

  /// Throws ConsistencyError if the invariants above fail.
  void validate() const;
  [[nodiscard]] BigRat value_at_one() const;

  friend bool operator==(const QRational&, const QRational&) = default;
};

/// [a]_q = (q^a - 1) / (q - 1) for any integer a.
LaurentPolynomial q_integer(Term a);

/// 2x2 matrix over Z[q].
struct PolyMatrix {
  IntPolynomial a, b, c, d;

  static PolyMatrix identity();
  [[nodiscard]] IntPolynomial det() const;
  friend PolyMatrix operator*(const PolyMatrix& x, const PolyMatrix& y);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;
};

/// ([a]_q, q^a; 1, 0), used at odd positions.
PolyMatrix odd_factor(Term a);
/// (q[a]_q, 1; q^a, 0), used at even positions.
PolyMatrix even_factor(Term a);
/// Alternating product of odd/even factors over the terms, starting with an
/// odd factor.
PolyMatrix convergent_matrix(std::span<const Term> terms);

QRational q_rational_matrix(const FiniteCF& cf);
QRational q_rational_cf(const FiniteCF& cf);
QRational q_rational_farey(const BigInt& r, const BigInt& s);
/// q-rational of x >= 1 through its canonical expansion.
QRational q_rational(const BigRat& x);

/// Taylor expansion at q = 0 through degree order-1 (integer coefficients).
TruncatedLaurentSeries taylor(const QRational& x, int order);

// ---------------------------------------------------------------------------
// Weighted Farey graph
// ---------------------------------------------------------------------------

/// A Farey vertex r/s (1/0 allowed) with its label R/S.
struct FareyVertex {
  BigInt r, s;
  IntPolynomial num, den;

  friend bool operator==(const FareyVertex&, const FareyVertex&) = default;
};

/// Farey triangle with left and right parents whose top edge carries the
/// weight q^(ell-1). Its third vertex is the mediant, labeled
/// (R' + q^ell R'') / (S' + q^ell S'').
struct FareyTriangle {
  FareyVertex left;
  FareyVertex right;
  int ell = 0;

  /// (0/1, 1/0) with top edge q^-1.
  static FareyTriangle base();
  [[nodiscard]] int top_edge_exponent() const { return ell - 1; }
  [[nodiscard]] FareyVertex mediant() const;
  /// Triangle on the edge (left, mediant), which has weight 1.
  [[nodiscard]] FareyTriangle left_child() const;
  /// Triangle on the edge (mediant, right), which has weight q^ell.
  [[nodiscard]] FareyTriangle right_child() const;
};

/// Triangles visited from the base down to the one whose mediant is r/s >= 1.
std::vector<FareyTriangle> farey_path(const BigInt& r, const BigInt& s);

/// Signed exponent of the determinant of consecutive convergents:
/// R_n S_{n-1} - S_n R_{n-1} = sign * q^exponent.
struct DetIdentity {
  int exponent;
  int sign;
};

/// Exponent predicted for convergents n-1, n of the raw terms:
/// a_1+...+a_n-1 for even n, a_1+...+a_{n-1}-1 for odd n.
int expected_det_exponent(std::span<const Term> raw, std::size_t n);

/// Computes the determinant identity for convergents n-1 and n of the stream
/// and checks it against expected_det_exponent (sign + for even n, - for odd
/// n). Throws ConsistencyError on violation, DomainError if n < 2 or the
/// stream is too short.
DetIdentity det_identity(const CFStream& stream, std::size_t n);

/// Checks R S' - S R' = q^(a+ell) and R S'' - S R'' = -q^a for the mediant
/// R/S, where R'' S' - S'' R' = q^a. Returns (a + ell, a); throws
/// ConsistencyError on failure.
std::pair<int, int> farey_neighbor_relations(const FareyTriangle& triangle);

/// If p = c q^k with c = +-1, returns (k, c).
std::optional<std::pair<int, int>> as_unit_monomial(const IntPolynomial& p);

}  // namespace qdeform

#endif  // QDEFORM_QCALC_HPP
