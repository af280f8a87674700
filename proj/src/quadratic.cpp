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

#include "qdeform/quadratic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "qdeform/qcalc.hpp"

namespace qdeform {

namespace {

BigInt gcd_of(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

QQuadraticEquation QQuadraticEquation::normalized() const {
  if (alpha.is_zero()) throw DomainError("quadratic equation with zero leading coefficient");
  const LaurentPolynomial* parts[] = {&alpha, &beta, &gamma};
  int low = alpha.min_degree();
  for (const auto* p : parts) {
    if (!p->is_zero()) low = std::min(low, p->min_degree());
  }
  IntPolynomial poly[3];
  BigInt content = 0;
  for (int i = 0; i < 3; ++i) {
    poly[i] = parts[i]->shifted(-low).to_polynomial();
    if (!poly[i].is_zero()) content = gcd_of(content, poly[i].content());
  }
  IntPolynomial common;
  for (auto& p : poly) {
    p = divide_exact(p, content);
    if (!p.is_zero()) common = common.is_zero() ? p : gcd(common, p);
  }
  for (auto& p : poly) p = divide_exact(p, common);
  if (poly[0].leading() < 0) {
    for (auto& p : poly) p = -p;
  }
  return {LaurentPolynomial(poly[0]), LaurentPolynomial(poly[1]), LaurentPolynomial(poly[2])};
}

BigRat QQuadraticEquation::at_one(const BigRat& x) const {
  const BigRat one(1);
  BigRat v = alpha.eval(one) * x * x + beta.eval(one) * x + gamma.eval(one);
  v.canonicalize();
  return v;
}

bool equivalent(const QQuadraticEquation& a, const QQuadraticEquation& b) { return a.normalized() == b.normalized(); }

QQuadraticEquation derive_equation(const PeriodicCF& pcf) {
  pcf.validate();
  std::vector<Term> pre = pcf.preperiod;
  std::vector<Term> period = pcf.period;
  if (period.size() % 2 != 0) period.insert(period.end(), pcf.period.begin(), pcf.period.end());
  if (pre.size() % 2 != 0) {
    pre.push_back(period.front());
    std::rotate(period.begin(), period.begin() + 1, period.end());
  }

  // The tail Y is a fixed point of the period's Moebius map.
  const PolyMatrix m = convergent_matrix(period);
  const IntPolynomial c2 = m.c;
  const IntPolynomial c1 = m.d - m.a;
  const IntPolynomial c0 = -m.b;

  // X = (aY + b) / (cY + d); substitute Y = (dX - b) / (a - cX).
  const PolyMatrix p = convergent_matrix(pre);
  const IntPolynomial two{2};
  const IntPolynomial alpha = c2 * p.d * p.d - c1 * p.d * p.c + c0 * p.c * p.c;
  const IntPolynomial beta = -(two * c2 * p.d * p.b) + c1 * (p.d * p.a + p.b * p.c) - two * c0 * p.a * p.c;
  const IntPolynomial gamma = c2 * p.b * p.b - c1 * p.b * p.a + c0 * p.a * p.a;
  return QQuadraticEquation{alpha, beta, gamma}.normalized();
}

// ---------------------------------------------------------------------------

TruncatedLaurentSeries ClosedForm::expand_branch(int sign, int order) const {
  if (discriminant.is_zero()) throw DomainError("closed form with zero discriminant");
  const BigInt& lead = discriminant.body().lowest();
  if (lead != 1) throw DomainError("discriminant lowest coefficient is " + lead.get_str() + ", not 1");
  const int half = discriminant.min_degree() / 2;
  const int num_order = order + alpha.min_degree();
  const TruncatedLaurentSeries disc =
      TruncatedLaurentSeries::from_polynomial(discriminant, num_order + std::abs(half) + 2);
  const TruncatedLaurentSeries root = series_sqrt(disc, num_order);
  const TruncatedLaurentSeries num = BigRat(sign, 2) * root + BigRat(1, 2) * TruncatedLaurentSeries::from_polynomial(linear_part, root.order());
  const TruncatedLaurentSeries den = TruncatedLaurentSeries::from_polynomial(alpha, alpha.max_degree() + order + 2);
  return series_div(num, den);
}

TruncatedLaurentSeries ClosedForm::expand(int order) const { return expand_branch(branch, order); }

double ClosedForm::value_at_one() const {
  const BigRat one(1);
  const double b = linear_part.eval(one).get_d();
  const double d = discriminant.eval(one).get_d();
  const double a = alpha.eval(one).get_d();
  return (b + branch * std::sqrt(d)) / (2 * a);
}

int agreement(const TruncatedLaurentSeries& s, const StabilizedSeries& reference, int terms) {
  terms = std::min(terms, reference.guaranteed_terms);
  if (!s.is_zero() && s.min_degree() < reference.min_degree) return 0;
  int n = 0;
  for (int k = reference.min_degree; n < terms && k < s.order(); ++k, ++n) {
    if (s.coeff(k) != BigRat(reference.coeff(k))) break;
  }
  return n;
}

ClosedForm closed_form(const QQuadraticEquation& eq, const StabilizedSeries& reference, int min_match) {
  ClosedForm out;
  out.alpha = eq.alpha;
  out.linear_part = -eq.beta;
  out.discriminant = eq.beta * eq.beta - LaurentPolynomial(IntPolynomial{4}) * eq.alpha * eq.gamma;
  if (eq.alpha.is_monomial() && eq.alpha.body().leading() == 1) out.denominator_exponent = eq.alpha.min_degree();

  const int terms = reference.guaranteed_terms;
  if (terms < min_match) {
    throw PrecisionError("closed_form: reference has " + std::to_string(terms) + " certified terms, need " +
                         std::to_string(min_match));
  }
  const int order = reference.certified_order();
  const int plus = agreement(out.expand_branch(1, order), reference, terms);
  const int minus = agreement(out.expand_branch(-1, order), reference, terms);
  if (plus == terms && minus < 3) {
    out.branch = 1;
  } else if (minus == terms && plus < 3) {
    out.branch = -1;
  } else {
    throw ConsistencyError("closed_form: branches agree with the reference on " + std::to_string(plus) + " and " +
                           std::to_string(minus) + " of " + std::to_string(terms) + " terms");
  }
  return out;
}

bool verify_equation(const QQuadraticEquation& eq, const StabilizedSeries& series, int n) {
  if (series.guaranteed_terms < n) {
    throw PrecisionError("verify_equation: series has " + std::to_string(series.guaranteed_terms) +
                         " certified terms, need " + std::to_string(n));
  }
  const TruncatedLaurentSeries s = series.truncated(n).certified();
  const TruncatedLaurentSeries residual = eq.alpha * (s * s) + eq.beta * s + eq.gamma;
  return residual.is_zero();
}

// ---------------------------------------------------------------------------

const BigInt& BFile::at(long n) const {
  auto it = values.find(n);
  if (it == values.end()) throw DomainError("b-file has no entry for index " + std::to_string(n));
  return it->second;
}

BFile parse_bfile(std::istream& in) {
  BFile out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long n = 0;
    std::string value;
    if (!(ls >> n)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw DomainError("malformed b-file line '" + line + "'");
    }
    if (!(ls >> value)) throw DomainError("b-file line without a value: '" + line + "'");
    BigInt v;
    if (v.set_str(value, 10) != 0) throw DomainError("malformed b-file value '" + value + "'");
    if (first) {
      out.offset = n;
      first = false;
    }
    out.values[n] = v;
  }
  if (first) throw DomainError("empty b-file");
  return out;
}

BFile read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open b-file '" + path + "'");
  return parse_bfile(in);
}

SignedComparison compare_signed(const StabilizedSeries& series, const BFile& bfile, long offset, int from) {
  SignedComparison out;
  out.from = from;
  for (int k = from; k < series.certified_order(); ++k) {
    const long idx = k - offset;
    if (!bfile.has(idx)) {
      out.partial = true;
      break;
    }
    const BigInt expected = k % 2 == 0 ? bfile.at(idx) : BigInt(-bfile.at(idx));
    if (series.coeff(k) != expected) {
      out.first_mismatch = k;
      break;
    }
    ++out.checked;
  }
  return out;
}

BigInt golden_recurrence_residual(const StabilizedSeries& series, int k) {
  auto f = [&](int j) -> BigInt { return j < 0 ? BigInt(0) : series.coeff(j); };
  return BigInt(k + 1) * f(k) + BigInt(2 * k - 1) * f(k - 1) + BigInt(2 - k) * f(k - 2) +
         BigInt(2 * k - 7) * f(k - 3) + BigInt(k - 5) * f(k - 4);
}

GoldenReport golden_specials(const StabilizedSeries& series, const BFile& bfile) {
  GoldenReport out;
  out.catalan = compare_signed(series, bfile, 1, 2);
  out.recurrence_to = series.certified_order() - 1;
  for (int k = 0; k <= out.recurrence_to; ++k) {
    if (golden_recurrence_residual(series, k) != 0) out.recurrence_failures.push_back(k);
  }
  out.recurrence_from = out.recurrence_failures.empty() ? 0 : out.recurrence_failures.back() + 1;
  return out;
}

}  // namespace qdeform
