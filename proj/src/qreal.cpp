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

#include "qdeform/qreal.hpp"

#include <algorithm>
#include <memory>
#include <utility>

namespace qdeform {

namespace {

std::vector<Term> all_terms(const CFStream& stream) {
  std::vector<Term> out;
  for (std::size_t i = 0;; ++i) {
    auto t = stream.term(i);
    if (!t) return out;
    out.push_back(*t);
  }
}

StabilizedSeries from_exact(const TruncatedLaurentSeries& s, std::string source) {
  StabilizedSeries out;
  out.min_degree = s.min_degree();
  out.coeffs = s.integer_coeffs();
  out.guaranteed_terms = static_cast<int>(out.coeffs.size());
  out.source = std::move(source);
  return out;
}

// Compares the expansions of convergents n-1 and n of `raw` and returns the
// common prefix, extended with uncertified terms of convergent n up to
// `terms` when the certified window is shorter.
StabilizedSeries certify(const CFStream& stream, const std::vector<Term>& raw, std::size_t n, int terms) {
  Term sum = 0;
  for (std::size_t i = 0; i < n; ++i) sum += raw[i];
  const int bound = static_cast<int>(sum - 1);

  const QRational prev = q_rational_matrix(FiniteCF(evenize({raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n - 1)})));
  const QRational cur = q_rational_matrix(FiniteCF(evenize({raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n)})));
  const int order = std::max(bound, terms) + 1;
  const TruncatedLaurentSeries sp = taylor(prev, bound + 1);
  const TruncatedLaurentSeries sc = taylor(cur, order);

  for (int k = 0; k < bound; ++k) {
    if (sp.coeff(k) != sc.coeff(k)) {
      throw ConsistencyError("convergents of '" + stream.name() + "' disagree at degree " + std::to_string(k) +
                             " below the prefix bound " + std::to_string(bound));
    }
  }
  const BigRat jump = sc.coeff(bound) - sp.coeff(bound);
  if (jump != 1 && jump != -1) {
    throw ConsistencyError("convergents of '" + stream.name() + "' differ by " + jump.get_str() + " at degree " +
                           std::to_string(bound));
  }

  StabilizedSeries out;
  out.min_degree = 0;
  for (int k = 0; k < std::max(bound, terms); ++k) out.coeffs.push_back(sc.coeff(k).get_num());
  out.guaranteed_terms = bound;
  out.depth = n;
  out.source = stream.name() + " (convergents " + std::to_string(n - 1) + "," + std::to_string(n) + ")";
  return out;
}

// Dense window used by the translation steps.
void strip_leading_zeros(StabilizedSeries& f, int certified_order) {
  std::size_t lead = 0;
  while (lead + 1 < f.coeffs.size() && f.coeffs[lead] == 0 &&
         f.min_degree + static_cast<int>(lead) + 1 < certified_order) {
    ++lead;
  }
  f.coeffs.erase(f.coeffs.begin(), f.coeffs.begin() + static_cast<std::ptrdiff_t>(lead));
  f.min_degree += static_cast<int>(lead);
  f.guaranteed_terms = std::clamp(certified_order - f.min_degree, 0, static_cast<int>(f.coeffs.size()));
}

void add_at(StabilizedSeries& f, int degree, long delta) {
  if (f.coeffs.empty()) f.min_degree = degree;
  if (degree < f.min_degree) {
    f.coeffs.insert(f.coeffs.begin(), static_cast<std::size_t>(f.min_degree - degree), BigInt(0));
    f.min_degree = degree;
  }
  const auto idx = static_cast<std::size_t>(degree - f.min_degree);
  if (idx >= f.coeffs.size()) f.coeffs.resize(idx + 1);
  f.coeffs[idx] += delta;
}

StabilizedSeries step(const StabilizedSeries& f, bool up) {
  StabilizedSeries out = f;
  int cert = f.certified_order();
  if (up) {
    out.min_degree += 1;
    cert += 1;
    add_at(out, 0, 1);
  } else {
    add_at(out, 0, -1);
    out.min_degree -= 1;
    cert -= 1;
  }
  strip_leading_zeros(out, cert);
  return out;
}

CFStream replace_first_term(const CFStream& base, Term first) {
  return CFStream(
      base.name(),
      [base, first](std::size_t i) -> std::optional<Term> {
        if (i == 0) return first;
        return base.term(i);
      },
      base.finite());
}

BigInt ceil_of(const BigRat& x) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

BigInt StabilizedSeries::coeff(int degree) const {
  if (degree >= certified_order()) {
    throw PrecisionError("coefficient of q^" + std::to_string(degree) + " is not certified (certified below q^" +
                         std::to_string(certified_order()) + ")");
  }
  if (degree < min_degree) return 0;
  return coeffs[static_cast<std::size_t>(degree - min_degree)];
}

TruncatedLaurentSeries StabilizedSeries::certified() const {
  if (guaranteed_terms <= 0) throw PrecisionError("series '" + source + "' has no certified terms");
  std::vector<BigRat> v;
  v.reserve(static_cast<std::size_t>(guaranteed_terms));
  for (int i = 0; i < guaranteed_terms; ++i) v.emplace_back(coeffs[static_cast<std::size_t>(i)]);
  return TruncatedLaurentSeries(min_degree, std::move(v));
}

StabilizedSeries StabilizedSeries::truncated(int terms) const {
  StabilizedSeries out = *this;
  if (terms < static_cast<int>(out.coeffs.size())) out.coeffs.resize(static_cast<std::size_t>(std::max(terms, 0)));
  out.guaranteed_terms = std::min(out.guaranteed_terms, static_cast<int>(out.coeffs.size()));
  return out;
}

StabilizedSeries stabilize(const CFStream& stream, int terms) {
  if (terms < 1) throw DomainError("stabilize: need at least one term");
  std::vector<Term> raw;
  Term sum = 0;
  while (true) {
    auto a = stream.term(raw.size());
    auto b = a ? stream.term(raw.size() + 1) : std::nullopt;
    if (!b) break;
    raw.push_back(*a);
    raw.push_back(*b);
    sum += *a + *b;
    if (sum - 1 >= terms) return certify(stream, raw, raw.size(), terms);
  }

  if (stream.finite()) {
    const BigRat value = rational_of_cf(all_terms(stream));
    StabilizedSeries out = from_exact(taylor(q_rational(value), terms), stream.name() + " (exact rational)");
    out.depth = all_terms(stream).size();
    return out;
  }
  if (raw.size() < 2) {
    StabilizedSeries out;
    out.source = stream.name() + " (no convergent pair available)";
    return out;
  }
  return certify(stream, raw, raw.size(), terms);
}

// ---------------------------------------------------------------------------

QFraction QFraction::from(const QRational& x) { return QFraction{LaurentPolynomial(x.num), x.den}; }

QFraction QFraction::normalized() const {
  if (den.is_zero()) throw DomainError("QFraction with zero denominator");
  if (num.is_zero()) return QFraction{{}, IntPolynomial{1}};
  const int v = den.valuation();
  IntPolynomial d = den.shifted_down(v);
  IntPolynomial n = num.body();
  const IntPolynomial g = gcd(n, d);
  n = divide_exact(n, g);
  d = divide_exact(d, g);
  if (d.lowest() < 0) {
    n = -n;
    d = -d;
  }
  return QFraction{LaurentPolynomial(num.min_degree() - v, std::move(n)), std::move(d)};
}

TruncatedLaurentSeries QFraction::expand(int order) const {
  return series_div(num, LaurentPolynomial(den), order);
}

QFraction q_fraction(const BigRat& x_in) {
  BigRat x = x_in;
  x.canonicalize();
  if (x >= 1) return QFraction::from(q_rational(x));
  const BigInt k = ceil_of(BigRat(1 - x));
  if (!k.fits_sint_p()) throw DomainError("q_fraction: shift too large");
  return translate_down(QFraction::from(q_rational(BigRat(x + BigRat(k)))), static_cast<int>(k.get_si()));
}

QFraction translate_up(const QFraction& f, int k) {
  QFraction out = f;
  for (int i = 0; i < k; ++i) out = QFraction{out.num.shifted(1) + LaurentPolynomial(out.den), out.den}.normalized();
  return out;
}

QFraction translate_down(const QFraction& f, int k) {
  QFraction out = f;
  for (int i = 0; i < k; ++i) out = QFraction{(out.num - LaurentPolynomial(out.den)).shifted(-1), out.den}.normalized();
  return out;
}

StabilizedSeries translate_up(const StabilizedSeries& f, int k) {
  StabilizedSeries out = f;
  for (int i = 0; i < k; ++i) out = step(out, true);
  return out;
}

StabilizedSeries translate_down(const StabilizedSeries& f, int k) {
  StabilizedSeries out = f;
  for (int i = 0; i < k; ++i) out = step(out, false);
  return out;
}

// ---------------------------------------------------------------------------

RealSpec RealSpec::of(CFStream stream) {
  if (!stream.term(0)) throw DomainError("empty continued fraction stream");
  std::string name = stream.name();
  return RealSpec{0, std::move(stream), std::move(name), 0};
}

RealSpec RealSpec::translated(std::int64_t k) const {
  const Term first = *base.term(0);
  const Term t = first - shift + k;
  RealSpec out = t >= 1 ? RealSpec{0, replace_first_term(base, t), {}, 0} : RealSpec{1 - t, replace_first_term(base, 1), {}, 0};
  out.label = label.empty() ? base.name() : label;
  out.offset = (label.empty() ? -shift : offset) + k;
  return out;
}

RealSpec RealSpec::negated() const {
  RealSpec out = negated_value();
  const std::string lbl = label.empty() ? base.name() : label;
  out.label = lbl.find(' ') == std::string::npos ? "-" + lbl : "-(" + lbl + ")";
  out.offset = label.empty() ? shift : -offset;
  return out;
}

RealSpec RealSpec::negated_value() const {
  const std::string name = "neg(" + base.name() + ")";
  if (base.finite()) {
    const BigRat v = rational_of_cf(all_terms(base));
    const BigInt k = ceil_of(BigRat(1 + v));
    return RealSpec{k.get_si(), stream_of(cf_of_rational(BigRat(BigRat(k) - v)), name), {}, 0}.translated(shift);
  }
  // -x = [-a1-1; 1, a2-1, a3, ...], or [-a1-1; a3+1, a4, ...] when a2 = 1.
  const Term a1 = *base.term(0);
  const auto a2 = base.term(1);
  if (!a2) throw DomainError("negated: stream '" + base.name() + "' has a single term");
  const CFStream src = base;
  CFStream::TermSource source;
  if (*a2 >= 2) {
    source = [src, a2 = *a2](std::size_t i) -> std::optional<Term> {
      if (i < 2) return 1;
      if (i == 2) return a2 - 1;
      return src.term(i - 1);
    };
  } else {
    source = [src](std::size_t i) -> std::optional<Term> {
      if (i == 0) return 1;
      if (i == 1) {
        auto a3 = src.term(2);
        if (!a3) return std::nullopt;
        return *a3 + 1;
      }
      return src.term(i + 1);
    };
  }
  return RealSpec{a1 + 2, CFStream(name, std::move(source), false), {}, 0}.translated(shift);
}

std::string RealSpec::describe() const {
  const std::string lbl = label.empty() ? base.name() : label;
  const std::int64_t off = label.empty() ? -shift : offset;
  if (off == 0) return lbl;
  return lbl + (off < 0 ? " - " : " + ") + std::to_string(off < 0 ? -off : off);
}

StabilizedSeries q_real(const RealSpec& spec, int terms) {
  if (terms < 1) throw DomainError("q_real: need at least one term");
  if (spec.base.finite()) {
    const BigRat x = rational_of_cf(all_terms(spec.base)) - BigRat(static_cast<long>(spec.shift));
    const QFraction f = q_fraction(x);
    StabilizedSeries out = from_exact(f.expand(f.num.min_degree() + terms), spec.describe() + " (exact rational)");
    return out.truncated(terms);
  }
  if (spec.shift < 0) {
    return translate_up(stabilize(spec.base, terms), static_cast<int>(-spec.shift)).truncated(terms);
  }
  const int shift = static_cast<int>(spec.shift);
  StabilizedSeries base = stabilize(spec.base, terms + 2 * shift + 2);
  StabilizedSeries out = translate_down(base, shift).truncated(terms);
  out.source = spec.describe() + " via " + base.source;
  return out;
}

bool gap_check(const StabilizedSeries& series, int k) {
  if (k < 1) throw DomainError("gap_check: k must be >= 1");
  if (series.certified_order() < k + 1) {
    throw PrecisionError("gap_check: need " + std::to_string(k + 1) + " certified terms, have " +
                         std::to_string(series.certified_order()));
  }
  for (int i = 0; i < k; ++i) {
    if (series.coeff(i) != 1) return false;
  }
  return series.coeff(k) == 0;
}

std::vector<BigRat> neighbor_sequence(const BigInt& r, const BigInt& s, Side side, int depth) {
  const FareyTriangle t = farey_path(r, s).back();
  const FareyVertex& parent = side == Side::right ? t.right : t.left;
  const FareyVertex self = t.mediant();
  std::vector<BigRat> out;
  for (int n = 1; n <= depth; ++n) {
    BigRat x(BigInt(n * self.r + parent.r), BigInt(n * self.s + parent.s));
    x.canonicalize();
    out.push_back(std::move(x));
  }
  return out;
}

StabilizedSeries one_sided_probe(const BigInt& r, const BigInt& s, Side side, int terms, int depth) {
  if (depth < 2) throw DomainError("one_sided_probe: depth must be >= 2");
  const std::vector<BigRat> seq = neighbor_sequence(r, s, side, depth);
  const QFraction a = q_fraction(seq[seq.size() - 2]);
  const QFraction b = q_fraction(seq.back());
  const int lo = std::min(a.num.min_degree(), b.num.min_degree());
  const TruncatedLaurentSeries ea = a.expand(lo + terms);
  const TruncatedLaurentSeries eb = b.expand(lo + terms);

  StabilizedSeries out;
  out.min_degree = lo;
  for (int k = lo; k < lo + terms && ea.coeff(k) == eb.coeff(k); ++k) out.coeffs.push_back(eb.coeff(k).get_num());
  out.guaranteed_terms = static_cast<int>(out.coeffs.size());
  out.depth = static_cast<std::size_t>(depth);
  out.source = std::string(side == Side::left ? "left" : "right") + " neighbors of " + r.get_str() + "/" + s.get_str();
  return out;
}

}  // namespace qdeform
