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

// Naive reference implementations used as test oracles. They share no code
// with the library: polynomials are sparse maps, rationals are reached
// through the modular-group action instead of continued fractions, and
// series come from schoolbook long division.

#ifndef QDEFORM_TESTS_ORACLE_HPP
#define QDEFORM_TESTS_ORACLE_HPP

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Poly = std::map<int, mpz_class>;  // degree -> nonzero coefficient

inline void clean(Poly& p) {
  for (auto it = p.begin(); it != p.end();) it = it->second == 0 ? p.erase(it) : std::next(it);
}

inline Poly add(const Poly& a, const Poly& b, int sign = 1) {
  Poly out = a;
  for (const auto& [d, c] : b) out[d] += sign * c;
  clean(out);
  return out;
}

inline Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  clean(out);
  return out;
}

inline Poly monomial(int d, long c = 1) {
  Poly p;
  if (c != 0) p[d] = c;
  return p;
}

inline Poly from_dense(const std::vector<mpz_class>& coeffs, int low = 0) {
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p[low + static_cast<int>(i)] = coeffs[i];
  clean(p);
  return p;
}

/// A rational function num/den with Laurent polynomial parts.
struct Frac {
  Poly num, den;
};

/// a/b == c/d as rational functions.
inline bool same(const Frac& x, const Frac& y) { return mul(x.num, y.den) == mul(x.den, y.num); }

/// [n]_q for an integer n: 1 + ... + q^(n-1), or -q^-1 - ... - q^n.
inline Poly q_int(long n) {
  Poly p;
  if (n >= 0) {
    for (long i = 0; i < n; ++i) p[static_cast<int>(i)] = 1;
  } else {
    for (long i = 1; i <= -n; ++i) p[static_cast<int>(-i)] = -1;
  }
  return p;
}

/// [x]_q through the generators x -> x + 1 (X -> qX + 1) and x -> -1/x
/// (X -> -1/(qX)), starting from [n]_q at integers.
inline Frac q_deform(const mpq_class& x_in) {
  mpq_class x = x_in;
  x.canonicalize();
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  if (x == n) return {q_int(n.get_si()), monomial(0)};
  const mpq_class frac = x - n;          // in (0, 1)
  const mpq_class w = -1 / frac;         // < -1, smaller denominator
  const Frac fw = q_deform(w);
  Frac f{add(Poly{}, fw.den, -1), mul(monomial(1), fw.num)};  // -1/(q w)
  long k = n.get_si();
  for (; k > 0; --k) f = {add(mul(monomial(1), f.num), f.den), f.den};
  for (; k < 0; ++k) f = {add(f.num, f.den, -1), mul(monomial(1), f.den)};
  return f;
}

/// Long division of Laurent polynomials: coefficients of num/den for
/// degrees below `order`, keyed by degree.
inline std::map<int, mpq_class> long_division(const Poly& num, const Poly& den, int order) {
  std::map<int, mpq_class> out;
  if (num.empty()) return out;
  const int v = den.begin()->first;
  const mpq_class lead(den.begin()->second);
  std::map<int, mpq_class> rem;
  for (const auto& [d, c] : num) rem[d] = mpq_class(c);
  while (true) {
    while (!rem.empty() && rem.begin()->second == 0) rem.erase(rem.begin());
    if (rem.empty()) break;
    const int d = rem.begin()->first - v;
    if (d >= order) break;
    mpq_class c = rem.begin()->second / lead;
    c.canonicalize();
    out[d] = c;
    for (const auto& [e, dc] : den) {
      rem[d + e] -= c * mpq_class(dc);
      rem[d + e].canonicalize();
    }
  }
  return out;
}

/// Value of [a_1, ..., a_n] evaluated from the innermost term outwards.
inline mpq_class cf_value(const std::vector<long>& terms) {
  mpq_class v(terms.back());
  for (std::size_t i = terms.size() - 1; i-- > 0;) {
    v = mpq_class(terms[i]) + 1 / v;
    v.canonicalize();
  }
  return v;
}

/// Generalized Catalan numbers: sum_k C(n-k,k) C(n-k,k+1)/(n-k), a(0) = 1.
inline mpz_class generalized_catalan(long n) {
  if (n == 0) return 1;
  mpq_class s = 0;
  for (long k = 0; 2 * k <= n; ++k) {
    mpz_class a, b;
    mpz_bin_uiui(a.get_mpz_t(), static_cast<unsigned long>(n - k), static_cast<unsigned long>(k));
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n - k), static_cast<unsigned long>(k + 1));
    s += mpq_class(a * b, n - k);
  }
  s.canonicalize();
  return s.get_num();
}

}  // namespace oracle

#endif  // QDEFORM_TESTS_ORACLE_HPP
