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

#include "qdeform/contfrac.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <utility>

#ifndef QDEFORM_DATA_DIR
#define QDEFORM_DATA_DIR "."
#endif

namespace qdeform {

namespace {

void check_terms(std::span<const Term> terms) {
  for (Term a : terms) {
    if (a < 1) throw DomainError("continued fraction term " + std::to_string(a) + " is < 1");
  }
}

Term parse_term(const std::string& tok) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw DomainError("malformed continued fraction term '" + tok + "'");
  }
  while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
  if (pos != tok.size()) throw DomainError("malformed continued fraction term '" + tok + "'");
  return static_cast<Term>(v);
}

std::vector<Term> parse_term_list(const std::string& text) {
  std::vector<Term> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_term(tok));
  return out;
}

std::string join_terms(const std::vector<Term>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(terms[i]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

FiniteCF::FiniteCF(std::vector<Term> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw DomainError("empty continued fraction");
  check_terms(terms_);
}

bool FiniteCF::is_canonical() const {
  return terms_.size() % 2 == 0 || (terms_.size() == 1 && terms_[0] == 1);
}

FiniteCF FiniteCF::evenized() const { return FiniteCF(evenize(terms_)); }

Term FiniteCF::term_sum() const {
  Term s = 0;
  for (Term a : terms_) s += a;
  return s;
}

void PeriodicCF::validate() const {
  if (period.empty()) throw DomainError("periodic continued fraction with empty period");
  check_terms(preperiod);
  check_terms(period);
}

Term PeriodicCF::term(std::size_t index) const {
  if (index < preperiod.size()) return preperiod[index];
  return period[(index - preperiod.size()) % period.size()];
}

std::vector<Term> evenize(std::vector<Term> terms) {
  if (terms.size() % 2 == 0 || (terms.size() == 1 && terms[0] == 1)) return terms;
  if (terms.back() >= 2) {
    terms.back() -= 1;
    terms.push_back(1);
  } else {
    terms.pop_back();
    terms.back() += 1;
  }
  return terms;
}

FiniteCF cf_of_rational(const BigInt& r, const BigInt& s) {
  if (s == 0) throw DomainError("cf_of_rational: zero denominator");
  return cf_of_rational(BigRat(r, s));
}

FiniteCF cf_of_rational(const BigRat& x_in) {
  BigRat x = x_in;
  x.canonicalize();
  if (x < 1) throw DomainError("cf_of_rational: value " + x.get_str() + " is below 1; shift it first");
  BigInt r = x.get_num();
  BigInt s = x.get_den();
  std::vector<Term> terms;
  while (s != 0) {
    BigInt a;
    BigInt rem;
    mpz_fdiv_qr(a.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    if (!a.fits_slong_p()) throw DomainError("cf_of_rational: partial quotient exceeds 64 bits");
    terms.push_back(a.get_si());
    r = s;
    s = rem;
  }
  return FiniteCF(evenize(std::move(terms)));
}

BigRat rational_of_cf(std::span<const Term> terms) {
  if (terms.empty()) throw DomainError("rational_of_cf: empty term list");
  check_terms(terms);
  // Forward convergent recurrence h_n = a_n h_{n-1} + h_{n-2}.
  BigInt h_prev = 1, h = terms[0];
  BigInt k_prev = 0, k = 1;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    BigInt a = static_cast<long>(terms[i]);
    BigInt h_next = a * h + h_prev;
    BigInt k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return BigRat(h, k);
}

PeriodicCF cf_of_sqrt(std::int64_t d) {
  if (d < 2) throw DomainError("cf_of_sqrt: D must be >= 2");
  BigInt root;
  const BigInt big_d = static_cast<long>(d);
  mpz_sqrt(root.get_mpz_t(), big_d.get_mpz_t());
  if (root * root == big_d) throw DomainError("cf_of_sqrt: " + std::to_string(d) + " is a perfect square");
  const std::int64_t a0 = root.get_si();

  // State (P, Q) of the surd (P + sqrt D) / Q.
  PeriodicCF out;
  out.preperiod.push_back(a0);
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> seen;
  std::vector<Term> tail;
  std::int64_t p = 0, q = 1, a = a0;
  while (true) {
    p = a * q - p;
    q = (d - p * p) / q;
    a = (a0 + p) / q;
    auto [it, inserted] = seen.emplace(std::make_pair(p, q), tail.size());
    if (!inserted) {
      const std::size_t start = it->second;
      out.preperiod.insert(out.preperiod.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(start));
      out.period.assign(tail.begin() + static_cast<std::ptrdiff_t>(start), tail.end());
      return out;
    }
    tail.push_back(a);
  }
}

// ---------------------------------------------------------------------------

CFStream::CFStream(std::string name, TermSource source, bool finite)
    : name_(std::move(name)), source_(std::move(source)), finite_(finite) {}

std::optional<Term> CFStream::term(std::size_t index) const {
  auto t = source_(index);
  if (t && *t < 1) throw DomainError("stream '" + name_ + "' yielded term < 1");
  return t;
}

std::optional<Term> CFStream::next() {
  auto t = term(cursor_);
  if (t) ++cursor_;
  return t;
}

std::vector<Term> CFStream::take(std::size_t n) const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto t = term(i);
    if (!t) break;
    out.push_back(*t);
  }
  return out;
}

CFStream stream_of_terms(std::vector<Term> terms, std::string name, bool finite) {
  check_terms(terms);
  auto shared = std::make_shared<const std::vector<Term>>(std::move(terms));
  return CFStream(
      std::move(name),
      [shared](std::size_t i) -> std::optional<Term> {
        if (i < shared->size()) return (*shared)[i];
        return std::nullopt;
      },
      finite);
}

CFStream stream_of(const FiniteCF& cf, std::string name) {
  if (name.empty()) name = format_cf(cf);
  return stream_of_terms(cf.terms(), std::move(name), true);
}

CFStream stream_of(const PeriodicCF& cf, std::string name) {
  cf.validate();
  if (name.empty()) name = format_cf(cf);
  return CFStream(
      std::move(name), [cf](std::size_t i) -> std::optional<Term> { return cf.term(i); }, false);
}

CFStream cf_stream_e() {
  return CFStream(
      "e",
      [](std::size_t i) -> std::optional<Term> {
        if (i == 0) return 2;
        const std::size_t j = i - 1;
        if (j % 3 == 1) return static_cast<Term>(2 * (j / 3 + 1));
        return 1;
      },
      false);
}

CFStream cf_stream_golden() { return stream_of(PeriodicCF{{}, {1}}, "phi"); }

CFStream cf_stream_silver() { return stream_of(PeriodicCF{{}, {2}}, "silver"); }

CFStream cf_stream_sqrt(std::int64_t d) { return stream_of(cf_of_sqrt(d), "sqrt:" + std::to_string(d)); }

std::string pi_cf_path() {
  if (const char* env = std::getenv("QREAL_PI_CF"); env != nullptr && *env != '\0') return env;
  return std::string(QDEFORM_DATA_DIR) + "/data/pi.cf";
}

std::vector<Term> read_cf_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open continued fraction file '" + path + "'");
  std::vector<Term> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(parse_term(line.substr(first, last - first + 1)));
  }
  check_terms(out);
  return out;
}

CFStream cf_stream_pi() {
  const std::string path = pi_cf_path();
  std::vector<Term> terms = read_cf_file(path);
  if (terms.empty()) throw DomainError("no partial quotients of pi in " + path);
  return stream_of_terms(std::move(terms), "pi", false);
}

FiniteCF cf_prefix(const CFStream& stream, std::size_t n) {
  if (n < 1) throw DomainError("cf_prefix: n must be >= 1");
  std::vector<Term> raw = stream.take(n);
  if (raw.size() < n) {
    throw DomainError("stream '" + stream.name() + "' exhausted after " + std::to_string(raw.size()) +
                      " terms; " + std::to_string(n) + " requested");
  }
  return FiniteCF(evenize(std::move(raw)));
}

FiniteCF parse_finite_cf(const std::string& text) { return FiniteCF(parse_term_list(text)); }

PeriodicCF parse_periodic_cf(const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw DomainError("periodic continued fraction needs 'pre;period'");
  PeriodicCF out{parse_term_list(text.substr(0, semi)), parse_term_list(text.substr(semi + 1))};
  out.validate();
  return out;
}

std::string format_cf(const FiniteCF& cf) { return join_terms(cf.terms()); }

std::string format_cf(const PeriodicCF& cf) { return join_terms(cf.preperiod) + ";" + join_terms(cf.period); }

CFStream parse_stream(const std::string& text) {
  if (text == "e") return cf_stream_e();
  if (text == "pi") return cf_stream_pi();
  if (text == "phi" || text == "golden") return cf_stream_golden();
  if (text == "silver") return cf_stream_silver();
  if (text.rfind("sqrt:", 0) == 0) return cf_stream_sqrt(parse_term(text.substr(5)));
  if (text.find(';') != std::string::npos) return stream_of(parse_periodic_cf(text));
  return stream_of(parse_finite_cf(text));
}

}  // namespace qdeform
