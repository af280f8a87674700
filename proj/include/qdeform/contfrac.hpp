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

#ifndef QDEFORM_CONTFRAC_HPP
#define QDEFORM_CONTFRAC_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdeform/exactalg.hpp"

namespace qdeform {

/// A partial quotient.
using Term = std::int64_t;

/// Regular continued fraction [a_1, ..., a_n] with every a_i >= 1.
///
/// Any such list is representable; `is_canonical()` tells whether it is the
/// unique even-length form used by the q-deformation formulas. The value 1
/// has no even-length form and is represented canonically by [1].
class FiniteCF {
 public:
  /// Throws DomainError for an empty list or a term < 1.
  explicit FiniteCF(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Term operator[](std::size_t i) const { return terms_[i]; }
  [[nodiscard]] bool is_canonical() const;
  /// Value-preserving even-length form.
  [[nodiscard]] FiniteCF evenized() const;
  /// a_1 + ... + a_n
  [[nodiscard]] Term term_sum() const;

  friend bool operator==(const FiniteCF&, const FiniteCF&) = default;

 private:
  std::vector<Term> terms_;
};

/// Eventually periodic expansion [pre; period, period, ...].
struct PeriodicCF {
  std::vector<Term> preperiod;
  std::vector<Term> period;

  /// Throws DomainError for an empty period or any term < 1.
  void validate() const;
  [[nodiscard]] Term term(std::size_t index) const;

  friend bool operator==(const PeriodicCF&, const PeriodicCF&) = default;
};

/// Even-length normalization of a raw term list: an odd list ending in
/// a >= 2 becomes [..., a-1, 1]; an odd list ending in 1 merges its last two
/// terms. [1] is left alone.
std::vector<Term> evenize(std::vector<Term> terms);

/// Canonical even-length expansion of r/s >= 1.
FiniteCF cf_of_rational(const BigInt& r, const BigInt& s);
FiniteCF cf_of_rational(const BigRat& x);

/// Exact value of [a_1, ..., a_n].
BigRat rational_of_cf(std::span<const Term> terms);
inline BigRat rational_of_cf(const FiniteCF& cf) { return rational_of_cf(cf.terms()); }

/// Periodic expansion of sqrt(D) from the (P, Q) surd recurrence.
PeriodicCF cf_of_sqrt(std::int64_t d);

/// On-demand source of partial quotients.
///
/// Terms are addressed by index, so a stream can be replayed or inspected
/// without consuming it; `next()` walks a private cursor for single-consumer
/// use. A finite stream describes a rational value exactly; an infinite one
/// that runs out (a data file of limited depth) is an error for callers that
/// need more terms.
class CFStream {
 public:
  using TermSource = std::function<std::optional<Term>(std::size_t)>;

  CFStream(std::string name, TermSource source, bool finite);

  [[nodiscard]] std::optional<Term> term(std::size_t index) const;
  std::optional<Term> next();
  void reset() { cursor_ = 0; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] bool finite() const { return finite_; }
  /// Up to n leading terms (fewer if the stream is exhausted).
  [[nodiscard]] std::vector<Term> take(std::size_t n) const;

 private:
  std::string name_;
  TermSource source_;
  bool finite_;
  std::size_t cursor_ = 0;
};

CFStream stream_of(const FiniteCF& cf, std::string name = {});
CFStream stream_of(const PeriodicCF& cf, std::string name = {});
/// Terms from a list; `finite` says whether the list is the whole expansion.
CFStream stream_of_terms(std::vector<Term> terms, std::string name, bool finite);
/// 2, 1, 2, 1, 1, 4, 1, 1, 6, ...
CFStream cf_stream_e();
/// 1, 1, 1, ...
CFStream cf_stream_golden();
/// 2, 2, 2, ...
CFStream cf_stream_silver();
CFStream cf_stream_sqrt(std::int64_t d);
/// Partial quotients of pi from the bundled data file (see pi_cf_path()).
CFStream cf_stream_pi();

/// First n raw terms of the stream, evenized. Throws DomainError if the
/// stream holds fewer than n terms.
FiniteCF cf_prefix(const CFStream& stream, std::size_t n);

/// $QREAL_PI_CF if set, otherwise the bundled data/pi.cf.
std::string pi_cf_path();
/// One term per line; '#' starts a comment.
std::vector<Term> read_cf_file(const std::string& path);

/// "1,2,1,1"
FiniteCF parse_finite_cf(const std::string& text);
/// "pre;period", e.g. "1;2" or ";1" or "2;1,1,1,4"
PeriodicCF parse_periodic_cf(const std::string& text);
std::string format_cf(const FiniteCF& cf);
std::string format_cf(const PeriodicCF& cf);

/// Stream named by the CLI syntax: e, pi, phi, silver, sqrt:D, a periodic
/// "pre;period" or a finite "a,b,c".
CFStream parse_stream(const std::string& text);

}  // namespace qdeform

#endif  // QDEFORM_CONTFRAC_HPP
