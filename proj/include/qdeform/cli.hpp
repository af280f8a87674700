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

#ifndef QDEFORM_CLI_HPP
#define QDEFORM_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdeform/quadratic.hpp"
#include "qdeform/qreal.hpp"

namespace qdeform {

/// Directory holding data/ and fixtures/; QDEFORM_DATA_DIR at build time.
std::string default_data_dir();

/// Parses a real-number spec: anything parse_stream accepts, optionally
/// prefixed by "neg:" for the negative.
RealSpec parse_real_spec(const std::string& text);

/// Expected series stored under fixtures/.
///
/// Header lines "key: value" (input, kind, min_degree, max_degree and
/// optionally numerator/denominator as ascending coefficient lists) are
/// followed by "degree coefficient" lines. '#' starts a comment.
struct SeriesFixture {
  std::string name;
  std::string input;
  /// "qrat" (input is a fraction) or "qreal" (input is a real spec).
  std::string kind;
  int min_degree = 0;
  int max_degree = 0;
  std::vector<BigInt> coeffs;
  std::optional<IntPolynomial> numerator;
  std::optional<IntPolynomial> denominator;

  [[nodiscard]] int terms() const { return max_degree - min_degree + 1; }
};

SeriesFixture read_series_fixture(const std::string& path);
/// Every series fixture in `dir`, sorted by name.
std::vector<SeriesFixture> load_series_fixtures(const std::string& dir);

/// Computes the series a fixture describes on its window.
StabilizedSeries evaluate_fixture(const SeriesFixture& fixture);

/// Expected equation and closed-form data for a periodic continued fraction.
struct EquationFixture {
  std::string name;
  PeriodicCF cf;
  QQuadraticEquation equation;
  LaurentPolynomial discriminant;
  int denominator_exponent = 0;
};

std::vector<EquationFixture> read_equation_fixtures(const std::string& path);

/// Result of one verification suite.
struct SuiteResult {
  std::string name;
  long checks = 0;
  std::vector<std::string> failures;

  [[nodiscard]] bool passed() const { return failures.empty(); }
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const std::string& data_dir);

/// Entry point of the qdeform tool. Returns the process exit code: 0 on
/// success, 1 when a verification fails, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qdeform

#endif  // QDEFORM_CLI_HPP
