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

#include "qdeform/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <regex>
#include <sstream>

#include "qdeform/qcalc.hpp"

#ifndef QDEFORM_DATA_DIR
#define QDEFORM_DATA_DIR "."
#endif

namespace qdeform {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitError = 2;
constexpr std::size_t kMaxReported = 10;

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

IntPolynomial parse_coefficient_list(const std::string& text) {
  std::vector<BigInt> coeffs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    BigInt v;
    if (v.set_str(trim(tok), 10) != 0) throw DomainError("malformed coefficient '" + tok + "'");
    coeffs.push_back(v);
  }
  return IntPolynomial(std::move(coeffs));
}

BigRat parse_fraction(const std::string& text) {
  static const std::regex pattern(R"(\s*(-?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw DomainError("malformed fraction '" + text + "'");
  const BigInt r(m[1].str());
  const BigInt s(m[2].matched ? m[2].str() : std::string("1"));
  if (s == 0) throw DomainError("zero denominator in '" + text + "'");
  BigRat x(r, s);
  x.canonicalize();
  return x;
}

PeriodicCF parse_periodic_spec(const std::string& text) {
  if (text == "phi" || text == "golden") return PeriodicCF{{}, {1}};
  if (text == "silver") return PeriodicCF{{}, {2}};
  if (text.rfind("sqrt:", 0) == 0) return cf_of_sqrt(std::stoll(text.substr(5)));
  return parse_periodic_cf(text);
}

// Keeps the part of a series below degree `order`.
StabilizedSeries cut_at(const StabilizedSeries& s, int order) {
  const int keep = std::max(0, order - s.min_degree);
  return s.truncated(keep);
}

StabilizedSeries from_series(const TruncatedLaurentSeries& t, std::string source) {
  StabilizedSeries out;
  out.min_degree = t.min_degree();
  out.coeffs = t.integer_coeffs();
  out.guaranteed_terms = static_cast<int>(out.coeffs.size());
  out.source = std::move(source);
  return out;
}

Json coefficient_array(const std::vector<BigInt>& coeffs) {
  Json arr = Json::array();
  for (const auto& c : coeffs) arr.push_back(c.get_str());
  return arr;
}

Json polynomial_json(const LaurentPolynomial& p) {
  std::vector<BigInt> coeffs;
  if (!p.is_zero()) {
    for (int d = p.min_degree(); d <= p.max_degree(); ++d) coeffs.push_back(p.coeff(d));
  }
  Json j;
  j["min_degree"] = p.is_zero() ? 0 : p.min_degree();
  j["coefficients"] = coefficient_array(coeffs);
  j["text"] = to_string(p);
  return j;
}

Json series_record(const std::string& input, const StabilizedSeries& s, const std::string& construction) {
  Json j;
  j["input_spec"] = input;
  j["min_degree"] = s.min_degree;
  j["coefficients"] = coefficient_array(s.coeffs);
  j["guaranteed_terms"] = s.guaranteed_terms;
  j["metadata"] = Json{{"construction", construction}, {"source", s.source}, {"depth", s.depth}};
  return j;
}

void print_table(std::ostream& out, const StabilizedSeries& s) {
  std::size_t width = 11;
  for (const auto& c : s.coeffs) width = std::max(width, c.get_str().size());
  out << "degree  " << std::setw(static_cast<int>(width)) << "coefficient" << "\n";
  for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
    out << std::setw(6) << s.min_degree + static_cast<int>(i) << "  " << std::setw(static_cast<int>(width))
        << s.coeffs[i].get_str() << (static_cast<int>(i) < s.guaranteed_terms ? "" : "  (uncertified)") << "\n";
  }
}

void emit(std::ostream& out, const std::string& format, const Json& record, const StabilizedSeries& s,
          const std::vector<std::pair<std::string, std::string>>& headers) {
  if (format == "json") {
    out << record.dump(2) << "\n";
  } else if (format == "csv") {
    out << "degree,coefficient\n";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
      out << s.min_degree + static_cast<int>(i) << "," << s.coeffs[i].get_str() << "\n";
    }
  } else {
    for (const auto& [k, v] : headers) out << k << ": " << v << "\n";
    print_table(out, s);
  }
}

// ---------------------------------------------------------------------------
// Verification suites

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.checks;
    if (!ok && result_.failures.size() < kMaxReported) result_.failures.push_back(describe());
  }

  // Runs body, recording any library exception as a failure.
  void guarded(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(false, [&] { return what + ": " + e.what(); });
    }
  }

  SuiteResult result() const { return result_; }

 private:
  SuiteResult result_;
};

const std::vector<std::pair<std::string, std::string>>& bundled_streams() {
  static const std::vector<std::pair<std::string, std::string>> streams = {
      {"phi", "phi"},       {"silver", "silver"}, {"e", "e"},           {"pi", "pi"},
      {"sqrt:2", "sqrt:2"}, {"sqrt:3", "sqrt:3"}, {"sqrt:5", "sqrt:5"}, {"sqrt:7", "sqrt:7"}};
  return streams;
}

std::string fraction_text(const BigInt& r, const BigInt& s) { return r.get_str() + "/" + s.get_str(); }

SuiteResult suite_farey() {
  Recorder rec("farey");
  for (long s = 1; s < 60; ++s) {
    for (long r = s; r + s <= 60; ++r) {
      if (std::gcd(r, s) != 1) continue;
      rec.guarded(fraction_text(r, s), [&] {
        const FiniteCF cf = cf_of_rational(BigInt(r), BigInt(s));
        const QRational a = q_rational_matrix(cf);
        const QRational b = q_rational_cf(cf);
        const QRational c = q_rational_farey(r, s);
        rec.check(a == b && b == c, [&] {
          return fraction_text(r, s) + ": matrix " + to_string(a.num) + " / " + to_string(a.den) + ", cf " +
                 to_string(b.num) + " / " + to_string(b.den) + ", farey " + to_string(c.num) + " / " +
                 to_string(c.den);
        });
      });
    }
  }
  std::vector<FareyTriangle> level{FareyTriangle::base()};
  for (int depth = 0; depth <= 8; ++depth) {
    std::vector<FareyTriangle> next;
    for (const auto& t : level) {
      const FareyVertex m = t.mediant();
      rec.guarded("triangle at " + fraction_text(m.r, m.s), [&] {
        farey_neighbor_relations(t);
        rec.check(true, [] { return std::string(); });
      });
      next.push_back(t.left_child());
      next.push_back(t.right_child());
    }
    level = std::move(next);
  }
  return rec.result();
}

SuiteResult suite_determinant() {
  Recorder rec("determinant");
  for (const auto& [label, spec] : bundled_streams()) {
    const CFStream stream = parse_stream(spec);
    const std::vector<Term> raw = stream.take(15);
    for (std::size_t n = 2; n <= 15; ++n) {
      const std::string where = label + " n=" + std::to_string(n);
      rec.guarded(where, [&] {
        det_identity(stream, n);
        rec.check(true, [] { return std::string(); });
      });
      rec.guarded(where, [&] {
        const int bound = expected_det_exponent(raw, n);
        const QRational prev =
            q_rational_matrix(FiniteCF(evenize({raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n - 1)})));
        const QRational cur =
            q_rational_matrix(FiniteCF(evenize({raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n)})));
        const TruncatedLaurentSeries diff = taylor(cur, bound + 1) - taylor(prev, bound + 1);
        const BigRat jump = diff.coeff(bound);
        const bool ok = (diff.is_zero() ? false : diff.min_degree() == bound) && (jump == 1 || jump == -1);
        rec.check(ok, [&] { return where + ": convergent difference " + to_string(diff) + ", expected +-q^" +
                                   std::to_string(bound); });
      });
    }
  }
  return rec.result();
}

SuiteResult suite_translation() {
  Recorder rec("translation");
  for (long s = 1; s < 30; ++s) {
    for (long r = 1; r + s <= 30; ++r) {
      if (std::gcd(r, s) != 1) continue;
      const BigRat x(r, s);
      rec.guarded(fraction_text(r, s), [&] {
        const QFraction f = q_fraction(x);
        for (int k = 1; k <= 3; ++k) {
          const QFraction up = translate_up(f, k);
          const QFraction down = translate_down(f, k);
          rec.check(up == q_fraction(BigRat(x + k)),
                    [&] { return fraction_text(r, s) + " + " + std::to_string(k) + " disagrees with translation"; });
          rec.check(down == q_fraction(BigRat(x - k)),
                    [&] { return fraction_text(r, s) + " - " + std::to_string(k) + " disagrees with translation"; });
          rec.check(translate_down(up, k) == f && translate_up(down, k) == f,
                    [&] { return fraction_text(r, s) + ": round trip by " + std::to_string(k) + " fails"; });
        }
      });
    }
  }
  for (const char* spec : {"phi", "e", "pi", "sqrt:2", "sqrt:7"}) {
    rec.guarded(spec, [&] {
      const RealSpec base = RealSpec::of(parse_stream(spec));
      const StabilizedSeries s = q_real(base, 40);
      for (int k = 1; k <= 3; ++k) {
        const StabilizedSeries up = translate_up(s, k);
        const StabilizedSeries direct = q_real(base.translated(k), 40);
        bool same = up.certified_order() >= 40;
        for (int d = 0; same && d < 40; ++d) same = up.coeff(d) == direct.coeff(d);
        rec.check(same, [&] { return std::string(spec) + " + " + std::to_string(k) + ": translated series differ"; });
        const StabilizedSeries back = translate_down(up, k);
        bool round = back.certified_order() >= s.certified_order();
        for (int d = s.min_degree; round && d < s.certified_order(); ++d) round = back.coeff(d) == s.coeff(d);
        rec.check(round, [&] { return std::string(spec) + ": series round trip by " + std::to_string(k) + " fails"; });
      }
    });
  }
  return rec.result();
}

SuiteResult suite_gap() {
  Recorder rec("gap");
  const std::vector<std::pair<std::string, int>> cases = {{"phi", 1},    {"sqrt:2", 1}, {"sqrt:3", 1}, {"sqrt:5", 2},
                                                           {"sqrt:7", 2}, {"e", 2},      {"pi", 3}};
  for (const auto& [spec, k] : cases) {
    rec.guarded(spec, [&] {
      const StabilizedSeries s = q_real(RealSpec::of(parse_stream(spec)), k + 8);
      rec.check(gap_check(s, k), [&] { return spec + ": series does not start 1 + ... + q^" + std::to_string(k - 1) +
                                              " + 0 q^" + std::to_string(k); });
    });
  }
  return rec.result();
}

SuiteResult suite_quadratics(const std::string& data_dir) {
  Recorder rec("quadratics");
  for (const auto& fx : read_equation_fixtures(data_dir + "/fixtures/equations.txt")) {
    rec.guarded(fx.name, [&] {
      const QQuadraticEquation eq = derive_equation(fx.cf);
      rec.check(equivalent(eq, fx.equation), [&] {
        return fx.name + ": derived " + to_string(eq.alpha) + " | " + to_string(eq.beta) + " | " + to_string(eq.gamma);
      });
      const CFStream stream = stream_of(fx.cf);
      rec.check(verify_equation(eq, stabilize(stream, 100), 100),
                [&] { return fx.name + ": residual does not vanish through 100 terms"; });
      const ClosedForm cf = closed_form(eq, stabilize(stream, 30));
      rec.check(cf.discriminant == fx.discriminant && cf.denominator_exponent == fx.denominator_exponent,
                [&] { return fx.name + ": discriminant " + to_string(cf.discriminant); });
      const double classical = rational_of_cf(stream.take(40)).get_d();
      rec.check(std::abs(cf.value_at_one() - classical) < 1e-9,
                [&] { return fx.name + ": closed form at q=1 is " + std::to_string(cf.value_at_one()); });
    });
  }
  rec.guarded("mismatched pair", [&] {
    const QQuadraticEquation golden = derive_equation(PeriodicCF{{}, {1}});
    rec.check(!verify_equation(golden, stabilize(cf_stream_silver(), 20), 20),
              [] { return std::string("golden equation accepted the silver series"); });
  });
  return rec.result();
}

SuiteResult suite_reference_series(const std::string& data_dir) {
  Recorder rec("reference-series");
  for (const auto& fx : load_series_fixtures(data_dir + "/fixtures")) {
    rec.guarded(fx.name, [&] {
      const StabilizedSeries s = evaluate_fixture(fx);
      for (int d = fx.min_degree; d <= fx.max_degree; ++d) {
        const BigInt want = fx.coeffs[static_cast<std::size_t>(d - fx.min_degree)];
        const BigInt got = s.coeff(d);
        rec.check(got == want, [&] {
          return fx.name + ": coefficient of q^" + std::to_string(d) + " is " + got.get_str() + ", expected " +
                 want.get_str();
        });
        if (got != want) return;
      }
      if (fx.numerator || fx.denominator) {
        const BigRat x = parse_fraction(fx.input);
        const FiniteCF cf = cf_of_rational(x);
        for (const QRational& q : {q_rational_matrix(cf), q_rational_cf(cf), q_rational_farey(x.get_num(), x.get_den())}) {
          rec.check((!fx.numerator || q.num == *fx.numerator) && (!fx.denominator || q.den == *fx.denominator),
                    [&] { return fx.name + ": got " + to_string(q.num) + " / " + to_string(q.den); });
        }
      }
    });
  }
  return rec.result();
}

Json suite_json(const SuiteResult& r) {
  Json j;
  j["suite"] = r.name;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  j["failures"] = r.failures;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string default_data_dir() { return QDEFORM_DATA_DIR; }

RealSpec parse_real_spec(const std::string& text) {
  if (text.rfind("neg:", 0) == 0) return parse_real_spec(text.substr(4)).negated();
  return RealSpec::of(parse_stream(text));
}

SeriesFixture read_series_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open fixture '" + path + "'");
  SeriesFixture fx;
  fx.name = std::filesystem::path(path).stem().string();
  std::map<int, BigInt> values;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (auto colon = line.find(':'); colon != std::string::npos && std::isalpha(static_cast<unsigned char>(line[0]))) {
      const std::string key = line.substr(0, colon);
      const std::string value = trim(line.substr(colon + 1));
      if (key == "input") fx.input = value;
      else if (key == "kind") fx.kind = value;
      else if (key == "min_degree") fx.min_degree = std::stoi(value);
      else if (key == "max_degree") fx.max_degree = std::stoi(value);
      else if (key == "numerator") fx.numerator = parse_coefficient_list(value);
      else if (key == "denominator") fx.denominator = parse_coefficient_list(value);
      else throw DomainError("unknown fixture key '" + key + "' in " + path);
      continue;
    }
    std::istringstream ls(line);
    int degree = 0;
    std::string value;
    if (!(ls >> degree >> value)) throw DomainError("malformed fixture line '" + line + "' in " + path);
    values[degree] = BigInt(value);
  }
  if (fx.input.empty() || (fx.kind != "qrat" && fx.kind != "qreal")) {
    throw DomainError("fixture '" + path + "' lacks input or kind");
  }
  for (int d = fx.min_degree; d <= fx.max_degree; ++d) {
    auto it = values.find(d);
    if (it == values.end()) throw DomainError("fixture '" + path + "' misses degree " + std::to_string(d));
    fx.coeffs.push_back(it->second);
  }
  return fx;
}

std::vector<SeriesFixture> load_series_fixtures(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".txt") continue;
    std::ifstream in(entry.path());
    std::string line;
    bool series = false;
    while (std::getline(in, line)) {
      if (line.rfind("kind:", 0) == 0) {
        series = true;
        break;
      }
    }
    if (series) paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<SeriesFixture> out;
  for (const auto& p : paths) out.push_back(read_series_fixture(p));
  return out;
}

StabilizedSeries evaluate_fixture(const SeriesFixture& fx) {
  const int order = fx.max_degree + 1;
  if (fx.kind == "qrat") {
    const BigRat x = parse_fraction(fx.input);
    if (x >= 1) return from_series(taylor(q_rational(x), order), "taylor");
    const QFraction f = q_fraction(x);
    return from_series(f.expand(order), "translation");
  }
  const RealSpec spec = parse_real_spec(fx.input);
  return cut_at(q_real(spec, std::max(1, order - fx.min_degree)), order);
}

std::vector<EquationFixture> read_equation_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open equation fixtures '" + path + "'");
  std::vector<EquationFixture> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      out.push_back(EquationFixture{});
      out.back().name = line.substr(1, line.size() - 2);
      continue;
    }
    if (out.empty()) throw DomainError("equation fixture entry before any [name] header");
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw DomainError("malformed equation fixture line '" + line + "'");
    const std::string key = line.substr(0, colon);
    const std::string value = trim(line.substr(colon + 1));
    EquationFixture& fx = out.back();
    if (key == "cf") fx.cf = parse_periodic_cf(value);
    else if (key == "alpha") fx.equation.alpha = parse_coefficient_list(value);
    else if (key == "beta") fx.equation.beta = parse_coefficient_list(value);
    else if (key == "gamma") fx.equation.gamma = parse_coefficient_list(value);
    else if (key == "discriminant") fx.discriminant = parse_coefficient_list(value);
    else if (key == "denominator_exponent") fx.denominator_exponent = std::stoi(value);
    else throw DomainError("unknown equation fixture key '" + key + "'");
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"farey", "determinant", "translation",
                                                 "gap",   "quadratics",  "reference-series"};
  return names;
}

SuiteResult run_suite(const std::string& name, const std::string& data_dir) {
  if (name == "farey") return suite_farey();
  if (name == "determinant") return suite_determinant();
  if (name == "translation") return suite_translation();
  if (name == "gap") return suite_gap();
  if (name == "quadratics") return suite_quadratics(data_dir);
  if (name == "reference-series") return suite_reference_series(data_dir);
  throw DomainError("unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-deformations of rational and real numbers", "qdeform"};
  app.require_subcommand(1);
  std::string data_dir = default_data_dir();
  app.add_option("--data-dir", data_dir, "Directory containing data/ and fixtures/");
  const auto formats = CLI::IsMember({"text", "json", "csv"});

  // qrat
  auto* qrat = app.add_subcommand("qrat", "q-deformation of a rational number");
  std::string fraction;
  int qrat_terms = 13;
  std::string method = "matrix";
  std::string qrat_format = "text";
  qrat->add_option("fraction", fraction, "r/s or an integer")->required();
  qrat->add_option("--terms", qrat_terms, "Expand through degree terms-1")->check(CLI::PositiveNumber);
  qrat->add_option("--method", method, "Construction")->check(CLI::IsMember({"matrix", "cf", "farey"}));
  qrat->add_option("--format", qrat_format)->check(formats);

  // qreal
  auto* qreal = app.add_subcommand("qreal", "Stabilized series of a real number");
  std::string real_spec;
  int real_terms = 20;
  long long shift = 0;
  bool unsafe = false;
  std::string real_format = "text";
  qreal->add_option("spec", real_spec, "e, pi, phi, silver, sqrt:D, a,b,c, pre;period, or neg:SPEC")->required();
  qreal->add_option("--terms", real_terms, "Coefficients through degree terms-1")->check(CLI::PositiveNumber);
  qreal->add_option("--shift", shift, "Add an integer to the number");
  qreal->add_flag("--unsafe", unsafe, "Also print coefficients that are not certified");
  qreal->add_option("--format", real_format)->check(formats);

  // quadratic
  auto* quad = app.add_subcommand("quadratic", "Functional equation of a periodic continued fraction");
  std::string periodic;
  int verify_n = 0;
  bool want_closed = false;
  std::string quad_format = "text";
  quad->add_option("periodic", periodic, "pre;period, sqrt:D, phi or silver")->required();
  quad->add_option("--verify", verify_n, "Check the residual through N terms")->check(CLI::PositiveNumber);
  quad->add_flag("--closed-form", want_closed, "Solve for the root matching the series");
  quad->add_option("--format", quad_format)->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string suite = "all";
  std::string verify_format = "text";
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));

  // compare
  auto* compare = app.add_subcommand("compare", "Compare a series with a signed b-file sequence");
  std::string compare_spec = "phi";
  std::string bfile_path;
  long offset = 1;
  int from = 2;
  int compare_terms = 21;
  std::string compare_format = "text";
  compare->add_option("spec", compare_spec, "Real-number spec (default phi)");
  compare->add_option("--bfile", bfile_path, "b-file with 'n value' lines")->required();
  compare->add_option("--signed", offset, "Match kappa_k with (-1)^k b(k - OFFSET)");
  compare->add_option("--from", from, "First degree compared");
  compare->add_option("--terms", compare_terms, "Series length")->check(CLI::PositiveNumber);
  compare->add_option("--format", compare_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*qrat) {
      const BigRat x = parse_fraction(fraction);
      std::vector<std::pair<std::string, std::string>> headers{{"input", fraction}};
      Json record;
      StabilizedSeries s;
      if (x >= 1) {
        const FiniteCF cf = cf_of_rational(x);
        const QRational q = method == "cf"      ? q_rational_cf(cf)
                            : method == "farey" ? q_rational_farey(x.get_num(), x.get_den())
                                                : q_rational_matrix(cf);
        s = from_series(taylor(q, qrat_terms), method);
        s.depth = cf.size();
        record = series_record(fraction, s, method);
        record["numerator"] = polynomial_json(LaurentPolynomial(q.num));
        record["denominator"] = polynomial_json(LaurentPolynomial(q.den));
        headers.emplace_back("construction", method);
        headers.emplace_back("continued fraction", format_cf(cf));
        headers.emplace_back("numerator", to_string(q.num));
        headers.emplace_back("denominator", to_string(q.den));
      } else {
        const QFraction f = q_fraction(x);
        s = from_series(f.expand(qrat_terms), "translation");
        record = series_record(fraction, s, "translation");
        record["numerator"] = polynomial_json(f.num);
        record["denominator"] = polynomial_json(LaurentPolynomial(f.den));
        headers.emplace_back("construction", "translation");
        headers.emplace_back("numerator", to_string(f.num));
        headers.emplace_back("denominator", to_string(f.den));
      }
      headers.emplace_back("guaranteed_terms", std::to_string(s.guaranteed_terms));
      emit(out, qrat_format, record, s, headers);
      return 0;
    }

    if (*qreal) {
      const RealSpec spec = parse_real_spec(real_spec).translated(shift);
      const int count = static_cast<int>(std::max<long long>(1, real_terms + spec.shift));
      const StabilizedSeries s = cut_at(q_real(spec, count), real_terms);
      if (s.certified_order() < real_terms && !unsafe) {
        err << "error: only " << s.guaranteed_terms << " coefficients of '" << spec.describe()
            << "' are certified by the available partial quotients (" << s.depth
            << " used); certifying through q^" << real_terms - 1 << " needs at least " << s.depth + 2
            << " partial quotients";
        if (real_spec.find("pi") != std::string::npos) err << " in " << pi_cf_path();
        err << "\n";
        return kExitError;
      }
      const Json record = series_record(real_spec + (shift ? " shift " + std::to_string(shift) : ""), s,
                                        "stabilization");
      emit(out, real_format, record, s,
           {{"input", real_spec},
            {"value", spec.describe()},
            {"source", s.source},
            {"guaranteed_terms", std::to_string(s.guaranteed_terms)}});
      return 0;
    }

    if (*quad) {
      const PeriodicCF pcf = parse_periodic_spec(periodic);
      const QQuadraticEquation eq = derive_equation(pcf);
      Json record;
      record["input_spec"] = periodic;
      record["continued_fraction"] = format_cf(pcf);
      record["equation"] = Json{{"alpha", polynomial_json(eq.alpha)},
                                {"beta", polynomial_json(eq.beta)},
                                {"gamma", polynomial_json(eq.gamma)}};
      bool ok = true;
      std::ostringstream text;
      text << "continued fraction: " << format_cf(pcf) << "\n";
      text << "equation: (" << to_string(eq.alpha) << ") X^2 + (" << to_string(eq.beta) << ") X + ("
           << to_string(eq.gamma) << ") = 0\n";
      const CFStream stream = stream_of(pcf);
      if (verify_n > 0) {
        const bool v = verify_equation(eq, stabilize(stream, verify_n), verify_n);
        ok = ok && v;
        record["verify"] = Json{{"terms", verify_n}, {"passed", v}};
        text << "verify through " << verify_n << " terms: " << (v ? "pass" : "FAIL") << "\n";
      }
      if (want_closed) {
        const ClosedForm cf = closed_form(eq, stabilize(stream, 30));
        record["closed_form"] = Json{{"linear_part", polynomial_json(cf.linear_part)},
                                     {"discriminant", polynomial_json(cf.discriminant)},
                                     {"denominator", polynomial_json(LaurentPolynomial(IntPolynomial{2}) * cf.alpha)},
                                     {"denominator_exponent", cf.denominator_exponent},
                                     {"branch", cf.branch}};
        text << "closed form: (" << to_string(cf.linear_part) << (cf.branch > 0 ? " + " : " - ") << "sqrt("
             << to_string(cf.discriminant) << ")) / (" << to_string(LaurentPolynomial(IntPolynomial{2}) * cf.alpha)
             << ")\n";
      }
      if (quad_format == "json") {
        out << record.dump(2) << "\n";
      } else {
        out << text.str();
      }
      return ok ? 0 : kExitFailed;
    }

    if (*verify) {
      std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
      bool ok = true;
      Json reports = Json::array();
      for (const auto& name : names) {
        const SuiteResult r = run_suite(name, data_dir);
        ok = ok && r.passed();
        if (verify_format == "json") {
          reports.push_back(suite_json(r));
        } else {
          out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
          if (!r.passed()) out << "  first counterexample: " << r.failures.front() << "\n";
        }
      }
      if (verify_format == "json") out << Json{{"passed", ok}, {"suites", reports}}.dump(2) << "\n";
      return ok ? 0 : kExitFailed;
    }

    if (*compare) {
      const BFile bfile = read_bfile(bfile_path);
      const RealSpec spec = parse_real_spec(compare_spec);
      const StabilizedSeries s = cut_at(q_real(spec, compare_terms), compare_terms);
      const SignedComparison c = compare_signed(s, bfile, offset, from);
      Json record;
      record["input_spec"] = compare_spec;
      record["bfile"] = bfile_path;
      record["offset"] = offset;
      record["from"] = from;
      record["checked"] = c.checked;
      record["partial"] = c.partial;
      record["passed"] = c.ok();
      if (c.first_mismatch) {
        const int k = *c.first_mismatch;
        record["first_mismatch"] =
            Json{{"degree", k}, {"series", s.coeff(k).get_str()}, {"bfile", bfile.at(k - offset).get_str()}};
      }
      std::optional<GoldenReport> golden;
      if (compare_spec == "phi" || compare_spec == "golden") {
        golden = golden_specials(s, bfile);
        record["recurrence"] = Json{{"holds_from", golden->recurrence_from},
                                    {"holds_to", golden->recurrence_to},
                                    {"failures", golden->recurrence_failures}};
      }
      if (compare_format == "json") {
        out << record.dump(2) << "\n";
      } else {
        out << "compared kappa_k with (-1)^k b(k-" << offset << ") for k = " << from << ".." << from + c.checked - 1
            << ": " << (c.ok() ? "match" : "MISMATCH") << (c.partial ? " (b-file shorter than series)" : "") << "\n";
        if (c.first_mismatch) {
          const int k = *c.first_mismatch;
          out << "  first counterexample: k=" << k << " series " << s.coeff(k) << " b-file "
              << bfile.at(k - offset) << "\n";
        }
        if (golden) {
          out << "recurrence holds for k = " << golden->recurrence_from << ".." << golden->recurrence_to;
          if (!golden->recurrence_failures.empty()) {
            out << "; fails at k =";
            for (int k : golden->recurrence_failures) out << " " << k;
          }
          out << "\n";
        }
      }
      return c.ok() ? 0 : kExitFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: invalid number: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace qdeform
