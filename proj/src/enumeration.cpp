#include "heron/enumeration.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <tuple>

#include "heron/error.hpp"

namespace heron {

namespace {

std::string triangle_label(const Rational& u1, const Rational& u2, const Rational& u3) {
  return "triangle (" + u1.to_string() + ", " + u2.to_string() + ", " + u3.to_string() + ")";
}

std::string pgram_label(const Rational& u1, const Rational& u2, const Rational& u3, const Rational& u4) {
  return "pgram (" + u1.to_string() + ", " + u2.to_string() + ", " + u3.to_string() + ", " +
         u4.to_string() + ")";
}

// Exact integer root of a non-negative integer, if it is a perfect square.
std::optional<mpz_class> integer_root(const mpz_class& value) {
  auto root = sqrt_exact(Rational(value));
  if (!root) return std::nullopt;
  return root->numerator();
}

// Every labeling of the sides must survive params -> triangle exactly.
bool all_labelings_round_trip(const Rational& a, const Rational& b, const Rational& c,
                              const Rational& area, std::string& why) {
  std::array<Rational, 3> sides{a, b, c};
  std::sort(sides.begin(), sides.end());
  do {
    HeronTriangle labeled(sides[0], sides[1], sides[2], area);
    TriangleParams params = params_from_triangle(labeled);
    if (triangle_from_params(params) != labeled) {
      why = "labeling (" + sides[0].to_string() + ", " + sides[1].to_string() + ", " +
            sides[2].to_string() + ") does not round trip";
      return false;
    }
  } while (std::next_permutation(sides.begin(), sides.end()));
  return true;
}

std::string check_triangle(const TriangleRecord& rec) {
  std::string problems;
  auto note = [&](const std::string& what) {
    if (!problems.empty()) problems += "; ";
    problems += what;
  };
  try {
    HeronTriangle t(rec.u1, rec.u2, rec.u3, rec.area);
    auto heron_area = area_heron(rec.u1, rec.u2, rec.u3);
    if (!heron_area || *heron_area != rec.area) note("area differs from Heron's formula");
    if (params_from_triangle(t) != rec.params) note("stored parameters differ from recovery");
    if (triangle_from_params(rec.params) != t) note("stored parameters do not reproduce the triangle");
    AngleGenerators g = angle_generators(t);
    if (g != rec.generators) note("stored generators differ");
    if (g.p * g.q + g.q * g.r + g.r * g.p != Rational(1)) note("pq + qr + rp != 1");
    std::string why;
    if (!all_labelings_round_trip(rec.u1, rec.u2, rec.u3, rec.area, why)) note(why);
  } catch (const Error& e) {
    note(e.what());
  }
  if (!rec.round_trip_ok) note("round trip flagged as failed");
  if (problems.empty()) return problems;
  return triangle_label(rec.u1, rec.u2, rec.u3) + " A=" + rec.area.to_string() + ": " + problems;
}

std::string check_pgram(const PgramRecord& rec) {
  std::string problems;
  auto note = [&](const std::string& what) {
    if (!problems.empty()) problems += "; ";
    problems += what;
  };
  try {
    HeronParallelogram hp(RationalParallelogram(rec.u1, rec.u2, rec.u3, rec.u4), rec.area);
    ParallelogramParams params = params_from_pgram(hp.shape());
    if (params != rec.params) note("stored parameters differ from recovery");
    if (pgram_from_params(rec.params) != hp.shape()) note("stored parameters do not reproduce the shape");

    ParallelogramParams swapped = params_from_pgram(RationalParallelogram(rec.u1, rec.u2, rec.u4, rec.u3));
    if (swapped.m != params.n || swapped.n != params.m || swapped.u != params.u)
      note("diagonal swap does not exchange m and n");

    SinCos sc = cos_sin_phi(hp.shape());
    if (sc.sin * rec.u1 * rec.u2 != rec.area) note("area differs from u1 u2 sin(phi)");

    PgramClassification cls = classify(hp);
    if (cls != rec.classification) note("stored classification differs");
    if (area_from_params(params, cls.lambda) != rec.area) note("area formula disagrees with the area");

    const Rational one(1);
    if (cls.family == PgramFamily::type_i) {
      if (!(*cls.sigma > Rational(0) && *cls.sigma < one)) note("type I sigma outside (0, 1)");
      // Rectangles (m = n) have lambda = 1 = m/n but sit off the m^2+mn+n^2=1 curve.
      if (params.m != params.n) {
        LambdaSolution sol = type1_from_sigma(*cls.sigma);
        if (sol.m != params.m || sol.n != params.n || sol.lambda != cls.lambda)
          note("type I sigma does not reproduce (m, n, lambda)");
      }
    } else if (cls.family == PgramFamily::type_ii) {
      if (!(*cls.sigma > Rational(1, 2) && *cls.sigma < one)) note("type II sigma outside (1/2, 1)");
      LambdaSolution sol = type2_from_sigma(*cls.sigma);
      if (sol.m != params.m || sol.n != params.n || sol.lambda != cls.lambda)
        note("type II sigma does not reproduce (m, n, lambda)");
    }

    MedianTriangle mt = median_triangle(hp);
    auto half = area_heron(rec.u1, rec.u2, rec.u3);
    if (!half || *half != mt.triangle.area()) note("median triangle area differs from Heron's formula");
  } catch (const Error& e) {
    note(e.what());
  }
  if (!rec.round_trip_ok) note("round trip flagged as failed");
  if (problems.empty()) return problems;
  return pgram_label(rec.u1, rec.u2, rec.u3, rec.u4) + " A=" + rec.area.to_string() + ": " + problems;
}

}  // namespace

FamilyTally EnumerationReport::tally() const {
  FamilyTally t;
  for (const auto& rec : pgrams) {
    switch (rec.classification.family) {
      case PgramFamily::type_i: ++t.type_i; break;
      case PgramFamily::type_ii: ++t.type_ii; break;
      case PgramFamily::other: ++t.other; break;
    }
  }
  return t;
}

EnumerationReport enumerate_heron_triangles(std::int64_t max_perimeter) {
  EnumerationReport report;
  report.kind = ScanKind::triangles;
  report.bound = max_perimeter;
  for (std::int64_t c = 1; 3 * c <= max_perimeter; ++c) {
    for (std::int64_t b = c; c + 2 * b <= max_perimeter; ++b) {
      // a >= b and a < b + c; perimeter a + b + c <= max_perimeter.
      for (std::int64_t a = b; a < b + c && a + b + c <= max_perimeter; ++a) {
        mpz_class product = mpz_class(a + b + c) * mpz_class(b + c - a) * mpz_class(a - b + c) *
                            mpz_class(a + b - c);
        auto root = integer_root(product);
        if (!root) continue;
        TriangleRecord rec{Rational(a), Rational(b), Rational(c), Rational(*root, mpz_class(4)), {}, {}, false};
        try {
          HeronTriangle t(rec.u1, rec.u2, rec.u3, rec.area);
          rec.params = params_from_triangle(t);
          rec.generators = angle_generators(t);
          std::string why;
          rec.round_trip_ok = all_labelings_round_trip(rec.u1, rec.u2, rec.u3, rec.area, why);
          if (!rec.round_trip_ok) report.anomalies.push_back(triangle_label(rec.u1, rec.u2, rec.u3) + ": " + why);
        } catch (const Error& e) {
          report.anomalies.push_back(triangle_label(rec.u1, rec.u2, rec.u3) + ": " + e.what());
        }
        report.triangles.push_back(std::move(rec));
      }
    }
  }
  std::sort(report.triangles.begin(), report.triangles.end(), [](const auto& x, const auto& y) {
    return std::tuple(x.u1 + x.u2 + x.u3, x.u1, x.u2, x.u3) < std::tuple(y.u1 + y.u2 + y.u3, y.u1, y.u2, y.u3);
  });
  return report;
}

EnumerationReport enumerate_heron_pgrams(std::int64_t max_side) {
  EnumerationReport report;
  report.kind = ScanKind::pgrams;
  report.bound = max_side;
  for (std::int64_t a = 1; a <= max_side; ++a) {
    for (std::int64_t b = 1; b <= max_side; ++b) {
      for (std::int64_t d3 = 1; d3 <= max_side; ++d3) {
        const std::int64_t d4_squared = 2 * (a * a + b * b) - d3 * d3;
        if (d4_squared < d3 * d3) continue;  // also rejects d4^2 <= 0
        auto d4_root = integer_root(mpz_class(d4_squared));
        if (!d4_root) continue;
        const std::int64_t d4 = d4_root->get_si();
        if (d4 > max_side) continue;
        const std::int64_t gap = d4_squared - d3 * d3;
        if (gap >= 4 * a * b) continue;
        // (4A)^2 = 16 a^2 b^2 - (d4^2 - d3^2)^2
        mpz_class four_area_squared = mpz_class(4 * a * b) * mpz_class(4 * a * b) - mpz_class(gap) * mpz_class(gap);
        auto four_area = integer_root(four_area_squared);
        if (!four_area) continue;

        PgramRecord rec{Rational(a), Rational(b), Rational(d3), Rational(d4),
                        Rational(*four_area, mpz_class(4)), {}, {PgramFamily::other, std::nullopt, {}, {}, {}}, false};
        try {
          RationalParallelogram shape(rec.u1, rec.u2, rec.u3, rec.u4);
          HeronParallelogram hp(shape, rec.area);
          rec.params = params_from_pgram(shape);
          rec.classification = classify(hp);
          rec.round_trip_ok = pgram_from_params(rec.params) == shape;
          if (!rec.round_trip_ok)
            report.anomalies.push_back(pgram_label(rec.u1, rec.u2, rec.u3, rec.u4) + ": round trip failed");
        } catch (const Error& e) {
          report.anomalies.push_back(pgram_label(rec.u1, rec.u2, rec.u3, rec.u4) + ": " + e.what());
        }
        report.pgrams.push_back(std::move(rec));
      }
    }
  }
  // Loop order is already (u1, u2, u3); keep the sort explicit.
  std::sort(report.pgrams.begin(), report.pgrams.end(), [](const auto& x, const auto& y) {
    return std::tie(x.u1, x.u2, x.u3) < std::tie(y.u1, y.u2, y.u3);
  });
  return report;
}

CorpusVerdict verify_corpus(const EnumerationReport& report) {
  CorpusVerdict verdict;
  verdict.anomalies = report.anomalies;
  for (const auto& rec : report.triangles)
    if (auto problem = check_triangle(rec); !problem.empty()) verdict.anomalies.push_back(std::move(problem));
  for (const auto& rec : report.pgrams)
    if (auto problem = check_pgram(rec); !problem.empty()) verdict.anomalies.push_back(std::move(problem));
  verdict.ok = verdict.anomalies.empty();
  return verdict;
}

Record to_record(const TriangleRecord& rec) {
  Record r;
  r.add("kind", "triangle")
      .add("u1", rec.u1)
      .add("u2", rec.u2)
      .add("u3", rec.u3)
      .add("A", rec.area)
      .add("p", rec.params.p)
      .add("q", rec.params.q)
      .add("v", rec.params.v)
      .add("r", rec.generators.r)
      .add("roundtrip", rec.round_trip_ok ? "ok" : "fail");
  return r;
}

Record to_record(const PgramRecord& rec) {
  const auto& cls = rec.classification;
  Record r;
  r.add("kind", "pgram")
      .add("u1", rec.u1)
      .add("u2", rec.u2)
      .add("u3", rec.u3)
      .add("u4", rec.u4)
      .add("A", rec.area)
      .add("m", rec.params.m)
      .add("n", rec.params.n)
      .add("u", rec.params.u)
      .add("lambda", cls.lambda)
      .add("family", std::string(to_string(cls.family)))
      .add("sigma", cls.sigma ? cls.sigma->to_string() : "none")
      .add("roundtrip", rec.round_trip_ok ? "ok" : "fail");
  return r;
}

Record summary_record(const EnumerationReport& report) {
  Record r;
  r.add("kind", "summary")
      .add("scan", report.kind == ScanKind::triangles ? "triangles" : "pgrams")
      .add("bound", std::to_string(report.bound))
      .add("count", std::to_string(report.count()));
  if (report.kind == ScanKind::pgrams) {
    FamilyTally t = report.tally();
    r.add("typeI", std::to_string(t.type_i))
        .add("typeII", std::to_string(t.type_ii))
        .add("other", std::to_string(t.other));
  }
  r.add("anomalies", std::to_string(report.anomalies.size()));
  return r;
}

void write_report(std::ostream& os, const EnumerationReport& report) {
  for (const auto& rec : report.triangles) os << to_record(rec).to_line() << '\n';
  for (const auto& rec : report.pgrams) os << to_record(rec).to_line() << '\n';
  for (const auto& a : report.anomalies) os << Record().add("kind", "anomaly").add("detail", a).to_line() << '\n';
  os << summary_record(report).to_line() << '\n';
}

namespace {

PgramFamily parse_family(const std::string& text) {
  if (text == "I") return PgramFamily::type_i;
  if (text == "II") return PgramFamily::type_ii;
  if (text == "other") return PgramFamily::other;
  fail(ErrorCode::parse, "unknown family '" + text + "'");
}

bool parse_flag(const Record& r) {
  auto v = r.get("roundtrip");
  if (v == "ok") return true;
  if (v == "fail") return false;
  fail(ErrorCode::parse, "roundtrip must be ok or fail");
}

std::int64_t parse_count(const Record& r, std::string_view key) {
  Rational value = r.rational(key);
  if (!value.is_integer() || !value.numerator().fits_slong_p())
    fail(ErrorCode::parse, "field '" + std::string(key) + "' is not an integer");
  return value.numerator().get_si();
}

}  // namespace

EnumerationReport read_report(std::istream& is) {
  EnumerationReport report;
  bool have_summary = false;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (have_summary) fail(ErrorCode::parse, "record after summary");
    Record r = Record::parse_line(line);
    auto kind = r.get("kind");
    if (kind == "triangle") {
      TriangleRecord rec{r.rational("u1"), r.rational("u2"), r.rational("u3"), r.rational("A"),
                         {r.rational("p"), r.rational("q"), r.rational("v")},
                         {r.rational("r"), r.rational("q"), r.rational("p")},
                         parse_flag(r)};
      report.triangles.push_back(std::move(rec));
    } else if (kind == "pgram") {
      auto sigma_text = r.get("sigma");
      std::optional<Rational> sigma;
      if (sigma_text && *sigma_text != "none") sigma = Rational::parse(*sigma_text);
      PgramRecord rec{r.rational("u1"), r.rational("u2"), r.rational("u3"), r.rational("u4"), r.rational("A"),
                      {r.rational("m"), r.rational("n"), r.rational("u")},
                      {parse_family(r.get("family").value_or("")), sigma, r.rational("lambda"), r.rational("m"),
                       r.rational("n")},
                      parse_flag(r)};
      report.pgrams.push_back(std::move(rec));
    } else if (kind == "anomaly") {
      report.anomalies.push_back(r.get("detail").value_or(""));
    } else if (kind == "summary") {
      auto scan = r.get("scan");
      if (scan == "triangles") report.kind = ScanKind::triangles;
      else if (scan == "pgrams") report.kind = ScanKind::pgrams;
      else fail(ErrorCode::parse, "unknown scan kind");
      report.bound = parse_count(r, "bound");
      if (parse_count(r, "count") != static_cast<std::int64_t>(report.count()) ||
          (report.kind == ScanKind::triangles ? !report.pgrams.empty() : !report.triangles.empty()))
        fail(ErrorCode::parse, "summary does not match the records");
      have_summary = true;
    } else {
      fail(ErrorCode::parse, "unknown record kind in: " + line);
    }
  }
  if (!have_summary) fail(ErrorCode::parse, "report has no summary record");
  return report;
}

}  // namespace heron
