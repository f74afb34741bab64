#pragma once

/**
 * @file enumeration.hpp
 * @brief Brute-force census of integer Heron triangles and parallelograms.
 *
 * The scans decide Heron-ness with integer arithmetic and sqrt_exact only;
 * the parametrizations are exercised afterwards, on what the scan found, so
 * a scan result is an independent witness against which the bijections and
 * the classification are certified.
 *
 * Reports serialize as one record per instance followed by a summary
 * record (see record.hpp):
 *
 *     kind=triangle u1=5 u2=4 u3=3 A=6 p=... q=... v=... r=... roundtrip=ok
 *     kind=pgram u1=... u4=... A=... m=... n=... u=... lambda=... family=I sigma=... roundtrip=ok
 *     kind=summary scan=triangles bound=12 count=1 anomalies=0
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "heron/parallelogram.hpp"
#include "heron/rational.hpp"
#include "heron/record.hpp"
#include "heron/triangle.hpp"

namespace heron {

enum class ScanKind { triangles, pgrams };

/// Canonical (u1 >= u2 >= u3) integer Heron triangle with its parameters.
struct TriangleRecord {
  Rational u1, u2, u3, area;
  TriangleParams params;
  AngleGenerators generators;
  bool round_trip_ok = false;
};

/// Integer Heron parallelogram with u3 <= u4.
struct PgramRecord {
  Rational u1, u2, u3, u4, area;
  ParallelogramParams params;
  PgramClassification classification;
  bool round_trip_ok = false;
};

struct FamilyTally {
  std::size_t type_i = 0;
  std::size_t type_ii = 0;
  std::size_t other = 0;
};

struct EnumerationReport {
  ScanKind kind = ScanKind::triangles;
  std::int64_t bound = 0;  // max perimeter or max side
  std::vector<TriangleRecord> triangles;
  std::vector<PgramRecord> pgrams;
  std::vector<std::string> anomalies;

  std::size_t count() const noexcept {
    return kind == ScanKind::triangles ? triangles.size() : pgrams.size();
  }
  FamilyTally tally() const;
};

struct CorpusVerdict {
  bool ok = true;
  std::vector<std::string> anomalies;

  explicit operator bool() const noexcept { return ok; }
};

/// All integer triangles u1 >= u2 >= u3 >= 1 with perimeter <= max_perimeter
/// and rational area, sorted by (perimeter, u1, u2, u3). Each one is round
/// tripped through the bijection under all six labelings.
EnumerationReport enumerate_heron_triangles(std::int64_t max_perimeter);

/// All integer Heron parallelograms with u1, u2, u3, u4 <= max_side and
/// u3 <= u4, sorted by (u1, u2, u3). Both side orders are kept as distinct
/// labeled instances.
EnumerationReport enumerate_heron_pgrams(std::int64_t max_side);

/// Re-checks every record from its stored exact values: round trips,
/// parallelogram law, area identities, the generator identity
/// pq + qr + rp = 1 and the stored classification. One anomaly per bad record.
CorpusVerdict verify_corpus(const EnumerationReport& report);

Record to_record(const TriangleRecord& rec);
Record to_record(const PgramRecord& rec);
Record summary_record(const EnumerationReport& report);

void write_report(std::ostream& os, const EnumerationReport& report);
/// Throws Error(parse) on malformed lines or a missing summary.
EnumerationReport read_report(std::istream& is);

}  // namespace heron
