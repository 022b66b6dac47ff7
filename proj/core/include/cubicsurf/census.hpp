#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicsurf/acm.hpp"
#include "cubicsurf/catalog.hpp"
#include "cubicsurf/divisor.hpp"

namespace cubicsurf {

/// Number of classes of `kind` at each intersection value against `fixed`
/// (which must be a line, conic or cubic).  W-invariance makes the result
/// independent of the representative.
std::map<long long, long long> intersection_distribution(const DivisorClass& fixed, Family kind);

/// Same, split into the named-class buckets of the appendix tables; the
/// bucket key carries the relation to index 1 when `fixed` is L_1 or C_1
/// (e.g. "T_i^j:sup1").  Only meaningful for the standard representatives
/// b1, l-b1, l.
std::map<long long, std::map<std::string, long long>> intersection_distribution_detailed(
    const DivisorClass& fixed, Family kind);

struct MapReport {
  std::string id;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  long long fiber = 0;  // common fiber cardinality when constant, else -1
  bool constant_fiber = false;
  bool surjective = false;
  std::string detail;  // offending element on failure
};

/// The twelve finite combinatorial maps; expected fiber sizes
/// 16,16,10,10,6,5,1 and 10,4,16,5,5 in registration order (the last one is
/// published as 8:1; see published_discrepancies()).
const std::vector<std::string>& registered_map_ids();
long long expected_fiber(const std::string& map_id);
MapReport fiber_check(const std::string& map_id);

struct FamilyExtensionRow {
  const SummaryExtensionRow* row = nullptr;
  long long computed_ordered = 0;  // ordered (M,N) pairs per family, recomputed
};

struct FamilyRecord {
  std::string type_label;
  std::string c1_pattern;
  long long c2 = 0;
  long long family_count = 0;    // number of admissible c1 values, recomputed
  long long family_dim = 0;      // published dimension of the stable stratum
  long long expected_dim = 0;    // 4 c2 - c1^2 - 3
  bool dim_formula_applies = true;  // false only for the strictly semistable G row
  std::string stability;         // published stability summary for the type
  std::vector<FamilyExtensionRow> extensions;
};

/// The twelve families with recomputed counts and their extension rows.
std::vector<FamilyRecord> family_census();

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;  // counterexample / mismatch description
  std::string note;    // informational (known published-table discrepancies)
};

struct Report {
  std::vector<CheckResult> checks;  // sorted by id
  int failures() const;
  const CheckResult* find(const std::string& id) const;
};

struct VerifyOptions {
  IntersectionForm form = IntersectionForm::standard();
  std::optional<std::string> only_check;  // run a single check by id
};

/// Every table check of the project: appendix tables, the degree<=3
/// cohomology table, the extension boxes, resolution/Chern tables, the
/// census, group order, orbit sizes, the aCM catalog.  Failures are report
/// content, never exceptions.
Report verify_all(const VerifyOptions& options = {});

/// Places where the published tables disagree with what exact recomputation
/// gives.  Each check that touches one of these passes against the computed
/// value and carries the discrepancy as a note.
struct PublishedDiscrepancy {
  std::string id;
  std::string printed;
  std::string computed;
  std::string note;
};
const std::vector<PublishedDiscrepancy>& published_discrepancies();

}  // namespace cubicsurf
