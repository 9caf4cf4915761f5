#pragma once

// Search harness around the open question "is every smooth lattice polytope
// IDP?": draw candidates from deterministic streams, run is_smooth, run
// idp_check on the smooth ones, and persist every distinct candidate as one
// JSON line. A smooth candidate failing the bounded IDP check is collected
// as a counterexample candidate for further scrutiny, never asserted away.

#include "latgeo/cone.hpp"
#include "latgeo/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace latgeo {

struct CandidateRecord {
  std::vector<IntVec> vertices;  // canonical: lex-min vertex at the origin
  Eigen::Index ambient_dim = 0;
  std::string source;  // stream label, e.g. "reeve(3)" or "random(17)"
  bool smooth = false;
  std::optional<IdpReport> idp;  // present iff smooth
};

// Canonical form used for deduplication: translate so the lex-smallest
// vertex is the origin; vertices stay lex-sorted.
std::vector<IntVec> canonical_vertices(const LatticePolytope& p);

std::string record_to_json_line(const CandidateRecord& r);

struct SearchConfig {
  std::uint64_t seed = 0;
  std::int64_t limit = 100;               // candidates drawn
  std::optional<Int> idp_height;          // per-candidate default when empty
  std::string results_path = "oda-results.jsonl";
  int random_bound = 8;
  int random_points = 10;
  // Draws rotate round-robin over these streams; each stream is
  // deterministic in its own index.
  std::vector<std::string> streams = {"random", "cube", "simplex",
                                      "dilated-simplex", "reeve"};
};

struct SearchSummary {
  std::int64_t drawn = 0;
  std::int64_t unique = 0;
  std::int64_t smooth_count = 0;
  std::vector<CandidateRecord> records;          // unique candidates, draw order
  std::vector<CandidateRecord> counterexamples;  // smooth but bounded-IDP failed
};

// Runs the harness and appends one JSON line per distinct candidate to
// config.results_path (truncating any previous file). io_error when the
// results file cannot be written.
SearchSummary oda_search(const SearchConfig& config);

}  // namespace latgeo
