#include "latgeo/search.hpp"

#include "latgeo/generators.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <set>

namespace latgeo {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of(const Int& n) {
  // Desk-scale values fit comfortably; fall back to a string if one ever
  // does not.
  if (n >= std::numeric_limits<long long>::min() &&
      n <= std::numeric_limits<long long>::max()) {
    return ordered_json(n.convert_to<long long>());
  }
  return ordered_json(n.str());
}

ordered_json json_of(const IntVec& v) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(json_of(v(i)));
  return arr;
}

std::string dedup_key(Eigen::Index ambient, const std::vector<IntVec>& verts) {
  std::string key = std::to_string(ambient) + ";";
  for (const IntVec& v : verts) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      key += v(i).str();
      key += ',';
    }
    key += ';';
  }
  return key;
}

LatticePolytope draw_candidate(const std::string& stream, std::int64_t i,
                               const SearchConfig& config) {
  if (stream == "random") {
    return random_polygon(config.seed + static_cast<std::uint64_t>(i),
                          config.random_bound, config.random_points);
  }
  if (stream == "cube") return cube(1 + static_cast<int>(i % 3));
  if (stream == "simplex") return standard_simplex(1 + static_cast<int>(i % 3));
  if (stream == "dilated-simplex") {
    return dilate(standard_simplex(1 + static_cast<int>(i % 3)),
                  Int(2 + (i / 3) % 2));
  }
  if (stream == "reeve") return reeve(Int(2 + i % 3));
  throw parse_error("unknown search stream '" + stream + "'");
}

}  // namespace

std::vector<IntVec> canonical_vertices(const LatticePolytope& p) {
  const IntVec& v0 = p.vertices().front();
  std::vector<IntVec> out;
  out.reserve(p.vertices().size());
  for (const IntVec& v : p.vertices()) out.push_back(v - v0);
  return out;  // translation preserves lex order
}

std::string record_to_json_line(const CandidateRecord& r) {
  ordered_json j;
  j["source"] = r.source;
  j["ambient_dim"] = static_cast<long long>(r.ambient_dim);
  ordered_json verts = ordered_json::array();
  for (const IntVec& v : r.vertices) verts.push_back(json_of(v));
  j["vertices"] = verts;
  j["smooth"] = r.smooth;
  if (r.idp) {
    ordered_json idp;
    idp["holds"] = r.idp->holds;
    idp["checked_up_to"] = json_of(r.idp->checked_up_to);
    idp["used_default_bound"] = r.idp->used_default_bound;
    if (r.idp->witness) {
      ordered_json w;
      w["point"] = json_of(r.idp->witness->point);
      w["height"] = json_of(r.idp->witness->height);
      idp["witness"] = w;
    } else {
      idp["witness"] = nullptr;
    }
    j["idp"] = idp;
  } else {
    j["idp"] = nullptr;
  }
  return j.dump();
}

SearchSummary oda_search(const SearchConfig& config) {
  if (config.limit < 0) {
    throw std::invalid_argument("oda_search: limit must be >= 0");
  }
  if (config.streams.empty()) {
    throw std::invalid_argument("oda_search: no streams configured");
  }
  std::ofstream out(config.results_path, std::ios::trunc);
  if (!out) {
    throw io_error("cannot write results file '" + config.results_path + "'");
  }

  SearchSummary summary;
  std::set<std::string> seen;
  std::vector<std::int64_t> per_stream(config.streams.size(), 0);
  for (std::int64_t n = 0; n < config.limit; ++n) {
    const std::size_t s = static_cast<std::size_t>(n) % config.streams.size();
    LatticePolytope p = draw_candidate(config.streams[s], per_stream[s]++, config);
    ++summary.drawn;

    CandidateRecord rec;
    rec.vertices = canonical_vertices(p);
    rec.ambient_dim = p.ambient_dim();
    std::string key = dedup_key(rec.ambient_dim, rec.vertices);
    if (!seen.insert(key).second) continue;  // duplicate draw

    rec.source = p.label();
    rec.smooth = is_smooth(p).smooth;
    if (rec.smooth) {
      ++summary.smooth_count;
      rec.idp = idp_check(p, config.idp_height);
      if (!rec.idp->holds) summary.counterexamples.push_back(rec);
    }
    out << record_to_json_line(rec) << "\n";
    out.flush();
    if (!out) {
      throw io_error("write failed on results file '" + config.results_path + "'");
    }
    summary.records.push_back(std::move(rec));
  }
  summary.unique = static_cast<std::int64_t>(summary.records.size());
  return summary;
}

}  // namespace latgeo
