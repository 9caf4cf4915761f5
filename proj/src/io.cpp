#include "latgeo/io.hpp"

#include "latgeo/generators.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace latgeo {

namespace {

bool parse_int(const std::string& tok, Int& out) {
  if (tok.empty()) return false;
  std::size_t i = tok[0] == '-' ? 1 : 0;
  if (i == tok.size()) return false;
  for (; i < tok.size(); ++i) {
    if (tok[i] < '0' || tok[i] > '9') return false;
  }
  out = Int(tok);
  return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> toks;
  std::string t;
  while (ss >> t) toks.push_back(t);
  return toks;
}

}  // namespace

LatticePolytope parse_polytope_text(std::istream& in, std::string label) {
  std::string line;
  bool have_dim = false;
  Eigen::Index d = 0;
  std::vector<IntVec> pts;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::vector<std::string> toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_dim) {
      Int dv;
      if (toks.size() != 2 || toks[0] != "dim" || !parse_int(toks[1], dv) ||
          dv < 1 || dv > 64) {
        throw parse_error("line " + std::to_string(lineno) +
                          ": expected header 'dim <d>'");
      }
      d = dv.convert_to<Eigen::Index>();
      have_dim = true;
      continue;
    }
    if (static_cast<Eigen::Index>(toks.size()) != d) {
      throw parse_error("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(d) + " coordinates, got " +
                        std::to_string(toks.size()));
    }
    IntVec v(d);
    for (Eigen::Index j = 0; j < d; ++j) {
      if (!parse_int(toks[static_cast<std::size_t>(j)], v(j))) {
        throw parse_error("line " + std::to_string(lineno) +
                          ": bad integer '" + toks[static_cast<std::size_t>(j)] + "'");
      }
    }
    pts.push_back(std::move(v));
  }
  if (!have_dim) throw parse_error("missing 'dim <d>' header");
  if (pts.empty()) throw parse_error("no points after the header");
  return convex_hull(pts, std::move(label));
}

LatticePolytope load_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open '" + path + "'");
  return parse_polytope_text(in, path);
}

std::string format_polytope_text(const LatticePolytope& p) {
  std::ostringstream out;
  out << "dim " << p.ambient_dim() << "\n";
  for (const IntVec& v : p.vertices()) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (j) out << " ";
      out << v(j).str();
    }
    out << "\n";
  }
  return out.str();
}

LatticePolytope generate_from_spec(const std::string& spec) {
  std::vector<std::string> toks = tokens_of(spec);
  if (toks.empty()) throw parse_error("empty generator spec");
  const std::string& name = toks[0];
  auto arg = [&](std::size_t i) {
    Int v;
    if (i >= toks.size() || !parse_int(toks[i], v)) {
      throw parse_error("generator '" + name + "': bad or missing argument");
    }
    return v;
  };
  auto expect_args = [&](std::size_t lo, std::size_t hi) {
    if (toks.size() - 1 < lo || toks.size() - 1 > hi) {
      throw parse_error("generator '" + name + "': wrong number of arguments");
    }
  };
  if (name == "triangle") {
    expect_args(0, 0);
    return monomial_triangle();
  }
  if (name == "simplex") {
    expect_args(1, 1);
    return standard_simplex(arg(1).convert_to<int>());
  }
  if (name == "cube") {
    expect_args(1, 1);
    return cube(arg(1).convert_to<int>());
  }
  if (name == "reeve") {
    expect_args(1, 1);
    return reeve(arg(1));
  }
  if (name == "random") {
    expect_args(1, 3);
    std::uint64_t seed = arg(1).convert_to<std::uint64_t>();
    int bound = toks.size() > 2 ? arg(2).convert_to<int>() : 8;
    int max_points = toks.size() > 3 ? arg(3).convert_to<int>() : 10;
    return random_polygon(seed, bound, max_points);
  }
  throw parse_error("unknown generator '" + name + "'");
}

}  // namespace latgeo
