#include "latgeo/cli.hpp"

#include "latgeo/cone.hpp"
#include "latgeo/ehrhart.hpp"
#include "latgeo/generators.hpp"
#include "latgeo/io.hpp"
#include "latgeo/polytope.hpp"
#include "latgeo/search.hpp"
#include "latgeo/triangulate2d.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace latgeo::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json json_of(const Int& n) {
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

// Rationals travel as exact strings so output is precision-free and
// byte-stable: "3/2", or "7" when integral.
ordered_json json_of(const Rat& r) { return ordered_json(to_string(r)); }

void emit(std::ostream& out, const ordered_json& j, bool text,
          const std::string& rendered) {
  if (text) {
    out << rendered;
  } else {
    out << j.dump() << "\n";
  }
}

struct InputOpts {
  std::string path;
  std::string gen;
  std::string format = "json";
};

void attach_input(CLI::App* sub, InputOpts& in) {
  sub->add_option("input", in.path,
                  "polytope file ('-' for stdin; see README for the format)");
  sub->add_option("--gen", in.gen, "generator spec, e.g. 'reeve 2'");
  sub->add_option("--format", in.format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
}

LatticePolytope load_input(const InputOpts& in) {
  if (!in.path.empty() && !in.gen.empty()) {
    throw parse_error("give an input file or --gen, not both");
  }
  if (!in.gen.empty()) return generate_from_spec(in.gen);
  if (in.path.empty()) {
    throw parse_error("no input: pass a polytope file, '-', or --gen '<spec>'");
  }
  if (in.path == "-") return parse_polytope_text(std::cin, "stdin");
  return load_polytope_file(in.path);
}

std::string render_vertices(const LatticePolytope& p) {
  std::ostringstream ss;
  for (const IntVec& v : p.vertices()) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      if (j) ss << " ";
      ss << v(j).str();
    }
    ss << "\n";
  }
  return ss.str();
}

ordered_json graded_point_json(const GradedPoint& g) {
  ordered_json j;
  j["point"] = json_of(g.point);
  j["height"] = json_of(g.height);
  return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"latgeo - exact lattice polytope toolkit"};
  app.require_subcommand(1);

  InputOpts hull_in;
  CLI::App* hull_cmd = app.add_subcommand("hull", "vertices and facet count of the hull");
  attach_input(hull_cmd, hull_in);

  InputOpts count_in;
  std::int64_t count_m = 1;
  CLI::App* count_cmd = app.add_subcommand("count", "lattice points of the m-th dilation");
  attach_input(count_cmd, count_in);
  count_cmd->add_option("--m", count_m, "dilation factor (default 1)");

  InputOpts ehr_in;
  CLI::App* ehr_cmd = app.add_subcommand("ehrhart", "counting polynomial coefficients");
  attach_input(ehr_cmd, ehr_in);

  InputOpts pick_in;
  CLI::App* pick_cmd = app.add_subcommand("pick", "Pick's identity check for polygons");
  attach_input(pick_cmd, pick_in);

  InputOpts idp_in;
  std::int64_t idp_max = -1;
  CLI::App* idp_cmd = app.add_subcommand("idp", "integer decomposition property check");
  attach_input(idp_cmd, idp_in);
  idp_cmd->add_option("--max-height", idp_max, "check heights 2..H (default max(2, dim-1))");

  InputOpts hil_in;
  std::int64_t hil_height = -1;
  CLI::App* hil_cmd = app.add_subcommand("hilbert", "desk-scale Hilbert basis of the cone");
  attach_input(hil_cmd, hil_in);
  hil_cmd->add_option("--height", hil_height, "height bound (default max(1, dim-1))");

  InputOpts smooth_in;
  CLI::App* smooth_cmd = app.add_subcommand("smooth", "smoothness check at every vertex");
  attach_input(smooth_cmd, smooth_in);

  InputOpts tri_in;
  std::string tri_svg;
  CLI::App* tri_cmd = app.add_subcommand("triangulate", "unimodular triangulation of a polygon");
  attach_input(tri_cmd, tri_in);
  tri_cmd->add_option("--svg", tri_svg, "also write an SVG drawing to this file");

  std::vector<std::string> gen_spec;
  std::string gen_out_path;
  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a named polytope in text format");
  gen_cmd->add_option("spec", gen_spec, "generator name and arguments")->required();
  gen_cmd->add_option("-o,--output", gen_out_path, "write to a file instead of stdout");

  SearchConfig search_cfg;
  std::int64_t search_idp_height = -1;
  std::string search_format = "json";
  CLI::App* search_cmd = app.add_subcommand("search", "smooth-implies-IDP search harness");
  search_cmd->add_option("--limit", search_cfg.limit, "candidates to draw (default 100)");
  search_cmd->add_option("--seed", search_cfg.seed, "stream seed (default 0)");
  search_cmd->add_option("--results", search_cfg.results_path,
                         "JSONL output path (default oda-results.jsonl)");
  search_cmd->add_option("--idp-height", search_idp_height,
                         "IDP bound per candidate (default max(2, dim-1))");
  search_cmd->add_option("--bound", search_cfg.random_bound,
                         "coordinate bound for random polygons (default 8)");
  search_cmd->add_option("--points", search_cfg.random_points,
                         "draws per random polygon (default 10)");
  search_cmd->add_option("--format", search_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (app.got_subcommand(hull_cmd)) {
      LatticePolytope p = load_input(hull_in);
      ordered_json j;
      j["ambient_dim"] = static_cast<long long>(p.ambient_dim());
      j["dim"] = static_cast<long long>(p.dim());
      ordered_json verts = ordered_json::array();
      for (const IntVec& v : p.vertices()) verts.push_back(json_of(v));
      j["vertices"] = verts;
      j["facets"] = p.full_dimensional()
                        ? ordered_json(static_cast<long long>(p.facets().size()))
                        : ordered_json(nullptr);
      std::ostringstream text;
      text << "ambient_dim " << p.ambient_dim() << "\ndim " << p.dim() << "\n"
           << render_vertices(p);
      emit(out, j, hull_in.format == "text", text.str());
    } else if (app.got_subcommand(count_cmd)) {
      if (count_m < 0) throw std::invalid_argument("count: --m must be >= 0");
      LatticePolytope p = load_input(count_in);
      Int n = count(p, Int(count_m));
      ordered_json j;
      j["m"] = static_cast<long long>(count_m);
      j["count"] = json_of(n);
      emit(out, j, count_in.format == "text",
           "count(" + std::to_string(count_m) + ") = " + n.str() + "\n");
    } else if (app.got_subcommand(ehr_cmd)) {
      LatticePolytope p = load_input(ehr_in);
      EhrhartPolynomial e = ehrhart_polynomial(p);
      ordered_json j;
      ordered_json coeffs = ordered_json::array();
      for (const Rat& c : e.poly.coefficients()) coeffs.push_back(json_of(c));
      j["coefficients"] = coeffs;
      std::ostringstream text;
      text << "coefficients (ascending):";
      for (const Rat& c : e.poly.coefficients()) text << " " << to_string(c);
      text << "\n";
      emit(out, j, ehr_in.format == "text", text.str());
    } else if (app.got_subcommand(pick_cmd)) {
      LatticePolytope p = load_input(pick_in);
      PickReport r = pick_check(p);
      ordered_json j;
      j["interior"] = r.interior;
      j["boundary"] = r.boundary;
      j["area"] = json_of(r.area);
      j["holds"] = r.holds;
      std::ostringstream text;
      text << "interior " << r.interior << ", boundary " << r.boundary
           << ", area " << to_string(r.area) << ", pick "
           << to_string(r.pick_value) << " -> "
           << (r.holds ? "holds" : "VIOLATED") << "\n";
      emit(out, j, pick_in.format == "text", text.str());
    } else if (app.got_subcommand(idp_cmd)) {
      LatticePolytope p = load_input(idp_in);
      std::optional<Int> bound;
      if (idp_max >= 0) bound = Int(idp_max);
      IdpReport r = idp_check(p, bound);
      ordered_json j;
      j["holds"] = r.holds;
      j["checked_up_to"] = json_of(r.checked_up_to);
      j["used_default_bound"] = r.used_default_bound;
      j["witness"] = r.witness ? graded_point_json(*r.witness)
                               : ordered_json(nullptr);
      std::ostringstream text;
      if (r.holds) {
        text << "IDP holds up to height " << r.checked_up_to.str() << "\n";
      } else {
        text << "IDP fails at height " << r.witness->height.str() << ": point";
        for (Eigen::Index i = 0; i < r.witness->point.size(); ++i) {
          text << " " << r.witness->point(i).str();
        }
        text << " has no height-1 summand\n";
      }
      emit(out, j, idp_in.format == "text", text.str());
    } else if (app.got_subcommand(hil_cmd)) {
      LatticePolytope p = load_input(hil_in);
      std::optional<Int> bound;
      if (hil_height >= 0) bound = Int(hil_height);
      HilbertBasis b = hilbert_basis(p, bound);
      ordered_json j;
      j["height_bound"] = json_of(b.height_bound);
      j["used_default_bound"] = b.used_default_bound;
      j["count"] = static_cast<long long>(b.generators.size());
      ordered_json gens = ordered_json::array();
      for (const GradedPoint& g : b.generators) gens.push_back(graded_point_json(g));
      j["generators"] = gens;
      std::ostringstream text;
      text << b.generators.size() << " generators up to height "
           << b.height_bound.str() << ":\n";
      for (const GradedPoint& g : b.generators) {
        text << "  height " << g.height.str() << ":";
        for (Eigen::Index i = 0; i < g.point.size(); ++i) {
          text << " " << g.point(i).str();
        }
        text << "\n";
      }
      emit(out, j, hil_in.format == "text", text.str());
    } else if (app.got_subcommand(smooth_cmd)) {
      LatticePolytope p = load_input(smooth_in);
      SmoothReport r = is_smooth(p);
      ordered_json j;
      j["smooth"] = r.smooth;
      ordered_json fails = ordered_json::array();
      for (const SmoothFailure& f : r.failures) {
        ordered_json fj;
        fj["vertex"] = json_of(f.vertex);
        if (!f.simple) {
          fj["reason"] = "non-simple";
          fj["edges"] = f.edge_count;
        } else {
          fj["reason"] = "non-unimodular";
          fj["det"] = json_of(f.det_abs);
        }
        fails.push_back(fj);
      }
      j["failures"] = fails;
      std::ostringstream text;
      text << (r.smooth ? "smooth" : "not smooth") << "\n";
      for (const SmoothFailure& f : r.failures) {
        text << "  vertex";
        for (Eigen::Index i = 0; i < f.vertex.size(); ++i) {
          text << " " << f.vertex(i).str();
        }
        if (!f.simple) {
          text << ": " << f.edge_count << " edges (not simple)\n";
        } else {
          text << ": |det| = " << f.det_abs.str() << "\n";
        }
      }
      emit(out, j, smooth_in.format == "text", text.str());
    } else if (app.got_subcommand(tri_cmd)) {
      LatticePolytope p = load_input(tri_in);
      Triangulation t = unimodular_triangulation(p);
      if (!tri_svg.empty()) {
        std::ofstream svg(tri_svg);
        if (!svg) throw io_error("cannot write SVG file '" + tri_svg + "'");
        write_svg(t, svg);
      }
      ordered_json j;
      j["triangles"] = static_cast<long long>(t.triangles.size());
      j["area"] = json_of(Rat(Int(t.triangles.size()), Int(2)));
      ordered_json cells = ordered_json::array();
      for (const Triangle2D& tr : t.triangles) {
        ordered_json cell = ordered_json::array();
        cell.push_back(json_of(tr.a()));
        cell.push_back(json_of(tr.b()));
        cell.push_back(json_of(tr.c()));
        cells.push_back(cell);
      }
      j["cells"] = cells;
      std::ostringstream text;
      text << t.triangles.size() << " unimodular triangles, area "
           << to_string(Rat(Int(t.triangles.size()), Int(2))) << "\n";
      emit(out, j, tri_in.format == "text", text.str());
    } else if (app.got_subcommand(gen_cmd)) {
      std::string spec;
      for (const std::string& t : gen_spec) {
        if (!spec.empty()) spec += " ";
        spec += t;
      }
      LatticePolytope p = generate_from_spec(spec);
      std::string body = format_polytope_text(p);
      if (gen_out_path.empty()) {
        out << body;
      } else {
        std::ofstream f(gen_out_path);
        if (!f) throw io_error("cannot write '" + gen_out_path + "'");
        f << body;
      }
    } else if (app.got_subcommand(search_cmd)) {
      if (search_idp_height >= 0) search_cfg.idp_height = Int(search_idp_height);
      SearchSummary s = oda_search(search_cfg);
      ordered_json j;
      j["drawn"] = s.drawn;
      j["unique"] = s.unique;
      j["smooth"] = s.smooth_count;
      j["counterexamples"] = ordered_json::array();
      for (const CandidateRecord& r : s.counterexamples) {
        j["counterexamples"].push_back(ordered_json::parse(record_to_json_line(r)));
      }
      j["results"] = search_cfg.results_path;
      std::ostringstream text;
      text << "drawn " << s.drawn << ", unique " << s.unique << ", smooth "
           << s.smooth_count << ", counterexamples " << s.counterexamples.size()
           << "; records in " << search_cfg.results_path << "\n";
      emit(out, j, search_format == "text", text.str());
    }
  } catch (const parse_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const io_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace latgeo::cli
