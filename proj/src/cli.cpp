#include "cwidth/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cwidth/checks2d.hpp"
#include "cwidth/figures.hpp"
#include "cwidth/optim2d.hpp"
#include "cwidth/reuleaux.hpp"
#include "cwidth/solid3d.hpp"

namespace cwidth {

namespace {

// Raised for unusable output paths; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_output(const std::string& path) {
  if (path.empty()) return;
  const auto parent = std::filesystem::path(path).parent_path();
  if (!parent.empty() && !std::filesystem::is_directory(parent))
    throw UsageError("output directory does not exist: " + parent.string());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open output file: " + path);
  f << content;
}

std::vector<double> parse_angles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != tok.size()) throw UsageError("bad angle value: '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no angles given");
  return out;
}

int finish_report(const VerificationReport& r, const std::string& json, std::ostream& out) {
  out << r.to_text();
  if (!json.empty()) write_file(json, r.to_json());
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constant-width geometry toolkit", "cwidth"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string json, csv, svg, obj, angles, kind = "vertex", shape = "R", figure_name;
  int quality = 40, n_grid = 720, starts = 16, n = 5;
  bool symmetric = false, serial = false;

  auto* v2 = app.add_subcommand("verify2d", "Run the planar identity and bound checks");
  v2->add_option("--seed", seed, "Random seed");
  v2->add_option("--json", json, "Write the report as JSON");

  auto* v3 = app.add_subcommand("verify3d", "Run the Meissner and polyhedron checks");
  v3->add_option("--quality", quality, "Mesh quality (>= 20)")->check(CLI::Range(20, 400));
  v3->add_option("--json", json, "Write the report as JSON");

  auto* o2 = app.add_subcommand("optimize2d", "Maximize Per/2 - A over the annulus");
  o2->add_option("--n-grid", n_grid, "Grid size (multiple of 4)");
  o2->add_option("--starts", starts, "Random starts")->check(CLI::NonNegativeNumber);
  o2->add_option("--seed", seed, "Random seed");
  o2->add_option("--csv", csv, "Write the ascent trace as CSV");
  o2->add_option("--svg", svg, "Draw the best body");
  o2->add_flag("--symmetric", symmetric, "Impose central symmetry");
  o2->add_flag("--serial", serial, "Run the starts one after another");

  auto* oa = app.add_subcommand("optimize-angles", "Minimize Reuleaux polygon area over angle vectors");
  oa->add_option("--n", n, "Number of arcs (odd)")->check(CLI::Range(3, 99));
  oa->add_option("--starts", starts, "Random starts")->check(CLI::PositiveNumber);
  oa->add_option("--seed", seed, "Random seed");
  oa->add_option("--json", json, "Write the result as JSON");

  auto* re = app.add_subcommand("reuleaux", "Build a Reuleaux polygon from its arc angles");
  re->add_option("--angles", angles, "Comma-separated arc angles in radians")->required();
  re->add_option("--svg", svg, "Draw the polygon");
  re->add_option("--csv", csv, "Write the piece table");

  auto* mm = app.add_subcommand("mesh-meissner", "Mesh a Meissner body");
  mm->add_option("--kind", kind, "vertex or face")->check(CLI::IsMember({"vertex", "face"}));
  mm->add_option("--quality", quality, "Mesh quality")->check(CLI::Range(1, 400));
  mm->add_option("--obj", obj, "Write the mesh as OBJ");

  auto* fg = app.add_subcommand("figure", "Emit an SVG figure");
  fg->add_option("name", figure_name, "minkowski, skeleton or annulus")
      ->required()
      ->check(CLI::IsMember({"minkowski", "skeleton", "annulus"}));
  fg->add_option("--shape", shape, "R, T or H")->check(CLI::IsMember({"R", "T", "H"}));
  fg->add_option("--angles", angles, "Arc angles for the skeleton figure");
  fg->add_option("--seed", seed, "Seed for a random skeleton figure when no angles are given");
  fg->add_option("--svg", svg, "Output SVG")->required();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    for (const auto& p : {json, csv, svg, obj}) check_output(p);

    if (v2->parsed()) {
      VerificationReport r("verify2d");
      try {
        r = verify2d_suite(seed);
      } catch (const Error& e) {
        err << e.what() << "\n";
        r.add_flag("suite.completed", false);
        finish_report(r, json, out);
        return 1;
      }
      return finish_report(r, json, out);
    }

    if (v3->parsed()) {
      VerificationReport r("verify3d");
      try {
        r = verify3d_suite(quality);
      } catch (const Error& e) {
        err << e.what() << "\n";
        r.add_flag("suite.completed", false);
        finish_report(r, json, out);
        return 1;
      }
      return finish_report(r, json, out);
    }

    if (o2->parsed()) {
      RelaxedOptions opt;
      opt.n = n_grid;
      opt.starts = starts;
      opt.seed = seed;
      opt.symmetric = symmetric;
      opt.parallel = !serial;
      const RelaxedResult res = optimize_relaxed(opt);
      out << "value " << fmt10(res.value) << "\n";
      out << "best_start " << res.best_start << "\n";
      out << "target " << fmt10(std::sqrt(3.0) / 2.0) << "\n";
      if (!csv.empty()) {
        std::string s = "start,iter,objective,step\n";
        for (const TraceRow& t : res.trace)
          s += std::to_string(t.start) + "," + std::to_string(t.iter) + "," + fmt10(t.objective) + "," +
               fmt10(t.step) + "\n";
        write_file(csv, s);
      }
      if (!svg.empty()) write_file(svg, support_vector_svg(res.best));
      return 0;
    }

    if (oa->parsed()) {
      const AnglesResult res = optimize_angles(n, starts, seed);
      std::string list;
      for (double a : res.spec.angles) list += (list.empty() ? "" : ",") + fmt10(a);
      out << "angles " << list << "\n";
      out << "area " << fmt10(res.area) << "\n";
      out << "skeleton_area " << fmt10(area(skeleton(build_reuleaux(res.spec)))) << "\n";
      if (!json.empty()) {
        std::string s = "{\"n\": " + std::to_string(n) + ", \"angles\": [";
        for (std::size_t i = 0; i < res.spec.angles.size(); ++i) s += (i ? ", " : "") + fmt10(res.spec.angles[i]);
        s += "], \"area\": " + fmt10(res.area) + "}\n";
        write_file(json, s);
      }
      return 0;
    }

    if (re->parsed()) {
      const ArcBody p = build_reuleaux({parse_angles(angles)});
      out << "area " << fmt10(area(p)) << "\n";
      out << "perimeter " << fmt10(perimeter(p)) << "\n";
      if (!svg.empty()) write_file(svg, body_svg(p));
      if (!csv.empty()) write_file(csv, piece_table_csv(p));
      return 0;
    }

    if (mm->parsed()) {
      const MeissnerKind k = kind == "face" ? MeissnerKind::FaceSmoothed : MeissnerKind::VertexSmoothed;
      const TriMesh m = meissner(k, quality);
      out << "vertices " << m.vertices.size() << "\n";
      out << "faces " << m.faces.size() << "\n";
      out << "volume " << fmt10(volume(m)) << "\n";
      out << "area " << fmt10(area(m)) << "\n";
      out << "mean_width " << fmt10(mean_width(m)) << "\n";
      if (!obj.empty()) {
        std::ostringstream s;
        write_obj(m, s);
        write_file(obj, s.str());
      }
      return 0;
    }

    if (fg->parsed()) {
      std::string s;
      if (figure_name == "minkowski") {
        s = figure_minkowski(shape[0]);
      } else if (figure_name == "skeleton") {
        s = figure_skeleton(angles.empty() ? random_spec(7, seed) : ReuleauxSpec{parse_angles(angles)});
      } else {
        s = figure_annulus(figure_shape(shape[0]));
      }
      write_file(svg, s);
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidParameter ? 2 : 1;
  }
  return 2;
}

}  // namespace cwidth
