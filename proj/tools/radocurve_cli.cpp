#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "radocurve/curve_layout.hpp"
#include "radocurve/finite_embedder.hpp"
#include "radocurve/finite_graph.hpp"
#include "radocurve/multicurve.hpp"
#include "radocurve/rado_graph.hpp"
#include "radocurve/svg_render.hpp"
#include "radocurve/verification.hpp"

namespace {

using namespace radocurve;

Natural parse_natural(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("expected a non-negative decimal integer: '" +
                                text + "'");
  return Natural(text);
}

std::set<Natural> parse_natural_list(const std::string& text) {
  std::set<Natural> values;
  if (text.empty()) return values;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) values.insert(parse_natural(item));
  return values;
}

Polarity parse_polarity(const std::string& text) {
  if (text == "direct") return Polarity::Direct;
  if (text == "complement") return Polarity::Complement;
  throw std::invalid_argument("polarity must be 'direct' or 'complement'");
}

std::string describe_layout(const CurvePath& p) {
  std::ostringstream out;
  out << "c(" << p.label << "): " << p.segments.size() << " segments, depth "
      << depth(p.label) << "\n";
  for (const Segment& s : p.segments) {
    if (const auto* loop = std::get_if<HoleLoop>(&s)) {
      out << "  loop " << (loop->family == Family::A ? 'a' : 'b')
          << loop->column << "\n";
    } else if (const auto* run = std::get_if<VerticalRun>(&s)) {
      out << "  run col " << run->column << " rows 0.." << run->to_row << "\n";
    } else if (const auto* arc = std::get_if<BackArc>(&s)) {
      out << "  arc row " << arc->row << " cols " << arc->from_column << ".."
          << arc->to_column << " stratum " << arc->stratum << "\n";
    }
  }
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int run(int argc, char** argv) {
  CLI::App app{"Rado graph, multicurves, and routed curves on the infinite-genus lattice surface"};
  app.require_subcommand(1);

  std::string x_arg, y_arg, polarity_arg = "direct", level_arg = "bracket";
  std::string nbrs_arg, non_arg, out_path, report_path, input_path;
  std::vector<std::string> label_args;
  std::uint64_t max_n = 0;
  int jobs = 1;

  auto* adj = app.add_subcommand("adj", "Rado adjacency of two vertices");
  adj->add_option("x", x_arg)->required();
  adj->add_option("y", y_arg)->required();
  adj->add_option("--polarity", polarity_arg, "direct|complement");

  auto* witness = app.add_subcommand("witness", "extension-property witness vertex");
  witness->add_option("--nbrs", nbrs_arg, "comma-separated required neighbors");
  witness->add_option("--non", non_arg, "comma-separated forbidden neighbors");
  witness->add_option("--polarity", polarity_arg, "direct|complement");

  auto* bracket_cmd = app.add_subcommand("bracket", "the multicurve [x]");
  bracket_cmd->add_option("x", x_arg)->required();

  auto* intersect = app.add_subcommand("intersect", "intersection number of [x],[y] or c(x),c(y)");
  intersect->add_option("x", x_arg)->required();
  intersect->add_option("y", y_arg)->required();
  intersect->add_option("--level", level_arg, "bracket|layout");

  auto* layout_cmd = app.add_subcommand("layout", "routed segments of c(x)");
  layout_cmd->add_option("x", x_arg)->required();

  auto* render = app.add_subcommand("render", "SVG drawing of curves c(x)");
  render->add_option("labels", label_args, "curve labels")->required();
  render->add_option("--out", out_path, "output SVG path")->required();

  auto* verify = app.add_subcommand("verify", "sweep the intersection relation against complement-Rado adjacency");
  verify->add_option("--max", max_n, "upper vertex label N")->required();
  verify->add_option("--level", level_arg, "bracket|layout");
  verify->add_option("--jobs", jobs, "worker count (default 1)");
  verify->add_option("--report", report_path, "write the JSON report here");

  auto* embed = app.add_subcommand("embed", "surface recipe embedding a finite graph");
  embed->add_option("graphfile", input_path)->required();
  embed->add_option("--out", out_path, "output recipe JSON path")->required();

  auto* curve_graph = app.add_subcommand("curve-graph", "curve graph declared by a recipe");
  curve_graph->add_option("recipefile", input_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  if (adj->parsed()) {
    Natural x = parse_natural(x_arg), y = parse_natural(y_arg);
    bool result = rado_adjacent(x, y, parse_polarity(polarity_arg));
    std::cout << (result ? "true" : "false") << "\n";
  } else if (witness->parsed()) {
    auto nbrs = parse_natural_list(nbrs_arg);
    auto non = parse_natural_list(non_arg);
    std::cout << extension_witness(nbrs, non, parse_polarity(polarity_arg)) << "\n";
  } else if (bracket_cmd->parsed()) {
    std::cout << to_string(bracket(parse_natural(x_arg))) << "\n";
  } else if (intersect->parsed()) {
    Natural x = parse_natural(x_arg), y = parse_natural(y_arg);
    if (x >= y) throw std::invalid_argument("intersect: requires x < y");
    if (level_arg == "bracket") {
      std::cout << bracket_intersection_bit(x, y) << "\n";
    } else if (level_arg == "layout") {
      std::cout << crossings(layout(x), layout(y)) << "\n";
    } else {
      throw std::invalid_argument("level must be 'bracket' or 'layout'");
    }
  } else if (layout_cmd->parsed()) {
    std::cout << describe_layout(layout(parse_natural(x_arg)));
  } else if (render->parsed()) {
    std::vector<CurvePath> paths;
    for (const std::string& label : label_args)
      paths.push_back(layout(parse_natural(label)));
    write_file(out_path, render_svg(paths));
  } else if (verify->parsed()) {
    Level level;
    if (level_arg == "bracket")
      level = Level::Bracket;
    else if (level_arg == "layout")
      level = Level::Layout;
    else
      throw std::invalid_argument("level must be 'bracket' or 'layout'");
    SweepReport report = verify_main_theorem(max_n, level, jobs);
    if (!report_path.empty()) write_file(report_path, report.to_json());
    std::cout << report.summary() << "\n";
    return report.ok() ? 0 : 1;
  } else if (embed->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open graph file: " + input_path);
    FiniteGraph g = FiniteGraph::parse(in);
    write_file(out_path, recipe_to_json(embed_finite_graph(g)));
  } else if (curve_graph->parsed()) {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error("cannot open recipe file: " + input_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    FiniteGraph g = recipe_curve_graph(recipe_from_json(buffer.str()));
    g.write(std::cout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
