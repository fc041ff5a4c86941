#include "radocurve/svg_render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace radocurve {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

double to_double(const Natural& n) { return n.convert_to<double>(); }

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

struct Frame {
  double cell;
  double margin;
  double height;  // canvas height, used to flip rows upward

  double col_x(double col) const { return margin + (col + 0.5) * cell; }
  double row_y(double row) const { return height - margin - (row + 0.5) * cell; }
};

}  // namespace

std::string render_svg(const std::vector<CurvePath>& paths,
                       const SvgOptions& opt) {
  if (paths.empty()) throw std::invalid_argument("render_svg: no paths");

  std::vector<const CurvePath*> ordered;
  for (const auto& p : paths) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(),
            [](const CurvePath* a, const CurvePath* b) { return a->label < b->label; });

  // Nesting rank within the rendered set: rank 0 is outermost (smallest label).
  std::map<Natural, std::size_t> rank;
  for (std::size_t i = 0; i < ordered.size(); ++i) rank[ordered[i]->label] = i;
  auto inset = [&](const Natural& label) {
    return static_cast<double>(rank[label]) * opt.nest_step;
  };

  Natural max_col = 0, max_row = 0;
  for (const CurvePath* p : ordered) {
    for (const Segment& s : p->segments) {
      if (const auto* loop = std::get_if<HoleLoop>(&s))
        max_col = std::max(max_col, loop->column);
      if (const auto* run = std::get_if<VerticalRun>(&s)) {
        max_col = std::max(max_col, run->column);
        max_row = std::max(max_row, run->to_row);
      }
      if (const auto* arc = std::get_if<BackArc>(&s)) {
        max_col = std::max(max_col, arc->to_column);
        max_row = std::max(max_row, arc->row);
      }
    }
  }

  double cols = to_double(max_col) + 1.0;
  double rows = to_double(max_row) + 1.0;
  Frame f{opt.cell, opt.margin, 0.0};
  double width = 2 * opt.margin + (cols + 1.0) * opt.cell;
  f.height = 2 * opt.margin + (rows + 1.0) * opt.cell;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(f.height) << "\" viewBox=\"0 0 "
      << num(width) << " " << num(f.height) << "\">\n";

  // Surface outline and hole grid.
  out << "  <rect x=\"" << num(opt.margin * 0.5) << "\" y=\""
      << num(opt.margin * 0.5) << "\" width=\"" << num(width - opt.margin)
      << "\" height=\"" << num(f.height - opt.margin)
      << "\" rx=\"12\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\"/>\n";
  for (double r = 0; r < rows; r += 1.0) {
    for (double c = 0; c < cols; c += 1.0) {
      out << "  <circle cx=\"" << num(f.col_x(c)) << "\" cy=\""
          << num(f.row_y(r)) << "\" r=\"" << num(opt.cell * 0.16)
          << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
  }

  for (std::size_t pi = 0; pi < ordered.size(); ++pi) {
    const CurvePath& p = *ordered[pi];
    const char* color = kPalette[pi % (sizeof(kPalette) / sizeof(*kPalette))];
    double off = inset(p.label);
    out << "  <g stroke=\"" << color << "\" fill=\"none\" stroke-width=\""
        << num(opt.stroke_width) << "\">\n";
    for (const Segment& s : p.segments) {
      if (const auto* loop = std::get_if<HoleLoop>(&s)) {
        double cx = f.col_x(to_double(loop->column));
        double cy = f.row_y(0.0);
        double r = opt.cell * 0.30 - off * 0.5;
        if (loop->family == Family::A) {
          out << "    <circle cx=\"" << num(cx) << "\" cy=\"" << num(cy)
              << "\" r=\"" << num(r) << "\"/>\n";
        } else {
          // b-type loop: the twisted curve, drawn as an ellipse through the hole.
          out << "    <ellipse cx=\"" << num(cx) << "\" cy=\"" << num(cy)
              << "\" rx=\"" << num(r * 0.6) << "\" ry=\"" << num(r * 1.5)
              << "\"/>\n";
        }
      } else if (const auto* run = std::get_if<VerticalRun>(&s)) {
        double x1 = f.col_x(to_double(run->column)) + opt.cell * 0.30 - off;
        double x2 = x1 + 3.0;  // the two strands of the collapsed pair
        double y0 = f.row_y(0.0);
        double y1 = f.row_y(to_double(run->to_row)) + off;
        out << "    <line x1=\"" << num(x1) << "\" y1=\"" << num(y0)
            << "\" x2=\"" << num(x1) << "\" y2=\"" << num(y1) << "\"/>\n";
        out << "    <line x1=\"" << num(x2) << "\" y1=\"" << num(y0)
            << "\" x2=\"" << num(x2) << "\" y2=\"" << num(y1) << "\"/>\n";
      } else if (const auto* arc = std::get_if<BackArc>(&s)) {
        double y = f.row_y(to_double(arc->row)) + off +
                   (arc->stratum != 0 ? opt.nest_step * 0.5 : 0.0);
        double xa = f.col_x(to_double(arc->from_column)) + opt.cell * 0.30 - off;
        double xb = f.col_x(to_double(arc->to_column)) + opt.cell * 0.30 - off;
        double lift = opt.cell * 0.4 + off + (arc->stratum != 0 ? opt.nest_step : 0.0);
        out << "    <path d=\"M " << num(xa) << " " << num(y) << " C "
            << num(xa) << " " << num(y - lift) << " " << num(xb) << " "
            << num(y - lift) << " " << num(xb) << " " << num(y)
            << "\" stroke-dasharray=\"6 3\"/>\n";
      }
    }
    out << "  </g>\n";
  }

  if (opt.mark_crossings) {
    // One mark per hole-local crossing, found with the same engine that
    // counts intersections.
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      for (std::size_t j = i + 1; j < ordered.size(); ++j) {
        for (const Segment& s : ordered[i]->segments) {
          const auto* sl = std::get_if<HoleLoop>(&s);
          if (!sl) continue;
          for (const Segment& t : ordered[j]->segments) {
            const auto* tl = std::get_if<HoleLoop>(&t);
            if (!tl) continue;
            if (segment_crossings(s, t) != 0) {
              out << "  <circle cx=\"" << num(f.col_x(to_double(sl->column)))
                  << "\" cy=\"" << num(f.row_y(0.0) - opt.cell * 0.30)
                  << "\" r=\"3.00\" fill=\"#000000\" stroke=\"none\"/>\n";
            }
          }
        }
      }
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace radocurve
