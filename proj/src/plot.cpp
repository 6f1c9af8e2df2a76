#include "heisbl/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace heisbl {

namespace {

Rational cross(const PlanePoint& o, const PlanePoint& a, const PlanePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

}  // namespace

std::vector<PlanePoint> convex_hull(std::vector<PlanePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<PlanePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  // All points collinear: keep the two extremes.
  if (hull.size() == 2 || (hull.size() > 2 && cross(hull[0], hull[1], hull[2]) == 0)) return {pts.front(), pts.back()};
  return hull;
}

PlotSeries slice_series(const std::string& label, const std::vector<RationalVector>& vertices, std::size_t i,
                        std::size_t k) {
  PlotSeries s;
  s.label = label;
  if (vertices.empty()) {
    s.feasible = false;
    return s;
  }
  const std::size_t d = vertices.front().size();
  if (i >= d || k >= d || i == k) throw InvalidInput("slice coordinates must be two distinct indices in 1.." + std::to_string(d));
  std::vector<RationalVector> diffs;
  for (std::size_t v = 1; v < vertices.size(); ++v) {
    RationalVector diff(d);
    for (std::size_t c = 0; c < d; ++c) diff[c] = vertices[v][c] - vertices[0][c];
    diffs.push_back(std::move(diff));
  }
  std::size_t affine = 0, projected = 0;
  if (!diffs.empty()) {
    affine = rank(RationalMatrix::from_columns(d, diffs));
    std::vector<RationalVector> flat;
    for (const auto& df : diffs) flat.push_back({df[i], df[k]});
    projected = rank(RationalMatrix::from_columns(2, flat));
  }
  if (affine > 2)
    throw InvalidInput(label + ": the polytope is " + std::to_string(affine) + "-dimensional; a two-coordinate slice is not faithful");
  if (projected < affine)
    throw InvalidInput(label + ": coordinates q" + std::to_string(i + 1) + ", q" + std::to_string(k + 1) +
                       " do not determine the polytope; pick another slice");
  std::vector<PlanePoint> pts;
  for (const auto& v : vertices) pts.push_back({v[i], v[k]});
  s.hull = convex_hull(std::move(pts));
  return s;
}

std::string render_svg(const std::vector<PlotSeries>& series, std::size_t i, std::size_t k) {
  const double size = 520, margin = 60, span = size - 2 * margin;
  auto px = [&](const Rational& v) { return margin + v.get_d() * span; };
  auto py = [&](const Rational& v) { return size - margin - v.get_d() * span; };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"520\" height=\"520\" viewBox=\"0 0 520 520\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"520\" height=\"520\" fill=\"white\"/>\n";
  out << "<rect x=\"" << fmt(margin) << "\" y=\"" << fmt(margin) << "\" width=\"" << fmt(span) << "\" height=\""
      << fmt(span) << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    Rational v(t, 4);
    v.canonicalize();
    out << "<text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(size - margin + 18) << "\" text-anchor=\"middle\">"
        << to_string(v) << "</text>\n";
    out << "<text x=\"" << fmt(margin - 8) << "\" y=\"" << fmt(py(v) + 4) << "\" text-anchor=\"end\">" << to_string(v)
        << "</text>\n";
  }
  out << "<text x=\"" << fmt(margin + span / 2) << "\" y=\"" << fmt(size - 15)
      << "\" text-anchor=\"middle\">q" << i + 1 << "</text>\n";
  out << "<text x=\"15\" y=\"" << fmt(margin + span / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 "
      << fmt(margin + span / 2) << ")\">q" << k + 1 << "</text>\n";

  bool any_feasible = false;
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto& ser = series[s];
    const char* color = kPalette[s % (sizeof kPalette / sizeof *kPalette)];
    out << "<text x=\"" << fmt(size - margin) << "\" y=\"" << fmt(margin - 30 + 14.0 * double(s))
        << "\" text-anchor=\"end\" fill=\"" << color << "\">" << escape(ser.label)
        << (ser.feasible ? "" : " (infeasible)") << "</text>\n";
    if (!ser.feasible) continue;
    any_feasible = true;
    if (ser.hull.size() >= 3) {
      out << "<polygon points=\"";
      for (std::size_t p = 0; p < ser.hull.size(); ++p)
        out << (p ? " " : "") << fmt(px(ser.hull[p][0])) << "," << fmt(py(ser.hull[p][1]));
      out << "\" fill=\"" << color << "\" fill-opacity=\"0.25\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    } else if (ser.hull.size() == 2) {
      out << "<line x1=\"" << fmt(px(ser.hull[0][0])) << "\" y1=\"" << fmt(py(ser.hull[0][1])) << "\" x2=\""
          << fmt(px(ser.hull[1][0])) << "\" y2=\"" << fmt(py(ser.hull[1][1])) << "\" stroke=\"" << color
          << "\" stroke-width=\"3\"/>\n";
    }
    for (const auto& p : ser.hull) {
      out << "<circle cx=\"" << fmt(px(p[0])) << "\" cy=\"" << fmt(py(p[1])) << "\" r=\"4\" fill=\"" << color
          << "\"/>\n";
      out << "<text x=\"" << fmt(px(p[0]) + 6) << "\" y=\"" << fmt(py(p[1]) - 6 + 14.0 * double(s)) << "\" fill=\""
          << color << "\">(" << to_string(p[0]) << ", " << to_string(p[1]) << ")</text>\n";
    }
  }
  if (!any_feasible)
    out << "<text x=\"260\" y=\"260\" text-anchor=\"middle\" font-size=\"24\" fill=\"#b00\">infeasible</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_plot_csv(const std::vector<PlotSeries>& series, std::size_t i, std::size_t k) {
  std::ostringstream out;
  out << "series,q" << i + 1 << ",q" << k + 1 << "\n";
  for (const auto& s : series)
    for (const auto& p : s.hull) out << s.label << "," << to_string(p[0]) << "," << to_string(p[1]) << "\n";
  return out.str();
}

}  // namespace heisbl
