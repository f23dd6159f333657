#include "diskpack/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace diskpack {
namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x == 0.0 ? 0.0 : x);
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

}  // namespace

std::string render_svg(const Packing& p, const SvgOptions& opts) {
  double x0 = 0.0, y0 = 0.0, w = 1.0, h = 1.0;
  if (!p.empty()) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const Disk& d : p.disks()) {
      xmin = std::min(xmin, d.cx - d.r);
      xmax = std::max(xmax, d.cx + d.r);
      ymin = std::min(ymin, -d.cy - d.r);
      ymax = std::max(ymax, -d.cy + d.r);
    }
    const double margin = 0.05 * std::max(xmax - xmin, ymax - ymin);
    x0 = xmin - margin;
    y0 = ymin - margin;
    w = xmax - xmin + 2 * margin;
    h = ymax - ymin + 2 * margin;
  }
  const double scale = opts.scale > 0 ? opts.scale : 50.0;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w * scale)
      << "\" height=\"" << num(h * scale) << "\" viewBox=\"" << num(x0) << ' ' << num(y0) << ' '
      << num(w) << ' ' << num(h) << "\">\n";
  double stroke = 0.01;
  if (!p.empty()) {
    double rmin = INFINITY;
    for (const Disk& d : p.disks()) rmin = std::min(rmin, d.r);
    stroke = rmin / 50.0;
  }
  for (const Disk& d : p.disks()) {
    out << "  <circle id=\"" << escape(d.id) << "\" cx=\"" << num(d.cx) << "\" cy=\""
        << num(-d.cy) << "\" r=\"" << num(d.r) << "\" fill=\"none\" stroke=\"black\" stroke-width=\""
        << num(stroke) << "\"/>\n";
  }
  if (opts.labels) {
    for (const Disk& d : p.disks()) {
      out << "  <text x=\"" << num(d.cx) << "\" y=\"" << num(-d.cy) << "\" font-size=\""
          << num(d.r * 0.6) << "\" text-anchor=\"middle\" dominant-baseline=\"central\">"
          << escape(d.id) << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace diskpack
