#include "plo/svg.hpp"

#include <cstdio>

namespace plo {

namespace {

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<std::pair<std::string, PLMap>>& maps, const SvgOptions& options) {
  const double s = options.scale;
  const double m = options.margin;
  const unsigned legend_width = options.legend ? 160 : 0;
  const double width = s + 2 * m + legend_width;
  const double height = s + 2 * m;
  auto px = [&](const Rat& x) { return fixed(m + x.get_d() * s); };
  auto py = [&](const Rat& y) { return fixed(m + (1.0 - y.get_d()) * s); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + fixed(width) + "\" height=\"" +
         fixed(height) + "\" viewBox=\"0 0 " + fixed(width) + " " + fixed(height) + "\">\n";
  out += "  <rect class=\"unit-square\" x=\"" + fixed(m) + "\" y=\"" + fixed(m) + "\" width=\"" + fixed(s) +
         "\" height=\"" + fixed(s) + "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
  out += "  <line class=\"diagonal\" x1=\"" + px(Rat(0)) + "\" y1=\"" + py(Rat(0)) + "\" x2=\"" + px(Rat(1)) +
         "\" y2=\"" + py(Rat(1)) + "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"6,4\"/>\n";

  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& [name, f] = maps[i];
    const char* colour = kPalette[i % std::size(kPalette)];
    out += "  <polyline class=\"map\" data-name=\"" + escape(name) + "\" fill=\"none\" stroke=\"" + colour +
           "\" stroke-width=\"2\" points=\"";
    bool first = true;
    for (const auto& n : f.nodes()) {
      if (!first) out += ' ';
      out += px(n.x) + "," + py(n.y);
      first = false;
    }
    out += "\"/>\n";
    if (options.legend) {
      const double ly = m + 20.0 * static_cast<double>(i + 1);
      const double lx = m + s + 20.0;
      out += "  <line class=\"legend-swatch\" x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly) + "\" x2=\"" + fixed(lx + 24) +
             "\" y2=\"" + fixed(ly) + "\" stroke=\"" + colour + "\" stroke-width=\"2\"/>\n";
      out += "  <text class=\"legend\" x=\"" + fixed(lx + 30) + "\" y=\"" + fixed(ly + 4) +
             "\" font-family=\"sans-serif\" font-size=\"12\">" + escape(name) + "</text>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace plo
