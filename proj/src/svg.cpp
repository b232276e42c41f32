#include "qtk/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace qtk {

int precision_from_env() {
  const char* v = std::getenv("QTK_PRECISION");
  if (v == nullptr || *v == '\0') return 12;
  char* end = nullptr;
  long p = std::strtol(v, &end, 10);
  if (*end != '\0') throw Error("QTK_PRECISION must be an integer");
  return static_cast<int>(std::clamp(p, 1L, 17L));
}

namespace {

struct Pt {
  double x, y;
};

std::string num(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v);
  std::string s = buf;
  if (s == "-0") s = "0";
  return s;
}

class Canvas {
 public:
  explicit Canvas(const SvgStyle& style) : style_(style) {}

  // y is flipped so that the mathematical orientation is preserved on screen.
  void add_polygon(const std::vector<Pt>& pts, const std::string& cls, const std::string& fill) {
    std::string points;
    for (const auto& p : pts) {
      extend(p);
      if (!points.empty()) points += ' ';
      points += num(p.x, style_.precision) + "," + num(-p.y, style_.precision);
    }
    body_ << "  <polygon class=\"" << cls << "\" fill=\"" << fill << "\" points=\"" << points << "\"/>\n";
  }

  void add_line(Pt a, Pt b, const std::string& cls) {
    extend(a);
    extend(b);
    body_ << "  <line class=\"" << cls << "\" x1=\"" << num(a.x, style_.precision) << "\" y1=\""
          << num(-a.y, style_.precision) << "\" x2=\"" << num(b.x, style_.precision) << "\" y2=\""
          << num(-b.y, style_.precision) << "\"/>\n";
  }

  std::string finish() const {
    double x0 = 0, y0 = 0, w = 1, h = 1;
    if (any_) {
      w = std::max(xmax_ - xmin_, 1e-9);
      h = std::max(ymax_ - ymin_, 1e-9);
      double m = 0.05 * std::max(w, h);
      x0 = xmin_ - m;
      y0 = -ymax_ - m;
      w += 2 * m;
      h += 2 * m;
    }
    const int pr = style_.precision;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << num(x0, pr) << ' '
        << num(y0, pr) << ' ' << num(w, pr) << ' ' << num(h, pr) << "\">\n"
        << "  <g stroke=\"#222222\" stroke-width=\"" << num(style_.stroke_width * std::max(w, h), pr)
        << "\" stroke-linejoin=\"round\">\n"
        << body_.str() << "  </g>\n</svg>\n";
    return out.str();
  }

 private:
  void extend(Pt p) {
    any_ = true;
    xmin_ = std::min(xmin_, p.x);
    xmax_ = std::max(xmax_, p.x);
    ymin_ = std::min(ymin_, p.y);
    ymax_ = std::max(ymax_, p.y);
  }

  SvgStyle style_;
  std::ostringstream body_;
  bool any_ = false;
  double xmin_ = std::numeric_limits<double>::max(), xmax_ = std::numeric_limits<double>::lowest();
  double ymin_ = std::numeric_limits<double>::max(), ymax_ = std::numeric_limits<double>::lowest();
};

Pt to_pt(const Cyclo& z) {
  auto c = z.to_complex();
  return {c.real(), c.imag()};
}

std::string fill_for(const std::string& shape) {
  if (shape == "acute" || shape == "kite" || shape == "thin_rhombus") return "#f2c14e";
  return "#5b8fd9";
}

}  // namespace

std::string render_svg(const Patch& p, const SvgStyle& style) {
  Canvas canvas(style);
  for (const auto& t : leaves(p)) {
    std::vector<Pt> pts;
    for (const auto& v : t.vertices) pts.push_back(to_pt(v));
    const std::string kind = tile_kind_name(t.kind);
    canvas.add_polygon(pts, kind + " " + chirality_name(t.chirality), fill_for(kind));
  }
  return canvas.finish();
}

std::string render_svg(const std::vector<PairedTile>& tiles, const SvgStyle& style) {
  Canvas canvas(style);
  for (const auto& t : tiles) {
    std::vector<Pt> pts;
    for (const auto& v : t.polygon) pts.push_back(to_pt(v));
    canvas.add_polygon(pts, t.shape, fill_for(t.shape));
  }
  return canvas.finish();
}

std::string render_star(const Quasilattice& q, const SvgStyle& style) {
  if (q.dim() != 2) throw Error("star figure needs a planar quasilattice");
  Canvas canvas(style);
  for (const auto& g : q.generators()) canvas.add_line({0, 0}, {g[0].to_double(), g[1].to_double()}, "generator");
  return canvas.finish();
}

}  // namespace qtk
