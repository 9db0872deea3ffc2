#include "sccat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace sccat::svg {

namespace {

using cd = std::complex<double>;
constexpr double kPi = hyp::pi<double>();

const char* palette(std::size_t i) {
  static const char* colors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[i % 10];
}

struct Frame {
  double x0, y0, size;
  double sx(cd z) const { return x0 + size / 2 * (1 + z.real()); }
  double sy(cd z) const { return y0 + size / 2 * (1 - z.imag()); }
};

class Doc {
 public:
  Doc() {
    os_.precision(6);
    os_ << std::fixed;
    os_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n"
        << "<rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  }
  std::ostringstream& raw() { return os_; }
  void circle(double x, double y, double rad, const std::string& style) {
    os_ << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << rad << "\" " << style << "/>\n";
  }
  void line(double x1, double y1, double x2, double y2, const std::string& style) {
    os_ << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" " << style
        << "/>\n";
  }
  void path(const std::string& d, const std::string& style) { os_ << "<path d=\"" << d << "\" " << style << "/>\n"; }
  void text(double x, double y, const std::string& s, double font = 12) {
    os_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-size=\"" << font
        << "\" font-family=\"sans-serif\" text-anchor=\"middle\">" << escape(s) << "</text>\n";
  }
  std::string finish() {
    os_ << "</svg>\n";
    return os_.str();
  }

 private:
  static std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
      if (c == '<') out += "&lt;";
      else if (c == '>') out += "&gt;";
      else if (c == '&') out += "&amp;";
      else out += c;
    }
    return out;
  }
  std::ostringstream os_;
};

std::string arc_to(cd a, cd b, const Frame& f) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed;
  const double det = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(det) < 1e-12) {
    os << " L " << f.sx(b) << ' ' << f.sy(b);
    return os.str();
  }
  // Circle through a, b and the inverse of a in the unit circle.
  const cd inv = std::abs(a) > 1e-12 ? a / std::norm(a) : b / std::norm(b);
  const cd p = std::abs(a) > 1e-12 ? a : b;
  const cd q = std::abs(a) > 1e-12 ? b : a;
  const double ax = p.real(), ay = p.imag(), bx = q.real(), by = q.imag(), cx = inv.real(), cy = inv.imag();
  const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const double ux = (std::norm(p) * (by - cy) + std::norm(q) * (cy - ay) + std::norm(inv) * (ay - by)) / d;
  const double uy = (std::norm(p) * (cx - bx) + std::norm(q) * (ax - cx) + std::norm(inv) * (bx - ax)) / d;
  const cd c(ux, uy);
  const double rad = std::abs(a - c) * f.size / 2;
  // Orientation in screen coordinates, where y points down.
  const double ax_s = f.sx(a) - f.sx(c), ay_s = f.sy(a) - f.sy(c);
  const double bx_s = f.sx(b) - f.sx(c), by_s = f.sy(b) - f.sy(c);
  const int sweep = ax_s * by_s - ay_s * bx_s > 0 ? 1 : 0;
  os << " A " << rad << ' ' << rad << " 0 0 " << sweep << ' ' << f.sx(b) << ' ' << f.sy(b);
  return os.str();
}

std::vector<std::pair<Frame, std::size_t>> grid(std::size_t count, double top = 0, double height = 1000) {
  const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  const std::size_t rows = cols ? (count + cols - 1) / cols : 0;
  const double cell = std::min(1000.0 / std::max<std::size_t>(cols, 1), height / std::max<std::size_t>(rows, 1));
  std::vector<std::pair<Frame, std::size_t>> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({Frame{(i % cols) * cell + cell * 0.05, top + (i / cols) * cell + cell * 0.05, cell * 0.9}, i});
  return out;
}

void draw_graph(Doc& doc, const LinkGraph& g, double top, double height, const std::string& title) {
  doc.text(500, top + 24, title, 18);
  const double cx = 500, cy = top + height / 2 + 10, rad = std::min(400.0, height / 2 - 50);
  const std::size_t n = g.vertex_count();
  std::vector<double> xs(n), ys(n);
  for (std::size_t v = 0; v < n; ++v) {
    const double a = 2 * kPi * static_cast<double>(v) / static_cast<double>(std::max<std::size_t>(n, 1)) + kPi / 2;
    xs[v] = cx + rad * std::cos(a);
    ys[v] = cy - rad * std::sin(a);
  }
  std::map<std::pair<std::size_t, std::size_t>, int> seen;
  for (const LinkEdge& e : g.edges()) {
    const int k = seen[std::minmax(e.u, e.v)]++;
    std::ostringstream d;
    d.precision(3);
    d << std::fixed;
    double lx, ly;
    if (e.u == e.v) {
      const double ox = xs[e.u] + (xs[e.u] - cx) * 0.25, oy = ys[e.u] + (ys[e.u] - cy) * 0.25;
      const double s = 30 + 15 * k;
      d << "M " << xs[e.u] << ' ' << ys[e.u] << " C " << ox - s << ' ' << oy - s << ' ' << ox + s << ' ' << oy - s
        << ' ' << xs[e.u] << ' ' << ys[e.u];
      lx = ox;
      ly = oy - s * 0.8;
    } else {
      const double mx = (xs[e.u] + xs[e.v]) / 2, my = (ys[e.u] + ys[e.v]) / 2;
      const double nx = -(ys[e.v] - ys[e.u]), ny = xs[e.v] - xs[e.u];
      const double len = std::hypot(nx, ny);
      const double bend = (k % 2 ? -1 : 1) * 0.12 * ((k + 1) / 2);
      const double qx = mx + bend * nx * (len > 0 ? 1 : 0), qy = my + bend * ny * (len > 0 ? 1 : 0);
      d << "M " << xs[e.u] << ' ' << ys[e.u] << " Q " << qx << ' ' << qy << ' ' << xs[e.v] << ' ' << ys[e.v];
      lx = (mx + qx) / 2;
      ly = (my + qy) / 2;
    }
    doc.path(d.str(), "fill=\"none\" stroke=\"#555\" stroke-width=\"1.5\"");
    std::ostringstream w;
    w.precision(3);
    w << std::fixed << e.weight;
    doc.text(lx, ly, w.str(), 10);
  }
  for (std::size_t v = 0; v < n; ++v) {
    doc.circle(xs[v], ys[v], 5, "fill=\"black\"");
    doc.text(xs[v], ys[v] - 10, g.label(v), 12);
  }
}

}  // namespace

std::string geodesic_path(cd a, cd b, double x0, double y0, double size) {
  const Frame f{x0, y0, size};
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << "M " << f.sx(a) << ' ' << f.sy(a) << arc_to(a, b, f);
  return os.str();
}

std::string render_discs(const Presentation& p, const MetricParams& mp, const FoldSchedule& fs, bool folds) {
  Doc doc;
  const auto& rels = p.relators();
  // Segment classes, for colouring.
  std::vector<std::size_t> order(fs.folds.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::map<Segment, std::size_t> colour;
  const auto classes = fold_partition(fs, order);
  for (std::size_t k = 0; k < classes.size(); ++k)
    for (const Segment& s : classes[k]) colour[s] = k;

  for (const auto& [frame, i] : grid(rels.size())) {
    const int n = static_cast<int>(rels[i].size());
    const auto poly = hyp::embed_polygon(n, mp.r);
    auto vz = [&](int t) { return hyp::to_complex(poly.vertices[cyclic_mod(t, n)]); };
    const double unit = frame.size / 2;
    doc.circle(frame.sx(0), frame.sy(0), unit, "fill=\"none\" stroke=\"#ddd\"");
    if (folds) {
      for (const Segment& s : fs.diagonals[i]) {
        std::string d = "M " + std::to_string(frame.sx(vz(s.start))) + " " + std::to_string(frame.sy(vz(s.start)));
        for (int t = 1; t <= s.length; ++t) d += arc_to(vz(s.start + t - 1), vz(s.start + t), frame);
        d += arc_to(vz(s.start + s.length), vz(s.start), frame) + " Z";
        doc.path(d, std::string("fill=\"") + palette(colour[s]) + "\" fill-opacity=\"0.35\" stroke=\"none\"");
      }
    }
    std::string outline = "M " + std::to_string(frame.sx(vz(0))) + " " + std::to_string(frame.sy(vz(0)));
    for (int t = 0; t < n; ++t) outline += arc_to(vz(t), vz(t + 1), frame);
    doc.path(outline + " Z", "fill=\"none\" stroke=\"black\" stroke-width=\"2\"");
    for (const Segment& s : fs.diagonals[i])
      doc.path(geodesic_path(vz(s.start), vz(s.end), frame.x0, frame.y0, frame.size),
               std::string("fill=\"none\" stroke=\"") + palette(colour[s]) + "\" stroke-width=\"1.5\"");
    for (int t = 0; t < n; ++t) {
      doc.circle(frame.sx(vz(t)), frame.sy(vz(t)), std::max(2.0, frame.size / 120), "fill=\"#c00\"");
      const cd lab = vz(t) * 1.12;
      doc.text(frame.sx(lab), frame.sy(lab) + 4, p.format_letter(rels[i].at(t)), std::max(8.0, frame.size / 40));
    }
    doc.text(frame.sx(0), frame.y0 + frame.size + 12, "relator " + std::to_string(i + 1), 12);
  }
  return doc.finish();
}

std::string render_links(const Type1Link& link) {
  Doc doc;
  draw_graph(doc, link.unfolded, 0, 500, "link before folding");
  draw_graph(doc, link.final, 500, 500, "link after folding and smoothing");
  return doc.finish();
}

std::string render_demo(int n, int k) {
  Doc doc;
  const Frame f{50, 50, 900};
  auto v = [&](int t) { return std::polar(1.0, 2 * kPi * t / n + kPi / 2); };
  for (int i = 0; i < n; ++i)
    for (int len = 2; len <= k; ++len)
      doc.line(f.sx(v(i)), f.sy(v(i)), f.sx(v(i + len)), f.sy(v(i + len)), "stroke=\"#bbb\" stroke-width=\"1\"");
  for (int i = 0; i < n; ++i)
    doc.line(f.sx(v(i)), f.sy(v(i)), f.sx(v(i + 1)), f.sy(v(i + 1)), "stroke=\"black\" stroke-width=\"2\"");
  if (n >= 7 && k == (n - 1) / 6) {
    const auto best = hyp::euclidean_min_internal_angle(n - 1);
    const std::string style = "stroke=\"#c00\" stroke-width=\"3\"";
    doc.line(f.sx(v(best.first_start)), f.sy(v(best.first_start)), f.sx(v(best.first_end)), f.sy(v(best.first_end)),
             style);
    doc.line(f.sx(v(best.second_start)), f.sy(v(best.second_start)), f.sx(v(best.second_end)),
             f.sy(v(best.second_end)), style);
    std::ostringstream s;
    s.precision(6);
    s << "smallest internal angle " << best.angle << " rad (" << best.angle * 180 / kPi << " deg)";
    doc.text(500, 985, s.str(), 16);
  }
  for (int i = 0; i < n; ++i) doc.circle(f.sx(v(i)), f.sy(v(i)), 4, "fill=\"black\"");
  return doc.finish();
}

}  // namespace sccat::svg
