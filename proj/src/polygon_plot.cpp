#include "forest/polygon_plot.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace forest {

namespace {

// Plot window in the (b, a) plane.
constexpr double kBMax = 0.3, kAMax = 1.1;
constexpr double kWidth = 640, kHeight = 520, kMargin = 60;

struct P {
  double b, a;
};

double to_d(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

double sx(double b) { return kMargin + b / kBMax * (kWidth - 2 * kMargin); }
double sy(double a) { return kHeight - kMargin - a / kAMax * (kHeight - 2 * kMargin); }

double value(const HalfPlane& h, P p) { return to_d(h.ca) * p.a + to_d(h.cb) * p.b - to_d(h.rhs); }

std::vector<P> clip(const std::vector<P>& poly, const HalfPlane& h) {
  std::vector<P> out;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    P p = poly[i], q = poly[(i + 1) % poly.size()];
    double vp = value(h, p), vq = value(h, q);
    if (vp <= 0) out.push_back(p);
    if ((vp < 0) != (vq < 0) && vp != vq) {
      double t = vp / (vp - vq);
      out.push_back({p.b + t * (q.b - p.b), p.a + t * (q.a - p.a)});
    }
  }
  return out;
}

// The part of the constraint line inside the window, if any.
bool window_segment(const HalfPlane& h, P& from, P& to) {
  std::vector<P> hits;
  const double ca = to_d(h.ca), cb = to_d(h.cb), r = to_d(h.rhs);
  auto keep = [&](P p) {
    if (p.b >= -1e-12 && p.b <= kBMax + 1e-12 && p.a >= -1e-12 && p.a <= kAMax + 1e-12)
      hits.push_back(p);
  };
  if (ca != 0) {
    keep({0, r / ca});
    keep({kBMax, (r - cb * kBMax) / ca});
  }
  if (cb != 0) {
    keep({r / cb, 0});
    keep({(r - ca * kAMax) / cb, kAMax});
  }
  if (hits.size() < 2) return false;
  from = hits.front();
  to = hits.front();
  for (P p : hits)
    if (std::hypot(p.b - from.b, p.a - from.a) > std::hypot(to.b - from.b, to.a - from.a)) to = p;
  return true;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

std::string num(double x) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << x;
  return os.str();
}

}  // namespace

std::string vertex_label(const PolygonVertex& v) {
  return "(" + to_string(v.b) + ", " + to_string(v.a) + ")";
}

std::string common_denominator_label(const PolygonVertex& v) {
  if (v.a.denominator() == 1 || v.b.denominator() == 1) return {};
  long long d = std::lcm(v.a.denominator(), v.b.denominator());
  if (d == v.a.denominator() && d == v.b.denominator()) return {};
  auto over = [&](const Rational& r) {
    return std::to_string(r.numerator() * (d / r.denominator())) + "/" + std::to_string(d);
  };
  return "(" + over(v.b) + ", " + over(v.a) + ")";
}

std::string polygon_svg(GraphClass cls) {
  const Polygon& poly = bound_polygon(cls);
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
     << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<title>Feasible (a, b) for " << to_string(cls) << "</title>\n";

  std::vector<P> region{{0, 0}, {kBMax, 0}, {kBMax, kAMax}, {0, kAMax}};
  for (const HalfPlane& h : poly.constraints) region = clip(region, h);
  os << "<polygon fill=\"#cfe3f7\" stroke=\"none\" points=\"";
  for (P p : region) os << num(sx(p.b)) << "," << num(sy(p.a)) << " ";
  os << "\"/>\n";

  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(kBMax) << "\" y2=\""
     << sy(0) << "\" stroke=\"#888\"/>\n";
  os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\""
     << sy(kAMax) << "\" stroke=\"#888\"/>\n";
  os << "<text x=\"" << sx(kBMax) - 10 << "\" y=\"" << sy(0) + 30 << "\">b</text>\n";
  os << "<text x=\"" << sx(0) - 40 << "\" y=\"" << sy(kAMax) + 5 << "\">a</text>\n";

  for (const HalfPlane& h : poly.constraints) {
    P from, to;
    if (!window_segment(h, from, to)) continue;
    os << "<g class=\"constraint\">\n";
    os << "  <line x1=\"" << num(sx(from.b)) << "\" y1=\"" << num(sy(from.a)) << "\" x2=\""
       << num(sx(to.b)) << "\" y2=\"" << num(sy(to.a)) << "\" stroke=\"#1f5f9f\"/>\n";
    P mid{(from.b + to.b) / 2, (from.a + to.a) / 2};
    os << "  <text x=\"" << num(sx(mid.b) + 4) << "\" y=\"" << num(sy(mid.a) - 4)
       << "\" fill=\"#1f5f9f\">" << escape(h.label) << "</text>\n";
    os << "</g>\n";
  }

  for (const PolygonVertex& v : poly.vertices) {
    double x = sx(to_d(v.b)), y = sy(to_d(v.a));
    os << "<g class=\"vertex\">\n";
    os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"#000\"/>\n";
    os << "  <text x=\"" << num(x + 6) << "\" y=\"" << num(y + 14) << "\">" << vertex_label(v)
       << "</text>\n";
    if (std::string alt = common_denominator_label(v); !alt.empty())
      os << "  <text x=\"" << num(x + 6) << "\" y=\"" << num(y + 28) << "\" fill=\"#555\">" << alt
         << "</text>\n";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace forest
