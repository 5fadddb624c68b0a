#include "gkz/diagram.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "gkz/errors.hpp"
#include "gkz/polyhedral.hpp"
#include "gkz/resonance.hpp"
#include "gkz/toric.hpp"

namespace gkz {

std::string Layer::name() const {
  switch (kind) {
    case LayerKind::Semigroup: return "semigroup";
    case LayerKind::SaturationGap: return "saturation-gap";
    case LayerKind::Cone: return "cone";
    case LayerKind::QuasiDegree: return "qdeg(" + std::to_string(j) + ")";
    case LayerKind::Sres: return "sres";
    case LayerKind::Dsres: return "dsres";
    case LayerKind::DeltaCone: return "delta-cone";
  }
  return "?";
}

Layer Layer::parse(std::string_view text) {
  if (text == "semigroup") return {LayerKind::Semigroup};
  if (text == "saturation-gap" || text == "gap") return {LayerKind::SaturationGap};
  if (text == "cone") return {LayerKind::Cone};
  if (text == "sres") return {LayerKind::Sres};
  if (text == "dsres") return {LayerKind::Dsres};
  if (text == "delta-cone" || text == "delta") return {LayerKind::DeltaCone};
  if (text.substr(0, 5) == "qdeg(" && text.size() > 6 && text.back() == ')') {
    auto idx = parse_int_vector(text.substr(5, text.size() - 6));
    if (idx.size() == 1 && idx[0] >= 0) return {LayerKind::QuasiDegree, idx[0].get_ui()};
  }
  throw Error(ErrorCode::ParseError, "unknown diagram layer '" + std::string(text) + "'");
}

namespace {

struct Context {
  const IntMatrix& a;
  std::optional<FaceLattice> faces;
  std::optional<ConeDescription> cone;
  std::optional<SemigroupOracle> oracle;
  std::optional<ResonanceSet> resonance;
  std::map<size_t, QuasiDegreeSet> qdeg;
  std::optional<IntVector> delta;

  explicit Context(const IntMatrix& m) : a(m) {}

  const FaceLattice& face_lattice_() {
    if (!faces) faces = face_lattice(a);
    return *faces;
  }
  const ConeDescription& cone_() {
    if (!cone) cone = cone_description(a, face_lattice_());
    return *cone;
  }
  SemigroupOracle& oracle_() {
    if (!oracle) oracle.emplace(a);
    return *oracle;
  }
  const ResonanceSet& resonance_() {
    if (!resonance) resonance = resonance_components(a);
    return *resonance;
  }
  const QuasiDegreeSet& qdeg_(size_t j) {
    auto it = qdeg.find(j);
    if (it == qdeg.end()) it = qdeg.emplace(j, quasi_degrees(a, j)).first;
    return it->second;
  }
  const IntVector& delta_() {
    if (!delta) delta = delta_A(resonance_());
    return *delta;
  }
};

bool on_component(const IntMatrix& a, const IntVector& offset, const std::vector<size_t>& face,
                  const IntVector& p) {
  std::vector<IntVector> span;
  for (size_t i : face) span.push_back(a.column(i));
  IntVector diff = sub(p, offset);
  for (const auto& n : annihilator_basis(span, a.rows()))
    if (dot(n, diff) != 0) return false;
  return true;
}

bool classify(Context& ctx, const Layer& layer, const IntVector& p) {
  const IntMatrix& a = ctx.a;
  switch (layer.kind) {
    case LayerKind::Semigroup: return ctx.oracle_().contains(p);
    case LayerKind::SaturationGap:
      return ctx.cone_().contains(to_rational(p)) && !ctx.oracle_().contains(p);
    case LayerKind::Cone: return ctx.cone_().contains(to_rational(p));
    case LayerKind::QuasiDegree:
      for (const auto& c : ctx.qdeg_(layer.j).components)
        if (on_component(a, c.offset, c.face.columns, p)) return true;
      return false;
    case LayerKind::Sres: return sres_contains(ctx.resonance_(), to_rational(p));
    case LayerKind::Dsres: return dsres_witness(a, ctx.face_lattice_(), to_rational(p)).has_value();
    case LayerKind::DeltaCone: return ctx.cone_().contains(to_rational(sub(p, ctx.delta_())));
  }
  return false;
}

void check_spec(const IntMatrix& a, const DiagramSpec& spec) {
  if (a.rows() > 2) throw Error(ErrorCode::DimensionUnsupported, "diagrams need d <= 2");
  if (spec.lo.size() != a.rows() || spec.hi.size() != a.rows())
    throw Error(ErrorCode::InvalidArgument, "box corners must have one entry per row");
  for (size_t k = 0; k < a.rows(); ++k)
    if (spec.lo[k] > spec.hi[k]) throw Error(ErrorCode::InvalidArgument, "empty box");
  for (const auto& l : spec.layers)
    if (l.kind == LayerKind::QuasiDegree && l.j >= a.cols())
      throw Error(ErrorCode::InvalidArgument, "qdeg layer column out of range");
}

using Point = std::pair<double, double>;

// Convex polygon clipped to {p : n.(p - origin) >= 0}.
std::vector<Point> clip(const std::vector<Point>& poly, double nx, double ny, const Point& origin) {
  std::vector<Point> out;
  auto side = [&](const Point& p) { return nx * (p.first - origin.first) + ny * (p.second - origin.second); };
  for (size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    double sp = side(p), sq = side(q);
    if (sp >= 0) out.push_back(p);
    if ((sp >= 0) != (sq >= 0)) {
      double t = sp / (sp - sq);
      out.push_back({p.first + t * (q.first - p.first), p.second + t * (q.second - p.second)});
    }
  }
  return out;
}

struct Canvas {
  double lx, ly, hx, hy;
  double unit = 32, margin = 24;

  double sx(double x) const { return margin + (x - lx + 0.5) * unit; }
  double sy(double y) const { return margin + (hy - y + 0.5) * unit; }
  double width() const { return 2 * margin + (hx - lx + 1) * unit; }
  double height() const { return 2 * margin + (hy - ly + 1) * unit; }
  std::vector<Point> frame() const {
    return {{lx - 0.5, ly - 0.5}, {hx + 0.5, ly - 0.5}, {hx + 0.5, hy + 0.5}, {lx - 0.5, hy + 0.5}};
  }
};

// Segment of origin + t * dir inside the frame, if any.
std::optional<std::pair<Point, Point>> clip_line(const Canvas& c, Point origin, Point dir) {
  double t0 = -1e9, t1 = 1e9;
  auto bound = [&](double p, double d, double lo, double hi) {
    if (d == 0) return p >= lo && p <= hi;
    double a = (lo - p) / d, b = (hi - p) / d;
    if (a > b) std::swap(a, b);
    t0 = std::max(t0, a);
    t1 = std::min(t1, b);
    return t0 <= t1;
  };
  if (!bound(origin.first, dir.first, c.lx - 0.5, c.hx + 0.5)) return std::nullopt;
  if (!bound(origin.second, dir.second, c.ly - 0.5, c.hy + 0.5)) return std::nullopt;
  return std::make_pair(Point{origin.first + t0 * dir.first, origin.second + t0 * dir.second},
                        Point{origin.first + t1 * dir.first, origin.second + t1 * dir.second});
}

Point as_point(const IntVector& v) {
  return {v[0].get_d(), v.size() > 1 ? v[1].get_d() : 0.0};
}

std::string polygon_svg(const Canvas& c, const std::vector<Point>& poly, const char* fill) {
  if (poly.size() < 3) return {};
  std::ostringstream os;
  os << "<polygon fill=\"" << fill << "\" fill-opacity=\"0.35\" stroke=\"none\" points=\"";
  for (const auto& p : poly) os << c.sx(p.first) << ',' << c.sy(p.second) << ' ';
  os << "\"/>\n";
  return os.str();
}

std::string line_svg(const Canvas& c, const IntVector& offset, const IntVector* dir, const char* colour) {
  std::ostringstream os;
  Point o = as_point(offset);
  if (!dir) {
    if (o.first < c.lx - 0.5 || o.first > c.hx + 0.5 || o.second < c.ly - 0.5 || o.second > c.hy + 0.5)
      return {};
    os << "<rect x=\"" << c.sx(o.first) - 4 << "\" y=\"" << c.sy(o.second) - 4
       << "\" width=\"8\" height=\"8\" fill=\"" << colour << "\"/>\n";
    return os.str();
  }
  auto seg = clip_line(c, o, as_point(*dir));
  if (!seg) return {};
  os << "<line x1=\"" << c.sx(seg->first.first) << "\" y1=\"" << c.sy(seg->first.second) << "\" x2=\""
     << c.sx(seg->second.first) << "\" y2=\"" << c.sy(seg->second.second) << "\" stroke=\"" << colour
     << "\" stroke-width=\"2\"/>\n";
  return os.str();
}

std::string cone_svg(const Canvas& c, Context& ctx, const IntVector& apex, const char* fill) {
  const ConeDescription& cone = ctx.cone_();
  if (!cone.equations.empty()) return {};
  std::vector<Point> poly = c.frame();
  Point o = as_point(apex);
  for (const auto& f : cone.inequalities) poly = clip(poly, f[0].get_d(), f.size() > 1 ? f[1].get_d() : 0.0, o);
  return polygon_svg(c, poly, fill);
}

std::string render_svg(const IntMatrix& a, const DiagramSpec& spec, Context& ctx, const DiagramData& data) {
  const bool planar = a.rows() == 2;
  Canvas c{spec.lo[0].get_d(), planar ? spec.lo[1].get_d() : 0.0, spec.hi[0].get_d(),
           planar ? spec.hi[1].get_d() : 0.0};
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.width() << "\" height=\"" << c.height()
     << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (double x = c.lx; x <= c.hx; ++x)
    os << "<line x1=\"" << c.sx(x) << "\" y1=\"" << c.sy(c.ly - 0.5) << "\" x2=\"" << c.sx(x) << "\" y2=\""
       << c.sy(c.hy + 0.5) << "\" stroke=\"" << (x == 0 ? "#888" : "#eee") << "\"/>\n";
  for (double y = c.ly; y <= c.hy; ++y)
    os << "<line x1=\"" << c.sx(c.lx - 0.5) << "\" y1=\"" << c.sy(y) << "\" x2=\"" << c.sx(c.hx + 0.5)
       << "\" y2=\"" << c.sy(y) << "\" stroke=\"" << (y == 0 ? "#888" : "#eee") << "\"/>\n";

  for (size_t li = 0; li < spec.layers.size(); ++li) {
    const Layer& layer = spec.layers[li];
    os << "<g class=\"" << layer.name() << "\">\n";
    switch (layer.kind) {
      case LayerKind::Cone: os << cone_svg(c, ctx, IntVector(a.rows(), Integer(0)), "#9ecae1"); break;
      case LayerKind::DeltaCone: os << cone_svg(c, ctx, ctx.delta_(), "#fdae6b"); break;
      case LayerKind::QuasiDegree:
        for (const auto& comp : ctx.qdeg_(layer.j).components) {
          IntVector dir = comp.face.columns.empty() ? IntVector{} : a.column(comp.face.columns.front());
          os << line_svg(c, comp.offset, comp.face.dim == 0 ? nullptr : &dir, "#31a354");
        }
        break;
      case LayerKind::Sres:
        for (const auto& comp : ctx.resonance_().components) {
          IntVector dir = comp.face.columns.empty() ? IntVector{} : a.column(comp.face.columns.front());
          for (long m = 1; m <= 200; ++m)
            os << line_svg(c, sub(comp.offset, scale(Integer(m), comp.shift)),
                           comp.face.dim == 0 ? nullptr : &dir, "#de2d26");
        }
        break;
      default: break;
    }
    for (size_t pi = 0; pi < data.points.size(); ++pi) {
      if (!data.marks[li][pi]) continue;
      Point p = as_point(data.points[pi]);
      double x = c.sx(p.first), y = c.sy(p.second);
      switch (layer.kind) {
        case LayerKind::Semigroup:
          os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"black\"/>\n";
          break;
        case LayerKind::SaturationGap:
          os << "<circle cx=\"" << x << "\" cy=\"" << y
             << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
          break;
        case LayerKind::Dsres:
          os << "<path d=\"M" << x << ',' << y - 5 << " L" << x + 5 << ',' << y << " L" << x << ',' << y + 5
             << " L" << x - 5 << ',' << y << " Z\" fill=\"#756bb1\"/>\n";
          break;
        default: break;
      }
    }
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_ascii(const IntMatrix& a, const DiagramSpec& spec, const DiagramData& data) {
  const long lx = spec.lo[0].get_si(), hx = spec.hi[0].get_si();
  const long ly = a.rows() == 2 ? spec.lo[1].get_si() : 0;
  const long hy = a.rows() == 2 ? spec.hi[1].get_si() : 0;
  const size_t w = static_cast<size_t>(hx - lx + 1);
  std::ostringstream os;
  for (size_t li = 0; li < spec.layers.size(); ++li) {
    os << "[" << spec.layers[li].name() << "] x = " << lx << ".." << hx;
    if (a.rows() == 2) os << ", y = " << ly << ".." << hy;
    os << '\n';
    for (long y = hy; y >= ly; --y) {
      if (a.rows() == 2) os << std::setw(4) << y << ' ';
      for (size_t x = 0; x < w; ++x)
        os << (data.marks[li][static_cast<size_t>(y - ly) * w + x] ? '#' : '.');
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

DiagramData classify_diagram(const IntMatrix& a, const DiagramSpec& spec) {
  check_spec(a, spec);
  Context ctx(a);
  DiagramData data;
  const size_t d = a.rows();
  IntVector p = spec.lo;
  for (;;) {
    data.points.push_back(p);
    size_t k = 0;
    while (k < d && p[k] == spec.hi[k]) p[k] = spec.lo[k], ++k;
    if (k == d) break;
    p[k] += 1;
  }
  for (const auto& layer : spec.layers) {
    std::vector<bool> marks;
    for (const auto& q : data.points) marks.push_back(classify(ctx, layer, q));
    data.marks.push_back(std::move(marks));
  }
  return data;
}

std::string render_diagram(const IntMatrix& a, const DiagramSpec& spec) {
  DiagramData data = classify_diagram(a, spec);
  if (spec.format == DiagramFormat::Ascii) return render_ascii(a, spec, data);
  Context ctx(a);
  return render_svg(a, spec, ctx, data);
}

}  // namespace gkz
