#include "semap/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <ostream>
#include <sstream>

namespace semap {

namespace {

constexpr double kPi = std::numbers::pi;

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
Vec3 add(const Vec3& a, const Vec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 unit(const Vec3& a) { return scale(a, 1.0 / norm(a)); }
Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
// Component of g tangent to the sphere at x.
Vec3 tangent(const Vec3& x, const Vec3& g) { return sub(g, scale(x, dot(g, x))); }

void require_n(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "n must be at least 3");
}

}  // namespace

std::string_view provenance_name(Provenance p) { return p == Provenance::ExactFormula ? "exact-formula" : "relaxed"; }

RealizationReport measure(const PolyhedralMap& m, const std::vector<Vec3>& x) {
  RealizationReport r;
  for (const Vec3& p : x) r.max_norm_deviation = std::max(r.max_norm_deviation, std::abs(norm(p) - 1.0));
  double lo = std::numeric_limits<double>::infinity(), hi = 0;
  for (const Edge& e : m.edges()) {
    const double l = norm(sub(x[e.u], x[e.v]));
    lo = std::min(lo, l);
    hi = std::max(hi, l);
  }
  r.edge_length_spread = m.edge_count() ? hi - lo : 0;
  for (const Face& f : m.faces()) {
    const std::size_t k = f.size();
    Vec3 c{0, 0, 0}, nrm{0, 0, 0};
    for (VertexId v : f) c = add(c, x[v]);
    c = scale(c, 1.0 / static_cast<double>(k));
    double flo = std::numeric_limits<double>::infinity(), fhi = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Vec3& a = x[f[i]];
      const Vec3& b = x[f[(i + 1) % k]];
      nrm = add(nrm, cross(sub(a, c), sub(b, c)));
      const double l = norm(sub(a, b));
      flo = std::min(flo, l);
      fhi = std::max(fhi, l);
    }
    r.max_regularity_residual = std::max(r.max_regularity_residual, fhi - flo);
    const double nn = norm(nrm);
    if (nn > 0) {
      nrm = scale(nrm, 1.0 / nn);
      for (VertexId v : f) r.max_planarity_residual = std::max(r.max_planarity_residual, std::abs(dot(sub(x[v], c), nrm)));
    }
  }
  return r;
}

Realization prism_coordinates(int n) {
  require_n(n);
  const double s = std::sin(kPi / n);
  const double c = 1.0 / std::sqrt(1.0 + s * s);
  Realization r;
  r.provenance = Provenance::ExactFormula;
  r.coords.resize(2 * n);
  for (int m = 0; m < n; ++m) {
    const double a = 2.0 * m * kPi / n;
    r.coords[m] = {c * std::cos(a), c * std::sin(a), c * s};
    r.coords[n + m] = {c * std::cos(a), c * std::sin(a), -c * s};
  }
  return r;
}

Realization antiprism_coordinates(int n) {
  require_n(n);
  const double s1 = std::sin(kPi / n), s2 = std::sin(kPi / (2.0 * n)), c2 = std::cos(kPi / (2.0 * n));
  const double c = 1.0 / std::sqrt(s1 * s1 + c2 * c2);
  const double h = std::sqrt(s1 * s1 - s2 * s2);
  Realization r;
  r.provenance = Provenance::ExactFormula;
  r.coords.resize(2 * n);
  for (int m = 0; m < n; ++m) {
    const double up = (2.0 * m + 1) * kPi / n, down = 2.0 * m * kPi / n;
    r.coords[m] = {c * std::cos(up), c * std::sin(up), c * h};
    r.coords[n + m] = {c * std::cos(down), c * std::sin(down), -c * h};
  }
  return r;
}

namespace {

// Solves A x = B in place (dense, partial pivoting). B has two columns.
void solve(std::vector<std::vector<double>>& a, std::vector<std::array<double, 2>>& b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    std::swap(a[col], a[piv]);
    std::swap(b[col], b[piv]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0) continue;
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r][0] -= f * b[col][0];
      b[r][1] -= f * b[col][1];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t k = i + 1; k < n; ++k) {
      b[i][0] -= a[i][k] * b[k][0];
      b[i][1] -= a[i][k] * b[k][1];
    }
    b[i][0] /= a[i][i];
    b[i][1] /= a[i][i];
  }
}

std::vector<Vec3> tutte_lift(const PolyhedralMap& m) {
  const int n = m.vertex_count();
  FaceId outer = 0;
  for (FaceId f = 1; f < m.face_count(); ++f)
    if (m.face(f).size() > m.face(outer).size()) outer = f;
  std::vector<std::array<double, 2>> plane(n, {0, 0});
  std::vector<int> slot(n, -1);
  const Face& of = m.face(outer);
  for (std::size_t i = 0; i < of.size(); ++i) {
    const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(of.size());
    plane[of[i]] = {std::cos(a), std::sin(a)};
  }
  std::vector<VertexId> inner;
  for (VertexId v = 0; v < n; ++v)
    if (std::find(of.begin(), of.end(), v) == of.end()) {
      slot[v] = static_cast<int>(inner.size());
      inner.push_back(v);
    }
  if (!inner.empty()) {
    std::vector<std::vector<double>> a(inner.size(), std::vector<double>(inner.size(), 0.0));
    std::vector<std::array<double, 2>> b(inner.size(), {0, 0});
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const VertexId v = inner[i];
      a[i][i] = m.degree(v);
      for (VertexId w : m.neighbors(v)) {
        if (slot[w] >= 0) {
          a[i][slot[w]] -= 1.0;
        } else {
          b[i][0] += plane[w][0];
          b[i][1] += plane[w][1];
        }
      }
    }
    solve(a, b);
    for (std::size_t i = 0; i < inner.size(); ++i) plane[inner[i]] = b[i];
  }
  // Inverse stereographic projection from the north pole; the outer face
  // lands on the equator and its interior caps the northern hemisphere.
  std::vector<Vec3> x(n);
  for (VertexId v = 0; v < n; ++v) {
    const double px = plane[v][0], py = plane[v][1], r2 = px * px + py * py;
    x[v] = {2 * px / (1 + r2), 2 * py / (1 + r2), (r2 - 1) / (1 + r2)};
  }
  return x;
}

// Conformal recentering: repeatedly apply the ball automorphism
// T_a(x) = ((1-|a|^2)(x-a) - |x-a|^2 a) / |x-a|^2 that sends a to the origin,
// with a a damped vertex centroid. Keeps the embedding, spreads the vertices.
void mobius_center(std::vector<Vec3>& x) {
  for (int it = 0; it < 1000; ++it) {
    Vec3 c{0, 0, 0};
    for (const Vec3& p : x) c = add(c, p);
    c = scale(c, 1.0 / static_cast<double>(x.size()));
    if (norm(c) < 1e-10) return;
    const Vec3 a = scale(c, 0.5);
    const double a2 = dot(a, a);
    for (Vec3& p : x) {
      const Vec3 d = sub(p, a);
      const double d2 = dot(d, d);
      p = unit(scale(sub(scale(d, 1 - a2), scale(a, d2)), 1.0 / d2));
    }
  }
}

// Scale-free length energy. Every edge should have the mean length l, and in
// each k-gon (k >= 4) the chord between vertices two apart should have the
// regular-polygon length 2 l cos(pi/k). Sum of squared relative deviations.
struct Segment {
  VertexId u, v;
  double ratio;
};

std::vector<Segment> length_targets(const PolyhedralMap& m) {
  std::vector<Segment> s;
  for (const Edge& e : m.edges()) s.push_back({e.u, e.v, 1.0});
  for (const Face& f : m.faces()) {
    const std::size_t k = f.size();
    if (k < 4) continue;
    const double c = 2 * std::cos(kPi / static_cast<double>(k));
    // For squares the two diagonals cover every chord.
    const std::size_t count = k == 4 ? 2 : k;
    for (std::size_t i = 0; i < count; ++i) s.push_back({f[i], f[(i + 2) % k], c});
  }
  return s;
}

double length_energy(const PolyhedralMap& m, const std::vector<Segment>& segs, const std::vector<Vec3>& x, std::vector<Vec3>* grad) {
  const int e = m.edge_count();
  std::vector<double> len(segs.size());
  double mean = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    len[i] = norm(sub(x[segs[i].u], x[segs[i].v]));
    if (static_cast<int>(i) < e) mean += len[i];
  }
  mean /= e;
  double energy = 0, weighted = 0;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double r = len[i] / (segs[i].ratio * mean) - 1;
    energy += r * r;
    weighted += r * len[i] / segs[i].ratio;
  }
  if (grad) {
    grad->assign(x.size(), Vec3{0, 0, 0});
    // d mean / d len_j = 1/e for edges, 0 for chords.
    const double through_mean = -2 * weighted / (mean * mean * e);
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const double r = len[i] / (segs[i].ratio * mean) - 1;
      double dl = 2 * r / (segs[i].ratio * mean);
      if (static_cast<int>(i) < e) dl += through_mean;
      const Vec3 dir = scale(sub(x[segs[i].u], x[segs[i].v]), 1.0 / std::max(len[i], 1e-300));
      (*grad)[segs[i].u] = add((*grad)[segs[i].u], scale(dir, dl));
      (*grad)[segs[i].v] = sub((*grad)[segs[i].v], scale(dir, dl));
    }
  }
  return energy;
}

}  // namespace

Realization realize_on_sphere(const PolyhedralMap& m, const RelaxOptions& opts) {
  if (m.euler_characteristic() != 2) throw Error(ErrorCode::WrongSphere, "realization needs a sphere map");
  Realization r;
  r.provenance = Provenance::Relaxed;
  std::vector<Vec3> x = tutte_lift(m);
  mobius_center(x);

  const std::vector<Segment> segs = length_targets(m);
  // Symmetric layouts are often saddle points, so start from a jittered one
  // and re-jitter whenever descent stops above the floor. Fixed seed.
  std::mt19937_64 rng(0x5e3a9);
  std::normal_distribution<double> noise(0.0, 1.0);
  auto jitter = [&](std::vector<Vec3>& y, double amp) {
    for (Vec3& p : y) p = unit(add(p, Vec3{amp * noise(rng), amp * noise(rng), amp * noise(rng)}));
  };
  jitter(x, 1e-3);

  constexpr double kFloor = 1e-26;
  constexpr int kRestarts = 25;
  std::vector<Vec3> g, trial(x.size()), best = x;
  double energy = length_energy(m, segs, x, &g);
  double best_energy = energy;
  double lr = 0.1;
  long it = 0;
  int restarts = 0;
  bool converged = false;
  while (it < opts.max_steps) {
    ++it;
    bool stopped = energy < kFloor;
    if (!stopped) {
      double max_move = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        trial[i] = unit(sub(x[i], scale(tangent(x[i], g[i]), lr)));
        max_move = std::max(max_move, norm(sub(trial[i], x[i])));
      }
      const double e2 = length_energy(m, segs, trial, nullptr);
      if (e2 <= energy) {
        x.swap(trial);
        energy = length_energy(m, segs, x, &g);
        lr = std::min(lr * 1.2, 10.0);
        stopped = max_move < opts.tolerance;
      } else {
        lr *= 0.5;
        stopped = lr < 1e-30;
      }
    }
    if (!stopped) continue;
    if (energy < best_energy || (energy == best_energy && best.empty())) {
      best = x;
      best_energy = energy;
    }
    // A genuine stop: the last accepted step was below tolerance or the
    // energy hit the floor. Stalled line searches never count.
    converged = energy < kFloor || lr >= 1e-30;
    if (energy < 1e-20 || restarts == kRestarts) break;
    ++restarts;
    jitter(x, 1e-2);
    energy = length_energy(m, segs, x, &g);
    lr = 0.1;
  }
  if (energy < best_energy) {
    best = x;
    best_energy = energy;
  }
  x = std::move(best);
  r.coords = std::move(x);
  r.report = measure(m, r.coords);
  r.report.converged = converged;
  r.report.iterations = it;
  return r;
}

void export_realization(std::ostream& out, const Realization& r, const PolyhedralMap& m, ExportFormat fmt) {
  if (static_cast<int>(r.coords.size()) != m.vertex_count()) {
    throw Error(ErrorCode::CountMismatch, std::to_string(r.coords.size()) + " coordinates for " + std::to_string(m.vertex_count()) + " vertices");
  }
  std::ostringstream os;
  os << std::setprecision(17);
  if (fmt == ExportFormat::Off) {
    os << "OFF\n" << m.vertex_count() << ' ' << m.face_count() << ' ' << m.edge_count() << '\n';
    for (const Vec3& p : r.coords) os << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
    for (const Face& f : m.faces()) {
      os << f.size();
      for (VertexId v : f) os << ' ' << v;
      os << '\n';
    }
    out << os.str();
    return;
  }

  auto project = [](const Vec3& p) {
    const double d = std::max(1.0 - p[2], 1e-9);
    return std::array<double, 2>{p[0] / d, p[1] / d};
  };
  double extent = 0;
  for (const Vec3& p : r.coords) {
    const auto q = project(unit(p));
    extent = std::max({extent, std::abs(q[0]), std::abs(q[1])});
  }
  extent = std::min(extent * 1.1 + 0.1, 50.0);
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << -extent << ' ' << -extent << ' ' << 2 * extent << ' '
     << 2 * extent << "\">\n";
  const double width = extent / 400;
  for (const Edge& e : m.edges()) {
    const Vec3 a = unit(r.coords[e.u]), b = unit(r.coords[e.v]);
    const double omega = std::acos(std::clamp(dot(a, b), -1.0, 1.0));
    os << "<path fill=\"none\" stroke=\"black\" stroke-width=\"" << width << "\" d=\"";
    for (int k = 0; k <= 32; ++k) {
      const double t = k / 32.0;
      Vec3 p;
      if (omega < 1e-12) {
        p = a;
      } else {
        p = add(scale(a, std::sin((1 - t) * omega) / std::sin(omega)), scale(b, std::sin(t * omega) / std::sin(omega)));
      }
      const auto q = project(p);
      os << (k == 0 ? "M" : " L") << q[0] << ' ' << -q[1];
    }
    os << "\"/>\n";
  }
  os << "</svg>\n";
  out << os.str();
}

OffData parse_off(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto fail = [](const std::string& why) { return Error(ErrorCode::ParseError, "OFF: " + why); };
  std::string header;
  if (!(in >> header) || header != "OFF") throw fail("missing OFF header");
  long nv = 0, nf = 0, ne = 0;
  if (!(in >> nv >> nf >> ne) || nv < 0 || nf < 0) throw fail("bad counts line");
  OffData d;
  d.coords.resize(nv);
  for (auto& p : d.coords)
    if (!(in >> p[0] >> p[1] >> p[2])) throw fail("truncated vertex list");
  d.faces.resize(nf);
  for (auto& f : d.faces) {
    long k = 0;
    if (!(in >> k) || k < 3) throw fail("bad face size");
    f.resize(k);
    for (auto& v : f)
      if (!(in >> v) || v < 0 || v >= nv) throw fail("bad face vertex");
  }
  std::string rest;
  if (in >> rest) throw fail("trailing data");
  return d;
}

}  // namespace semap
