#include "semap/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "semap/parallel.hpp"

namespace semap {

FlagSystem::FlagSystem(const PolyhedralMap& m) {
  offset_.resize(m.face_count() + 1, 0);
  for (FaceId f = 0; f < m.face_count(); ++f) offset_[f + 1] = offset_[f] + 2 * static_cast<int>(m.face(f).size());
  const int n = offset_.back();
  vertex_.resize(n);
  face_.resize(n);
  moves_.resize(3 * n);
  for (FaceId f = 0; f < m.face_count(); ++f) {
    const Face& face = m.face(f);
    const int k = static_cast<int>(face.size());
    for (int i = 0; i < k; ++i) {
      const VertexId a = face[i], b = face[(i + 1) % k];
      const FaceId g = m.opposite_face(f, a, b);
      const Face& other = m.face(g);
      const int kg = static_cast<int>(other.size());
      int j = 0;
      while (!((other[j] == a && other[(j + 1) % kg] == b) || (other[j] == b && other[(j + 1) % kg] == a))) ++j;
      for (int s = 0; s < 2; ++s) {
        const int x = flag(f, i, s);
        const VertexId v = s == 0 ? a : b;
        vertex_[x] = v;
        face_[x] = f;
        moves_[3 * x + 0] = flag(f, i, 1 - s);
        moves_[3 * x + 1] = s == 0 ? flag(f, (i + k - 1) % k, 1) : flag(f, (i + 1) % k, 0);
        moves_[3 * x + 2] = offset_[g] + 2 * j + (other[j] == v ? 0 : 1);
      }
    }
  }
}

namespace {

// Breadth-first encoding from `start`. Returns -1/0/+1 comparing the code with
// `bound` (or -1 when there is no bound); gives up as soon as it is larger.
struct Encoder {
  const FlagSystem& fs;
  std::vector<int> label;
  std::vector<int> order;
  std::vector<int> code;

  explicit Encoder(const FlagSystem& f) : fs(f), label(f.size(), -1) {}

  int run(int start, const std::vector<int>* bound) {
    for (int x : order) label[x] = -1;
    order.clear();
    code.clear();
    label[start] = 0;
    order.push_back(start);
    bool equal = bound != nullptr;
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int x = order[head];
      for (int k = 0; k < 3; ++k) {
        const int y = fs.move(x, k);
        if (label[y] < 0) {
          label[y] = static_cast<int>(order.size());
          order.push_back(y);
        }
        const int c = label[y];
        if (equal) {
          const int b = (*bound)[code.size()];
          if (c > b) return 1;
          if (c < b) equal = false;
        }
        code.push_back(c);
      }
    }
    return equal ? 0 : -1;
  }
};

std::vector<VertexId> first_appearance(const FlagSystem& fs, const std::vector<int>& order, int n) {
  std::vector<VertexId> lab(n, -1);
  int next = 0;
  for (int x : order)
    if (lab[fs.vertex(x)] < 0) lab[fs.vertex(x)] = next++;
  return lab;
}

}  // namespace

CanonicalCertificate canonical_certificate(const PolyhedralMap& m) {
  const FlagSystem fs(m);
  const int n = fs.size();
  struct Best {
    std::vector<int> code;
    int start = -1;
  };
  const int workers = n < 512 ? 1 : thread_count();
  std::vector<Best> best(std::max(1, workers));
  auto search = [&](int begin, int end, Best& b) {
    Encoder enc(fs);
    for (int s = begin; s < end; ++s) {
      const int cmp = enc.run(s, b.start < 0 ? nullptr : &b.code);
      if (cmp < 0) {
        b.code = enc.code;
        b.start = s;
      }
    }
  };
  if (workers <= 1) {
    search(0, n, best[0]);
  } else {
    parallel_for(workers, [&](int w) {
      search(static_cast<int>(static_cast<long long>(n) * w / workers),
             static_cast<int>(static_cast<long long>(n) * (w + 1) / workers), best[w]);
    });
  }
  // Chunks are in increasing start order, so the first strict minimum wins ties.
  Best* win = nullptr;
  for (Best& b : best) {
    if (b.start < 0) continue;
    if (!win || b.code < win->code) win = &b;
  }
  CanonicalCertificate cert;
  cert.code = std::move(win->code);
  cert.start_flag = win->start;
  Encoder enc(fs);
  enc.run(cert.start_flag, nullptr);
  cert.canonical_label = first_appearance(fs, enc.order, m.vertex_count());
  return cert;
}

namespace {

bool same_counts(const PolyhedralMap& a, const PolyhedralMap& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && a.face_count() == b.face_count();
}

}  // namespace

bool is_isomorphism(const PolyhedralMap& a, const PolyhedralMap& b, const Permutation& p) {
  if (!same_counts(a, b) || static_cast<int>(p.size()) != a.vertex_count()) return false;
  std::vector<char> seen(b.vertex_count(), 0);
  for (VertexId v : p) {
    if (v < 0 || v >= b.vertex_count() || seen[v]) return false;
    seen[v] = 1;
  }
  std::vector<Face> mapped;
  mapped.reserve(a.face_count());
  for (const Face& f : a.faces()) {
    Face g;
    for (VertexId v : f) g.push_back(p[v]);
    mapped.push_back(std::move(g));
  }
  return normalized_face_set(mapped) == normalized_face_set(b.faces());
}

std::optional<Permutation> isomorphism(const PolyhedralMap& a, const PolyhedralMap& b) {
  if (!same_counts(a, b)) return std::nullopt;
  const CanonicalCertificate ca = canonical_certificate(a);
  const CanonicalCertificate cb = canonical_certificate(b);
  if (ca.code != cb.code) return std::nullopt;
  std::vector<VertexId> by_label(b.vertex_count());
  for (VertexId v = 0; v < b.vertex_count(); ++v) by_label[cb.canonical_label[v]] = v;
  Permutation p(a.vertex_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v) p[v] = by_label[ca.canonical_label[v]];
  return p;
}

bool are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b) {
  if (!same_counts(a, b)) return false;
  return canonical_certificate(a).code == canonical_certificate(b).code;
}

AutomorphismGroup automorphism_group(const PolyhedralMap& m) {
  const FlagSystem fs(m);
  const int n = fs.size();
  Encoder base(fs);
  base.run(0, nullptr);
  const std::vector<int> code0 = base.code;
  const std::vector<int> order0 = base.order;

  // An automorphism is determined by the image of flag 0.
  std::vector<Permutation> found(n);
  parallel_chunks(n, [&](int begin, int end) {
    Encoder enc(fs);
    for (int t = begin; t < end; ++t) {
      if (enc.run(t, &code0) != 0) continue;
      Permutation p(m.vertex_count(), -1);
      for (std::size_t k = 0; k < order0.size(); ++k) p[fs.vertex(order0[k])] = fs.vertex(enc.order[k]);
      found[t] = std::move(p);
    }
  });

  AutomorphismGroup g;
  for (auto& p : found)
    if (!p.empty()) g.elements.push_back(std::move(p));
  std::sort(g.elements.begin(), g.elements.end());
  g.elements.erase(std::unique(g.elements.begin(), g.elements.end()), g.elements.end());

  std::vector<int> orbit(m.vertex_count(), -1);
  for (VertexId v = 0; v < m.vertex_count(); ++v) {
    if (orbit[v] >= 0) continue;
    const int id = static_cast<int>(g.orbits.size());
    g.orbits.emplace_back();
    for (const auto& p : g.elements) orbit[p[v]] = id;
    for (VertexId w = 0; w < m.vertex_count(); ++w)
      if (orbit[w] == id) g.orbits.back().push_back(w);
  }
  return g;
}

bool is_vertex_transitive(const PolyhedralMap& m) { return automorphism_group(m).orbits.size() == 1; }

bool is_free_involution(const PolyhedralMap& m, const Permutation& sigma) {
  const int n = m.vertex_count();
  if (static_cast<int>(sigma.size()) != n) return false;
  for (VertexId v = 0; v < n; ++v) {
    if (sigma[v] < 0 || sigma[v] >= n || sigma[v] == v || sigma[sigma[v]] != v) return false;
  }
  if (!is_isomorphism(m, m, sigma)) return false;
  for (const Edge& e : m.edges()) {
    if (sigma[e.u] == e.v) return false;  // u <-> v would keep the edge
  }
  for (const Face& f : m.faces()) {
    Face a = f, b;
    for (VertexId v : f) b.push_back(sigma[v]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a == b) return false;
  }
  return true;
}

std::vector<Permutation> free_involutions(const PolyhedralMap& m) {
  std::vector<Permutation> out;
  for (auto& p : automorphism_group(m).elements)
    if (is_free_involution(m, p)) out.push_back(std::move(p));
  return out;
}

PolyhedralMap quotient(const PolyhedralMap& m, const Permutation& sigma) {
  if (!is_free_involution(m, sigma)) throw Error(ErrorCode::NotFreeInvolution, "permutation is not a free involutive automorphism");
  const int n = m.vertex_count();
  std::vector<VertexId> q(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (q[v] >= 0) continue;
    q[v] = q[sigma[v]] = next++;
  }
  std::map<Face, FaceId> by_set;
  for (FaceId f = 0; f < m.face_count(); ++f) {
    Face s = m.face(f);
    std::sort(s.begin(), s.end());
    by_set[s] = f;
  }
  std::vector<Face> faces;
  for (FaceId f = 0; f < m.face_count(); ++f) {
    Face image;
    for (VertexId v : m.face(f)) image.push_back(sigma[v]);
    std::sort(image.begin(), image.end());
    if (by_set.at(image) < f) continue;
    Face g;
    for (VertexId v : m.face(f)) g.push_back(q[v]);
    faces.push_back(std::move(g));
  }
  try {
    return build_map(next, std::move(faces));
  } catch (const Error& e) {
    throw Error(ErrorCode::NonPolyhedralQuotient, e.what());
  }
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

int index_in(const Face& f, VertexId v) { return static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin()); }

}  // namespace

DoubleCover double_cover(const PolyhedralMap& y) {
  if (y.euler_characteristic() != 1) throw Error(ErrorCode::AlreadySpherical, "double cover needs a projective-plane map");
  const int n = y.vertex_count();
  std::vector<int> off(y.face_count() + 1, 0);
  for (FaceId f = 0; f < y.face_count(); ++f) off[f + 1] = off[f] + 2 * static_cast<int>(y.face(f).size());
  auto corner = [&](FaceId f, int sheet, int pos) { return off[f] + sheet * static_cast<int>(y.face(f).size()) + pos; };

  UnionFind uf(off.back());
  for (const Edge& e : y.edges()) {
    const FaceId f = e.faces[0], g = e.faces[1];
    const Face& ff = y.face(f);
    const Face& gg = y.face(g);
    const int fa = index_in(ff, e.u), fb = index_in(ff, e.v);
    const int ga = index_in(gg, e.u), gb = index_in(gg, e.v);
    const bool f_forward = (fa + 1) % static_cast<int>(ff.size()) == fb;
    const bool g_forward = (ga + 1) % static_cast<int>(gg.size()) == gb;
    for (int s = 0; s < 2; ++s) {
      const int t = f_forward == g_forward ? 1 - s : s;
      uf.unite(corner(f, s, fa), corner(g, t, ga));
      uf.unite(corner(f, s, fb), corner(g, t, gb));
    }
  }

  std::vector<int> lift(off.back(), -1);
  for (VertexId v = 0; v < n; ++v) {
    const FaceId f0 = y.face_cycle(v).faces[0];
    const int root0 = uf.find(corner(f0, 0, index_in(y.face(f0), v)));
    int root1 = -1;
    for (FaceId f : y.face_cycle(v).faces) {
      for (int s = 0; s < 2; ++s) {
        const int c = corner(f, s, index_in(y.face(f), v));
        const int r = uf.find(c);
        if (r == root0) {
          lift[c] = v;
        } else {
          if (root1 < 0) root1 = r;
          if (r != root1) throw Error(ErrorCode::InternalError, "vertex lifts to more than two vertices");
          lift[c] = v + n;
        }
      }
    }
    if (root1 < 0) throw Error(ErrorCode::InternalError, "vertex lifts to a single vertex");
  }

  std::vector<Face> faces;
  for (int s = 0; s < 2; ++s) {
    for (FaceId f = 0; f < y.face_count(); ++f) {
      const int k = static_cast<int>(y.face(f).size());
      Face g;
      for (int i = 0; i < k; ++i) g.push_back(lift[corner(f, s, i)]);
      if (s == 1) std::reverse(g.begin(), g.end());
      faces.push_back(std::move(g));
    }
  }
  DoubleCover out{build_map(2 * n, std::move(faces)), Permutation(2 * n)};
  for (VertexId v = 0; v < n; ++v) {
    out.deck[v] = v + n;
    out.deck[v + n] = v;
  }
  return out;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.size(), 0);
  bool any = false;
  for (std::size_t v = 0; v < p.size(); ++v) {
    if (done[v] || p[v] == static_cast<VertexId>(v)) continue;
    any = true;
    os << '(';
    std::size_t w = v;
    bool first = true;
    while (!done[w]) {
      done[w] = 1;
      if (!first) os << ' ';
      os << w;
      first = false;
      w = static_cast<std::size_t>(p[w]);
    }
    os << ')';
  }
  return any ? os.str() : "()";
}

}  // namespace semap
