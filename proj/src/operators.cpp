#include "semap/operators.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "semap/vertex_type.hpp"

namespace semap {

namespace {

int position(const Face& f, VertexId v) {
  auto it = std::find(f.begin(), f.end(), v);
  return it == f.end() ? -1 : static_cast<int>(it - f.begin());
}

int fsize(const PolyhedralMap& m, FaceId f) { return static_cast<int>(m.face(f).size()); }

// Internal wrapper: operator outputs on valid inputs must always validate.
PolyhedralMap build_checked(int n, std::vector<Face> faces, const char* op) {
  try {
    return build_map(n, std::move(faces));
  } catch (const Error& e) {
    throw Error(ErrorCode::InternalError, std::string(op) + " produced an invalid map: " + e.what());
  }
}

}  // namespace

PolyhedralMap truncate(const PolyhedralMap& x) {
  std::map<std::pair<VertexId, VertexId>, VertexId> id;
  for (const Edge& e : x.edges()) {
    id[{e.u, e.v}] = 0;
    id[{e.v, e.u}] = 0;
  }
  VertexId next = 0;
  for (auto& [key, val] : id) val = next++;

  std::vector<Face> faces;
  faces.reserve(x.face_count() + x.vertex_count());
  for (const Face& f : x.faces()) {
    const int q = static_cast<int>(f.size());
    Face g;
    for (int i = 0; i < q; ++i) {
      const VertexId a = f[i], b = f[(i + 1) % q];
      g.push_back(id.at({a, b}));
      g.push_back(id.at({b, a}));
    }
    faces.push_back(std::move(g));
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    Face g;
    for (VertexId w : x.neighbors(v)) g.push_back(id.at({v, w}));
    faces.push_back(std::move(g));
  }
  return build_checked(next, std::move(faces), "truncate");
}

PolyhedralMap rectify(const PolyhedralMap& x) {
  std::vector<Face> faces;
  faces.reserve(x.face_count() + x.vertex_count());
  for (const Face& f : x.faces()) {
    const int q = static_cast<int>(f.size());
    Face g;
    for (int i = 0; i < q; ++i) g.push_back(*x.edge_id(f[i], f[(i + 1) % q]));
    faces.push_back(std::move(g));
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    Face g;
    for (VertexId w : x.neighbors(v)) g.push_back(*x.edge_id(v, w));
    faces.push_back(std::move(g));
  }
  return build_checked(x.edge_count(), std::move(faces), "rectify");
}

PolyhedralMap dual(const PolyhedralMap& x) {
  std::vector<Face> faces;
  faces.reserve(x.vertex_count());
  for (VertexId v = 0; v < x.vertex_count(); ++v) faces.push_back(x.face_cycle(v).faces);
  return build_checked(x.face_count(), std::move(faces), "dual");
}

std::vector<std::pair<FaceId, FaceId>> polygon_links(const PolyhedralMap& x, int p) {
  // owner[v] = some p-gon containing v (the last one seen).
  std::vector<FaceId> owner(x.vertex_count(), -1);
  for (FaceId f = 0; f < x.face_count(); ++f)
    if (fsize(x, f) == p)
      for (VertexId v : x.face(f)) owner[v] = f;
  std::vector<std::pair<FaceId, FaceId>> links;
  for (const Edge& e : x.edges()) {
    if (fsize(x, e.faces[0]) == p || fsize(x, e.faces[1]) == p) continue;
    const FaceId a = owner[e.u], b = owner[e.v];
    if (a < 0 || b < 0) continue;
    links.emplace_back(std::min(a, b), std::max(a, b));
  }
  return links;
}

bool polygon_adjacency_is_simple(const PolyhedralMap& x, int p) {
  auto links = polygon_links(x, p);
  std::sort(links.begin(), links.end());
  for (std::size_t i = 0; i < links.size(); ++i) {
    if (links[i].first == links[i].second) return false;
    if (i && links[i] == links[i - 1]) return false;
  }
  return true;
}

PolyhedralMap inverse_truncation(const PolyhedralMap& x) {
  const VertexType t = require_semi_equivelar(x);
  const auto rs = t.runs();
  int node_size = 0;
  if (rs.size() == 2) {
    for (int i = 0; i < 2; ++i) {
      const Run& a = rs[i];
      const Run& b = rs[1 - i];
      if (a.count == 1 && b.count == 2 && b.size % 2 == 0 && b.size >= 6 && a.size != b.size) node_size = a.size;
    }
  } else if (rs.size() == 3) {
    std::vector<int> sizes{rs[0].size, rs[1].size, rs[2].size};
    std::sort(sizes.begin(), sizes.end());
    const bool ok = rs[0].count == 1 && rs[1].count == 1 && rs[2].count == 1 && sizes[0] == 4 && sizes[1] > 4 &&
                    sizes[1] < sizes[2] && sizes[1] % 2 == 0 && sizes[2] % 2 == 0;
    if (ok) node_size = 4;
  }
  if (node_size == 0) throw Error(ErrorCode::WrongShape, "inverse truncation needs [p,(2q)^2] or [4,2p,2q], got " + t.str());

  std::vector<int> node_of_face(x.face_count(), -1);
  int nodes = 0;
  for (FaceId f = 0; f < x.face_count(); ++f)
    if (fsize(x, f) == node_size) node_of_face[f] = nodes++;
  std::vector<int> node(x.vertex_count(), -1);
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (node_of_face[f] < 0) continue;
    for (VertexId v : x.face(f)) {
      if (node[v] >= 0) throw Error(ErrorCode::WrongShape, "vertex " + std::to_string(v) + " lies in two contracted faces");
      node[v] = node_of_face[f];
    }
  }

  // The contracted adjacency must be simple.
  std::vector<std::pair<int, int>> links;
  for (const Edge& e : x.edges()) {
    const bool inside = fsize(x, e.faces[0]) == node_size || fsize(x, e.faces[1]) == node_size;
    if (inside) continue;
    if (node[e.u] == node[e.v]) {
      throw Error(ErrorCode::MultiEdgeDetected, "connecting edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is a loop");
    }
    links.emplace_back(std::min(node[e.u], node[e.v]), std::max(node[e.u], node[e.v]));
  }
  std::sort(links.begin(), links.end());
  if (std::adjacent_find(links.begin(), links.end()) != links.end()) {
    throw Error(ErrorCode::MultiEdgeDetected, "two contracted faces joined by more than one edge");
  }

  std::vector<Face> faces;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (node_of_face[f] >= 0) continue;
    const Face& face = x.face(f);
    const int n = static_cast<int>(face.size());
    // Start on a connecting edge so that node pairs line up.
    int start = -1;
    for (int i = 0; i < n; ++i)
      if (node[face[i]] != node[face[(i + 1) % n]]) {
        start = (i + 1) % n;
        break;
      }
    if (start < 0 || n % 2 != 0) throw Error(ErrorCode::WrongShape, "face does not alternate between contracted faces");
    Face g;
    for (int i = 0; i < n; i += 2) {
      const VertexId a = face[(start + i) % n], b = face[(start + i + 1) % n];
      if (node[a] != node[b]) throw Error(ErrorCode::WrongShape, "face does not alternate between contracted faces");
      g.push_back(node[a]);
    }
    faces.push_back(std::move(g));
  }
  return build_checked(nodes, std::move(faces), "inverse_truncation");
}

PolyhedralMap inverse_rectification(const PolyhedralMap& x, std::optional<int> node_size) {
  const VertexType t = require_semi_equivelar(x);
  const auto& seq = t.sequence();
  if (seq.size() != 4) throw Error(ErrorCode::WrongShape, "inverse rectification needs a degree-4 type, got " + t.str());
  const bool alternating = seq[0] == seq[2] && seq[1] == seq[3] && seq[0] != seq[1];
  if (!node_size && alternating) node_size = std::min(seq[0], seq[1]);

  std::vector<char> is_node(x.face_count(), 0);
  std::vector<char> is_other(x.face_count(), 0);
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    const auto& cyc = x.face_cycle(v).faces;
    std::vector<int> s;
    for (FaceId f : cyc) s.push_back(fsize(x, f));
    int r = -1;
    if (node_size) {
      // exactly one opposite pair of the forced size
      const bool p0 = s[0] == *node_size && s[2] == *node_size;
      const bool p1 = s[1] == *node_size && s[3] == *node_size;
      if (p0 != p1) r = p0 ? 0 : 1;
    } else {
      for (int i = 0; i < 4 && r < 0; ++i)
        if (s[i] == 4 && s[(i + 2) % 4] == 4 && s[(i + 1) % 4] != s[(i + 3) % 4]) r = i;
    }
    if (r < 0) throw Error(ErrorCode::WrongShape, "no opposite pair of node faces at vertex " + std::to_string(v) + " (" + t.str() + ")");
    is_node[cyc[r]] = is_node[cyc[(r + 2) % 4]] = 1;
    is_other[cyc[(r + 1) % 4]] = is_other[cyc[(r + 3) % 4]] = 1;
  }
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (is_node[f] == is_other[f]) throw Error(ErrorCode::WrongShape, "node faces are not consistent across vertices");
  }
  std::vector<int> node_id(x.face_count(), -1);
  int nodes = 0;
  for (FaceId f = 0; f < x.face_count(); ++f)
    if (is_node[f]) node_id[f] = nodes++;

  std::vector<Face> faces;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (is_node[f]) continue;
    const Face& face = x.face(f);
    const int n = static_cast<int>(face.size());
    Face g;
    for (int i = 0; i < n; ++i) {
      const FaceId across = x.opposite_face(f, face[i], face[(i + 1) % n]);
      if (!is_node[across]) throw Error(ErrorCode::WrongShape, "two non-node faces share an edge");
      g.push_back(node_id[across]);
    }
    faces.push_back(std::move(g));
  }
  return build_checked(nodes, std::move(faces), "inverse_rectification");
}

int EdgeColoring::count(EdgeColor c) const {
  return static_cast<int>(std::count(colors.begin(), colors.end(), c));
}

namespace {

int snub_polygon_size(const VertexType& t) {
  const auto rs = t.runs();
  if (rs.size() == 2) {
    for (int i = 0; i < 2; ++i)
      if (rs[i] == Run{3, 4} && rs[1 - i].count == 1 && rs[1 - i].size >= 4) return rs[1 - i].size;
  }
  return 0;
}

}  // namespace

EdgeColoring edge_coloring(const PolyhedralMap& x) {
  const VertexType t = require_semi_equivelar(x);
  const int q = snub_polygon_size(t);
  if (q == 0) throw Error(ErrorCode::WrongShape, "edge colouring needs type [3^4,q], got " + t.str());

  EdgeColoring out;
  out.colors.resize(x.edge_count());
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    const Edge& ed = x.edge(e);
    const bool tri0 = fsize(x, ed.faces[0]) == 3, tri1 = fsize(x, ed.faces[1]) == 3;
    out.colors[e] = (tri0 && tri1) ? EdgeColor::Blue : EdgeColor::Red;
  }

  // At each vertex, the face-cycle reads (Q, t1, t2, t3, t4). The blue edges
  // t1|t2 and t3|t4 leave three triangles on one side and one on the other.
  std::vector<std::array<VertexId, 2>> split(x.vertex_count());
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    const auto& cyc = x.face_cycle(v).faces;
    const auto ring = x.neighbors(v);
    int j = 0;
    while (fsize(x, cyc[j]) == 3) ++j;
    split[v] = {ring[(j + 1) % 5], ring[(j + 3) % 5]};
  }
  std::vector<int> per_vertex(x.vertex_count(), 0);
  for (EdgeId e = 0; e < x.edge_count(); ++e) {
    const Edge& ed = x.edge(e);
    if (out.colors[e] != EdgeColor::Blue) continue;
    const bool at_u = split[ed.u][0] == ed.v || split[ed.u][1] == ed.v;
    const bool at_v = split[ed.v][0] == ed.u || split[ed.v][1] == ed.u;
    if (at_u && at_v) {
      out.colors[e] = EdgeColor::DeepBlue;
      out.deep_blue.push_back(e);
      ++per_vertex[ed.u];
      ++per_vertex[ed.v];
    }
  }
  for (VertexId v = 0; v < x.vertex_count(); ++v) {
    if (per_vertex[v] != 1) {
      throw Error(ErrorCode::InternalError, "vertex " + std::to_string(v) + " meets " + std::to_string(per_vertex[v]) + " deep-blue edges");
    }
  }
  return out;
}

PolyhedralMap remove_deep_blue(const PolyhedralMap& x) {
  const EdgeColoring col = edge_coloring(x);
  std::vector<int> role(x.face_count(), 0);  // 0 keep, 1 becomes square, 2 drop
  std::vector<Face> squares(x.face_count());
  for (EdgeId e : col.deep_blue) {
    const Edge& ed = x.edge(e);
    const FaceId f = std::min(ed.faces[0], ed.faces[1]);
    const FaceId g = std::max(ed.faces[0], ed.faces[1]);
    Face tri = x.face(f);
    // Rotate f to (a, b, c) with {a, b} the deep-blue edge.
    while (!((tri[0] == ed.u || tri[0] == ed.v) && (tri[1] == ed.u || tri[1] == ed.v))) std::rotate(tri.begin(), tri.begin() + 1, tri.end());
    VertexId y = -1;
    for (VertexId w : x.face(g))
      if (w != ed.u && w != ed.v) y = w;
    squares[f] = {tri[1], tri[2], tri[0], y};
    role[f] = 1;
    role[g] = 2;
  }
  std::vector<Face> faces;
  for (FaceId f = 0; f < x.face_count(); ++f) {
    if (role[f] == 0) faces.push_back(x.face(f));
    if (role[f] == 1) faces.push_back(squares[f]);
  }
  return build_checked(x.vertex_count(), std::move(faces), "remove_deep_blue");
}

namespace {

void require_matching_shape(const VertexType& t) {
  const auto& s = t.sequence();
  const bool rco = s == std::vector<int>{3, 4, 4, 4};
  const bool rid = s == std::vector<int>{3, 4, 5, 4};
  if (!rco && !rid) throw Error(ErrorCode::WrongShape, "diagonal matching needs [3,4^3] or [3,4,5,4], got " + t.str());
}

std::vector<FaceId> eligible_squares(const PolyhedralMap& y) {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < y.face_count(); ++f) {
    const Face& face = y.face(f);
    if (face.size() != 4) continue;
    std::array<bool, 4> tri{};
    for (int i = 0; i < 4; ++i) tri[i] = fsize(y, y.opposite_face(f, face[i], face[(i + 1) % 4])) == 3;
    const int count = tri[0] + tri[1] + tri[2] + tri[3];
    if (count == 2 && tri[0] == tri[2]) out.push_back(f);
  }
  return out;
}

}  // namespace

std::vector<Diagonal> eligible_diagonals(const PolyhedralMap& y) {
  std::vector<Diagonal> out;
  for (FaceId f : eligible_squares(y)) {
    const Face& s = y.face(f);
    out.emplace_back(std::min(s[0], s[2]), std::max(s[0], s[2]));
    out.emplace_back(std::min(s[1], s[3]), std::max(s[1], s[3]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PolyhedralMap insert_diagonal_matching(const PolyhedralMap& y, Diagonal seed) {
  const VertexType t = require_semi_equivelar(y);
  require_matching_shape(t);

  const std::vector<FaceId> squares = eligible_squares(y);
  std::vector<int> index_of(y.face_count(), -1);
  for (std::size_t i = 0; i < squares.size(); ++i) index_of[squares[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> at_vertex(y.vertex_count());
  for (std::size_t i = 0; i < squares.size(); ++i)
    for (VertexId v : y.face(squares[i])) at_vertex[v].push_back(static_cast<int>(i));
  for (VertexId v = 0; v < y.vertex_count(); ++v) {
    if (at_vertex[v].size() != 2) throw Error(ErrorCode::WrongShape, "vertex " + std::to_string(v) + " is not in exactly two eligible squares");
  }

  // diag[s] = 0 joins positions 0,2; 1 joins positions 1,3.
  std::vector<int> diag(squares.size(), -1);
  int seed_square = -1;
  for (std::size_t i = 0; i < squares.size() && seed_square < 0; ++i) {
    const Face& s = y.face(squares[i]);
    const int pa = position(s, seed.first), pb = position(s, seed.second);
    if (pa >= 0 && pb >= 0 && (pa + 2) % 4 == pb) {
      seed_square = static_cast<int>(i);
      diag[i] = pa % 2;
    }
  }
  if (seed_square < 0) {
    throw Error(ErrorCode::NotEligibleSquare, "(" + std::to_string(seed.first) + "," + std::to_string(seed.second) + ") is not a diagonal of an eligible square");
  }

  // Each vertex is covered by exactly one chosen diagonal, so a diagonal in one
  // square forces the diagonal in the other square at each of its corners.
  std::deque<int> queue{seed_square};
  auto conflict = [](VertexId v) {
    return Error(ErrorCode::PropagationConflict, "diagonals disagree at vertex " + std::to_string(v));
  };
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const Face& face = y.face(squares[s]);
    for (int p = 0; p < 4; ++p) {
      const VertexId w = face[p];
      const bool covered_here = p % 2 == diag[s];
      for (int o : at_vertex[w]) {
        if (o == s) continue;
        const int po = position(y.face(squares[o]), w);
        const int required = covered_here ? (po + 1) % 2 : po % 2;
        if (diag[o] < 0) {
          diag[o] = required;
          queue.push_back(o);
        } else if (diag[o] != required) {
          throw conflict(w);
        }
      }
    }
  }
  if (std::find(diag.begin(), diag.end(), -1) != diag.end()) {
    throw Error(ErrorCode::PropagationConflict, "forcing did not reach every eligible square");
  }

  std::vector<Face> faces;
  for (FaceId f = 0; f < y.face_count(); ++f) {
    const int s = index_of[f];
    if (s < 0) {
      faces.push_back(y.face(f));
      continue;
    }
    const Face& q = y.face(f);
    const int a = diag[s];
    faces.push_back({q[a], q[a + 1], q[(a + 2) % 4]});
    faces.push_back({q[a], q[(a + 2) % 4], q[(a + 3) % 4]});
  }
  PolyhedralMap out = build_checked(y.vertex_count(), std::move(faces), "insert_diagonal_matching");
  const VertexType ot = require_semi_equivelar(out);
  if (snub_polygon_size(ot) == 0) throw Error(ErrorCode::PropagationConflict, "result has type " + ot.str());
  return out;
}

}  // namespace semap
