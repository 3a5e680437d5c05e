#include "semap/map.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

namespace semap {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidVertexId: return "InvalidVertexId";
    case ErrorCode::FaceTooShort: return "FaceTooShort";
    case ErrorCode::RepeatedVertexInFace: return "RepeatedVertexInFace";
    case ErrorCode::EdgeDegreeNotTwo: return "EdgeDegreeNotTwo";
    case ErrorCode::NonPolyhedralIntersection: return "NonPolyhedralIntersection";
    case ErrorCode::PinchedVertex: return "PinchedVertex";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::UnsupportedSurface: return "UnsupportedSurface";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NonPositiveDefect: return "NonPositiveDefect";
    case ErrorCode::NonIntegerCount: return "NonIntegerCount";
    case ErrorCode::MaxGonTooSmall: return "MaxGonTooSmall";
    case ErrorCode::WrongShape: return "WrongShape";
    case ErrorCode::MultiEdgeDetected: return "MultiEdgeDetected";
    case ErrorCode::NotEligibleSquare: return "NotEligibleSquare";
    case ErrorCode::PropagationConflict: return "PropagationConflict";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::NonPolyhedralQuotient: return "NonPolyhedralQuotient";
    case ErrorCode::NotFreeInvolution: return "NotFreeInvolution";
    case ErrorCode::AlreadySpherical: return "AlreadySpherical";
    case ErrorCode::NotSemiEquivelar: return "NotSemiEquivelar";
    case ErrorCode::WrongSphere: return "WrongSphere";
    case ErrorCode::ClassificationViolation: return "ClassificationViolation";
    case ErrorCode::CountMismatch: return "CountMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

namespace {

std::string face_str(const Face& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << f[i];
  return os.str();
}

// Position of v in f, or -1.
int position(const Face& f, VertexId v) {
  auto it = std::find(f.begin(), f.end(), v);
  return it == f.end() ? -1 : static_cast<int>(it - f.begin());
}

bool adjacent_in(const Face& f, VertexId a, VertexId b) {
  const int n = static_cast<int>(f.size());
  const int i = position(f, a);
  if (i < 0) return false;
  return f[(i + 1) % n] == b || f[(i + n - 1) % n] == b;
}

}  // namespace

Face normalized_face(std::span<const VertexId> face) {
  const std::size_t n = face.size();
  Face best(face.begin(), face.end());
  Face cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        cand[i] = dir == 0 ? face[(s + i) % n] : face[(s + n - i) % n];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::vector<Face> normalized_face_set(std::span<const Face> faces) {
  std::vector<Face> out;
  out.reserve(faces.size());
  for (const auto& f : faces) out.push_back(normalized_face(f));
  std::sort(out.begin(), out.end());
  return out;
}

PolyhedralMap PolyhedralMap::build(std::vector<Face> faces) {
  int max_id = -1;
  for (const auto& f : faces)
    for (VertexId v : f) max_id = std::max(max_id, v);
  return build(max_id + 1, std::move(faces));
}

PolyhedralMap PolyhedralMap::build(int vertex_count, std::vector<Face> faces) {
  if (faces.empty()) throw Error(ErrorCode::FaceTooShort, "empty face list");
  if (vertex_count <= 0) throw Error(ErrorCode::InvalidVertexId, "vertex count must be positive");

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const Face& f = faces[fi];
    if (f.size() < 3) throw Error(ErrorCode::FaceTooShort, "face " + std::to_string(fi) + " has fewer than 3 vertices");
    for (VertexId v : f) {
      if (v < 0 || v >= vertex_count) {
        throw Error(ErrorCode::InvalidVertexId, "vertex id " + std::to_string(v) + " out of range in face " + std::to_string(fi));
      }
    }
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::RepeatedVertexInFace, "face " + face_str(f));
    }
  }

  PolyhedralMap m;
  m.vertex_count_ = vertex_count;
  m.faces_ = std::move(faces);
  const auto& fs = m.faces_;
  const int nf = static_cast<int>(fs.size());

  // A doubled face makes each of its edges lie in the same polygon twice.
  {
    std::vector<std::pair<Face, int>> norm;
    norm.reserve(fs.size());
    for (int f = 0; f < nf; ++f) norm.emplace_back(normalized_face(fs[f]), f);
    std::sort(norm.begin(), norm.end());
    for (std::size_t i = 1; i < norm.size(); ++i) {
      if (norm[i].first == norm[i - 1].first) {
        throw Error(ErrorCode::EdgeDegreeNotTwo, "face " + face_str(norm[i].first) + " appears twice");
      }
    }
  }

  // Edges, in order of (min, max) endpoint.
  std::vector<std::vector<FaceId>> vertex_faces(vertex_count);
  std::vector<std::tuple<VertexId, VertexId, FaceId>> halfedges;
  for (int f = 0; f < nf; ++f) {
    const int n = static_cast<int>(fs[f].size());
    for (int i = 0; i < n; ++i) {
      VertexId a = fs[f][i], b = fs[f][(i + 1) % n];
      halfedges.emplace_back(std::min(a, b), std::max(a, b), f);
      vertex_faces[a].push_back(f);
    }
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (vertex_faces[v].empty()) {
      throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " lies in no face");
    }
  }
  std::sort(halfedges.begin(), halfedges.end());
  m.incident_.assign(vertex_count, {});
  for (std::size_t i = 0; i < halfedges.size();) {
    std::size_t j = i;
    while (j < halfedges.size() && std::get<0>(halfedges[j]) == std::get<0>(halfedges[i]) &&
           std::get<1>(halfedges[j]) == std::get<1>(halfedges[i])) {
      ++j;
    }
    const auto [a, b, f0] = halfedges[i];
    if (j - i != 2) {
      throw Error(ErrorCode::EdgeDegreeNotTwo,
                  "edge " + std::to_string(a) + "-" + std::to_string(b) + " lies in " + std::to_string(j - i) + " face(s)");
    }
    const EdgeId e = static_cast<EdgeId>(m.edges_.size());
    m.edges_.push_back(Edge{a, b, {f0, std::get<2>(halfedges[i + 1])}});
    m.incident_[a].emplace_back(b, e);
    m.incident_[b].emplace_back(a, e);
    i = j;
  }

  // Face-cycles: walk around each vertex through shared edges.
  m.cycles_.resize(vertex_count);
  m.rings_.resize(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto& inc = vertex_faces[v];
    std::sort(inc.begin(), inc.end());
    FaceCycle cyc{v, {}};
    std::vector<VertexId> ring;
    FaceId start = inc.front();
    FaceId cur = start;
    const Face& sf = fs[start];
    VertexId through = sf[(position(sf, v) + 1) % sf.size()];
    do {
      cyc.faces.push_back(cur);
      ring.push_back(through);
      const FaceId next = m.opposite_face(cur, v, through);
      const Face& nf_ = fs[next];
      const int p = position(nf_, v);
      const int n = static_cast<int>(nf_.size());
      const VertexId a = nf_[(p + 1) % n], b = nf_[(p + n - 1) % n];
      through = (a == through) ? b : a;
      cur = next;
      if (cyc.faces.size() > inc.size()) break;
    } while (cur != start);
    if (cyc.faces.size() != inc.size()) {
      throw Error(ErrorCode::PinchedVertex, "faces around vertex " + std::to_string(v) + " do not form a single cycle");
    }
    m.cycles_[v] = std::move(cyc);
    m.rings_[v] = std::move(ring);
  }

  // Any two faces meet in nothing, one vertex, or one edge.
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& inc = vertex_faces[v];
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const Face& f = fs[inc[i]];
        const Face& g = fs[inc[j]];
        std::vector<VertexId> common;
        for (VertexId x : f)
          if (position(g, x) >= 0) common.push_back(x);
        std::sort(common.begin(), common.end());
        if (common.front() != v) continue;  // pair handled at its least shared vertex
        if (common.size() == 1) continue;
        if (common.size() == 2 && adjacent_in(f, common[0], common[1]) && adjacent_in(g, common[0], common[1])) continue;
        throw Error(ErrorCode::NonPolyhedralIntersection, "faces " + face_str(f) + " and " + face_str(g));
      }
    }
  }

  // Connectivity of the edge graph.
  {
    std::vector<char> seen(vertex_count, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (auto [y, e] : m.incident_[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          ++count;
          q.push(y);
        }
      }
    }
    if (count != vertex_count) throw Error(ErrorCode::Disconnected, "edge graph is not connected");
  }

  const int chi = m.euler_characteristic();
  if (chi != 1 && chi != 2) {
    throw Error(ErrorCode::UnsupportedSurface, "Euler characteristic " + std::to_string(chi));
  }

  // Orientation by propagating face signs across edges; a conflict proves
  // non-orientability.
  {
    std::vector<int> sign(nf, 0);
    bool ok = true;
    std::queue<FaceId> q;
    sign[0] = 1;
    q.push(0);
    while (!q.empty() && ok) {
      FaceId f = q.front();
      q.pop();
      const Face& face = fs[f];
      const int n = static_cast<int>(face.size());
      for (int i = 0; i < n && ok; ++i) {
        const VertexId a = face[i], b = face[(i + 1) % n];
        const FaceId g = m.opposite_face(f, a, b);
        // In f (with its sign) the edge runs a->b; g must run it b->a.
        const int p = position(fs[g], a);
        const int gn = static_cast<int>(fs[g].size());
        const bool g_forward = fs[g][(p + 1) % gn] == b;
        const int want = g_forward ? -sign[f] : sign[f];
        if (sign[g] == 0) {
          sign[g] = want;
          q.push(g);
        } else if (sign[g] != want) {
          ok = false;
        }
      }
    }
    if (ok) m.face_signs_ = std::move(sign);
  }
  if (chi == 2 && !m.orientable()) {
    throw Error(ErrorCode::UnsupportedSurface, "non-orientable surface with Euler characteristic 2");
  }
  return m;
}

std::optional<EdgeId> PolyhedralMap::edge_id(VertexId a, VertexId b) const {
  if (a < 0 || a >= vertex_count_) return std::nullopt;
  for (auto [y, e] : incident_[a])
    if (y == b) return e;
  return std::nullopt;
}

FaceId PolyhedralMap::opposite_face(FaceId f, VertexId a, VertexId b) const {
  const auto e = edge_id(a, b);
  if (!e) throw Error(ErrorCode::InternalError, "no edge " + std::to_string(a) + "-" + std::to_string(b));
  const Edge& ed = edges_[*e];
  return ed.faces[0] == f ? ed.faces[1] : ed.faces[0];
}

PolyhedralMap relabel(const PolyhedralMap& m, std::span<const VertexId> perm) {
  std::vector<Face> faces = m.faces();
  for (auto& f : faces)
    for (auto& v : f) v = perm[v];
  return build_map(m.vertex_count(), std::move(faces));
}

namespace {

bool parse_int(std::string_view tok, long long& out) {
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, out);
  return ec == std::errc() && p == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r')) ++j;
    if (j > i) toks.push_back(line.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

PolyhedralMap parse_map(std::string_view text) {
  std::optional<long long> header;
  std::vector<Face> faces;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto toks = split_ws(line);
    if (toks.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    const std::string where = "line " + std::to_string(line_no);
    if (!header) {
      long long n = 0;
      if (toks.size() != 2 || toks[0] != "map" || !parse_int(toks[1], n) || n <= 0) {
        throw Error(ErrorCode::ParseError, where + ": expected 'map <f0>'");
      }
      header = n;
    } else {
      if (toks[0] != "f") throw Error(ErrorCode::ParseError, where + ": expected face line 'f v1 ... vk'");
      Face f;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        long long v = 0;
        if (!parse_int(toks[i], v) || v < 0 || v > 1'000'000'000) {
          throw Error(ErrorCode::ParseError, where + ": bad vertex id '" + std::string(toks[i]) + "'");
        }
        f.push_back(static_cast<VertexId>(v));
      }
      faces.push_back(std::move(f));
    }
    if (nl == text.size()) break;
  }
  if (!header) throw Error(ErrorCode::ParseError, "missing 'map <f0>' header");
  if (*header > 1'000'000'000) throw Error(ErrorCode::ParseError, "vertex count too large");
  return build_map(static_cast<int>(*header), std::move(faces));
}

PolyhedralMap read_map(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_map(text);
}

std::string format_map(const PolyhedralMap& m) {
  std::ostringstream os;
  write_map(os, m);
  return os.str();
}

void write_map(std::ostream& out, const PolyhedralMap& m) {
  out << "map " << m.vertex_count() << '\n';
  for (const auto& f : m.faces()) {
    out << 'f';
    for (VertexId v : f) out << ' ' << v;
    out << '\n';
  }
}

}  // namespace semap
