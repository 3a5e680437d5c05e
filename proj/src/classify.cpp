#include "semap/classify.hpp"

#include <algorithm>
#include <map>

#include "semap/catalog.hpp"
#include "semap/operators.hpp"

namespace semap {

SquareTypeCounts square_type_counts(const PolyhedralMap& m) {
  const VertexType t = require_semi_equivelar(m);
  if (t.sequence() != std::vector<int>{3, 4, 4, 4} || m.vertex_count() != 24) {
    throw Error(ErrorCode::WrongShape, "square types need a 24-vertex [3,4^3] map, got " + std::to_string(m.vertex_count()) + " vertices of type " + t.str());
  }
  SquareTypeCounts c;
  for (FaceId f = 0; f < m.face_count(); ++f) {
    const Face& s = m.face(f);
    if (s.size() != 4) continue;
    int squares = 0;
    for (int i = 0; i < 4; ++i) squares += m.face(m.opposite_face(f, s[i], s[(i + 1) % 4])).size() == 4;
    if (squares == 2) ++c.s2;
    if (squares == 3) ++c.s3;
    if (squares == 4) ++c.s4;
  }
  return c;
}

namespace {

[[noreturn]] void violation(const PolyhedralMap& m, const std::string& why) {
  throw Error(ErrorCode::ClassificationViolation, why + "\n" + format_map(m));
}

const std::map<std::string, std::string>& truncation_parent() {
  static const std::map<std::string, std::string> t = {
      {"tetrahedron", "truncated-tetrahedron"},   {"cube", "truncated-cube"},
      {"octahedron", "truncated-octahedron"},     {"dodecahedron", "truncated-dodecahedron"},
      {"icosahedron", "truncated-icosahedron"},   {"cuboctahedron", "great-rhombicuboctahedron"},
      {"icosidodecahedron", "great-rhombicosidodecahedron"},
  };
  return t;
}

const std::map<std::string, std::string>& rectification_parent() {
  static const std::map<std::string, std::string> t = {
      {"cube", "cuboctahedron"},
      {"octahedron", "cuboctahedron"},
      {"dodecahedron", "icosidodecahedron"},
      {"icosahedron", "icosidodecahedron"},
      {"cuboctahedron", "small-rhombicuboctahedron"},
      {"icosidodecahedron", "small-rhombicosidodecahedron"},
  };
  return t;
}

const std::map<std::string, std::string>& snub_parent() {
  static const std::map<std::string, std::string> t = {
      {"small-rhombicuboctahedron", "snub-cube"},
      {"small-rhombicosidodecahedron", "snub-dodecahedron"},
  };
  return t;
}

bool is_truncation_shape(const VertexType& t) {
  const auto rs = t.runs();
  if (rs.size() == 2) {
    for (int i = 0; i < 2; ++i)
      if (rs[i].count == 1 && rs[1 - i].count == 2 && rs[1 - i].size >= 6 && rs[1 - i].size % 2 == 0) return true;
    return false;
  }
  return rs.size() == 3 && t.sequence()[0] == 4 && t.sequence()[1] % 2 == 0 && t.sequence()[2] % 2 == 0;
}

bool is_snub_shape(const VertexType& t) {
  const auto& s = t.sequence();
  return s.size() == 5 && s[0] == 3 && s[1] == 3 && s[2] == 3 && s[3] == 3 && s[4] >= 4;
}

// The two n-gons of a prism or antiprism, as (top, bottom).
std::pair<Face, Face> caps(const PolyhedralMap& m, int n) {
  std::vector<FaceId> big;
  for (FaceId f = 0; f < m.face_count(); ++f)
    if (static_cast<int>(m.face(f).size()) == n) big.push_back(f);
  if (big.size() != 2) violation(m, "expected two " + std::to_string(n) + "-gons, found " + std::to_string(big.size()));
  return {m.face(big[0]), m.face(big[1])};
}

std::string match_prism(const PolyhedralMap& m, int n) {
  auto [top, bottom] = caps(m, n);
  std::vector<int> label(m.vertex_count(), -1);
  for (int i = 0; i < n; ++i) label[top[i]] = i;
  for (int i = 0; i < n; ++i) {
    for (VertexId w : m.neighbors(top[i])) {
      if (label[w] >= 0 && label[w] < n) continue;
      if (label[w] >= 0) violation(m, "prism rung meets a vertex twice");
      label[w] = n + i;
    }
  }
  const std::string name = "prism-" + std::to_string(n);
  if (std::find(label.begin(), label.end(), -1) != label.end() || !is_isomorphism(m, prism(n).map, label)) {
    violation(m, "direct prism labelling failed");
  }
  return name;
}

std::string match_antiprism(const PolyhedralMap& m, int n) {
  auto [top, bottom] = caps(m, n);
  std::vector<char> on_top(m.vertex_count(), 0);
  for (VertexId v : top) on_top[v] = 1;
  auto lower = [&](VertexId u) {
    std::vector<VertexId> out;
    for (VertexId w : m.neighbors(u))
      if (!on_top[w]) out.push_back(w);
    if (out.size() != 2) violation(m, "antiprism vertex without two lower neighbours");
    return out;
  };
  // b_0 is the lower neighbour of u_0 not shared with u_1.
  const auto l0 = lower(top[0]);
  const auto l1 = lower(top[1]);
  VertexId b = std::find(l1.begin(), l1.end(), l0[0]) == l1.end() ? l0[0] : l0[1];
  std::vector<int> label(m.vertex_count(), -1);
  for (int i = 0; i < n; ++i) {
    label[top[i]] = i;
    if (label[b] >= 0) violation(m, "antiprism lower ring revisits a vertex");
    label[b] = n + i;
    const auto li = lower(top[i]);
    b = li[0] == b ? li[1] : li[0];
  }
  if (!is_isomorphism(m, antiprism(n).map, label)) violation(m, "direct antiprism labelling failed");
  return "antiprism-" + std::to_string(n);
}

std::string base_case(const PolyhedralMap& m, const std::vector<std::string>& names) {
  for (const auto& name : names) {
    const CatalogEntry e = catalog_entry(name);
    if (e.map.vertex_count() == m.vertex_count() && are_isomorphic(e.map, m)) return name;
  }
  violation(m, "no base entry matches");
}

std::string lookup(const std::map<std::string, std::string>& table, const std::string& parent, const PolyhedralMap& m) {
  auto it = table.find(parent);
  if (it == table.end()) violation(m, "reduction produced '" + parent + "', which has no known preimage");
  return it->second;
}

std::string reduce(const PolyhedralMap& m, std::vector<std::string>& chain) {
  const VertexType t = require_semi_equivelar(m);
  const auto& seq = t.sequence();
  const auto rs = t.runs();
  try {
    if (rs.size() == 1) {
      chain.push_back("base");
      return base_case(m, platonic_names());
    }
    if (is_prism_family(t) || seq == std::vector<int>{3, 4, 4}) {
      chain.push_back("prism");
      return match_prism(m, seq[0] == 3 ? 3 : seq.back());
    }
    if (is_antiprism_family(t)) {
      chain.push_back("antiprism");
      return match_antiprism(m, seq.back());
    }
    if (seq == std::vector<int>{3, 4, 4, 4}) {
      const SquareTypeCounts c = square_type_counts(m);
      if (c.s2 == 8 && c.s3 == 8 && c.s4 == 2) {
        chain.push_back("square-types(8,8,2)");
        return base_case(m, {"pseudo-rhombicuboctahedron"});
      }
      if (!(c.s2 == 12 && c.s3 == 0 && c.s4 == 6)) violation(m, "unexpected square-type counts");
      chain.push_back("square-types(12,0,6)");
    }
    if (is_snub_shape(t)) {
      chain.push_back("remove-deep-blue");
      return lookup(snub_parent(), reduce(remove_deep_blue(m), chain), m);
    }
    if (t.degree() == 3 && is_truncation_shape(t)) {
      chain.push_back("inverse-truncation");
      return lookup(truncation_parent(), reduce(inverse_truncation(m), chain), m);
    }
    if (t.degree() == 4) {
      chain.push_back("inverse-rectification");
      return lookup(rectification_parent(), reduce(inverse_rectification(m), chain), m);
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ClassificationViolation) throw;
    violation(m, std::string("reduction failed: ") + e.what());
  }
  violation(m, "no reduction applies to type " + t.str());
}

std::vector<std::string> direct_candidates(const PolyhedralMap& m, const VertexType& t) {
  std::vector<std::string> names;
  for (const auto& n : platonic_names()) names.push_back(n);
  for (const auto& n : archimedean_names()) names.push_back(n);
  names.emplace_back("pseudo-rhombicuboctahedron");
  const int big = t.sequence().back();
  if (is_prism_family(t) || t.sequence() == std::vector<int>{3, 4, 4}) names.push_back("prism-" + std::to_string(t.sequence() == std::vector<int>{3, 4, 4} ? 3 : big));
  if (is_antiprism_family(t)) names.push_back("antiprism-" + std::to_string(big));
  std::vector<std::string> out;
  for (const auto& n : names) {
    const CatalogEntry e = catalog_entry(n);
    if (e.type == t && e.vertex_count == m.vertex_count()) out.push_back(n);
  }
  return out;
}

}  // namespace

Verdict identify(const PolyhedralMap& m, IdentifyMode mode) {
  if (m.euler_characteristic() != 2) {
    throw Error(ErrorCode::WrongSphere, "identify needs a sphere map, got Euler characteristic " + std::to_string(m.euler_characteristic()));
  }
  const VertexType t = require_semi_equivelar(m);
  int predicted = 0;
  try {
    predicted = predicted_vertex_count(t);
  } catch (const Error& e) {
    violation(m, e.what());
  }
  if (predicted != m.vertex_count()) {
    violation(m, "type " + t.str() + " predicts " + std::to_string(predicted) + " vertices, map has " + std::to_string(m.vertex_count()));
  }

  Verdict v;
  if (mode == IdentifyMode::Reduction) {
    v.name = reduce(m, v.chain);
  } else {
    v.chain.push_back("direct");
    for (const auto& n : direct_candidates(m, t)) {
      if (are_isomorphic(m, catalog_entry(n).map)) {
        v.name = n;
        break;
      }
    }
    if (v.name.empty()) violation(m, "no catalog entry of type " + t.str() + " is isomorphic");
  }

  const CatalogEntry e = catalog_entry(v.name);
  auto w = isomorphism(m, e.map);
  if (!w || !is_isomorphism(m, e.map, *w)) violation(m, "certificate does not match " + v.name);
  v.witness = std::move(*w);
  return v;
}

}  // namespace semap
