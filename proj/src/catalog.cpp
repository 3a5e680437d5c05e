#include "semap/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <ostream>
#include <set>

#include "semap/classify.hpp"
#include "semap/operators.hpp"
#include "semap/symmetry.hpp"

namespace semap {

namespace {

VertexType vt(std::initializer_list<int> seq) {
  std::vector<int> v(seq);
  return VertexType::normalize(v);
}

CatalogEntry make_entry(std::string name, PolyhedralMap m, VertexType expected, std::string recipe) {
  const VertexType actual = require_semi_equivelar(m);
  if (actual != expected) {
    throw Error(ErrorCode::InternalError, name + " has type " + actual.str() + ", expected " + expected.str());
  }
  const int count = m.euler_characteristic() == 2 ? predicted_vertex_count(expected) : predicted_vertex_count(expected) / 2;
  if (m.vertex_count() != count) {
    throw Error(ErrorCode::InternalError, name + " has " + std::to_string(m.vertex_count()) + " vertices, expected " + std::to_string(count));
  }
  return CatalogEntry{std::move(name), std::move(m), std::move(expected), count, std::move(recipe)};
}

PolyhedralMap tetrahedron_map() { return build_map(4, {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}}); }

PolyhedralMap octahedron_map() {
  return build_map(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {1, 5, 2}, {2, 5, 3}, {3, 5, 4}, {4, 5, 1}});
}

PolyhedralMap icosahedron_map() {
  // 0 and 11 are the poles; 1..5 and 6..10 the two staggered rings.
  std::vector<Face> faces;
  for (int i = 0; i < 5; ++i) {
    const int u = 1 + i, u1 = 1 + (i + 1) % 5, l = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back({0, u, u1});
    faces.push_back({u, l, u1});
    faces.push_back({u1, l, l1});
    faces.push_back({11, l1, l});
  }
  return build_map(12, std::move(faces));
}

PolyhedralMap prism_map(int n) {
  std::vector<Face> faces;
  Face top, bottom;
  for (int i = 0; i < n; ++i) top.push_back(i);
  for (int i = n - 1; i >= 0; --i) bottom.push_back(n + i);
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) faces.push_back({(i + 1) % n, i, n + i, n + (i + 1) % n});
  return build_map(2 * n, std::move(faces));
}

PolyhedralMap antiprism_map(int n) {
  std::vector<Face> faces;
  Face top, bottom;
  for (int i = 0; i < n; ++i) top.push_back(i);
  for (int i = n - 1; i >= 0; --i) bottom.push_back(n + i);
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < n; ++i) {
    const int u = i, u1 = (i + 1) % n, b = n + i, b1 = n + (i + 1) % n;
    faces.push_back({u, b, b1});
    faces.push_back({u, b1, u1});
  }
  return build_map(2 * n, std::move(faces));
}

std::optional<int> family_index(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const std::string_view digits = name.substr(prefix.size());
  int n = 0;
  auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) return std::nullopt;
  return n;
}

struct ArchimedeanRecipe {
  const char* name;
  const char* op;
  const char* source;
  std::vector<int> type;
};

const std::vector<ArchimedeanRecipe>& recipes() {
  static const std::vector<ArchimedeanRecipe> table = {
      {"truncated-tetrahedron", "truncate", "tetrahedron", {3, 6, 6}},
      {"cuboctahedron", "rectify", "cube", {3, 4, 3, 4}},
      {"truncated-cube", "truncate", "cube", {3, 8, 8}},
      {"truncated-octahedron", "truncate", "octahedron", {4, 6, 6}},
      {"small-rhombicuboctahedron", "rectify", "cuboctahedron", {3, 4, 4, 4}},
      {"great-rhombicuboctahedron", "truncate", "cuboctahedron", {4, 6, 8}},
      {"snub-cube", "insert_matching", "small-rhombicuboctahedron", {3, 3, 3, 3, 4}},
      {"icosidodecahedron", "rectify", "dodecahedron", {3, 5, 3, 5}},
      {"truncated-dodecahedron", "truncate", "dodecahedron", {3, 10, 10}},
      {"truncated-icosahedron", "truncate", "icosahedron", {5, 6, 6}},
      {"small-rhombicosidodecahedron", "rectify", "icosidodecahedron", {3, 4, 5, 4}},
      {"great-rhombicosidodecahedron", "truncate", "icosidodecahedron", {4, 6, 10}},
      {"snub-dodecahedron", "insert_matching", "small-rhombicosidodecahedron", {3, 3, 3, 3, 5}},
  };
  return table;
}

std::mutex cache_mu;
std::map<std::string, CatalogEntry, std::less<>> cache;

CatalogEntry build_entry(std::string_view name);
CatalogEntry build_pseudo();

CatalogEntry cached(std::string_view name) {
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  CatalogEntry e = build_entry(name);
  std::lock_guard<std::mutex> lock(cache_mu);
  return cache.emplace(std::string(name), std::move(e)).first->second;
}

CatalogEntry build_entry(std::string_view name) {
  const std::string s(name);
  if (s == "tetrahedron") return make_entry(s, tetrahedron_map(), vt({3, 3, 3}), "platonic");
  if (s == "octahedron") return make_entry(s, octahedron_map(), vt({3, 3, 3, 3}), "platonic");
  if (s == "icosahedron") return make_entry(s, icosahedron_map(), vt({3, 3, 3, 3, 3}), "platonic");
  if (s == "cube") return make_entry(s, prism_map(4), vt({4, 4, 4}), "prism(4)");
  if (s == "dodecahedron") return make_entry(s, dual(cached("icosahedron").map), vt({5, 5, 5}), "dual(icosahedron)");
  if (s == "pseudo-rhombicuboctahedron") return build_pseudo();
  for (const auto& r : recipes()) {
    if (s != r.name) continue;
    const PolyhedralMap src = cached(r.source).map;
    const std::string op = r.op;
    PolyhedralMap m = op == "truncate" ? truncate(src)
                      : op == "rectify" ? rectify(src)
                                        : insert_diagonal_matching(src, eligible_diagonals(src).front());
    return make_entry(s, std::move(m), VertexType::normalize(r.type), op + "(" + r.source + ")");
  }
  if (auto n = family_index(s, "prism-")) {
    if (*n < 3) throw Error(ErrorCode::NTooSmall, "prism needs n >= 3");
    const VertexType t = *n == 4 ? vt({4, 4, 4}) : vt({4, 4, *n});
    return make_entry(s, prism_map(*n), t, "prism(" + std::to_string(*n) + ")");
  }
  if (auto n = family_index(s, "antiprism-")) {
    if (*n < 3) throw Error(ErrorCode::NTooSmall, "antiprism needs n >= 3");
    const VertexType t = *n == 3 ? vt({3, 3, 3, 3}) : vt({3, 3, 3, *n});
    return make_entry(s, antiprism_map(*n), t, "antiprism(" + std::to_string(*n) + ")");
  }
  if (s.rfind("rp2-", 0) == 0) {
    const std::string src = s.substr(4);
    const auto& ok = rp2_sources();
    if (std::find(ok.begin(), ok.end(), src) == ok.end()) throw Error(ErrorCode::UnknownName, "no projective-plane entry '" + s + "'");
    const CatalogEntry base = cached(src);
    const auto invs = free_involutions(base.map);
    if (invs.empty()) throw Error(ErrorCode::InternalError, src + " has no free involution");
    return make_entry(s, quotient(base.map, invs.front()), base.type, "quotient(" + src + ")");
  }
  throw Error(ErrorCode::UnknownName, "unknown catalog name '" + s + "'");
}

}  // namespace

const std::vector<std::string>& platonic_names() {
  static const std::vector<std::string> names = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron"};
  return names;
}

const std::vector<std::string>& archimedean_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& r : recipes()) v.emplace_back(r.name);
    return v;
  }();
  return names;
}

const std::vector<std::string>& rp2_sources() {
  static const std::vector<std::string> names = {
      "icosahedron",          "dodecahedron",           "truncated-octahedron",         "icosidodecahedron",
      "small-rhombicuboctahedron", "great-rhombicuboctahedron", "small-rhombicosidodecahedron",
      "great-rhombicosidodecahedron", "truncated-dodecahedron", "truncated-icosahedron"};
  return names;
}

CatalogEntry platonic(std::string_view name) {
  const auto& names = platonic_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::UnknownName, "not a Platonic solid: '" + std::string(name) + "'");
  }
  return cached(name);
}

CatalogEntry archimedean(std::string_view name) {
  const auto& names = archimedean_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    throw Error(ErrorCode::UnknownName, "not an Archimedean solid: '" + std::string(name) + "'");
  }
  return cached(name);
}

CatalogEntry prism(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "prism needs n >= 3");
  return cached("prism-" + std::to_string(n));
}

CatalogEntry antiprism(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "antiprism needs n >= 3");
  return cached("antiprism-" + std::to_string(n));
}

CatalogEntry catalog_entry(std::string_view name) { return cached(name); }

CatalogEntry pseudo_rhombicuboctahedron() { return cached("pseudo-rhombicuboctahedron"); }

namespace {

CatalogEntry build_pseudo() {
  const PolyhedralMap rco = cached("small-rhombicuboctahedron").map;

  // A square meeting four other squares, with the eight faces around it.
  auto square_neighbors = [&](FaceId f) {
    const Face& s = rco.face(f);
    int count = 0;
    for (int i = 0; i < 4; ++i) count += rco.face(rco.opposite_face(f, s[i], s[(i + 1) % 4])).size() == 4;
    return count;
  };
  FaceId beta = 0;
  while (rco.face(beta).size() != 4 || square_neighbors(beta) != 4) ++beta;
  const Face& b = rco.face(beta);
  std::vector<char> in_cap(rco.face_count(), 0);
  for (FaceId f = 0; f < rco.face_count(); ++f)
    for (VertexId v : rco.face(f))
      if (std::find(b.begin(), b.end(), v) != b.end()) in_cap[f] = 1;

  // Boundary octagon of the cap.
  std::map<VertexId, std::vector<VertexId>> rim;
  for (const Edge& e : rco.edges()) {
    if (in_cap[e.faces[0]] != in_cap[e.faces[1]]) {
      rim[e.u].push_back(e.v);
      rim[e.v].push_back(e.u);
    }
  }
  std::vector<VertexId> cycle{rim.begin()->first};
  VertexId prev = cycle[0];
  VertexId cur = std::min(rim[cycle[0]][0], rim[cycle[0]][1]);
  while (cur != cycle[0]) {
    cycle.push_back(cur);
    const auto& nb = rim[cur];
    const VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != 8 || rim.size() != 8) throw Error(ErrorCode::InternalError, "cap boundary is not an octagon");

  // Reattach the cap turned by one rim step.
  std::vector<VertexId> turn(rco.vertex_count());
  for (VertexId v = 0; v < rco.vertex_count(); ++v) turn[v] = v;
  for (std::size_t i = 0; i < cycle.size(); ++i) turn[cycle[i]] = cycle[(i + 1) % cycle.size()];
  std::vector<Face> faces;
  for (FaceId f = 0; f < rco.face_count(); ++f) {
    Face g = rco.face(f);
    if (in_cap[f])
      for (VertexId& v : g) v = turn[v];
    faces.push_back(std::move(g));
  }
  CatalogEntry e = make_entry("pseudo-rhombicuboctahedron", build_map(rco.vertex_count(), std::move(faces)), vt({3, 4, 4, 4}),
                              "gyrate(small-rhombicuboctahedron)");
  const SquareTypeCounts c = square_type_counts(e.map);
  if (c.s2 != 8 || c.s3 != 8 || c.s4 != 2 || are_isomorphic(e.map, rco)) {
    throw Error(ErrorCode::InternalError, "gyrated cap does not give the pseudo-rhombicuboctahedron");
  }
  return e;
}

}  // namespace

std::vector<CatalogEntry> sphere_catalog(int max_gon) {
  if (max_gon < 12) throw Error(ErrorCode::MaxGonTooSmall, "max_gon must be at least 12");
  std::vector<std::string> names;
  for (const auto& n : platonic_names()) names.push_back(n);
  for (const auto& n : archimedean_names()) names.push_back(n);
  names.emplace_back("pseudo-rhombicuboctahedron");
  for (int n = 3; n <= max_gon; ++n)
    if (n != 4) names.push_back("prism-" + std::to_string(n));
  for (int n = 4; n <= max_gon; ++n) names.push_back("antiprism-" + std::to_string(n));
  std::vector<CatalogEntry> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(cached(n));
  return out;
}

std::vector<CatalogEntry> rp2_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& s : rp2_sources()) out.push_back(cached("rp2-" + s));
  return out;
}

void write_manifest(std::ostream& out, const std::vector<CatalogEntry>& entries) {
  for (const auto& e : entries) out << e.name << '\t' << e.type.str() << '\t' << e.vertex_count << '\t' << e.recipe << '\n';
}

}  // namespace semap
