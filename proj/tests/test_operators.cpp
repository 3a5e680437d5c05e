#include <doctest.h>

#include <set>

#include "semap/catalog.hpp"
#include "semap/error.hpp"
#include "semap/operators.hpp"
#include "semap/symmetry.hpp"
#include "semap/vertex_type.hpp"
#include "support.hpp"

using namespace semap;

namespace {

VertexType T(const char* s) { return VertexType::parse(s); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InternalError;
}

const PolyhedralMap& M(const char* name) {
  static std::map<std::string, PolyhedralMap> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, catalog_entry(name).map).first;
  return it->second;
}

}  // namespace

TEST_CASE("truncation") {
  const PolyhedralMap t = truncate(M("tetrahedron"));
  CHECK(t.vertex_count() == 12);
  CHECK(require_semi_equivelar(t) == T("[3,6^2]"));
  const PolyhedralMap i = truncate(M("icosahedron"));
  CHECK(i.vertex_count() == 60);
  CHECK(require_semi_equivelar(i) == T("[5,6^2]"));
  const PolyhedralMap c = truncate(M("cuboctahedron"));
  CHECK(c.vertex_count() == 48);
  CHECK(require_semi_equivelar(c) == T("[4,6,8]"));
  CHECK(are_isomorphic(c, M("great-rhombicuboctahedron")));
  CHECK(are_isomorphic(truncate(M("cube")), M("truncated-cube")));
}

TEST_CASE("truncation counts cells: f0 = 2 f1, f2 = f0 + f2 of the source") {
  for (const char* name : {"cube", "dodecahedron", "prism-7", "antiprism-5"}) {
    const PolyhedralMap& x = M(name);
    const PolyhedralMap t = truncate(x);
    CHECK(t.vertex_count() == 2 * x.edge_count());
    CHECK(t.face_count() == x.vertex_count() + x.face_count());
    CHECK(t.euler_characteristic() == 2);
  }
}

TEST_CASE("rectification") {
  const PolyhedralMap c = rectify(M("cube"));
  CHECK(c.vertex_count() == 12);
  CHECK(require_semi_equivelar(c) == T("[3,4,3,4]"));
  CHECK(are_isomorphic(c, M("cuboctahedron")));
  const PolyhedralMap d = rectify(M("dodecahedron"));
  CHECK(d.vertex_count() == 30);
  CHECK(require_semi_equivelar(d) == T("[3,5,3,5]"));
  const PolyhedralMap r = rectify(M("icosidodecahedron"));
  CHECK(r.vertex_count() == 60);
  CHECK(require_semi_equivelar(r) == T("[3,4,5,4]"));
  CHECK(are_isomorphic(r, M("small-rhombicosidodecahedron")));
  CHECK(are_isomorphic(rectify(M("tetrahedron")), M("octahedron")));
}

TEST_CASE("duality") {
  const PolyhedralMap c = dual(M("octahedron"));
  CHECK(c.vertex_count() == 8);
  CHECK(require_semi_equivelar(c) == T("[4^3]"));
  CHECK(are_isomorphic(c, M("cube")));
  const PolyhedralMap d = dual(M("icosahedron"));
  CHECK(d.vertex_count() == 20);
  CHECK(are_isomorphic(d, M("dodecahedron")));
  CHECK(are_isomorphic(dual(dual(M("prism-5"))), M("prism-5")));
  const PolyhedralMap& s = M("snub-cube");
  const PolyhedralMap ds = dual(s);
  CHECK(ds.vertex_count() == s.face_count());
  CHECK(ds.face_count() == s.vertex_count());
  CHECK(ds.edge_count() == s.edge_count());
  // Duals of projective-plane maps stay on the projective plane.
  const PolyhedralMap hemi = rp2_catalog().front().map;
  CHECK(dual(hemi).euler_characteristic() == 1);
}

TEST_CASE("inverse truncation") {
  CHECK(are_isomorphic(inverse_truncation(M("truncated-icosahedron")), M("icosahedron")));
  CHECK(are_isomorphic(inverse_truncation(M("truncated-cube")), M("cube")));
  CHECK(are_isomorphic(inverse_truncation(M("truncated-octahedron")), M("octahedron")));
  CHECK(are_isomorphic(inverse_truncation(M("truncated-tetrahedron")), M("tetrahedron")));
  const PolyhedralMap g = inverse_truncation(M("great-rhombicosidodecahedron"));
  CHECK(are_isomorphic(g, M("icosidodecahedron")));
  CHECK(are_isomorphic(inverse_truncation(M("great-rhombicuboctahedron")), M("cuboctahedron")));
  // Relabelled input.
  CHECK(are_isomorphic(inverse_truncation(testing::shuffled(M("truncated-dodecahedron"), 3)), M("dodecahedron")));
  CHECK(code_of([] { inverse_truncation(M("cube")); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { inverse_truncation(M("snub-cube")); }) == ErrorCode::WrongShape);
}

TEST_CASE("inverse rectification") {
  CHECK(are_isomorphic(inverse_rectification(M("cuboctahedron")), M("cube")));
  CHECK(are_isomorphic(inverse_rectification(M("icosidodecahedron")), M("dodecahedron")));
  CHECK(are_isomorphic(inverse_rectification(M("small-rhombicosidodecahedron"), 4), M("icosidodecahedron")));
  CHECK(are_isomorphic(inverse_rectification(M("small-rhombicuboctahedron"), 4), M("cuboctahedron")));
  // Choosing the other colour class of a [p,q,p,q] map gives the dual.
  CHECK(are_isomorphic(inverse_rectification(M("cuboctahedron"), 4), M("octahedron")));
  CHECK(are_isomorphic(inverse_rectification(M("icosidodecahedron"), 5), M("icosahedron")));
  CHECK(are_isomorphic(inverse_rectification(M("cuboctahedron"), 3), M("cube")));
  CHECK(code_of([] { inverse_rectification(M("cube")); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { inverse_rectification(M("cuboctahedron"), 5); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { inverse_rectification(M("pseudo-rhombicuboctahedron"), 4); }) == ErrorCode::WrongShape);
}

TEST_CASE("p-gon adjacency is simple for [p,q^2], q >= 6") {
  for (const char* name : {"truncated-tetrahedron", "truncated-cube", "truncated-octahedron", "truncated-dodecahedron", "truncated-icosahedron"}) {
    const PolyhedralMap& m = M(name);
    const auto rs = require_semi_equivelar(m).runs();
    const int p = rs[0].count == 1 ? rs[0].size : rs[1].size;
    CHECK(polygon_adjacency_is_simple(m, p));
    // Every p-gon vertex meets exactly one link, so there are f0/2 links.
    CHECK(static_cast<int>(polygon_links(m, p).size()) == m.vertex_count() / 2);
  }
  // In a prism the two n-gons are joined n times.
  CHECK_FALSE(polygon_adjacency_is_simple(M("prism-6"), 6));
}

TEST_CASE("edge colouring of snub solids") {
  for (auto [name, deep] : {std::pair{"snub-cube", 12}, std::pair{"snub-dodecahedron", 30}}) {
    const PolyhedralMap& x = M(name);
    const EdgeColoring c = edge_coloring(x);
    CHECK(static_cast<int>(c.deep_blue.size()) == deep);
    CHECK(c.count(EdgeColor::DeepBlue) == deep);
    CHECK(c.count(EdgeColor::Red) + c.count(EdgeColor::Blue) + c.count(EdgeColor::DeepBlue) == x.edge_count());
    std::vector<int> per(x.vertex_count(), 0);
    for (EdgeId e : c.deep_blue) {
      CHECK(c.colors[e] == EdgeColor::DeepBlue);
      ++per[x.edge(e).u];
      ++per[x.edge(e).v];
      // deep-blue edges separate two triangles
      CHECK(x.face(x.edge(e).faces[0]).size() == 3);
      CHECK(x.face(x.edge(e).faces[1]).size() == 3);
    }
    for (int k : per) CHECK(k == 1);
  }
  CHECK(code_of([] { edge_coloring(M("icosahedron")); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { edge_coloring(M("antiprism-4")); }) == ErrorCode::WrongShape);
}

TEST_CASE("remove deep-blue edges") {
  const PolyhedralMap a = remove_deep_blue(M("snub-cube"));
  CHECK(a.vertex_count() == 24);
  CHECK(require_semi_equivelar(a) == T("[3,4^3]"));
  CHECK(are_isomorphic(a, M("small-rhombicuboctahedron")));
  const PolyhedralMap b = remove_deep_blue(M("snub-dodecahedron"));
  CHECK(b.vertex_count() == 60);
  CHECK(require_semi_equivelar(b) == T("[3,4,5,4]"));
  const PolyhedralMap c = remove_deep_blue(testing::shuffled(M("snub-cube"), 11));
  CHECK(are_isomorphic(c, M("small-rhombicuboctahedron")));
}

TEST_CASE("insert diagonal matching") {
  const PolyhedralMap& rco = M("small-rhombicuboctahedron");
  const auto diags = eligible_diagonals(rco);
  // 12 eligible squares, two diagonals each
  CHECK(diags.size() == 24);
  for (const Diagonal& d : diags) {
    const PolyhedralMap s = insert_diagonal_matching(rco, d);
    CHECK(require_semi_equivelar(s) == T("[3^4,4]"));
    CHECK(are_isomorphic(s, M("snub-cube")));
    CHECK(are_isomorphic(remove_deep_blue(s), rco));
  }
  const PolyhedralMap& rid = M("small-rhombicosidodecahedron");
  const PolyhedralMap s = insert_diagonal_matching(rid, eligible_diagonals(rid).front());
  CHECK(s.vertex_count() == 60);
  CHECK(require_semi_equivelar(s) == T("[3^4,5]"));
  CHECK(are_isomorphic(remove_deep_blue(s), rid));
  // The snub solids are chiral: the two classes of seeds give mirror images,
  // which are isomorphic as maps.
  const auto rd = eligible_diagonals(rid);
  CHECK(are_isomorphic(insert_diagonal_matching(rid, rd.front()), insert_diagonal_matching(rid, rd.back())));
}

TEST_CASE("insert diagonal matching errors") {
  const PolyhedralMap& rco = M("small-rhombicuboctahedron");
  // An edge of a square is not a diagonal.
  const Face sq = [&] {
    for (const Face& f : rco.faces())
      if (f.size() == 4) return f;
    return Face{};
  }();
  CHECK(code_of([&] { insert_diagonal_matching(rco, {std::min(sq[0], sq[1]), std::max(sq[0], sq[1])}); }) == ErrorCode::NotEligibleSquare);
  CHECK(code_of([] { insert_diagonal_matching(M("cube"), {0, 2}); }) == ErrorCode::WrongShape);
  // The pseudo map has the right type but its eligible squares do not cover
  // every vertex twice.
  const ErrorCode pc = code_of([] {
    const PolyhedralMap& p = M("pseudo-rhombicuboctahedron");
    const auto d = eligible_diagonals(p);
    insert_diagonal_matching(p, d.empty() ? Diagonal{0, 1} : d.front());
  });
  CHECK((pc == ErrorCode::WrongShape || pc == ErrorCode::PropagationConflict || pc == ErrorCode::NotEligibleSquare));
}
