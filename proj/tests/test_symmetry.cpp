#include <doctest.h>

#include <cstdlib>
#include <set>

#include "semap/catalog.hpp"
#include "semap/error.hpp"
#include "semap/parallel.hpp"
#include "semap/symmetry.hpp"
#include "semap/vertex_type.hpp"
#include "support.hpp"

using namespace semap;

namespace {

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

TEST_CASE("flag moves are involutions without fixed points") {
  for (const char* name : {"tetrahedron", "prism-5", "snub-cube", "pseudo-rhombicuboctahedron"}) {
    const PolyhedralMap& m = M(name);
    const FlagSystem fs(m);
    int total = 0;
    for (const Face& f : m.faces()) total += 2 * static_cast<int>(f.size());
    CHECK(fs.size() == total);
    for (int x = 0; x < fs.size(); ++x)
      for (int k = 0; k < 3; ++k) {
        CHECK(fs.move(x, k) != x);
        CHECK(fs.move(fs.move(x, k), k) == x);
      }
    // Moves 0 and 2 commute.
    for (int x = 0; x < fs.size(); ++x) CHECK(fs.move(fs.move(x, 0), 2) == fs.move(fs.move(x, 2), 0));
  }
}

TEST_CASE("certificates are label invariant") {
  const PolyhedralMap& c = M("cube");
  const auto a = canonical_certificate(testing::shuffled(c, 1));
  const auto b = canonical_certificate(testing::shuffled(c, 2));
  CHECK(a == b);
  CHECK(a.canonical_label.size() == 8);
  CHECK_FALSE(canonical_certificate(c) == canonical_certificate(M("octahedron")));
  CHECK_FALSE(canonical_certificate(M("small-rhombicuboctahedron")) == canonical_certificate(M("pseudo-rhombicuboctahedron")));
  for (const char* name : {"snub-dodecahedron", "great-rhombicosidodecahedron", "antiprism-12"}) {
    const PolyhedralMap& m = M(name);
    CHECK(canonical_certificate(m) == canonical_certificate(testing::shuffled(m, 5)));
  }
}

TEST_CASE("canonical labels give identical relabelled maps") {
  const PolyhedralMap& m = M("truncated-octahedron");
  const PolyhedralMap s = testing::shuffled(m, 9);
  const auto ca = canonical_certificate(m);
  const auto cb = canonical_certificate(s);
  const PolyhedralMap a = relabel(m, ca.canonical_label);
  const PolyhedralMap b = relabel(s, cb.canonical_label);
  CHECK(testing::face_sets(a.faces()) == testing::face_sets(b.faces()));
}

TEST_CASE("isomorphism witnesses") {
  CHECK(are_isomorphic(antiprism(3).map, M("octahedron")));
  CHECK(are_isomorphic(prism(4).map, M("cube")));
  CHECK_FALSE(are_isomorphic(M("cube"), M("octahedron")));
  CHECK_FALSE(are_isomorphic(M("small-rhombicuboctahedron"), M("pseudo-rhombicuboctahedron")));
  const PolyhedralMap& m = M("icosidodecahedron");
  const auto perm = testing::random_permutation(m.vertex_count(), 21);
  const PolyhedralMap r = relabel(m, perm);
  const auto w = isomorphism(m, r);
  REQUIRE(w.has_value());
  CHECK(is_isomorphism(m, r, *w));
  CHECK(testing::face_sets(relabel(m, *w).faces()) == testing::face_sets(r.faces()));
  CHECK_FALSE(isomorphism(M("cube"), M("octahedron")).has_value());
  // A wrong permutation is rejected.
  std::vector<VertexId> bad = *w;
  std::swap(bad[0], bad[1]);
  CHECK_FALSE(is_isomorphism(m, r, bad));
}

TEST_CASE("automorphism group orders against brute force") {
  const PolyhedralMap& t = M("tetrahedron");
  CHECK(testing::brute_force_automorphism_count(t.faces(), 4) == 24);
  CHECK(automorphism_group(t).order() == 24);
  const PolyhedralMap& c = M("cube");
  CHECK(testing::brute_force_automorphism_count(c.faces(), 8) == 48);
  CHECK(automorphism_group(c).order() == 48);
  const PolyhedralMap& p = M("prism-3");
  CHECK(automorphism_group(p).order() == static_cast<std::size_t>(testing::brute_force_automorphism_count(p.faces(), 6)));
  const PolyhedralMap& o = M("octahedron");
  CHECK(automorphism_group(o).order() == static_cast<std::size_t>(testing::brute_force_automorphism_count(o.faces(), 6)));
}

TEST_CASE("automorphism groups of larger maps") {
  CHECK(automorphism_group(M("icosahedron")).order() == 120);
  CHECK(automorphism_group(M("snub-cube")).order() == 24);
  CHECK(automorphism_group(M("snub-dodecahedron")).order() == 60);
  CHECK(automorphism_group(M("great-rhombicosidodecahedron")).order() == 120);
  CHECK(automorphism_group(M("prism-9")).order() == 36);
  CHECK(automorphism_group(M("antiprism-7")).order() == 28);
  // Every element really is an automorphism.
  const PolyhedralMap& m = M("truncated-tetrahedron");
  const auto g = automorphism_group(m);
  CHECK(g.order() == 24);
  for (const auto& p : g.elements) CHECK(is_isomorphism(m, m, p));
  CHECK(std::is_sorted(g.elements.begin(), g.elements.end()));
  CHECK(std::set<Permutation>(g.elements.begin(), g.elements.end()).size() == g.order());
}

TEST_CASE("vertex orbits") {
  const auto g = automorphism_group(M("pseudo-rhombicuboctahedron"));
  CHECK(g.order() == 16);
  REQUIRE(g.orbits.size() == 2);
  std::multiset<std::size_t> sizes;
  for (const auto& o : g.orbits) sizes.insert(o.size());
  CHECK(sizes == std::multiset<std::size_t>{8, 16});
  CHECK_FALSE(is_vertex_transitive(M("pseudo-rhombicuboctahedron")));
  CHECK(is_vertex_transitive(M("snub-cube")));
  CHECK(is_vertex_transitive(M("prism-9")));
  CHECK(is_vertex_transitive(M("antiprism-11")));
}

TEST_CASE("free involutions") {
  CHECK(free_involutions(M("pseudo-rhombicuboctahedron")).empty());
  CHECK(free_involutions(M("tetrahedron")).empty());
  CHECK_FALSE(free_involutions(M("dodecahedron")).empty());
  for (const auto& s : free_involutions(M("icosahedron"))) {
    CHECK(is_free_involution(M("icosahedron"), s));
    for (VertexId v = 0; v < 12; ++v) {
      CHECK(s[v] != v);
      CHECK(s[s[v]] == v);
    }
  }
  // The cube's antipodal map is free, but the quotient is not polyhedral.
  CHECK(free_involutions(M("cube")).size() == 1);
  CHECK(code_of([] { quotient(M("cube"), free_involutions(M("cube")).front()); }) == ErrorCode::NonPolyhedralQuotient);
  // A reflection fixes vertices.
  const auto g = automorphism_group(M("cube"));
  for (const auto& p : g.elements)
    if (!is_free_involution(M("cube"), p) && p != g.elements.front())
      CHECK(code_of([&] { quotient(M("cube"), p); }) == ErrorCode::NotFreeInvolution);
}

TEST_CASE("quotients and double covers") {
  const PolyhedralMap& ico = M("icosahedron");
  const PolyhedralMap q = quotient(ico, free_involutions(ico).front());
  CHECK(q.vertex_count() == 6);
  CHECK(q.euler_characteristic() == 1);
  CHECK(require_semi_equivelar(q) == VertexType::parse("[3^5]"));
  const DoubleCover d = double_cover(q);
  CHECK(d.map.euler_characteristic() == 2);
  CHECK(are_isomorphic(d.map, ico));
  CHECK(is_free_involution(d.map, d.deck));
  CHECK(are_isomorphic(quotient(d.map, d.deck), q));

  const PolyhedralMap& rco = M("small-rhombicuboctahedron");
  const PolyhedralMap r = quotient(rco, free_involutions(rco).front());
  CHECK(r.vertex_count() == 12);
  CHECK(require_semi_equivelar(r) == VertexType::parse("[3,4^3]"));

  const PolyhedralMap& dod = M("dodecahedron");
  const PolyhedralMap dq = quotient(dod, free_involutions(dod).front());
  CHECK(are_isomorphic(double_cover(dq).map, dod));
  CHECK(code_of([] { double_cover(M("cube")); }) == ErrorCode::AlreadySpherical);
  CHECK(code_of([] { quotient(M("truncated-cube"), free_involutions(M("truncated-cube")).front()); }) == ErrorCode::NonPolyhedralQuotient);
}

TEST_CASE("double cover of a relabelled projective plane") {
  const PolyhedralMap& dod = M("dodecahedron");
  const PolyhedralMap dq = testing::shuffled(quotient(dod, free_involutions(dod).front()), 4);
  const DoubleCover d = double_cover(dq);
  CHECK(are_isomorphic(d.map, dod));
  for (VertexId v = 0; v < dq.vertex_count(); ++v) {
    CHECK(d.deck[v] == v + dq.vertex_count());
    CHECK(d.deck[v + dq.vertex_count()] == v);
  }
}

TEST_CASE("cycle notation") {
  CHECK(cycle_notation({0, 1, 2}) == "()");
  CHECK(cycle_notation({3, 2, 1, 0}) == "(0 3)(1 2)");
  CHECK(cycle_notation({1, 2, 0, 3}) == "(0 1 2)");
}

TEST_CASE("parallel helpers cover every index once and propagate exceptions") {
  std::vector<int> hits(1000, 0);
  parallel_for(1000, [&](int i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
  std::vector<int> chunks(777, 0);
  parallel_chunks(777, [&](int b, int e) {
    for (int i = b; i < e; ++i) ++chunks[i];
  });
  for (int h : chunks) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(100, [](int i) {
                    if (i == 57) throw Error(ErrorCode::InternalError, "boom");
                  }),
                  Error);
  // Nested calls run inline.
  std::vector<int> nested(50 * 50, 0);
  parallel_for(50, [&](int i) { parallel_for(50, [&](int j) { ++nested[i * 50 + j]; }); });
  for (int h : nested) CHECK(h == 1);
  CHECK(thread_count() >= 1);
}

TEST_CASE("certificates do not depend on the thread count") {
  const PolyhedralMap& m = M("great-rhombicosidodecahedron");
  setenv("SEMAP_THREADS", "4", 1);
  const auto a = canonical_certificate(m);
  setenv("SEMAP_THREADS", "1", 1);
  const auto b = canonical_certificate(m);
  unsetenv("SEMAP_THREADS");
  CHECK(a == b);
  CHECK(a.start_flag == b.start_flag);
}
