#include <doctest.h>

#include "semap/catalog.hpp"
#include "semap/classify.hpp"
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

}  // namespace

TEST_CASE("square type counts") {
  const auto rco = archimedean("small-rhombicuboctahedron").map;
  const auto a = square_type_counts(rco);
  CHECK(a.s2 == 12);
  CHECK(a.s3 == 0);
  CHECK(a.s4 == 6);
  const auto b = square_type_counts(pseudo_rhombicuboctahedron().map);
  CHECK(b.s2 == 8);
  CHECK(b.s3 == 8);
  CHECK(b.s4 == 2);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto c = square_type_counts(testing::shuffled(rco, seed));
    CHECK(c.s2 == 12);
    CHECK(c.s4 == 6);
  }
  CHECK(code_of([] { square_type_counts(platonic("cube").map); }) == ErrorCode::WrongShape);
  CHECK(code_of([] { square_type_counts(archimedean("small-rhombicosidodecahedron").map); }) == ErrorCode::WrongShape);
}

TEST_CASE("identify every catalog entry under relabelling") {
  const auto entries = sphere_catalog(12);
  std::uint64_t seed = 100;
  for (const auto& e : entries) {
    const PolyhedralMap m = testing::shuffled(e.map, ++seed);
    const Verdict v = identify(m);
    CHECK(v.name == e.name);
    CHECK(is_isomorphism(m, e.map, v.witness));
  }
}

TEST_CASE("identify in direct mode agrees") {
  for (const char* name : {"truncated-dodecahedron", "pseudo-rhombicuboctahedron", "prism-11", "antiprism-4", "snub-cube", "icosahedron"}) {
    const CatalogEntry e = catalog_entry(name);
    const PolyhedralMap m = testing::shuffled(e.map, 3);
    const Verdict v = identify(m, IdentifyMode::Direct);
    CHECK(v.name == name);
    CHECK(is_isomorphism(m, e.map, v.witness));
  }
}

TEST_CASE("identify follows the reductions") {
  const Verdict s = identify(archimedean("snub-dodecahedron").map);
  CHECK(s.name == "snub-dodecahedron");
  CHECK_FALSE(s.chain.empty());
  const Verdict g = identify(testing::shuffled(archimedean("great-rhombicosidodecahedron").map, 8));
  CHECK(g.name == "great-rhombicosidodecahedron");
  CHECK(g.chain.size() >= 2);
  const Verdict p = identify(testing::shuffled(catalog_entry("prism-11").map, 8));
  CHECK(p.name == "prism-11");
}

TEST_CASE("identify on maps outside its domain") {
  CHECK(code_of([] { identify(rp2_catalog().front().map); }) == ErrorCode::WrongSphere);
  const PolyhedralMap cut = build_map(10, {{0, 1, 2, 3, 8}, {7, 6, 5, 4}, {1, 0, 9, 4, 5}, {2, 1, 5, 6}, {3, 2, 6, 7}, {9, 8, 3, 7, 4}, {0, 8, 9}});
  CHECK(code_of([&] { identify(cut); }) == ErrorCode::NotSemiEquivelar);
}

TEST_CASE("identify after operators") {
  CHECK(identify(truncate(platonic("icosahedron").map)).name == "truncated-icosahedron");
  CHECK(identify(rectify(archimedean("cuboctahedron").map)).name == "small-rhombicuboctahedron");
  CHECK(identify(dual(platonic("dodecahedron").map)).name == "icosahedron");
  CHECK(identify(double_cover(rp2_catalog().back().map).map).name == rp2_catalog().back().name.substr(4));
}

TEST_CASE("exhaustive generation of Platonic types") {
  const std::pair<int, const char*> cases[] = {{4, "tetrahedron"}, {6, "octahedron"}, {8, "cube"}, {12, "icosahedron"}};
  for (const auto& [n, name] : cases) {
    const CatalogEntry e = platonic(name);
    const auto maps = exhaustive_generate(n, e.type);
    REQUIRE(maps.size() == 1);
    CHECK(are_isomorphic(maps.front(), e.map));
  }
}

TEST_CASE("exhaustive generation of other small types") {
  const std::pair<const char*, const char*> cases[] = {
      {"[3,4^2]", "prism-3"},        {"[3^3,4]", "antiprism-4"},         {"[4^2,5]", "prism-5"},
      {"[3^3,5]", "antiprism-5"},    {"[4^2,6]", "prism-6"},             {"[3^3,6]", "antiprism-6"},
      {"[3,6^2]", "truncated-tetrahedron"}, {"[3,4,3,4]", "cuboctahedron"},
  };
  for (const auto& [type, name] : cases) {
    const VertexType t = T(type);
    const auto maps = exhaustive_generate(predicted_vertex_count(t), t);
    REQUIRE(maps.size() == 1);
    CHECK(are_isomorphic(maps.front(), catalog_entry(name).map));
  }
}

TEST_CASE("exhaustive generation against a subset-search recount") {
  const char* types[] = {"[3^3]", "[3^4]", "[3,4^2]", "[4^3]", "[3^3,4]"};
  for (const char* s : types) {
    const VertexType t = T(s);
    const int n = predicted_vertex_count(t);
    REQUIRE(n <= 8);
    testing::SubsetOracle oracle(n, t.sequence());
    const auto expected = oracle.run();
    const auto got = exhaustive_generate(n, t);
    CHECK_MESSAGE(got.size() == expected.size(), s);
    // Each generated map matches one oracle class, and no two generated maps
    // are isomorphic.
    for (const auto& m : got) {
      int matches = 0;
      for (const auto& faces : expected) matches += testing::brute_force_isomorphic(m.faces(), faces, n);
      CHECK(matches == 1);
    }
    for (std::size_t i = 0; i < got.size(); ++i)
      for (std::size_t j = i + 1; j < got.size(); ++j) CHECK_FALSE(testing::brute_force_isomorphic(got[i].faces(), got[j].faces(), n));
  }
}

TEST_CASE("exhaustive generation preconditions") {
  CHECK(code_of([] { exhaustive_generate(5, T("[3^3]")); }) == ErrorCode::CountMismatch);
  CHECK(code_of([] { exhaustive_generate(24, T("[3^4,4]")); }) == ErrorCode::TooLarge);
  CHECK(code_of([] { exhaustive_generate(14, T("[4^2,7]")); }) == ErrorCode::TooLarge);
}
