#include "semap/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "semap/catalog.hpp"
#include "semap/classify.hpp"
#include "semap/geometry.hpp"
#include "semap/operators.hpp"
#include "semap/parallel.hpp"
#include "semap/symmetry.hpp"
#include "semap/vertex_type.hpp"

namespace semap {

namespace {

class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    std::lock_guard<std::mutex> lock(mu_);
    ++checks_;
    if (!ok) failures_.push_back(what);
  }
  bool ok() const { return failures_.empty(); }
  std::string summary() const {
    if (ok()) return std::to_string(checks_) + " checks";
    std::ostringstream os;
    os << failures_.size() << "/" << checks_ << " checks failed: ";
    for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) os << (i ? "; " : "") << failures_[i];
    return os.str();
  }

 private:
  std::mutex mu_;
  int checks_ = 0;
  std::vector<std::string> failures_;
};

VertexType T(const char* s) { return VertexType::parse(s); }

// The admissible sporadic types with their sphere vertex counts.
const std::vector<std::pair<const char*, int>>& sporadic_table() {
  static const std::vector<std::pair<const char*, int>> t = {
      {"[3^3]", 4},       {"[3^4]", 6},        {"[4^3]", 8},      {"[3^5]", 12},   {"[5^3]", 20},
      {"[3^4,5]", 60},    {"[3^4,4]", 24},     {"[3,5,3,5]", 30}, {"[3,4,3,4]", 12}, {"[3,4,5,4]", 60},
      {"[3,4^3]", 24},    {"[5,6^2]", 60},     {"[4,6,8]", 48},   {"[4,6,10]", 120}, {"[4,6^2]", 24},
      {"[3,6^2]", 12},    {"[3,8^2]", 24},     {"[3,10^2]", 60},  {"[3,4^2]", 6},
  };
  return t;
}

void enumeration(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const AdmissibleSet a = enumerate_admissible(50);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::set<VertexType> want, got(a.sporadic.begin(), a.sporadic.end());
  for (const auto& [s, n] : sporadic_table()) want.insert(T(s));
  c.expect(got == want && a.sporadic.size() == 19, "sporadic set differs");
  std::set<VertexType> prisms(a.prism_family.begin(), a.prism_family.end()), wp;
  std::set<VertexType> anti(a.antiprism_family.begin(), a.antiprism_family.end()), wa;
  for (int r = 5; r <= 50; ++r) wp.insert(VertexType::normalize(std::vector<int>{4, 4, r}));
  for (int s = 4; s <= 50; ++s) wa.insert(VertexType::normalize(std::vector<int>{3, 3, 3, s}));
  c.expect(prisms == wp && a.prism_family.size() == 46, "prism family differs");
  c.expect(anti == wa && a.antiprism_family.size() == 47, "antiprism family differs");
  c.expect(a.violations.empty(), std::to_string(a.violations.size()) + " violations");
  c.expect(secs < 5.0, "enumeration took " + std::to_string(secs) + " s");
}

void counts(Checker& c) {
  for (const auto& [s, n] : sporadic_table()) {
    const int got = predicted_vertex_count(T(s));
    c.expect(got == n, std::string(s) + " -> " + std::to_string(got));
  }
}

void catalog(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = sphere_catalog(12);
  c.expect(entries.size() == 37, "catalog has " + std::to_string(entries.size()) + " entries");
  std::vector<std::vector<int>> codes(entries.size());
  parallel_for(static_cast<int>(entries.size()), [&](int i) {
    const auto& e = entries[i];
    const PolyhedralMap rebuilt = build_map(e.map.vertex_count(), e.map.faces());
    auto t = semi_equivelar_type(rebuilt);
    c.expect(std::holds_alternative<VertexType>(t) && std::get<VertexType>(t) == e.type, e.name + " type");
    c.expect(predicted_vertex_count(e.type) == e.map.vertex_count(), e.name + " count");
    c.expect(rebuilt.euler_characteristic() == 2, e.name + " chi");
    codes[i] = canonical_certificate(e.map).code;
  });
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      c.expect(codes[i] != codes[j], entries[i].name + " ~ " + entries[j].name);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 60.0, "catalog took " + std::to_string(secs) + " s");
}

void square_types(Checker& c) {
  const auto rco = archimedean("small-rhombicuboctahedron");
  const auto pseudo = pseudo_rhombicuboctahedron();
  const auto a = square_type_counts(rco.map);
  const auto b = square_type_counts(pseudo.map);
  c.expect(a.s2 == 12 && a.s3 == 0 && a.s4 == 6, "small RCO counts");
  c.expect(b.s2 == 8 && b.s3 == 8 && b.s4 == 2, "pseudo counts");
  c.expect(rco.type == pseudo.type && rco.vertex_count == 24 && pseudo.vertex_count == 24, "shared (24,[3,4^3])");
  c.expect(!are_isomorphic(rco.map, pseudo.map), "small RCO and pseudo are isomorphic");
}

void operators(Checker& c) {
  std::vector<std::string> inputs = platonic_names();
  inputs.emplace_back("cuboctahedron");
  inputs.emplace_back("icosidodecahedron");
  for (const auto& name : inputs) {
    const CatalogEntry x = catalog_entry(name);
    const auto& s = x.type.sequence();
    const bool regular = x.type.runs().size() == 1;

    const PolyhedralMap t = truncate(x.map);
    const VertexType tt = require_semi_equivelar(t);
    const VertexType want_t = regular ? VertexType::normalize(std::vector<int>{static_cast<int>(s.size()), 2 * s[0], 2 * s[0]})
                                      : VertexType::normalize(std::vector<int>{4, 2 * s[0], 2 * s[1]});
    c.expect(tt == want_t, "truncate(" + name + ") has type " + tt.str());
    c.expect(t.vertex_count() == 2 * x.map.edge_count(), "truncate(" + name + ") vertex count");
    c.expect(t.euler_characteristic() == 2, "truncate(" + name + ") chi");
    c.expect(are_isomorphic(inverse_truncation(t), x.map), "inverse_truncation(truncate(" + name + "))");

    const PolyhedralMap r = rectify(x.map);
    const VertexType rt = require_semi_equivelar(r);
    const VertexType want_r = regular ? VertexType::normalize(std::vector<int>{static_cast<int>(s.size()), s[0], static_cast<int>(s.size()), s[0]})
                                      : VertexType::normalize(std::vector<int>{4, s[0], 4, s[1]});
    c.expect(rt == want_r, "rectify(" + name + ") has type " + rt.str());
    c.expect(r.vertex_count() == x.map.edge_count(), "rectify(" + name + ") vertex count");
    c.expect(r.euler_characteristic() == 2, "rectify(" + name + ") chi");
    // The faces coming from vertices of x have the size of its degree. For the
    // tetrahedron all faces of the result are triangles, so no choice of size
    // separates them.
    if (name != "tetrahedron") {
      const std::optional<int> nodes = regular ? std::optional<int>(static_cast<int>(s.size())) : std::nullopt;
      c.expect(are_isomorphic(inverse_rectification(r, nodes), x.map), "inverse_rectification(rectify(" + name + "))");
    }
  }
  // [p,q^2] with q >= 6; prisms ([n,4^2]) legitimately join their two n-gons n times.
  for (const auto& e : sphere_catalog(12)) {
    const auto rs = e.type.runs();
    if (rs.size() != 2) continue;
    for (int i = 0; i < 2; ++i)
      if (rs[i].count == 1 && rs[1 - i].count == 2 && rs[1 - i].size >= 6) c.expect(polygon_adjacency_is_simple(e.map, rs[i].size), e.name + " polygon adjacency");
  }
}

bool perfect_matching(const PolyhedralMap& m, const EdgeColoring& col) {
  std::vector<int> hits(m.vertex_count(), 0);
  for (EdgeId e : col.deep_blue) {
    ++hits[m.edge(e).u];
    ++hits[m.edge(e).v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

void surgery(Checker& c) {
  const struct {
    const char* snub;
    const char* base;
    std::size_t deep;
  } cases[] = {{"snub-cube", "small-rhombicuboctahedron", 12}, {"snub-dodecahedron", "small-rhombicosidodecahedron", 30}};
  for (const auto& k : cases) {
    const CatalogEntry x = archimedean(k.snub);
    const CatalogEntry y = archimedean(k.base);
    const EdgeColoring col = edge_coloring(x.map);
    c.expect(col.deep_blue.size() == k.deep, std::string(k.snub) + " has " + std::to_string(col.deep_blue.size()) + " deep-blue edges");
    c.expect(perfect_matching(x.map, col), std::string(k.snub) + " deep-blue edges are not a perfect matching");
    c.expect(col.count(EdgeColor::Red) == x.map.vertex_count(),
             std::string(k.snub) + " red edge count");
    const PolyhedralMap removed = remove_deep_blue(x.map);
    c.expect(removed.vertex_count() == x.map.vertex_count(), std::string(k.snub) + " removal changed vertex count");
    c.expect(are_isomorphic(removed, y.map), "remove_deep_blue(" + std::string(k.snub) + ") is not " + k.base);
    c.expect(are_isomorphic(insert_diagonal_matching(removed, eligible_diagonals(removed).front()), x.map),
             "insert(remove(" + std::string(k.snub) + "))");

    // Both diagonals of one eligible square.
    const auto diags = eligible_diagonals(y.map);
    const Diagonal first = diags.front();
    Diagonal other{-1, -1};
    for (const Face& f : y.map.faces()) {
      if (f.size() != 4) continue;
      const Diagonal d0{std::min(f[0], f[2]), std::max(f[0], f[2])};
      const Diagonal d1{std::min(f[1], f[3]), std::max(f[1], f[3])};
      if (d0 == first) other = d1;
      if (d1 == first) other = d0;
    }
    const PolyhedralMap a = insert_diagonal_matching(y.map, first);
    const PolyhedralMap b = insert_diagonal_matching(y.map, other);
    c.expect(are_isomorphic(a, b), std::string(k.base) + " seed choices differ");
    c.expect(are_isomorphic(a, x.map), std::string(k.base) + " insertion is not " + k.snub);
    c.expect(are_isomorphic(remove_deep_blue(a), y.map), "remove(insert(" + std::string(k.base) + "))");
  }
}

void identify_suite(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto entries = sphere_catalog(12);
  std::mt19937_64 rng(20240611);
  struct Job {
    std::size_t entry;
    std::vector<VertexId> perm;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < 100; ++i) {
    // Cover every entry at least once, then draw at random.
    const std::size_t e = i < static_cast<int>(entries.size()) ? static_cast<std::size_t>(i) : rng() % entries.size();
    std::vector<VertexId> p(entries[e].map.vertex_count());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    jobs.push_back({e, std::move(p)});
  }
  parallel_for(static_cast<int>(jobs.size()), [&](int i) {
    const auto& e = entries[jobs[i].entry];
    const PolyhedralMap m = relabel(e.map, jobs[i].perm);
    try {
      const Verdict v = identify(m);
      c.expect(v.name == e.name, e.name + " identified as " + v.name);
      c.expect(is_isomorphism(m, catalog_entry(v.name).map, v.witness), e.name + " witness");
      if (i % 10 == 0) c.expect(identify(m, IdentifyMode::Direct).name == e.name, e.name + " direct mode");
    } catch (const Error& err) {
      c.expect(false, e.name + ": " + err.what());
    }
  });

  const std::vector<std::pair<const char*, int>> rp2_want = {
      {"[3^5]", 6},     {"[5^3]", 10},    {"[4,6^2]", 12},   {"[3,5,3,5]", 15}, {"[3,4^3]", 12},
      {"[4,6,8]", 24},  {"[3,4,5,4]", 30}, {"[4,6,10]", 60}, {"[3,10^2]", 30},  {"[5,6^2]", 30},
  };
  const auto rp2 = rp2_catalog();
  c.expect(rp2.size() == 10, "rp2 catalog has " + std::to_string(rp2.size()) + " entries");
  std::multiset<std::pair<VertexType, int>> got, want;
  for (const auto& [s, n] : rp2_want) want.insert({T(s), n});
  for (const auto& e : rp2) {
    const auto t = semi_equivelar_type(e.map);
    c.expect(std::holds_alternative<VertexType>(t) && e.map.euler_characteristic() == 1, e.name + " is not a semi-equivelar RP2 map");
    if (std::holds_alternative<VertexType>(t)) got.insert({std::get<VertexType>(t), e.map.vertex_count()});
    const DoubleCover cover = double_cover(e.map);
    const CatalogEntry src = catalog_entry(e.name.substr(4));
    c.expect(are_isomorphic(cover.map, src.map), e.name + " double cover is not " + src.name);
    c.expect(are_isomorphic(quotient(cover.map, cover.deck), e.map), e.name + " quotient of cover");
  }
  c.expect(got == want, "rp2 (count,type) pairs differ");

  const CatalogEntry tc = archimedean("truncated-cube");
  const auto invs = free_involutions(tc.map);
  c.expect(!invs.empty(), "truncated cube has no free involution");
  for (const auto& s : invs) {
    bool rejected = false;
    try {
      quotient(tc.map, s);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NonPolyhedralQuotient;
    }
    c.expect(rejected, "truncated cube quotient accepted");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 120.0, "identify suite took " + std::to_string(secs) + " s");
}

void transitivity(Checker& c) {
  const auto entries = sphere_catalog(12);
  parallel_for(static_cast<int>(entries.size()), [&](int i) {
    const auto& e = entries[i];
    const bool vt = is_vertex_transitive(e.map);
    c.expect(vt == (e.name != "pseudo-rhombicuboctahedron"), e.name + " transitivity");
  });
  c.expect(free_involutions(pseudo_rhombicuboctahedron().map).empty(), "pseudo has a free involution");
}

void uniqueness(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::pair<int, const char*> cases[] = {{4, "tetrahedron"}, {6, "octahedron"}, {8, "cube"}, {12, "icosahedron"}};
  for (const auto& [n, name] : cases) {
    const CatalogEntry e = platonic(name);
    const auto maps = exhaustive_generate(n, e.type);
    c.expect(maps.size() == 1, std::string(name) + ": " + std::to_string(maps.size()) + " maps");
    if (!maps.empty()) c.expect(are_isomorphic(maps.front(), e.map), std::string(name) + " generated map differs");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 300.0, "generation took " + std::to_string(secs) + " s");
}

void geometry(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 3; n <= 24; ++n) {
    const std::pair<Realization, PolyhedralMap> cases[] = {{prism_coordinates(n), prism(n).map}, {antiprism_coordinates(n), antiprism(n).map}};
    for (const auto& [r, m] : cases) {
      const RealizationReport rep = measure(m, r.coords);
      c.expect(rep.max_norm_deviation <= 1e-12, "n=" + std::to_string(n) + " norm deviation");
      c.expect(rep.edge_length_spread <= 1e-9, "n=" + std::to_string(n) + " edge spread");
    }
  }
  // Antiprism 3 against the regular octahedron (+-e_i).
  const Realization q3 = antiprism_coordinates(3);
  const std::vector<Vec3> oct = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  auto distances = [](const std::vector<Vec3>& x) {
    std::vector<double> d;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j)
        d.push_back(std::hypot(x[i][0] - x[j][0], x[i][1] - x[j][1], x[i][2] - x[j][2]));
    std::sort(d.begin(), d.end());
    return d;
  };
  const auto da = distances(q3.coords), db = distances(oct);
  double worst = 0;
  for (std::size_t i = 0; i < da.size(); ++i) worst = std::max(worst, std::abs(da[i] - db[i]));
  c.expect(worst <= 1e-9, "antiprism(3) distances off by " + std::to_string(worst));
  c.expect(are_isomorphic(antiprism(3).map, platonic("octahedron").map), "antiprism(3) is not the octahedron");

  for (int n : {3, 5, 8}) {
    const CatalogEntry e = prism(n);
    const Realization r = prism_coordinates(n);
    std::ostringstream os;
    export_realization(os, r, e.map, ExportFormat::Off);
    const OffData d = parse_off(os.str());
    c.expect(d.faces == e.map.faces(), "OFF faces differ for prism " + std::to_string(n));
    c.expect(d.coords == r.coords, "OFF coordinates differ for prism " + std::to_string(n));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.expect(secs < 5.0, "geometry took " + std::to_string(secs) + " s");
}

const std::vector<std::pair<std::string, std::function<void(Checker&)>>>& suites() {
  static const std::vector<std::pair<std::string, std::function<void(Checker&)>>> s = {
      {"enumeration", enumeration}, {"counts", counts},         {"catalog", catalog},
      {"square-types", square_types}, {"operators", operators}, {"surgery", surgery},
      {"identify", identify_suite},   {"transitivity", transitivity}, {"uniqueness", uniqueness},
      {"geometry", geometry},
  };
  return s;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : suites()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteResult run_suite(std::string_view name) {
  for (const auto& [n, fn] : suites()) {
    if (n != name) continue;
    SuiteResult r;
    r.name = n;
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.pass = c.ok();
    r.detail = c.summary();
    return r;
  }
  throw Error(ErrorCode::UnknownName, "unknown suite '" + std::string(name) + "'");
}

}  // namespace semap
