#include "semap/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "semap/catalog.hpp"
#include "semap/classify.hpp"
#include "semap/geometry.hpp"
#include "semap/operators.hpp"
#include "semap/symmetry.hpp"
#include "semap/verify.hpp"
#include "semap/vertex_type.hpp"

namespace semap {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

PolyhedralMap load(const std::string& path, Io& io) {
  if (path == "-") return read_map(io.in);
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  return read_map(f);
}

void save(const std::string& path, const std::string& text, Io& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

// Reports go to stdout unless the primary output already does.
std::ostream& report_stream(const std::string& out_path, Io& io) { return out_path == "-" ? io.err : io.out; }

std::string type_string(const PolyhedralMap& m) {
  auto t = semi_equivelar_type(m);
  return std::holds_alternative<VertexType>(t) ? std::get<VertexType>(t).str() : "mixed";
}

json summary_json(const PolyhedralMap& m) { return json{{"type", type_string(m)}, {"count", m.vertex_count()}}; }

void emit(std::ostream& os, bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    os << j.dump() << '\n';
  } else {
    os << text;
  }
}

int cmd_enum_types(int max_gon, bool as_json, Io& io) {
  if (max_gon < 12) throw UsageError("--max-gon must be at least 12");
  const AdmissibleSet a = enumerate_admissible(max_gon);
  json j;
  j["max_gon"] = max_gon;
  std::ostringstream os;
  auto row = [&](const char* kind, const VertexType& t, json& arr) {
    const int n = predicted_vertex_count(t);
    os << kind << ' ' << t.str() << ' ' << n << '\n';
    arr.push_back(json{{"type", t.str()}, {"count", n}});
  };
  json sp = json::array(), pf = json::array(), af = json::array(), vi = json::array();
  std::set<VertexType> found(a.sporadic.begin(), a.sporadic.end());
  for (const auto& s : sporadic_types())
    if (found.count(s.type)) row("sporadic", s.type, sp);
  for (const auto& t : a.prism_family) row("prism-family", t, pf);
  for (const auto& t : a.antiprism_family) row("antiprism-family", t, af);
  for (const auto& t : a.violations) {
    os << "violation " << t.str() << '\n';
    vi.push_back(t.str());
  }
  j["sporadic"] = sp;
  j["prism_family"] = pf;
  j["antiprism_family"] = af;
  j["violations"] = vi;
  emit(io.out, as_json, j, os.str());
  if (!a.violations.empty()) {
    io.err << "error: ClassificationViolation: " << a.violations.size() << " admissible types outside the known set\n";
    return 1;
  }
  return 0;
}

int cmd_build(const std::string& name, const std::string& out_path, bool as_json, Io& io) {
  const CatalogEntry e = catalog_entry(name);
  save(out_path, format_map(e.map), io);
  emit(report_stream(out_path, io), as_json, json{{"name", e.name}, {"type", e.type.str()}, {"count", e.vertex_count}},
       e.type.str() + " " + std::to_string(e.vertex_count) + "\n");
  return 0;
}

Diagonal parse_seed(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw UsageError("--seed expects 'a,b'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const int a = std::stoi(s.substr(0, comma), &p1);
    const int b = std::stoi(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw UsageError("--seed expects 'a,b'");
    return {std::min(a, b), std::max(a, b)};
  } catch (const std::logic_error&) {
    throw UsageError("--seed expects 'a,b'");
  }
}

int cmd_apply(const std::string& op, const std::string& in_path, const std::string& out_path, const std::string& seed, bool as_json, Io& io) {
  const PolyhedralMap x = load(in_path, io);
  PolyhedralMap y = [&]() -> PolyhedralMap {
    if (op == "truncate") return truncate(x);
    if (op == "rectify") return rectify(x);
    if (op == "dual") return dual(x);
    if (op == "inverse-truncation") return inverse_truncation(x);
    if (op == "inverse-rectification") return inverse_rectification(x);
    if (op == "remove-deep-blue") return remove_deep_blue(x);
    if (op == "insert-matching") {
      if (!seed.empty()) return insert_diagonal_matching(x, parse_seed(seed));
      const auto d = eligible_diagonals(x);
      if (d.empty()) throw Error(ErrorCode::WrongShape, "no eligible squares");
      return insert_diagonal_matching(x, d.front());
    }
    if (op == "quotient") {
      if (x.euler_characteristic() != 2) throw Error(ErrorCode::WrongSphere, "quotient needs a sphere map");
      const auto invs = free_involutions(x);
      if (invs.empty()) throw Error(ErrorCode::NotFreeInvolution, "map has no free involution");
      return quotient(x, invs.front());
    }
    if (op == "double-cover") return double_cover(x).map;
    throw UsageError("unknown operator '" + op + "'");
  }();
  save(out_path, format_map(y), io);
  const json b = summary_json(x), a = summary_json(y);
  std::ostringstream os;
  os << "before " << b["type"].get<std::string>() << ' ' << x.vertex_count() << '\n'
     << "after " << a["type"].get<std::string>() << ' ' << y.vertex_count() << '\n';
  emit(report_stream(out_path, io), as_json, json{{"op", op}, {"before", b}, {"after", a}}, os.str());
  return 0;
}

int cmd_classify(const std::string& in_path, bool direct, bool as_json, Io& io) {
  const PolyhedralMap m = load(in_path, io);
  const Verdict v = identify(m, direct ? IdentifyMode::Direct : IdentifyMode::Reduction);
  const std::string w = cycle_notation(v.witness);
  emit(io.out, as_json, json{{"name", v.name}, {"witness", w}}, "name=" + v.name + " witness=" + w + "\n");
  return 0;
}

int cmd_isom(const std::string& a_path, const std::string& b_path, bool as_json, Io& io) {
  const PolyhedralMap a = load(a_path, io);
  const PolyhedralMap b = load(b_path, io);
  const auto w = isomorphism(a, b);
  json j{{"isomorphic", w.has_value()}};
  std::string text = std::string("isomorphic: ") + (w ? "true" : "false") + "\n";
  if (w) {
    j["witness"] = cycle_notation(*w);
    text += "witness=" + cycle_notation(*w) + "\n";
  }
  emit(io.out, as_json, j, text);
  return 0;
}

int cmd_autgroup(const std::string& in_path, bool list, bool as_json, Io& io) {
  const PolyhedralMap m = load(in_path, io);
  const AutomorphismGroup g = automorphism_group(m);
  std::size_t free_count = 0;
  for (const auto& p : g.elements) free_count += is_free_involution(m, p);
  json sizes = json::array();
  std::ostringstream os;
  os << "order: " << g.order() << '\n' << "orbits: " << g.orbits.size() << '\n' << "orbit-sizes:";
  for (const auto& o : g.orbits) {
    os << ' ' << o.size();
    sizes.push_back(o.size());
  }
  os << '\n'
     << "vertex-transitive: " << (g.orbits.size() == 1 ? "true" : "false") << '\n'
     << "free-involutions: " << free_count << '\n';
  json j{{"order", g.order()},
         {"orbits", g.orbits.size()},
         {"orbit_sizes", sizes},
         {"vertex_transitive", g.orbits.size() == 1},
         {"free_involutions", free_count}};
  if (list) {
    json el = json::array();
    os << "elements:\n";
    for (const auto& p : g.elements) {
      os << cycle_notation(p) << '\n';
      el.push_back(cycle_notation(p));
    }
    j["elements"] = el;
  }
  emit(io.out, as_json, j, os.str());
  return 0;
}

Realization realization_for(const PolyhedralMap& m) {
  if (m.euler_characteristic() == 2) {
    auto t = semi_equivelar_type(m);
    if (std::holds_alternative<VertexType>(t)) {
      const VertexType& vt = std::get<VertexType>(t);
      const bool family = is_prism_family(vt) || is_antiprism_family(vt) || vt.sequence() == std::vector<int>{3, 4, 4};
      if (family) {
        const Verdict v = identify(m);
        const int n = std::stoi(v.name.substr(v.name.find('-') + 1));
        const Realization exact = v.name.rfind("prism-", 0) == 0 ? prism_coordinates(n) : antiprism_coordinates(n);
        Realization r = exact;
        for (VertexId x = 0; x < m.vertex_count(); ++x) r.coords[x] = exact.coords[v.witness[x]];
        r.report = measure(m, r.coords);
        return r;
      }
    }
  }
  return realize_on_sphere(m);
}

int cmd_export(const std::string& in_path, const std::string& format, const std::string& out_path, bool as_json, Io& io) {
  if (format != "off" && format != "svg") throw UsageError("--format must be off or svg");
  const PolyhedralMap m = load(in_path, io);
  const Realization r = realization_for(m);
  std::ostringstream data;
  export_realization(data, r, m, format == "off" ? ExportFormat::Off : ExportFormat::Svg);
  save(out_path, data.str(), io);
  const auto& rep = r.report;
  std::ostringstream os;
  os << std::setprecision(6) << "provenance: " << provenance_name(r.provenance) << '\n'
     << "max-norm-deviation: " << rep.max_norm_deviation << '\n'
     << "edge-length-spread: " << rep.edge_length_spread << '\n'
     << "max-planarity-residual: " << rep.max_planarity_residual << '\n'
     << "max-regularity-residual: " << rep.max_regularity_residual << '\n'
     << "converged: " << (rep.converged ? "true" : "false") << '\n'
     << "iterations: " << rep.iterations << '\n';
  json j{{"provenance", provenance_name(r.provenance)},
         {"max_norm_deviation", rep.max_norm_deviation},
         {"edge_length_spread", rep.edge_length_spread},
         {"max_planarity_residual", rep.max_planarity_residual},
         {"max_regularity_residual", rep.max_regularity_residual},
         {"converged", rep.converged},
         {"iterations", rep.iterations}};
  emit(report_stream(out_path, io), as_json, j, os.str());
  if (!rep.converged) {
    io.err << "error: ConvergenceFailure: relaxation stopped after " << rep.iterations << " steps\n";
    return 1;
  }
  return 0;
}

int write_catalog(const std::vector<CatalogEntry>& entries, const std::string& dir, bool as_json, Io& io) {
  std::ostringstream manifest;
  write_manifest(manifest, entries);
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw UsageError("cannot create '" + dir + "'");
    for (const auto& e : entries) {
      std::ofstream f(std::filesystem::path(dir) / (e.name + ".map"));
      if (!f) throw UsageError("cannot write into '" + dir + "'");
      write_map(f, e.map);
    }
    std::ofstream f(std::filesystem::path(dir) / "manifest.tsv");
    f << manifest.str();
  }
  json arr = json::array();
  for (const auto& e : entries) arr.push_back(json{{"name", e.name}, {"type", e.type.str()}, {"count", e.vertex_count}, {"recipe", e.recipe}});
  emit(io.out, as_json, arr, manifest.str());
  return 0;
}

int cmd_verify(const std::string& suite, bool as_json, Io& io) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), suite) == all.end()) throw UsageError("unknown suite '" + suite + "'");
    names.push_back(suite);
  }
  bool ok = true;
  json arr = json::array();
  std::ostringstream os;
  for (const auto& n : names) {
    const SuiteResult r = run_suite(n);
    ok = ok && r.pass;
    os << (r.pass ? "PASS " : "FAIL ") << r.name << ' ' << std::fixed << std::setprecision(2) << r.seconds << "s " << r.detail << '\n';
    arr.push_back(json{{"suite", r.name}, {"pass", r.pass}, {"seconds", r.seconds}, {"detail", r.detail}});
    if (!as_json) {
      io.out << os.str() << std::flush;
      os.str("");
    }
  }
  if (as_json) io.out << arr.dump() << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Io io{in, out, err};
  CLI::App app{"Semi-equivelar maps on the sphere and the projective plane", "semap"};
  app.require_subcommand(1);

  bool as_json = false;
  int max_gon = 12;
  std::string name, op, in_path = "-", out_path = "-", seed, a_path, b_path, format = "off", dir, suite = "all";
  bool direct = false, list = false;

  auto* enum_types = app.add_subcommand("enum-types", "List admissible vertex-types with their vertex counts");
  enum_types->add_option("--max-gon", max_gon, "Largest face size")->capture_default_str();
  enum_types->add_flag("--json", as_json);

  auto* build = app.add_subcommand("build", "Write a catalog map");
  build->add_option("name", name, "Catalog name, e.g. snub-cube or prism-7")->required();
  build->add_option("--out", out_path, "Output file ('-' for stdout)");
  build->add_flag("--json", as_json);

  auto* apply = app.add_subcommand("apply", "Apply an operator to a map");
  apply->add_option("op", op,
                    "truncate, rectify, dual, inverse-truncation, inverse-rectification, remove-deep-blue, "
                    "insert-matching, quotient, double-cover")
      ->required();
  apply->add_option("--in", in_path, "Input map ('-' for stdin)");
  apply->add_option("--out", out_path, "Output map ('-' for stdout)");
  apply->add_option("--seed", seed, "Seed diagonal 'a,b' for insert-matching");
  apply->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "Name the catalog entry isomorphic to a sphere map");
  classify->add_option("--in", in_path, "Input map ('-' for stdin)");
  classify->add_flag("--direct", direct, "Match certificates directly instead of reducing");
  classify->add_flag("--json", as_json);

  auto* isom = app.add_subcommand("isom", "Test two maps for isomorphism");
  isom->add_option("a", a_path)->required();
  isom->add_option("b", b_path)->required();
  isom->add_flag("--json", as_json);

  auto* autgroup = app.add_subcommand("autgroup", "Automorphism group summary");
  autgroup->add_option("--in", in_path, "Input map ('-' for stdin)");
  autgroup->add_flag("--list", list, "Print every automorphism in cycle notation");
  autgroup->add_flag("--json", as_json);

  auto* exp = app.add_subcommand("export", "Realize a sphere map and write OFF or SVG");
  exp->add_option("--in", in_path, "Input map ('-' for stdin)");
  exp->add_option("--format", format, "off or svg")->capture_default_str();
  exp->add_option("--out", out_path, "Output file ('-' for stdout)");
  exp->add_flag("--json", as_json);

  auto* rp2 = app.add_subcommand("rp2-catalog", "Projective-plane catalog");
  rp2->add_option("--out", dir, "Directory for map files and manifest.tsv");
  rp2->add_flag("--json", as_json);

  auto* sphere = app.add_subcommand("sphere-catalog", "Sphere catalog");
  sphere->add_option("--max-gon", max_gon, "Largest prism/antiprism polygon")->capture_default_str();
  sphere->add_option("--out", dir, "Directory for map files and manifest.tsv");
  sphere->add_flag("--json", as_json);

  auto* verify = app.add_subcommand("verify", "Run an end-to-end check suite");
  verify->add_option("--suite", suite, "Suite name or 'all'")->capture_default_str();
  verify->add_flag("--json", as_json);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (enum_types->parsed()) return cmd_enum_types(max_gon, as_json, io);
    if (build->parsed()) return cmd_build(name, out_path, as_json, io);
    if (apply->parsed()) return cmd_apply(op, in_path, out_path, seed, as_json, io);
    if (classify->parsed()) return cmd_classify(in_path, direct, as_json, io);
    if (isom->parsed()) return cmd_isom(a_path, b_path, as_json, io);
    if (autgroup->parsed()) return cmd_autgroup(in_path, list, as_json, io);
    if (exp->parsed()) return cmd_export(in_path, format, out_path, as_json, io);
    if (rp2->parsed()) return write_catalog(rp2_catalog(), dir, as_json, io);
    if (sphere->parsed()) {
      if (max_gon < 12) throw UsageError("--max-gon must be at least 12");
      return write_catalog(sphere_catalog(max_gon), dir, as_json, io);
    }
    if (verify->parsed()) return cmd_verify(suite, as_json, io);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  }
  return 2;
}

}  // namespace semap
