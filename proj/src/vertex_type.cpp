#include "semap/vertex_type.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>
#include <sstream>

namespace semap {

VertexType VertexType::normalize(std::span<const int> raw) {
  for (int p : raw) {
    if (p < 3) throw Error(ErrorCode::SizeTooSmall, "face size " + std::to_string(p) + " < 3");
  }
  if (raw.size() < 3) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(raw.size()) + " < 3");
  const std::size_t n = raw.size();
  std::vector<int> best(raw.begin(), raw.end());
  std::vector<int> cand(n);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t i = 0; i < n; ++i) cand[i] = dir == 0 ? raw[(s + i) % n] : raw[(s + n - i) % n];
      if (cand < best) best = cand;
    }
  }
  VertexType t;
  t.seq_ = std::move(best);
  return t;
}

VertexType VertexType::from_runs(std::span<const Run> runs) {
  std::vector<int> seq;
  for (const Run& r : runs) {
    if (r.count < 1) throw Error(ErrorCode::ParseError, "run exponent must be positive");
    seq.insert(seq.end(), static_cast<std::size_t>(r.count), r.size);
  }
  return normalize(seq);
}

VertexType VertexType::parse(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "bad vertex-type '" + std::string(text) + "'"); };
  std::string compact;
  for (char c : text)
    if (c != ' ') compact.push_back(c);
  if (compact.size() < 3 || compact.front() != '[' || compact.back() != ']') throw fail();
  std::string_view body(compact);
  body = body.substr(1, body.size() - 2);
  std::vector<Run> runs;
  while (!body.empty()) {
    const std::size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    if (comma != std::string_view::npos && body.empty()) throw fail();
    Run r{0, 1};
    const std::size_t caret = item.find('^');
    std::string_view base = item.substr(0, caret);
    auto [p1, e1] = std::from_chars(base.data(), base.data() + base.size(), r.size);
    if (e1 != std::errc() || p1 != base.data() + base.size() || base.empty()) throw fail();
    if (caret != std::string_view::npos) {
      std::string_view ex = item.substr(caret + 1);
      auto [p2, e2] = std::from_chars(ex.data(), ex.data() + ex.size(), r.count);
      if (e2 != std::errc() || p2 != ex.data() + ex.size() || ex.empty() || r.count < 1) throw fail();
    }
    if (r.count > 64) throw fail();
    runs.push_back(r);
  }
  return from_runs(runs);
}

std::vector<Run> VertexType::runs() const {
  const std::size_t n = seq_.size();
  std::vector<Run> out;
  if (n == 0) return out;
  std::size_t start = 0;
  while (start < n && seq_[start] == seq_[(start + n - 1) % n]) ++start;
  if (start == n) return {Run{seq_[0], static_cast<int>(n)}};
  for (std::size_t i = 0; i < n; ++i) {
    const int p = seq_[(start + i) % n];
    if (!out.empty() && out.back().size == p) {
      ++out.back().count;
    } else {
      out.push_back(Run{p, 1});
    }
  }
  return out;
}

std::string VertexType::str() const {
  std::ostringstream os;
  os << '[';
  const auto rs = runs();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) os << ',';
    os << rs[i].size;
    if (rs[i].count > 1) os << '^' << rs[i].count;
  }
  os << ']';
  return os.str();
}

DegreeProfile degree_profile(const VertexType& t) {
  std::vector<int> s = t.sequence();
  std::sort(s.begin(), s.end());
  DegreeProfile out;
  for (int p : s) {
    if (!out.entries.empty() && out.entries.back().size == p) {
      ++out.entries.back().count;
    } else {
      out.entries.push_back(Run{p, 1});
    }
  }
  return out;
}

VertexType vertex_type_at(const PolyhedralMap& m, VertexId v) {
  std::vector<int> sizes;
  for (FaceId f : m.face_cycle(v).faces) sizes.push_back(static_cast<int>(m.face(f).size()));
  return VertexType::normalize(sizes);
}

std::variant<VertexType, NotSemiEquivelar> semi_equivelar_type(const PolyhedralMap& m) {
  const VertexType t0 = vertex_type_at(m, 0);
  for (VertexId v = 1; v < m.vertex_count(); ++v) {
    VertexType tv = vertex_type_at(m, v);
    if (tv != t0) return NotSemiEquivelar{0, v, t0, std::move(tv)};
  }
  return t0;
}

VertexType require_semi_equivelar(const PolyhedralMap& m) {
  auto r = semi_equivelar_type(m);
  if (auto* bad = std::get_if<NotSemiEquivelar>(&r)) {
    throw Error(ErrorCode::NotSemiEquivelar, "vertex " + std::to_string(bad->first) + " has type " + bad->first_type.str() +
                                                 " but vertex " + std::to_string(bad->second) + " has type " +
                                                 bad->second_type.str());
  }
  return std::get<VertexType>(r);
}

Rational defect(const VertexType& t) {
  Rational sum(0);
  for (int p : t.sequence()) sum += Rational(p - 2, p);
  return Rational(2) - sum;
}

int predicted_vertex_count(const VertexType& t) {
  const Rational d = defect(t);
  if (d <= 0) throw Error(ErrorCode::NonPositiveDefect, t.str() + " has defect " + std::to_string(d.numerator()) + "/" + std::to_string(d.denominator()));
  const Rational n = Rational(4) / d;
  if (n.denominator() != 1) {
    throw Error(ErrorCode::NonIntegerCount, t.str() + " gives vertex count " + std::to_string(n.numerator()) + "/" + std::to_string(n.denominator()));
  }
  return static_cast<int>(n.numerator());
}

std::string_view condition_name(FilterCondition c) {
  switch (c) {
    case FilterCondition::None: return "none";
    case FilterCondition::I: return "i";
    case FilterCondition::II: return "ii";
    case FilterCondition::III: return "iii";
  }
  return "?";
}

FilterResult lemma_filter(const VertexType& t) {
  const auto rs = t.runs();
  const int k = static_cast<int>(rs.size());
  auto unique_size = [&](int i) {
    for (int j = 0; j < k; ++j)
      if (j != i && rs[j].size == rs[i].size) return false;
    return true;
  };
  for (int i = 0; i < k; ++i) {
    if (rs[i].count == 2 && rs[i].size % 2 == 1 && unique_size(i)) return {false, FilterCondition::I, i};
  }
  for (int i = 0; i < k; ++i) {
    if (rs[i].count == 1 && rs[i].size % 2 == 1 && unique_size(i) &&
        rs[(i + k - 1) % k].size != rs[(i + 1) % k].size) {
      return {false, FilterCondition::II, i};
    }
  }
  if (k == 4) {
    for (int a = 0; a < 4; ++a) {
      const Run& p1 = rs[a];
      const Run& q = rs[(a + 1) % 4];
      const Run& p2 = rs[(a + 2) % 4];
      const Run& r = rs[(a + 3) % 4];
      if (p1.count == 1 && p2.count == 1 && p1.size == p2.size && p1.size % 2 == 1 && q.size != r.size &&
          q.size != p1.size && r.size != p1.size) {
        return {false, FilterCondition::III, a};
      }
    }
  }
  return {};
}

namespace {

VertexType type_of(std::initializer_list<int> seq) {
  std::vector<int> v(seq);
  return VertexType::normalize(v);
}

}  // namespace

const std::vector<SporadicType>& sporadic_types() {
  static const std::vector<SporadicType> table = {
      {type_of({3, 3, 3}), 4},          {type_of({3, 3, 3, 3}), 6},       {type_of({4, 4, 4}), 8},
      {type_of({3, 3, 3, 3, 3}), 12},   {type_of({5, 5, 5}), 20},         {type_of({3, 3, 3, 3, 5}), 60},
      {type_of({3, 3, 3, 3, 4}), 24},   {type_of({3, 5, 3, 5}), 30},      {type_of({3, 4, 3, 4}), 12},
      {type_of({3, 4, 5, 4}), 60},      {type_of({3, 4, 4, 4}), 24},      {type_of({5, 6, 6}), 60},
      {type_of({4, 6, 8}), 48},         {type_of({4, 6, 10}), 120},       {type_of({4, 6, 6}), 24},
      {type_of({3, 6, 6}), 12},         {type_of({3, 8, 8}), 24},         {type_of({3, 10, 10}), 60},
      {type_of({3, 4, 4}), 6},
  };
  return table;
}

bool is_prism_family(const VertexType& t) {
  const auto rs = t.runs();
  if (rs.size() != 2) return false;
  for (int i = 0; i < 2; ++i) {
    if (rs[i] == Run{4, 2} && rs[1 - i].count == 1 && rs[1 - i].size >= 5) return true;
  }
  return false;
}

bool is_antiprism_family(const VertexType& t) {
  const auto rs = t.runs();
  if (rs.size() != 2) return false;
  for (int i = 0; i < 2; ++i) {
    if (rs[i] == Run{3, 3} && rs[1 - i].count == 1 && rs[1 - i].size >= 4) return true;
  }
  return false;
}

namespace {

void extend(std::vector<int>& seq, int degree, int max_gon, Rational partial, std::set<std::vector<int>>& out) {
  const int remaining = degree - static_cast<int>(seq.size());
  if (remaining == 0) {
    if (partial < 2) out.insert(VertexType::normalize(seq).sequence());
    return;
  }
  for (int p = 3; p <= max_gon; ++p) {
    const Rational next = partial + Rational(p - 2, p);
    // Every later entry contributes at least 1/3.
    if (next + Rational(remaining - 1, 3) >= 2) break;
    seq.push_back(p);
    extend(seq, degree, max_gon, next, out);
    seq.pop_back();
  }
}

}  // namespace

AdmissibleSet enumerate_admissible(int max_gon, std::optional<std::uint64_t> shuffle_seed) {
  if (max_gon < 12) throw Error(ErrorCode::MaxGonTooSmall, "max_gon must be at least 12");
  // Degree is at most 5: with d >= 6 every entry contributes >= 1/3.
  std::set<std::vector<int>> canon;
  for (int d = 3; d <= 5; ++d) {
    std::vector<int> seq;
    extend(seq, d, max_gon, Rational(0), canon);
  }
  std::vector<VertexType> candidates;
  for (const auto& s : canon) candidates.push_back(VertexType::normalize(s));
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }

  std::set<VertexType> sporadic_set;
  for (const auto& s : sporadic_types()) sporadic_set.insert(s.type);

  AdmissibleSet out;
  out.max_gon = max_gon;
  for (const auto& t : candidates) {
    if (defect(t) <= 0 || !lemma_filter(t).pass) continue;
    if (sporadic_set.count(t)) {
      out.sporadic.push_back(t);
    } else if (is_prism_family(t)) {
      out.prism_family.push_back(t);
    } else if (is_antiprism_family(t)) {
      out.antiprism_family.push_back(t);
    } else {
      out.violations.push_back(t);
    }
  }
  auto by_family_param = [](const VertexType& a, const VertexType& b) {
    return a.sequence().back() < b.sequence().back();
  };
  std::sort(out.sporadic.begin(), out.sporadic.end());
  std::sort(out.prism_family.begin(), out.prism_family.end(), by_family_param);
  std::sort(out.antiprism_family.begin(), out.antiprism_family.end(), by_family_param);
  std::sort(out.violations.begin(), out.violations.end());
  return out;
}

}  // namespace semap
