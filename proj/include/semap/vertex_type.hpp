#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "semap/map.hpp"

namespace semap {

using Rational = boost::rational<long long>;

// One maximal block p^n of equal face sizes in a vertex-type.
struct Run {
  int size = 0;
  int count = 0;
  bool operator==(const Run&) const = default;
};

// Cyclic sequence of face sizes around a vertex, stored as the
// lexicographically least rotation or reflection of the expanded sequence.
class VertexType {
 public:
  VertexType() = default;

  // Throws SizeTooSmall / DegreeTooSmall.
  static VertexType normalize(std::span<const int> raw);
  static VertexType from_runs(std::span<const Run> runs);
  // Parses "[3^4,5]"; '^1' may be omitted.
  static VertexType parse(std::string_view text);

  const std::vector<int>& sequence() const { return seq_; }
  int degree() const { return static_cast<int>(seq_.size()); }
  // Maximal cyclic runs of the canonical sequence.
  std::vector<Run> runs() const;
  // Printed form, e.g. "[3^4,5]" or "[3,4,3,4]".
  std::string str() const;

  auto operator<=>(const VertexType&) const = default;

 private:
  std::vector<int> seq_;
};

// Multiset form (q1^m1, ..., qk^mk) with q1 < ... < qk.
struct DegreeProfile {
  std::vector<Run> entries;
};

DegreeProfile degree_profile(const VertexType& t);

inline VertexType normalize(std::span<const int> raw) { return VertexType::normalize(raw); }

// Type of the face-cycle at v.
VertexType vertex_type_at(const PolyhedralMap& m, VertexId v);

struct NotSemiEquivelar {
  VertexId first = 0;
  VertexId second = 0;
  VertexType first_type;
  VertexType second_type;
};

std::variant<VertexType, NotSemiEquivelar> semi_equivelar_type(const PolyhedralMap& m);
// Same, but throws Error(NotSemiEquivelar) when vertices disagree.
VertexType require_semi_equivelar(const PolyhedralMap& m);

// 2 - sum of (p - 2) / p over the face-cycle, exactly.
Rational defect(const VertexType& t);

// Number of vertices of a spherical map of this type: 4 / defect.
// Throws NonPositiveDefect / NonIntegerCount.
int predicted_vertex_count(const VertexType& t);

// The three obstructions to a vertex-type being realised by any map.
enum class FilterCondition { None, I, II, III };

struct FilterResult {
  bool pass = true;
  FilterCondition condition = FilterCondition::None;
  int witness_run = -1;  // index into t.runs()
};

FilterResult lemma_filter(const VertexType& t);
std::string_view condition_name(FilterCondition c);

// The sporadic spherical types with their vertex counts, in table order.
struct SporadicType {
  VertexType type;
  int vertex_count;
};
const std::vector<SporadicType>& sporadic_types();

bool is_prism_family(const VertexType& t);      // [4^2, r], r >= 5
bool is_antiprism_family(const VertexType& t);  // [3^3, s], s >= 4

struct AdmissibleSet {
  int max_gon = 0;
  std::vector<VertexType> sporadic;
  std::vector<VertexType> prism_family;
  std::vector<VertexType> antiprism_family;
  std::vector<VertexType> violations;
};

// Exhaustive search over cyclic size sequences of degree 3..5 with entries up
// to max_gon, positive defect, passing lemma_filter. `shuffle_seed` permutes
// the candidate order before filtering; output is sorted regardless.
AdmissibleSet enumerate_admissible(int max_gon, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

}  // namespace semap
