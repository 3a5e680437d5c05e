#pragma once

#include <string>
#include <vector>

#include "semap/map.hpp"
#include "semap/symmetry.hpp"
#include "semap/vertex_type.hpp"

namespace semap {

// Squares of a 24-vertex [3, 4^3] map grouped by how many of their four edge
// neighbours are squares.
struct SquareTypeCounts {
  int s2 = 0;
  int s3 = 0;
  int s4 = 0;
};

SquareTypeCounts square_type_counts(const PolyhedralMap& m);

struct Verdict {
  std::string name;
  Permutation witness;  // input vertex -> catalog vertex
  std::vector<std::string> chain;  // reductions applied, outermost first
};

enum class IdentifyMode {
  // Reduce through the inverse operators down to a base case.
  Reduction,
  // Compare certificates with every catalog entry of the same (count, type).
  Direct,
};

// Names the sphere catalog entry isomorphic to m and returns a verified
// witness. Throws WrongSphere, NotSemiEquivelar, or ClassificationViolation
// (with the offending map in text form) if no entry matches.
Verdict identify(const PolyhedralMap& m, IdentifyMode mode = IdentifyMode::Reduction);

// Every map of the given vertex count and type, one per isomorphism class,
// sorted by certificate. Throws CountMismatch, TooLarge (count > 12).
std::vector<PolyhedralMap> exhaustive_generate(int count, const VertexType& t);

}  // namespace semap
