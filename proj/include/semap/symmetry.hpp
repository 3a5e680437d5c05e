#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semap/map.hpp"

namespace semap {

using Permutation = std::vector<VertexId>;  // p[v] = image of v

// A flag is (face, side i, end s): the edge f[i]f[i+1] of face f, with vertex
// f[i] (s = 0) or f[i+1] (s = 1). There are 4 * f1 flags.
class FlagSystem {
 public:
  explicit FlagSystem(const PolyhedralMap& m);

  int size() const { return static_cast<int>(vertex_.size()); }
  int flag(FaceId f, int i, int s) const { return offset_[f] + 2 * i + s; }
  VertexId vertex(int flag) const { return vertex_[flag]; }
  FaceId face(int flag) const { return face_[flag]; }
  // Elementary moves: 0 changes the vertex, 1 the edge, 2 the face.
  int move(int flag, int k) const { return moves_[3 * flag + k]; }

 private:
  std::vector<int> offset_;
  std::vector<VertexId> vertex_;
  std::vector<FaceId> face_;
  std::vector<int> moves_;
};

// Least breadth-first flag encoding over all starting flags. Two maps have
// equal `code` exactly when they are isomorphic (reflections included).
struct CanonicalCertificate {
  std::vector<int> code;
  int start_flag = 0;
  // canonical_label[v] = rank of v by first appearance in the traversal.
  std::vector<VertexId> canonical_label;

  bool operator==(const CanonicalCertificate& o) const { return code == o.code; }
  bool operator<(const CanonicalCertificate& o) const { return code < o.code; }
};

CanonicalCertificate canonical_certificate(const PolyhedralMap& m);
bool are_isomorphic(const PolyhedralMap& a, const PolyhedralMap& b);
// Vertex bijection a -> b carrying faces of a onto faces of b, if any.
std::optional<Permutation> isomorphism(const PolyhedralMap& a, const PolyhedralMap& b);
// True when p maps the face set of a exactly onto the face set of b.
bool is_isomorphism(const PolyhedralMap& a, const PolyhedralMap& b, const Permutation& p);

struct AutomorphismGroup {
  std::vector<Permutation> elements;  // sorted; identity first
  std::vector<std::vector<VertexId>> orbits;  // sorted by least element

  std::size_t order() const { return elements.size(); }
};

AutomorphismGroup automorphism_group(const PolyhedralMap& m);
bool is_vertex_transitive(const PolyhedralMap& m);

// Involutive automorphisms with no fixed vertex, invariant edge or invariant face.
std::vector<Permutation> free_involutions(const PolyhedralMap& m);
bool is_free_involution(const PolyhedralMap& m, const Permutation& sigma);

// Orbit map of a free involution. Quotient vertices are numbered by the
// least member of each orbit. Throws NotFreeInvolution, NonPolyhedralQuotient.
PolyhedralMap quotient(const PolyhedralMap& m, const Permutation& sigma);

// Orientation double cover of a projective-plane map. Vertex v lifts to v and
// v + f0; the deck involution swaps them. Throws AlreadySpherical.
struct DoubleCover {
  PolyhedralMap map;
  Permutation deck;
};
DoubleCover double_cover(const PolyhedralMap& y);

// "(0 3)(1 2)"; the identity prints as "()".
std::string cycle_notation(const Permutation& p);

}  // namespace semap
