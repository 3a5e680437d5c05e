#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semap/map.hpp"

namespace semap {

// Truncation: one vertex per directed edge (i, j), numbered in lexicographic
// order of (i, j). Each q-gon becomes a 2q-gon and each degree-d vertex a d-gon.
PolyhedralMap truncate(const PolyhedralMap& x);

// Rectification: one vertex per edge of x (edge-id order). Faces come from the
// faces of x followed by one face per vertex of x.
PolyhedralMap rectify(const PolyhedralMap& x);

// Vertices are the faces of x; faces are the face-cycles of x.
PolyhedralMap dual(const PolyhedralMap& x);

// Contracts the minority faces of a truncated map back to vertices. Accepts
// types [p, (2q)^2] (p-gons contracted) and [4, 2p, 2q] (squares contracted).
// Throws WrongShape, or MultiEdgeDetected if two minority faces are joined by
// more than one connecting edge.
PolyhedralMap inverse_truncation(const PolyhedralMap& x);

// Undoes rectification. The node faces become vertices and each vertex of x
// becomes an edge. Node faces default to the smaller size for [p, q, p, q],
// and to the two squares of the pattern [4, a, 4, b] (a != b); `node_size`
// forces a face size instead.
PolyhedralMap inverse_rectification(const PolyhedralMap& x, std::optional<int> node_size = std::nullopt);

// Adjacency of the p-gons through connecting edges (edges not lying on any
// p-gon). One entry per connecting edge, as a pair of p-gon face ids.
std::vector<std::pair<FaceId, FaceId>> polygon_links(const PolyhedralMap& x, int p);
// True when the links above form a simple graph: no loops, no repeated pair.
bool polygon_adjacency_is_simple(const PolyhedralMap& x, int p);

enum class EdgeColor { Red, Blue, DeepBlue };

// Edge classes of a [3^4, q] map. Red edges border the q-gon, blue edges join
// two triangles, and deep-blue edges are the blue edges that split the four
// triangles at both endpoints three to one.
struct EdgeColoring {
  std::vector<EdgeColor> colors;  // indexed by EdgeId
  std::vector<EdgeId> deep_blue;  // increasing edge ids

  int count(EdgeColor c) const;
};

EdgeColoring edge_coloring(const PolyhedralMap& x);

// Deletes every deep-blue edge, merging its two triangles into a square.
PolyhedralMap remove_deep_blue(const PolyhedralMap& x);

using Diagonal = std::pair<VertexId, VertexId>;

// Diagonals of the squares that carry the matching: squares whose two
// triangle neighbours sit on opposite sides. Sorted, each pair (min, max).
std::vector<Diagonal> eligible_diagonals(const PolyhedralMap& y);

// Splits every eligible square of y along a diagonal, starting from `seed`
// and forcing the rest so that the new edges form a perfect matching.
// Accepts [3, 4^3] and [3, 4, 5, 4] maps.
PolyhedralMap insert_diagonal_matching(const PolyhedralMap& y, Diagonal seed);

}  // namespace semap
