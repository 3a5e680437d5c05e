#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semap/error.hpp"

namespace semap {

using VertexId = int;
using FaceId = int;
using EdgeId = int;
using Face = std::vector<VertexId>;

// Undirected edge with u < v and the two faces that contain it.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  std::array<FaceId, 2> faces{};
};

// Faces around a vertex in cyclic order. Consecutive faces share an edge
// through the vertex; the size equals the vertex degree.
struct FaceCycle {
  VertexId vertex = 0;
  std::vector<FaceId> faces;

  std::size_t degree() const { return faces.size(); }
};

enum class Surface { Sphere, ProjectivePlane };

// A validated polyhedral map on the 2-sphere or the real projective plane.
//
// Faces are the only input; edges, face-cycles and the orientation are derived
// at construction and the object is immutable afterwards.
class PolyhedralMap {
 public:
  // Vertex ids must be exactly 0..vertex_count-1, each used by some face.
  static PolyhedralMap build(int vertex_count, std::vector<Face> faces);
  static PolyhedralMap build(std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int euler_characteristic() const { return vertex_count_ - edge_count() + face_count(); }
  Surface surface() const {
    return euler_characteristic() == 2 ? Surface::Sphere : Surface::ProjectivePlane;
  }
  bool orientable() const { return !face_signs_.empty(); }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId f) const { return faces_[f]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::optional<EdgeId> edge_id(VertexId a, VertexId b) const;
  // Faces other than `f` across the edge {a, b}.
  FaceId opposite_face(FaceId f, VertexId a, VertexId b) const;

  const FaceCycle& face_cycle(VertexId v) const { return cycles_[v]; }
  int degree(VertexId v) const { return static_cast<int>(cycles_[v].faces.size()); }
  // neighbors(v)[i] is the far end of the edge shared by face_cycle(v).faces[i]
  // and face_cycle(v).faces[i + 1].
  std::span<const VertexId> neighbors(VertexId v) const { return rings_[v]; }
  // +1 / -1 per face giving a coherent orientation; empty when non-orientable.
  const std::vector<int>& face_signs() const { return face_signs_; }

 private:
  PolyhedralMap() = default;

  int vertex_count_ = 0;
  std::vector<Face> faces_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> incident_;
  std::vector<FaceCycle> cycles_;
  std::vector<std::vector<VertexId>> rings_;
  std::vector<int> face_signs_;
};

inline PolyhedralMap build_map(std::vector<Face> faces) {
  return PolyhedralMap::build(std::move(faces));
}
inline PolyhedralMap build_map(int vertex_count, std::vector<Face> faces) {
  return PolyhedralMap::build(vertex_count, std::move(faces));
}
inline int euler_characteristic(const PolyhedralMap& m) { return m.euler_characteristic(); }
inline const FaceCycle& face_cycle(const PolyhedralMap& m, VertexId v) { return m.face_cycle(v); }

// Least rotation/reflection of a face, so that equal polygons compare equal.
Face normalized_face(std::span<const VertexId> face);
// Sorted list of normalized faces; equal for two face lists describing the
// same labelled complex.
std::vector<Face> normalized_face_set(std::span<const Face> faces);

// Rename vertex v to perm[v]. `perm` must be a permutation of 0..f0-1.
PolyhedralMap relabel(const PolyhedralMap& m, std::span<const VertexId> perm);

// Text map format:
//   map <f0>
//   f v1 v2 ... vk
// with '#' starting a comment that runs to the end of the line.
PolyhedralMap parse_map(std::string_view text);
PolyhedralMap read_map(std::istream& in);
std::string format_map(const PolyhedralMap& m);
void write_map(std::ostream& out, const PolyhedralMap& m);

}  // namespace semap
