#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "semap/classify.hpp"

namespace semap {

namespace {

constexpr int kMaxVertices = 12;

// Orderly face-by-face construction of oriented maps. Each step fills the
// open edge of least (vertex, neighbour) with a new face; fresh vertices are
// numbered in order of first use.
class Generator {
 public:
  Generator(int n, const VertexType& t) : n_(n), type_(t) {
    const auto& seq = t.sequence();
    d_ = static_cast<int>(seq.size());
    for (int p : seq) ++profile_[p];
    for (auto& [p, c] : profile_) sizes_.push_back(p);
    for (int dir = 0; dir < 2; ++dir)
      for (int s = 0; s < d_; ++s)
        for (int len = 1; len < d_; ++len) {
          std::vector<int> run;
          for (int i = 0; i < len; ++i) run.push_back(dir == 0 ? seq[(s + i) % d_] : seq[(s + d_ - i) % d_]);
          arcs_.insert(run);
        }
    for (auto& row : owner_) row.fill(-1);
  }

  std::vector<PolyhedralMap> run() {
    Face first;
    for (int i = 0; i < sizes_.front(); ++i) first.push_back(i);
    next_new_ = sizes_.front();
    if (next_new_ > n_) return {};
    if (add_face(first)) search();
    std::vector<PolyhedralMap> out;
    for (auto& [code, m] : found_) out.push_back(std::move(m));
    return out;
  }

 private:
  int n_;
  VertexType type_;
  int d_ = 0;
  std::map<int, int> profile_;
  std::vector<int> sizes_;
  std::set<std::vector<int>> arcs_;

  std::vector<Face> faces_;
  std::array<std::array<int, kMaxVertices>, kMaxVertices> owner_{};  // directed edge -> face
  std::array<std::vector<int>, kMaxVertices> at_{};                  // faces at each vertex
  std::array<std::map<int, int>, kMaxVertices> size_count_{};
  int next_new_ = 0;
  std::map<std::vector<int>, PolyhedralMap> found_;

  bool room_at(VertexId v, int size) const {
    if (static_cast<int>(at_[v].size()) >= d_) return false;
    auto it = size_count_[v].find(size);
    const int used = it == size_count_[v].end() ? 0 : it->second;
    auto p = profile_.find(size);
    return p != profile_.end() && used < p->second;
  }

  static int index_in(const Face& f, VertexId v) {
    return static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
  }

  bool polyhedral_with(const Face& f, const Face& g) const {
    std::vector<VertexId> shared;
    for (VertexId v : f)
      if (std::find(g.begin(), g.end(), v) != g.end()) shared.push_back(v);
    if (shared.size() <= 1) return true;
    if (shared.size() > 2) return false;
    auto adjacent = [](const Face& h, VertexId a, VertexId b) {
      const int k = static_cast<int>(h.size());
      const int i = index_in(h, a), j = index_in(h, b);
      return (i + 1) % k == j || (j + 1) % k == i;
    };
    return adjacent(f, shared[0], shared[1]) && adjacent(g, shared[0], shared[1]);
  }

  // Faces around v must form arcs of the cyclic type, or the whole of it.
  bool vertex_ok(VertexId v) const {
    const auto& fs = at_[v];
    const int k = static_cast<int>(fs.size());
    auto pred = [&](int f) {
      const Face& face = faces_[f];
      const int sz = static_cast<int>(face.size());
      return face[(index_in(face, v) + sz - 1) % sz];
    };
    auto succ = [&](int f) {
      const Face& face = faces_[f];
      return face[(index_in(face, v) + 1) % static_cast<int>(face.size())];
    };
    int covered = 0;
    bool has_chain = false;
    for (int f : fs) {
      if (owner_[v][pred(f)] >= 0) continue;  // f is not the start of a chain
      has_chain = true;
      std::vector<int> sizes;
      int g = f;
      while (g >= 0) {
        sizes.push_back(static_cast<int>(faces_[g].size()));
        g = owner_[succ(g)][v];
      }
      if (!arcs_.count(sizes)) return false;
      covered += static_cast<int>(sizes.size());
    }
    if (has_chain) return covered == k && k < d_;
    // Closed: a single cycle equal to the type.
    std::vector<int> sizes;
    int g = fs.front();
    do {
      sizes.push_back(static_cast<int>(faces_[g].size()));
      g = owner_[succ(g)][v];
    } while (g != fs.front() && static_cast<int>(sizes.size()) <= k);
    return static_cast<int>(sizes.size()) == k && k == d_ && VertexType::normalize(sizes) == type_;
  }

  bool add_face(const Face& f) {
    for (const Face& g : faces_)
      if (!polyhedral_with(f, g)) return false;
    const int id = static_cast<int>(faces_.size());
    const int k = static_cast<int>(f.size());
    faces_.push_back(f);
    for (int i = 0; i < k; ++i) {
      owner_[f[i]][f[(i + 1) % k]] = id;
      at_[f[i]].push_back(id);
      ++size_count_[f[i]][k];
    }
    bool ok = true;
    for (VertexId v : f) ok = ok && vertex_ok(v);
    if (!ok) remove_last();
    return ok;
  }

  void remove_last() {
    const Face f = faces_.back();
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      owner_[f[i]][f[(i + 1) % k]] = -1;
      at_[f[i]].pop_back();
      --size_count_[f[i]][k];
    }
    faces_.pop_back();
  }

  void record() {
    if (next_new_ != n_) return;
    try {
      PolyhedralMap m = build_map(n_, faces_);
      if (m.euler_characteristic() != 2) return;
      auto t = semi_equivelar_type(m);
      if (!std::holds_alternative<VertexType>(t) || std::get<VertexType>(t) != type_) return;
      auto code = canonical_certificate(m).code;
      found_.emplace(std::move(code), std::move(m));
    } catch (const Error&) {
    }
  }

  void search() {
    // Least open edge: used in one direction only.
    int p = -1, q = -1;
    for (VertexId v = 0; v < next_new_ && p < 0; ++v)
      for (VertexId w = 0; w < next_new_; ++w) {
        const bool out = owner_[v][w] >= 0, in = owner_[w][v] >= 0;
        if (out != in) {
          // The new face must run along the unused direction.
          if (out) {
            p = w;
            q = v;
          } else {
            p = v;
            q = w;
          }
          break;
        }
      }
    if (p < 0) {
      record();
      return;
    }
    for (int size : sizes_) {
      if (!room_at(p, size) || !room_at(q, size)) continue;
      Face f{p, q};
      extend(f, size);
    }
  }

  void extend(Face& f, int size) {
    const VertexId last = f.back();
    if (static_cast<int>(f.size()) == size) {
      if (owner_[last][f.front()] >= 0) return;
      if (add_face(f)) {
        search();
        remove_last();
      }
      return;
    }
    const int limit = std::min(next_new_ + 1, n_);
    for (VertexId w = 0; w < limit; ++w) {
      if (std::find(f.begin(), f.end(), w) != f.end()) continue;
      if (owner_[last][w] >= 0 || !room_at(w, size)) continue;
      const bool fresh = w == next_new_;
      if (fresh) ++next_new_;
      f.push_back(w);
      extend(f, size);
      f.pop_back();
      if (fresh) --next_new_;
    }
  }
};

}  // namespace

std::vector<PolyhedralMap> exhaustive_generate(int count, const VertexType& t) {
  const int predicted = predicted_vertex_count(t);
  if (predicted != count) {
    throw Error(ErrorCode::CountMismatch, t.str() + " has " + std::to_string(predicted) + " vertices, not " + std::to_string(count));
  }
  if (count > kMaxVertices) throw Error(ErrorCode::TooLarge, "exhaustive generation is limited to 12 vertices");
  return Generator(count, t).run();
}

}  // namespace semap
