#pragma once

// Test helpers, including oracles that do not go through the library's
// certificate machinery.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "semap/map.hpp"

namespace semap::testing {

inline std::vector<VertexId> random_permutation(int n, std::uint64_t seed) {
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline PolyhedralMap shuffled(const PolyhedralMap& m, std::uint64_t seed) {
  return relabel(m, random_permutation(m.vertex_count(), seed));
}

// Faces as vertex sets; enough to pin down a polyhedral map's face structure.
inline std::set<std::vector<VertexId>> face_sets(const std::vector<Face>& faces) {
  std::set<std::vector<VertexId>> s;
  for (Face f : faces) {
    std::sort(f.begin(), f.end());
    s.insert(f);
  }
  return s;
}

// Counts vertex permutations that carry the face sets onto themselves.
// Polyhedral maps are determined by their face vertex sets, so this is the
// automorphism group order.
inline long brute_force_automorphism_count(const std::vector<Face>& faces, int n) {
  const auto want = face_sets(faces);
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  long count = 0;
  do {
    std::vector<Face> image;
    for (const Face& f : faces) {
      Face g;
      for (VertexId v : f) g.push_back(p[v]);
      image.push_back(g);
    }
    count += face_sets(image) == want;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Finds a vertex bijection between two face lists by trying permutations.
inline bool brute_force_isomorphic(const std::vector<Face>& a, const std::vector<Face>& b, int n) {
  if (a.size() != b.size()) return false;
  const auto want = face_sets(b);
  std::vector<VertexId> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Face& f : a) {
      Face g;
      for (VertexId v : f) g.push_back(p[v]);
      std::sort(g.begin(), g.end());
      if (!want.count(g)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Least rotation or reflection of a cyclic sequence.
inline std::vector<int> cyclic_min(std::vector<int> s) {
  std::vector<int> best = s;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

// Every n-vertex sphere map whose vertices all have the cyclic face-size
// sequence `type`, by a subset search over candidate polygons, deduplicated
// by brute-force isomorphism. Only for tiny n.
class SubsetOracle {
 public:
  SubsetOracle(int n, std::vector<int> type) : n_(n), type_(cyclic_min(type)) {
    std::set<int> sizes(type.begin(), type.end());
    for (int k : sizes) add_polygons(k);
    by_vertex_.resize(n_);
    for (std::size_t i = 0; i < cands_.size(); ++i)
      for (VertexId v : cands_[i]) by_vertex_[v].push_back(static_cast<int>(i));
    for (int k : type) ++profile_[k];
  }

  std::vector<std::vector<Face>> run() {
    std::vector<int> used(n_, 0);
    std::map<std::pair<int, int>, int> edge_use;
    std::vector<int> chosen;
    search(chosen, used, edge_use);
    return classes_;
  }

 private:
  void add_polygons(int k) {
    // Cyclic sequences on distinct vertices up to rotation and reversal:
    // least vertex first, second entry smaller than the last.
    std::vector<VertexId> cur;
    std::vector<bool> taken(n_, false);
    auto rec = [&](auto&& self) -> void {
      if (static_cast<int>(cur.size()) == k) {
        if (cur[1] < cur.back()) cands_.push_back(cur);
        return;
      }
      for (VertexId v = cur[0] + 1; v < n_; ++v) {
        if (taken[v]) continue;
        taken[v] = true;
        cur.push_back(v);
        self(self);
        cur.pop_back();
        taken[v] = false;
      }
    };
    for (VertexId first = 0; first + k <= n_; ++first) {
      cur = {first};
      rec(rec);
    }
  }

  static std::pair<int, int> key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

  bool fits(int c, const std::vector<int>& used, const std::map<std::pair<int, int>, int>& edge_use,
            const std::vector<int>& chosen) const {
    const Face& f = cands_[c];
    const int k = static_cast<int>(f.size());
    for (VertexId v : f) {
      if (used[v] >= static_cast<int>(type_.size())) return false;
      int same = 0;
      for (int d : chosen)
        if (std::find(cands_[d].begin(), cands_[d].end(), v) != cands_[d].end() && static_cast<int>(cands_[d].size()) == k) ++same;
      if (same >= profile_.at(k)) return false;
    }
    for (int i = 0; i < k; ++i) {
      auto it = edge_use.find(key(f[i], f[(i + 1) % k]));
      if (it != edge_use.end() && it->second >= 2) return false;
    }
    // No vertex gets more neighbours than its degree.
    const int deg = static_cast<int>(type_.size());
    for (int i = 0; i < k; ++i) {
      const VertexId v = f[i];
      std::set<VertexId> nb = {f[(i + 1) % k], f[(i + k - 1) % k]};
      for (const auto& [e, c] : edge_use) {
        if (c == 0) continue;
        if (e.first == v) nb.insert(e.second);
        if (e.second == v) nb.insert(e.first);
      }
      if (static_cast<int>(nb.size()) > deg) return false;
    }
    // Two faces meet in nothing, a vertex, or an edge.
    for (int d : chosen) {
      std::vector<VertexId> common;
      for (VertexId v : f)
        if (std::find(cands_[d].begin(), cands_[d].end(), v) != cands_[d].end()) common.push_back(v);
      if (common.size() > 2) return false;
      if (common.size() == 2) {
        bool edge = false;
        for (int i = 0; i < k; ++i)
          if (key(f[i], f[(i + 1) % k]) == key(common[0], common[1])) edge = true;
        if (!edge) return false;
      }
    }
    return true;
  }

  void search(std::vector<int>& chosen, std::vector<int>& used, std::map<std::pair<int, int>, int>& edge_use) {
    VertexId v = -1;
    for (VertexId u = 0; u < n_; ++u)
      if (used[u] < static_cast<int>(type_.size())) {
        v = u;
        break;
      }
    if (v < 0) {
      finish(chosen, edge_use);
      return;
    }
    for (int c : by_vertex_[v]) {
      if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) continue;
      // Faces picked for the same lowest open vertex go in increasing order.
      if (!pivots_.empty() && pivots_.back() == v && chosen.back() > c) continue;
      if (!fits(c, used, edge_use, chosen)) continue;
      const Face& f = cands_[c];
      const int k = static_cast<int>(f.size());
      chosen.push_back(c);
      pivots_.push_back(v);
      for (VertexId u : f) ++used[u];
      for (int i = 0; i < k; ++i) ++edge_use[key(f[i], f[(i + 1) % k])];
      search(chosen, used, edge_use);
      for (int i = 0; i < k; ++i) --edge_use[key(f[i], f[(i + 1) % k])];
      for (VertexId u : f) --used[u];
      chosen.pop_back();
      pivots_.pop_back();
    }
  }

  // Walks the faces around v; empty when they do not form one cycle.
  std::vector<int> link_sizes(const std::vector<Face>& faces, VertexId v) const {
    std::vector<const Face*> at;
    for (const Face& f : faces)
      if (std::find(f.begin(), f.end(), v) != f.end()) at.push_back(&f);
    auto nbrs = [&](const Face& f) {
      const int k = static_cast<int>(f.size());
      const int i = static_cast<int>(std::find(f.begin(), f.end(), v) - f.begin());
      return std::pair<VertexId, VertexId>{f[(i + k - 1) % k], f[(i + 1) % k]};
    };
    std::vector<int> sizes;
    std::vector<bool> seen(at.size(), false);
    std::size_t cur = 0;
    VertexId enter = nbrs(*at[0]).first;
    for (std::size_t step = 0; step < at.size(); ++step) {
      seen[cur] = true;
      sizes.push_back(static_cast<int>(at[cur]->size()));
      const auto [a, b] = nbrs(*at[cur]);
      const VertexId exit = a == enter ? b : a;
      std::size_t next = at.size();
      for (std::size_t j = 0; j < at.size(); ++j) {
        if (j == cur) continue;
        const auto [c, d] = nbrs(*at[j]);
        if (c == exit || d == exit) next = j;
      }
      if (next == at.size()) return {};
      if (step + 1 < at.size() && seen[next]) return {};
      enter = exit;
      cur = next;
    }
    return cur == 0 ? sizes : std::vector<int>{};
  }

  void finish(const std::vector<int>& chosen, const std::map<std::pair<int, int>, int>& edge_use) {
    for (const auto& [e, c] : edge_use)
      if (c != 0 && c != 2) return;
    int edges = 0;
    for (const auto& [e, c] : edge_use) edges += c == 2;
    if (n_ - edges + static_cast<int>(chosen.size()) != 2) return;
    std::vector<Face> faces;
    for (int c : chosen) faces.push_back(cands_[c]);
    for (VertexId v = 0; v < n_; ++v) {
      const auto s = link_sizes(faces, v);
      if (s.empty() || cyclic_min(s) != type_) return;
    }
    ++labeled_;
    if (images_.count(face_sets(faces))) return;
    classes_.push_back(faces);
    // Every relabelling of the new class, so later hits are a lookup.
    std::vector<VertexId> p(n_);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::vector<Face> image;
      for (const Face& f : faces) {
        Face g;
        for (VertexId v : f) g.push_back(p[v]);
        image.push_back(g);
      }
      images_.insert(face_sets(image));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int n_;
  std::vector<int> type_;
  std::map<int, int> profile_;
  std::vector<Face> cands_;
  std::vector<VertexId> pivots_;
  std::vector<std::vector<int>> by_vertex_;
  std::vector<std::vector<Face>> classes_;
  std::set<std::set<std::vector<VertexId>>> images_;
  long labeled_ = 0;
};

}  // namespace semap::testing
