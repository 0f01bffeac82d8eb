// Copyright 2026 The fatghom Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fatghom/isomorphism.h"

#include <deque>
#include <functional>
#include <numeric>

#include "fatghom/permutation.h"
#include "union_find.h"

namespace fatghom {

namespace {

int Mod(int a, int z) { return ((a % z) + z) % z; }

// Propagates a partial isomorphism outward from one seeded vertex.
class Extender {
 public:
  Extender(const Fatgraph& g1, const Fatgraph& g2,
           const std::vector<int>& loops1, const std::vector<int>& loops2)
      : g1_(g1), g2_(g2), loops1_(loops1), loops2_(loops2) {}

  // Attempts to extend pv[v1] = v2 with rotation r. A non-null `fixed_pe`
  // pins the edge map.
  std::optional<Isomorphism> Extend(int v1, int v2, int r,
                                    const std::vector<EdgeLabel>* fixed_pe) {
    const int l = g1_.num_vertices();
    const int m = g1_.num_edges();
    iso_.pv.assign(l, -1);
    iso_.rot.assign(l, 0);
    pv_inv_.assign(l, -1);
    if (fixed_pe != nullptr) {
      iso_.pe = *fixed_pe;
      pe_inv_.assign(m, -1);
      for (EdgeLabel e = 0; e < m; ++e) pe_inv_[iso_.pe[e]] = e;
    } else {
      iso_.pe.assign(m, -1);
      pe_inv_.assign(m, -1);
    }
    queue_.clear();
    if (!Assign(v1, v2, r)) return std::nullopt;
    while (!queue_.empty()) {
      const int v = queue_.front();
      queue_.pop_front();
      const Vertex& src = g1_.vertex(v);
      const int w = iso_.pv[v];
      const int rv = iso_.rot[v];
      for (int j = 0; j < src.valence(); ++j) {
        const Endpoint far1 = g1_.edge(src[j]).OtherEnd({v, j});
        const int b = (j + rv) % g2_.vertex(w).valence();
        const Endpoint far2 = g2_.edge(iso_.pe[src[j]]).OtherEnd({w, b});
        const int z = g1_.vertex(far1.vertex).valence();
        if (g2_.vertex(far2.vertex).valence() != z) return std::nullopt;
        const int r2 = Mod(far2.attachment - far1.attachment, z);
        if (iso_.pv[far1.vertex] >= 0) {
          if (iso_.pv[far1.vertex] != far2.vertex ||
              iso_.rot[far1.vertex] != r2) {
            return std::nullopt;
          }
        } else if (!Assign(far1.vertex, far2.vertex, r2)) {
          return std::nullopt;
        }
      }
    }
    return iso_;
  }

 private:
  bool Assign(int v, int w, int r) {
    const Vertex& a = g1_.vertex(v);
    const Vertex& b = g2_.vertex(w);
    if (pv_inv_[w] >= 0 || a.valence() != b.valence() ||
        loops1_[v] != loops2_[w]) {
      return false;
    }
    iso_.pv[v] = w;
    iso_.rot[v] = r;
    pv_inv_[w] = v;
    const int z = a.valence();
    for (int j = 0; j < z; ++j) {
      const EdgeLabel e1 = a[j];
      const EdgeLabel e2 = b[(j + r) % z];
      if (iso_.pe[e1] < 0 && pe_inv_[e2] < 0) {
        iso_.pe[e1] = e2;
        pe_inv_[e2] = e1;
      } else if (iso_.pe[e1] != e2 || pe_inv_[e2] != e1) {
        return false;
      }
    }
    queue_.push_back(v);
    return true;
  }

  const Fatgraph& g1_;
  const Fatgraph& g2_;
  const std::vector<int>& loops1_;
  const std::vector<int>& loops2_;
  Isomorphism iso_;
  std::vector<int> pv_inv_;
  std::vector<EdgeLabel> pe_inv_;
  std::deque<int> queue_;
};

std::vector<int> LoopCounts(const Fatgraph& g) {
  std::vector<int> loops(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) loops[v] = g.vertex(v).num_loops();
  return loops;
}

// Valence z of g2 minimizing z * (number of vertices of valence z), larger z
// on ties.
int StartingValence(const Fatgraph& g2) {
  std::vector<int> count;
  for (const Vertex& v : g2.vertices()) {
    if (v.valence() >= static_cast<int>(count.size())) count.resize(v.valence() + 1);
    ++count[v.valence()];
  }
  int best = -1;
  for (int z = 0; z < static_cast<int>(count.size()); ++z) {
    if (count[z] == 0) continue;
    if (best < 0 || z * count[z] <= best * count[best]) best = z;
  }
  return best;
}

// Calls `visit` on each isomorphism in canonical order until it returns false.
void EnumerateIsomorphisms(const Fatgraph& g1, const Fatgraph& g2,
                           const std::vector<EdgeLabel>* fixed_pe,
                           const std::function<bool(Isomorphism&&)>& visit) {
  if (!(g1.signature() == g2.signature())) return;
  const std::vector<int> loops1 = LoopCounts(g1);
  const std::vector<int> loops2 = LoopCounts(g2);
  const int z = StartingValence(g2);
  int v1 = 0;
  while (g1.vertex(v1).valence() != z) ++v1;
  Extender extender(g1, g2, loops1, loops2);
  for (int v2 = 0; v2 < g2.num_vertices(); ++v2) {
    if (g2.vertex(v2).valence() != z || loops2[v2] != loops1[v1]) continue;
    for (int r = 0; r < z; ++r) {
      std::optional<Isomorphism> f = extender.Extend(v1, v2, r, fixed_pe);
      if (f.has_value() && !visit(std::move(*f))) return;
    }
  }
}

int OrientedIndex(OrientedEdge x) { return 2 * x.edge + (x.side > 0 ? 1 : 0); }
OrientedEdge FromOrientedIndex(int i) { return {i / 2, (i % 2) ? 1 : -1}; }

}  // namespace

Isomorphism IdentityIsomorphism(const Fatgraph& g) {
  Isomorphism f;
  f.pv.resize(g.num_vertices());
  std::iota(f.pv.begin(), f.pv.end(), 0);
  f.rot.assign(g.num_vertices(), 0);
  f.pe.resize(g.num_edges());
  std::iota(f.pe.begin(), f.pe.end(), 0);
  return f;
}

bool IsValidIsomorphism(const Isomorphism& f, const Fatgraph& g1,
                        const Fatgraph& g2) {
  const int l = g1.num_vertices();
  const int m = g1.num_edges();
  if (g2.num_vertices() != l || g2.num_edges() != m ||
      static_cast<int>(f.pv.size()) != l || static_cast<int>(f.rot.size()) != l ||
      static_cast<int>(f.pe.size()) != m) {
    return false;
  }
  std::vector<bool> hit_v(l, false), hit_e(m, false);
  for (int v = 0; v < l; ++v) {
    if (f.pv[v] < 0 || f.pv[v] >= l || hit_v[f.pv[v]]) return false;
    hit_v[f.pv[v]] = true;
  }
  for (EdgeLabel e = 0; e < m; ++e) {
    if (f.pe[e] < 0 || f.pe[e] >= m || hit_e[f.pe[e]]) return false;
    hit_e[f.pe[e]] = true;
  }
  for (int v = 0; v < l; ++v) {
    const Vertex& a = g1.vertex(v);
    const Vertex& b = g2.vertex(f.pv[v]);
    if (a.valence() != b.valence()) return false;
    for (int j = 0; j < a.valence(); ++j) {
      if (b.Cyclic(j + f.rot[v]) != f.pe[a[j]]) return false;
    }
  }
  return true;
}

Isomorphism Compose(const Isomorphism& f, const Isomorphism& h,
                    const Fatgraph& g1) {
  Isomorphism out;
  const int l = static_cast<int>(f.pv.size());
  out.pv.resize(l);
  out.rot.resize(l);
  for (int v = 0; v < l; ++v) {
    out.pv[v] = h.pv[f.pv[v]];
    out.rot[v] = (f.rot[v] + h.rot[f.pv[v]]) % g1.vertex(v).valence();
  }
  out.pe.resize(f.pe.size());
  for (std::size_t e = 0; e < f.pe.size(); ++e) out.pe[e] = h.pe[f.pe[e]];
  return out;
}

Isomorphism Inverse(const Isomorphism& f, const Fatgraph& g1) {
  Isomorphism out;
  const int l = static_cast<int>(f.pv.size());
  out.pv.resize(l);
  out.rot.resize(l);
  for (int v = 0; v < l; ++v) {
    const int z = g1.vertex(v).valence();
    out.pv[f.pv[v]] = v;
    out.rot[f.pv[v]] = Mod(-f.rot[v], z);
  }
  out.pe.resize(f.pe.size());
  for (std::size_t e = 0; e < f.pe.size(); ++e) out.pe[f.pe[e]] = static_cast<int>(e);
  return out;
}

std::vector<Isomorphism> Isomorphisms(const Fatgraph& g1, const Fatgraph& g2) {
  std::vector<Isomorphism> out;
  EnumerateIsomorphisms(g1, g2, nullptr, [&](Isomorphism&& f) {
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

std::optional<Isomorphism> FirstIsomorphism(const Fatgraph& g1,
                                            const Fatgraph& g2) {
  std::optional<Isomorphism> out;
  EnumerateIsomorphisms(g1, g2, nullptr, [&](Isomorphism&& f) {
    out = std::move(f);
    return false;
  });
  return out;
}

bool AreIsomorphic(const Fatgraph& g1, const Fatgraph& g2) {
  return FirstIsomorphism(g1, g2).has_value();
}

std::vector<Isomorphism> Automorphisms(const Fatgraph& g) {
  return Isomorphisms(g, g);
}

int CompareOrientations(const Isomorphism& f, const Fatgraph& g1,
                        const Fatgraph& g2) {
  std::vector<int> images(g1.num_edges());
  for (EdgeLabel e = 0; e < g1.num_edges(); ++e) {
    images[g1.orientation()[e]] = g2.orientation()[f.pe[e]];
  }
  return PermutationSign(images);
}

bool IsOrientationReversing(const Fatgraph& g, const Isomorphism& a) {
  return CompareOrientations(a, g, g) < 0;
}

bool IsOrientable(const Fatgraph& g, const std::vector<Isomorphism>& automorphisms) {
  for (const Isomorphism& a : automorphisms) {
    if (IsOrientationReversing(g, a)) return false;
  }
  return true;
}

bool IsOrientable(const Fatgraph& g) { return IsOrientable(g, Automorphisms(g)); }

BoundaryCycle TransformBoundaryCycle(const Isomorphism& f,
                                     const Fatgraph& source,
                                     const BoundaryCycle& b) {
  std::vector<Corner> corners;
  corners.reserve(b.size());
  for (const Corner& c : b.corners()) {
    const int z = source.vertex(c.vertex).valence();
    corners.push_back({f.pv[c.vertex], (c.incoming + f.rot[c.vertex]) % z,
                       (c.outgoing + f.rot[c.vertex]) % z});
  }
  return BoundaryCycle(std::move(corners));
}

OrientedEdge TransformOrientedEdge(const Isomorphism& f, const Fatgraph& source,
                                   const Fatgraph& target, OrientedEdge x) {
  const Endpoint head = source.edge(x.edge).ends[0];
  const int z = source.vertex(head.vertex).valence();
  const Endpoint image{f.pv[head.vertex], (head.attachment + f.rot[head.vertex]) % z};
  const EdgeLabel e = f.pe[x.edge];
  return {e, image == target.edge(e).ends[0] ? x.side : -x.side};
}

std::vector<EdgeLabel> EdgeOrbits(const Fatgraph& g,
                                  const std::vector<Isomorphism>& automorphisms) {
  internal::UnionFind orbits(g.num_edges());
  for (const Isomorphism& a : automorphisms) {
    for (EdgeLabel e = 0; e < g.num_edges(); ++e) orbits.Union(e, a.pe[e]);
  }
  std::vector<EdgeLabel> out;
  for (EdgeLabel e = 0; e < g.num_edges(); ++e) {
    if (orbits.Find(e) == e) out.push_back(e);
  }
  return out;
}

std::vector<EdgeLabel> EdgeOrbits(const Fatgraph& g) {
  return EdgeOrbits(g, Automorphisms(g));
}

std::vector<OrientedEdge> OrientedEdgeOrbits(
    const Fatgraph& g, const std::vector<Isomorphism>& automorphisms) {
  const int k = 2 * g.num_edges();
  internal::UnionFind orbits(k);
  for (const Isomorphism& a : automorphisms) {
    for (int i = 0; i < k; ++i) {
      orbits.Union(i, OrientedIndex(TransformOrientedEdge(a, g, g, FromOrientedIndex(i))));
    }
  }
  std::vector<OrientedEdge> out;
  for (int i = 0; i < k; ++i) {
    if (orbits.Find(i) == i) out.push_back(FromOrientedIndex(i));
  }
  return out;
}

std::vector<std::pair<OrientedEdge, OrientedEdge>> OrientedEdgePairOrbits(
    const Fatgraph& g, const std::vector<Isomorphism>& automorphisms) {
  const int k = 2 * g.num_edges();
  internal::UnionFind orbits(k * k);
  std::vector<int> image(k);
  for (const Isomorphism& a : automorphisms) {
    for (int i = 0; i < k; ++i) {
      image[i] = OrientedIndex(TransformOrientedEdge(a, g, g, FromOrientedIndex(i)));
    }
    for (int x = 0; x < k; ++x) {
      for (int y = 0; y < k; ++y) orbits.Union(x * k + y, image[x] * k + image[y]);
    }
  }
  std::vector<std::pair<OrientedEdge, OrientedEdge>> out;
  for (int i = 0; i < k * k; ++i) {
    if (orbits.Find(i) == i) {
      out.emplace_back(FromOrientedIndex(i / k), FromOrientedIndex(i % k));
    }
  }
  return out;
}

std::vector<std::pair<OrientedEdge, OrientedEdge>> OrientedEdgePairOrbits(
    const Fatgraph& g) {
  return OrientedEdgePairOrbits(g, Automorphisms(g));
}

Isomorphism IsoFromEdgeMap(const Fatgraph& g1, const Fatgraph& g2,
                           const std::vector<EdgeLabel>& eta) {
  const int m = g1.num_edges();
  bool ok = g2.num_edges() == m && static_cast<int>(eta.size()) == m;
  if (ok) {
    std::vector<bool> hit(m, false);
    for (EdgeLabel e : eta) {
      if (e < 0 || e >= m || hit[e]) {
        ok = false;
        break;
      }
      hit[e] = true;
    }
  }
  std::optional<Isomorphism> out;
  if (ok) {
    EnumerateIsomorphisms(g1, g2, &eta, [&](Isomorphism&& f) {
      out = std::move(f);
      return false;
    });
  }
  if (!out.has_value()) {
    throw FatgraphError(ErrorCode::kNotIncidencePreserving,
                        "edge map does not extend to an isomorphism");
  }
  return *std::move(out);
}

}  // namespace fatghom
