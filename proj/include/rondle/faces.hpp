#pragma once

#include "rondle/plane_map.hpp"

namespace rondle {

// Derived view of the arrangement: canonical regions, the items each region
// hosts, and winding indices. Regions are faces of the full multi-curve
// arrangement (a face may be bounded by several clusters and loops).
struct RegionInfo {
  std::vector<Region> regions;               // canonical, regions[0] = Root
  std::map<Region, int> index_of;
  std::vector<std::vector<int>> child_clusters;  // cluster reps hosted per region
  std::vector<std::vector<int>> child_loops;     // loop ids hosted per region
  std::vector<int> region_of_face;               // face orbit -> region index
};

struct Arrangement {
  FaceSet fs;
  ClusterSet cl;
  RegionInfo ri;
};

inline Arrangement analyze(const Diagram& D) {
  Arrangement A;
  A.fs = compute_faces(D);
  A.cl = compute_clusters(D);
  auto& ri = A.ri;
  auto intern = [&](const Region& r) {
    auto it = ri.index_of.find(r);
    if (it != ri.index_of.end()) return it->second;
    int id = (int)ri.regions.size();
    ri.regions.push_back(r);
    ri.index_of.emplace(r, id);
    ri.child_clusters.emplace_back();
    ri.child_loops.emplace_back();
    return id;
  };
  intern(Region::root());
  ri.region_of_face.assign(A.fs.faces.size(), -1);
  for (int f = 0; f < (int)A.fs.faces.size(); ++f)
    ri.region_of_face[f] = intern(region_of_face(D, A.fs, A.cl, f));
  for (const auto& l : D.loops) {
    intern(Region::loop_inside(l.id));
    ri.child_loops[intern(l.parent)].push_back(l.id);
  }
  for (const auto& [rep, r] : D.cluster_parent)
    if (!A.cl.members.empty() && A.cl.members.count(rep)) ri.child_clusters[intern(r)].push_back(rep);
  return A;
}

inline int region_of_dart_idx(const Diagram& D, const Arrangement& A, Dart d) {
  return A.ri.region_of_face[A.fs.index_of(d)];
}

// Boundary cycle count of a bounded region: its own face cycle plus one per
// hosted item. Euler characteristic of the open region is 1 - #children.
inline int region_children(const Arrangement& A, int r) {
  return (int)(A.ri.child_clusters[r].size() + A.ri.child_loops[r].size());
}

// Winding indices of every region around each strand component (and the
// total). Propagated from the unbounded region across edges and loops.
struct WindingTable {
  // ind[r][c] = winding number of component c around region r
  std::vector<std::vector<int>> ind;
  Components comps;
};

inline WindingTable winding_indices(const Diagram& D, const Arrangement& A) {
  WindingTable W;
  W.comps = compute_components(D);
  const int R = (int)A.ri.regions.size();
  const int C = W.comps.count;
  W.ind.assign(R, std::vector<int>(C, 0));
  std::vector<char> done(R, 0);

  // adjacency: crossing edges and loops
  struct Step {
    int from, to, comp, delta;
  };
  std::vector<std::vector<Step>> adj(R);
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    if (!D.dart_alive(d) || !D.fwd[d]) continue;
    Dart m = D.mate[d];
    if (D.is_frame_dart(m)) continue;
    int left = region_of_dart_idx(D, A, d);
    int right = region_of_dart_idx(D, A, m);
    int c = W.comps.comp_of_dart[d];
    adj[right].push_back({right, left, c, +1});
    adj[left].push_back({left, right, c, -1});
  }
  for (const auto& l : D.loops) {
    int outside = A.ri.index_of.at(l.parent);
    int inside = A.ri.index_of.at(Region::loop_inside(l.id));
    int c = W.comps.loop_comp.at(l.id);
    adj[outside].push_back({outside, inside, c, l.orient});
    adj[inside].push_back({inside, outside, c, -l.orient});
  }

  std::vector<int> stack{0};
  done[0] = 1;
  while (!stack.empty()) {
    int r = stack.back();
    stack.pop_back();
    for (const auto& s : adj[r]) {
      if (done[s.to]) continue;
      W.ind[s.to] = W.ind[r];
      W.ind[s.to][s.comp] += s.delta;
      done[s.to] = 1;
      stack.push_back(s.to);
    }
  }
  for (int r = 0; r < R; ++r)
    if (!done[r]) throw std::logic_error("region graph not connected");
  return W;
}

// Rotation number of each component: the integral of the winding index
// against the Euler characteristic of the cell decomposition, computed
// exactly in quarters. Works on any diagram, including move products.
inline std::vector<int> rotation_numbers(const Diagram& D) {
  if (D.is_config()) throw std::invalid_argument("rotation numbers need a closed diagram");
  Arrangement A = analyze(D);
  WindingTable W = winding_indices(D, A);
  const int C = W.comps.count;
  std::vector<long long> quad(C, 0);  // 4 * rot

  // faces: ind * chi, chi = 1 - #children for bounded regions
  for (int r = 1; r < (int)A.ri.regions.size(); ++r) {
    long long chi = 1 - region_children(A, r);
    for (int c = 0; c < C; ++c) quad[c] += 4LL * W.ind[r][c] * chi;
  }
  // crossing edges: chi of an open arc is -1; index = mean of the two sides
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    if (!D.dart_alive(d) || !D.fwd[d]) continue;
    int left = region_of_dart_idx(D, A, d);
    int right = region_of_dart_idx(D, A, D.mate[d]);
    for (int c = 0; c < C; ++c) quad[c] -= 2LL * (W.ind[left][c] + W.ind[right][c]);
  }
  // crossings: chi +1; index = mean of the four sectors
  for (int cr : D.crossings()) {
    for (int p = 0; p < 4; ++p) {
      int r = region_of_dart_idx(D, A, make_dart(cr, p));
      for (int c = 0; c < C; ++c) quad[c] += W.ind[r][c];
    }
  }
  std::vector<int> rot(C, 0);
  for (int c = 0; c < C; ++c) {
    if (quad[c] % 4 != 0) throw std::logic_error("rotation number is not an integer");
    rot[c] = (int)(quad[c] / 4);
  }
  return rot;
}

inline std::vector<int> rotation_multiset(const Diagram& D) {
  auto r = rotation_numbers(D);
  std::sort(r.begin(), r.end());
  return r;
}

// ---- move sites ----

struct BigonSite {
  int face = -1;       // face orbit index
  Dart d1 = -1, d2 = -1;
  int c1 = -1, c2 = -1;
};

struct TriangleSite {
  int face = -1;
  Dart darts[3] = {-1, -1, -1};
  int crossings[3] = {-1, -1, -1};
  int q = 0;     // sides traversed coherently with the boundary
  int sign = 0;  // +1 positive (s_i s_{i+1} s_i pattern), -1 negative
};

// A face qualifies as a bigon or triangle site only if it is bounded, has
// the right corner count at distinct crossings, touches no frame, and hosts
// nothing (a move must sweep the disk through zero area).
inline bool face_is_empty_disk(const Diagram& D, const Arrangement& A, int f) {
  Dart rep = A.fs.rep(f);
  if (D.is_frame_dart(rep)) return false;
  for (Dart d : A.fs.faces[f])
    if (D.is_frame_dart(d)) return false;
  if (!D.is_config()) {
    int cluster = A.cl.rep_of[dart_crossing(rep)];
    if (A.fs.index_of(D.cluster_outer.at(cluster)) == f) return false;  // unbounded side
    int r = A.ri.region_of_face[f];
    if (region_children(A, r) > 0) return false;
  }
  return true;
}

inline std::vector<BigonSite> find_bigons(const Diagram& D, const Arrangement& A) {
  std::vector<BigonSite> out;
  for (int f = 0; f < (int)A.fs.faces.size(); ++f) {
    const auto& cyc = A.fs.faces[f];
    if (cyc.size() != 2) continue;
    int c1 = dart_crossing(cyc[0]), c2 = dart_crossing(cyc[1]);
    if (D.is_frame_dart(cyc[0]) || D.is_frame_dart(cyc[1]) || c1 == c2) continue;
    if (!face_is_empty_disk(D, A, f)) continue;
    out.push_back({f, cyc[0], cyc[1], c1, c2});
  }
  return out;
}

// Triangle sign from the boundary: walking the face keeps it on the left,
// so side dart d is coherent with the strand iff the strand exits via d.
// q = 2 on the s_i s_{i+1} s_i pattern of an upward configuration, q = 1 on
// its Yang-Baxter partner; a flip sends q to 3 - q.
inline int triangle_q(const Diagram& D, const std::vector<Dart>& cyc) {
  int q = 0;
  for (Dart d : cyc) q += D.fwd[d] ? 1 : 0;
  return q;
}

inline std::vector<TriangleSite> find_triangles(const Diagram& D, const Arrangement& A) {
  std::vector<TriangleSite> out;
  for (int f = 0; f < (int)A.fs.faces.size(); ++f) {
    const auto& cyc = A.fs.faces[f];
    if (cyc.size() != 3) continue;
    int c0 = dart_crossing(cyc[0]), c1 = dart_crossing(cyc[1]), c2 = dart_crossing(cyc[2]);
    if (D.is_frame_dart(cyc[0]) || D.is_frame_dart(cyc[1]) || D.is_frame_dart(cyc[2])) continue;
    if (c0 == c1 || c1 == c2 || c0 == c2) continue;  // degenerate triangles excluded
    if (!face_is_empty_disk(D, A, f)) continue;
    TriangleSite t;
    t.face = f;
    for (int i = 0; i < 3; ++i) {
      t.darts[i] = cyc[i];
      t.crossings[i] = dart_crossing(cyc[i]);
    }
    t.q = triangle_q(D, cyc);
    t.sign = t.q >= 2 ? +1 : -1;
    out.push_back(t);
  }
  return out;
}

// Def.-2.8 disjointness: no shared vertex, edge, or face.
inline bool triangles_disjoint(const TriangleSite& a, const TriangleSite& b) {
  if (a.face == b.face) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (a.crossings[i] == b.crossings[j]) return false;
  return true;
}

}  // namespace rondle
