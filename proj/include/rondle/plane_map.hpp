#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace rondle {

// Darts. A crossing c owns darts 4c+p, ports p = 0..3 in counterclockwise
// order with the transversal strand pairs {0,2} and {1,3}; in construction
// coordinates the germs point NE, NW, SW, SE. A dart is the half-edge at its
// crossing, directed away from it. Configurations additionally own a frame
// pseudo-vertex (the point at infinity of the strip) with 2k ports at
// 4*cap + j, in counterclockwise order (b_k .. b_1, t_1 .. t_k).
using Dart = int;

inline int dart_crossing(Dart d) { return d >> 2; }
inline int dart_port(Dart d) { return d & 3; }
inline Dart make_dart(int c, int p) { return 4 * c + p; }
inline Dart dart_opp(Dart d) { return d ^ 2; }  // strand continuation through the crossing

// Geometry carried by freshly constructed diagrams (scaled integer
// coordinates); moves drop it.
struct Layout {
  // per edge, keyed by one of its darts: polyline from that dart's end
  std::map<Dart, std::vector<std::pair<long long, long long>>> edge_paths;
  std::map<int, std::vector<std::pair<long long, long long>>> loop_paths;  // closed
};

// A region of the plane in the nesting forest: the unbounded region, the
// interior of a bounded non-outer face of some cluster (identified by the
// minimal dart of its orbit), or the inside of a crossing-free loop.
struct Region {
  enum Kind { Root, FaceIn, LoopIn } kind = Root;
  Dart dart = -1;
  int loop = -1;

  static Region root() { return {}; }
  static Region face(Dart d) { return {FaceIn, d, -1}; }
  static Region loop_inside(int id) { return {LoopIn, -1, id}; }

  bool operator==(const Region& o) const {
    return kind == o.kind && dart == o.dart && loop == o.loop;
  }
  bool operator!=(const Region& o) const { return !(*this == o); }
  bool operator<(const Region& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (dart != o.dart) return dart < o.dart;
    return loop < o.loop;
  }
};

struct FreeLoop {
  int id = 0;
  int orient = 1;  // +1 counterclockwise
  Region parent;   // the region just outside the loop
};

struct Diagram {
  int cap = 0;  // crossing ids live in [0, cap); dead ids are never reused
  int frame_arcs = 0;
  std::vector<char> alive;
  std::vector<Dart> mate;  // size 4*cap + 2*frame_arcs
  std::vector<char> fwd;   // strand exits its crossing via this dart
  std::vector<FreeLoop> loops;
  int next_loop_id = 0;
  std::map<int, Region> cluster_parent;  // keyed by min crossing id of the cluster
  std::map<int, Dart> cluster_outer;     // cluster -> a dart on its outer orbit
  std::optional<Dart> base;
  std::shared_ptr<const Layout> layout;

  bool is_config() const { return frame_arcs > 0; }
  int frame_ports() const { return 2 * frame_arcs; }
  int dart_count() const { return 4 * cap + frame_ports(); }
  bool is_frame_dart(Dart d) const { return d >= 4 * cap; }

  bool dart_alive(Dart d) const {
    if (is_frame_dart(d)) return d < dart_count();
    return d >= 0 && d < 4 * cap && alive[dart_crossing(d)];
  }

  int n_crossings() const {
    int n = 0;
    for (char a : alive) n += a ? 1 : 0;
    return n;
  }

  std::vector<int> crossings() const {
    std::vector<int> cs;
    for (int c = 0; c < cap; ++c)
      if (alive[c]) cs.push_back(c);
    return cs;
  }

  // counterclockwise next dart around the vertex
  Dart sigma(Dart d) const {
    if (is_frame_dart(d)) {
      int j = d - 4 * cap;
      return 4 * cap + (j + 1) % frame_ports();
    }
    return (d & ~3) | ((d + 1) & 3);
  }
  Dart sigma_inv(Dart d) const {
    if (is_frame_dart(d)) {
      int j = d - 4 * cap;
      return 4 * cap + (j + frame_ports() - 1) % frame_ports();
    }
    return (d & ~3) | ((d + 3) & 3);
  }

  // Next dart along the face boundary; the face lies on the LEFT of each
  // dart's outward direction.
  Dart face_next(Dart d) const { return sigma_inv(mate[d]); }

  // Frame dart of bottom endpoint i (1-based) and top endpoint i.
  Dart frame_bottom(int i) const { return 4 * cap + (frame_arcs - i); }
  Dart frame_top(int i) const { return 4 * cap + (frame_arcs - 1 + i); }

  int fresh_loop_id() { return next_loop_id++; }
  const FreeLoop* find_loop(int id) const {
    for (const auto& l : loops)
      if (l.id == id) return &l;
    return nullptr;
  }
};

// All face orbits of the map (per cluster; regions with no darts, such as
// the inside of a free loop, are not listed here).
struct FaceSet {
  std::vector<std::vector<Dart>> faces;  // in traversal order, rotated so front() is minimal
  std::vector<int> face_of;              // dart -> face index, -1 for dead darts

  int index_of(Dart d) const { return face_of[d]; }
  Dart rep(int f) const { return faces[f].front(); }
};

inline FaceSet compute_faces(const Diagram& D) {
  FaceSet fs;
  fs.face_of.assign(D.dart_count(), -1);
  for (Dart d0 = 0; d0 < D.dart_count(); ++d0) {
    if (!D.dart_alive(d0) || fs.face_of[d0] != -1) continue;
    std::vector<Dart> cyc;
    Dart d = d0;
    do {
      fs.face_of[d] = (int)fs.faces.size();
      cyc.push_back(d);
      d = D.face_next(d);
      if ((int)cyc.size() > D.dart_count()) throw std::logic_error("face traversal diverged");
    } while (d != d0);
    // rotate so the minimal dart leads
    auto mn = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mn, cyc.end());
    fs.faces.push_back(std::move(cyc));
  }
  return fs;
}

// Clusters: connected components of alive crossings under edge adjacency.
// Each cluster is named by its minimal crossing id.
struct ClusterSet {
  std::map<int, std::vector<int>> members;  // rep -> crossings
  std::vector<int> rep_of;                  // crossing -> rep, -1 dead
};

inline ClusterSet compute_clusters(const Diagram& D) {
  ClusterSet cs;
  cs.rep_of.assign(D.cap, -1);
  std::vector<int> parent(D.cap);
  for (int c = 0; c < D.cap; ++c) parent[c] = c;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < D.cap; ++c) {
    if (!D.alive[c]) continue;
    for (int p = 0; p < 4; ++p) {
      Dart m = D.mate[make_dart(c, p)];
      if (!D.is_frame_dart(m)) {
        int a = find(c), b = find(dart_crossing(m));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  for (int c = 0; c < D.cap; ++c) {
    if (!D.alive[c]) continue;
    int r = find(c);
    cs.rep_of[c] = r;
    cs.members[r].push_back(c);
  }
  return cs;
}

// Canonical region of a face orbit: outer orbits stand for the region of
// the cluster's parent.
inline Region region_of_face(const Diagram& D, const FaceSet& fs, const ClusterSet& cl, int f) {
  Dart rep = fs.rep(f);
  if (D.is_frame_dart(rep)) return Region::root();  // configurations: frame-touching faces
  int cluster = cl.rep_of[dart_crossing(rep)];
  auto it = D.cluster_outer.find(cluster);
  if (it != D.cluster_outer.end() && fs.index_of(it->second) == f) {
    auto pit = D.cluster_parent.find(cluster);
    return pit == D.cluster_parent.end() ? Region::root() : pit->second;
  }
  return Region::face(rep);
}

inline Region region_of_dart(const Diagram& D, const FaceSet& fs, const ClusterSet& cl, Dart d) {
  return region_of_face(D, fs, cl, fs.index_of(d));
}

// Forest depth of a region (Root = 0); walks cluster/loop parents.
inline int region_depth(const Diagram& D, const FaceSet& fs, const ClusterSet& cl,
                        const Region& r0) {
  Region r = r0;
  int depth = 0;
  int guard = 0;
  while (r.kind != Region::Root) {
    if (++guard > (int)D.loops.size() + (int)D.cluster_parent.size() + 4)
      throw std::logic_error("nesting forest has a cycle");
    if (r.kind == Region::LoopIn) {
      const FreeLoop* l = D.find_loop(r.loop);
      if (!l) throw std::logic_error("dangling loop region");
      r = l->parent;
    } else {
      int cluster = cl.rep_of[dart_crossing(r.dart)];
      auto it = D.cluster_parent.find(cluster);
      r = it == D.cluster_parent.end() ? Region::root() : it->second;
    }
    ++depth;
  }
  return depth;
}

// Strand components. Every alive edge belongs to one component; free loops
// are their own components.
struct Components {
  std::vector<int> comp_of_dart;  // dart -> component id, -1 dead/frame
  std::map<int, int> loop_comp;   // loop id -> component id
  int count = 0;
};

inline Components compute_components(const Diagram& D) {
  Components co;
  co.comp_of_dart.assign(D.dart_count(), -1);
  for (Dart d0 = 0; d0 < 4 * D.cap; ++d0) {
    if (!D.dart_alive(d0) || co.comp_of_dart[d0] != -1) continue;
    int id = co.count++;
    // walk the strand in both dart directions: dart -> mate, then opp
    std::vector<Dart> stack{d0};
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      if (D.is_frame_dart(d) || co.comp_of_dart[d] != -1) continue;
      co.comp_of_dart[d] = id;
      stack.push_back(dart_opp(d));
      Dart m = D.mate[d];
      if (!D.is_frame_dart(m)) stack.push_back(m);
    }
  }
  for (const auto& l : D.loops) co.loop_comp[l.id] = co.count++;
  return co;
}

// Delete a set of crossings, reconnecting every strand through them.
// Strands lying entirely inside the deleted set are reported as closed
// cycles of dying darts (the caller turns them into free loops).
struct SpliceResult {
  std::vector<std::pair<Dart, Dart>> new_edges;        // re-mated surviving dart pairs
  std::vector<std::vector<Dart>> vanished_cycles;      // dying-dart strand cycles
  std::map<Dart, Dart> far_end;                        // dying dart -> surviving far end (if any)
};

inline SpliceResult splice_delete(Diagram& D, const std::set<int>& dead) {
  SpliceResult res;
  auto dying = [&](Dart d) { return !D.is_frame_dart(d) && dead.count(dart_crossing(d)) > 0; };

  std::set<Dart> consumed;
  for (int c : dead)
    for (int p = 0; p < 4; ++p) {
      Dart start = make_dart(c, p);
      Dart s = D.mate[start];
      if (dying(s) || consumed.count(start)) continue;
      // s survives; walk through the dead zone to the far survivor
      Dart t = start;
      std::vector<Dart> passed;
      while (dying(t)) {
        passed.push_back(t);
        passed.push_back(dart_opp(t));
        consumed.insert(t);
        consumed.insert(dart_opp(t));
        t = D.mate[dart_opp(t)];
      }
      D.mate[s] = t;
      D.mate[t] = s;
      res.new_edges.emplace_back(s, t);
      for (Dart d : passed) res.far_end[d] = t;
    }
  // strands entirely inside the dead set
  for (int c : dead)
    for (int p = 0; p < 4; ++p) {
      Dart d0 = make_dart(c, p);
      if (consumed.count(d0)) continue;
      std::vector<Dart> cyc;
      Dart d = d0;
      do {
        cyc.push_back(d);
        consumed.insert(d);
        consumed.insert(dart_opp(d));
        d = D.mate[dart_opp(d)];
        if (!dying(d)) throw std::logic_error("splice: mixed cycle");
      } while (d != d0);
      res.vanished_cycles.push_back(std::move(cyc));
    }
  for (int c : dead) D.alive[c] = 0;
  return res;
}

// Structural consistency: mate involution, orientation coherence, and the
// per-cluster Euler relation F = V + 2 that a plane embedding must satisfy.
inline void validate_diagram(const Diagram& D) {
  for (Dart d = 0; d < D.dart_count(); ++d) {
    if (!D.dart_alive(d)) continue;
    Dart m = D.mate[d];
    if (!D.dart_alive(m) || D.mate[m] != d || m == d)
      throw std::logic_error("mate is not a fixed-point-free involution");
    if (D.fwd[d] == D.fwd[m]) throw std::logic_error("edge with two heads or two tails");
  }
  for (int c : D.crossings()) {
    bool f0 = D.fwd[make_dart(c, 0)], f1 = D.fwd[make_dart(c, 1)];
    if (f0 == D.fwd[make_dart(c, 2)] || f1 == D.fwd[make_dart(c, 3)])
      throw std::logic_error("strand orientation broken at a crossing");
  }
  FaceSet fs = compute_faces(D);
  ClusterSet cl = compute_clusters(D);
  if (!D.is_config()) {
    // Euler per cluster
    std::map<int, int> facecount;
    for (int f = 0; f < (int)fs.faces.size(); ++f)
      facecount[cl.rep_of[dart_crossing(fs.rep(f))]]++;
    for (const auto& [rep, members] : cl.members) {
      if (facecount[rep] != (int)members.size() + 2)
        throw std::logic_error("cluster violates the Euler relation");
      if (!D.cluster_outer.count(rep) || !D.cluster_parent.count(rep))
        throw std::logic_error("cluster missing embedding data");
      Dart od = D.cluster_outer.at(rep);
      if (!D.dart_alive(od) || cl.rep_of[dart_crossing(od)] != rep)
        throw std::logic_error("cluster outer dart invalid");
    }
    for (const auto& [rep, r] : D.cluster_parent) {
      if (!cl.members.count(rep)) throw std::logic_error("stale cluster parent entry");
      region_depth(D, fs, cl, r);  // throws on cycles / dangling references
      if (r.kind == Region::FaceIn) {
        if (!D.dart_alive(r.dart)) throw std::logic_error("parent region dart dead");
        Region canon = region_of_dart(D, fs, cl, r.dart);
        if (canon != r) throw std::logic_error("parent region not canonical");
      }
    }
    for (const auto& l : D.loops) region_depth(D, fs, cl, l.parent);
  }
}

}  // namespace rondle
