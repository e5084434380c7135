#pragma once

#include "rondle/plane_map.hpp"
#include "rondle/twin_word.hpp"

namespace rondle {

// Construction geometry (integer coordinates, all even): column i sits at
// x = 4i; the crossing of letter j (generator g) sits at (4g+2, 4(j+1));
// strands flow upward; closure return arcs leave top endpoint i, wrap
// around the right side at nesting offset 4(k-i+1), and re-enter bottom
// endpoint i from below. Arc 1 is outermost, so closure arcs never cross
// each other, themselves, or the strip.
//
// Layout convention: edge_paths[d] is the polyline of d's edge starting at
// d's own endpoint. Traveling the polyline, the face on the left is face(d).

namespace construct_detail {

using P = std::pair<long long, long long>;

struct Wiring {
  int cap = 0;
  std::vector<Dart> mate;
  std::vector<char> fwd;
  std::vector<Dart> bottom_stub, top_stub;        // per column, -1 if bare
  std::map<Dart, std::vector<P>> stub_path;       // from the stub dart's crossing outward
  std::map<Dart, std::vector<P>> edge_paths;      // interior edges, keyed per convention
  long long y_top = 0;
};

inline void append_path(std::vector<P>& out, const std::vector<P>& add) {
  for (const auto& q : add) {
    if (!out.empty() && out.back() == q) continue;
    out.push_back(q);
  }
}

inline Wiring wire_word(const TwinWord& w) {
  const int k = w.arcs, m = (int)w.letters.size();
  Wiring W;
  W.cap = m;
  W.mate.assign(4 * m, -1);
  W.fwd.assign(4 * m, 0);
  W.y_top = 4 * (m + 2);

  std::vector<Dart> cur(k + 1, -1);  // dangling upper dart per column
  W.bottom_stub.assign(k + 1, -1);
  W.top_stub.assign(k + 1, -1);

  for (int j = 0; j < m; ++j) {
    int g = w.letters[j];
    long long yc = 4 * (j + 1);
    P pc = {4 * g + 2, yc};
    Dart ne = make_dart(j, 0), nw = make_dart(j, 1), sw = make_dart(j, 2), se = make_dart(j, 3);
    W.fwd[ne] = W.fwd[nw] = 1;

    auto connect_below = [&](int col, Dart lower) {
      std::vector<P> down = {pc, {4 * col, yc - 2}};
      if (cur[col] == -1) {
        down.push_back({4 * col, 0});
        W.bottom_stub[col] = lower;
        W.stub_path[lower] = down;
      } else {
        Dart up = cur[col];
        W.mate[lower] = up;
        W.mate[up] = lower;
        std::vector<P> full = W.stub_path[up];  // starts at the older crossing
        std::reverse(down.begin(), down.end());
        append_path(full, down);
        W.edge_paths[up] = full;
        W.stub_path.erase(up);
      }
    };
    connect_below(g, sw);
    connect_below(g + 1, se);
    cur[g] = nw;
    W.stub_path[nw] = {pc, {(long long)4 * g, yc + 2}};
    cur[g + 1] = ne;
    W.stub_path[ne] = {pc, {(long long)4 * (g + 1), yc + 2}};
  }
  for (int i = 1; i <= k; ++i) {
    if (cur[i] == -1) continue;
    W.top_stub[i] = cur[i];
    W.stub_path[cur[i]].push_back({4 * i, W.y_top});
  }
  return W;
}

// First hit of the upward vertical ray x = rx (rx odd), y > ry, against a
// polyline with even coordinates; exact rational comparison.
struct RayHit {
  bool found = false;
  long long num = 0, den = 1;  // hit y = num/den
  int xdir = 0;                // sign of the crossed segment's x step
};

inline bool hit_better(const RayHit& a, const RayHit& b) {  // a strictly lower than b
  if (!a.found) return false;
  if (!b.found) return true;
  return a.num * b.den < b.num * a.den;
}

inline void ray_up_polyline(long long rx, long long ry, const std::vector<P>& pts, bool closed,
                            RayHit& best) {
  size_t n = pts.size();
  size_t limit = closed ? n : n - 1;
  for (size_t s = 0; s < limit; ++s) {
    auto [x1, y1] = pts[s];
    auto [x2, y2] = pts[(s + 1) % n];
    if (x1 == x2 || ((x1 < rx) == (x2 < rx))) continue;
    long long den = x2 - x1;
    long long num = y1 * den + (y2 - y1) * (rx - x1);
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num <= ry * den) continue;
    RayHit h{true, num, den, (x2 > x1) ? 1 : -1};
    if (hit_better(h, best)) best = h;
  }
}

inline int count_crossings_above(long long rx, long long ry, const std::vector<P>& pts,
                                 bool closed) {
  size_t n = pts.size();
  size_t limit = closed ? n : n - 1;
  int count = 0;
  for (size_t s = 0; s < limit; ++s) {
    auto [x1, y1] = pts[s];
    auto [x2, y2] = pts[(s + 1) % n];
    if (x1 == x2 || ((x1 < rx) == (x2 < rx))) continue;
    long long den = x2 - x1;
    long long num = y1 * den + (y2 - y1) * (rx - x1);
    if (den < 0) {
      den = -den;
      num = -num;
    }
    if (num > ry * den) ++count;
  }
  return count;
}

}  // namespace construct_detail

// Configuration of a twin word: one transverse double point per letter,
// stacked bottom to top, arc ends pinned to the frame at infinity.
inline Diagram from_twin(const TwinWord& w) {
  w.validate();
  const int k = w.arcs;
  construct_detail::Wiring W = construct_detail::wire_word(w);
  Diagram D;
  D.cap = W.cap;
  D.frame_arcs = k;
  D.alive.assign(D.cap, 1);
  D.mate.assign(D.dart_count(), -1);
  D.fwd.assign(D.dart_count(), 0);
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    D.mate[d] = W.mate[d] == -1 ? -1 : W.mate[d];
    D.fwd[d] = W.fwd[d];
  }
  auto layout = std::make_shared<Layout>();
  layout->edge_paths = W.edge_paths;

  for (int i = 1; i <= k; ++i) {
    Dart fb = D.frame_bottom(i), ft = D.frame_top(i);
    D.fwd[fb] = 1;
    D.fwd[ft] = 0;
    if (W.bottom_stub[i] == -1) {
      D.mate[fb] = ft;
      D.mate[ft] = fb;
      layout->edge_paths[fb] = {{4 * i, 0}, {4 * i, W.y_top}};
    } else {
      Dart bs = W.bottom_stub[i], ts = W.top_stub[i];
      D.mate[fb] = bs;
      D.mate[bs] = fb;
      auto pb = W.stub_path[bs];
      std::reverse(pb.begin(), pb.end());
      layout->edge_paths[fb] = pb;
      D.mate[ft] = ts;
      D.mate[ts] = ft;
      layout->edge_paths[ts] = W.stub_path[ts];
    }
  }
  D.layout = layout;
  validate_diagram(D);
  return D;
}

// Twin closure: bottom endpoint i joined to top endpoint i by nested
// non-crossing return arcs around the right side. Crossing-free strands
// become free loops; the nesting forest is read off the geometry.
inline Diagram closure(const TwinWord& w) {
  using construct_detail::P;
  w.validate();
  const int k = w.arcs;
  construct_detail::Wiring W = construct_detail::wire_word(w);
  Diagram D;
  D.cap = W.cap;
  D.alive.assign(D.cap, 1);
  D.mate.assign(D.dart_count(), -1);
  D.fwd.assign(D.dart_count(), 0);
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    D.mate[d] = W.mate[d];
    D.fwd[d] = W.fwd[d];
  }
  auto layout = std::make_shared<Layout>();
  layout->edge_paths = W.edge_paths;

  const long long Y = W.y_top;
  auto return_arc = [&](int i) {
    long long o = 4 * (k - i + 1);
    return std::vector<P>{{4 * i, Y},      {4 * i, Y + o}, {4 * k + o, Y + o},
                          {4 * k + o, -o}, {4 * i, -o},    {4 * i, 0}};
  };

  for (int i = 1; i <= k; ++i) {
    if (W.top_stub[i] == -1) {
      FreeLoop l;
      l.id = D.fresh_loop_id();
      l.orient = -1;  // up the column, clockwise around the right
      D.loops.push_back(l);
      std::vector<P> path = {{4 * i, 0}};
      construct_detail::append_path(path, {{4 * i, Y}});
      auto arc = return_arc(i);
      construct_detail::append_path(path, arc);
      path.pop_back();  // closed polyline: do not repeat the start point
      layout->loop_paths[l.id] = path;
      continue;
    }
    Dart t = W.top_stub[i], b = W.bottom_stub[i];
    D.mate[t] = b;
    D.mate[b] = t;
    auto path = W.stub_path[t];
    construct_detail::append_path(path, return_arc(i));
    auto pb = W.stub_path[b];
    std::reverse(pb.begin(), pb.end());
    construct_detail::append_path(path, pb);
    layout->edge_paths[t] = path;
  }

  FaceSet fs = compute_faces(D);
  ClusterSet cl = compute_clusters(D);

  // topmost horizontal segment of every item; the cluster's outer face is
  // the upper side of its topmost segment
  struct Top {
    long long x = 0, y = 0;
    bool set = false;
    Dart upper = -1;
  };
  std::map<int, Top> cluster_top;
  std::map<int, Top> loop_top;

  auto scan = [&](Top& t, const std::vector<P>& path, bool closed, Dart key) {
    size_t n = path.size();
    size_t limit = closed ? n : n - 1;
    for (size_t s = 0; s < limit; ++s) {
      auto [x1, y1] = path[s];
      auto [x2, y2] = path[(s + 1) % n];
      if (y1 != y2) continue;  // the top of an item always lies on a horizontal run
      long long xm = std::max(x1, x2);
      if (!t.set || y1 > t.y || (y1 == t.y && xm > t.x)) {
        t = {xm, y1, true, key == -1 ? -1 : (x2 > x1 ? key : D.mate[key])};
      }
    }
  };

  for (const auto& [d, path] : layout->edge_paths) {
    int rep = cl.rep_of[dart_crossing(d)];
    scan(cluster_top[rep], path, false, d);
  }
  for (const auto& [id, path] : layout->loop_paths) scan(loop_top[id], path, true, -1);

  struct RawParent {
    enum Kind { RootR, FaceSide, LoopSide } kind = RootR;
    Dart dart = -1;  // FaceSide: the face below the hit is face(dart)
    int loop = -1;
    bool inside = false;
  };

  auto raw_parent_of_point = [&](long long rx, long long ry) {
    construct_detail::RayHit best;
    Dart hit_edge = -1;
    int hit_loop = -1;
    for (const auto& [d, path] : layout->edge_paths) {
      construct_detail::RayHit h;
      construct_detail::ray_up_polyline(rx, ry, path, false, h);
      if (construct_detail::hit_better(h, best)) {
        best = h;
        hit_edge = d;
        hit_loop = -1;
      }
    }
    for (const auto& [id, path] : layout->loop_paths) {
      construct_detail::RayHit h;
      construct_detail::ray_up_polyline(rx, ry, path, true, h);
      if (construct_detail::hit_better(h, best)) {
        best = h;
        hit_loop = id;
        hit_edge = -1;
      }
    }
    RawParent rp;
    if (!best.found) return rp;
    if (hit_loop >= 0) {
      rp.kind = RawParent::LoopSide;
      rp.loop = hit_loop;
      rp.inside =
          construct_detail::count_crossings_above(rx, ry, layout->loop_paths[hit_loop], true) %
              2 ==
          1;
      return rp;
    }
    rp.kind = RawParent::FaceSide;
    // below the hit segment: right side of +x travel = face(mate), left of -x = face(key)
    rp.dart = (best.xdir > 0) ? D.mate[hit_edge] : hit_edge;
    return rp;
  };

  std::map<int, RawParent> cluster_raw;
  std::map<int, RawParent> loop_raw;
  for (const auto& [rep, t] : cluster_top) cluster_raw[rep] = raw_parent_of_point(t.x + 1, t.y);
  for (const auto& [id, t] : loop_top) loop_raw[id] = raw_parent_of_point(t.x + 1, t.y);

  std::map<int, Dart> outer;
  for (const auto& [rep, t] : cluster_top) outer[rep] = t.upper;

  std::map<int, Region> memo_cluster, memo_loop;
  std::function<Region(const RawParent&)> resolve = [&](const RawParent& rp) -> Region {
    switch (rp.kind) {
      case RawParent::RootR:
        return Region::root();
      case RawParent::LoopSide: {
        if (rp.inside) return Region::loop_inside(rp.loop);
        auto it = memo_loop.find(rp.loop);
        if (it != memo_loop.end()) return it->second;
        Region r = resolve(loop_raw.at(rp.loop));
        memo_loop[rp.loop] = r;
        return r;
      }
      case RawParent::FaceSide: {
        int f = fs.index_of(rp.dart);
        int rep = cl.rep_of[dart_crossing(fs.rep(f))];
        if (fs.index_of(outer.at(rep)) == f) {
          auto it = memo_cluster.find(rep);
          if (it != memo_cluster.end()) return it->second;
          Region r = resolve(cluster_raw.at(rep));
          memo_cluster[rep] = r;
          return r;
        }
        return Region::face(fs.rep(f));
      }
    }
    return Region::root();
  };

  for (const auto& [rep, raw] : cluster_raw) {
    D.cluster_parent[rep] = resolve(raw);
    D.cluster_outer[rep] = outer.at(rep);
  }
  for (auto& l : D.loops) l.parent = resolve(loop_raw.at(l.id));

  D.layout = layout;
  validate_diagram(D);
  return D;
}

// T(p * x) under the named closure template.
enum class ClosureTemplate { Plain, SigmaTail };

inline TwinWord template_word(const TwinWord& q, ClosureTemplate t) {
  if (t == ClosureTemplate::Plain) return q;
  TwinWord tail(q.arcs, {});
  for (int g = 1; g <= q.arcs - 1; ++g) tail.letters.push_back(g);
  return concat(q, tail);
}

inline Diagram tangle_insert(const TwinWord& x, const TwinWord& p,
                             ClosureTemplate t = ClosureTemplate::Plain) {
  if (x.arcs != p.arcs) throw std::invalid_argument("arc count mismatch");
  return closure(template_word(concat(p, x), t));
}

}  // namespace rondle
