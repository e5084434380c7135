#pragma once

#include <sstream>

#include "rondle/faces.hpp"

namespace rondle {

// Canonical text code of a diagram as a plane map with nesting, minimal
// over all starting flags of a rooted traversal. Plane-map isomorphic
// diagrams (orientation-preserving, no reflection) get equal codes; curve
// orientations are deliberately not encoded, matching uniqueness of reduced
// representatives for multi-curve diagrams.
namespace code_detail {

// Rooted traversal code of one cluster from a starting dart: crossings are
// labeled in discovery order and every port is reported relative to its
// crossing's discovery port, which quotients out the raw labeling.
inline std::vector<int> cluster_code_from(const Diagram& D, Dart start) {
  std::vector<int> label(D.cap, -1);
  std::vector<int> disc_port(D.cap, 0);
  std::vector<int> order;
  auto visit = [&](Dart d) {
    int c = dart_crossing(d);
    if (label[c] == -1) {
      label[c] = (int)order.size();
      disc_port[c] = dart_port(d);
      order.push_back(c);
    }
  };
  std::vector<int> out;
  visit(start);
  for (size_t i = 0; i < order.size(); ++i) {
    int c = order[i];
    for (int dp = 0; dp < 4; ++dp) {
      Dart d = make_dart(c, (disc_port[c] + dp) & 3);
      Dart m = D.mate[d];
      visit(m);
      int mc = dart_crossing(m);
      out.push_back(label[mc]);
      out.push_back((dart_port(m) - disc_port[mc]) & 3);
    }
  }
  return out;
}

// canonical face id under a fixed labeling: the minimal (label, rel-port)
inline std::pair<int, int> face_key(const Diagram& D, const std::vector<int>& label,
                                    const std::vector<int>& disc_port,
                                    const std::vector<Dart>& cyc) {
  std::pair<int, int> best{INT32_MAX, INT32_MAX};
  for (Dart d : cyc) {
    int c = dart_crossing(d);
    std::pair<int, int> k{label[c], (dart_port(d) - disc_port[c]) & 3};
    best = std::min(best, k);
  }
  return best;
}

}  // namespace code_detail

inline std::string canonical_code(const Diagram& D);

namespace code_detail {

struct Coder {
  const Diagram& D;
  const Arrangement& A;
  std::map<int, std::vector<std::string>> region_children_codes;  // region idx -> sorted codes

  std::string loop_code(int id) {
    int r = A.ri.index_of.at(Region::loop_inside(id));
    std::string s = "o(";
    for (const auto& c : region_children_codes[r]) s += c + ",";
    s += ")";
    return s;
  }

  // full code of one cluster under a chosen root dart, with child codes
  // attached to their faces
  std::string cluster_code_rooted(int rep, Dart start) {
    std::vector<int> label(D.cap, -1), disc_port(D.cap, 0);
    std::vector<int> order;
    auto visit = [&](Dart d) {
      int c = dart_crossing(d);
      if (label[c] == -1) {
        label[c] = (int)order.size();
        disc_port[c] = dart_port(d);
        order.push_back(c);
      }
    };
    std::ostringstream os;
    visit(start);
    for (size_t i = 0; i < order.size(); ++i) {
      int c = order[i];
      for (int dp = 0; dp < 4; ++dp) {
        Dart d = make_dart(c, (disc_port[c] + dp) & 3);
        Dart m = D.mate[d];
        visit(m);
        int mc = dart_crossing(m);
        os << label[mc] << '.' << ((dart_port(m) - disc_port[mc]) & 3) << ' ';
      }
    }
    // annotate faces carrying nested items
    std::vector<std::pair<std::pair<int, int>, std::string>> annos;
    for (int f = 0; f < (int)A.fs.faces.size(); ++f) {
      Dart rep_dart = A.fs.rep(f);
      if (D.is_frame_dart(rep_dart) || A.cl.rep_of[dart_crossing(rep_dart)] != rep) continue;
      int r = A.ri.region_of_face[f];
      // the outer face of this cluster maps to the parent region; children
      // listed there belong to the enclosing code level, not to this cluster
      if (A.fs.index_of(D.cluster_outer.at(rep)) == f) continue;
      auto it = region_children_codes.find(r);
      if (it == region_children_codes.end() || it->second.empty()) continue;
      std::string block = "[";
      for (const auto& cc : it->second) block += cc + ",";
      block += "]";
      annos.emplace_back(face_key(D, label, disc_port, A.fs.faces[f]), block);
    }
    std::sort(annos.begin(), annos.end());
    for (const auto& [k, block] : annos) os << '@' << k.first << '.' << k.second << block;
    return os.str();
  }

  std::string cluster_code(int rep) {
    Dart outer = D.cluster_outer.at(rep);
    int fouter = A.fs.index_of(outer);
    // a base point pins the root flag instead of minimizing over flags
    if (D.base && D.dart_alive(*D.base) && A.cl.rep_of[dart_crossing(*D.base)] == rep)
      return "c!(" + cluster_code_rooted(rep, *D.base) + ")";
    std::string best;
    for (Dart d : A.fs.faces[fouter]) {
      std::string cand = cluster_code_rooted(rep, d);
      if (best.empty() || cand < best) best = cand;
    }
    return "c(" + best + ")";
  }
};

}  // namespace code_detail

inline std::string canonical_code(const Diagram& D) {
  Arrangement A = analyze(D);

  if (D.is_config()) {
    // boundary fixed: root the traversal at the first frame port
    std::ostringstream os;
    os << "f" << D.frame_arcs << "(";
    std::vector<int> label(D.cap, -1), disc_port(D.cap, 0);
    std::vector<int> order;
    auto visit = [&](Dart d) {
      if (D.is_frame_dart(d)) return;
      int c = dart_crossing(d);
      if (label[c] == -1) {
        label[c] = (int)order.size();
        disc_port[c] = dart_port(d);
        order.push_back(c);
      }
    };
    for (int j = 0; j < D.frame_ports(); ++j) {
      Dart m = D.mate[4 * D.cap + j];
      if (D.is_frame_dart(m)) {
        os << "F" << (m - 4 * D.cap) << ' ';
      } else {
        visit(m);
        os << label[dart_crossing(m)] << '.' << ((dart_port(m) - disc_port[dart_crossing(m)]) & 3)
           << ' ';
      }
    }
    // include full crossing wiring in frame-discovery order
    for (size_t i = 0; i < order.size(); ++i) {
      int c = order[i];
      for (int dp = 0; dp < 4; ++dp) {
        Dart d = make_dart(c, (disc_port[c] + dp) & 3);
        Dart m = D.mate[d];
        if (D.is_frame_dart(m)) {
          os << "F" << (m - 4 * D.cap) << ' ';
        } else {
          visit(m);
          os << label[dart_crossing(m)] << '.' << ((dart_port(m) - disc_port[dart_crossing(m)]) & 3)
             << ' ';
        }
      }
    }
    return os.str();
  }

  // bottom-up over the nesting forest: children codes feed parent codes
  code_detail::Coder coder{D, A, {}};

  // forest depth-first: compute item codes in decreasing depth order
  struct Item {
    bool is_loop;
    int id;  // loop id or cluster rep
    Region parent;
    int depth;
  };
  FaceSet& fs = A.fs;
  ClusterSet& cl = A.cl;
  std::vector<Item> items;
  for (const auto& l : D.loops)
    items.push_back({true, l.id, l.parent, region_depth(D, fs, cl, l.parent)});
  for (const auto& [rep, r] : D.cluster_parent)
    items.push_back({false, rep, r, region_depth(D, fs, cl, r)});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return a.depth > b.depth;
  });

  for (const auto& it : items) {
    std::string code = it.is_loop ? coder.loop_code(it.id) : coder.cluster_code(it.id);
    int r = A.ri.index_of.at(it.parent);
    coder.region_children_codes[r].push_back(code);
  }
  for (auto& [r, v] : coder.region_children_codes) std::sort(v.begin(), v.end());

  std::string out = "R(";
  for (const auto& c : coder.region_children_codes[0]) out += c + ",";
  out += ")";
  return out;
}

inline std::string diagram_digest(const Diagram& D) { return canonical_code(D); }

}  // namespace rondle
