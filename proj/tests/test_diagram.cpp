#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rondle/code.hpp"
#include "rondle/construct.hpp"
#include "rondle/faces.hpp"

using namespace rondle;

namespace {

// relabel crossings by a permutation, preserving everything else
Diagram relabel(const Diagram& D, const std::vector<int>& perm) {
  Diagram R = D;
  R.layout.reset();
  auto mapd = [&](Dart d) {
    if (d < 0 || D.is_frame_dart(d)) return d;
    return make_dart(perm[dart_crossing(d)], dart_port(d));
  };
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    R.mate[mapd(d)] = mapd(D.mate[d]);
    R.fwd[mapd(d)] = D.fwd[d];
  }
  for (int c = 0; c < D.cap; ++c) R.alive[perm[c]] = D.alive[c];
  R.cluster_parent.clear();
  R.cluster_outer.clear();
  FaceSet fs = compute_faces(R);
  ClusterSet cl = compute_clusters(R);
  for (const auto& [rep, r] : D.cluster_parent) {
    int nrep = cl.rep_of[dart_crossing(mapd(make_dart(rep, 0)))];
    Region nr = r;
    if (nr.kind == Region::FaceIn) nr = Region::face(fs.rep(fs.index_of(mapd(r.dart))));
    R.cluster_parent[nrep] = nr;
  }
  for (const auto& [rep, d] : D.cluster_outer) {
    int nrep = cl.rep_of[dart_crossing(mapd(make_dart(rep, 0)))];
    R.cluster_outer[nrep] = mapd(d);
  }
  for (auto& l : R.loops)
    if (l.parent.kind == Region::FaceIn)
      l.parent = Region::face(fs.rep(fs.index_of(mapd(l.parent.dart))));
  return R;
}

// mirror image across a vertical axis: ports 0<->1 and 2<->3 at each
// crossing, loop orientations flipped
Diagram mirror(const Diagram& D) {
  Diagram R = D;
  R.layout.reset();
  auto mapd = [&](Dart d) {
    if (d < 0 || D.is_frame_dart(d)) return d;
    return d ^ 1;
  };
  for (Dart d = 0; d < 4 * D.cap; ++d) {
    R.mate[mapd(d)] = mapd(D.mate[d]);
    R.fwd[mapd(d)] = D.fwd[d];
  }
  for (auto& l : R.loops) l.orient = -l.orient;
  // reflection swaps the two sides of every edge: the face left of dart d
  // becomes the face left of mapd(mate(d))
  for (auto& [rep, r] : R.cluster_parent)
    if (r.kind == Region::FaceIn) r.dart = mapd(D.mate[r.dart]);
  for (auto& [rep, d] : R.cluster_outer) d = mapd(D.mate[d]);
  for (auto& l : R.loops)
    if (l.parent.kind == Region::FaceIn) l.parent.dart = mapd(D.mate[l.parent.dart]);
  // re-canonicalize face descriptors
  FaceSet fs = compute_faces(R);
  for (auto& [rep, r] : R.cluster_parent)
    if (r.kind == Region::FaceIn) r = Region::face(fs.rep(fs.index_of(r.dart)));
  for (auto& l : R.loops)
    if (l.parent.kind == Region::FaceIn)
      l.parent = Region::face(fs.rep(fs.index_of(l.parent.dart)));
  return R;
}

}  // namespace

TEST_CASE("configuration of the empty word") {
  Diagram D = from_twin(TwinWord(3, {}));
  CHECK(D.n_crossings() == 0);
  FaceSet fs = compute_faces(D);
  CHECK(fs.faces.size() == 4);  // k+1 strip faces on the sphere
}

TEST_CASE("configuration of a single letter") {
  Diagram D = from_twin(parse_word("2: 1"));
  CHECK(D.n_crossings() == 1);
  FaceSet fs = compute_faces(D);
  CHECK(fs.faces.size() == 4);
}

TEST_CASE("from_twin stacks one crossing per letter") {
  TwinWord w = parse_word("3: (1 2)^3");
  Diagram D = from_twin(w);
  CHECK(D.n_crossings() == 6);
}

TEST_CASE("closure counts components by permutation cycles") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    int k = 2 + (int)(rng() % 4);
    TwinWord w = oracle::random_word(rng, k, (int)(rng() % 9));
    Diagram D = closure(w);
    Components co = compute_components(D);
    CHECK(co.count == permutation(w).cycle_count());
  }
}

TEST_CASE("closure of the empty word: nested crossing-free circles") {
  Diagram D = closure(TwinWord(4, {}));
  CHECK(D.n_crossings() == 0);
  REQUIRE(D.loops.size() == 4);
  // chain of nesting: loop for column 1 outermost
  CHECK(D.loops[0].parent.kind == Region::Root);
  CHECK(D.loops[1].parent == Region::loop_inside(D.loops[0].id));
  CHECK(D.loops[2].parent == Region::loop_inside(D.loops[1].id));
  CHECK(D.loops[3].parent == Region::loop_inside(D.loops[2].id));
}

TEST_CASE("closure of one letter is the double-wound curl") {
  Diagram D = closure(parse_word("2: 1"));
  CHECK(D.n_crossings() == 1);
  Components co = compute_components(D);
  CHECK(co.count == 1);
  FaceSet fs = compute_faces(D);
  REQUIRE(fs.faces.size() == 3);
  std::vector<size_t> sizes;
  for (auto& f : fs.faces) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<size_t>{1, 1, 2});
  // rotation number matches the polyline oracle (the right-nested routing
  // makes this a curl, not a figure eight)
  CHECK(rotation_multiset(D) == oracle::closure_rotations(parse_word("2: 1")));
}

TEST_CASE("rotation numbers agree with the polyline oracle") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 80; ++t) {
    int k = 2 + (int)(rng() % 4);
    TwinWord w = oracle::random_word(rng, k, (int)(rng() % 10));
    CAPTURE(format_word(w));
    CHECK(rotation_multiset(closure(w)) == oracle::closure_rotations(w));
  }
}

TEST_CASE("winding indices see nesting") {
  Diagram D = closure(TwinWord(2, {}));
  CHECK(rotation_multiset(D) == std::vector<int>{-1, -1});
}

TEST_CASE("canonical code is label-invariant") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    int k = 2 + (int)(rng() % 3);
    TwinWord w = oracle::random_word(rng, k, 2 + (int)(rng() % 8));
    Diagram D = closure(w);
    std::string c0 = canonical_code(D);
    std::vector<int> perm(D.cap);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Diagram R = relabel(D, perm);
    validate_diagram(R);
    CHECK(canonical_code(R) == c0);
    CHECK(canonical_code(D) == c0);
  }
}

TEST_CASE("mirror of a chiral diagram gets a different code") {
  // the 1-crossing curl is amphichiral as an unoriented plane map, but its
  // oriented rotation numbers flip sign
  Diagram curl = closure(parse_word("2: 1"));
  Diagram mcurl = mirror(curl);
  validate_diagram(mcurl);
  auto r = rotation_multiset(curl), rm = rotation_multiset(mcurl);
  for (auto& v : rm) v = -v;
  std::sort(rm.begin(), rm.end());
  CHECK(rm == r);

  // chirality exists: search small closures for a diagram whose mirror has
  // a different code
  std::mt19937_64 rng(41);
  bool chiral_found = false;
  for (int t = 0; t < 200 && !chiral_found; ++t) {
    int k = 2 + (int)(rng() % 3);
    TwinWord w = oracle::random_word(rng, k, 2 + (int)(rng() % 6));
    Diagram D = closure(w);
    Diagram M = mirror(D);
    validate_diagram(M);
    if (canonical_code(M) != canonical_code(D)) chiral_found = true;
  }
  CHECK(chiral_found);
}

TEST_CASE("configuration codes fix the boundary") {
  Diagram a = from_twin(parse_word("4: 1 3"));
  Diagram b = from_twin(parse_word("4: 3 1"));
  CHECK(canonical_code(a) == canonical_code(b));
  Diagram c = from_twin(parse_word("4: 1 2"));
  CHECK(canonical_code(a) != canonical_code(c));
}

TEST_CASE("triangle sites and signs on configurations") {
  Diagram pos = from_twin(parse_word("3: 1 2 1"));
  Arrangement A = analyze(pos);
  auto tris = find_triangles(pos, A);
  REQUIRE(tris.size() == 1);
  CHECK(tris[0].q == 2);
  CHECK(tris[0].sign == +1);

  Diagram neg = from_twin(parse_word("3: 2 1 2"));
  Arrangement B = analyze(neg);
  auto tris2 = find_triangles(neg, B);
  REQUIRE(tris2.size() == 1);
  CHECK(tris2[0].q == 1);
  CHECK(tris2[0].sign == -1);
}

TEST_CASE("bigon sites") {
  Diagram circle = closure(TwinWord(2, {}));
  Arrangement A = analyze(circle);
  CHECK(find_bigons(circle, A).empty());
  CHECK(find_triangles(circle, A).empty());

  Diagram venn = closure(parse_word("2: 1 1"));
  Arrangement B = analyze(venn);
  auto bigons = find_bigons(venn, B);
  CHECK(!bigons.empty());
  for (auto& b : bigons) CHECK(b.c1 != b.c2);

  Diagram conf = from_twin(parse_word("2: 1 1"));
  Arrangement C = analyze(conf);
  auto cb = find_bigons(conf, C);
  REQUIRE(cb.size() == 1);

  // geodesic words have no interior bigons in their configurations
  Diagram geo = from_twin(parse_word("3: 1 2 1"));
  Arrangement G = analyze(geo);
  CHECK(find_bigons(geo, G).empty());
}

TEST_CASE("triangle disjointness") {
  Diagram D = from_twin(parse_word("3: 1 2 1 1 2 1"));
  Arrangement A = analyze(D);
  auto tris = find_triangles(D, A);
  REQUIRE(tris.size() >= 2);
  bool found_disjoint = false;
  for (size_t i = 0; i < tris.size(); ++i)
    for (size_t j = i + 1; j < tris.size(); ++j)
      if (triangles_disjoint(tris[i], tris[j])) found_disjoint = true;
  CHECK(found_disjoint);
}

TEST_CASE("tangle insert realizes differ-by pairs") {
  TwinWord x = parse_word("4: 1 2 3");
  TwinWord b = parse_word("4: (2 3)^3");
  Diagram Cx = tangle_insert(x, TwinWord(4, {}));
  Diagram Cbx = tangle_insert(x, b);
  CHECK(Cx.n_crossings() == 3);
  CHECK(Cbx.n_crossings() == (int)b.size() + 3);
  CHECK(compute_components(Cbx).count == 1);
  CHECK(compute_components(Cx).count == 1);
}
