// Property tests over generated surfaces: all triangulated polygons up to
// twelve marked points, and annuli obtained by gluing two boundary
// segments of such a polygon.

#include <algorithm>
#include "arcext/sweep.hpp"
#include <set>
#include <sstream>
#include <vector>

#include "arcext/extensions.hpp"
#include "arcext/snakegraph.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace arcext;

namespace {

using Tris = std::vector<std::array<int, 3>>;

// All triangulations of the convex polygon on corners lo..hi, as corner
// triples a < b < c.
std::vector<Tris> enumerate_polygon(int lo, int hi) {
  if (hi - lo < 2) return {Tris{}};
  std::vector<Tris> out;
  for (int k = lo + 1; k < hi; ++k) {
    for (const Tris& left : enumerate_polygon(lo, k)) {
      for (const Tris& right : enumerate_polygon(k, hi)) {
        Tris whole{{lo, k, hi}};
        whole.insert(whole.end(), left.begin(), left.end());
        whole.insert(whole.end(), right.begin(), right.end());
        out.push_back(std::move(whole));
      }
    }
  }
  return out;
}

std::string side_label(int a, int b) {
  std::ostringstream os;
  os << "e" << a << "_" << b;
  return os.str();
}

// Renders a corner-triple triangulation of the ccw m-gon as a document;
// with glue_k >= 0 the boundary side (glue_k, glue_k+1) is identified with
// (0, 1), turning the disk into an annulus.
std::string polygon_document(int m, const Tris& tris, int glue_k = -1) {
  std::set<std::pair<int, int>> sides;
  for (const auto& t : tris) {
    sides.insert({t[0], t[1]});
    sides.insert({t[1], t[2]});
    sides.insert({t[0], t[2]});
  }
  auto is_boundary = [&](int a, int b) {
    return b == a + 1 || (a == 0 && b == m - 1);
  };
  auto label = [&](int a, int b) {
    if (glue_k >= 0 && a == glue_k && b == glue_k + 1) return side_label(0, 1);
    return side_label(a, b);
  };
  std::ostringstream os;
  os << "{\"edges\":[";
  bool first = true;
  for (auto [a, b] : sides) {
    if (glue_k >= 0 && a == glue_k && b == glue_k + 1) continue;  // merged away
    bool boundary = is_boundary(a, b) && !(glue_k >= 0 && a == 0 && b == 1);
    if (!first) os << ",";
    first = false;
    os << "{\"id\":\"" << label(a, b) << "\",\"boundary\":"
       << (boundary ? "true" : "false") << "}";
  }
  os << "],\"triangles\":[";
  for (size_t i = 0; i < tris.size(); ++i) {
    const auto& t = tris[i];
    if (i) os << ",";
    os << "[\"" << label(t[0], t[1]) << "\",\"" << label(t[1], t[2]) << "\",\""
       << label(t[0], t[2]) << "\"]";
  }
  os << "]}";
  return os.str();
}

}  // namespace

TEST_CASE("every triangulated disk up to 12 marked points is gentle") {
  long total = 0;
  for (int m = 4; m <= 12; ++m) {
    for (const Tris& tris : enumerate_polygon(0, m - 1)) {
      Surface S = Surface::load(polygon_document(m, tris));
      CHECK_NOTHROW(S.Q.check_gentle());
      ++total;
    }
  }
  CHECK(total == 23712);  // Catalan(2) + ... + Catalan(10)
}

TEST_CASE("glued-polygon annuli up to 12 marked points are gentle") {
  long total = 0;
  for (int m = 6; m <= 12; ++m) {
    auto all = enumerate_polygon(0, m - 1);
    size_t step = std::max<size_t>(1, all.size() / 60);  // a spread-out sample
    for (size_t i = 0; i < all.size(); i += step) {
      const Tris& tris = all[i];
      for (int k = 2; k + 1 < m - 1; ++k) {
        // skip gluings whose two sides lie on one triangle (self-folded)
        bool same = false;
        for (const auto& t : tris) {
          bool ha = t[0] == 0 && t[1] == 1;
          bool hb = (t[0] == k && t[1] == k + 1) || (t[1] == k && t[2] == k + 1);
          if (ha && hb) same = true;
        }
        if (same) continue;
        Surface S = Surface::load(polygon_document(m, tris, k));
        CHECK_NOTHROW(S.Q.check_gentle());
        ++total;
      }
    }
  }
  CHECK(total > 200);
}

TEST_CASE("roundtrip holds on generated disk algebras") {
  // all strings of length <= 6 over every triangulated octagon
  for (const Tris& tris : enumerate_polygon(0, 7)) {
    Surface S = Surface::load(polygon_document(8, tris));
    for (const StringWord& w : enumerate_strings(S, 6)) {
      if (w.length() == 0) continue;
      SnakeGraph G = snake_graph_of_string(S, w);
      CHECK(string_from_signed_snake_graph(S, G, sign_function_from_string(w)) == w);
    }
  }
}

TEST_CASE("a closed punctured complex is rejected as non-gentle") {
  // two triangles sharing all three edges: passes the incidence counts but
  // hides a puncture; the algebra has unbounded relation-free paths.
  CHECK_THROWS_AS(Surface::load(R"({
    "edges": [{"id":"1","boundary":false},{"id":"2","boundary":false},
              {"id":"3","boundary":false}],
    "triangles": [["1","2","3"],["1","3","2"]]})"),
                  ValidationError);
}

TEST_CASE("a twice-glued polygon sweeps clean") {
  // gluing two boundary pairs of the 12-gon fan gives a surface with more
  // topology than the standard corpus; the calculus must still agree with
  // the oracle everywhere.
  std::ostringstream os;
  os << "{\"edges\":[";
  auto glue = [](int a, int b) {
    if (a == 4 && b == 5) return std::pair{0, 1};
    if (a == 10 && b == 11) return std::pair{7, 8};
    return std::pair{a, b};
  };
  std::set<std::string> emitted;
  std::ostringstream edges;
  bool first = true;
  std::vector<std::array<int, 3>> tris;
  for (int k = 1; k < 11; ++k) tris.push_back({0, k, k + 1});
  std::set<std::pair<int, int>> sides;
  for (const auto& t : tris) {
    sides.insert({t[0], t[1]});
    sides.insert({t[1], t[2]});
    sides.insert({t[0], t[2]});
  }
  auto lab = [&](int a, int b) {
    auto [x, y] = glue(a, b);
    return "e" + std::to_string(x) + "_" + std::to_string(y);
  };
  for (auto [a, b] : sides) {
    std::string l = lab(a, b);
    if (!emitted.insert(l).second) continue;
    bool boundary = (b == a + 1 || (a == 0 && b == 11)) &&
                    !(a == 0 && b == 1) && !(a == 7 && b == 8) &&
                    !(a == 4 && b == 5) && !(a == 10 && b == 11);
    if (!first) edges << ",";
    first = false;
    edges << "{\"id\":\"" << l << "\",\"boundary\":" << (boundary ? "true" : "false")
          << "}";
  }
  os << edges.str() << "],\"triangles\":[";
  for (size_t i = 0; i < tris.size(); ++i) {
    if (i) os << ",";
    os << "[\"" << lab(tris[i][0], tris[i][1]) << "\",\"" << lab(tris[i][1], tris[i][2])
       << "\",\"" << lab(tris[i][0], tris[i][2]) << "\"]";
  }
  os << "]}";
  Surface S = Surface::load(os.str());
  CHECK(S.Q.vertices.size() == 11);
  SweepResult r = check_surface(S, {4, 2});
  CHECK(r.ok());
}

TEST_CASE("the Kronecker annulus derives but its arrow pairs are ambiguous") {
  // annulus with one marked point per boundary component: two parallel
  // arrows, still gentle
  Surface S = Surface::load(R"({
    "edges": [{"id":"d1","boundary":false},{"id":"d2","boundary":false},
              {"id":"b","boundary":true},{"id":"c","boundary":true}],
    "triangles": [["d1","d2","b"],["d1","d2","c"]]})");
  CHECK(S.Q.arrows.size() == 2);
  CHECK_NOTHROW(S.Q.check_gentle());
  CHECK_THROWS_AS(parse_word(S, "d1>d2"), ValidationError);
}

TEST_CASE("type-A disks have intersection numbers at most one") {
  Surface S = corpus::octagon();
  auto words = enumerate_strings(S, 8);
  for (size_t i = 0; i < words.size(); ++i) {
    ExtReport self = ext_dim(S, words[i], words[i]);
    CHECK(self.intersection == 0);  // no self-crossings on a disk
    for (size_t j = i + 1; j < words.size(); ++j) {
      ExtReport r = ext_dim(S, words[i], words[j]);
      CHECK(r.intersection <= 1);
      CHECK(r.dim_mn + r.dim_nm <= 1);
    }
  }
}
