#include "arcext/snakegraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace arcext {

Side glue_side(GlueDir d) { return d == GlueDir::North ? Side::North : Side::East; }
Side complement_side(GlueDir d) {
  return d == GlueDir::North ? Side::South : Side::West;
}

EdgeIx Tile::side(Side s) const {
  switch (s) {
    case Side::North: return north;
    case Side::East: return east;
    case Side::South: return south;
    case Side::West: return west;
  }
  throw InternalFault("side", "bad side");
}

SnakeGraph SnakeGraph::single_edge(EdgeIx w) {
  SnakeGraph g;
  g.edge_only = w;
  return g;
}

EdgeIx SnakeGraph::interior_weight(int j) const {
  return tile(j).side(glue_side(glue[j - 1]));
}

Side SnakeGraph::interior_side_on_prev(int j) const { return glue_side(glue[j - 1]); }
Side SnakeGraph::interior_side_on_next(int j) const {
  return complement_side(glue[j - 1]);
}

namespace {

// Fill the four sides of a tile from its triangles, ccw data and rel.
void place_tile(const Triangulation& T, Tile& t) {
  auto entry = T.flanks_ccw(t.entry_tri, t.diag);
  auto exit = T.flanks_ccw(t.exit_tri, t.diag);
  if (t.rel == +1) {
    t.west = entry[0];
    t.south = entry[1];
    t.east = exit[0];
    t.north = exit[1];
  } else {
    t.west = entry[1];
    t.south = entry[0];
    t.east = exit[1];
    t.north = exit[0];
  }
}

}  // namespace

SnakeGraph build_snake_graph(const Surface& S, const std::vector<EdgeIx>& seq,
                             std::optional<TriIx> entry_first,
                             std::optional<TriIx> exit_last) {
  const Triangulation& T = S.T;
  int d = static_cast<int>(seq.size());
  if (d == 0) throw ValidationError("empty-sequence", "empty crossing sequence");
  for (EdgeIx e : seq)
    if (!T.is_internal(e))
      throw ValidationError("bad-sequence", "crossed arc is a boundary segment");

  std::vector<TriIx> entry(d), exit(d);
  for (int j = 0; j < d; ++j) {
    if (j + 1 < d) exit[j] = T.shared_triangle(seq[j], seq[j + 1]);
    if (j > 0) entry[j] = T.shared_triangle(seq[j - 1], seq[j]);
  }
  if (d == 1) {
    auto adj = T.adjacent_triangles(seq[0]);
    if (entry_first && exit_last) {
      entry[0] = *entry_first;
      exit[0] = *exit_last;
    } else if (entry_first) {
      entry[0] = *entry_first;
      exit[0] = T.other_triangle(seq[0], entry[0]);
    } else if (exit_last) {
      exit[0] = *exit_last;
      entry[0] = T.other_triangle(seq[0], exit[0]);
    } else {
      entry[0] = adj[0];
      exit[0] = adj[1];
    }
  } else {
    entry[0] = entry_first ? *entry_first : T.other_triangle(seq[0], exit[0]);
    exit[d - 1] = exit_last ? *exit_last : T.other_triangle(seq[d - 1], entry[d - 1]);
  }
  for (int j = 0; j < d; ++j) {
    if (!T.tri_contains(entry[j], seq[j]) || !T.tri_contains(exit[j], seq[j]))
      throw InternalFault("tile-triangles", "tile triangle misses its diagonal");
    if (entry[j] == exit[j])
      throw ValidationError("bad-sequence",
                            "sequence enters and leaves a crossing through the "
                            "same triangle");
  }

  SnakeGraph G;
  int rel = +1;
  for (int j = 0; j < d; ++j, rel = -rel) {
    Tile t;
    t.diag = seq[j];
    t.entry_tri = entry[j];
    t.exit_tri = exit[j];
    t.rel = rel;
    place_tile(T, t);
    G.tiles.push_back(t);
  }
  for (int j = 0; j + 1 < d; ++j) {
    EdgeIx sigma = T.third_side(exit[j], seq[j], seq[j + 1]);
    GlueDir dir;
    if (G.tiles[j].north == sigma && G.tiles[j].east != sigma)
      dir = GlueDir::North;
    else if (G.tiles[j].east == sigma && G.tiles[j].north != sigma)
      dir = GlueDir::East;
    else
      throw InternalFault("glue-placement", "interior edge not on the exit flank");
    // The matching side of the next tile must carry the same edge.
    Side nxt = complement_side(dir);
    if (G.tiles[j + 1].side(nxt) != sigma)
      throw InternalFault("glue-placement",
                          "interior edge placement disagrees across the junction");
    G.glue.push_back(dir);
  }
  return G;
}

SnakeGraph snake_graph_of_string(const Surface& S, const StringWord& w,
                                 std::optional<TriIx> entry_first,
                                 std::optional<TriIx> exit_last) {
  SnakeGraph G = build_snake_graph(S, w.verts, entry_first, exit_last);
  // Letter directions must reproduce the glue pattern: north exactly when
  // sign times rel is positive.
  for (int j = 0; j + 1 < G.tile_count(); ++j) {
    int sign = w.letters[j].inverse ? -1 : +1;
    GlueDir expect = (sign * G.tiles[j].rel > 0) ? GlueDir::North : GlueDir::East;
    if (G.glue[j] != expect)
      throw InternalFault("sign-glue", "letter directions disagree with the embedding");
  }
  return G;
}

SignFunction sign_function_from_string(const StringWord& w) {
  SignFunction f;
  for (const Letter& l : w.letters) f.interior.push_back(l.inverse ? -1 : +1);
  return f;
}

SignFunction canonical_sign(const SnakeGraph& G) {
  SignFunction f;
  int d = G.tile_count();
  if (d <= 1) return f;
  f.interior.assign(d - 1, +1);
  for (int j = 1; j < d - 1; ++j) {
    bool straight = G.glue[j - 1] == G.glue[j];
    f.interior[j] = straight ? -f.interior[j - 1] : f.interior[j - 1];
  }
  return f;
}

SignFunction negate(const SignFunction& f) {
  SignFunction g = f;
  for (int& v : g.interior) v = -v;
  g.seed_north = -g.seed_north;
  return g;
}

namespace {

int side_parity(Side s) {
  return (s == Side::North || s == Side::West) ? 0 : 1;
}

}  // namespace

int edge_sign(const SnakeGraph& G, const SignFunction& f, int j, Side side) {
  if (G.is_single_edge())
    throw InternalFault("edge-sign", "single-edge graphs carry no sign function");
  int d = G.tile_count();
  Side anchor_side;
  int anchor_val;
  if (d == 1) {
    anchor_side = Side::North;
    anchor_val = f.seed_north;
  } else if (j <= d - 1) {
    anchor_side = glue_side(G.glue[j - 1]);
    anchor_val = f.interior[j - 1];
  } else {
    anchor_side = complement_side(G.glue[j - 2]);
    anchor_val = f.interior[j - 2];
  }
  int v = (side_parity(side) == side_parity(anchor_side)) ? anchor_val : -anchor_val;
  if (j >= 2 && j <= d - 1) {
    // Cross-check against the other incident interior edge.
    Side other = complement_side(G.glue[j - 2]);
    int via = (side_parity(side) == side_parity(other)) ? f.interior[j - 2]
                                                        : -f.interior[j - 2];
    if (via != v)
      throw InternalFault("sign-function", "interior signs break the tile rules");
  }
  return v;
}

SnakeGraph reverse_graph(const SnakeGraph& G) {
  if (G.is_single_edge()) return G;
  SnakeGraph R;
  for (auto it = G.tiles.rbegin(); it != G.tiles.rend(); ++it) {
    Tile t = *it;
    std::swap(t.north, t.south);
    std::swap(t.east, t.west);
    std::swap(t.entry_tri, t.exit_tri);
    R.tiles.push_back(t);
  }
  R.glue.assign(G.glue.rbegin(), G.glue.rend());
  return R;
}

SignFunction reverse_sign(const SnakeGraph& G, const SignFunction& f) {
  SignFunction r;
  r.interior.assign(f.interior.rbegin(), f.interior.rend());
  for (int& v : r.interior) v = -v;
  r.seed_north = (G.tile_count() == 1) ? -f.seed_north : f.seed_north;
  return r;
}

SnakeGraph flip_graph(const SnakeGraph& G) {
  if (G.is_single_edge()) return G;
  SnakeGraph F = G;
  for (Tile& t : F.tiles) {
    std::swap(t.north, t.east);
    std::swap(t.south, t.west);
    t.rel = -t.rel;
  }
  for (GlueDir& g : F.glue)
    g = (g == GlueDir::North) ? GlueDir::East : GlueDir::North;
  return F;
}

namespace {

std::vector<int> encode_graph(const SnakeGraph& G) {
  std::vector<int> e;
  if (G.is_single_edge()) {
    e.push_back(-1);
    e.push_back(*G.edge_only);
    return e;
  }
  e.push_back(G.tile_count());
  for (GlueDir g : G.glue) e.push_back(g == GlueDir::North ? 0 : 1);
  for (const Tile& t : G.tiles) {
    e.push_back(t.diag);
    e.push_back(t.north);
    e.push_back(t.east);
    e.push_back(t.south);
    e.push_back(t.west);
  }
  return e;
}

}  // namespace

bool graphs_equivalent(const SnakeGraph& a, const SnakeGraph& b) {
  if (a.is_single_edge() != b.is_single_edge()) return false;
  auto canon = [](const SnakeGraph& g) {
    std::vector<int> best = encode_graph(g);
    for (const SnakeGraph& v :
         {reverse_graph(g), flip_graph(g), flip_graph(reverse_graph(g))})
      best = std::min(best, encode_graph(v));
    return best;
  };
  return canon(a) == canon(b);
}

StringWord string_from_signed_snake_graph(const Surface& S, const SnakeGraph& G,
                                          const SignFunction& f) {
  if (G.is_single_edge())
    throw ValidationError("not-a-module",
                          "single-edge graphs correspond to arcs of T, not strings");
  int d = G.tile_count();
  std::vector<Letter> letters;
  for (int j = 0; j + 1 < d; ++j) {
    EdgeIx u = G.tiles[j].diag, v = G.tiles[j + 1].diag;
    ArrowIx a = S.Q.arrow_between(u, v);
    bool inv = S.Q.arrows[a].source != u;
    int forced = inv ? -1 : +1;
    if (f.interior[j] != forced)
      throw ValidationError(
          "not-in-R", "sign at interior edge " + std::to_string(j + 1) +
                          " contradicts the arrow orientation; (G,f) is not the "
                          "image of a string");
    letters.push_back({a, inv});
  }
  StringWord w =
      validate_string(S.Q, make_word(S.Q, G.tiles[0].diag, letters));
  SnakeGraph rebuilt = snake_graph_of_string(S, w);
  if (!graphs_equivalent(G, rebuilt))
    throw ValidationError("not-in-R", "graph is not the snake graph of its word");
  return w;
}

std::vector<Overlap> enumerate_overlaps(const SnakeGraph& G1, const SnakeGraph& G2,
                                        bool self) {
  std::vector<Overlap> out;
  if (G1.is_single_edge() || G2.is_single_edge()) return out;
  int d1 = G1.tile_count(), d2 = G2.tile_count();
  std::set<std::pair<int, int>> one_tile_seen;  // (s, s2) pairs already emitted

  for (int rev = 0; rev < 2; ++rev) {
    SnakeGraph H = rev ? reverse_graph(G2) : G2;
    for (int i = 1; i <= d1; ++i) {
      for (int j = 1; j <= d2; ++j) {
        if (G1.tile(i).diag != H.tile(j).diag) continue;
        if (i > 1 && j > 1 && G1.tile(i - 1).diag == H.tile(j - 1).diag)
          continue;  // extendable to the left: not a run start
        int len = 1;
        while (i + len <= d1 && j + len <= d2 &&
               G1.tile(i + len).diag == H.tile(j + len).diag)
          ++len;
        int t = i + len - 1, tj = j + len - 1;
        int s2 = rev ? d2 + 1 - tj : j;
        int t2 = rev ? d2 + 1 - j : tj;
        if (len == 1) {
          bool wild1 = (d1 == 1), wild2 = (d2 == 1);
          if (!wild1 && !wild2) {
            const Tile& a = G1.tile(i);
            const Tile& b = H.tile(j);
            if (!(a.entry_tri == b.entry_tri && a.exit_tri == b.exit_tri)) continue;
          }
          if (!one_tile_seen.insert({i, s2}).second) continue;
        }
        if (self && i == s2 && t == t2) continue;
        if (self && std::make_pair(i, t) > std::make_pair(s2, t2)) continue;
        out.push_back({i, t, s2, t2, rev != 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Overlap& a, const Overlap& b) {
    return std::tie(a.s, a.s2, a.reversed, a.t) <
           std::tie(b.s, b.s2, b.reversed, b.t);
  });
  return out;
}

namespace {

struct Aligned {
  SnakeGraph H;
  SignFunction fH;
  int s2, t2;  // range in H coordinates
};

// Side of H's tile matching `side` of G's tile inside the shared quadrilateral.
Side corresponding_side(const Tile& g, Side side, const Tile& h) {
  TriIx tri = (side == Side::South || side == Side::West) ? g.entry_tri : g.exit_tri;
  EdgeIx w = g.side(side);
  for (Side cand : {Side::North, Side::East, Side::South, Side::West}) {
    TriIx ctri =
        (cand == Side::South || cand == Side::West) ? h.entry_tri : h.exit_tri;
    if (ctri == tri && h.side(cand) == w) return cand;
  }
  throw InternalFault("overlap-tiles", "overlap tiles are not the same quadrilateral");
}

Aligned align_overlap(const SnakeGraph& G1, const SignFunction& f1,
                      const SnakeGraph& G2, const SignFunction& f2,
                      const Overlap& ov) {
  Aligned A;
  int d2 = G2.tile_count();
  if (ov.reversed) {
    A.H = reverse_graph(G2);
    A.fH = reverse_sign(G2, f2);
    A.s2 = d2 + 1 - ov.t2;
    A.t2 = d2 + 1 - ov.s2;
  } else {
    A.H = G2;
    A.fH = f2;
    A.s2 = ov.s2;
    A.t2 = ov.t2;
  }
  int len = ov.t - ov.s + 1;
  if (len >= 2) {
    int agree = 0, disagree = 0;
    for (int k = 0; k + 1 < len; ++k) {
      if (f1.interior[ov.s - 1 + k] == A.fH.interior[A.s2 - 1 + k])
        ++agree;
      else
        ++disagree;
    }
    if (agree && disagree)
      throw InternalFault("overlap-alignment", "overlap interior signs are mixed");
    if (disagree) A.fH = negate(A.fH);
  } else {
    const Tile& a = G1.tile(ov.s);
    const Tile& b = A.H.tile(A.s2);
    int agree = 0, disagree = 0;
    for (Side side : {Side::North, Side::East, Side::South, Side::West}) {
      Side cs = corresponding_side(a, side, b);
      if (edge_sign(G1, f1, ov.s, side) == edge_sign(A.H, A.fH, A.s2, cs))
        ++agree;
      else
        ++disagree;
    }
    if (agree && disagree)
      throw InternalFault("overlap-alignment", "overlap tile signs are mixed");
    if (disagree) A.fH = negate(A.fH);
  }
  return A;
}

}  // namespace

bool is_crossing_overlap(const SnakeGraph& G1, const SignFunction& f1,
                         const SnakeGraph& G2, const SignFunction& f2,
                         const Overlap& ov) {
  Aligned A = align_overlap(G1, f1, G2, f2, ov);
  int d = G1.tile_count(), dp = A.H.tile_count();
  int s = ov.s, t = ov.t, sp = A.s2, tp = A.t2;
  const auto& fi = f1.interior;
  const auto& gi = A.fH.interior;

  bool cond1 = (s > 1 && t < d && fi[s - 2] == -fi[t - 1]) ||
               (sp > 1 && tp < dp && gi[sp - 2] == -gi[tp - 1]);
  bool cond2 =
      (s == 1 && t < d && sp > 1 && tp == dp && fi[t - 1] == gi[sp - 2]) ||
      (s > 1 && t == d && sp == 1 && tp < dp && fi[s - 2] == gi[tp - 1]);
  return cond1 || cond2;
}

namespace {

SnakeGraph sub(const SnakeGraph& G, int a, int b) {
  if (a > b) throw InternalFault("subgraph", "empty subgraph range");
  SnakeGraph R;
  R.tiles.assign(G.tiles.begin() + (a - 1), G.tiles.begin() + b);
  if (a < b) R.glue.assign(G.glue.begin() + (a - 1), G.glue.begin() + (b - 1));
  return R;
}

// Glue B after A; their junction triangle must agree. Returns the combined
// graph, flipping B's embedding when needed.
SnakeGraph splice_glue(const Triangulation& T, const SnakeGraph& A,
                       const SnakeGraph& B) {
  const Tile& last = A.tiles.back();
  const Tile& first = B.tiles.front();
  if (last.exit_tri != first.entry_tri)
    throw InternalFault("splice", "junction triangles disagree");
  if (last.diag == first.diag)
    throw InternalFault("splice", "junction diagonals coincide");
  EdgeIx c = T.third_side(last.exit_tri, last.diag, first.diag);

  GlueDir dir;
  if (last.north == c)
    dir = GlueDir::North;
  else if (last.east == c)
    dir = GlueDir::East;
  else
    throw InternalFault("splice", "junction edge not on the exit flank");

  SnakeGraph Bb = B;
  if (Bb.tiles.front().side(complement_side(dir)) != c) Bb = flip_graph(Bb);
  if (Bb.tiles.front().side(complement_side(dir)) != c)
    throw InternalFault("splice", "junction edge not on the entry flank");
  if (Bb.tiles.front().rel != -last.rel)
    throw InternalFault("splice", "relative orientation fails to alternate");

  SnakeGraph R = A;
  R.glue.push_back(dir);
  R.tiles.insert(R.tiles.end(), Bb.tiles.begin(), Bb.tiles.end());
  R.glue.insert(R.glue.end(), Bb.glue.begin(), Bb.glue.end());
  return R;
}

// G minus everything after sigma_j for the last j <= hi whose sign matches;
// falls back to the matching south/west edge of tile 1.
SnakeGraph succ_truncate(const SnakeGraph& G, const SignFunction& f, int target,
                         int hi) {
  for (int j = std::min(hi, G.tile_count() - 1); j >= 1; --j)
    if (f.interior[j - 1] == target) return sub(G, 1, j);
  int sw = edge_sign(G, f, 1, Side::West);
  int ss = edge_sign(G, f, 1, Side::South);
  if ((sw == target) == (ss == target))
    throw InternalFault("truncate", "south/west signs fail to differ");
  return SnakeGraph::single_edge(sw == target ? G.tiles.front().west
                                              : G.tiles.front().south);
}

// G minus everything before sigma_j for the first j >= lo whose sign
// matches; falls back to the matching north/east edge of the last tile.
SnakeGraph pred_truncate(const SnakeGraph& G, const SignFunction& f, int target,
                         int lo) {
  for (int j = std::max(lo, 1); j <= G.tile_count() - 1; ++j)
    if (f.interior[j - 1] == target) return sub(G, j + 1, G.tile_count());
  int d = G.tile_count();
  int sn = edge_sign(G, f, d, Side::North);
  int se = edge_sign(G, f, d, Side::East);
  if ((sn == target) == (se == target))
    throw InternalFault("truncate", "north/east signs fail to differ");
  return SnakeGraph::single_edge(sn == target ? G.tiles.back().north
                                              : G.tiles.back().east);
}

}  // namespace

Resolution resolve_overlap(const Surface& S, const SnakeGraph& G1,
                           const SignFunction& f1, const SnakeGraph& G2,
                           const SignFunction& f2, const Overlap& ov) {
  if (!is_crossing_overlap(G1, f1, G2, f2, ov))
    throw ValidationError("not-a-crossing", "overlap is not a crossing overlap");
  Aligned A = align_overlap(G1, f1, G2, f2, ov);
  const SnakeGraph& H = A.H;
  int d = G1.tile_count(), dp = H.tile_count();
  int s = ov.s, t = ov.t, sp = A.s2, tp = A.t2;

  Resolution R;
  R.g3 = (tp < dp) ? splice_glue(S.T, sub(G1, 1, t), sub(H, tp + 1, dp))
                   : sub(G1, 1, t);
  R.g4 = (t < d) ? splice_glue(S.T, sub(H, 1, tp), sub(G1, t + 1, d))
                 : sub(H, 1, tp);

  if (s > 1 && sp > 1) {
    R.g5 = splice_glue(S.T, sub(G1, 1, s - 1), reverse_graph(sub(H, 1, sp - 1)));
  } else if (sp == 1 && s > 1) {
    SnakeGraph P = sub(G1, 1, s - 1);
    SignFunction f5 = canonical_sign(P);
    // Reference: the sigma_{s-1} edge, exposed on P's last tile.
    Side ref = glue_side(G1.glue[s - 2]);
    int target = edge_sign(P, f5, P.tile_count(), ref);
    R.g5 = succ_truncate(P, f5, target, P.tile_count() - 1);
  } else if (s == 1 && sp > 1) {
    SnakeGraph P = reverse_graph(sub(H, 1, sp - 1));
    SignFunction f5 = canonical_sign(P);
    // Reference: sigma'_{sp-1}, exposed on P's first tile after reversal.
    Side ref_in_H = glue_side(H.glue[sp - 2]);
    Side ref = (ref_in_H == Side::North) ? Side::South : Side::West;
    int target = edge_sign(P, f5, 1, ref);
    R.g5 = pred_truncate(P, f5, target, 1);
  } else {
    throw InternalFault("staggering", "both strings start at the overlap");
  }

  if (t < d && tp < dp) {
    R.g6 = splice_glue(S.T, reverse_graph(sub(H, tp + 1, dp)), sub(G1, t + 1, d));
  } else if (t == d && tp < dp) {
    SnakeGraph P = reverse_graph(sub(H, tp + 1, dp));
    SignFunction f6 = canonical_sign(P);
    // Reference: sigma'_{tp}, exposed on P's last tile after reversal.
    Side ref_in_H = complement_side(H.glue[tp - 1]);
    Side ref = (ref_in_H == Side::South) ? Side::North : Side::East;
    int target = edge_sign(P, f6, P.tile_count(), ref);
    R.g6 = succ_truncate(P, f6, target, P.tile_count() - 1);
  } else if (tp == dp && t < d) {
    SnakeGraph P = sub(G1, t + 1, d);
    SignFunction f6 = canonical_sign(P);
    // Reference: sigma_t, exposed on P's first tile.
    Side ref = complement_side(G1.glue[t - 1]);
    int target = edge_sign(P, f6, 1, ref);
    R.g6 = pred_truncate(P, f6, target, 1);
  } else {
    throw InternalFault("staggering", "both strings end at the overlap");
  }
  return R;
}

Resolution graft(const Surface& S, const SnakeGraph& G1, const SignFunction& f1,
                 const SnakeGraph& G2, const SignFunction& f2, int s,
                 EdgeIx delta) {
  if (G1.is_single_edge() || G2.is_single_edge())
    throw ValidationError("bad-graft", "grafting needs genuine snake graphs");
  int d = G1.tile_count();
  if (s < 1 || s > d) throw ValidationError("bad-graft", "tile index out of range");

  const Tile& gs = G1.tile(s);
  const Tile& h1 = G2.tile(1);
  Side side1, side2;
  if (gs.north == delta)
    side1 = Side::North;
  else if (gs.east == delta)
    side1 = Side::East;
  else
    throw ValidationError("no-shared-edge", "delta is not on the NE flank of tile s");
  if (h1.south == delta)
    side2 = Side::South;
  else if (h1.west == delta)
    side2 = Side::West;
  else
    throw ValidationError("no-shared-edge", "delta is not on the SW flank of G2");
  if (gs.exit_tri != h1.entry_tri)
    throw ValidationError("no-shared-edge", "graft triangles disagree");
  if (edge_sign(G1, f1, s, side1) != edge_sign(G2, f2, 1, side2))
    throw ValidationError("sign-mismatch", "sign functions disagree at delta");

  int target = edge_sign(G1, f1, s, side1);
  Resolution R;
  if (s == d) {
    R.g3 = splice_glue(S.T, G1, G2);
    R.g4 = SnakeGraph::single_edge(delta);
    R.g5 = succ_truncate(G1, f1, target, d - 1);
    R.g6 = pred_truncate(G2, f2, target, 1);
  } else {
    R.g3 = splice_glue(S.T, sub(G1, 1, s), G2);
    R.g4 = pred_truncate(G1, f1, target, s + 1);
    R.g5 = succ_truncate(G1, f1, target, s - 1);
    R.g6 = splice_glue(S.T, reverse_graph(G2), sub(G1, s + 1, d));
  }
  return R;
}

std::string render_ascii(const Triangulation& T, const SnakeGraph& G) {
  if (G.is_single_edge()) return "-- " + T.label(*G.edge_only) + " --";
  int d = G.tile_count();
  std::vector<std::pair<int, int>> pos(d, {0, 0});
  for (int j = 1; j < d; ++j) {
    pos[j] = pos[j - 1];
    if (G.glue[j - 1] == GlueDir::North)
      pos[j].second += 1;
    else
      pos[j].first += 1;
  }
  int maxx = 0, maxy = 0;
  for (auto [x, y] : pos) maxx = std::max(maxx, x), maxy = std::max(maxy, y);
  int W = (maxx + 1) * 4 + 1, Hh = (maxy + 1) * 2 + 1;
  std::vector<std::string> canvas(Hh, std::string(W, ' '));
  for (int j = 0; j < d; ++j) {
    int cx = pos[j].first * 4;
    int cy = (maxy - pos[j].second) * 2;
    canvas[cy][cx] = canvas[cy][cx + 4] = canvas[cy + 2][cx] = canvas[cy + 2][cx + 4] = '+';
    for (int k = 1; k < 4; ++k) canvas[cy][cx + k] = canvas[cy + 2][cx + k] = '-';
    canvas[cy + 1][cx] = canvas[cy + 1][cx + 4] = '|';
    std::string lab = T.label(G.tiles[j].diag).substr(0, 3);
    for (size_t k = 0; k < lab.size(); ++k) canvas[cy + 1][cx + 1 + k] = lab[k];
  }
  std::ostringstream os;
  for (const auto& row : canvas) os << row << "\n";
  return os.str();
}

}  // namespace arcext
