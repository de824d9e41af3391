#include "arcext/extensions.hpp"

#include <algorithm>
#include <tuple>

namespace arcext {

namespace {

// Flank of a word at an overlap boundary: +1 direct letter, -1 inverse
// letter, 0 when the word starts/ends at the overlap.
struct Flanks {
  int u_before, u_after, v_before, v_after;
};

Flanks flanks_of(const StringWord& a, int sa, int ta, const StringWord& b, int sb,
                 int tb) {
  auto sgn = [](const Letter& l) { return l.inverse ? -1 : +1; };
  Flanks f{};
  f.u_before = sa > 1 ? sgn(a.letters[sa - 2]) : 0;
  f.u_after = ta < a.vertex_count() ? sgn(a.letters[ta - 1]) : 0;
  f.v_before = sb > 1 ? sgn(b.letters[sb - 2]) : 0;
  f.v_after = tb < b.vertex_count() ? sgn(b.letters[tb - 1]) : 0;
  return f;
}

// Definition of "M crosses N in a module", crosser = a: flanks of a point
// into the overlap, flanks of b point out, and the occurrences stagger.
bool crosses_at(const Flanks& f, bool stag_start, bool stag_end) {
  if (!stag_start || !stag_end) return false;
  if (f.u_before == -1 || f.u_after == +1) return false;
  if (f.v_before == +1 || f.v_after == -1) return false;
  return true;
}

std::vector<StringWord> reps(const StringWord& w) {
  if (w.length() == 0) return {w};
  return {w, invert(w)};
}

struct Rec {
  Crossing c;
  std::array<int, 8> key;
};

}  // namespace

std::string print_arc_value(const Triangulation& T, const ArcValue& v) {
  switch (v.kind) {
    case ArcValue::Str: return print_word(T, v.word);
    case ArcValue::Zero: return "0";
    case ArcValue::TArc: return "arc(" + T.label(v.edge) + ")";
    case ArcValue::Boundary: return "boundary(" + T.label(v.edge) + ")";
  }
  return "?";
}

ArrowIx find_cycle_completion(const QuiverWithPotential& Q, ArrowIx alpha,
                              ArrowIx gamma) {
  return Q.cycle_completion(alpha, gamma);
}

std::vector<Crossing> enumerate_crossings(const Surface& S, const StringWord& w1_in,
                                          const StringWord& w2_in) {
  StringWord w1 = canonicalize(S.T, validate_string(S.Q, w1_in));
  StringWord w2 = canonicalize(S.T, validate_string(S.Q, w2_in));
  bool self = (w1 == w2);

  std::vector<Rec> recs;

  // --- module crossings: maximal overlaps of the snake graphs ---
  SnakeGraph G1 = snake_graph_of_string(S, w1);
  SnakeGraph G2 = self ? G1 : snake_graph_of_string(S, w2);
  SignFunction f1 = sign_function_from_string(w1);
  SignFunction f2 = self ? f1 : sign_function_from_string(w2);
  const StringWord& other = self ? w1 : w2;

  for (const Overlap& ov : enumerate_overlaps(G1, G2, self)) {
    int n2 = other.vertex_count();
    StringWord vb = ov.reversed ? invert(other) : other;
    int sb = ov.reversed ? n2 + 1 - ov.t2 : ov.s2;
    int tb = ov.reversed ? n2 + 1 - ov.s2 : ov.t2;

    Flanks fl = flanks_of(w1, ov.s, ov.t, vb, sb, tb);
    bool stag_start = !(ov.s == 1 && sb == 1);
    bool stag_end = !(ov.t == w1.vertex_count() && tb == vb.vertex_count());
    bool m1 = crosses_at(fl, stag_start, stag_end);
    Flanks fl_sw{fl.v_before, fl.v_after, fl.u_before, fl.u_after};
    bool m2 = crosses_at(fl_sw, stag_start, stag_end);
    if (m1 && m2)
      throw InternalFault("crossing-direction", "overlap crosses both ways");

    bool sign_says = is_crossing_overlap(G1, f1, G2, f2, ov);
    if (sign_says != (m1 || m2))
      throw InternalFault("crossing-consistency",
                          "string-level crossing test disagrees with the "
                          "snake-graph sign conditions");
    if (!m1 && !m2) continue;

    Crossing c;
    c.kind = CrossKind::Module;
    c.self = self;
    c.ov = ov;
    if (m1) {
      c.m1_crosses_m2 = true;
      c.u = w1;
      c.v = vb;
      c.su = ov.s;
      c.tu = ov.t;
      c.sv = sb;
      c.tv = tb;
    } else {
      // For a self pair the two copies are the same module; the record is
      // still "M crosses M".
      c.m1_crosses_m2 = self;
      c.u = vb;
      c.v = w1;
      c.su = sb;
      c.tu = tb;
      c.sv = ov.s;
      c.tv = ov.t;
    }
    recs.push_back(
        {c, {0, m1 ? 0 : 1, ov.s, ov.t, ov.s2, ov.t2, ov.reversed, 0}});
  }

  // --- arrow crossings ---
  for (int dir = 0; dir < (self ? 1 : 2); ++dir) {
    const StringWord& A = dir == 0 ? w1 : w2;
    const StringWord& B = dir == 0 ? w2 : w1;
    int ui = 0;
    for (const StringWord& u : reps(A)) {
      int vi = 0;
      for (const StringWord& v : reps(B)) {
        for (ArrowIx a : S.Q.arrows_from[u.end()]) {
          if (S.Q.arrows[a].target != v.start()) continue;
          StringWord w3;
          try {
            w3 = splice(S.Q, u, {a, false}, v);
          } catch (const ValidationError&) {
            continue;
          }
          Crossing c;
          c.kind = CrossKind::Arrow;
          c.self = self;
          c.m1_crosses_m2 = dir == 0;
          c.u = u;
          c.v = v;
          c.alpha = a;
          recs.push_back({c, {1, dir, a, ui, vi, 0, 0, 0}});
        }
        ++vi;
      }
      ++ui;
    }
  }

  // --- 3-cycle crossings ---
  for (int dir = 0; dir < (self ? 1 : 2); ++dir) {
    const StringWord& A = dir == 0 ? w1 : w2;
    const StringWord& B = dir == 0 ? w2 : w1;
    for (int p0 = 0; p0 < A.length(); ++p0) {
      ArrowIx a = A.letters[p0].arrow;
      auto cix = S.Q.cycle_of(a);
      if (!cix) continue;
      const auto& cyc = S.Q.cycles[*cix];
      int rot = 0;
      while (cyc[rot] != a) ++rot;
      ArrowIx alpha = cyc[rot];
      ArrowIx delta = cyc[(rot + 1) % 3];
      ArrowIx beta = cyc[(rot + 2) % 3];
      EdgeIx c_vertex = S.Q.arrows[delta].target;

      StringWord u = A.letters[p0].inverse ? invert(A) : A;
      int pos = A.letters[p0].inverse ? A.length() - p0 : p0 + 1;

      int vi = 0;
      for (const StringWord& v : reps(B)) {
        int this_vi = vi++;
        if (v.start() != c_vertex) continue;
        if (v.length() > 0) {
          ArrowIx first = v.letters[0].arrow;
          if (first == delta || first == beta) continue;
        }
        Crossing c;
        c.kind = CrossKind::ThreeCycle;
        c.self = self;
        c.m1_crosses_m2 = dir == 0;
        c.u = u;
        c.v = v;
        c.cycle = {alpha, delta, beta};
        c.pos = pos;
        recs.push_back({c, {2, dir, alpha, pos, this_vi, 0, 0, 0}});
      }
    }
  }

  std::sort(recs.begin(), recs.end(),
            [](const Rec& a, const Rec& b) { return a.key < b.key; });
  std::vector<Crossing> out;
  out.reserve(recs.size());
  for (auto& r : recs) out.push_back(std::move(r.c));
  return out;
}

namespace {

ArcValue opt_value(const std::optional<StringWord>& w) {
  return w ? ArcValue::string(*w) : ArcValue::zero();
}

}  // namespace

SmoothingResult smooth(const Surface& S, const Crossing& c) {
  const QuiverWithPotential& Q = S.Q;
  SmoothingResult r;

  if (c.kind == CrossKind::Module) {
    const StringWord& u = c.u;
    const StringWord& v = c.v;
    int nu = u.vertex_count(), nv = v.vertex_count();
    int su = c.su, tu = c.tu, sv = c.sv, tv = c.tv;

    r.w3 = ArcValue::string(
        tv < nv ? splice(Q, subword(u, 1, tu), v.letters[tv - 1], subword(v, tv + 1, nv))
                : subword(u, 1, tu));
    r.w4 = ArcValue::string(
        tu < nu ? splice(Q, subword(v, 1, tv), u.letters[tu - 1], subword(u, tu + 1, nu))
                : subword(v, 1, tv));

    if (su > 1 && sv > 1) {
      const Letter& la = u.letters[su - 2];
      const Letter& lg = v.letters[sv - 2];
      if (la.inverse || !lg.inverse)
        throw InternalFault("crossing-shape", "module-crossing flank directions");
      ArrowIx sigma = find_cycle_completion(Q, la.arrow, lg.arrow);
      r.w5 = ArcValue::string(splice(Q, subword(u, 1, su - 1), {sigma, true},
                                     invert(subword(v, 1, sv - 1))));
    } else if (sv == 1 && su > 1) {
      r.w5 = opt_value(delete_cohook_end(subword(u, 1, su - 1)));
    } else if (su == 1 && sv > 1) {
      r.w5 = opt_value(delete_hook_end(subword(v, 1, sv - 1)));
    } else {
      throw InternalFault("staggering", "both strings start at the overlap");
    }

    if (tu < nu && tv < nv) {
      const Letter& lb = u.letters[tu - 1];
      const Letter& ld = v.letters[tv - 1];
      if (!lb.inverse || ld.inverse)
        throw InternalFault("crossing-shape", "module-crossing flank directions");
      ArrowIx rho = find_cycle_completion(Q, lb.arrow, ld.arrow);
      r.w6 = ArcValue::string(splice(Q, invert(subword(u, tu + 1, nu)), {rho, true},
                                     subword(v, tv + 1, nv)));
    } else if (tv == nv && tu < nu) {
      r.w6 = opt_value(delete_cohook_start(subword(u, tu + 1, nu)));
    } else if (tu == nu && tv < nv) {
      r.w6 = opt_value(delete_hook_start(subword(v, tv + 1, nv)));
    } else {
      throw InternalFault("staggering", "both strings end at the overlap");
    }
    return r;
  }

  if (c.kind == CrossKind::Arrow) {
    r.w3 = ArcValue::string(splice(Q, c.u, {c.alpha, false}, c.v));
    const Arrow& a = Q.arrows[c.alpha];
    EdgeIx delta = S.T.third_side(a.tri, a.source, a.target);
    r.w4 = S.T.is_boundary(delta) ? ArcValue::boundary(delta) : ArcValue::arc_of_t(delta);
    r.w5 = opt_value(delete_cohook_end(c.u));
    r.w6 = opt_value(delete_hook_start(c.v));
    return r;
  }

  // ThreeCycle: cycle (alpha: a->b, delta: b->c, beta: c->a), alpha direct
  // at letter `pos` of u, v starting at c.
  ArrowIx delta = c.cycle[1], beta = c.cycle[2];
  int p = c.pos, nu = c.u.vertex_count();
  r.w3 = ArcValue::string(splice(Q, subword(c.u, 1, p), {beta, true}, c.v));
  r.w4 = opt_value(delete_cohook_start(subword(c.u, p, nu)));
  r.w5 = opt_value(delete_hook_end(subword(c.u, 1, p + 1)));
  r.w6 = ArcValue::string(
      splice(Q, invert(c.v), {delta, true}, subword(c.u, p + 1, nu)));
  return r;
}

namespace {

// Reads the word straight off the diagonals; letter directions are forced by
// the arrow orientations.
StringWord word_of_graph(const Surface& S, const SnakeGraph& G) {
  std::vector<Letter> letters;
  for (int j = 1; j < G.tile_count(); ++j) {
    EdgeIx a = G.tile(j).diag, b = G.tile(j + 1).diag;
    ArrowIx ar = S.Q.arrow_between(a, b);
    letters.push_back({ar, S.Q.arrows[ar].source != a});
  }
  return validate_string(S.Q, make_word(S.Q, G.tile(1).diag, letters));
}

}  // namespace

ArcValue graph_to_arc_value(const Surface& S, const SnakeGraph& g) {
  if (g.is_single_edge()) {
    EdgeIx e = *g.edge_only;
    return S.T.is_boundary(e) ? ArcValue::boundary(e) : ArcValue::arc_of_t(e);
  }
  return ArcValue::string(canonicalize(S.T, word_of_graph(S, g)));
}

Resolution smooth_graphs(const Surface& S, const Crossing& c) {
  if (c.kind == CrossKind::Module) {
    // A zero-length word has a free one-tile embedding; pin it to the
    // matched tile of the other side so the overlap tiles coincide.
    SnakeGraph Gu, Gv;
    if (c.u.length() == 0 && c.v.length() > 0) {
      Gv = snake_graph_of_string(S, c.v);
      const Tile& t = Gv.tile(c.sv);
      Gu = snake_graph_of_string(S, c.u, t.entry_tri, t.exit_tri);
    } else if (c.v.length() == 0 && c.u.length() > 0) {
      Gu = snake_graph_of_string(S, c.u);
      const Tile& t = Gu.tile(c.su);
      Gv = snake_graph_of_string(S, c.v, t.entry_tri, t.exit_tri);
    } else {
      Gu = snake_graph_of_string(S, c.u);
      Gv = snake_graph_of_string(S, c.v);
    }
    Overlap aligned{c.su, c.tu, c.sv, c.tv, false};
    return resolve_overlap(S, Gu, sign_function_from_string(c.u), Gv,
                           sign_function_from_string(c.v), aligned);
  }

  if (c.kind == CrossKind::Arrow) {
    const Arrow& a = S.Q.arrows[c.alpha];
    TriIx tri = a.tri;
    std::optional<TriIx> u_exit, v_entry;
    if (c.u.length() == 0) u_exit = tri;
    if (c.v.length() == 0) v_entry = tri;
    SnakeGraph Gu = snake_graph_of_string(S, c.u, std::nullopt, u_exit);
    SnakeGraph Gv = snake_graph_of_string(S, c.v, v_entry, std::nullopt);
    if (Gu.tiles.back().exit_tri != tri || Gv.tiles.front().entry_tri != tri)
      throw InternalFault("graft-triangle", "arrow crossing misses its triangle");
    EdgeIx delta = S.T.third_side(tri, a.source, a.target);
    return graft(S, Gu, sign_function_from_string(c.u), Gv,
                 sign_function_from_string(c.v), Gu.tile_count(), delta);
  }

  // ThreeCycle
  const Arrow& a = S.Q.arrows[c.cycle[0]];
  TriIx tri = a.tri;
  std::optional<TriIx> v_entry;
  if (c.v.length() == 0) v_entry = tri;
  SnakeGraph Gu = snake_graph_of_string(S, c.u);
  SnakeGraph Gv = snake_graph_of_string(S, c.v, v_entry, std::nullopt);
  if (S.T.shared_triangle(c.u.verts[c.pos - 1], c.u.verts[c.pos]) != tri ||
      Gv.tiles.front().entry_tri != tri)
    throw InternalFault("graft-triangle", "3-cycle crossing misses its triangle");
  EdgeIx delta = a.target;
  return graft(S, Gu, sign_function_from_string(c.u), Gv,
               sign_function_from_string(c.v), c.pos, delta);
}

std::vector<ShortExactSequence> ext_basis(const Surface& S, const StringWord& wM,
                                          const StringWord& wN) {
  std::vector<ShortExactSequence> out;
  for (const Crossing& c : enumerate_crossings(S, wM, wN)) {
    if (!c.m1_crosses_m2) continue;
    if (c.kind == CrossKind::ThreeCycle) continue;
    SmoothingResult sm = smooth(S, c);
    ShortExactSequence ses;
    ses.sub = dimension_vector(canonicalize(S.T, c.v));
    ses.quotient = dimension_vector(canonicalize(S.T, c.u));
    ses.middle.push_back(dimension_vector(canonicalize(S.T, sm.w3.word)));
    if (c.kind == CrossKind::Module)
      ses.middle.push_back(dimension_vector(canonicalize(S.T, sm.w4.word)));
    ses.provenance = c;
    int mid = 0;
    for (const auto& m : ses.middle) mid += m.total_dim;
    if (mid != ses.sub.total_dim + ses.quotient.total_dim)
      throw InternalFault("ses-dimension", "middle terms break additivity");
    out.push_back(std::move(ses));
  }
  return out;
}

ExtReport ext_dim(const Surface& S, const StringWord& wM, const StringWord& wN) {
  bool self = same_module(S.T, wM, wN);
  auto crossings = enumerate_crossings(S, wM, wN);
  ExtReport r;
  for (const Crossing& c : crossings) {
    bool fwd = c.m1_crosses_m2;
    if (c.kind == CrossKind::ThreeCycle)
      (fwd ? r.k : r.k_prime)++;
    else
      (fwd ? r.dim_mn : r.dim_nm)++;
  }
  if (self) {
    r.intersection = 2 * static_cast<int>(crossings.size());
    r.dim_nm = r.dim_mn;
    r.k_prime = r.k;
    if (2 * r.dim_mn != r.intersection - 2 * r.k)
      throw InternalFault("dimension-formula", "self-crossing formula mismatch");
  } else {
    r.intersection = static_cast<int>(crossings.size());
    if (r.dim_mn + r.dim_nm != r.intersection - r.k - r.k_prime)
      throw InternalFault("dimension-formula", "crossing formula mismatch");
  }
  return r;
}

std::vector<std::pair<Triangle, Triangle>> cluster_triangles(
    const Surface& S, const StringWord& w1, const StringWord& w2) {
  std::vector<std::pair<Triangle, Triangle>> out;
  for (const Crossing& c : enumerate_crossings(S, w1, w2)) {
    Resolution res = smooth_graphs(S, c);
    ArcValue crosser = ArcValue::string(canonicalize(S.T, c.u));
    ArcValue crossee = ArcValue::string(canonicalize(S.T, c.v));
    Triangle t1{crossee, crosser, {}};
    for (const SnakeGraph* g : {&res.g3, &res.g4}) {
      ArcValue v = graph_to_arc_value(S, *g);
      if (!v.zero_in_cluster()) t1.middle.push_back(v);
    }
    Triangle t2{crosser, crossee, {}};
    for (const SnakeGraph* g : {&res.g5, &res.g6}) {
      ArcValue v = graph_to_arc_value(S, *g);
      if (!v.zero_in_cluster()) t2.middle.push_back(v);
    }
    out.emplace_back(std::move(t1), std::move(t2));
  }
  return out;
}

}  // namespace arcext
