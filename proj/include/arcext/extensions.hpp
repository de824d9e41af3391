#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcext/snakegraph.hpp"
#include "arcext/strings.hpp"
#include "arcext/surface.hpp"

namespace arcext {

enum class CrossKind { Module, Arrow, ThreeCycle };

// One directed crossing of two string modules. u is the crosser's word and
// v the crossee's, each already in the orientation the definitions use.
struct Crossing {
  CrossKind kind;
  bool m1_crosses_m2;  // direction against the (w1, w2) the caller supplied
  bool self = false;
  StringWord u, v;

  // Module kind: 1-based vertex ranges of the overlap inside u and v.
  int su = 0, tu = 0, sv = 0, tv = 0;
  Overlap ov{};  // in (G(w1), G(w2)) coordinates, for reporting

  // Arrow kind.
  ArrowIx alpha = -1;

  // ThreeCycle kind: (alpha: a->b, delta: b->c, beta: c->a); alpha is the
  // letter of u at position pos (1-based), v starts at c.
  std::array<ArrowIx, 3> cycle{-1, -1, -1};
  int pos = 0;
};

// A module-or-arc value appearing in a smoothing: a genuine string, the zero
// module, an arc of the triangulation, or a boundary segment.
struct ArcValue {
  enum Kind { Str, Zero, TArc, Boundary } kind = Zero;
  StringWord word;   // kind == Str
  EdgeIx edge = -1;  // kind == TArc / Boundary

  static ArcValue string(StringWord w) { return {Str, std::move(w), -1}; }
  static ArcValue zero() { return {Zero, {}, -1}; }
  static ArcValue arc_of_t(EdgeIx e) { return {TArc, {}, e}; }
  static ArcValue boundary(EdgeIx e) { return {Boundary, {}, e}; }
  int dim() const { return kind == Str ? word.vertex_count() : 0; }
  bool zero_in_cluster() const { return kind == Zero || kind == Boundary; }
};

std::string print_arc_value(const Triangulation& T, const ArcValue& v);

struct SmoothingResult {
  ArcValue w3, w4, w5, w6;
};

std::vector<Crossing> enumerate_crossings(const Surface& S, const StringWord& w1,
                                          const StringWord& w2);

ArrowIx find_cycle_completion(const QuiverWithPotential& Q, ArrowIx alpha,
                              ArrowIx gamma);

// String-level smoothing (the w3..w6 formulas).
SmoothingResult smooth(const Surface& S, const Crossing& c);
// Snake-graph route: overlap resolution or grafting on the graphs of (u, v).
Resolution smooth_graphs(const Surface& S, const Crossing& c);
// Maps a graph-route output onto an ArcValue (single-edge graphs become
// arcs of T or boundary segments).
ArcValue graph_to_arc_value(const Surface& S, const SnakeGraph& g);

struct ShortExactSequence {
  StringModule sub;                  // M2
  std::vector<StringModule> middle;  // one or two nonzero terms
  StringModule quotient;             // M1
  Crossing provenance;
};

std::vector<ShortExactSequence> ext_basis(const Surface& S, const StringWord& wM,
                                          const StringWord& wN);

struct ExtReport {
  int dim_mn = 0;
  int dim_nm = 0;
  int intersection = 0;  // Int(gamma_M, gamma_N)
  int k = 0;             // 3-cycle crossings M over N
  int k_prime = 0;
};

ExtReport ext_dim(const Surface& S, const StringWord& wM, const StringWord& wN);

struct Triangle {
  ArcValue source, target;
  std::vector<ArcValue> middle;  // zero objects dropped
};

// Per crossing, the two triangles of the cluster category; middles computed
// through the snake-graph route.
std::vector<std::pair<Triangle, Triangle>> cluster_triangles(
    const Surface& S, const StringWord& w1, const StringWord& w2);

}  // namespace arcext
