#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcext/strings.hpp"
#include "arcext/surface.hpp"

namespace arcext {

enum class Side { North, East, South, West };
enum class GlueDir { North, East };

Side glue_side(GlueDir d);        // North/East
Side complement_side(GlueDir d);  // South/West

// One square tile of a snake graph. The diagonal runs NW-SE; the entry
// triangle occupies the SW half (south+west sides), the exit triangle the
// NE half.
struct Tile {
  EdgeIx diag;
  EdgeIx north, east, south, west;
  int rel;  // +1 / -1 relative orientation of the embedding
  TriIx entry_tri;
  TriIx exit_tri;

  EdgeIx side(Side s) const;
};

// Labelled snake graph. Either a chain of tiles glued along north/east
// steps, or the degenerate single-edge graph assigned to an arc of T or a
// boundary segment.
struct SnakeGraph {
  std::vector<Tile> tiles;
  std::vector<GlueDir> glue;  // glue[j]: tile j+2 sits north/east of tile j+1
  std::optional<EdgeIx> edge_only;

  static SnakeGraph single_edge(EdgeIx w);
  bool is_single_edge() const { return edge_only.has_value(); }
  int tile_count() const { return static_cast<int>(tiles.size()); }
  const Tile& tile(int i) const { return tiles[i - 1]; }  // 1-based
  // Weight of the interior edge sigma_j between tiles j and j+1 (1-based).
  EdgeIx interior_weight(int j) const;
  // Side of tile j carrying sigma_j, and the matching side of tile j+1.
  Side interior_side_on_prev(int j) const;
  Side interior_side_on_next(int j) const;
};

// Sign function: values on the interior edges in tile order; for a one-tile
// graph the seed fixes the north-edge sign (two global states exist).
struct SignFunction {
  std::vector<int> interior;
  int seed_north = +1;
};

SignFunction negate(const SignFunction& f);
// Sign on any side of any tile, via "north=west=-south=-east" per tile.
int edge_sign(const SnakeGraph& G, const SignFunction& f, int tile_1based,
              Side side);

// Build from the crossing sequence. Entry/exit triangle overrides apply to
// the first/last tile and are only consulted when the sequence leaves them
// undetermined (single-crossing sequences).
SnakeGraph build_snake_graph(const Surface& S, const std::vector<EdgeIx>& seq,
                             std::optional<TriIx> entry_first = std::nullopt,
                             std::optional<TriIx> exit_last = std::nullopt);
SnakeGraph snake_graph_of_string(const Surface& S, const StringWord& w,
                                 std::optional<TriIx> entry_first = std::nullopt,
                                 std::optional<TriIx> exit_last = std::nullopt);

SignFunction sign_function_from_string(const StringWord& w);
// Inverse of the two constructions above; errors when (G, f) is not the
// image of a valid string.
StringWord string_from_signed_snake_graph(const Surface& S, const SnakeGraph& G,
                                          const SignFunction& f);
// Sign function carried by a snake graph itself (one of the two states).
SignFunction canonical_sign(const SnakeGraph& G);

SnakeGraph reverse_graph(const SnakeGraph& G);
SignFunction reverse_sign(const SnakeGraph& G, const SignFunction& f);
SnakeGraph flip_graph(const SnakeGraph& G);  // re-embedding across the diagonal
// Equality up to traversal reversal and re-embedding.
bool graphs_equivalent(const SnakeGraph& a, const SnakeGraph& b);

// Maximal common sub-snake-graph; tile ranges are 1-based inclusive, with
// (s2, t2) in the original traversal of G2 and `reversed` recording whether
// G2 was matched backwards.
struct Overlap {
  int s, t;
  int s2, t2;
  bool reversed;
  bool operator==(const Overlap&) const = default;
};

std::vector<Overlap> enumerate_overlaps(const SnakeGraph& G1,
                                        const SnakeGraph& G2, bool self);

bool is_crossing_overlap(const SnakeGraph& G1, const SignFunction& f1,
                         const SnakeGraph& G2, const SignFunction& f2,
                         const Overlap& ov);

struct Resolution {
  SnakeGraph g3, g4, g5, g6;
};

// Overlap resolution (smoothing through the overlap) at the graph level.
Resolution resolve_overlap(const Surface& S, const SnakeGraph& G1,
                           const SignFunction& f1, const SnakeGraph& G2,
                           const SignFunction& f2, const Overlap& ov);

// Grafting of G2 on G1 at tile s along the edge delta (crossing inside a
// triangle, empty overlap). Case s == tile_count(G1) and case s < it.
Resolution graft(const Surface& S, const SnakeGraph& G1, const SignFunction& f1,
                 const SnakeGraph& G2, const SignFunction& f2, int s,
                 EdgeIx delta);

std::string render_ascii(const Triangulation& T, const SnakeGraph& G);

}  // namespace arcext
