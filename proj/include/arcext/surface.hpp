#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcext {

// Base error for anything recoverable; carries a short machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Bad user input (malformed documents, invalid words, unrealizable sequences).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A violated internal theorem or consistency identity. Never expected on
// valid surface data; the CLI maps this to exit code 2.
class InternalFault : public Error {
 public:
  using Error::Error;
};

using EdgeIx = int;
using TriIx = int;
using ArrowIx = int;

struct EdgeRec {
  std::string id;
  bool boundary = false;
};

// An oriented triangulation of an unpunctured marked surface, given purely
// combinatorially: labelled edges plus triangles as ccw-ordered side triples.
struct Triangulation {
  std::vector<EdgeRec> edges;
  std::vector<std::array<EdgeIx, 3>> triangles;  // counterclockwise
  std::vector<std::vector<TriIx>> tris_of_edge;  // derived incidence

  const std::string& label(EdgeIx e) const { return edges[e].id; }
  bool is_boundary(EdgeIx e) const { return edges[e].boundary; }
  bool is_internal(EdgeIx e) const { return !edges[e].boundary; }
  EdgeIx edge(const std::string& id) const;  // ValidationError if unknown

  std::vector<TriIx> shared_triangles(EdgeIx a, EdgeIx b) const;
  // The unique triangle containing both a and b; errors if zero or two.
  TriIx shared_triangle(EdgeIx a, EdgeIx b) const;
  // The adjacent triangle of internal edge e other than t.
  TriIx other_triangle(EdgeIx e, TriIx t) const;
  // Both triangles adjacent to internal edge e, in stored order.
  std::array<TriIx, 2> adjacent_triangles(EdgeIx e) const;
  bool tri_contains(TriIx t, EdgeIx e) const;
  EdgeIx third_side(TriIx t, EdgeIx a, EdgeIx b) const;
  // The two sides of t other than diag, in ccw order starting after diag.
  std::array<EdgeIx, 2> flanks_ccw(TriIx t, EdgeIx diag) const;

  void check_invariants() const;  // ValidationError on violation
};

Triangulation load_triangulation(const std::string& json_text);

struct Arrow {
  EdgeIx source;
  EdgeIx target;
  TriIx tri;  // the triangle this arrow was read off
};

// Gentle bound quiver of a triangulation: vertices are internal edges,
// arrows follow ccw succession inside triangles, the potential is the sum
// of the 3-cycles of internal triangles.
struct QuiverWithPotential {
  std::vector<EdgeIx> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<ArrowIx, ArrowIx>> relations;  // path a.b lies in I
  std::vector<std::array<ArrowIx, 3>> cycles;

  std::vector<std::vector<ArrowIx>> arrows_from;  // indexed by EdgeIx
  std::vector<std::vector<ArrowIx>> arrows_into;

  bool is_vertex(EdgeIx e) const;
  std::optional<ArrowIx> arrow_from_to(EdgeIx u, EdgeIx v) const;
  // The unique arrow joining u and v in either direction; ValidationError
  // if none, InternalFault if two (consecutive arcs sharing two triangles
  // are outside the supported corpus).
  ArrowIx arrow_between(EdgeIx u, EdgeIx v) const;
  bool in_ideal(ArrowIx a, ArrowIx b) const;
  std::optional<int> cycle_of(ArrowIx a) const;
  // The arrow sigma with (alpha, gamma, sigma) a cycle of the potential.
  ArrowIx cycle_completion(ArrowIx alpha, ArrowIx gamma) const;

  void check_gentle() const;  // (S1)-(S4) plus potential coherence
};

QuiverWithPotential derive_quiver(const Triangulation& T);

// Everything the calculus needs about one triangulated surface.
struct Surface {
  Triangulation T;
  QuiverWithPotential Q;

  static Surface load(const std::string& json_text);
  static Surface from_triangulation(Triangulation T);
};

}  // namespace arcext
