#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arcext/surface.hpp"

namespace arcext {

struct Letter {
  ArrowIx arrow;
  bool inverse;
  bool operator==(const Letter&) const = default;
};

// A reduced walk in the quiver avoiding relations. The vertex sequence is
// kept alongside the letters; verts.size() == letters.size() + 1 always.
// A zero-length word (no letters) is the simple module at verts[0].
struct StringWord {
  std::vector<EdgeIx> verts;
  std::vector<Letter> letters;

  int length() const { return static_cast<int>(letters.size()); }
  int vertex_count() const { return static_cast<int>(verts.size()); }
  EdgeIx start() const { return verts.front(); }
  EdgeIx end() const { return verts.back(); }
  bool operator==(const StringWord&) const = default;
};

StringWord zero_length_word(EdgeIx v);

// Assembles a word from a base vertex and letters, checking composability
// only. validate_string adds reducedness and the relation-subword test.
StringWord make_word(const QuiverWithPotential& Q, EdgeIx base,
                     const std::vector<Letter>& letters);
StringWord validate_string(const QuiverWithPotential& Q, const StringWord& w);

StringWord invert(const StringWord& w);
bool same_module(const Triangulation& T, const StringWord& a, const StringWord& b);
StringWord canonicalize(const Triangulation& T, const StringWord& w);

// ASCII grammar: vertex (('>'|'<') vertex)*, plus "(v)" for the zero-length
// word at v. a>b is the arrow a->b, a<b the arrow b->a traversed inversely.
StringWord parse_word(const Surface& S, const std::string& text);
std::string print_word(const Triangulation& T, const StringWord& w);

bool is_direct_string(const StringWord& w);   // no inverse letters (or empty)
bool is_inverse_string(const StringWord& w);  // no direct letters (or empty)

// The four hook/cohook deletions. nullopt is the zero module; a deletion
// that consumes every letter returns the zero-length word at the surviving
// endpoint instead.
std::optional<StringWord> delete_hook_start(const StringWord& w);
std::optional<StringWord> delete_cohook_start(const StringWord& w);
std::optional<StringWord> delete_hook_end(const StringWord& w);
std::optional<StringWord> delete_cohook_end(const StringWord& w);

// Subword on vertex positions [a, b], 1-based inclusive.
StringWord subword(const StringWord& w, int a, int b);
// Concatenation u . letter . v; composability enforced, then validated.
StringWord splice(const QuiverWithPotential& Q, const StringWord& u,
                  const Letter& mid, const StringWord& v);

struct StringModule {
  StringWord word;
  std::map<EdgeIx, int> dim_vector;
  int total_dim = 0;
};

StringModule dimension_vector(const StringWord& w);

// Letters of the arc crossing the given arcs of T in order; each consecutive
// pair must be joined by exactly one arrow. Validates the result.
StringWord crossing_sequence_to_string(const QuiverWithPotential& Q,
                                       const std::vector<EdgeIx>& seq);

// All strings over Q with at most max_len letters, one canonical
// representative per module, deterministically ordered.
std::vector<StringWord> enumerate_strings(const Surface& S, int max_len);

}  // namespace arcext
