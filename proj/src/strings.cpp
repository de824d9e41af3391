#include "arcext/strings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace arcext {

namespace {

EdgeIx letter_tail(const QuiverWithPotential& Q, const Letter& l) {
  const Arrow& a = Q.arrows[l.arrow];
  return l.inverse ? a.target : a.source;
}

EdgeIx letter_head(const QuiverWithPotential& Q, const Letter& l) {
  const Arrow& a = Q.arrows[l.arrow];
  return l.inverse ? a.source : a.target;
}

}  // namespace

StringWord zero_length_word(EdgeIx v) { return StringWord{{v}, {}}; }

StringWord make_word(const QuiverWithPotential& Q, EdgeIx base,
                     const std::vector<Letter>& letters) {
  StringWord w;
  w.verts.push_back(base);
  for (size_t i = 0; i < letters.size(); ++i) {
    if (letter_tail(Q, letters[i]) != w.verts.back())
      throw ValidationError("not-composable",
                            "letter " + std::to_string(i + 1) +
                                " does not start where the previous one ends");
    w.letters.push_back(letters[i]);
    w.verts.push_back(letter_head(Q, letters[i]));
  }
  return w;
}

StringWord validate_string(const QuiverWithPotential& Q, const StringWord& w) {
  if (w.verts.size() != w.letters.size() + 1)
    throw ValidationError("bad-word", "vertex/letter count mismatch");
  if (!Q.is_vertex(w.verts[0]))
    throw ValidationError("bad-word", "base is not a quiver vertex");
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (letter_tail(Q, w.letters[i]) != w.verts[i] ||
        letter_head(Q, w.letters[i]) != w.verts[i + 1])
      throw ValidationError("not-composable",
                            "letter " + std::to_string(i + 1) + " does not compose");
  }
  for (size_t i = 0; i + 1 < w.letters.size(); ++i) {
    const Letter& a = w.letters[i];
    const Letter& b = w.letters[i + 1];
    if (a.arrow == b.arrow && a.inverse != b.inverse)
      throw ValidationError("not-reduced",
                            "letter " + std::to_string(i + 2) +
                                " is the inverse of letter " + std::to_string(i + 1));
    if (!a.inverse && !b.inverse && Q.in_ideal(a.arrow, b.arrow))
      throw ValidationError("relation-subword",
                            "letters " + std::to_string(i + 1) + "," +
                                std::to_string(i + 2) + " form a relation");
    if (a.inverse && b.inverse && Q.in_ideal(b.arrow, a.arrow))
      throw ValidationError("relation-subword",
                            "letters " + std::to_string(i + 1) + "," +
                                std::to_string(i + 2) +
                                " form the inverse of a relation");
  }
  return w;
}

StringWord invert(const StringWord& w) {
  StringWord r;
  r.verts.assign(w.verts.rbegin(), w.verts.rend());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back({it->arrow, !it->inverse});
  return r;
}

namespace {

// Encoding order: vertex labels, then direction with direct < inverse.
int compare_words(const Triangulation& T, const StringWord& a, const StringWord& b) {
  if (int c = T.label(a.verts[0]).compare(T.label(b.verts[0])); c != 0) return c;
  size_t n = std::min(a.letters.size(), b.letters.size());
  for (size_t i = 0; i < n; ++i) {
    int da = a.letters[i].inverse ? 1 : 0;
    int db = b.letters[i].inverse ? 1 : 0;
    if (da != db) return da - db;
    if (int c = T.label(a.verts[i + 1]).compare(T.label(b.verts[i + 1])); c != 0)
      return c;
  }
  return static_cast<int>(a.letters.size()) - static_cast<int>(b.letters.size());
}

}  // namespace

StringWord canonicalize(const Triangulation& T, const StringWord& w) {
  StringWord r = invert(w);
  return compare_words(T, w, r) <= 0 ? w : r;
}

bool same_module(const Triangulation& T, const StringWord& a, const StringWord& b) {
  return canonicalize(T, a) == canonicalize(T, b);
}

StringWord parse_word(const Surface& S, const std::string& text) {
  if (text.empty()) throw ValidationError("bad-grammar", "empty word");
  if (text.front() == '(') {
    if (text.back() != ')' || text.size() < 3)
      throw ValidationError("bad-grammar", "zero-length words print as (v)");
    EdgeIx v = S.T.edge(text.substr(1, text.size() - 2));
    if (!S.Q.is_vertex(v))
      throw ValidationError("bad-word", "'" + S.T.label(v) + "' is a boundary segment");
    return zero_length_word(v);
  }
  std::vector<std::string> labels;
  std::vector<char> seps;
  std::string cur;
  for (char c : text) {
    if (c == '>' || c == '<') {
      if (cur.empty()) throw ValidationError("bad-grammar", "missing vertex label");
      labels.push_back(cur);
      cur.clear();
      seps.push_back(c);
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw ValidationError("bad-grammar", "missing final vertex label");
  labels.push_back(cur);

  std::vector<Letter> letters;
  EdgeIx base = S.T.edge(labels[0]);
  EdgeIx prev = base;
  for (size_t i = 0; i < seps.size(); ++i) {
    EdgeIx next = S.T.edge(labels[i + 1]);
    std::optional<ArrowIx> a;
    if (seps[i] == '>')
      a = S.Q.arrow_from_to(prev, next);
    else
      a = S.Q.arrow_from_to(next, prev);
    if (!a)
      throw ValidationError("no-arrow", "no arrow for letter " + std::to_string(i + 1) +
                                            " ('" + labels[i] + seps[i] + labels[i + 1] +
                                            "')");
    letters.push_back({*a, seps[i] == '<'});
    prev = next;
  }
  return validate_string(S.Q, make_word(S.Q, base, letters));
}

std::string print_word(const Triangulation& T, const StringWord& w) {
  if (w.letters.empty()) return "(" + T.label(w.verts[0]) + ")";
  std::ostringstream os;
  os << T.label(w.verts[0]);
  for (size_t i = 0; i < w.letters.size(); ++i)
    os << (w.letters[i].inverse ? '<' : '>') << T.label(w.verts[i + 1]);
  return os.str();
}

bool is_direct_string(const StringWord& w) {
  return std::none_of(w.letters.begin(), w.letters.end(),
                      [](const Letter& l) { return l.inverse; });
}

bool is_inverse_string(const StringWord& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](const Letter& l) { return l.inverse; });
}

StringWord subword(const StringWord& w, int a, int b) {
  if (a < 1 || b > w.vertex_count() || a > b)
    throw InternalFault("subword-range", "bad subword range");
  StringWord r;
  r.verts.assign(w.verts.begin() + (a - 1), w.verts.begin() + b);
  r.letters.assign(w.letters.begin() + (a - 1), w.letters.begin() + (b - 1));
  return r;
}

namespace {

StringWord suffix_from(const StringWord& w, int first_vertex) {
  return subword(w, first_vertex, w.vertex_count());
}

StringWord prefix_to(const StringWord& w, int last_vertex) {
  return subword(w, 1, last_vertex);
}

}  // namespace

std::optional<StringWord> delete_hook_start(const StringWord& w) {
  for (int i = 0; i < w.length(); ++i)
    if (!w.letters[i].inverse) return suffix_from(w, i + 2);
  return std::nullopt;  // inverse string (or zero-length)
}

std::optional<StringWord> delete_cohook_start(const StringWord& w) {
  for (int i = 0; i < w.length(); ++i)
    if (w.letters[i].inverse) return suffix_from(w, i + 2);
  return std::nullopt;  // direct string
}

std::optional<StringWord> delete_hook_end(const StringWord& w) {
  for (int i = w.length() - 1; i >= 0; --i)
    if (w.letters[i].inverse) return prefix_to(w, i + 1);
  return std::nullopt;  // direct string
}

std::optional<StringWord> delete_cohook_end(const StringWord& w) {
  for (int i = w.length() - 1; i >= 0; --i)
    if (!w.letters[i].inverse) return prefix_to(w, i + 1);
  return std::nullopt;  // inverse string
}

StringWord splice(const QuiverWithPotential& Q, const StringWord& u,
                  const Letter& mid, const StringWord& v) {
  std::vector<Letter> letters = u.letters;
  letters.push_back(mid);
  letters.insert(letters.end(), v.letters.begin(), v.letters.end());
  return validate_string(Q, make_word(Q, u.verts[0], letters));
}

StringModule dimension_vector(const StringWord& w) {
  StringModule m;
  m.word = w;
  for (EdgeIx v : w.verts) ++m.dim_vector[v];
  m.total_dim = w.vertex_count();
  return m;
}

StringWord crossing_sequence_to_string(const QuiverWithPotential& Q,
                                       const std::vector<EdgeIx>& seq) {
  if (seq.empty()) throw ValidationError("empty-sequence", "empty crossing sequence");
  for (EdgeIx e : seq)
    if (!Q.is_vertex(e))
      throw ValidationError("bad-sequence", "crossing sequence hits a boundary segment");
  std::vector<Letter> letters;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] == seq[i + 1])
      throw ValidationError("bad-sequence", "consecutive crossings of the same arc");
    ArrowIx a = Q.arrow_between(seq[i], seq[i + 1]);
    letters.push_back({a, Q.arrows[a].source != seq[i]});
  }
  return validate_string(Q, make_word(Q, seq[0], letters));
}

std::vector<StringWord> enumerate_strings(const Surface& S, int max_len) {
  std::map<std::string, StringWord> seen;
  std::vector<StringWord> frontier;
  for (EdgeIx v : S.Q.vertices) frontier.push_back(zero_length_word(v));
  for (const auto& w : frontier) seen.emplace(print_word(S.T, w), w);

  for (int len = 1; len <= max_len; ++len) {
    std::vector<StringWord> next;
    for (const auto& w : frontier) {
      EdgeIx x = w.end();
      const Letter* last = w.letters.empty() ? nullptr : &w.letters.back();
      auto try_extend = [&](const Letter& l) {
        if (last) {
          if (last->arrow == l.arrow && last->inverse != l.inverse) return;
          if (!last->inverse && !l.inverse && S.Q.in_ideal(last->arrow, l.arrow)) return;
          if (last->inverse && l.inverse && S.Q.in_ideal(l.arrow, last->arrow)) return;
        }
        StringWord e = w;
        e.letters.push_back(l);
        e.verts.push_back(l.inverse ? S.Q.arrows[l.arrow].source
                                    : S.Q.arrows[l.arrow].target);
        next.push_back(std::move(e));
      };
      for (ArrowIx a : S.Q.arrows_from[x]) try_extend({a, false});
      for (ArrowIx a : S.Q.arrows_into[x]) try_extend({a, true});
    }
    for (const auto& w : next) {
      StringWord c = canonicalize(S.T, w);
      seen.emplace(print_word(S.T, c), c);
    }
    frontier = std::move(next);
  }

  std::vector<StringWord> out;
  out.reserve(seen.size());
  for (auto& [key, w] : seen) out.push_back(w);
  std::stable_sort(out.begin(), out.end(),
                   [&](const StringWord& a, const StringWord& b) {
                     if (a.length() != b.length()) return a.length() < b.length();
                     return compare_words(S.T, a, b) < 0;
                   });
  return out;
}

}  // namespace arcext
