#include "arcext/sweep.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include "arcext/oracle.hpp"
#include "arcext/snakegraph.hpp"

namespace arcext {

namespace {

std::string describe_pair(const Surface& S, const StringWord& a, const StringWord& b) {
  return print_word(S.T, a) + " / " + print_word(S.T, b);
}

// Word-route value against the snake-graph-route output.
void check_dual_route(const Surface& S, const ArcValue& wv, const SnakeGraph& gv,
                      const std::string& where, std::vector<SweepIssue>& issues) {
  if (wv.kind == ArcValue::Str) {
    if (gv.is_single_edge()) {
      issues.push_back({"dual-route", where + ": word route gives a string, "
                                              "graph route a single edge"});
      return;
    }
    SnakeGraph expect = snake_graph_of_string(S, wv.word);
    if (!graphs_equivalent(expect, gv))
      issues.push_back({"dual-route", where + ": snake graphs differ"});
    return;
  }
  // Zero modules and arcs of T correspond to single-edge graphs.
  if (!gv.is_single_edge()) {
    issues.push_back({"dual-route", where + ": word route vanishes, graph "
                                            "route keeps tiles"});
    return;
  }
  if ((wv.kind == ArcValue::TArc || wv.kind == ArcValue::Boundary) &&
      *gv.edge_only != wv.edge)
    issues.push_back({"dual-route", where + ": single-edge weights differ"});
}

void check_pair(const Surface& S, OracleCache& cache, const StringWord& w1,
                const StringWord& w2, bool self, long& crossing_count,
                std::vector<SweepIssue>& issues) {
  std::string pair = describe_pair(S, w1, w2);
  auto crossings = enumerate_crossings(S, w1, w2);
  crossing_count += static_cast<long>(crossings.size());

  for (size_t i = 0; i < crossings.size(); ++i) {
    const Crossing& c = crossings[i];
    std::string where = pair + " crossing " + std::to_string(i);
    SmoothingResult sm = smooth(S, c);
    Resolution res = smooth_graphs(S, c);
    check_dual_route(S, sm.w3, res.g3, where + " w3", issues);
    check_dual_route(S, sm.w4, res.g4, where + " w4", issues);
    check_dual_route(S, sm.w5, res.g5, where + " w5", issues);
    check_dual_route(S, sm.w6, res.g6, where + " w6", issues);

    int din = c.u.vertex_count() + c.v.vertex_count();
    int d34 = sm.w3.dim() + sm.w4.dim();
    int d56 = sm.w5.dim() + sm.w6.dim();
    if (c.kind == CrossKind::ThreeCycle) {
      if (d34 >= din)
        issues.push_back({"dimension", where + ": 3-cycle smoothing not smaller"});
    } else if (d34 != din) {
      issues.push_back({"dimension", where + ": dim M3+M4 != dim M1+M2"});
    }
    if (d56 > din - 1)
      issues.push_back({"dimension", where + ": dim M5+M6 > dim M1+M2-1"});
  }

  ExtReport er = ext_dim(S, w1, w2);
  long omn = cache.ext1(w1, w2);
  long onm = self ? omn : cache.ext1(w2, w1);
  if (omn != er.dim_mn || onm != er.dim_nm) {
    std::ostringstream os;
    os << pair << ": combinatorial (" << er.dim_mn << "," << er.dim_nm
       << ") vs oracle (" << omn << "," << onm << ")";
    issues.push_back({"oracle-mismatch", os.str()});
  }

  auto triangles = cluster_triangles(S, w1, w2);
  if (triangles.size() != crossings.size())
    issues.push_back({"triangles", pair + ": triangle pairs != crossings"});
  int per_dir[2] = {0, 0};
  for (const Crossing& c : crossings) ++per_dir[c.m1_crosses_m2 ? 0 : 1];
  int expected_int = self ? 2 * static_cast<int>(crossings.size())
                          : per_dir[0] + per_dir[1];
  if (er.intersection != expected_int)
    issues.push_back({"triangles", pair + ": Int disagrees with crossing count"});

  if (!self) {
    // Overlap symmetry between the two orders.
    SnakeGraph G1 = snake_graph_of_string(S, canonicalize(S.T, w1));
    SnakeGraph G2 = snake_graph_of_string(S, canonicalize(S.T, w2));
    auto o12 = enumerate_overlaps(G1, G2, false);
    auto o21 = enumerate_overlaps(G2, G1, false);
    if (o12.size() != o21.size()) {
      issues.push_back({"overlap-symmetry", pair});
    } else {
      for (const Overlap& ov : o12) {
        Overlap mirror{ov.s2, ov.t2, ov.s, ov.t, ov.reversed};
        if (std::find(o21.begin(), o21.end(), mirror) == o21.end()) {
          issues.push_back({"overlap-symmetry", pair});
          break;
        }
      }
    }
  }
}

}  // namespace

SweepResult check_surface(const Surface& S, const SweepOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  SweepResult result;

  std::vector<StringWord> words = enumerate_strings(S, opt.max_len);
  result.strings = static_cast<long>(words.size());

  // Bijection roundtrip, once per string.
  for (const StringWord& w : words) {
    SnakeGraph G = snake_graph_of_string(S, w);
    SignFunction f = sign_function_from_string(w);
    if (w.length() > 0) {
      StringWord back = string_from_signed_snake_graph(S, G, f);
      if (!(back == w))
        result.issues.push_back(
            {"roundtrip", print_word(S.T, w) + " -> " + print_word(S.T, back)});
    } else {
      // The one-tile graph maps back to the zero-length word at its diagonal.
      if (G.tile_count() != 1 || G.tile(1).diag != w.verts[0])
        result.issues.push_back({"roundtrip", print_word(S.T, w)});
    }
  }

  std::vector<std::pair<int, int>> todo;
  for (int i = 0; i < static_cast<int>(words.size()); ++i)
    for (int j = i; j < static_cast<int>(words.size()); ++j)
      todo.emplace_back(i, j);
  result.pairs = static_cast<long>(todo.size());

  int nthreads = std::max(1, opt.parallel);
  std::vector<std::vector<SweepIssue>> issues(nthreads);
  std::vector<long> counts(nthreads, 0);
  std::atomic<size_t> next{0};

  auto worker = [&](int tid) {
    OracleCache cache(S);
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= todo.size()) break;
      auto [i, j] = todo[k];
      try {
        check_pair(S, cache, words[i], words[j], i == j, counts[tid], issues[tid]);
      } catch (const Error& ex) {
        issues[tid].push_back(
            {std::string("exception:") + ex.code(),
             describe_pair(S, words[i], words[j]) + ": " + ex.what()});
      } catch (const std::exception& ex) {
        issues[tid].push_back({"exception",
                               describe_pair(S, words[i], words[j]) + ": " + ex.what()});
      }
    }
  };

  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (int t = 0; t < nthreads; ++t) {
    result.crossings += counts[t];
    result.issues.insert(result.issues.end(), issues[t].begin(), issues[t].end());
  }

  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace arcext
