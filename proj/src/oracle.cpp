#include "arcext/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "arcext/strings.hpp"

namespace arcext {

namespace {

using i128 = __int128;

long long narrow(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
    throw InternalFault("rat-overflow", "rational arithmetic overflow");
  return static_cast<long long>(v);
}

long long gcd_ll(long long a, long long b) {
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace

Rat::Rat(long long n, long long d) {
  if (d == 0) throw InternalFault("rat-div0", "zero denominator");
  if (d < 0) n = -n, d = -d;
  long long g = gcd_ll(n, d);
  if (g) n /= g, d /= g;
  num = n;
  den = d == 0 ? 1 : d;
}

Rat Rat::operator+(const Rat& o) const {
  i128 n = i128(num) * o.den + i128(o.num) * den;
  i128 d = i128(den) * o.den;
  i128 g = [](i128 a, i128 b) {
    if (a < 0) a = -a;
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }(n, d);
  if (g > 1) n /= g, d /= g;
  return Rat(narrow(n), narrow(d));
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }
Rat Rat::operator-() const {
  Rat r;
  r.num = -num;
  r.den = den;
  return r;
}

Rat Rat::operator*(const Rat& o) const {
  long long g1 = gcd_ll(num, o.den), g2 = gcd_ll(o.num, den);
  long long a = g1 ? num / g1 : num, d1 = g1 ? o.den / g1 : o.den;
  long long b = g2 ? o.num / g2 : o.num, d2 = g2 ? den / g2 : den;
  return Rat(narrow(i128(a) * b), narrow(i128(d1) * d2));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw InternalFault("rat-div0", "division by zero");
  Rat inv;
  inv.num = o.den;
  inv.den = o.num;
  if (inv.den < 0) inv.num = -inv.num, inv.den = -inv.den;
  return *this * inv;
}

Mat zero_matrix(int rows, int cols) { return Mat(rows, Vec(cols)); }

Vec mat_apply(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    Rat acc;
    for (size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].is_zero() && !v[j].is_zero()) acc = acc + m[i][j] * v[j];
    out[i] = acc;
  }
  return out;
}

namespace {

// Row echelon; returns rank, m reduced in place, pivot columns appended.
int echelon(Mat& m, std::vector<int>* pivots = nullptr) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int mat_rank(Mat m) { return echelon(m); }

std::vector<Vec> null_space(const Mat& m, int cols) {
  Mat e = m;
  std::vector<int> pivots;
  echelon(e, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols);
    v[free] = Rat(1);
    for (size_t r = 0; r < pivots.size(); ++r) {
      // Echelon rows are normalized with leading 1 at pivots[r].
      if (static_cast<int>(e[r].size()) > free) v[pivots[r]] = -e[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec solve_exact(const Mat& m, const Vec& b) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Mat aug = m;
  for (int i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<int> pivots;
  echelon(aug, &pivots);
  Vec x(cols);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols)
      throw InternalFault("inconsistent-system", "no exact solution");
    x[pivots[r]] = aug[r][cols];
  }
  // Rows below the pivots must be zero (checked implicitly by pivot scan),
  // but an inconsistent row pivots on the augmented column above.
  return x;
}

void SparseSystem::add_row(std::vector<std::pair<int, Rat>> row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicate columns
  std::vector<std::pair<int, Rat>> merged;
  for (auto& [c, v] : row) {
    if (!merged.empty() && merged.back().first == c)
      merged.back().second = merged.back().second + v;
    else
      merged.emplace_back(c, v);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& p) { return p.second.is_zero(); }),
               merged.end());
  if (!merged.empty()) rows.push_back(std::move(merged));
}

long SparseSystem::nullity() const {
  std::vector<std::vector<std::pair<int, Rat>>> pivot_rows(cols);
  std::vector<bool> has_pivot(cols, false);
  long rank = 0;
  for (auto row : rows) {
    while (!row.empty()) {
      int c = row.front().first;
      if (!has_pivot[c]) break;
      Rat f = row.front().second;
      const auto& pr = pivot_rows[c];
      // row -= f * pivot_row   (pivot rows are normalized to lead with 1)
      std::vector<std::pair<int, Rat>> merged;
      size_t i = 0, j = 0;
      while (i < row.size() || j < pr.size()) {
        if (j == pr.size() || (i < row.size() && row[i].first < pr[j].first)) {
          merged.push_back(row[i++]);
        } else if (i == row.size() || pr[j].first < row[i].first) {
          merged.emplace_back(pr[j].first, -(f * pr[j].second));
          ++j;
        } else {
          Rat v = row[i].second - f * pr[j].second;
          if (!v.is_zero()) merged.emplace_back(row[i].first, v);
          ++i, ++j;
        }
      }
      row = std::move(merged);
    }
    if (row.empty()) continue;
    int c = row.front().first;
    Rat inv = Rat(1) / row.front().second;
    for (auto& [col, v] : row) v = v * inv;
    pivot_rows[c] = std::move(row);
    has_pivot[c] = true;
    ++rank;
  }
  return cols - rank;
}

int Representation::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), 0);
}

void check_relations(const QuiverWithPotential& Q, const Representation& M) {
  for (const auto& [a, b] : Q.relations) {
    // path a.b acts as M(b) o M(a)
    const Mat& A = M.maps[a];
    const Mat& B = M.maps[b];
    int rows = static_cast<int>(B.size());
    int mid = static_cast<int>(A.size());
    int cols = mid ? static_cast<int>(A[0].size()) : 0;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        Rat acc;
        for (int k = 0; k < mid; ++k) acc = acc + B[i][k] * A[k][j];
        if (!acc.is_zero())
          throw InternalFault("relation-violated",
                              "representation breaks a relation");
      }
  }
}

Representation string_to_representation(const QuiverWithPotential& Q,
                                        const StringWord& w) {
  Representation M;
  int nedges = static_cast<int>(Q.arrows_from.size());
  M.dims.assign(nedges, 0);
  std::vector<int> index_at;  // position -> index within its vertex block
  for (EdgeIx v : w.verts) index_at.push_back(M.dims[v]++);
  M.maps.resize(Q.arrows.size());
  for (size_t a = 0; a < Q.arrows.size(); ++a)
    M.maps[a] = zero_matrix(M.dims[Q.arrows[a].target], M.dims[Q.arrows[a].source]);
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = w.letters[i];
    if (!l.inverse)
      M.maps[l.arrow][index_at[i + 1]][index_at[i]] = Rat(1);
    else
      M.maps[l.arrow][index_at[i]][index_at[i + 1]] = Rat(1);
  }
  check_relations(Q, M);
  return M;
}

Representation direct_sum(const QuiverWithPotential& Q, const Representation& a,
                          const Representation& b) {
  Representation s;
  int nedges = static_cast<int>(a.dims.size());
  s.dims.resize(nedges);
  for (int v = 0; v < nedges; ++v) s.dims[v] = a.dims[v] + b.dims[v];
  s.maps.resize(Q.arrows.size());
  for (size_t k = 0; k < Q.arrows.size(); ++k) {
    int sr = s.dims[Q.arrows[k].target], sc = s.dims[Q.arrows[k].source];
    int ar = a.dims[Q.arrows[k].target], ac = a.dims[Q.arrows[k].source];
    s.maps[k] = zero_matrix(sr, sc);
    for (int i = 0; i < ar; ++i)
      for (int j = 0; j < ac; ++j) s.maps[k][i][j] = a.maps[k][i][j];
    for (int i = ar; i < sr; ++i)
      for (int j = ac; j < sc; ++j) s.maps[k][i][j] = b.maps[k][i - ar][j - ac];
  }
  return s;
}

Representation projective(const QuiverWithPotential& Q, EdgeIx v,
                          std::size_t path_bound) {
  // Relation-free paths from v, discovered by extension.
  struct Path {
    EdgeIx end;
    std::vector<ArrowIx> arrows;
  };
  std::vector<Path> paths{{v, {}}};
  for (size_t i = 0; i < paths.size(); ++i) {
    if (paths.size() > path_bound)
      throw ValidationError("path-bound",
                            "path enumeration exceeded the safety bound; the "
                            "input algebra does not look gentle");
    for (ArrowIx a : Q.arrows_from[paths[i].end]) {
      if (!paths[i].arrows.empty() && Q.in_ideal(paths[i].arrows.back(), a))
        continue;
      Path p = paths[i];
      p.arrows.push_back(a);
      p.end = Q.arrows[a].target;
      paths.push_back(std::move(p));
    }
  }

  Representation P;
  int nedges = static_cast<int>(Q.arrows_from.size());
  P.dims.assign(nedges, 0);
  std::vector<int> index_of(paths.size());
  for (size_t i = 0; i < paths.size(); ++i) index_of[i] = P.dims[paths[i].end]++;
  P.maps.resize(Q.arrows.size());
  for (size_t a = 0; a < Q.arrows.size(); ++a)
    P.maps[a] = zero_matrix(P.dims[Q.arrows[a].target], P.dims[Q.arrows[a].source]);
  for (size_t i = 0; i < paths.size(); ++i) {
    for (size_t j = 0; j < paths.size(); ++j) {
      // j extends i by one arrow?
      if (paths[j].arrows.size() != paths[i].arrows.size() + 1) continue;
      if (!std::equal(paths[i].arrows.begin(), paths[i].arrows.end(),
                      paths[j].arrows.begin()))
        continue;
      ArrowIx a = paths[j].arrows.back();
      P.maps[a][index_of[j]][index_of[i]] = Rat(1);
    }
  }
  check_relations(Q, P);
  return P;
}

long hom_dim(const QuiverWithPotential& Q, const Representation& M,
             const Representation& N) {
  int nedges = static_cast<int>(M.dims.size());
  // unknowns: f_v[r][c] with r < N.dims[v], c < M.dims[v]
  std::vector<int> offset(nedges + 1, 0);
  for (int v = 0; v < nedges; ++v)
    offset[v + 1] = offset[v] + N.dims[v] * M.dims[v];
  auto var = [&](int v, int r, int c) { return offset[v] + r * M.dims[v] + c; };

  SparseSystem sys;
  sys.cols = offset[nedges];
  for (size_t a = 0; a < Q.arrows.size(); ++a) {
    int s = Q.arrows[a].source, t = Q.arrows[a].target;
    // f_t M(a) = N(a) f_s, entrywise (r < N.dims[t], c < M.dims[s])
    for (int r = 0; r < N.dims[t]; ++r) {
      for (int c = 0; c < M.dims[s]; ++c) {
        std::vector<std::pair<int, Rat>> row;
        for (int k = 0; k < M.dims[t]; ++k)
          if (!M.maps[a][k][c].is_zero())
            row.emplace_back(var(t, r, k), M.maps[a][k][c]);
        for (int k = 0; k < N.dims[s]; ++k)
          if (!N.maps[a][r][k].is_zero())
            row.emplace_back(var(s, k, c), -N.maps[a][r][k]);
        sys.add_row(std::move(row));
      }
    }
  }
  return sys.nullity();
}

Presentation projective_presentation(const QuiverWithPotential& Q,
                                     const Representation& M) {
  int nedges = static_cast<int>(M.dims.size());

  // Radical at v: span of the images of all arrow actions into v.
  // A basis of top(M)_v lifts to generators.
  Presentation out;
  Representation p0;
  p0.dims.assign(nedges, 0);
  p0.maps.resize(Q.arrows.size());

  struct Generator {
    EdgeIx v;
    Vec lift;  // in M_v
  };
  std::vector<Generator> gens;
  for (int v = 0; v < nedges; ++v) {
    if (M.dims[v] == 0) continue;
    Mat rad;  // rows spanning rad_v, as row vectors
    for (size_t a = 0; a < Q.arrows.size(); ++a) {
      if (Q.arrows[a].target != v) continue;
      for (int c = 0; c < M.dims[Q.arrows[a].source]; ++c) {
        Vec col(M.dims[v]);
        for (int r = 0; r < M.dims[v]; ++r) col[r] = M.maps[a][r][c];
        rad.push_back(std::move(col));
      }
    }
    int rk = rad.empty() ? 0 : mat_rank(rad);
    int topdim = M.dims[v] - rk;
    if (topdim == 0) continue;
    out.top[v] = topdim;
    // Greedily extend rad by standard basis vectors.
    Mat span = rad;
    int have = rk;
    for (int i = 0; i < M.dims[v] && have - rk < topdim; ++i) {
      Vec e(M.dims[v]);
      e[i] = Rat(1);
      Mat tryspan = span;
      tryspan.push_back(e);
      if (mat_rank(tryspan) > have) {
        span.push_back(e);
        ++have;
        gens.push_back({v, e});
      }
    }
  }

  // Assemble P0 = direct sum of P_{gen.v} and the cover map Phi.
  std::map<EdgeIx, Representation> projs;
  for (const auto& g : gens)
    if (!projs.count(g.v)) projs[g.v] = projective(Q, g.v);

  struct Block {
    const Representation* P;
    Vec lift;      // generator image in M_{v}
    EdgeIx v;
    std::vector<int> offset_at;  // per-vertex offset of this block in P0
  };
  std::vector<Block> blocks;
  for (const auto& g : gens) blocks.push_back({&projs[g.v], g.lift, g.v, {}});
  for (auto& b : blocks) {
    b.offset_at.assign(nedges, 0);
    for (int v = 0; v < nedges; ++v) {
      b.offset_at[v] = p0.dims[v];
      p0.dims[v] += b.P->dims[v];
    }
  }
  for (size_t a = 0; a < Q.arrows.size(); ++a) {
    p0.maps[a] = zero_matrix(p0.dims[Q.arrows[a].target], p0.dims[Q.arrows[a].source]);
    for (const auto& b : blocks) {
      const Mat& m = b.P->maps[a];
      int ro = b.offset_at[Q.arrows[a].target], co = b.offset_at[Q.arrows[a].source];
      for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j)
          if (!m[i][j].is_zero()) p0.maps[a][ro + i][co + j] = m[i][j];
    }
  }

  // Phi on each vertex: image of each P-basis vector of each block. Compute
  // by propagating the generator lift along arrow actions, in path-length
  // order; every projective basis vector is reached exactly once.
  std::vector<Mat> phi(nedges);
  for (int v = 0; v < nedges; ++v) phi[v] = zero_matrix(M.dims[v], p0.dims[v]);
  for (const auto& b : blocks) {
    // column vectors of the block, discovered from the generator.
    std::vector<std::vector<Vec>> val(nedges);
    std::vector<std::vector<bool>> known(nedges);
    for (int v = 0; v < nedges; ++v) {
      val[v].assign(b.P->dims[v], Vec());
      known[v].assign(b.P->dims[v], false);
    }
    // basis index 0 of vertex b.v is the generator e_v (path of length 0)
    val[b.v][0] = b.lift;
    known[b.v][0] = true;
    // propagate: repeat until stable (path algebra is finite here)
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t a = 0; a < Q.arrows.size(); ++a) {
        int s = Q.arrows[a].source, t = Q.arrows[a].target;
        for (int j = 0; j < b.P->dims[s]; ++j) {
          if (!known[s][j]) continue;
          for (int i = 0; i < b.P->dims[t]; ++i) {
            if (b.P->maps[a][i][j].is_zero() || known[t][i]) continue;
            Vec image = mat_apply(M.maps[a], val[s][j]);
            for (auto& x : image) x = x * b.P->maps[a][i][j];
            val[t][i] = std::move(image);
            known[t][i] = true;
            changed = true;
          }
        }
      }
    }
    for (int v = 0; v < nedges; ++v)
      for (int j = 0; j < b.P->dims[v]; ++j) {
        if (!known[v][j])
          throw InternalFault("cover-propagation",
                              "projective basis vector never reached");
        for (int i = 0; i < M.dims[v]; ++i)
          phi[v][i][b.offset_at[v] + j] = val[v][j][i];
      }
  }

  // Surjectivity check and kernel bases.
  Representation omega;
  omega.dims.assign(nedges, 0);
  omega.maps.resize(Q.arrows.size());
  std::vector<std::vector<Vec>> ker(nedges);
  for (int v = 0; v < nedges; ++v) {
    if (mat_rank(phi[v]) != M.dims[v])
      throw InternalFault("cover-not-surjective",
                          "projective cover fails to surject");
    ker[v] = null_space(phi[v], p0.dims[v]);
    omega.dims[v] = static_cast<int>(ker[v].size());
  }
  for (size_t a = 0; a < Q.arrows.size(); ++a) {
    int s = Q.arrows[a].source, t = Q.arrows[a].target;
    omega.maps[a] = zero_matrix(omega.dims[t], omega.dims[s]);
    if (omega.dims[s] == 0 || p0.dims[t] == 0) continue;
    // express P0(a) * ker_s[j] in the basis ker_t
    Mat kt(p0.dims[t], Vec(omega.dims[t]));
    for (int j = 0; j < omega.dims[t]; ++j)
      for (int i = 0; i < p0.dims[t]; ++i) kt[i][j] = ker[t][j][i];
    for (int j = 0; j < omega.dims[s]; ++j) {
      Vec img = mat_apply(p0.maps[a], ker[s][j]);
      Vec coeff = solve_exact(kt, img);
      for (int i = 0; i < omega.dims[t]; ++i) omega.maps[a][i][j] = coeff[i];
    }
  }
  check_relations(Q, omega);

  out.p0 = std::move(p0);
  out.omega = std::move(omega);
  return out;
}

long ext1_dim_oracle(const QuiverWithPotential& Q, const Representation& M,
                     const Representation& N) {
  Presentation pr = projective_presentation(Q, M);
  return hom_dim(Q, pr.omega, N) - hom_dim(Q, pr.p0, N) + hom_dim(Q, M, N);
}

OracleCache::OracleCache(const Surface& S) : S_(S) {}

const OracleCache::Entry& OracleCache::entry(const StringWord& w) {
  std::string key = print_word(S_.T, canonicalize(S_.T, w));
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  Entry e;
  e.rep = string_to_representation(S_.Q, w);
  Presentation pr = projective_presentation(S_.Q, e.rep);
  e.omega = std::move(pr.omega);
  e.top = std::move(pr.top);
  return entries_.emplace(key, std::move(e)).first->second;
}

long OracleCache::hom_projective(EdgeIx v, const std::string& nkey,
                                 const Representation& N) {
  auto it = hom_proj_.find({v, nkey});
  if (it != hom_proj_.end()) return it->second;
  auto pit = projectives_.find(v);
  if (pit == projectives_.end())
    pit = projectives_.emplace(v, projective(S_.Q, v)).first;
  long h = hom_dim(S_.Q, pit->second, N);
  hom_proj_[{v, nkey}] = h;
  return h;
}

long OracleCache::ext1(const StringWord& M, const StringWord& N) {
  const Entry& em = entry(M);
  const Entry& en = entry(N);
  std::string nkey = print_word(S_.T, canonicalize(S_.T, N));
  long hp0 = 0;  // Hom is additive over the direct sum P0 = + P_v^top
  for (const auto& [v, mult] : em.top) hp0 += mult * hom_projective(v, nkey, en.rep);
  return hom_dim(S_.Q, em.omega, en.rep) - hp0 + hom_dim(S_.Q, em.rep, en.rep);
}

long OracleCache::hom(const StringWord& M, const StringWord& N) {
  return hom_dim(S_.Q, entry(M).rep, entry(N).rep);
}

}  // namespace arcext
