#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "arcext/strings.hpp"
#include "arcext/surface.hpp"

namespace arcext {

// Exact rational on 64-bit parts; intermediate products run through 128-bit
// and genuine overflow raises an InternalFault rather than wrapping.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}
  Rat(long long n, long long d);

  bool is_zero() const { return num == 0; }
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const;
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row major

Mat zero_matrix(int rows, int cols);
Vec mat_apply(const Mat& m, const Vec& v);
int mat_rank(Mat m);
std::vector<Vec> null_space(const Mat& m, int cols);  // basis of {x : m x = 0}
// Solve m x = b exactly; InternalFault when inconsistent.
Vec solve_exact(const Mat& m, const Vec& b);

// Sparse homogeneous system solver: rows are (column, value) lists.
struct SparseSystem {
  int cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> rows;
  void add_row(std::vector<std::pair<int, Rat>> row);
  long nullity() const;
};

// A finite-dimensional representation of the bound quiver: one exact-rational
// matrix per arrow, relations composing to zero.
struct Representation {
  std::vector<int> dims;  // indexed by EdgeIx (0 on non-vertices)
  std::vector<Mat> maps;  // maps[a]: dims[target] x dims[source]
  int total_dim() const;
};

Representation string_to_representation(const QuiverWithPotential& Q,
                                        const StringWord& w);
Representation direct_sum(const QuiverWithPotential& Q,
                          const Representation& a, const Representation& b);
// Indecomposable projective at v: basis = relation-free paths from v.
Representation projective(const QuiverWithPotential& Q, EdgeIx v,
                          std::size_t path_bound = 10000);
void check_relations(const QuiverWithPotential& Q, const Representation& M);

long hom_dim(const QuiverWithPotential& Q, const Representation& M,
             const Representation& N);

// Projective cover data: P0 ->> M with first syzygy Omega = ker.
struct Presentation {
  Representation p0;
  Representation omega;
  std::map<EdgeIx, int> top;  // multiplicity of P_v in P0
};

Presentation projective_presentation(const QuiverWithPotential& Q,
                                     const Representation& M);

long ext1_dim_oracle(const QuiverWithPotential& Q, const Representation& M,
                     const Representation& N);

// Sweep-friendly wrapper caching presentations and per-vertex projectives.
class OracleCache {
 public:
  explicit OracleCache(const Surface& S);
  long ext1(const StringWord& M, const StringWord& N);
  long hom(const StringWord& M, const StringWord& N);

 private:
  struct Entry {
    Representation rep;
    Representation omega;
    std::map<EdgeIx, int> top;
  };
  const Entry& entry(const StringWord& w);
  long hom_projective(EdgeIx v, const std::string& nkey, const Representation& N);

  const Surface& S_;
  std::map<std::string, Entry> entries_;
  std::map<EdgeIx, Representation> projectives_;
  std::map<std::pair<EdgeIx, std::string>, long> hom_proj_;
};

}  // namespace arcext
