#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "racg/rational.hpp"
#include "racg/simplicial.hpp"

namespace racg {

// Graded exact-rational values with an explicit unknown marker per degree.
// Ordinary Betti numbers are integers; the l2 module reuses this type for
// its rational values.
struct BettiVector {
  std::vector<Rat> values;
  std::vector<bool> known;

  static BettiVector zeros(int max_degree);
  static BettiVector all_unknown(int max_degree);

  int max_degree() const { return static_cast<int>(values.size()) - 1; }
  bool is_known(int d) const { return d >= 0 && d <= max_degree() && known[d]; }
  bool fully_known() const;
  Rat at(int d) const;  // 0 outside range; throws if unknown
  void set(int d, const Rat& v);
  int unknown_count() const;

  // compares known values degree-for-degree, degrees outside range count 0
  bool same_values(const BettiVector& o) const;
  std::string str() const;
};

BettiVector sphere_betti(int m);  // ordinary homology of S^m (m = -1: empty)

// Sparse integer/rational matrix as rows of (column, value); used for
// boundary operators.
struct SparseMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Rat>>> entries;  // per row, sorted by column

  void add(int r, int c, const Rat& v);
};

int rank(const SparseMat& m);

// Cellular chain complex with integer incidence numbers; asserts dd = 0 on
// construction.
class ChainComplex {
 public:
  static ChainComplex from_simplicial(const SimplicialComplex& K);
  // relative complex of the pair (K, A); A must be a subcomplex of K
  static ChainComplex relative(const SimplicialComplex& K, const SimplicialComplex& A);
  // generic builder (used for cubical complexes); boundaries[d] maps degree d
  // to degree d-1, for d = 1..top
  static ChainComplex from_matrices(std::vector<int> cells_per_degree,
                                    std::vector<SparseMat> boundaries);

  int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
  int cells(int d) const { return (d >= 0 && d <= top_dim()) ? cells_[d] : 0; }
  const SparseMat& boundary(int d) const { return boundaries_[d]; }
  Rat euler_characteristic() const;

 private:
  std::vector<int> cells_;
  std::vector<SparseMat> boundaries_;  // boundaries_[0] unused
  void check_dd_zero() const;
};

BettiVector betti(const ChainComplex& C);
BettiVector betti(const SimplicialComplex& K);
BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& A);

// Generalized homology sphere / disk recognition over Q.
bool is_GHS(const SimplicialComplex& S, int n);
bool is_GHD(const SimplicialComplex& D, const SimplicialComplex& boundary, int n);

// Pure n-complex where every (n-1)-simplex lies in exactly two n-simplices.
// Throws PreconditionError on a non-pure complex.
bool is_pseudomanifold(const SimplicialComplex& L);

// Links of codimension <= m simplices are generalized homology spheres of the
// complementary dimension; m = 1 coincides with the pseudomanifold test.
bool spherical_links_codim(const SimplicialComplex& L, int m);

struct BallReport {
  bool connected = false;
  bool point_homology = false;  // trivial reduced homology
  bool collapsed = false;       // greedy free-face collapse reached one vertex
  bool is_ball() const { return connected && point_homology; }
  std::string str() const;
};

// Optional hint orders free-face collapses (lower key first); keys are
// computed from vertex labels so builders can encode e.g. n(lambda).
using CollapsePriority = std::function<long long(const std::vector<Vertex>&)>;

BallReport homology_ball_report(const SimplicialComplex& K,
                                const CollapsePriority& priority = nullptr);

}  // namespace racg
