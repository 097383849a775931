#pragma once

#include <memory>
#include <string>
#include <vector>

#include "racg/homology.hpp"
#include "racg/rational.hpp"
#include "racg/simplicial.hpp"

namespace racg {

// Expression tree over the closed-form l2-Betti calculus.  Opaque leaves
// stand for concrete complexes the recognizer could not decompose; they
// carry their f-vector and whatever degrees the vanishing rules pin down.
class L2Expr {
 public:
  enum class Kind {
    Empty,
    Simplex,
    Points,
    MGon,
    Cone,
    Susp,
    Join,
    DisjointUnion,
    DoubleV,
    Opaque,
  };

  static L2Expr empty();
  static L2Expr simplex(int k);  // k >= 0
  static L2Expr points(int k);   // canonicalizes: 0 -> empty, 1 -> simplex(0)
  static L2Expr m_gon(int m);    // m >= 4 (flagness)
  static L2Expr cone(L2Expr e);
  static L2Expr susp(L2Expr e);
  static L2Expr join(L2Expr a, L2Expr b);
  static L2Expr disjoint_union(L2Expr a, L2Expr b);
  static L2Expr double_v(L2Expr e, std::string vertex_label = "");
  static L2Expr opaque(std::string name, FVector f, BettiVector partial, bool simplex_flag);

  Kind kind() const { return kind_; }
  int param() const { return param_; }  // k of simplex/points, m of m-gon
  const L2Expr& child(int i) const { return *children_.at(i); }
  int num_children() const { return static_cast<int>(children_.size()); }
  const std::string& name() const { return name_; }

  int dim() const;           // dimension of the represented complex
  Rat kappa_value() const;   // kappa, computable for every node kind
  FVector f_vector() const;  // throws for DoubleV (not determined by the tree)
  bool is_simplex_complex() const;
  bool contains_opaque() const;
  const BettiVector& opaque_partial() const { return partial_; }

  std::string str() const;  // s-expression rendering

 private:
  Kind kind_ = Kind::Empty;
  int param_ = 0;
  std::vector<std::shared_ptr<L2Expr>> children_;
  std::string name_;       // DoubleV vertex label or Opaque name
  FVector fvec_;           // Opaque only
  BettiVector partial_;    // Opaque only
  bool simplex_flag_ = false;
};

// Parse the CLI s-expression syntax, e.g. "(join (points 3) (points 3))".
L2Expr parse_l2_expr(const std::string& text);

struct L2Result {
  BettiVector betti;
  std::vector<std::string> provenance;  // one tag per degree

  std::string str() const;
};

// Applies the calculus recursively; degrees no rule determines are unknown,
// then a single unknown degree per node is solved from kappa (Atiyah).
L2Result l2_betti(const L2Expr& e);

// recognize + evaluate, cross-checked against the vanishing rules of the
// concrete complex.
L2Result l2_betti_of_complex(const FlagComplex& L);

struct AtiyahReport {
  Rat alternating_sum;
  Rat kappa_value;
  bool consistent() const { return alternating_sum == kappa_value; }
  std::string str() const;
};

AtiyahReport atiyah_check(const L2Expr& e, const L2Result& result);
AtiyahReport atiyah_check(const FlagComplex& L);

// Maps a concrete flag complex into the calculus: simplex, k points, m-gon,
// cone, then join factors split by the connected components of the
// complement graph.  Unrecognized irreducible pieces become Opaque leaves.
L2Expr recognize(const FlagComplex& L);

// beta_0 = 0 for nonempty non-simplices; beta_{dim+1} = 0 for pseudomanifolds.
// Returns a partial vector over degrees 0..dim+1.
BettiVector vanishing_rules(const FlagComplex& L);

struct PlanarResult {
  L2Result absolute;  // beta_1 = alpha, 0 elsewhere
  L2Result relative;  // beta_2 = g + alpha, 0 elsewhere
  Rat alpha;
};

// Flag triangulation of a 2-sphere with g+1 holes with m-gon boundaries.
PlanarResult planar_betti(int genus_holes_g, const std::vector<int>& boundary_gons);

}  // namespace racg
