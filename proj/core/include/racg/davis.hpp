#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/homology.hpp"
#include "racg/rational.hpp"
#include "racg/simplicial.hpp"

namespace racg {

// kappa(L) = sum_{k=-1}^{dim L} (-1/2)^{k+1} f_k(L); equals the orbihedral
// Euler characteristic of Sigma_L / W_L.
Rat kappa(const FlagComplex& L);
Rat kappa(const FVector& f);

struct CubeCell {
  std::string key;                            // unique within its dimension
  std::vector<std::string> vertices;          // sorted ids of its 0-cells
  std::vector<std::pair<int, int>> boundary;  // (index in dimension-1 layer, incidence sign)
};

// Finite regular cubical complex (a Davis ball or a commutator cover).
class CubicalComplex {
 public:
  int top_dim() const { return static_cast<int>(cells_.size()) - 1; }
  const std::vector<CubeCell>& cells(int d) const;
  int num_cells(int d) const;
  long long total_cells() const;

  Rat euler_characteristic() const;
  ChainComplex chain_complex() const;
  BettiVector homology() const;

  // Link of a vertex: one k-simplex per (k+1)-cell containing it, with the
  // link vertex set given by the edges at the vertex.
  SimplicialComplex vertex_link(const std::string& vertex_id) const;
  std::vector<std::string> vertex_ids() const;

  // Gromov's criterion: nonpositively curved iff every vertex link is flag.
  bool npc_check() const;

  // cell layers are appended by builders
  int add_cell(int d, CubeCell cell);
  const CubeCell& cell(int d, int i) const { return cells_.at(d).at(i); }
  int index_of(int d, const std::string& key) const;

 private:
  std::vector<std::vector<CubeCell>> cells_;
  std::vector<std::map<std::string, int>> index_;
};

// Finite ball of the Davis complex: cells are spherical cosets (w, sigma)
// all of whose vertices lie in ball(N); vertex ids are element words.
CubicalComplex davis_ball(const Racg& W, int N);

// P_L inside [-1,1]^{S_0(L)}: cells are sign vectors with free coordinates
// spanning a simplex of L.  Guarded: throws ResourceError when the vertex
// count 2^p exceeds the limit.
CubicalComplex commutator_cover(const FlagComplex& L, int max_vertices_log2 = 22);

struct ChiOrbReport {
  Rat chi_cover;       // chi(P_L)
  Rat scaled_kappa;    // 2^{|S_0(L)|} * kappa(L)
  bool consistent() const { return chi_cover == scaled_kappa; }
  std::string str() const;
};

ChiOrbReport chi_orb_consistency(const FlagComplex& L, int max_vertices_log2 = 22);

// Derived complex of a finite poset: chains are exactly the cliques of the
// comparability graph, so the result is a flag complex.
FlagComplex derived_complex(const std::vector<std::string>& names,
                            const std::function<bool(int, int)>& leq);

// Derived (simplicial) model of a Davis ball, for cross-checking the cubical
// cell counts at small radius.
FlagComplex davis_ball_derived(const Racg& W, int N);

}  // namespace racg
