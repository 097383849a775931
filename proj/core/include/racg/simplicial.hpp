#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "racg/errors.hpp"
#include "racg/rational.hpp"

namespace racg {

using Vertex = std::string;

// A simplex as a sorted list of vertex indices into the owning complex.
// The empty vector is the empty simplex (dimension -1).
using Simplex = std::vector<int>;

// f-vector with counts[k] = f_{k-1}, so counts[0] = f_{-1} = 1 always.
struct FVector {
  std::vector<Int> counts;

  int dim() const { return static_cast<int>(counts.size()) - 2; }
  Int f(int k) const {  // number of k-simplices, k >= -1
    int idx = k + 1;
    if (idx < 0 || idx >= static_cast<int>(counts.size())) return 0;
    return counts[idx];
  }
  bool operator==(const FVector&) const = default;
  std::string str() const;
};

// Finite flag complex, stored by its 1-skeleton.  Simplices are exactly the
// cliques of the skeleton; they are enumerated on demand and memoized.
// Instances are immutable after construction.
class FlagComplex {
 public:
  FlagComplex();
  FlagComplex(std::vector<Vertex> labels, const std::vector<std::pair<Vertex, Vertex>>& edges);

  static FlagComplex from_index_edges(std::vector<Vertex> labels,
                                      const std::vector<std::pair<int, int>>& edges);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Vertex>& labels() const { return labels_; }
  const Vertex& label(int i) const { return labels_[i]; }
  int index_of(const Vertex& v) const;  // -1 if absent
  bool has_vertex(const Vertex& v) const { return index_of(v) >= 0; }

  bool adjacent(int i, int j) const { return adj_[i][j] != 0; }
  const std::vector<int>& neighbors(int i) const { return nbrs_[i]; }
  std::vector<std::pair<int, int>> edge_list() const;
  std::vector<std::pair<Vertex, Vertex>> labeled_edges() const;
  int num_edges() const;

  // cliques()[d] lists the d-dimensional simplices in lexicographic order,
  // d = 0 .. dim().  The empty simplex is implicit.
  const std::vector<std::vector<Simplex>>& cliques() const;

  // All of S(L) including the empty simplex, ordered by (dim, lex).
  std::vector<Simplex> all_simplices_with_empty() const;

  int dim() const;
  FVector f_vector() const;

  bool is_clique(const Simplex& s) const;
  Simplex simplex_from_labels(const std::vector<Vertex>& vs) const;  // throws if unknown/not a simplex
  std::vector<Vertex> labels_of(const Simplex& s) const;

  bool same_labeled_graph(const FlagComplex& other) const;

 private:
  std::vector<Vertex> labels_;
  std::map<Vertex, int> index_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nbrs_;

  struct CliqueCache {
    std::once_flag once;
    std::vector<std::vector<Simplex>> by_dim;
  };
  std::shared_ptr<CliqueCache> cache_;
};

// General finite simplicial complex: the full (downward closed) set of
// nonempty simplices.  Used where flagness is not assumed ([S-T] duals,
// links of cubical cells, sheets of the local model).
class SimplicialComplex {
 public:
  SimplicialComplex();
  static SimplicialComplex from_maximal(std::vector<Vertex> labels,
                                        const std::vector<std::vector<Vertex>>& maximal);
  static SimplicialComplex from_flag(const FlagComplex& L);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<Vertex>& labels() const { return labels_; }
  const Vertex& label(int i) const { return labels_[i]; }
  int index_of(const Vertex& v) const;

  bool contains(const Simplex& s) const;
  const std::set<Simplex>& simplices() const { return simplices_; }  // all nonempty faces
  std::vector<Simplex> simplices_of_dim(int d) const;
  std::vector<Simplex> maximal_simplices() const;

  int dim() const;
  FVector f_vector() const;
  bool is_pure() const;

  SimplicialComplex link(const Simplex& tau) const;
  SimplicialComplex full_subcomplex(const std::vector<Vertex>& keep) const;

  // 1-skeleton as a graph (vertices + edges of this complex).
  FlagComplex skeleton_graph() const;

  bool is_subcomplex_of(const SimplicialComplex& K) const;  // by labels

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && simplices_ == o.simplices_;
  }

 private:
  std::vector<Vertex> labels_;
  std::map<Vertex, int> index_;
  std::set<Simplex> simplices_;

  void close_downward();
  SimplicialComplex prune_isolated() const;
  friend SimplicialComplex simplicial_union(const std::vector<SimplicialComplex>& parts);
};

// --- operations ----------------------------------------------------------

bool is_flag(const SimplicialComplex& K);

FlagComplex link(const FlagComplex& L, const Simplex& tau);
FlagComplex link_of_vertex(const FlagComplex& L, const Vertex& v);

FlagComplex full_subcomplex(const FlagComplex& L, const std::vector<Vertex>& keep);
FlagComplex minus(const FlagComplex& L, const std::vector<Vertex>& removed);

// Join with deterministic relabeling: on label collision the left side gets
// suffix "#0" and the right side "#1".
FlagComplex join(const FlagComplex& L1, const FlagComplex& L2);
FlagComplex cone(const FlagComplex& L, const Vertex& apex = "c");
FlagComplex suspension(const FlagComplex& L);
FlagComplex disjoint_union(const FlagComplex& L1, const FlagComplex& L2);

// d_v L: two copies of L-v glued along the link L_v.  Copy i suffixes the
// labels of (L-v) - L_v with "#i"; the shared link keeps its labels.
FlagComplex double_along_vertex(const FlagComplex& L, const Vertex& v);

int valence(const FlagComplex& S, const Vertex& v);

// A 4-circuit as its 4 vertices in cyclic order, canonicalized to start at
// the least vertex index with the smaller second entry.
struct Circuit4 {
  std::array<int, 4> cyc;
  bool operator<(const Circuit4& o) const { return cyc < o.cyc; }
  bool operator==(const Circuit4&) const = default;
};

std::vector<Circuit4> all_4_circuits(const FlagComplex& S);

// Empty 4-circuits: 4-cycles of the skeleton that are neither the link of a
// vertex nor the boundary of two adjacent triangles.
std::vector<Circuit4> empty_circuits_4(const FlagComplex& S);

SimplicialComplex simplicial_union(const std::vector<SimplicialComplex>& parts);
SimplicialComplex simplicial_intersection(const SimplicialComplex& A, const SimplicialComplex& B);

// --- isomorphism (iso.cpp) ------------------------------------------------

// Canonical form of the underlying graph: refinement with backtracking.
// Two flag complexes are isomorphic iff their canonical forms coincide.
std::string canonical_form(const FlagComplex& L);
bool isomorphic(const FlagComplex& A, const FlagComplex& B);
bool isomorphic(const SimplicialComplex& A, const SimplicialComplex& B);

// --- small constructors used throughout ----------------------------------

FlagComplex empty_complex();
FlagComplex simplex_complex(int k);                  // full k-simplex, vertices "s0..sk"
FlagComplex points_complex(int k);                   // k isolated points "p0..p{k-1}"
FlagComplex mgon(int m);                             // m-gon, m >= 4 enforced by callers wanting flag
FlagComplex complete_bipartite(int m, int n);        // K_{m,n}
FlagComplex octahedron_boundary();                   // 3-fold join of S^0
FlagComplex icosahedron_boundary();
FlagComplex path_complex(int n);                     // path on n vertices

}  // namespace racg
