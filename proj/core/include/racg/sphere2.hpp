#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "racg/simplicial.hpp"

namespace racg {

// Preconditions of the certifier: a genuine flag triangulation of S^2.
struct SphereCheck {
  bool flag = false;
  bool pure_dim2 = false;
  bool edges_in_two_triangles = false;
  bool connected = false;
  bool euler_two = false;
  bool ghs2 = false;

  bool ok() const {
    return flag && pure_dim2 && edges_in_two_triangles && connected && euler_two && ghs2;
  }
  std::string failure() const;
};

SphereCheck check_flag_two_sphere(const FlagComplex& S);

struct DualCellReport {
  bool intersections_are_cells = false;
  bool no_empty_3_circuits = false;
  bool four_circuits_bounded = false;
  bool no_m5_configuration = false;

  bool all_ok() const {
    return intersections_are_cells && no_empty_3_circuits && four_circuits_bounded &&
           no_m5_configuration;
  }
  std::string str() const;
};

// Recursive vanishing certificate for a flag 2-sphere.
struct Certificate {
  enum class Kind { SuspensionOf4or5Gon, SquareDecomposition, AndreevBase };

  Kind kind = Kind::AndreevBase;
  FlagComplex complex;
  int m = 0;                     // suspension leaf: the m of the m-gon (4 or 5)
  std::vector<Vertex> circuit;   // square decomposition: the empty 4-circuit, cyclic
  std::vector<Vertex> valence4;  // andreev leaf: T
  DualCellReport checks;         // andreev leaf
  std::vector<std::shared_ptr<Certificate>> children;

  int node_count() const;
  int leaf_count() const;
  std::string kind_str() const;
};

// Produces a certificate that all l2-Betti numbers of S vanish, following
// the decomposition order: suspension leaf, then empty 4-circuit splits,
// then the Andreev base case on [S-T].
Certificate certify(const FlagComplex& S);

// If S is the suspension of an m-gon, returns (m, the m-gon factor).
std::optional<std::pair<int, FlagComplex>> as_suspension_of_mgon(const FlagComplex& S);

// Cyclic order of the link of a valence-4 vertex.
std::vector<Vertex> link_cycle(const FlagComplex& S, const Vertex& v);

// Splits S along an empty 4-circuit into the two capped spheres (S1, S2);
// cap apexes are labeled "cap0" / "cap1" (uniquified).
std::pair<FlagComplex, FlagComplex> split_along_circuit(const FlagComplex& S,
                                                        const Circuit4& circuit);

// Glue S1 - s1 and S2 - s2 along their 4-gon boundaries; matching maps the
// link cycle of s1 onto the link cycle of s2 and must respect adjacency.
FlagComplex square_compose(const FlagComplex& S1, const Vertex& s1, const FlagComplex& S2,
                           const Vertex& s2, const std::vector<std::pair<Vertex, Vertex>>& matching);

// The combinatorial Andreev preconditions on the cellulation [S-T].
// Preconditions: no empty 4-circuits, not a suspension of a 4/5-gon,
// T = the valence-4 vertex set (pairwise non-adjacent).
DualCellReport dual_cell_check(const FlagComplex& S, const std::vector<Vertex>& T);

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& why) {
    ok = false;
    failures.push_back(why);
  }
};

// Independent re-verification of every node's side conditions.
ValidationReport verify_certificate(const Certificate& c);

}  // namespace racg
