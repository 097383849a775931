#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "racg/coxeter.hpp"
#include "racg/davis.hpp"
#include "racg/homology.hpp"
#include "racg/simplicial.hpp"

namespace racg {

// lambda : {1..n} -> {-1, 0, +1}
struct SignedFunction {
  std::vector<int> lambda;

  int n() const { return static_cast<int>(lambda.size()); }
  int zeros() const;
  int negatives() const;
};

// O^{n-1}: boundary of the n-octahedron on vertices "+e1".."-en"; the
// simplex of a nowhere-zero lambda is spanned by the lambda_i e_i.
FlagComplex octahedron_model(int n);

// Number of (n-1)-dimensional quadrants (z = 1), counted by enumeration.
long long quadrant_census(int n);

// B(l): union of the (n-1)-simplices with n(lambda) <= l.
SimplicialComplex ball_B(int n, int l);

// boundary of B(l): the (n-2)-simplices with n(lambda) = l.
SimplicialComplex boundary_B(int n, int l);

// Sheet P(l): cone (apex "0") over the boundary of B(l).
SimplicialComplex sheet(int n, int l);

// Collapse hint for Lemma-14.6.2-style collapses: prefer simplices with
// many negative vertices.
CollapsePriority octahedron_collapse_priority();

// Distinct sheet levels l whose sheet P(l) contains the open quadrant of
// lambda; a j-fold intersection point lies in exactly j sheets.
std::set<int> sheet_levels_containing(const SignedFunction& lambda);

// --- doubling fundamental domain -------------------------------------------

struct ChamberDomain {
  std::vector<Word> chambers;             // 2^p chamber words, normal forms
  std::vector<int> doubling_order;        // generator indices s_1..s_p
  std::vector<size_t> sizes_per_step;     // |D(0)|, ..., |D(p)|
  bool bijection_onto_quotient = false;   // reps map bijectively onto (Z_2)^p
  bool faces_paired = false;              // boundary faces identified in pairs
};

// D(p) built by doubling the fundamental chamber along each generator wall
// in vertex order; fundamental domain for the commutator subgroup.
ChamberDomain doubling_domain(const Racg& W, int max_generators = 16);

// --- standard hypersurface classes -------------------------------------------

struct BoundaryFaceInfo {
  Word chamber;  // w in D
  int gen;       // s with ws outside D
  Word wall;     // reflection w s w^-1
  int cls = -1;  // hypersurface class
  int parity = +1;  // sign relative to the class seed under coorientation
};

struct FaceClasses {
  std::vector<BoundaryFaceInfo> faces;
  int num_classes = 0;
  bool coorientable = true;
};

// Classes are the commutator-orbit components of the boundary walls: faces
// on one wall share a class, and gamma-paired faces share a class with
// opposite coorientation parity.
FaceClasses hypersurface_classes(const Racg& W, const ChamberDomain& D);

struct OrientationAssignment {
  std::vector<int> signs;  // one of +1/-1 per class
};

struct DplusResult {
  bool is_disk = false;
  bool homology_level_only = false;  // n >= 4: disk verdict is homology + collapse only
  BallReport plus_report;
  BallReport minus_report;
  bool intersection_sphere = false;
  SimplicialComplex dplus;
  SimplicialComplex dminus;
  std::string statement;
};

// Prop.-14.7.3 criterion: with the chosen coorientations, D+ and D- must be
// disks meeting in a homology (n-2)-sphere; then the amalgamated hypersurface
// is the fiber of a fibration over the circle.
DplusResult dplus_check(const Racg& W, const ChamberDomain& D, const FaceClasses& classes,
                        const OrientationAssignment& o);

// First orientation assignment (deterministic order) passing dplus_check.
std::optional<OrientationAssignment> search_orientations(const Racg& W, const ChamberDomain& D,
                                                         int max_classes = 20);

}  // namespace racg
