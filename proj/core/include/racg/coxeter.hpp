#pragma once

#include <optional>
#include <string>
#include <vector>

#include "racg/simplicial.hpp"

namespace racg {

// A group element as a word in generator indices.  Elements in normal form
// are ShortLex-minimal reduced words under the nerve's vertex order.
using Word = std::vector<int>;

std::string word_str(const FlagComplex& nerve, const Word& w);  // "a.b.a", "e" for identity

// Right-angled Coxeter group W_L presented by a flag complex nerve:
// generators are the vertices, (st)^2 = 1 exactly for edges.
class Racg {
 public:
  explicit Racg(FlagComplex nerve);

  const FlagComplex& nerve() const { return nerve_; }
  int num_generators() const { return nerve_.size(); }
  bool commute(int s, int t) const { return nerve_.adjacent(s, t); }
  const Vertex& gen_label(int s) const { return nerve_.label(s); }
  int gen_index(const Vertex& v) const;  // throws on unknown generator

  // Confluent rewriting to the ShortLex normal form: delete adjacent equal
  // letters, sort adjacent commuting letters, iterate to fixpoint.
  Word normal_form(const Word& w) const;
  Word normal_form_labels(const std::vector<Vertex>& letters) const;

  int length(const Word& w) const { return static_cast<int>(normal_form(w).size()); }
  Word mult(const Word& a, const Word& b) const;
  Word inverse(const Word& a) const;  // letters reversed (generators are involutions)
  Word conjugate(const Word& g, const Word& x) const;  // g x g^-1

  // All elements with l(w) <= N, ordered by (length, lex).
  std::vector<Word> ball(int N) const;

  // Elements of the finite special subgroup W_sigma (sigma a simplex),
  // ordered by (length, lex).
  std::vector<Word> special_subgroup_elements(const Simplex& sigma) const;

  // Abelianization sign vector: parity of each generator's letter count.
  std::vector<char> abelianization(const Word& w) const;

  // r conjugate to a fundamental generator; tested by length descent.
  bool is_reflection(const Word& r) const;

  // +1 iff l(r w) > l(w), i.e. the chamber wK lies in the half-space of the
  // wall of r that contains the fundamental chamber.
  int halfspace_side(const Word& r, const Word& w) const;

 private:
  FlagComplex nerve_;
};

// --- spherical cosets -------------------------------------------------------

struct SphericalCoset {
  Word rep;       // unique shortest element of w W_sigma
  Simplex sigma;  // simplex of the nerve (possibly empty)

  bool operator<(const SphericalCoset& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return rep < o.rep;
  }
  bool operator==(const SphericalCoset&) const = default;
};

// All spherical cosets whose minimal representative has length <= N.
std::vector<SphericalCoset> spherical_cosets(const Racg& W, int N);

// Inclusion order: w1 W_s1 <= w2 W_s2 iff s1 <= s2 and w2^-1 w1 in W_s2.
bool coset_leq(const Racg& W, const SphericalCoset& a, const SphericalCoset& b);

// --- convex chamber unions ----------------------------------------------------

// Verifies that a finite chamber set is convex (gallery-connected and lying
// on one side of each of its boundary walls).  Returns a violated wall's
// reflection when not convex.
std::optional<Word> convexity_violation(const Racg& W, const std::vector<Word>& chambers);

// Boundary faces of a chamber union: pairs (w, s) with w in C, ws not in C.
std::vector<std::pair<Word, int>> boundary_faces(const Racg& W, const std::vector<Word>& chambers);

// Supp(C): reflections whose walls support the convex union C.
std::vector<Word> supporting_walls(const Racg& W, const std::vector<Word>& chambers);

struct NerveOfUnion {
  std::vector<Word> supp;  // reflection normal forms, sorted
  FlagComplex nerve;       // L(C): vertex per reflection, edges where (r1 r2)^2 = 1
};

// L(C) for a convex union of chambers; throws PreconditionError with a
// witnessing wall when C is not convex.
NerveOfUnion nerve_of_convex_union(const Racg& W, const std::vector<Word>& chambers);

// F_N = first N elements of 1, s1, s1 s2, s1 s2 s1, ... (requires {s1,s2}
// to be a non-edge of the nerve).
std::vector<Word> iterated_double_domain(const Racg& W, const Vertex& s1, const Vertex& s2, int N);

}  // namespace racg
