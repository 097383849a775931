#include "racg/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "racg/errors.hpp"

namespace racg {

std::string word_str(const FlagComplex& nerve, const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += nerve.label(w[i]);
  }
  return s;
}

Racg::Racg(FlagComplex nerve) : nerve_(std::move(nerve)) {}

int Racg::gen_index(const Vertex& v) const {
  int i = nerve_.index_of(v);
  if (i < 0) throw PreconditionError("unknown generator: " + v);
  return i;
}

Word Racg::normal_form(const Word& w) const {
  for (int x : w)
    if (x < 0 || x >= num_generators()) throw PreconditionError("letter is not a generator");
  Word v = w;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < v.size();) {
      if (v[i] == v[i + 1]) {
        v.erase(v.begin() + i, v.begin() + i + 2);
        changed = true;
        if (i > 0) --i;
      } else if (v[i] > v[i + 1] && commute(v[i], v[i + 1])) {
        std::swap(v[i], v[i + 1]);
        changed = true;
        ++i;
      } else {
        ++i;
      }
    }
  }
  return v;
}

Word Racg::normal_form_labels(const std::vector<Vertex>& letters) const {
  Word w;
  for (const auto& l : letters) w.push_back(gen_index(l));
  return normal_form(w);
}

Word Racg::mult(const Word& a, const Word& b) const {
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  return normal_form(ab);
}

Word Racg::inverse(const Word& a) const {
  Word r(a.rbegin(), a.rend());
  return normal_form(r);
}

Word Racg::conjugate(const Word& g, const Word& x) const { return mult(g, mult(x, inverse(g))); }

std::vector<Word> Racg::ball(int N) const {
  if (N < 0) throw PreconditionError("ball: N >= 0 required");
  std::set<Word> seen;
  std::vector<Word> frontier{Word{}};
  seen.insert(Word{});
  for (int len = 1; len <= N; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int s = 0; s < num_generators(); ++s) {
        Word ws = w;
        ws.push_back(s);
        ws = normal_form(ws);
        if (static_cast<int>(ws.size()) == len && seen.insert(ws).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<Word> Racg::special_subgroup_elements(const Simplex& sigma) const {
  if (!nerve_.is_clique(sigma)) throw PreconditionError("not a simplex of the nerve");
  std::vector<Word> out;
  int k = static_cast<int>(sigma.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    Word w;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) w.push_back(sigma[i]);
    out.push_back(w);  // letters sorted and pairwise commuting: already normal
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<char> Racg::abelianization(const Word& w) const {
  std::vector<char> sig(num_generators(), 0);
  for (int x : w) sig[x] ^= 1;
  return sig;
}

bool Racg::is_reflection(const Word& r) const {
  Word v = normal_form(r);
  if (v.size() == 1) return true;
  if (v.size() % 2 == 0 || v.empty()) return false;
  // any length-reducing conjugation step preserves reflection-ness
  int len = static_cast<int>(v.size());
  for (int s = 0; s < num_generators(); ++s) {
    Word srs = mult({s}, mult(v, {s}));
    if (static_cast<int>(srs.size()) == len - 2) return is_reflection(srs);
  }
  return false;
}

int Racg::halfspace_side(const Word& r, const Word& w) const {
  Word rr = normal_form(r);
  if (!is_reflection(rr)) throw PreconditionError("wall side: r is not a reflection");
  Word rw = mult(rr, w);
  return rw.size() > normal_form(w).size() ? +1 : -1;
}

// --- spherical cosets -------------------------------------------------------

std::vector<SphericalCoset> spherical_cosets(const Racg& W, int N) {
  if (N < 0) throw PreconditionError("spherical_cosets: N >= 0 required");
  auto sigmas = W.nerve().all_simplices_with_empty();
  std::set<SphericalCoset> seen;
  for (const Word& w : W.ball(N)) {
    for (const auto& sigma : sigmas) {
      Word rep;
      bool first = true;
      for (const Word& u : W.special_subgroup_elements(sigma)) {
        Word wu = W.mult(w, u);
        bool smaller = wu.size() < rep.size() || (wu.size() == rep.size() && wu < rep);
        if (first || smaller) rep = wu;
        first = false;
      }
      seen.insert(SphericalCoset{rep, sigma});
    }
  }
  return {seen.begin(), seen.end()};
}

bool coset_leq(const Racg& W, const SphericalCoset& a, const SphericalCoset& b) {
  if (!std::includes(b.sigma.begin(), b.sigma.end(), a.sigma.begin(), a.sigma.end())) return false;
  Word diff = W.mult(W.inverse(b.rep), a.rep);
  for (int x : diff)
    if (!std::binary_search(b.sigma.begin(), b.sigma.end(), x)) return false;
  return true;
}

// --- convex chamber unions ----------------------------------------------------

namespace {

std::set<Word> chamber_set(const Racg& W, const std::vector<Word>& chambers) {
  std::set<Word> C;
  for (const Word& w : chambers) C.insert(W.normal_form(w));
  return C;
}

}  // namespace

std::vector<std::pair<Word, int>> boundary_faces(const Racg& W,
                                                 const std::vector<Word>& chambers) {
  std::set<Word> C = chamber_set(W, chambers);
  std::vector<std::pair<Word, int>> out;
  for (const Word& w : C) {
    for (int s = 0; s < W.num_generators(); ++s) {
      Word ws = W.mult(w, {s});
      if (!C.count(ws)) out.emplace_back(w, s);
    }
  }
  return out;
}

std::optional<Word> convexity_violation(const Racg& W, const std::vector<Word>& chambers) {
  std::set<Word> C = chamber_set(W, chambers);
  if (C.empty()) return Word{};
  // gallery-connectivity
  std::set<Word> reached{*C.begin()};
  std::vector<Word> stack{*C.begin()};
  while (!stack.empty()) {
    Word w = stack.back();
    stack.pop_back();
    for (int s = 0; s < W.num_generators(); ++s) {
      Word ws = W.mult(w, {s});
      if (C.count(ws) && reached.insert(ws).second) stack.push_back(ws);
    }
  }
  if (reached.size() != C.size())
    throw PreconditionError("chamber set is not gallery-connected");
  // every boundary wall must have all of C strictly on one side; a geodesic
  // gallery leaving C crosses one of these walls, so this pins C as the
  // intersection of the half-spaces containing it
  for (const auto& [w, s] : boundary_faces(W, chambers)) {
    Word r = W.conjugate(w, {s});
    int side0 = 0;
    for (const Word& c : C) {
      int side = W.halfspace_side(r, c);
      if (side0 == 0) side0 = side;
      if (side != side0) return r;
    }
  }
  return std::nullopt;
}

std::vector<Word> supporting_walls(const Racg& W, const std::vector<Word>& chambers) {
  std::set<Word> supp;
  for (const auto& [w, s] : boundary_faces(W, chambers)) supp.insert(W.conjugate(w, {s}));
  return {supp.begin(), supp.end()};
}

NerveOfUnion nerve_of_convex_union(const Racg& W, const std::vector<Word>& chambers) {
  if (auto bad = convexity_violation(W, chambers)) {
    throw PreconditionError("chamber union is not convex; violated wall: " +
                            word_str(W.nerve(), *bad));
  }
  NerveOfUnion out;
  out.supp = supporting_walls(W, chambers);
  std::vector<Vertex> labels;
  for (const Word& r : out.supp) labels.push_back(word_str(W.nerve(), r));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (size_t i = 0; i < out.supp.size(); ++i) {
    for (size_t j = i + 1; j < out.supp.size(); ++j) {
      Word prod = W.mult(out.supp[i], out.supp[j]);
      if (W.mult(prod, prod).empty()) edges.emplace_back(labels[i], labels[j]);
    }
  }
  out.nerve = FlagComplex(labels, edges);
  return out;
}

std::vector<Word> iterated_double_domain(const Racg& W, const Vertex& s1, const Vertex& s2,
                                         int N) {
  if (N < 1) throw PreconditionError("iterated_double_domain: N >= 1 required");
  int a = W.gen_index(s1), b = W.gen_index(s2);
  if (a == b) throw PreconditionError("iterated_double_domain: need two distinct generators");
  if (W.commute(a, b))
    throw PreconditionError(
        "iterated_double_domain: generators span an edge, the dihedral subgroup is finite");
  std::vector<Word> out;
  Word w;
  for (int k = 0; k < N; ++k) {
    out.push_back(W.normal_form(w));
    w.push_back(k % 2 == 0 ? a : b);
  }
  return out;
}

}  // namespace racg
