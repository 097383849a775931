#include "racg/fibration.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

int SignedFunction::zeros() const {
  int z = 0;
  for (int v : lambda) z += v == 0;
  return z;
}

int SignedFunction::negatives() const {
  int m = 0;
  for (int v : lambda) m += v < 0;
  return m;
}

// --- the local model -----------------------------------------------------------

namespace {

Vertex axis_label(int i, int sign) {
  return (sign > 0 ? "+e" : "-e") + std::to_string(i + 1);
}

std::vector<Vertex> octa_labels(int n) {
  std::vector<Vertex> labels;
  for (int i = 0; i < n; ++i) {
    labels.push_back(axis_label(i, +1));
    labels.push_back(axis_label(i, -1));
  }
  return labels;
}

}  // namespace

FlagComplex octahedron_model(int n) {
  if (n < 1) throw PreconditionError("octahedron_model: n >= 1 required");
  auto labels = octa_labels(n);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (size_t a = 0; a < labels.size(); ++a)
    for (size_t b = a + 1; b < labels.size(); ++b)
      if (a / 2 != b / 2) edges.emplace_back(labels[a], labels[b]);  // not antipodal
  return FlagComplex(labels, edges);
}

long long quadrant_census(int n) {
  if (n < 1 || n > 18) throw PreconditionError("quadrant_census: 1 <= n <= 18");
  // enumerate all of {-1,0,+1}^n and count the patterns with exactly one zero
  long long count = 0;
  long long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    int zeros = 0;
    for (int i = 0; i < n; ++i) {
      if (c % 3 == 0) ++zeros;
      c /= 3;
    }
    if (zeros == 1) ++count;
  }
  return count;
}

namespace {

std::vector<std::vector<Vertex>> top_simplices_with_neg_at_most(int n, int l) {
  std::vector<std::vector<Vertex>> out;
  for (long long mask = 0; mask < (1LL << n); ++mask) {
    int neg = __builtin_popcountll(mask);
    if (neg > l) continue;
    std::vector<Vertex> simplex;
    for (int i = 0; i < n; ++i) simplex.push_back(axis_label(i, (mask >> i) & 1 ? -1 : +1));
    out.push_back(std::move(simplex));
  }
  return out;
}

}  // namespace

SimplicialComplex ball_B(int n, int l) {
  if (n < 2 || l < 0 || l > n - 1) throw PreconditionError("ball_B: need n >= 2, 0 <= l <= n-1");
  auto tops = top_simplices_with_neg_at_most(n, l);
  std::set<Vertex> verts;
  for (const auto& s : tops) verts.insert(s.begin(), s.end());
  return SimplicialComplex::from_maximal({verts.begin(), verts.end()}, tops);
}

SimplicialComplex boundary_B(int n, int l) {
  if (n < 2 || l < 0 || l > n - 1)
    throw PreconditionError("boundary_B: need n >= 2, 0 <= l <= n-1");
  // (n-2)-simplices: one zero coordinate, exactly l negatives
  std::vector<std::vector<Vertex>> maximal;
  for (int zero = 0; zero < n; ++zero) {
    for (long long mask = 0; mask < (1LL << (n - 1)); ++mask) {
      if (__builtin_popcountll(mask) != l) continue;
      std::vector<Vertex> simplex;
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        if (i == zero) continue;
        simplex.push_back(axis_label(i, (mask >> bit) & 1 ? -1 : +1));
        ++bit;
      }
      maximal.push_back(std::move(simplex));
    }
  }
  std::set<Vertex> verts;
  for (const auto& s : maximal) verts.insert(s.begin(), s.end());
  return SimplicialComplex::from_maximal({verts.begin(), verts.end()}, maximal);
}

SimplicialComplex sheet(int n, int l) {
  SimplicialComplex bd = boundary_B(n, l);
  std::vector<Vertex> labels = bd.labels();
  labels.push_back("0");
  std::vector<std::vector<Vertex>> maximal;
  for (const auto& s : bd.maximal_simplices()) {
    std::vector<Vertex> coned{"0"};
    for (int v : s) coned.push_back(bd.label(v));
    maximal.push_back(std::move(coned));
  }
  if (maximal.empty()) maximal.push_back({"0"});
  return SimplicialComplex::from_maximal(labels, maximal);
}

CollapsePriority octahedron_collapse_priority() {
  return [](const std::vector<Vertex>& vs) -> long long {
    long long neg = 0;
    for (const auto& v : vs)
      if (!v.empty() && v[0] == '-') ++neg;
    return -neg;  // collapse the most negative region first
  };
}

std::set<int> sheet_levels_containing(const SignedFunction& lambda) {
  std::set<int> levels;
  int n = lambda.n();
  for (int keep_zero = 0; keep_zero < n; ++keep_zero) {
    if (lambda.lambda[keep_zero] != 0) continue;
    // the other zero coordinates of lambda range over +/- freely; the level
    // set of reachable n(mu) is an interval
    int base = lambda.negatives();
    int free = lambda.zeros() - 1;
    for (int extra = 0; extra <= free; ++extra) levels.insert(base + extra);
  }
  return levels;
}

// --- doubling fundamental domain ----------------------------------------------------

ChamberDomain doubling_domain(const Racg& W, int max_generators) {
  int p = W.num_generators();
  if (p > max_generators)
    throw ResourceError("doubling_domain: 2^" + std::to_string(p) +
                        " chambers exceeds the guard (max p = " + std::to_string(max_generators) +
                        ")");
  ChamberDomain D;
  std::set<Word> chambers{Word{}};
  D.sizes_per_step.push_back(chambers.size());
  for (int s = 0; s < p; ++s) {
    D.doubling_order.push_back(s);
    std::set<Word> next = chambers;
    for (const Word& w : chambers) next.insert(W.mult({s}, w));
    chambers = std::move(next);
    D.sizes_per_step.push_back(chambers.size());
  }
  D.chambers.assign(chambers.begin(), chambers.end());
  if (D.chambers.size() != (size_t{1} << p))
    throw LemmaViolation("doubling domain does not have 2^p chambers");

  // property (2): representatives map bijectively onto (Z_2)^p
  std::set<std::vector<char>> signatures;
  for (const Word& w : D.chambers) signatures.insert(W.abelianization(w));
  D.bijection_onto_quotient = signatures.size() == D.chambers.size();

  // property (3): boundary faces are identified in pairs by commutator
  // elements (w,s) <-> (d,s) with d the domain representative of phi(ws)
  std::map<std::vector<char>, Word> rep_of;
  for (const Word& w : D.chambers) rep_of[W.abelianization(w)] = w;
  D.faces_paired = true;
  auto faces = boundary_faces(W, D.chambers);
  std::set<std::pair<Word, int>> face_set(faces.begin(), faces.end());
  for (const auto& [w, s] : faces) {
    Word ws = W.mult(w, {s});
    auto it = rep_of.find(W.abelianization(ws));
    if (it == rep_of.end()) {
      D.faces_paired = false;
      break;
    }
    const Word& d = it->second;
    // gamma = d (ws)^-1 lies in the commutator subgroup by construction;
    // the partner face must exist locally and be distinct
    if (d == w || !face_set.count({d, s})) {
      D.faces_paired = false;
      break;
    }
  }
  return D;
}

// --- hypersurface classes -------------------------------------------------------------

namespace {

// union-find with parity relative to the root
struct ParityUF {
  std::vector<int> parent;
  std::vector<int> parity;  // parity of the edge to the parent
  bool consistent = true;

  explicit ParityUF(int n) : parent(n), parity(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, par] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= par;
    return {r, parity[x]};
  }
  void merge(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) {
      if ((pa ^ pb) != rel) consistent = false;
      return;
    }
    parent[rb] = ra;
    parity[rb] = pa ^ pb ^ rel;
  }
};

}  // namespace

FaceClasses hypersurface_classes(const Racg& W, const ChamberDomain& D) {
  FaceClasses fc;
  auto faces = boundary_faces(W, D.chambers);
  std::map<std::pair<Word, int>, int> face_index;
  for (const auto& [w, s] : faces) {
    BoundaryFaceInfo info;
    info.chamber = w;
    info.gen = s;
    info.wall = W.conjugate(w, {s});
    face_index[{w, s}] = static_cast<int>(fc.faces.size());
    fc.faces.push_back(std::move(info));
  }
  ParityUF uf(static_cast<int>(fc.faces.size()));
  // (a) same wall: equal coorientation sign
  std::map<Word, int> wall_first;
  for (size_t i = 0; i < fc.faces.size(); ++i) {
    auto [it, fresh] = wall_first.emplace(fc.faces[i].wall, static_cast<int>(i));
    if (!fresh) uf.merge(it->second, static_cast<int>(i), 0);
  }
  // (b) commutator pairing: opposite signs (the pulled-back normal points
  // outward on one side and inward on the other)
  std::map<std::vector<char>, Word> rep_of;
  for (const Word& w : D.chambers) rep_of[W.abelianization(w)] = w;
  for (size_t i = 0; i < fc.faces.size(); ++i) {
    Word ws = W.mult(fc.faces[i].chamber, {fc.faces[i].gen});
    const Word& d = rep_of.at(W.abelianization(ws));
    int j = face_index.at({d, fc.faces[i].gen});
    uf.merge(static_cast<int>(i), j, 1);
  }
  fc.coorientable = uf.consistent;

  // deterministic class ids: order roots by least (chamber, gen) member
  std::map<int, std::pair<Word, int>> least;
  for (size_t i = 0; i < fc.faces.size(); ++i) {
    auto [root, par] = uf.find(static_cast<int>(i));
    std::pair<Word, int> key{fc.faces[i].chamber, fc.faces[i].gen};
    auto it = least.find(root);
    if (it == least.end() || key < it->second) least[root] = key;
  }
  std::vector<std::pair<std::pair<Word, int>, int>> ordered;
  for (const auto& [root, key] : least) ordered.emplace_back(key, root);
  std::sort(ordered.begin(), ordered.end());
  std::map<int, int> class_of_root;
  for (size_t c = 0; c < ordered.size(); ++c) class_of_root[ordered[c].second] = static_cast<int>(c);
  for (size_t i = 0; i < fc.faces.size(); ++i) {
    auto [root, par] = uf.find(static_cast<int>(i));
    fc.faces[i].cls = class_of_root[root];
    fc.faces[i].parity = par == 0 ? +1 : -1;
  }
  fc.num_classes = static_cast<int>(ordered.size());
  return fc;
}

// --- the D+ criterion ---------------------------------------------------------------

namespace {

std::string coset_key(const Racg& W, const Word& rep, const Simplex& sigma) {
  std::string key = word_str(W.nerve(), rep);
  key += "|";
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) key += ",";
    key += W.nerve().label(sigma[i]);
  }
  return key;
}

Word coset_min(const Racg& W, const Word& w, const Simplex& sigma) {
  Word rep;
  bool first = true;
  for (const Word& u : W.special_subgroup_elements(sigma)) {
    Word wu = W.mult(w, u);
    if (first || wu.size() < rep.size() || (wu.size() == rep.size() && wu < rep)) rep = wu;
    first = false;
  }
  return rep;
}

// Derived (barycentric) model of one mirror face F(w,s): the chains in the
// coset subposet { w W_sigma : s in sigma }.
SimplicialComplex face_complex(const Racg& W, const Word& w, int s) {
  std::vector<SphericalCoset> cosets;
  for (const auto& sigma : W.nerve().all_simplices_with_empty()) {
    if (!std::binary_search(sigma.begin(), sigma.end(), s)) continue;
    cosets.push_back({coset_min(W, w, sigma), sigma});
  }
  std::vector<std::string> names;
  for (const auto& c : cosets) names.push_back(coset_key(W, c.rep, c.sigma));
  FlagComplex derived =
      derived_complex(names, [&](int i, int j) { return coset_leq(W, cosets[i], cosets[j]); });
  return SimplicialComplex::from_flag(derived);
}

}  // namespace

DplusResult dplus_check(const Racg& W, const ChamberDomain& D, const FaceClasses& classes,
                        const OrientationAssignment& o) {
  if (static_cast<int>(o.signs.size()) != classes.num_classes)
    throw PreconditionError("dplus_check: need one sign per hypersurface class");
  for (int s : o.signs)
    if (s != 1 && s != -1) throw PreconditionError("dplus_check: signs must be +1 or -1");
  if (!classes.coorientable)
    throw PreconditionError("dplus_check: a hypersurface class is not coorientable");

  std::vector<SimplicialComplex> plus_parts, minus_parts;
  for (const auto& f : classes.faces) {
    int sign = o.signs[f.cls] * f.parity;
    auto F = face_complex(W, f.chamber, f.gen);
    (sign > 0 ? plus_parts : minus_parts).push_back(std::move(F));
  }
  DplusResult res;
  res.dplus = simplicial_union(plus_parts);
  res.dminus = simplicial_union(minus_parts);
  res.plus_report = homology_ball_report(res.dplus);
  res.minus_report = homology_ball_report(res.dminus);
  int n = W.nerve().dim() + 1;  // dimension of the Davis complex
  SimplicialComplex inter = simplicial_intersection(res.dplus, res.dminus);
  res.intersection_sphere = betti(inter).same_values(sphere_betti(n - 2));
  res.is_disk =
      res.plus_report.is_ball() && res.minus_report.is_ball() && res.intersection_sphere;
  res.homology_level_only = n >= 4;
  std::ostringstream os;
  if (res.is_disk) {
    os << "D+ is a disk" << (res.homology_level_only ? " (homology level)" : "")
       << ": the commutator cover fibers over the circle with fiber N_{1.."
       << classes.num_classes << "}";
  } else {
    os << "D+ is not a disk: no fibration certificate from this orientation";
  }
  res.statement = os.str();
  return res;
}

std::optional<OrientationAssignment> search_orientations(const Racg& W, const ChamberDomain& D,
                                                         int max_classes) {
  FaceClasses classes = hypersurface_classes(W, D);
  if (classes.num_classes > max_classes)
    throw ResourceError("search_orientations: " + std::to_string(classes.num_classes) +
                        " classes exceeds the guard of " + std::to_string(max_classes));
  int m = classes.num_classes;
  for (long long mask = 0; mask < (1LL << m); ++mask) {
    OrientationAssignment o;
    o.signs.assign(m, +1);
    for (int c = 0; c < m; ++c)
      if (mask & (1LL << c)) o.signs[c] = -1;
    if (dplus_check(W, D, classes, o).is_disk) return o;
  }
  return std::nullopt;
}

}  // namespace racg
