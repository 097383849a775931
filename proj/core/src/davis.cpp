#include "racg/davis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

Rat kappa(const FVector& f) {
  Rat sum = 0;
  for (int k = -1; k <= f.dim(); ++k) sum += minus_half_pow(k + 1) * Rat(f.f(k));
  return sum;
}

Rat kappa(const FlagComplex& L) { return kappa(L.f_vector()); }

// --- CubicalComplex ----------------------------------------------------------

const std::vector<CubeCell>& CubicalComplex::cells(int d) const {
  static const std::vector<CubeCell> none;
  if (d < 0 || d > top_dim()) return none;
  return cells_[d];
}

int CubicalComplex::num_cells(int d) const { return static_cast<int>(cells(d).size()); }

long long CubicalComplex::total_cells() const {
  long long t = 0;
  for (int d = 0; d <= top_dim(); ++d) t += num_cells(d);
  return t;
}

int CubicalComplex::add_cell(int d, CubeCell cell) {
  if (d >= static_cast<int>(cells_.size())) {
    cells_.resize(d + 1);
    index_.resize(d + 1);
  }
  auto [it, fresh] = index_[d].emplace(cell.key, static_cast<int>(cells_[d].size()));
  if (!fresh) throw PreconditionError("duplicate cubical cell key: " + cell.key);
  std::sort(cell.vertices.begin(), cell.vertices.end());
  cells_[d].push_back(std::move(cell));
  return it->second;
}

int CubicalComplex::index_of(int d, const std::string& key) const {
  if (d < 0 || d > top_dim()) return -1;
  auto it = index_[d].find(key);
  return it == index_[d].end() ? -1 : it->second;
}

Rat CubicalComplex::euler_characteristic() const {
  Rat chi = 0;
  for (int d = 0; d <= top_dim(); ++d) chi += Rat((d % 2) ? -num_cells(d) : num_cells(d));
  return chi;
}

ChainComplex CubicalComplex::chain_complex() const {
  int top = top_dim();
  std::vector<int> n(top + 1, 0);
  for (int d = 0; d <= top; ++d) n[d] = num_cells(d);
  std::vector<SparseMat> bnd(top + 1);
  for (int d = 1; d <= top; ++d) {
    bnd[d].rows = n[d];
    bnd[d].cols = n[d - 1];
    bnd[d].entries.assign(n[d], {});
    for (int i = 0; i < n[d]; ++i)
      for (auto [f, sign] : cells_[d][i].boundary) bnd[d].add(i, f, Rat(sign));
  }
  if (top < 0) return ChainComplex::from_matrices({}, {});
  return ChainComplex::from_matrices(std::move(n), std::move(bnd));
}

BettiVector CubicalComplex::homology() const { return betti(chain_complex()); }

std::vector<std::string> CubicalComplex::vertex_ids() const {
  std::vector<std::string> out;
  for (const auto& c : cells(0)) out.push_back(c.key);
  return out;
}

SimplicialComplex CubicalComplex::vertex_link(const std::string& vertex_id) const {
  if (index_of(0, vertex_id) < 0) throw PreconditionError("unknown vertex: " + vertex_id);
  // link vertices: edges at the vertex, named by their cell key
  std::vector<Vertex> lk_labels;
  std::vector<const CubeCell*> edges;
  for (const auto& e : cells(1)) {
    if (std::binary_search(e.vertices.begin(), e.vertices.end(), vertex_id)) {
      lk_labels.push_back(e.key);
      edges.push_back(&e);
    }
  }
  std::vector<std::vector<Vertex>> simplices;
  for (int d = 1; d <= top_dim(); ++d) {
    for (const auto& c : cells(d)) {
      if (!std::binary_search(c.vertices.begin(), c.vertices.end(), vertex_id)) continue;
      // a cube is the full complex on its vertex set: an edge at the vertex
      // is a face of c iff both its endpoints are vertices of c
      std::vector<Vertex> simplex;
      for (size_t i = 0; i < edges.size(); ++i) {
        bool inside = true;
        for (const auto& v : edges[i]->vertices)
          if (!std::binary_search(c.vertices.begin(), c.vertices.end(), v)) inside = false;
        if (inside) simplex.push_back(lk_labels[i]);
      }
      if (static_cast<int>(simplex.size()) != d)
        throw LemmaViolation("cubical cell with wrong edge count at a vertex");
      simplices.push_back(std::move(simplex));
    }
  }
  return SimplicialComplex::from_maximal(lk_labels, simplices);
}

bool CubicalComplex::npc_check() const {
  for (const auto& v : vertex_ids())
    if (!is_flag(vertex_link(v))) return false;
  return true;
}

// --- Davis balls --------------------------------------------------------------

namespace {

Word coset_min_rep(const Racg& W, const Word& w, const Simplex& sigma) {
  Word rep;
  bool first = true;
  for (const Word& u : W.special_subgroup_elements(sigma)) {
    Word wu = W.mult(w, u);
    if (first || wu.size() < rep.size() || (wu.size() == rep.size() && wu < rep)) rep = wu;
    first = false;
  }
  return rep;
}

std::string cell_key(const Racg& W, const Word& rep, const Simplex& sigma) {
  // vertex cells are keyed by the bare element word so that the vertex ids
  // stored on higher cells resolve
  if (sigma.empty()) return word_str(W.nerve(), rep);
  std::string key = word_str(W.nerve(), rep) + "|";
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i) key += ",";
    key += W.nerve().label(sigma[i]);
  }
  return key;
}

}  // namespace

CubicalComplex davis_ball(const Racg& W, int N) {
  if (N < 0) throw PreconditionError("davis_ball: N >= 0 required");
  std::vector<Word> elements = W.ball(N);
  std::set<Word> inside(elements.begin(), elements.end());

  // (rep, sigma) per coset; a cell is kept iff the whole coset w W_sigma
  // lies in the ball, which makes the ball a full subcomplex
  struct PendingCell {
    Word rep;
    Simplex sigma;
    std::vector<std::string> verts;
  };
  std::vector<std::vector<PendingCell>> by_dim(W.nerve().dim() + 2);
  auto sigmas = W.nerve().all_simplices_with_empty();
  for (const Word& w : elements) {
    for (const auto& sigma : sigmas) {
      Word rep = coset_min_rep(W, w, sigma);
      if (rep != w) continue;  // enumerate each coset once, from its minimum
      std::vector<std::string> verts;
      bool keep = true;
      for (const Word& u : W.special_subgroup_elements(sigma)) {
        Word wu = W.mult(w, u);
        if (!inside.count(wu)) {
          keep = false;
          break;
        }
        verts.push_back(word_str(W.nerve(), wu));
      }
      if (keep) by_dim[sigma.size()].push_back({rep, sigma, std::move(verts)});
    }
  }

  CubicalComplex X;
  for (int d = 0; d < static_cast<int>(by_dim.size()); ++d) {
    for (auto& pc : by_dim[d]) {
      CubeCell cell;
      cell.key = cell_key(W, pc.rep, pc.sigma);
      cell.vertices = std::move(pc.verts);
      int sign_base = 1;
      for (size_t i = 0; i < pc.sigma.size(); ++i) {
        Simplex tau;
        for (size_t j = 0; j < pc.sigma.size(); ++j)
          if (j != i) tau.push_back(pc.sigma[j]);
        // the two codimension-one faces across coordinate sigma[i]
        Word rep_plus = coset_min_rep(W, pc.rep, tau);
        Word rep_minus = coset_min_rep(W, W.mult(pc.rep, {pc.sigma[i]}), tau);
        int f_plus = X.index_of(d - 1, cell_key(W, rep_plus, tau));
        int f_minus = X.index_of(d - 1, cell_key(W, rep_minus, tau));
        if (f_plus < 0 || f_minus < 0)
          throw LemmaViolation("davis ball: face cell missing despite full truncation");
        cell.boundary.emplace_back(f_plus, sign_base);
        cell.boundary.emplace_back(f_minus, -sign_base);
        sign_base = -sign_base;
      }
      X.add_cell(d, std::move(cell));
    }
  }
  return X;
}

// --- commutator cover ----------------------------------------------------------

CubicalComplex commutator_cover(const FlagComplex& L, int max_vertices_log2) {
  int p = L.size();
  if (p > max_vertices_log2)
    throw ResourceError("commutator cover needs 2^" + std::to_string(p) +
                        " vertices; limit is 2^" + std::to_string(max_vertices_log2));
  CubicalComplex X;
  auto sigmas = L.all_simplices_with_empty();
  std::stable_sort(sigmas.begin(), sigmas.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() < b.size();
  });

  // a cell is a vector over {-,+,*}^p whose free (*) set spans a simplex
  auto key_of = [&](const std::vector<char>& v) { return std::string(v.begin(), v.end()); };
  for (const auto& sigma : sigmas) {
    int d = static_cast<int>(sigma.size());
    int free_bits = p - d;
    std::vector<int> fixed;
    for (int i = 0; i < p; ++i)
      if (!std::binary_search(sigma.begin(), sigma.end(), i)) fixed.push_back(i);
    for (long long mask = 0; mask < (1LL << free_bits); ++mask) {
      std::vector<char> vec(p, '*');
      for (int i = 0; i < free_bits; ++i) vec[fixed[i]] = (mask & (1LL << i)) ? '+' : '-';
      CubeCell cell;
      cell.key = key_of(vec);
      // vertices: all sign completions of the free coordinates
      std::vector<std::vector<char>> completions{vec};
      for (int s : sigma) {
        std::vector<std::vector<char>> next;
        for (auto& c : completions) {
          auto plus = c, minus = c;
          plus[s] = '+';
          minus[s] = '-';
          next.push_back(std::move(minus));
          next.push_back(std::move(plus));
        }
        completions = std::move(next);
      }
      for (const auto& c : completions) cell.vertices.push_back(key_of(c));
      if (d > 0) {
        int sign_base = 1;
        for (size_t i = 0; i < sigma.size(); ++i) {
          auto plus = vec, minus = vec;
          plus[sigma[i]] = '+';
          minus[sigma[i]] = '-';
          int f_plus = X.index_of(d - 1, key_of(plus));
          int f_minus = X.index_of(d - 1, key_of(minus));
          if (f_plus < 0 || f_minus < 0) throw LemmaViolation("commutator cover: missing face");
          cell.boundary.emplace_back(f_plus, sign_base);
          cell.boundary.emplace_back(f_minus, -sign_base);
          sign_base = -sign_base;
        }
      }
      X.add_cell(d, std::move(cell));
    }
  }
  return X;
}

std::string ChiOrbReport::str() const {
  std::ostringstream os;
  os << "chi(P_L) = " << to_string(chi_cover) << ", 2^p * kappa(L) = " << to_string(scaled_kappa)
     << (consistent() ? "  [consistent]" : "  [MISMATCH]");
  return os.str();
}

ChiOrbReport chi_orb_consistency(const FlagComplex& L, int max_vertices_log2) {
  CubicalComplex P = commutator_cover(L, max_vertices_log2);
  ChiOrbReport r;
  r.chi_cover = P.euler_characteristic();
  r.scaled_kappa = Rat(Int(1) << L.size()) * kappa(L);
  return r;
}

// --- derived complexes ----------------------------------------------------------

FlagComplex derived_complex(const std::vector<std::string>& names,
                            const std::function<bool(int, int)>& leq) {
  int n = static_cast<int>(names.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (leq(i, j) || leq(j, i)) edges.emplace_back(names[i], names[j]);
  return FlagComplex(names, edges);
}

FlagComplex davis_ball_derived(const Racg& W, int N) {
  auto cosets = spherical_cosets(W, N);
  std::vector<std::string> names;
  for (const auto& c : cosets) names.push_back(cell_key(W, c.rep, c.sigma));
  return derived_complex(
      names, [&](int i, int j) { return coset_leq(W, cosets[i], cosets[j]); });
}

}  // namespace racg
