#include "racg/simplicial.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace racg {

std::string FVector::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) os << ", ";
    os << counts[i].get_str();
  }
  os << ")";
  return os.str();
}

// --- FlagComplex -----------------------------------------------------------

FlagComplex::FlagComplex() : cache_(std::make_shared<CliqueCache>()) {}

FlagComplex::FlagComplex(std::vector<Vertex> labels,
                         const std::vector<std::pair<Vertex, Vertex>>& edges)
    : labels_(std::move(labels)), cache_(std::make_shared<CliqueCache>()) {
  for (int i = 0; i < size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw PreconditionError("duplicate vertex label: " + labels_[i]);
  }
  adj_.assign(size(), std::vector<char>(size(), 0));
  for (const auto& [a, b] : edges) {
    int i = index_of(a), j = index_of(b);
    if (i < 0 || j < 0) throw PreconditionError("edge endpoint is not a vertex: " + a + "-" + b);
    if (i == j) throw PreconditionError("loop edge at vertex " + a);
    adj_[i][j] = adj_[j][i] = 1;
  }
  nbrs_.assign(size(), {});
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (adj_[i][j]) nbrs_[i].push_back(j);
}

FlagComplex FlagComplex::from_index_edges(std::vector<Vertex> labels,
                                          const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<Vertex, Vertex>> e;
  e.reserve(edges.size());
  for (auto [i, j] : edges) e.emplace_back(labels.at(i), labels.at(j));
  return FlagComplex(std::move(labels), e);
}

int FlagComplex::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> FlagComplex::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adj_[i][j]) out.emplace_back(i, j);
  return out;
}

std::vector<std::pair<Vertex, Vertex>> FlagComplex::labeled_edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (auto [i, j] : edge_list()) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

int FlagComplex::num_edges() const { return static_cast<int>(edge_list().size()); }

const std::vector<std::vector<Simplex>>& FlagComplex::cliques() const {
  std::call_once(cache_->once, [this] {
    auto& by_dim = cache_->by_dim;
    if (size() == 0) return;
    by_dim.resize(1);
    // Ordered clique extension: every clique is emitted exactly once, in
    // lexicographic order within its dimension.
    std::vector<int> current;
    std::vector<int> cand(size());
    for (int i = 0; i < size(); ++i) cand[i] = i;
    struct Rec {
      const FlagComplex& L;
      std::vector<std::vector<Simplex>>& out;
      void run(std::vector<int>& cur, const std::vector<int>& cands) {
        for (size_t ci = 0; ci < cands.size(); ++ci) {
          int v = cands[ci];
          cur.push_back(v);
          size_t d = cur.size() - 1;
          if (out.size() <= d) out.resize(d + 1);
          out[d].push_back(cur);
          std::vector<int> next;
          for (size_t cj = ci + 1; cj < cands.size(); ++cj)
            if (L.adjacent(v, cands[cj])) next.push_back(cands[cj]);
          if (!next.empty()) run(cur, next);
          cur.pop_back();
        }
      }
    } rec{*this, by_dim};
    rec.run(current, cand);
  });
  return cache_->by_dim;
}

std::vector<Simplex> FlagComplex::all_simplices_with_empty() const {
  std::vector<Simplex> out;
  out.push_back({});
  for (const auto& level : cliques())
    for (const auto& s : level) out.push_back(s);
  return out;
}

int FlagComplex::dim() const { return static_cast<int>(cliques().size()) - 1; }

FVector FlagComplex::f_vector() const {
  FVector f;
  f.counts.push_back(1);
  for (const auto& level : cliques()) f.counts.push_back(Int(level.size()));
  return f;
}

bool FlagComplex::is_clique(const Simplex& s) const {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= size()) return false;
    for (size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || !adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Simplex FlagComplex::simplex_from_labels(const std::vector<Vertex>& vs) const {
  Simplex s;
  for (const auto& v : vs) {
    int i = index_of(v);
    if (i < 0) throw PreconditionError("unknown vertex: " + v);
    s.push_back(i);
  }
  std::sort(s.begin(), s.end());
  if (!is_clique(s)) throw PreconditionError("vertex set does not span a simplex");
  return s;
}

std::vector<Vertex> FlagComplex::labels_of(const Simplex& s) const {
  std::vector<Vertex> out;
  for (int i : s) out.push_back(labels_[i]);
  return out;
}

bool FlagComplex::same_labeled_graph(const FlagComplex& other) const {
  return labels_ == other.labels_ && adj_ == other.adj_;
}

// --- SimplicialComplex -----------------------------------------------------

SimplicialComplex::SimplicialComplex() = default;

void SimplicialComplex::close_downward() {
  std::vector<Simplex> stack(simplices_.begin(), simplices_.end());
  while (!stack.empty()) {
    Simplex s = stack.back();
    stack.pop_back();
    if (s.size() <= 1) continue;
    for (size_t i = 0; i < s.size(); ++i) {
      Simplex face;
      for (size_t j = 0; j < s.size(); ++j)
        if (j != i) face.push_back(s[j]);
      if (simplices_.insert(face).second) stack.push_back(face);
    }
  }
}

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Vertex> labels,
                                                  const std::vector<std::vector<Vertex>>& maximal) {
  SimplicialComplex K;
  K.labels_ = std::move(labels);
  for (int i = 0; i < K.size(); ++i) {
    if (!K.index_.emplace(K.labels_[i], i).second)
      throw PreconditionError("duplicate vertex label: " + K.labels_[i]);
  }
  for (const auto& m : maximal) {
    Simplex s;
    for (const auto& v : m) {
      int i = K.index_of(v);
      if (i < 0) throw PreconditionError("simplex vertex not declared: " + v);
      s.push_back(i);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw PreconditionError("repeated vertex in simplex");
    if (!s.empty()) K.simplices_.insert(s);
  }
  K.close_downward();
  return K;
}

SimplicialComplex SimplicialComplex::from_flag(const FlagComplex& L) {
  SimplicialComplex K;
  K.labels_ = L.labels();
  for (int i = 0; i < K.size(); ++i) K.index_.emplace(K.labels_[i], i);
  for (const auto& level : L.cliques())
    for (const auto& s : level) K.simplices_.insert(s);
  return K;
}

int SimplicialComplex::index_of(const Vertex& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty()) return true;
  return simplices_.count(s) > 0;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
  return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    // s is maximal iff no coface s + {v} is present.
    for (int v = 0; v < size() && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), v), v);
      if (simplices_.count(t)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

int SimplicialComplex::dim() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

FVector SimplicialComplex::f_vector() const {
  FVector f;
  f.counts.assign(dim() + 2, 0);
  f.counts[0] = 1;
  for (const auto& s : simplices_) f.counts[s.size()] += 1;
  return f;
}

bool SimplicialComplex::is_pure() const {
  int d = dim();
  if (d < 0) return true;
  for (const auto& s : maximal_simplices())
    if (static_cast<int>(s.size()) != d + 1) return false;
  return true;
}

SimplicialComplex SimplicialComplex::link(const Simplex& tau) const {
  if (!contains(tau)) throw PreconditionError("link: not a simplex of the complex");
  SimplicialComplex out;
  out.labels_ = labels_;
  out.index_ = index_;
  for (const auto& s : simplices_) {
    // s is in the link iff s and tau are disjoint and s*tau is a simplex.
    Simplex u;
    std::set_intersection(s.begin(), s.end(), tau.begin(), tau.end(), std::back_inserter(u));
    if (!u.empty()) continue;
    Simplex join_s;
    std::set_union(s.begin(), s.end(), tau.begin(), tau.end(), std::back_inserter(join_s));
    if (contains(join_s)) out.simplices_.insert(s);
  }
  return out.prune_isolated();
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<Vertex>& keep) const {
  std::set<int> keep_idx;
  for (const auto& v : keep) {
    int i = index_of(v);
    if (i < 0) throw PreconditionError("full_subcomplex: unknown vertex " + v);
    keep_idx.insert(i);
  }
  SimplicialComplex out;
  for (int i : keep_idx) out.labels_.push_back(labels_[i]);
  std::map<int, int> remap;
  for (int i = 0; i < out.size(); ++i) {
    out.index_.emplace(out.labels_[i], i);
    remap[index_.at(out.labels_[i])] = i;
  }
  for (const auto& s : simplices_) {
    bool inside = true;
    for (int v : s)
      if (!keep_idx.count(v)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    Simplex t;
    for (int v : s) t.push_back(remap[v]);
    std::sort(t.begin(), t.end());
    out.simplices_.insert(t);
  }
  return out;
}

SimplicialComplex SimplicialComplex::prune_isolated() const {
  std::vector<Vertex> keep;
  for (const auto& s : simplices_)
    if (s.size() == 1) keep.push_back(labels_[s[0]]);
  return full_subcomplex(keep);
}

FlagComplex SimplicialComplex::skeleton_graph() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& s : simplices_)
    if (s.size() == 2) edges.emplace_back(labels_[s[0]], labels_[s[1]]);
  return FlagComplex(labels_, edges);
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& K) const {
  for (const auto& s : simplices_) {
    std::vector<Vertex> vs;
    for (int v : s) vs.push_back(labels_[v]);
    Simplex t;
    for (const auto& v : vs) {
      int i = K.index_of(v);
      if (i < 0) return false;
      t.push_back(i);
    }
    std::sort(t.begin(), t.end());
    if (!K.contains(t)) return false;
  }
  return true;
}

// --- free operations -------------------------------------------------------

bool is_flag(const SimplicialComplex& K) {
  FlagComplex skel = K.skeleton_graph();
  for (const auto& level : skel.cliques()) {
    for (const auto& s : level) {
      Simplex t;
      for (int v : s) t.push_back(K.index_of(skel.label(v)));
      std::sort(t.begin(), t.end());
      if (!K.contains(t)) return false;
    }
  }
  return true;
}

FlagComplex link(const FlagComplex& L, const Simplex& tau) {
  if (!L.is_clique(tau)) throw PreconditionError("link: argument is not a simplex");
  if (tau.empty()) return L;
  std::vector<Vertex> keep;
  for (int v = 0; v < L.size(); ++v) {
    if (std::binary_search(tau.begin(), tau.end(), v)) continue;
    bool joinable = true;
    for (int t : tau)
      if (!L.adjacent(v, t)) {
        joinable = false;
        break;
      }
    if (joinable) keep.push_back(L.label(v));
  }
  return full_subcomplex(L, keep);
}

FlagComplex link_of_vertex(const FlagComplex& L, const Vertex& v) {
  int i = L.index_of(v);
  if (i < 0) throw PreconditionError("link: unknown vertex " + v);
  return link(L, {i});
}

FlagComplex full_subcomplex(const FlagComplex& L, const std::vector<Vertex>& keep) {
  std::vector<Vertex> labels;
  std::set<Vertex> seen;
  for (const auto& v : keep) {
    if (L.index_of(v) < 0) throw PreconditionError("full_subcomplex: unknown vertex " + v);
    if (seen.insert(v).second) labels.push_back(v);
  }
  // keep the ambient vertex order for reproducibility
  std::sort(labels.begin(), labels.end(), [&](const Vertex& a, const Vertex& b) {
    return L.index_of(a) < L.index_of(b);
  });
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j)
      if (L.adjacent(L.index_of(labels[i]), L.index_of(labels[j])))
        edges.emplace_back(labels[i], labels[j]);
  return FlagComplex(labels, edges);
}

FlagComplex minus(const FlagComplex& L, const std::vector<Vertex>& removed) {
  std::set<Vertex> removed_set(removed.begin(), removed.end());
  for (const auto& v : removed)
    if (L.index_of(v) < 0) throw PreconditionError("minus: unknown vertex " + v);
  std::vector<Vertex> keep;
  for (const auto& v : L.labels())
    if (!removed_set.count(v)) keep.push_back(v);
  return full_subcomplex(L, keep);
}

namespace {

// Relabels colliding vertex sets deterministically ("v#0" / "v#1").
std::pair<std::vector<Vertex>, std::vector<Vertex>> disjoint_labels(const FlagComplex& L1,
                                                                    const FlagComplex& L2) {
  bool collision = false;
  for (const auto& v : L2.labels())
    if (L1.has_vertex(v)) collision = true;
  std::vector<Vertex> a = L1.labels(), b = L2.labels();
  if (collision) {
    for (auto& v : a) v += "#0";
    for (auto& v : b) v += "#1";
  }
  return {a, b};
}

}  // namespace

FlagComplex join(const FlagComplex& L1, const FlagComplex& L2) {
  auto [a, b] = disjoint_labels(L1, L2);
  std::vector<Vertex> labels = a;
  labels.insert(labels.end(), b.begin(), b.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [i, j] : L1.edge_list()) edges.emplace_back(a[i], a[j]);
  for (auto [i, j] : L2.edge_list()) edges.emplace_back(b[i], b[j]);
  for (const auto& u : a)
    for (const auto& v : b) edges.emplace_back(u, v);
  return FlagComplex(labels, edges);
}

FlagComplex cone(const FlagComplex& L, const Vertex& apex) {
  Vertex c = apex;
  while (L.has_vertex(c)) c += "'";
  FlagComplex pt({c}, {});
  return join(L, pt);
}

FlagComplex suspension(const FlagComplex& L) {
  Vertex n = "pole+", s = "pole-";
  while (L.has_vertex(n)) n += "'";
  while (L.has_vertex(s)) s += "'";
  FlagComplex poles({n, s}, {});
  return join(L, poles);
}

FlagComplex disjoint_union(const FlagComplex& L1, const FlagComplex& L2) {
  auto [a, b] = disjoint_labels(L1, L2);
  std::vector<Vertex> labels = a;
  labels.insert(labels.end(), b.begin(), b.end());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [i, j] : L1.edge_list()) edges.emplace_back(a[i], a[j]);
  for (auto [i, j] : L2.edge_list()) edges.emplace_back(b[i], b[j]);
  return FlagComplex(labels, edges);
}

FlagComplex double_along_vertex(const FlagComplex& L, const Vertex& v) {
  int vi = L.index_of(v);
  if (vi < 0) throw PreconditionError("double_along_vertex: unknown vertex " + v);
  std::set<int> lk;
  for (int u : L.neighbors(vi)) lk.insert(u);

  auto copy_name = [&](int u, int copy) -> Vertex {
    if (lk.count(u)) return L.label(u);
    return L.label(u) + "#" + std::to_string(copy);
  };

  std::vector<Vertex> labels;
  for (int u = 0; u < L.size(); ++u) {
    if (u == vi) continue;
    labels.push_back(copy_name(u, 0));
  }
  for (int u = 0; u < L.size(); ++u) {
    if (u == vi || lk.count(u)) continue;
    labels.push_back(copy_name(u, 1));
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [i, j] : L.edge_list()) {
    if (i == vi || j == vi) continue;
    edges.emplace_back(copy_name(i, 0), copy_name(j, 0));
    if (!lk.count(i) || !lk.count(j)) edges.emplace_back(copy_name(i, 1), copy_name(j, 1));
  }
  return FlagComplex(labels, edges);
}

int valence(const FlagComplex& S, const Vertex& v) {
  int i = S.index_of(v);
  if (i < 0) throw PreconditionError("valence: unknown vertex " + v);
  return static_cast<int>(S.neighbors(i).size());
}

std::vector<Circuit4> all_4_circuits(const FlagComplex& S) {
  std::set<Circuit4> out;
  for (int a = 0; a < S.size(); ++a) {
    for (int c = a + 1; c < S.size(); ++c) {
      std::vector<int> common;
      for (int b : S.neighbors(a))
        if (b != c && S.adjacent(b, c)) common.push_back(b);
      for (size_t i = 0; i < common.size(); ++i) {
        for (size_t j = i + 1; j < common.size(); ++j) {
          int b = common[i], d = common[j];
          // cycle a-b-c-d; canonicalize: least vertex first, then the
          // smaller of its two cycle-neighbors second.
          std::array<int, 4> cyc{a, b, c, d};
          int mpos = 0;
          for (int k = 1; k < 4; ++k)
            if (cyc[k] < cyc[mpos]) mpos = k;
          std::array<int, 4> fwd{cyc[mpos], cyc[(mpos + 1) % 4], cyc[(mpos + 2) % 4],
                                 cyc[(mpos + 3) % 4]};
          if (fwd[3] < fwd[1]) std::swap(fwd[1], fwd[3]);
          out.insert(Circuit4{fwd});
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Circuit4> empty_circuits_4(const FlagComplex& S) {
  std::vector<Circuit4> out;
  for (const Circuit4& c : all_4_circuits(S)) {
    int a = c.cyc[0], b = c.cyc[1], cc = c.cyc[2], d = c.cyc[3];
    // (a) the link of a vertex: some vertex whose neighbour set is exactly
    // the circuit (in a flag 2-sphere the link is then this 4-gon).
    bool is_link = false;
    std::set<int> cs{a, b, cc, d};
    for (int v = 0; v < S.size() && !is_link; ++v) {
      if (cs.count(v)) continue;
      const auto& nb = S.neighbors(v);
      if (nb.size() == 4 && std::set<int>(nb.begin(), nb.end()) == cs) is_link = true;
    }
    if (is_link) continue;
    // (b) boundary of two adjacent 2-simplices: a diagonal edge present.
    if (S.adjacent(a, cc) || S.adjacent(b, d)) continue;
    out.push_back(c);
  }
  return out;
}

SimplicialComplex simplicial_union(const std::vector<SimplicialComplex>& parts) {
  SimplicialComplex out;
  std::set<Vertex> seen;
  for (const auto& p : parts)
    for (const auto& v : p.labels())
      if (seen.insert(v).second) out.labels_.push_back(v);
  std::sort(out.labels_.begin(), out.labels_.end());
  for (int i = 0; i < out.size(); ++i) out.index_.emplace(out.labels_[i], i);
  for (const auto& p : parts) {
    for (const auto& s : p.simplices()) {
      Simplex t;
      for (int v : s) t.push_back(out.index_.at(p.label(v)));
      std::sort(t.begin(), t.end());
      out.simplices_.insert(t);
    }
  }
  return out;
}

SimplicialComplex simplicial_intersection(const SimplicialComplex& A, const SimplicialComplex& B) {
  std::vector<std::vector<Vertex>> shared;
  for (const auto& s : A.simplices()) {
    std::vector<Vertex> vs;
    bool ok = true;
    for (int v : s) {
      if (B.index_of(A.label(v)) < 0) {
        ok = false;
        break;
      }
      vs.push_back(A.label(v));
    }
    if (!ok) continue;
    Simplex t;
    for (const auto& v : vs) t.push_back(B.index_of(v));
    std::sort(t.begin(), t.end());
    if (B.contains(t)) shared.push_back(vs);
  }
  std::set<Vertex> verts;
  for (const auto& vs : shared) verts.insert(vs.begin(), vs.end());
  return SimplicialComplex::from_maximal({verts.begin(), verts.end()}, shared);
}

// --- named complexes -------------------------------------------------------

FlagComplex empty_complex() { return FlagComplex({}, {}); }

FlagComplex simplex_complex(int k) {
  if (k < -1) throw PreconditionError("simplex_complex: k >= -1 required");
  std::vector<Vertex> labels;
  for (int i = 0; i <= k; ++i) labels.push_back("s" + std::to_string(i));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(labels[i], labels[j]);
  return FlagComplex(labels, edges);
}

FlagComplex points_complex(int k) {
  std::vector<Vertex> labels;
  for (int i = 0; i < k; ++i) labels.push_back("p" + std::to_string(i));
  return FlagComplex(labels, {});
}

FlagComplex mgon(int m) {
  if (m < 3) throw PreconditionError("mgon: need m >= 3");
  std::vector<Vertex> labels;
  for (int i = 0; i < m; ++i) labels.push_back("g" + std::to_string(i));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < m; ++i) edges.emplace_back(labels[i], labels[(i + 1) % m]);
  return FlagComplex(labels, edges);
}

FlagComplex complete_bipartite(int m, int n) { return join(points_complex(m), points_complex(n)); }

FlagComplex octahedron_boundary() {
  return join(points_complex(2), join(points_complex(2), points_complex(2)));
}

FlagComplex icosahedron_boundary() {
  // north + 5-ring + 5-ring + south; an antiprism between the rings
  std::vector<Vertex> labels;
  for (int i = 0; i < 12; ++i) labels.push_back("i" + std::to_string(i));
  auto top = [&](int i) { return labels[i % 5]; };
  auto bot = [&](int i) { return labels[5 + (i % 5)]; };
  const Vertex north = labels[10], south = labels[11];
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(top(i), top(i + 1));
    edges.emplace_back(bot(i), bot(i + 1));
    edges.emplace_back(north, top(i));
    edges.emplace_back(south, bot(i));
    edges.emplace_back(top(i), bot(i));
    edges.emplace_back(top(i + 1), bot(i));
  }
  return FlagComplex(labels, edges);
}

FlagComplex path_complex(int n) {
  std::vector<Vertex> labels;
  for (int i = 0; i < n; ++i) labels.push_back("q" + std::to_string(i));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(labels[i], labels[i + 1]);
  return FlagComplex(labels, edges);
}

}  // namespace racg
