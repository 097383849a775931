#include "racg/sphere2.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "racg/davis.hpp"
#include "racg/errors.hpp"
#include "racg/homology.hpp"

namespace racg {

std::string SphereCheck::failure() const {
  if (!flag) return "not-flag";
  if (!pure_dim2 || !edges_in_two_triangles || !connected || !euler_two || !ghs2)
    return "not-sphere";
  return "";
}

SphereCheck check_flag_two_sphere(const FlagComplex& S) {
  SphereCheck c;
  c.flag = true;  // a FlagComplex is its own clique complex by construction
  const auto& levels = S.cliques();
  c.pure_dim2 = S.dim() == 2;
  if (!c.pure_dim2) return c;
  // every edge in exactly two triangles
  std::map<Simplex, int> tri_count;
  for (const auto& t : levels[2]) {
    for (int drop = 0; drop < 3; ++drop) {
      Simplex e;
      for (int j = 0; j < 3; ++j)
        if (j != drop) e.push_back(t[j]);
      tri_count[e]++;
    }
  }
  c.edges_in_two_triangles = true;
  for (const auto& e : levels[1])
    if (tri_count[e] != 2) c.edges_in_two_triangles = false;
  // connected
  std::vector<char> seen(S.size(), 0);
  if (S.size() > 0) {
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : S.neighbors(v))
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
    }
  }
  c.connected = S.size() > 0 && std::all_of(seen.begin(), seen.end(), [](char x) { return x; });
  c.euler_two =
      Int(S.size()) - Int(levels[1].size()) + Int(levels[2].size()) == 2;
  if (c.pure_dim2 && c.edges_in_two_triangles && c.connected && c.euler_two)
    c.ghs2 = is_GHS(SimplicialComplex::from_flag(S), 2);
  return c;
}

// --- certificate basics --------------------------------------------------------

int Certificate::node_count() const {
  int n = 1;
  for (const auto& c : children) n += c->node_count();
  return n;
}

int Certificate::leaf_count() const {
  if (children.empty()) return 1;
  int n = 0;
  for (const auto& c : children) n += c->leaf_count();
  return n;
}

std::string Certificate::kind_str() const {
  switch (kind) {
    case Kind::SuspensionOf4or5Gon:
      return "suspension-of-4-or-5-gon";
    case Kind::SquareDecomposition:
      return "square-decomposition";
    case Kind::AndreevBase:
      return "andreev-base";
  }
  return "?";
}

std::string DualCellReport::str() const {
  std::ostringstream os;
  os << "intersections-are-cells=" << intersections_are_cells
     << " no-empty-3-circuits=" << no_empty_3_circuits
     << " four-circuits-bounded=" << four_circuits_bounded
     << " no-m5-configuration=" << no_m5_configuration;
  return os.str();
}

// --- suspension recognition ------------------------------------------------------

namespace {

bool is_cycle_graph(const FlagComplex& L) {
  int n = L.size();
  if (n < 3 || L.num_edges() != n) return false;
  for (int v = 0; v < n; ++v)
    if (L.neighbors(v).size() != 2) return false;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : L.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
  }
  return reached == n;
}

std::vector<std::vector<int>> complement_components(const FlagComplex& L) {
  int n = L.size();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u)
        if (u != x && !L.adjacent(x, u) && comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

std::optional<std::pair<int, FlagComplex>> as_suspension_of_mgon(const FlagComplex& S) {
  for (const auto& comp : complement_components(S)) {
    if (comp.size() != 2) continue;  // a 2-element component is an S^0 join factor
    std::vector<Vertex> rest;
    for (int v = 0; v < S.size(); ++v)
      if (v != comp[0] && v != comp[1]) rest.push_back(S.label(v));
    FlagComplex cofactor = full_subcomplex(S, rest);
    if (is_cycle_graph(cofactor) && cofactor.size() >= 4)
      return std::make_pair(cofactor.size(), cofactor);
  }
  return std::nullopt;
}

std::vector<Vertex> link_cycle(const FlagComplex& S, const Vertex& v) {
  int vi = S.index_of(v);
  if (vi < 0) throw PreconditionError("link_cycle: unknown vertex " + v);
  const auto& nb = S.neighbors(vi);
  if (nb.size() != 4) throw PreconditionError("link_cycle: vertex " + v + " has valence != 4");
  FlagComplex lk = link_of_vertex(S, v);
  if (!is_cycle_graph(lk)) throw PreconditionError("link_cycle: link is not a 4-gon");
  // start at the first link vertex, walk toward its smaller neighbor
  std::vector<Vertex> cyc{lk.label(0)};
  int prev = -1, cur = 0;
  while (static_cast<int>(cyc.size()) < 4) {
    int nxt = -1;
    for (int u : lk.neighbors(cur)) {
      if (u == prev) continue;
      if (nxt < 0 || u < nxt) nxt = u;
    }
    cyc.push_back(lk.label(nxt));
    prev = cur;
    cur = nxt;
  }
  return cyc;
}

// --- split and compose -------------------------------------------------------------

std::pair<FlagComplex, FlagComplex> split_along_circuit(const FlagComplex& S,
                                                        const Circuit4& circuit) {
  std::set<int> cs(circuit.cyc.begin(), circuit.cyc.end());
  // components of S minus the circuit
  std::vector<int> comp(S.size(), -1);
  int c = 0;
  for (int v = 0; v < S.size(); ++v) {
    if (cs.count(v) || comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = c;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : S.neighbors(x))
        if (!cs.count(u) && comp[u] < 0) {
          comp[u] = c;
          stack.push_back(u);
        }
    }
    ++c;
  }
  if (c != 2)
    throw LemmaViolation("empty 4-circuit does not separate the sphere into two disks");

  auto build_side = [&](int side, int cap_index) {
    std::vector<Vertex> keep;
    for (int v = 0; v < S.size(); ++v)
      if (cs.count(v) || comp[v] == side) keep.push_back(S.label(v));
    FlagComplex disk = full_subcomplex(S, keep);
    Vertex apex = "cap" + std::to_string(cap_index);
    while (disk.has_vertex(apex)) apex += "'";
    std::vector<Vertex> labels = disk.labels();
    labels.push_back(apex);
    auto edges = disk.labeled_edges();
    for (int cv : circuit.cyc) edges.emplace_back(apex, S.label(cv));
    return FlagComplex(labels, edges);
  };
  return {build_side(0, 0), build_side(1, 1)};
}

FlagComplex square_compose(const FlagComplex& S1, const Vertex& s1, const FlagComplex& S2,
                           const Vertex& s2,
                           const std::vector<std::pair<Vertex, Vertex>>& matching) {
  if (valence(S1, s1) != 4) throw PreconditionError("square_compose: " + s1 + " has valence != 4");
  if (valence(S2, s2) != 4) throw PreconditionError("square_compose: " + s2 + " has valence != 4");
  if (matching.size() != 4) throw PreconditionError("square_compose: matching must have 4 pairs");
  std::map<Vertex, Vertex> to1;  // link(s2) vertex -> link(s1) vertex
  std::set<Vertex> used1;
  for (const auto& [a, b] : matching) {
    if (S1.index_of(a) < 0 || S2.index_of(b) < 0)
      throw PreconditionError("square_compose: matching mentions unknown vertices");
    if (!to1.emplace(b, a).second || !used1.insert(a).second)
      throw PreconditionError("square_compose: matching is not a bijection");
  }
  // matched vertices must be exactly the two links, respecting adjacency
  auto lk1 = link_cycle(S1, s1);
  auto lk2 = link_cycle(S2, s2);
  for (const auto& v : lk2)
    if (!to1.count(v)) throw PreconditionError("square_compose: matching misses a link vertex");
  for (const auto& v : lk1)
    if (!used1.count(v)) throw PreconditionError("square_compose: matching misses a link vertex");
  for (int i = 0; i < 4; ++i) {
    const Vertex& a = lk2[i];
    const Vertex& b = lk2[(i + 1) % 4];
    if (!S1.adjacent(S1.index_of(to1[a]), S1.index_of(to1[b])))
      throw PreconditionError("square_compose: matching does not respect the link cycles");
  }

  FlagComplex D1 = minus(S1, {s1});
  FlagComplex D2 = minus(S2, {s2});
  std::set<Vertex> taken(D1.labels().begin(), D1.labels().end());
  std::map<Vertex, Vertex> rename2;
  for (const auto& v : D2.labels()) {
    if (to1.count(v)) {
      rename2[v] = to1[v];
    } else {
      Vertex nv = v;
      while (taken.count(nv)) nv += "#1";
      rename2[v] = nv;
      taken.insert(nv);
    }
  }
  std::vector<Vertex> labels = D1.labels();
  for (const auto& v : D2.labels())
    if (!to1.count(v)) labels.push_back(rename2[v]);
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add_edge = [&](Vertex a, Vertex b) {
    if (b < a) std::swap(a, b);
    edges.emplace(a, b);
  };
  for (const auto& [a, b] : D1.labeled_edges()) add_edge(a, b);
  for (const auto& [a, b] : D2.labeled_edges()) add_edge(rename2[a], rename2[b]);
  FlagComplex out(labels, {edges.begin(), edges.end()});

  SphereCheck chk = check_flag_two_sphere(out);
  if (!chk.ok())
    throw PreconditionError("square_compose: result is not a flag 2-sphere (" + chk.failure() +
                            ")");
  return out;
}

// --- Andreev preconditions ------------------------------------------------------------

DualCellReport dual_cell_check(const FlagComplex& S, const std::vector<Vertex>& T) {
  if (!empty_circuits_4(S).empty())
    throw PreconditionError("dual_cell_check: sphere still has empty 4-circuits");
  if (auto susp = as_suspension_of_mgon(S); susp && (susp->first == 4 || susp->first == 5))
    throw PreconditionError("dual_cell_check: sphere is a suspension of a 4- or 5-gon");
  std::set<int> t_set;
  for (const auto& v : T) {
    int i = S.index_of(v);
    if (i < 0) throw PreconditionError("dual_cell_check: unknown vertex " + v);
    if (valence(S, v) != 4) throw PreconditionError("dual_cell_check: " + v + " is not valence 4");
    t_set.insert(i);
  }
  for (int v = 0; v < S.size(); ++v)
    if (!t_set.count(v) && S.neighbors(v).size() == 4)
      throw PreconditionError("dual_cell_check: T misses the valence-4 vertex " + S.label(v));
  for (int a : t_set)
    for (int b : t_set)
      if (a < b && S.adjacent(a, b))
        throw LemmaViolation("adjacent valence-4 vertices in a sphere with no empty 4-circuits");

  DualCellReport rep;

  // cells of [S-T]
  std::vector<Simplex> triangles;
  for (const auto& t : S.cliques()[2]) {
    bool keep = true;
    for (int v : t)
      if (t_set.count(v)) keep = false;
    if (keep) triangles.push_back(t);
  }
  struct Square {
    int center;
    std::array<int, 4> cyc;  // corner indices in cyclic order
  };
  std::vector<Square> squares;
  for (int t : t_set) {
    auto cyc = link_cycle(S, S.label(t));
    Square sq;
    sq.center = t;
    for (int i = 0; i < 4; ++i) sq.cyc[i] = S.index_of(cyc[i]);
    squares.push_back(sq);
  }

  // (1) pairwise intersections of 2-cells are cells (a vertex or an edge)
  rep.intersections_are_cells = true;
  auto vset = [](const Simplex& s) { return std::set<int>(s.begin(), s.end()); };
  auto square_has_edge = [&](const Square& q, int a, int b) {
    for (int i = 0; i < 4; ++i) {
      int x = q.cyc[i], y = q.cyc[(i + 1) % 4];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };
  for (size_t i = 0; i < triangles.size() && rep.intersections_are_cells; ++i) {
    for (size_t j = i + 1; j < triangles.size(); ++j) {
      std::set<int> a = vset(triangles[i]), b = vset(triangles[j]);
      std::vector<int> inter;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (inter.size() == 2 && !S.adjacent(inter[0], inter[1]))
        rep.intersections_are_cells = false;
    }
  }
  for (const auto& q : squares) {
    std::set<int> qa(q.cyc.begin(), q.cyc.end());
    for (const auto& tri : triangles) {
      std::vector<int> inter;
      for (int v : tri)
        if (qa.count(v)) inter.push_back(v);
      if (inter.size() == 2 && !square_has_edge(q, inter[0], inter[1]))
        rep.intersections_are_cells = false;
      if (inter.size() >= 3) rep.intersections_are_cells = false;
    }
    for (const auto& q2 : squares) {
      if (&q2 <= &q) continue;
      std::set<int> qb(q2.cyc.begin(), q2.cyc.end());
      std::vector<int> inter;
      std::set_intersection(qa.begin(), qa.end(), qb.begin(), qb.end(),
                            std::back_inserter(inter));
      if (inter.size() == 2 && !(square_has_edge(q, inter[0], inter[1]) &&
                                 square_has_edge(q2, inter[0], inter[1])))
        rep.intersections_are_cells = false;
      if (inter.size() >= 3) rep.intersections_are_cells = false;
    }
  }

  // (2) no empty 3-circuits: every triangle of the skeleton of S-T is a cell
  rep.no_empty_3_circuits = true;
  FlagComplex rest = minus(S, [&] {
    std::vector<Vertex> tt;
    for (int t : t_set) tt.push_back(S.label(t));
    return tt;
  }());
  std::set<Simplex> tri_cells;
  for (const auto& t : triangles) tri_cells.insert(t);
  if (rest.dim() >= 2) {
    for (const auto& t : rest.cliques()[2]) {
      Simplex amb;
      for (int v : t) amb.push_back(S.index_of(rest.label(v)));
      std::sort(amb.begin(), amb.end());
      if (!tri_cells.count(amb)) rep.no_empty_3_circuits = false;
    }
  }

  // (3) every 4-circuit of [S-T] bounds two adjacent triangles or a square
  rep.four_circuits_bounded = true;
  for (const Circuit4& c : all_4_circuits(rest)) {
    std::array<int, 4> amb;
    for (int i = 0; i < 4; ++i) amb[i] = S.index_of(rest.label(c.cyc[i]));
    bool bounded = false;
    // two adjacent triangle cells across a diagonal
    for (int d = 0; d < 2 && !bounded; ++d) {
      int p = amb[d], q = amb[d + 2];
      if (!S.adjacent(p, q)) continue;
      Simplex t1{p, q, amb[(d + 1) % 4]};
      Simplex t2{p, q, amb[(d + 3) % 4]};
      std::sort(t1.begin(), t1.end());
      std::sort(t2.begin(), t2.end());
      if (tri_cells.count(t1) && tri_cells.count(t2)) bounded = true;
    }
    // the boundary of a square cell
    for (const auto& q : squares) {
      std::set<int> qa(q.cyc.begin(), q.cyc.end());
      if (qa == std::set<int>(amb.begin(), amb.end())) bounded = true;
    }
    if (!bounded) rep.four_circuits_bounded = false;
  }

  // (4) the m5 configuration: two faces of the dual polytope meeting only at
  // an ideal vertex (opposite corners of a square) with a third face adjacent
  // to both
  rep.no_m5_configuration = true;
  for (const auto& q : squares) {
    std::set<int> corners(q.cyc.begin(), q.cyc.end());
    for (int u = 0; u < S.size(); ++u) {
      if (u == q.center || corners.count(u) || t_set.count(u)) continue;
      bool diag02 = S.adjacent(u, q.cyc[0]) && S.adjacent(u, q.cyc[2]);
      bool diag13 = S.adjacent(u, q.cyc[1]) && S.adjacent(u, q.cyc[3]);
      if (diag02 || diag13) rep.no_m5_configuration = false;
    }
  }
  return rep;
}

// --- the certifier -----------------------------------------------------------------

namespace {

Certificate certify_rec(const FlagComplex& S) {
  Certificate node;
  node.complex = S;

  if (auto susp = as_suspension_of_mgon(S); susp && (susp->first == 4 || susp->first == 5)) {
    node.kind = Certificate::Kind::SuspensionOf4or5Gon;
    node.m = susp->first;
    return node;
  }

  auto circuits = empty_circuits_4(S);
  if (!circuits.empty()) {
    // deterministic choice: least sorted label 4-tuple
    auto sorted_labels = [&](const Circuit4& c) {
      std::vector<Vertex> l;
      for (int v : c.cyc) l.push_back(S.label(v));
      std::sort(l.begin(), l.end());
      return l;
    };
    const Circuit4* chosen = &circuits[0];
    for (const auto& c : circuits)
      if (sorted_labels(c) < sorted_labels(*chosen)) chosen = &c;

    node.kind = Certificate::Kind::SquareDecomposition;
    for (int v : chosen->cyc) node.circuit.push_back(S.label(v));
    auto [s1, s2] = split_along_circuit(S, *chosen);
    for (const FlagComplex* child : {&s1, &s2}) {
      if (child->size() >= S.size())
        throw LemmaViolation("square decomposition failed to shrink the sphere");
      SphereCheck chk = check_flag_two_sphere(*child);
      if (!chk.ok())
        throw LemmaViolation("capped side of an empty 4-circuit is not a flag 2-sphere");
      node.children.push_back(std::make_shared<Certificate>(certify_rec(*child)));
    }
    return node;
  }

  // Andreev base: no empty 4-circuits and not a small suspension
  node.kind = Certificate::Kind::AndreevBase;
  for (int v = 0; v < S.size(); ++v)
    if (S.neighbors(v).size() == 4) node.valence4.push_back(S.label(v));
  node.checks = dual_cell_check(S, node.valence4);
  if (!node.checks.all_ok())
    throw LemmaViolation("Andreev precondition failed on a sphere with no empty 4-circuits: " +
                         node.checks.str());
  return node;
}

}  // namespace

Certificate certify(const FlagComplex& S) {
  SphereCheck chk = check_flag_two_sphere(S);
  if (!chk.ok()) throw PreconditionError("certify: input is " + chk.failure());
  return certify_rec(S);
}

// --- independent validation ------------------------------------------------------------

namespace {

void verify_rec(const Certificate& c, ValidationReport& rep) {
  SphereCheck chk = check_flag_two_sphere(c.complex);
  if (!chk.ok()) {
    rep.fail("node complex is " + chk.failure());
    return;
  }
  if (kappa(c.complex) != 0) rep.fail("kappa(S) != 0 at a certificate node");

  switch (c.kind) {
    case Certificate::Kind::SuspensionOf4or5Gon: {
      auto susp = as_suspension_of_mgon(c.complex);
      if (!susp || susp->first != c.m || (c.m != 4 && c.m != 5))
        rep.fail("suspension leaf is not a suspension of a 4- or 5-gon");
      if (!c.children.empty()) rep.fail("suspension leaf has children");
      break;
    }
    case Certificate::Kind::SquareDecomposition: {
      if (c.children.size() != 2) {
        rep.fail("square decomposition without two children");
        break;
      }
      if (c.circuit.size() != 4) {
        rep.fail("square decomposition circuit is not a 4-circuit");
        break;
      }
      Circuit4 circ;
      bool ok = true;
      for (int i = 0; i < 4; ++i) {
        int idx = c.complex.index_of(c.circuit[i]);
        if (idx < 0) ok = false;
        circ.cyc[i] = idx;
      }
      auto all = empty_circuits_4(c.complex);
      auto canon = [&](Circuit4 x) {
        int mpos = 0;
        for (int k = 1; k < 4; ++k)
          if (x.cyc[k] < x.cyc[mpos]) mpos = k;
        std::array<int, 4> fwd{x.cyc[mpos], x.cyc[(mpos + 1) % 4], x.cyc[(mpos + 2) % 4],
                               x.cyc[(mpos + 3) % 4]};
        if (fwd[3] < fwd[1]) std::swap(fwd[1], fwd[3]);
        return Circuit4{fwd};
      };
      if (!ok || std::find(all.begin(), all.end(), canon(circ)) == all.end()) {
        rep.fail("stored circuit is not an empty 4-circuit of the node complex");
        break;
      }
      auto [s1, s2] = split_along_circuit(c.complex, canon(circ));
      const FlagComplex* split[2] = {&s1, &s2};
      for (int i = 0; i < 2; ++i) {
        if (!split[i]->same_labeled_graph(c.children[i]->complex))
          rep.fail("child complex does not match the recomputed split");
        if (c.children[i]->complex.size() >= c.complex.size())
          rep.fail("child vertex count does not decrease");
        verify_rec(*c.children[i], rep);
      }
      break;
    }
    case Certificate::Kind::AndreevBase: {
      if (!c.children.empty()) rep.fail("Andreev leaf has children");
      if (!empty_circuits_4(c.complex).empty())
        rep.fail("Andreev leaf complex has an empty 4-circuit");
      if (auto susp = as_suspension_of_mgon(c.complex);
          susp && (susp->first == 4 || susp->first == 5))
        rep.fail("Andreev leaf complex is a small suspension");
      std::set<Vertex> t_set(c.valence4.begin(), c.valence4.end());
      for (int v = 0; v < c.complex.size(); ++v) {
        bool val4 = c.complex.neighbors(v).size() == 4;
        if (val4 != (t_set.count(c.complex.label(v)) > 0)) {
          rep.fail("stored T is not the valence-4 vertex set");
          break;
        }
      }
      try {
        DualCellReport r = dual_cell_check(c.complex, c.valence4);
        if (!r.all_ok()) rep.fail("Andreev checks fail on re-verification: " + r.str());
      } catch (const std::exception& e) {
        rep.fail(std::string("Andreev re-verification raised: ") + e.what());
      }
      break;
    }
  }
}

}  // namespace

ValidationReport verify_certificate(const Certificate& c) {
  ValidationReport rep;
  verify_rec(c, rep);
  return rep;
}

}  // namespace racg
