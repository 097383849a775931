#include "racg/homology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "racg/errors.hpp"

namespace racg {

// --- BettiVector -----------------------------------------------------------

BettiVector BettiVector::zeros(int max_degree) {
  BettiVector b;
  b.values.assign(max_degree + 1, Rat(0));
  b.known.assign(max_degree + 1, true);
  return b;
}

BettiVector BettiVector::all_unknown(int max_degree) {
  BettiVector b;
  b.values.assign(max_degree + 1, Rat(0));
  b.known.assign(max_degree + 1, false);
  return b;
}

bool BettiVector::fully_known() const {
  for (bool k : known)
    if (!k) return false;
  return true;
}

Rat BettiVector::at(int d) const {
  if (d < 0 || d > max_degree()) return Rat(0);
  if (!known[d]) throw PreconditionError("Betti number in degree " + std::to_string(d) +
                                         " is unknown");
  return values[d];
}

void BettiVector::set(int d, const Rat& v) {
  if (d < 0) throw PreconditionError("negative degree");
  if (d > max_degree()) {
    values.resize(d + 1, Rat(0));
    known.resize(d + 1, false);
  }
  Rat c = v;
  c.canonicalize();
  values[d] = c;
  known[d] = true;
}

int BettiVector::unknown_count() const {
  int c = 0;
  for (bool k : known)
    if (!k) ++c;
  return c;
}

bool BettiVector::same_values(const BettiVector& o) const {
  int top = std::max(max_degree(), o.max_degree());
  for (int d = 0; d <= top; ++d) {
    bool ka = is_known(d) || d > max_degree();
    bool kb = o.is_known(d) || d > o.max_degree();
    if (!ka || !kb) return false;
    Rat a = d <= max_degree() ? values[d] : Rat(0);
    Rat b = d <= o.max_degree() ? o.values[d] : Rat(0);
    if (a != b) return false;
  }
  return true;
}

std::string BettiVector::str() const {
  std::ostringstream os;
  os << "(";
  for (int d = 0; d <= max_degree(); ++d) {
    if (d) os << ", ";
    os << (known[d] ? to_string(values[d]) : std::string("?"));
  }
  os << ")";
  return os.str();
}

BettiVector sphere_betti(int m) {
  if (m < 0) return BettiVector{};  // empty complex: no degrees
  BettiVector b = BettiVector::zeros(m);
  b.values[0] = 1;
  b.values[m] += 1;  // m = 0 gives b_0 = 2
  return b;
}

// --- sparse rational elimination --------------------------------------------

void SparseMat::add(int r, int c, const Rat& v) {
  if (v == 0) return;
  auto& row = entries[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const std::pair<int, Rat>& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    it->second += v;
    if (it->second == 0) row.erase(it);
  } else {
    row.insert(it, {c, v});
  }
}

namespace {

// row := row + coeff * pivot (sorted merge)
std::vector<std::pair<int, Rat>> axpy(const std::vector<std::pair<int, Rat>>& row,
                                      const Rat& coeff,
                                      const std::vector<std::pair<int, Rat>>& pivot) {
  std::vector<std::pair<int, Rat>> out;
  out.reserve(row.size() + pivot.size());
  size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      Rat v = coeff * pivot[j].second;
      if (v != 0) out.emplace_back(pivot[j].first, v);
      ++j;
    } else {
      Rat v = row[i].second + coeff * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

// Deterministic sparse Gaussian elimination over Q: pivot on the least
// remaining column, choosing the sparsest row (ties by index).
int rank(const SparseMat& m) {
  std::vector<std::vector<std::pair<int, Rat>>> rows;
  for (const auto& r : m.entries)
    if (!r.empty()) rows.push_back(r);
  int rk = 0;
  while (!rows.empty()) {
    int pivot_col = m.cols;
    for (const auto& r : rows) pivot_col = std::min(pivot_col, r.front().first);
    int pick = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].front().first != pivot_col) continue;
      if (pick < 0 || rows[i].size() < rows[pick].size()) pick = static_cast<int>(i);
    }
    std::vector<std::pair<int, Rat>> pivot = std::move(rows[pick]);
    rows.erase(rows.begin() + pick);
    ++rk;
    Rat pval = pivot.front().second;
    std::vector<std::vector<std::pair<int, Rat>>> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      if (r.front().first == pivot_col) {
        Rat coeff = -r.front().second / pval;
        auto r2 = axpy(r, coeff, pivot);
        if (!r2.empty()) next.push_back(std::move(r2));
      } else {
        next.push_back(std::move(r));
      }
    }
    rows = std::move(next);
  }
  return rk;
}

// --- ChainComplex ------------------------------------------------------------

void ChainComplex::check_dd_zero() const {
  for (int d = 2; d <= top_dim(); ++d) {
    const SparseMat& hi = boundaries_[d];
    const SparseMat& lo = boundaries_[d - 1];
    for (int cell = 0; cell < cells_[d]; ++cell) {
      std::map<int, Rat> acc;
      for (const auto& [mid, a] : hi.entries[cell])
        for (const auto& [low, b] : lo.entries[mid]) acc[low] += a * b;
      for (const auto& [low, v] : acc)
        if (v != 0) throw LemmaViolation("boundary of boundary is nonzero");
    }
  }
}

ChainComplex ChainComplex::from_matrices(std::vector<int> cells_per_degree,
                                         std::vector<SparseMat> boundaries) {
  ChainComplex C;
  C.cells_ = std::move(cells_per_degree);
  C.boundaries_ = std::move(boundaries);
  if (C.boundaries_.size() != C.cells_.size())
    throw PreconditionError("chain complex: need one boundary matrix per degree");
  for (int d = 1; d <= C.top_dim(); ++d) {
    if (C.boundaries_[d].rows != C.cells_[d] || C.boundaries_[d].cols != C.cells_[d - 1])
      throw PreconditionError("chain complex: boundary matrix shape mismatch");
  }
  C.check_dd_zero();
  return C;
}

ChainComplex ChainComplex::from_simplicial(const SimplicialComplex& K) {
  int top = K.dim();
  std::vector<int> ncells(std::max(top + 1, 0), 0);
  std::vector<std::map<Simplex, int>> index(std::max(top + 1, 0));
  for (int d = 0; d <= top; ++d) {
    auto level = K.simplices_of_dim(d);  // lexicographically sorted (set order)
    ncells[d] = static_cast<int>(level.size());
    for (int i = 0; i < ncells[d]; ++i) index[d].emplace(level[i], i);
  }
  std::vector<SparseMat> bnd(std::max(top + 1, 0));
  for (int d = 1; d <= top; ++d) {
    bnd[d].rows = ncells[d];
    bnd[d].cols = ncells[d - 1];
    bnd[d].entries.assign(ncells[d], {});
    for (const auto& [s, row] : index[d]) {
      int sign = 1;
      for (size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        for (size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        bnd[d].add(row, index[d - 1].at(face), Rat(sign));
        sign = -sign;
      }
    }
  }
  if (top < 0) return from_matrices({}, {});
  return from_matrices(std::move(ncells), std::move(bnd));
}

ChainComplex ChainComplex::relative(const SimplicialComplex& K, const SimplicialComplex& A) {
  if (!A.is_subcomplex_of(K)) throw PreconditionError("relative: A is not a subcomplex of K");
  // quotient basis: simplices of K not in A
  auto in_A = [&](const Simplex& s) {
    Simplex t;
    for (int v : s) {
      int i = A.index_of(K.label(v));
      if (i < 0) return false;
      t.push_back(i);
    }
    std::sort(t.begin(), t.end());
    return A.contains(t);
  };
  int top = K.dim();
  std::vector<int> ncells(std::max(top + 1, 0), 0);
  std::vector<std::map<Simplex, int>> index(std::max(top + 1, 0));
  for (int d = 0; d <= top; ++d) {
    for (const auto& s : K.simplices_of_dim(d)) {
      if (!in_A(s)) index[d].emplace(s, ncells[d]++);
    }
  }
  std::vector<SparseMat> bnd(std::max(top + 1, 0));
  for (int d = 1; d <= top; ++d) {
    bnd[d].rows = ncells[d];
    bnd[d].cols = ncells[d - 1];
    bnd[d].entries.assign(ncells[d], {});
    for (const auto& [s, row] : index[d]) {
      int sign = 1;
      for (size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        for (size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        auto it = index[d - 1].find(face);
        if (it != index[d - 1].end()) bnd[d].add(row, it->second, Rat(sign));
        sign = -sign;
      }
    }
  }
  if (top < 0) return from_matrices({}, {});
  return from_matrices(std::move(ncells), std::move(bnd));
}

Rat ChainComplex::euler_characteristic() const {
  Rat chi = 0;
  for (int d = 0; d <= top_dim(); ++d) chi += Rat((d % 2) ? -cells_[d] : cells_[d]);
  return chi;
}

BettiVector betti(const ChainComplex& C) {
  int top = C.top_dim();
  if (top < 0) return BettiVector{};
  std::vector<int> rk(top + 2, 0);  // rk[d] = rank of boundary C_d -> C_{d-1}
  for (int d = 1; d <= top; ++d) rk[d] = rank(C.boundary(d));
  BettiVector b = BettiVector::zeros(top);
  for (int d = 0; d <= top; ++d) b.values[d] = Rat(C.cells(d) - rk[d] - rk[d + 1]);
  return b;
}

BettiVector betti(const SimplicialComplex& K) { return betti(ChainComplex::from_simplicial(K)); }

BettiVector relative_betti(const SimplicialComplex& K, const SimplicialComplex& A) {
  return betti(ChainComplex::relative(K, A));
}

// --- GHS / GHD ---------------------------------------------------------------

bool is_GHS(const SimplicialComplex& S, int n) {
  if (n < 0) return S.dim() == -1;
  if (S.dim() != n) throw PreconditionError("is_GHS: complex dimension != n");
  if (!betti(S).same_values(sphere_betti(n))) return false;
  // homology n-manifold: the link of each k-simplex has the homology of
  // S^{n-k-1}
  for (const auto& s : S.simplices()) {
    int k = static_cast<int>(s.size()) - 1;
    SimplicialComplex lk = S.link(s);
    if (!betti(lk).same_values(sphere_betti(n - k - 1))) return false;
  }
  return true;
}

bool is_GHD(const SimplicialComplex& D, const SimplicialComplex& boundary, int n) {
  if (!boundary.is_subcomplex_of(D)) throw PreconditionError("is_GHD: boundary not a subcomplex");
  if (n < 0) return false;
  if (D.dim() != n) throw PreconditionError("is_GHD: complex dimension != n");

  BettiVector expected = BettiVector::zeros(n);
  expected.values[n] = 1;
  if (!relative_betti(D, boundary).same_values(expected)) return false;

  auto boundary_has = [&](const Vertex& v) { return boundary.index_of(v) >= 0; };
  for (int vi = 0; vi < D.size(); ++vi) {
    const Vertex& v = D.label(vi);
    Simplex s{vi};
    if (!D.contains(s)) continue;  // label unused by any simplex
    SimplicialComplex lk = D.link(s);
    if (!boundary_has(v)) {
      if (!is_GHS(lk, n - 1)) return false;
    } else {
      SimplicialComplex lk_bnd = simplicial_intersection(lk, boundary);
      if (lk.dim() != n - 1) return false;
      if (!is_GHD(lk, lk_bnd, n - 1)) return false;
    }
  }
  return true;
}

bool is_pseudomanifold(const SimplicialComplex& L) {
  if (!L.is_pure()) throw PreconditionError("is_pseudomanifold: complex is not pure");
  int n = L.dim();
  if (n < 1) {
    // a pure 0-complex is a set of points; "each (-1)-cell in two 0-cells"
    // degenerates to |vertices| == 2
    return n == 0 && L.simplices_of_dim(0).size() == 2;
  }
  std::map<Simplex, int> coface_count;
  for (const auto& top : L.simplices_of_dim(n)) {
    for (size_t i = 0; i < top.size(); ++i) {
      Simplex face;
      for (size_t j = 0; j < top.size(); ++j)
        if (j != i) face.push_back(top[j]);
      coface_count[face]++;
    }
  }
  for (const auto& s : L.simplices_of_dim(n - 1))
    if (coface_count[s] != 2) return false;
  return true;
}

bool spherical_links_codim(const SimplicialComplex& L, int m) {
  if (!L.is_pure()) throw PreconditionError("spherical_links_codim: complex is not pure");
  int n = L.dim();
  for (int i = 1; i <= std::min(m, n + 1); ++i) {
    int d = n - i;  // simplex dimension under test; d = -1 means the empty simplex
    if (d < -1) break;
    if (d == -1) {
      if (!is_GHS(L, n)) return false;
      continue;
    }
    for (const auto& s : L.simplices_of_dim(d)) {
      SimplicialComplex lk = L.link(s);
      if (lk.dim() != i - 1) return false;
      if (!is_GHS(lk, i - 1)) return false;
    }
  }
  return true;
}

// --- homology ball -----------------------------------------------------------

std::string BallReport::str() const {
  std::ostringstream os;
  os << (is_ball() ? "homology-ball" : "not-a-ball") << " (connected=" << connected
     << ", point-homology=" << point_homology << ", collapsed=" << collapsed << ")";
  return os.str();
}

namespace {

bool greedy_collapse(const SimplicialComplex& K, const CollapsePriority& priority) {
  std::set<Simplex> alive(K.simplices().begin(), K.simplices().end());
  auto key = [&](const Simplex& s) -> long long {
    if (!priority) return 0;
    std::vector<Vertex> vs;
    for (int v : s) vs.push_back(K.label(v));
    return priority(vs);
  };
  for (;;) {
    if (alive.size() == 1 && alive.begin()->size() == 1) return true;
    // find the best free pair (tau, sigma): sigma the unique proper coface
    bool found = false;
    std::tuple<long long, long long, Simplex, Simplex> best;
    for (const auto& tau : alive) {
      const Simplex* coface = nullptr;
      int count = 0;
      for (const auto& s : alive) {
        if (s.size() <= tau.size()) continue;
        if (std::includes(s.begin(), s.end(), tau.begin(), tau.end())) {
          ++count;
          if (count > 1) break;
          coface = &s;
        }
      }
      if (count == 1) {
        std::tuple<long long, long long, Simplex, Simplex> cand{key(*coface), key(tau), *coface,
                                                                tau};
        if (!found || cand < best) {
          best = cand;
          found = true;
        }
      }
    }
    if (!found) return false;
    alive.erase(std::get<2>(best));
    alive.erase(std::get<3>(best));
  }
}

}  // namespace

BallReport homology_ball_report(const SimplicialComplex& K, const CollapsePriority& priority) {
  BallReport r;
  if (K.dim() < 0) return r;
  BettiVector b = betti(K);
  r.connected = (b.at(0) == 1);
  BettiVector point = BettiVector::zeros(0);
  point.values[0] = 1;
  r.point_homology = b.same_values(point);
  r.collapsed = greedy_collapse(K, priority);
  return r;
}

}  // namespace racg
