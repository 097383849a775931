#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "racg/simplicial.hpp"

namespace racg {

namespace {

// Canonical labeling by color refinement with individualization backtracking.
// The branching classes in this corpus (vertex-transitive polytopes, joins)
// are small; twin detection keeps edgeless and complete classes linear.
struct CanonSearch {
  int n;
  const std::vector<std::vector<char>>* adj;
  std::string best;
  bool have_best = false;

  void refine(std::vector<int>& color) const {
    for (;;) {
      std::vector<std::pair<std::vector<int>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (int u = 0; u < n; ++u)
          if ((*adj)[v][u]) nb.push_back(color[u]);
        std::sort(nb.begin(), nb.end());
        nb.insert(nb.begin(), color[v]);
        sig[v] = {std::move(nb), v};
      }
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return sig[a].first < sig[b].first; });
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++c;
        next[order[i]] = c;
      }
      if (next == color) return;
      color = std::move(next);
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return color[a] < color[b]; });
    std::string s;
    s.reserve(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s.push_back((*adj)[perm[i]][perm[j]] ? '1' : '0');
    if (!have_best || s < best) {
      best = std::move(s);
      have_best = true;
    }
  }

  void run(std::vector<int> color) {
    refine(color);
    // find the first non-singleton color class
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
    const std::vector<int>* target = nullptr;
    for (const auto& [c, vs] : classes) {
      if (vs.size() > 1) {
        target = &vs;
        break;
      }
    }
    if (!target) {
      leaf(color);
      return;
    }
    // twins (identical neighborhoods off the class) are interchangeable:
    // individualizing any one of them suffices
    auto nbset = [&](int v) {
      std::vector<char> row = (*adj)[v];
      row[v] = 0;
      for (int u : *target) row[u] = 0;
      return row;
    };
    bool all_twins = true;
    for (size_t i = 1; i < target->size() && all_twins; ++i) {
      if (nbset((*target)[i]) != nbset((*target)[0])) all_twins = false;
      for (size_t j = 0; j < i && all_twins; ++j) {
        // within-class adjacency must be homogeneous as well
        if ((*adj)[(*target)[i]][(*target)[j]] != (*adj)[(*target)[1]][(*target)[0]])
          all_twins = false;
      }
    }
    int fresh = n + 1;
    if (all_twins) {
      std::vector<int> c2 = color;
      c2[(*target)[0]] = fresh;
      run(std::move(c2));
      return;
    }
    for (int v : *target) {
      std::vector<int> c2 = color;
      c2[v] = fresh;
      run(std::move(c2));
    }
  }
};

std::string canon_colored(int n, const std::vector<std::vector<char>>& adj,
                          std::vector<int> init_color) {
  CanonSearch cs;
  cs.n = n;
  cs.adj = &adj;
  // normalize initial colors to a dense range
  std::vector<int> sorted = init_color;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int& c : init_color) {
    c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  }
  // the color histogram is iso-invariant, include it in the result
  std::vector<int> hist(sorted.size(), 0);
  for (int c : init_color) hist[c]++;
  std::string prefix = std::to_string(n) + ":";
  for (int h : hist) prefix += std::to_string(h) + ",";
  prefix += ";";
  cs.run(init_color);
  return prefix + (cs.have_best ? cs.best : std::string());
}

}  // namespace

std::string canonical_form(const FlagComplex& L) {
  int n = L.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [i, j] : L.edge_list()) adj[i][j] = adj[j][i] = 1;
  return canon_colored(n, adj, std::vector<int>(n, 0));
}

bool isomorphic(const FlagComplex& A, const FlagComplex& B) {
  if (A.size() != B.size() || A.num_edges() != B.num_edges()) return false;
  return canonical_form(A) == canonical_form(B);
}

bool isomorphic(const SimplicialComplex& A, const SimplicialComplex& B) {
  if (A.size() != B.size() || A.f_vector() != B.f_vector()) return false;
  // Encode each complex as a vertex/maximal-simplex incidence graph with
  // node colors (vertex, or maximal simplex keyed by dimension); a complex
  // isomorphism is exactly an isomorphism of these colored graphs.
  auto encode = [](const SimplicialComplex& K) {
    auto maximal = K.maximal_simplices();
    int n = K.size() + static_cast<int>(maximal.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<int> color(n, 0);
    for (size_t m = 0; m < maximal.size(); ++m) {
      int node = K.size() + static_cast<int>(m);
      color[node] = 1 + static_cast<int>(maximal[m].size());
      for (int v : maximal[m]) adj[node][v] = adj[v][node] = 1;
    }
    return canon_colored(n, adj, color);
  };
  return encode(A) == encode(B);
}

}  // namespace racg
