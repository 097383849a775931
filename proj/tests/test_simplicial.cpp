#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "racg/errors.hpp"
#include "racg/simplicial.hpp"

using namespace racg;

namespace {

// independent clique counter: brute force over all vertex subsets
FVector brute_force_f(const FlagComplex& L) {
  int n = L.size();
  REQUIRE(n <= 20);
  std::vector<Int> counts{1};
  for (long long mask = 1; mask < (1LL << n); ++mask) {
    std::vector<int> vs;
    for (int i = 0; i < n; ++i)
      if (mask & (1LL << i)) vs.push_back(i);
    bool clique = true;
    for (size_t i = 0; i < vs.size() && clique; ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!L.adjacent(vs[i], vs[j])) {
          clique = false;
          break;
        }
    if (clique) {
      if (counts.size() <= vs.size()) counts.resize(vs.size() + 1, 0);
      counts[vs.size()] += 1;
    }
  }
  return FVector{counts};
}

FlagComplex random_flag_complex(std::mt19937& rng, int n, double p) {
  std::vector<Vertex> labels;
  for (int i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(labels[i], labels[j]);
  return FlagComplex(labels, edges);
}

}  // namespace

TEST_CASE("f-vector: frozen examples and brute-force oracle") {
  CHECK(empty_complex().f_vector() == FVector{{1}});
  CHECK(mgon(5).f_vector() == FVector{{1, 5, 5}});
  CHECK(octahedron_boundary().f_vector() == FVector{{1, 6, 12, 8}});
  CHECK(icosahedron_boundary().f_vector() == FVector{{1, 12, 30, 20}});

  std::mt19937 rng(12345);
  for (int t = 0; t < 20; ++t) {
    FlagComplex L = random_flag_complex(rng, 3 + t % 8, 0.4);
    CHECK(L.f_vector() == brute_force_f(L));
  }
}

TEST_CASE("is_flag") {
  // hollow triangle: the defining counterexample
  SimplicialComplex hollow = SimplicialComplex::from_maximal(
      {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_FALSE(is_flag(hollow));

  CHECK(is_flag(SimplicialComplex::from_flag(mgon(4))));

  // barycentric subdivision of a solid triangle is flag
  SimplicialComplex tri = SimplicialComplex::from_maximal({"a", "b", "c"}, {{"a", "b", "c"}});
  std::vector<Vertex> bary_labels;
  std::vector<std::vector<Vertex>> chains;
  std::vector<Simplex> simps(tri.simplices().begin(), tri.simplices().end());
  auto name = [&](const Simplex& s) {
    std::string n = "b";
    for (int v : s) n += tri.label(v);
    return n;
  };
  for (const auto& s : simps) bary_labels.push_back(name(s));
  // maximal chains: vertex < edge < triangle
  for (const auto& s1 : simps)
    for (const auto& s2 : simps)
      for (const auto& s3 : simps) {
        if (s1.size() == 1 && s2.size() == 2 && s3.size() == 3 &&
            std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()) &&
            std::includes(s3.begin(), s3.end(), s2.begin(), s2.end()))
          chains.push_back({name(s1), name(s2), name(s3)});
      }
  CHECK(is_flag(SimplicialComplex::from_maximal(bary_labels, chains)));
}

TEST_CASE("link") {
  FlagComplex oct = octahedron_boundary();
  // link of any vertex of the octahedron is a 4-gon
  FlagComplex lk = link_of_vertex(oct, oct.label(0));
  CHECK(lk.size() == 4);
  CHECK(isomorphic(lk, mgon(4)));

  // link of the empty simplex is the complex itself
  FlagComplex l_empty = link(oct, Simplex{});
  CHECK(l_empty.same_labeled_graph(oct));

  // link of an edge of the icosahedron: two disjoint points
  FlagComplex ico = icosahedron_boundary();
  auto e = ico.cliques()[1][0];
  FlagComplex elk = link(ico, e);
  CHECK(elk.size() == 2);
  CHECK(elk.num_edges() == 0);

  CHECK_THROWS_AS(link(oct, Simplex{0, 1}), PreconditionError);  // antipodal: not a simplex
}

TEST_CASE("full subcomplex and minus") {
  FlagComplex pent = mgon(5);
  FlagComplex path = minus(pent, {"g0"});
  CHECK(path.size() == 4);
  CHECK(path.num_edges() == 3);

  CHECK(full_subcomplex(pent, pent.labels()).same_labeled_graph(pent));

  FlagComplex oct = octahedron_boundary();
  FlagComplex disk = minus(oct, {oct.label(0)});
  CHECK(disk.f_vector() == FVector{{1, 5, 8, 4}});

  // minus(L, T) = full_subcomplex on the complementary vertices
  std::vector<Vertex> rest;
  for (const auto& v : oct.labels())
    if (v != oct.label(0)) rest.push_back(v);
  CHECK(disk.same_labeled_graph(full_subcomplex(oct, rest)));
}

TEST_CASE("join, cone, suspension") {
  FlagComplex square = join(points_complex(2), points_complex(2));
  CHECK(isomorphic(square, mgon(4)));

  FlagComplex pt = cone(empty_complex());
  CHECK(pt.size() == 1);

  // f-vector convolution identity
  std::mt19937 rng(99);
  for (int t = 0; t < 10; ++t) {
    FlagComplex a = random_flag_complex(rng, 2 + t % 4, 0.5);
    FlagComplex b = random_flag_complex(rng, 2 + (t + 2) % 4, 0.5);
    FVector fa = a.f_vector(), fb = b.f_vector(), fj = join(a, b).f_vector();
    for (int k = -1; k <= fj.dim(); ++k) {
      Int expect = 0;
      for (int i = -1; i <= k; ++i) expect += fa.f(i) * fb.f(k - 1 - i);
      CHECK(fj.f(k) == expect);
    }
  }

  // join associativity/commutativity up to isomorphism
  FlagComplex x = mgon(4), y = points_complex(3), z = simplex_complex(1);
  CHECK(isomorphic(join(join(x, y), z), join(x, join(y, z))));
  CHECK(isomorphic(join(x, y), join(y, x)));

  CHECK(isomorphic(suspension(mgon(4)), octahedron_boundary()));
}

TEST_CASE("double along a vertex") {
  CHECK(isomorphic(double_along_vertex(mgon(4), "g0"), mgon(4)));
  CHECK(isomorphic(double_along_vertex(mgon(5), "g0"), mgon(6)));

  // doubling the octahedron across a suspension point gives it back
  FlagComplex oct = octahedron_boundary();
  CHECK(isomorphic(double_along_vertex(oct, oct.label(0)), oct));

  // vertex count 2|L - v| - |L_v|, and the double is flag by construction
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    FlagComplex L = random_flag_complex(rng, 4 + t % 5, 0.5);
    Vertex v = L.label(t % L.size());
    FlagComplex d = double_along_vertex(L, v);
    int lv = static_cast<int>(link_of_vertex(L, v).size());
    CHECK(d.size() == 2 * (L.size() - 1) - lv);
  }

  CHECK_THROWS_AS(double_along_vertex(mgon(4), "nope"), PreconditionError);
}

TEST_CASE("links of flag complexes are flag and full") {
  std::mt19937 rng(4242);
  for (int t = 0; t < 15; ++t) {
    FlagComplex L = random_flag_complex(rng, 4 + t % 6, 0.5);
    for (int v = 0; v < L.size(); ++v) {
      FlagComplex lk = link_of_vertex(L, L.label(v));
      CHECK(is_flag(SimplicialComplex::from_flag(lk)));
      CHECK(lk.same_labeled_graph(full_subcomplex(L, lk.labels())));
    }
  }
}

TEST_CASE("4-circuits and empty 4-circuits") {
  // octahedron: every 4-cycle is a vertex link, none empty
  FlagComplex oct = octahedron_boundary();
  CHECK(all_4_circuits(oct).size() == 3);  // three equatorial squares
  CHECK(empty_circuits_4(oct).empty());

  // icosahedron: 4-cycles exist but all bound two adjacent triangles
  FlagComplex ico = icosahedron_boundary();
  CHECK(empty_circuits_4(ico).empty());
  for (const auto& c : all_4_circuits(ico)) {
    bool diag = ico.adjacent(c.cyc[0], c.cyc[2]) || ico.adjacent(c.cyc[1], c.cyc[3]);
    CHECK(diag);
  }

  // valence
  CHECK(valence(oct, oct.label(0)) == 4);
  CHECK(valence(ico, ico.label(0)) == 5);
}

TEST_CASE("isomorphism on regular pairs") {
  CHECK(isomorphic(mgon(6), mgon(6)));
  CHECK_FALSE(isomorphic(mgon(6), mgon(7)));
  CHECK_FALSE(isomorphic(mgon(6), disjoint_union(mgon(3), mgon(3))));
  CHECK_FALSE(isomorphic(complete_bipartite(3, 3), mgon(6)));  // same f-vector in low dims
  CHECK(isomorphic(complete_bipartite(2, 2), mgon(4)));

  // relabeled copies are isomorphic
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    FlagComplex L = random_flag_complex(rng, 6, 0.5);
    std::vector<int> perm(6);
    for (int i = 0; i < 6; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Vertex> labels(6);
    for (int i = 0; i < 6; ++i) labels[perm[i]] = "x" + std::to_string(i);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto [i, j] : L.edge_list()) edges.emplace_back(labels[perm[i]], labels[perm[j]]);
    // scramble vertex order too
    std::sort(labels.begin(), labels.end());
    CHECK(isomorphic(L, FlagComplex(labels, edges)));
  }
}

TEST_CASE("simplicial complex basics") {
  SimplicialComplex K =
      SimplicialComplex::from_maximal({"a", "b", "c", "d"}, {{"a", "b", "c"}, {"c", "d"}});
  CHECK(K.dim() == 2);
  CHECK_FALSE(K.is_pure());
  CHECK(K.f_vector() == FVector{{1, 4, 4, 1}});
  CHECK(K.maximal_simplices().size() == 2);

  SimplicialComplex lk = K.link(K.simplices_of_dim(0)[2]);  // link of "c"
  CHECK(lk.f_vector() == FVector{{1, 3, 1}});

  CHECK(SimplicialComplex::from_flag(mgon(4)).is_pure());
}
