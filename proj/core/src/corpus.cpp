#include "racg/corpus.hpp"

#include <sstream>

#include "racg/errors.hpp"
#include "racg/json_io.hpp"
#include "racg/sphere2.hpp"

namespace racg {

namespace {

FVector fv(std::vector<long> counts) {
  FVector f;
  for (long c : counts) f.counts.push_back(Int(c));
  return f;
}

FlagComplex composite_5_5() {
  FlagComplex s5 = suspension(mgon(5));
  std::vector<std::pair<Vertex, Vertex>> matching;
  for (const auto& v : link_cycle(s5, "g0")) matching.emplace_back(v, v);
  return square_compose(s5, "g0", s5, "g0", matching);
}

int parse_int(const std::string& s) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw ParseError("trailing characters");
    return v;
  } catch (...) {
    throw ParseError("bad integer in corpus name: '" + s + "'");
  }
}

std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '-')) parts.push_back(tok);
  return parts;
}

FVector convolve(const FVector& a, const FVector& b) {
  FVector out;
  out.counts.assign(a.counts.size() + b.counts.size() - 1, 0);
  for (size_t i = 0; i < a.counts.size(); ++i)
    for (size_t j = 0; j < b.counts.size(); ++j) out.counts[i + j] += a.counts[i] * b.counts[j];
  return out;
}

}  // namespace

std::vector<std::string> corpus_names() {
  return {"empty",      "point",     "s0",        "square",          "pentagon",
          "hexagon",    "octahedron", "icosahedron", "k33",          "pentagon-join-pentagon",
          "susp-pentagon", "composite-5-5"};
}

CorpusEntry corpus_entry(const std::string& name) {
  if (name == "empty") return {name, empty_complex(), fv({1}), "the empty complex"};
  if (name == "point") return {name, simplex_complex(0), fv({1, 1}), "a single vertex"};
  if (name == "s0") return {name, points_complex(2), fv({1, 2}), "two points, S^0"};
  if (name == "square") return {name, mgon(4), fv({1, 4, 4}), "4-gon"};
  if (name == "pentagon") return {name, mgon(5), fv({1, 5, 5}), "5-gon"};
  if (name == "hexagon") return {name, mgon(6), fv({1, 6, 6}), "6-gon"};
  if (name == "octahedron")
    return {name, octahedron_boundary(), fv({1, 6, 12, 8}), "boundary of the octahedron"};
  if (name == "icosahedron")
    return {name, icosahedron_boundary(), fv({1, 12, 30, 20}), "boundary of the icosahedron"};
  if (name == "k33")
    return {name, complete_bipartite(3, 3), fv({1, 6, 9}), "K_{3,3}, join of 3 and 3 points"};
  if (name == "pentagon-join-pentagon")
    return {name, join(mgon(5), mgon(5)), fv({1, 10, 35, 50, 25}), "join of two 5-gons"};
  if (name == "susp-pentagon")
    return {name, suspension(mgon(5)), fv({1, 7, 15, 10}), "suspension of the 5-gon"};
  if (name == "composite-5-5")
    return {name, composite_5_5(), fv({1, 8, 18, 12}),
            "square composite of two suspended 5-gons"};

  auto parts = split_params(name);
  if (parts.size() == 2 && parts[0] == "mgon") {
    int m = parse_int(parts[1]);
    return {name, mgon(m), fv({1, m, m}), "m-gon"};
  }
  if (parts.size() == 2 && parts[0] == "points") {
    int k = parse_int(parts[1]);
    return {name, points_complex(k), fv({1, k}), "k isolated points"};
  }
  if (parts.size() == 2 && parts[0] == "simplex") {
    int k = parse_int(parts[1]);
    FlagComplex s = simplex_complex(k);
    return {name, s, s.f_vector(), "full simplex"};
  }
  if (parts.size() == 3 && parts[0] == "kmn") {
    int m = parse_int(parts[1]), n = parse_int(parts[2]);
    return {name, complete_bipartite(m, n), fv({1, m + n, static_cast<long>(m) * n}),
            "complete bipartite join of point sets"};
  }
  if (parts.size() == 3 && parts[0] == "susp" && parts[1] == "mgon") {
    int m = parse_int(parts[2]);
    return {name, suspension(mgon(m)), convolve(fv({1, m, m}), fv({1, 2})),
            "suspension of the m-gon"};
  }
  if (parts.size() == 4 && parts[0] == "join" && parts[1] == "mgon") {
    int m = parse_int(parts[2]), n = parse_int(parts[3]);
    return {name, join(mgon(m), mgon(n)), convolve(fv({1, m, m}), fv({1, n, n})),
            "join of two polygons"};
  }
  throw ParseError("unknown corpus entry '" + name + "'");
}

FlagComplex resolve_flag_complex(const std::string& uri, bool assume_flag) {
  if (uri.rfind("corpus:", 0) == 0) return corpus_entry(uri.substr(7)).complex;
  return flag_complex_from_json(read_text_file(uri), assume_flag);
}

}  // namespace racg
