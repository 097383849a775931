#include "racg/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "racg/errors.hpp"

namespace racg {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json flag_json(const FlagComplex& L) {
  json j;
  j["format"] = "flag-graph";
  j["vertices"] = L.labels();
  json edges = json::array();
  for (const auto& [a, b] : L.labeled_edges()) edges.push_back(json::array({a, b}));
  j["edges"] = edges;
  return j;
}

FlagComplex flag_from(const json& j) {
  if (!j.contains("vertices") || !j.contains("edges"))
    throw ParseError("flag-graph: missing 'vertices' or 'edges'");
  std::vector<Vertex> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) throw ParseError("flag-graph: vertices must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw ParseError("flag-graph: edge must be a pair");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return FlagComplex(vertices, edges);
}

json simplicial_json(const SimplicialComplex& K) {
  json j;
  j["format"] = "simplicial";
  j["vertices"] = K.labels();
  json maximal = json::array();
  for (const auto& s : K.maximal_simplices()) {
    json one = json::array();
    for (int v : s) one.push_back(K.label(v));
    maximal.push_back(one);
  }
  j["maximal_simplices"] = maximal;
  return j;
}

SimplicialComplex simplicial_from(const json& j) {
  if (!j.contains("maximal_simplices")) throw ParseError("simplicial: missing 'maximal_simplices'");
  std::vector<std::vector<Vertex>> maximal;
  std::vector<Vertex> vertices;
  std::set<Vertex> seen;
  if (j.contains("vertices"))
    for (const auto& v : j["vertices"]) {
      vertices.push_back(v.get<std::string>());
      seen.insert(vertices.back());
    }
  for (const auto& s : j["maximal_simplices"]) {
    if (!s.is_array()) throw ParseError("simplicial: simplex must be an array");
    std::vector<Vertex> one;
    for (const auto& v : s) {
      one.push_back(v.get<std::string>());
      if (seen.insert(one.back()).second) vertices.push_back(one.back());
    }
    maximal.push_back(one);
  }
  return SimplicialComplex::from_maximal(vertices, maximal);
}

}  // namespace

std::string flag_to_json(const FlagComplex& L) { return flag_json(L).dump(2); }

std::string simplicial_to_json(const SimplicialComplex& K) { return simplicial_json(K).dump(2); }

FlagComplex flag_complex_from_json(const std::string& text, bool assume_flag) {
  json j = parse(text);
  std::string format = j.value("format", "flag-graph");
  if (format == "flag-graph") return flag_from(j);
  if (format == "simplicial") {
    SimplicialComplex K = simplicial_from(j);
    if (!assume_flag && !is_flag(K))
      throw PreconditionError(
          "simplicial input is not a flag complex (pass --assume-flag to take the clique "
          "complex of its 1-skeleton)");
    return K.skeleton_graph();
  }
  throw ParseError("unknown format '" + format + "'");
}

SimplicialComplex simplicial_from_json(const std::string& text) {
  json j = parse(text);
  std::string format = j.value("format", "simplicial");
  if (format == "simplicial") return simplicial_from(j);
  if (format == "flag-graph") return SimplicialComplex::from_flag(flag_from(j));
  throw ParseError("unknown format '" + format + "'");
}

// --- certificates ---------------------------------------------------------------

namespace {

json cert_json(const Certificate& c) {
  json j;
  j["kind"] = c.kind_str();
  j["complex"] = flag_json(c.complex);
  switch (c.kind) {
    case Certificate::Kind::SuspensionOf4or5Gon:
      j["m"] = c.m;
      break;
    case Certificate::Kind::SquareDecomposition: {
      j["circuit"] = c.circuit;
      json children = json::array();
      for (const auto& ch : c.children) children.push_back(cert_json(*ch));
      j["children"] = children;
      break;
    }
    case Certificate::Kind::AndreevBase: {
      j["valence4"] = c.valence4;
      j["checks"] = {{"intersections_are_cells", c.checks.intersections_are_cells},
                     {"no_empty_3_circuits", c.checks.no_empty_3_circuits},
                     {"four_circuits_bounded", c.checks.four_circuits_bounded},
                     {"no_m5_configuration", c.checks.no_m5_configuration}};
      break;
    }
  }
  return j;
}

Certificate cert_from(const json& j) {
  Certificate c;
  std::string kind = j.at("kind").get<std::string>();
  c.complex = flag_from(j.at("complex"));
  if (kind == "suspension-of-4-or-5-gon") {
    c.kind = Certificate::Kind::SuspensionOf4or5Gon;
    c.m = j.at("m").get<int>();
  } else if (kind == "square-decomposition") {
    c.kind = Certificate::Kind::SquareDecomposition;
    for (const auto& v : j.at("circuit")) c.circuit.push_back(v.get<std::string>());
    for (const auto& ch : j.at("children"))
      c.children.push_back(std::make_shared<Certificate>(cert_from(ch)));
  } else if (kind == "andreev-base") {
    c.kind = Certificate::Kind::AndreevBase;
    for (const auto& v : j.at("valence4")) c.valence4.push_back(v.get<std::string>());
    const auto& chk = j.at("checks");
    c.checks.intersections_are_cells = chk.at("intersections_are_cells").get<bool>();
    c.checks.no_empty_3_circuits = chk.at("no_empty_3_circuits").get<bool>();
    c.checks.four_circuits_bounded = chk.at("four_circuits_bounded").get<bool>();
    c.checks.no_m5_configuration = chk.at("no_m5_configuration").get<bool>();
  } else {
    throw ParseError("unknown certificate kind '" + kind + "'");
  }
  return c;
}

}  // namespace

std::string certificate_to_json(const Certificate& c) {
  json j = cert_json(c);
  j["format"] = "s2-certificate";
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  json j = parse(text);
  if (j.value("format", "") != "s2-certificate")
    throw ParseError("not an s2-certificate file");
  return cert_from(j);
}

// --- cubical exports --------------------------------------------------------------

std::string cubical_to_json(const CubicalComplex& X) {
  json j;
  j["format"] = "cubical";
  json dims = json::array();
  for (int d = 0; d <= X.top_dim(); ++d) {
    json layer = json::array();
    for (const auto& c : X.cells(d)) {
      json cell;
      cell["key"] = c.key;
      cell["vertices"] = c.vertices;
      layer.push_back(cell);
    }
    dims.push_back(layer);
  }
  j["cells"] = dims;
  return j.dump(2);
}

std::string cubical_to_off(const CubicalComplex& X) {
  std::ostringstream os;
  std::map<std::string, int> vid;
  const auto& verts = X.cells(0);
  for (size_t i = 0; i < verts.size(); ++i) vid[verts[i].key] = static_cast<int>(i);
  long long ncells = 0;
  for (int d = 1; d <= X.top_dim(); ++d) ncells += X.num_cells(d);
  os << "# OFF-like cubical cell listing\n";
  os << verts.size() << " " << ncells << "\n";
  for (const auto& v : verts) {
    // sign-vector keys become coordinates, anything else gets zeros
    bool signs = !v.key.empty() && v.key.find_first_not_of("+-") == std::string::npos;
    if (signs) {
      for (size_t i = 0; i < v.key.size(); ++i) os << (i ? " " : "") << (v.key[i] == '+' ? 1 : -1);
    } else {
      os << 0;
    }
    os << "  # " << v.key << "\n";
  }
  for (int d = 1; d <= X.top_dim(); ++d) {
    for (const auto& c : X.cells(d)) {
      os << c.vertices.size();
      for (const auto& v : c.vertices) os << " " << vid.at(v);
      os << "  # dim " << d << " " << c.key << "\n";
    }
  }
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path);
  out << content;
}

}  // namespace racg
