#include "qsurf/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

namespace qsurf {

namespace {

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  return obj.at(key);
}

std::string string_of(const Json& value, const std::string& where) {
  if (!value.is_string()) throw ParseError(where + ": expected a string");
  return value.get<std::string>();
}

Integer integer_of(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Integer(std::to_string(value.get<long long>()));
  if (value.is_number_unsigned()) return Integer(std::to_string(value.get<unsigned long long>()));
  if (value.is_string()) {
    Integer out;
    if (out.set_str(value.get<std::string>(), 10) != 0) throw ParseError(where + ": bad integer");
    return out;
  }
  throw ParseError(where + ": expected an integer coefficient");
}

Rational rational_of(const Json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(std::to_string(value.get<long long>()));
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  throw ParseError(where + ": expected a rational as \"p/q\" or an integer");
}

GroupWord word_of(const Json& value, const std::string& where) {
  try {
    return parse_word(string_of(value, where));
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
}

int generator_token(const std::string& key, int rank) {
  const GroupWord w = parse_word(key);
  if (w.size() != 1 || w[0].sign != 1) throw ParseError("expected a generator token, got '" + key + "'");
  if (w[0].index >= rank) throw ParseError("generator '" + key + "' is not in the presentation");
  return w[0].index;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError("JSON parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

QuasiSurfaceSpec parse_spec(const std::string& text) {
  const Json j = parse_json(text);
  QuasiSurfaceSpec spec;
  const Json& disks = field(j, "disks", "spec");
  if (!disks.is_array()) throw ParseError("spec: 'disks' must be a list");
  for (std::size_t d = 0; d < disks.size(); ++d) {
    const std::string where = "disk " + std::to_string(d + 1);
    const Json& gates = field(disks[d], "gates", where);
    if (!gates.is_array()) throw ParseError(where + ": 'gates' must be a list");
    DiskSpec disk;
    for (const Json& g : gates) disk.gates.push_back(string_of(g, where));
    spec.disks.push_back(std::move(disk));
  }
  const Json& graph = field(j, "graph", "spec");
  const Json& vertices = field(graph, "vertices", "graph");
  if (!vertices.is_array()) throw ParseError("graph: 'vertices' must be a list");
  for (const Json& v : vertices) spec.vertices.push_back(string_of(v, "graph vertices"));
  if (graph.contains("edges")) {
    const Json& edges = graph.at("edges");
    if (!edges.is_array()) throw ParseError("graph: 'edges' must be a list");
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const std::string where = "edge " + std::to_string(e + 1);
      GraphEdgeSpec edge;
      if (edges[e].contains("id")) edge.id = string_of(edges[e].at("id"), where);
      edge.from = string_of(field(edges[e], "from", where), where);
      edge.to = string_of(field(edges[e], "to", where), where);
      spec.edges.push_back(std::move(edge));
    }
  }
  const Json& gluing = field(j, "gluing", "spec");
  if (!gluing.is_object()) throw ParseError("spec: 'gluing' must be an object");
  for (const auto& [gate, vertex] : gluing.items()) spec.gluing[gate] = string_of(vertex, "gluing");
  spec.basepoint = string_of(field(j, "basepoint", "spec"), "basepoint");
  return spec;
}

QuasiSurfaceSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

Json spec_to_json(const QuasiSurfaceSpec& spec) {
  Json j;
  j["disks"] = Json::array();
  for (const DiskSpec& d : spec.disks) j["disks"].push_back({{"gates", d.gates}});
  j["graph"]["vertices"] = spec.vertices;
  j["graph"]["edges"] = Json::array();
  for (const GraphEdgeSpec& e : spec.edges) j["graph"]["edges"].push_back({{"id", e.id}, {"from", e.from}, {"to", e.to}});
  j["gluing"] = Json::object();
  for (const DiskSpec& d : spec.disks)
    for (const std::string& g : d.gates)
      if (auto it = spec.gluing.find(g); it != spec.gluing.end()) j["gluing"][g] = it->second;
  j["basepoint"] = spec.basepoint;
  return j;
}

Json to_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<long long>(value.get_si()));
  return Json(value.get_str());
}

Json to_json(const LoopCombination& x) {
  Json out = Json::array();
  for (const auto& [cls, coeff] : x) out.push_back(Json::array({to_json(coeff), format_word(cls)}));
  return out;
}

Json to_json(const GroupRingElement& x) {
  Json out = Json::array();
  for (const auto& [word, coeff] : x) out.push_back(Json::array({to_json(coeff), format_word(word)}));
  return out;
}

Json to_json(const FoxDerivative& d) {
  Json out = Json::object();
  for (int g = 0; g < d.rank(); ++g) out["g" + std::to_string(g + 1)] = to_json(d.images[static_cast<std::size_t>(g)]);
  return out;
}

Json to_json(const MatrixQ& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

GroupRingElement parse_ring_element(const Json& value) {
  if (!value.is_array()) throw ParseError("expected a list of [coefficient, word] pairs");
  GroupRingElement out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    const std::string where = "term " + std::to_string(i + 1);
    const Json& term = value[i];
    if (!term.is_array() || term.size() != 2) throw ParseError(where + ": expected [coefficient, word]");
    out.add(reduce_word(word_of(term[1], where)), integer_of(term[0], where));
  }
  return out;
}

LoopCombination parse_loop_expression(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '[') return project_p(parse_ring_element(parse_json(text)));
  try {
    return loop_element(parse_word(text));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

FoxDerivative parse_fox_derivative(const Json& value, int rank) {
  if (!value.is_object()) throw ParseError("a Fox derivative is an object from generator to element");
  FoxDerivative d;
  d.images.resize(static_cast<std::size_t>(rank));
  for (const auto& [key, image] : value.items())
    d.images[static_cast<std::size_t>(generator_token(key, rank))] = parse_ring_element(image);
  return d;
}

RepresentationPoint parse_representation(const Json& value, int rank) {
  if (!value.is_object()) throw ParseError("a representation is an object from generator to matrix");
  std::vector<MatrixQ> images(static_cast<std::size_t>(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank), false);
  int n = -1;
  for (const auto& [key, matrix] : value.items()) {
    const int g = generator_token(key, rank);
    if (!matrix.is_array() || matrix.empty()) throw ParseError(key + ": expected a square matrix");
    const int rows = static_cast<int>(matrix.size());
    if (n < 0) n = rows;
    if (rows != n) throw ParseError(key + ": all images must have the same size");
    MatrixQ m(n, n);
    for (int i = 0; i < n; ++i) {
      const Json& row = matrix[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError(key + ": expected a square matrix");
      for (int j = 0; j < n; ++j) m(i, j) = rational_of(row[static_cast<std::size_t>(j)], key);
    }
    images[static_cast<std::size_t>(g)] = std::move(m);
    seen[static_cast<std::size_t>(g)] = true;
  }
  for (int g = 0; g < rank; ++g)
    if (!seen[static_cast<std::size_t>(g)]) throw ParseError("missing generator image for g" + std::to_string(g + 1));
  try {
    return RepresentationPoint(n, std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Json representation_to_json(const RepresentationPoint& rho) {
  Json out = Json::object();
  for (int g = 0; g < rho.rank(); ++g) out["g" + std::to_string(g + 1)] = to_json(rho.image(g));
  return out;
}

Json diagram_to_json(const QuasiSurface& qs, const LaneDiagram& d) {
  Json loops = Json::array();
  for (const LaneLoop& loop : d.loops) {
    Json segments = Json::array();
    for (const Segment& s : loop.segments) {
      if (const auto* arc = std::get_if<DiskArc>(&s)) {
        segments.push_back({{"arc",
                             {{"disk", arc->disk + 1},
                              {"lane", arc->lane + 1},
                              {"depth", arc->depth},
                              {"forward", arc->forward}}}});
      } else {
        Json path = Json::array();
        for (const Letter& l : std::get<SingularPath>(s).edges)
          path.push_back(qs.edge_name(l.index) + (l.sign > 0 ? "" : "^-1"));
        segments.push_back({{"path", path}});
      }
    }
    loops.push_back({{"based", loop.based}, {"segments", segments}});
  }
  return {{"loops", loops}};
}

LaneDiagram parse_diagram(const QuasiSurface& qs, const Json& value) {
  std::map<std::string, int> edges;
  for (int e = 0; e < qs.graph_edge_count(); ++e) edges[qs.edge_name(e)] = e;
  LaneDiagram out;
  const Json& loops = field(value, "loops", "diagram");
  if (!loops.is_array()) throw ParseError("diagram: 'loops' must be a list");
  for (const Json& jl : loops) {
    LaneLoop loop;
    loop.based = jl.value("based", false);
    for (const Json& js : field(jl, "segments", "loop")) {
      if (js.contains("arc")) {
        const Json& a = js.at("arc");
        DiskArc arc;
        arc.disk = field(a, "disk", "arc").get<int>() - 1;
        arc.lane = field(a, "lane", "arc").get<int>() - 1;
        arc.depth = field(a, "depth", "arc").get<int>();
        arc.forward = a.value("forward", true);
        loop.segments.emplace_back(arc);
      } else {
        SingularPath path;
        for (const Json& token : field(js, "path", "segment")) {
          std::string name = string_of(token, "path");
          int sign = 1;
          if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
            sign = -1;
            name.resize(name.size() - 3);
          }
          auto it = edges.find(name);
          if (it == edges.end()) throw ParseError("path: unknown edge '" + name + "'");
          path.edges.push_back({it->second, sign});
        }
        loop.segments.emplace_back(std::move(path));
      }
    }
    out.loops.push_back(std::move(loop));
  }
  return out;
}

}  // namespace qsurf
