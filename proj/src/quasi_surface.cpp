#include "qsurf/quasi_surface.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qsurf {

int QuasiSurface::gate_index(const std::string& name) const {
  auto it = gate_lookup_.find(name);
  if (it == gate_lookup_.end()) throw std::out_of_range("unknown gate '" + name + "'");
  return it->second;
}

int QuasiSurface::gate_at(int disk, int slot) const {
  const auto& gates = disk_gates(disk);
  const int r = static_cast<int>(gates.size());
  return gates[static_cast<std::size_t>(((slot % r) + r) % r)];
}

int QuasiSurface::letter_source(const Letter& letter) const {
  return letter.sign > 0 ? edge_tail(letter.index) : edge_head(letter.index);
}

int QuasiSurface::letter_target(const Letter& letter) const {
  return letter.sign > 0 ? edge_head(letter.index) : edge_tail(letter.index);
}

GroupWord QuasiSurface::path_to_word(const EdgePath& path) const {
  GroupWord word;
  word.reserve(path.size());
  for (const Letter& letter : path) {
    const int generator = edge_generator(letter.index);
    if (generator < 0) continue;
    const Letter g{generator, letter.sign};
    if (!word.empty() && word.back().cancels(g)) {
      word.pop_back();
    } else {
      word.push_back(g);
    }
  }
  return word;
}

EdgePath QuasiSurface::word_to_path(const GroupWord& word) const {
  EdgePath path;
  for (const Letter& letter : word) {
    if (letter.index < 0 || letter.index >= rank())
      throw std::out_of_range("generator g" + std::to_string(letter.index + 1) + " is not in the presentation");
    const EdgePath& piece = generator_paths_[static_cast<std::size_t>(letter.index)];
    path = multiply(path, letter.sign > 0 ? piece : inverse(piece));
  }
  return path;
}

int QuasiSurface::gate_crossing_count(int gate, int generator) const {
  int count = 0;
  for (const Letter& letter : generator_path(generator))
    if (letter.index == gate_edge(gate)) count += letter.sign;
  return count;
}

QuasiSurface build(const QuasiSurfaceSpec& spec) {
  QuasiSurface qs;
  qs.spec_ = spec;

  std::map<std::string, int> vertex_lookup;
  for (const std::string& name : spec.vertices) {
    if (!vertex_lookup.emplace(name, static_cast<int>(qs.vertex_names_.size())).second)
      throw ValidationError("duplicate vertex '" + name + "'");
    qs.vertex_names_.push_back(name);
  }
  auto vertex_of = [&](const std::string& name, const std::string& context) {
    auto it = vertex_lookup.find(name);
    if (it == vertex_lookup.end()) throw ValidationError(context + ": unknown vertex '" + name + "'");
    return it->second;
  };

  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const GraphEdgeSpec& edge = spec.edges[e];
    const std::string id = edge.id.empty() ? "y" + std::to_string(e + 1) : edge.id;
    qs.edge_names_.push_back(id);
    qs.edge_tail_.push_back(vertex_of(edge.from, "edge '" + id + "'"));
    qs.edge_head_.push_back(vertex_of(edge.to, "edge '" + id + "'"));
  }
  qs.graph_edge_count_ = static_cast<int>(spec.edges.size());

  const int vertex_count = static_cast<int>(spec.vertices.size());
  for (std::size_t d = 0; d < spec.disks.size(); ++d) {
    std::vector<int> gates;
    for (const std::string& name : spec.disks[d].gates) {
      const int index = static_cast<int>(qs.gate_names_.size());
      if (!qs.gate_lookup_.emplace(name, index).second) throw ValidationError("duplicate gate '" + name + "'");
      qs.gate_names_.push_back(name);
      qs.gate_disk_.push_back(static_cast<int>(d));
      qs.gate_slot_.push_back(static_cast<int>(gates.size()));
      gates.push_back(index);
    }
    qs.disk_gates_.push_back(std::move(gates));
  }
  for (const auto& [gate, vertex] : spec.gluing) {
    if (!qs.gate_lookup_.count(gate)) throw ValidationError("gluing names unknown gate '" + gate + "'");
  }
  for (int k = 0; k < qs.gate_count(); ++k) {
    const std::string& name = qs.gate_names_[static_cast<std::size_t>(k)];
    auto it = spec.gluing.find(name);
    if (it == spec.gluing.end()) throw ValidationError("gluing is not total: gate '" + name + "' is not glued");
    const int vertex = vertex_of(it->second, "gluing of gate '" + name + "'");
    qs.glued_vertex_.push_back(vertex);
    qs.edge_names_.push_back("e:" + name);
    qs.edge_tail_.push_back(vertex);
    qs.edge_head_.push_back(vertex_count + qs.gate_disk_[static_cast<std::size_t>(k)]);
  }
  qs.basepoint_ = vertex_of(spec.basepoint, "basepoint");

  const int total_vertices = vertex_count + qs.disk_count();
  const int total_edges = static_cast<int>(qs.edge_tail_.size());
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(total_vertices));
  for (int e = total_edges - 1; e >= 0; --e) {
    incident[static_cast<std::size_t>(qs.edge_tail_[static_cast<std::size_t>(e)])].push_back(e);
    if (qs.edge_head_[static_cast<std::size_t>(e)] != qs.edge_tail_[static_cast<std::size_t>(e)])
      incident[static_cast<std::size_t>(qs.edge_head_[static_cast<std::size_t>(e)])].push_back(e);
  }

  // Breadth-first spanning tree; each vertex scans its incident edges from
  // the highest index down.
  qs.parent_edge_.assign(static_cast<std::size_t>(total_vertices), -2);
  qs.tree_paths_.assign(static_cast<std::size_t>(total_vertices), {});
  std::vector<bool> in_tree(static_cast<std::size_t>(total_edges), false);
  std::deque<int> queue{qs.basepoint_};
  qs.parent_edge_[static_cast<std::size_t>(qs.basepoint_)] = -1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int e : incident[static_cast<std::size_t>(v)]) {
      const int tail = qs.edge_tail_[static_cast<std::size_t>(e)];
      const int head = qs.edge_head_[static_cast<std::size_t>(e)];
      const int other = tail == v ? head : tail;
      if (qs.parent_edge_[static_cast<std::size_t>(other)] != -2) continue;
      qs.parent_edge_[static_cast<std::size_t>(other)] = e;
      in_tree[static_cast<std::size_t>(e)] = true;
      EdgePath path = qs.tree_paths_[static_cast<std::size_t>(v)];
      path.push_back({e, tail == v ? 1 : -1});
      qs.tree_paths_[static_cast<std::size_t>(other)] = std::move(path);
      queue.push_back(other);
    }
  }
  for (int v = 0; v < total_vertices; ++v) {
    if (qs.parent_edge_[static_cast<std::size_t>(v)] != -2) continue;
    const std::string what = v < vertex_count
                                 ? "vertex '" + qs.vertex_names_[static_cast<std::size_t>(v)] + "'"
                                 : "disk " + std::to_string(v - vertex_count + 1);
    throw ValidationError("disconnected G: " + what + " is not connected to basepoint '" + spec.basepoint + "'");
  }

  qs.edge_generator_.assign(static_cast<std::size_t>(total_edges), -1);
  for (int e = 0; e < total_edges; ++e) {
    if (in_tree[static_cast<std::size_t>(e)]) continue;
    qs.edge_generator_[static_cast<std::size_t>(e)] = static_cast<int>(qs.generator_edges_.size());
    qs.generator_edges_.push_back(e);
    EdgePath loop = qs.tree_paths_[static_cast<std::size_t>(qs.edge_tail_[static_cast<std::size_t>(e)])];
    loop.push_back({e, 1});
    loop = multiply(loop, inverse(qs.tree_paths_[static_cast<std::size_t>(qs.edge_head_[static_cast<std::size_t>(e)])]));
    qs.generator_paths_.push_back(std::move(loop));
  }
  return qs;
}

FoxDerivative gate_derivative(const QuasiSurface& qs, int gate) {
  if (gate < 0 || gate >= qs.gate_count()) throw std::out_of_range("unknown gate index " + std::to_string(gate));
  const int edge = qs.gate_edge(gate);
  FoxDerivative d;
  d.images.resize(static_cast<std::size_t>(qs.rank()));
  for (int g = 0; g < qs.rank(); ++g) {
    const EdgePath& path = qs.generator_path(g);
    GroupRingElement image;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i].index != edge) continue;
      if (path[i].sign > 0) {
        image.add(qs.path_to_word(EdgePath(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i))), 1);
      } else {
        image.add(qs.path_to_word(EdgePath(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(i) + 1)), -1);
      }
    }
    d.images[static_cast<std::size_t>(g)] = std::move(image);
  }
  return d;
}

}  // namespace qsurf
