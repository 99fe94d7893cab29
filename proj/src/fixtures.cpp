#include "qsurf/fixtures.hpp"

#include <stdexcept>

namespace qsurf {

QuasiSurfaceSpec fixture_spec(std::string_view name) {
  QuasiSurfaceSpec s;
  if (name == "QT2") {
    s.disks = {{{"g1", "g2"}}};
    s.vertices = {"v"};
    s.gluing = {{"g1", "v"}, {"g2", "v"}};
    s.basepoint = "v";
  } else if (name == "QG1") {
    s.disks = {{{"g1", "g2", "g3", "g4"}}};
    s.vertices = {"v1", "v2"};
    s.gluing = {{"g1", "v1"}, {"g2", "v2"}, {"g3", "v1"}, {"g4", "v2"}};
    s.basepoint = "v1";
  } else if (name == "QD2") {
    s.disks = {{{"g1", "g2", "g3"}}, {{"g4", "g5"}}};
    s.vertices = {"v1", "v2", "v3"};
    s.edges = {{"y1", "v1", "v2"}, {"y2", "v2", "v3"}};
    s.gluing = {{"g1", "v1"}, {"g2", "v2"}, {"g3", "v3"}, {"g4", "v1"}, {"g5", "v3"}};
    s.basepoint = "v1";
  } else if (name == "QTRI") {
    s.disks = {{{"g1", "g2", "g3"}}};
    s.vertices = {"v"};
    s.gluing = {{"g1", "v"}, {"g2", "v"}, {"g3", "v"}};
    s.basepoint = "v";
  } else if (name == "QTOR") {
    s.disks = {{{"g1", "g2", "g3", "g4"}}};
    s.vertices = {"v1", "v2", "v3", "v4"};
    s.edges = {{"a", "v1", "v3"}, {"b", "v2", "v4"}};
    s.gluing = {{"g1", "v1"}, {"g2", "v2"}, {"g3", "v3"}, {"g4", "v4"}};
    s.basepoint = "v1";
  } else {
    throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
  }
  return s;
}

std::vector<std::string> fixture_names() { return {"QT2", "QG1", "QD2", "QTRI", "QTOR"}; }

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

QuasiSurface random_quasi_surface(std::mt19937_64& rng, const RandomSurfaceLimits& limits) {
  for (;;) {
    QuasiSurfaceSpec s;
    const int disks = uniform(rng, 1, limits.max_disks);
    const int gates = uniform(rng, disks, std::max(disks, limits.max_gates));
    const int vertices = uniform(rng, 1, limits.max_vertices);
    const int edges = uniform(rng, 0, limits.max_edges);
    for (int v = 0; v < vertices; ++v) s.vertices.push_back("v" + std::to_string(v + 1));
    for (int e = 0; e < edges; ++e)
      s.edges.push_back({"y" + std::to_string(e + 1), s.vertices[static_cast<std::size_t>(uniform(rng, 0, vertices - 1))],
                         s.vertices[static_cast<std::size_t>(uniform(rng, 0, vertices - 1))]});
    // Every disk gets one gate, the rest are spread at random.
    std::vector<int> sizes(static_cast<std::size_t>(disks), 1);
    for (int extra = disks; extra < gates; ++extra) ++sizes[static_cast<std::size_t>(uniform(rng, 0, disks - 1))];
    int next = 1;
    for (int size : sizes) {
      DiskSpec disk;
      for (int i = 0; i < size; ++i) {
        const std::string gate = "g" + std::to_string(next++);
        disk.gates.push_back(gate);
        s.gluing[gate] = s.vertices[static_cast<std::size_t>(uniform(rng, 0, vertices - 1))];
      }
      s.disks.push_back(std::move(disk));
    }
    s.basepoint = s.vertices[static_cast<std::size_t>(uniform(rng, 0, vertices - 1))];
    try {
      QuasiSurface qs = build(s);
      if (qs.rank() >= 1) return qs;
    } catch (const ValidationError&) {
      // disconnected; draw again
    }
  }
}

GroupWord random_word(std::mt19937_64& rng, int rank, int max_length) {
  if (rank < 1) throw std::invalid_argument("random_word needs a positive rank");
  const int length = uniform(rng, 1, std::max(1, max_length));
  GroupWord word;
  while (static_cast<int>(word.size()) < length) {
    const Letter letter{uniform(rng, 0, rank - 1), uniform(rng, 0, 1) ? 1 : -1};
    if (!word.empty() && word.back().cancels(letter)) continue;
    word.push_back(letter);
  }
  return word;
}

ConjClass random_class(std::mt19937_64& rng, int rank, int max_length) {
  return canonical_conjugacy(random_word(rng, rank, max_length));
}

ConjClass random_nontrivial_class(std::mt19937_64& rng, int rank, int max_length) {
  for (;;) {
    ConjClass cls = random_class(rng, rank, max_length);
    if (!cls.is_trivial()) return cls;
  }
}

}  // namespace qsurf
