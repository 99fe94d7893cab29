#include "qsurf/diagram.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>

namespace qsurf {

namespace {

using LaneKey = std::pair<int, int>;  // (disk, lane)

struct ArcGates {
  int entry;
  int exit;
};

int disk_size(const QuasiSurface& qs, int disk) { return static_cast<int>(qs.disk_gates(disk).size()); }

ArcGates arc_gates(const QuasiSurface& qs, const DiskArc& arc) {
  if (arc.disk < 0 || arc.disk >= qs.disk_count()) throw DiagramError("arc on unknown disk " + std::to_string(arc.disk));
  const int r = disk_size(qs, arc.disk);
  if (arc.lane < 0 || arc.lane >= r)
    throw DiagramError("arc/lane mismatch: disk " + std::to_string(arc.disk + 1) + " has no lane " +
                       std::to_string(arc.lane));
  const int start = qs.gate_at(arc.disk, arc.lane);
  const int finish = qs.gate_at(arc.disk, arc.lane + 1);
  return arc.forward ? ArcGates{start, finish} : ArcGates{finish, start};
}

bool is_entry(const QuasiSurface& qs, const Letter& letter) {
  return qs.is_gate_edge(letter.index) && letter.sign > 0;
}

// Lane builder shared by free and based loops. Depth counters are per lane
// and each new arc goes one level deeper than everything before it.
class LaneBuilder {
 public:
  LaneBuilder(const QuasiSurface& qs, const LaneOptions& options) : qs_(qs), options_(options) {}

  void passage(int from_gate, int to_gate, std::vector<Segment>& out) {
    const int disk = qs_.gate_disk(from_gate);
    if (qs_.gate_disk(to_gate) != disk) throw DiagramError("passage between different disks");
    const int r = disk_size(qs_, disk);
    const int a = qs_.gate_slot(from_gate);
    const int b = qs_.gate_slot(to_gate);
    int ccw = ((b - a) % r + r) % r;
    int cw = ((a - b) % r + r) % r;
    if (ccw == 0) ccw = cw = r;
    bool go_ccw = true;
    switch (options_.route) {
      case Route::Shortest: go_ccw = ccw <= cw; break;
      case Route::Counterclockwise: go_ccw = true; break;
      case Route::Clockwise: go_ccw = false; break;
    }
    const int hops = go_ccw ? ccw : cw;
    for (int t = 0; t < hops; ++t) {
      if (t > 0) out.emplace_back(SingularPath{});
      const int lane = go_ccw ? (a + t) % r : ((a - t - 1) % r + r) % r;
      out.emplace_back(DiskArc{disk, lane, ++depth_[{disk, lane}], go_ccw});
    }
  }

  // Splits `path` (already rotated for free loops) into arcs and Y paths.
  void parse(const EdgePath& path, std::vector<Segment>& out, bool leading_path) {
    std::size_t i = 0;
    if (leading_path) {
      SingularPath lead;
      while (i < path.size() && !qs_.is_gate_edge(path[i].index)) lead.edges.push_back(path[i++]);
      out.emplace_back(std::move(lead));
    }
    while (i < path.size()) {
      if (!is_entry(qs_, path[i]) || i + 1 >= path.size() || !qs_.is_gate_edge(path[i + 1].index) ||
          path[i + 1].sign > 0)
        throw DiagramError("edge path does not alternate between gate entries and exits");
      passage(qs_.edge_gate(path[i].index), qs_.edge_gate(path[i + 1].index), out);
      i += 2;
      SingularPath rest;
      while (i < path.size() && !qs_.is_gate_edge(path[i].index)) rest.edges.push_back(path[i++]);
      out.emplace_back(std::move(rest));
    }
  }

 private:
  const QuasiSurface& qs_;
  LaneOptions options_;
  std::map<LaneKey, int> depth_;
};

EdgePath raw_path(const QuasiSurface& qs, const GroupWord& word) {
  EdgePath path;
  for (const Letter& letter : word) {
    if (letter.index < 0 || letter.index >= qs.rank())
      throw std::out_of_range("generator g" + std::to_string(letter.index + 1) + " is not in the presentation");
    const EdgePath& piece = qs.generator_path(letter.index);
    if (letter.sign > 0) {
      path.insert(path.end(), piece.begin(), piece.end());
    } else {
      const EdgePath inv = inverse(piece);
      path.insert(path.end(), inv.begin(), inv.end());
    }
  }
  return path;
}

LaneLoop free_loop(const QuasiSurface& qs, const EdgePath& path, const LaneOptions& options) {
  LaneLoop loop;
  if (path.empty()) return loop;
  auto first = std::find_if(path.begin(), path.end(), [&](const Letter& l) { return is_entry(qs, l); });
  if (first == path.end()) {
    loop.segments.emplace_back(SingularPath{path});
    return loop;
  }
  const EdgePath rotated = rotate(path, static_cast<std::size_t>(first - path.begin()));
  LaneBuilder builder(qs, options);
  builder.parse(rotated, loop.segments, false);
  return loop;
}

void check_closed(const QuasiSurface& qs, const EdgePath& path, bool based, const std::string& what) {
  if (path.empty()) return;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const Letter& letter = path[i];
    if (letter.index < 0 || letter.index >= qs.total_edge_count()) throw DiagramError(what + ": unknown edge");
    const Letter& next = path[(i + 1) % path.size()];
    if (i + 1 == path.size() && based) break;
    if (next.index < 0 || next.index >= qs.total_edge_count()) throw DiagramError(what + ": unknown edge");
    if (qs.letter_target(letter) != qs.letter_source(next)) throw DiagramError(what + " is not a closed edge path");
  }
  if (based && (qs.letter_source(path.front()) != qs.basepoint() || qs.letter_target(path.back()) != qs.basepoint()))
    throw DiagramError(what + " is not based at the basepoint");
}

// Disk passages of a loop, named by the index of the entry letter.
std::vector<int> passages(const QuasiSurface& qs, const EdgePath& path, bool based) {
  std::vector<int> out;
  const std::size_t n = path.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_entry(qs, path[i])) continue;
    if (based && i + 1 == n) throw DiagramError("based loop ends inside a disk");
    const Letter& next = path[(i + 1) % n];
    if (!qs.is_gate_edge(next.index) || next.sign > 0) throw DiagramError("disk passage without an exit");
    out.push_back(static_cast<int>(i));
  }
  return out;
}

using EndpointKey = std::pair<int, int>;  // (loop, letter)

// Maps every gate letter to (gate, rank in the gate's order), checking that
// the orders list each gate letter exactly once.
std::map<EndpointKey, std::pair<int, int>> index_gate_order(const QuasiSurface& qs, const std::vector<EdgePath>& loops,
                                                            const std::vector<std::vector<GateCrossing>>& gate_order) {
  if (static_cast<int>(gate_order.size()) != qs.gate_count())
    throw DiagramError("gate order must list every gate");
  std::map<EndpointKey, std::pair<int, int>> where;
  for (int k = 0; k < qs.gate_count(); ++k) {
    const auto& order = gate_order[static_cast<std::size_t>(k)];
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      const GateCrossing& c = order[pos];
      if (c.loop < 0 || c.loop >= static_cast<int>(loops.size()))
        throw DiagramError("gate order names an unknown loop");
      const EdgePath& path = loops[static_cast<std::size_t>(c.loop)];
      if (c.letter < 0 || c.letter >= static_cast<int>(path.size()) ||
          path[static_cast<std::size_t>(c.letter)].index != qs.gate_edge(k) ||
          path[static_cast<std::size_t>(c.letter)].sign != c.sign)
        throw DiagramError("gate order of '" + qs.gate_name(k) + "' does not match the loop letters");
      if (!where.emplace(EndpointKey{c.loop, c.letter}, std::pair{k, static_cast<int>(pos)}).second)
        throw DiagramError("crossing listed twice in the gate order");
    }
  }
  std::size_t expected = 0;
  for (const EdgePath& path : loops)
    for (const Letter& letter : path) expected += qs.is_gate_edge(letter.index) ? 1 : 0;
  if (expected != where.size()) throw DiagramError("gate order misses crossings");
  return where;
}

}  // namespace

std::vector<GateCrossing> ExplicitDiagram::crossings(int gate, int loop) const {
  std::vector<GateCrossing> out;
  for (const GateCrossing& c : gate_order.at(static_cast<std::size_t>(gate)))
    if (c.loop == loop) out.push_back(c);
  return out;
}

EdgePath cyclic_path(const QuasiSurface& qs, const ConjClass& cls) {
  return cyclically_reduce(qs.word_to_path(cls.word()));
}

LaneDiagram word_to_diagram(const QuasiSurface& qs, const ConjClass& cls, const LaneOptions& options) {
  return word_to_diagram(qs, cls.word(), options);
}

LaneDiagram word_to_diagram(const QuasiSurface& qs, const GroupWord& word, const LaneOptions& options) {
  const EdgePath path = options.reduce ? cyclically_reduce(qs.word_to_path(word)) : raw_path(qs, word);
  return LaneDiagram{{free_loop(qs, path, options)}};
}

LaneDiagram based_diagram(const QuasiSurface& qs, const GroupWord& word, const LaneOptions& options) {
  const EdgePath path = options.reduce ? qs.word_to_path(word) : raw_path(qs, word);
  LaneLoop loop;
  loop.based = true;
  LaneBuilder builder(qs, options);
  builder.parse(path, loop.segments, true);
  return LaneDiagram{{std::move(loop)}};
}

EdgePath loop_path(const QuasiSurface& qs, const LaneLoop& loop) {
  EdgePath path;
  int start = -1;
  int current = -1;
  auto arrive = [&](int vertex) {
    if (current >= 0 && vertex != current) throw DiagramError("arc/lane mismatch: segments do not join up");
    if (start < 0) start = vertex;
  };
  if (loop.based) start = current = qs.basepoint();
  for (const Segment& segment : loop.segments) {
    if (const auto* arc = std::get_if<DiskArc>(&segment)) {
      const ArcGates gates = arc_gates(qs, *arc);
      arrive(qs.glued_vertex(gates.entry));
      path.push_back({qs.gate_edge(gates.entry), 1});
      path.push_back({qs.gate_edge(gates.exit), -1});
      current = qs.glued_vertex(gates.exit);
    } else {
      for (const Letter& letter : std::get<SingularPath>(segment).edges) {
        if (letter.index < 0 || letter.index >= qs.graph_edge_count())
          throw DiagramError("singular path leaves the graph");
        arrive(qs.letter_source(letter));
        path.push_back(letter);
        current = qs.letter_target(letter);
      }
    }
  }
  if (current >= 0 && current != start) throw DiagramError("loop is not closed");
  return path;
}

ConjClass diagram_to_word(const QuasiSurface& qs, const LaneDiagram& diagram) {
  if (diagram.loops.empty()) return {};
  return canonical_conjugacy(qs.path_to_word(loop_path(qs, diagram.loops.front())));
}

GroupWord based_loop_word(const QuasiSurface& qs, const LaneLoop& loop) {
  return qs.path_to_word(loop_path(qs, loop));
}

int dual_v(const QuasiSurface& qs, int gate, const LaneDiagram& diagram) {
  int total = 0;
  for (const LaneLoop& loop : diagram.loops)
    for (const Letter& letter : loop_path(qs, loop))
      if (letter.index == qs.gate_edge(gate)) total += letter.sign;
  return total;
}

int arc_count(const LaneLoop& loop) {
  return static_cast<int>(std::count_if(loop.segments.begin(), loop.segments.end(),
                                        [](const Segment& s) { return std::holds_alternative<DiskArc>(s); }));
}

LaneDiagram combine_generic(const QuasiSurface& qs, const std::vector<LaneDiagram>& diagrams, BlockOrder order) {
  (void)qs;
  LaneDiagram out;
  for (const LaneDiagram& d : diagrams) out.loops.insert(out.loops.end(), d.loops.begin(), d.loops.end());

  std::vector<std::size_t> first_loop;
  std::size_t count = 0;
  for (const LaneDiagram& d : diagrams) {
    first_loop.push_back(count);
    count += d.loops.size();
  }
  std::vector<std::size_t> blocks(diagrams.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = i;
  if (order == BlockOrder::LaterInner) std::reverse(blocks.begin(), blocks.end());

  std::map<LaneKey, int> offset;
  for (std::size_t b : blocks) {
    std::map<LaneKey, int> deepest;
    for (std::size_t l = 0; l < diagrams[b].loops.size(); ++l) {
      for (Segment& segment : out.loops[first_loop[b] + l].segments) {
        auto* arc = std::get_if<DiskArc>(&segment);
        if (!arc) continue;
        const LaneKey key{arc->disk, arc->lane};
        int& deep = deepest[key];
        deep = std::max(deep, arc->depth);
        auto it = offset.find(key);
        if (it != offset.end()) arc->depth += it->second;
      }
    }
    for (const auto& [key, deep] : deepest) offset[key] += deep;
  }
  return out;
}

LaneDiagram permute_depths(const LaneDiagram& diagram, std::uint64_t seed) {
  std::map<LaneKey, std::vector<int>> used;
  for (const LaneLoop& loop : diagram.loops)
    for (const Segment& s : loop.segments)
      if (const auto* arc = std::get_if<DiskArc>(&s)) used[{arc->disk, arc->lane}].push_back(arc->depth);

  std::mt19937_64 rng(seed);
  std::map<LaneKey, std::map<int, int>> relabel;
  for (auto& [key, depths] : used) {
    std::sort(depths.begin(), depths.end());
    depths.erase(std::unique(depths.begin(), depths.end()), depths.end());
    std::vector<int> image = depths;
    std::shuffle(image.begin(), image.end(), rng);
    for (std::size_t i = 0; i < depths.size(); ++i) relabel[key][depths[i]] = image[i];
  }
  LaneDiagram out = diagram;
  for (LaneLoop& loop : out.loops)
    for (Segment& s : loop.segments)
      if (auto* arc = std::get_if<DiskArc>(&s)) arc->depth = relabel[{arc->disk, arc->lane}][arc->depth];
  return out;
}

LaneDiagram insert_detour(const LaneDiagram& diagram, int loop, int arc) {
  LaneDiagram out = diagram;
  auto& segments = out.loops.at(static_cast<std::size_t>(loop)).segments;
  int seen = -1;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const auto* found = std::get_if<DiskArc>(&segments[i]);
    if (!found || ++seen != arc) continue;
    const DiskArc original = *found;
    int deepest = 0;
    for (const LaneLoop& l : out.loops)
      for (const Segment& s : l.segments)
        if (const auto* a = std::get_if<DiskArc>(&s); a && a->disk == original.disk && a->lane == original.lane)
          deepest = std::max(deepest, a->depth);
    DiskArc back = original;
    back.forward = !original.forward;
    back.depth = deepest + 1;
    DiskArc again = original;
    again.depth = deepest + 2;
    const std::vector<Segment> zigzag{original, SingularPath{}, back, SingularPath{}, again};
    segments.erase(segments.begin() + static_cast<std::ptrdiff_t>(i));
    segments.insert(segments.begin() + static_cast<std::ptrdiff_t>(i), zigzag.begin(), zigzag.end());
    return out;
  }
  throw std::out_of_range("loop has no arc " + std::to_string(arc));
}

ExplicitDiagram realize(const QuasiSurface& qs, const LaneDiagram& diagram) {
  ExplicitDiagram out;
  out.gate_order.resize(static_cast<std::size_t>(qs.gate_count()));

  struct End {
    GateCrossing crossing;
    int depth;
  };
  // Endpoints at each gate: those of the lane ending there and those of the
  // lane starting there.
  std::vector<std::vector<End>> preceding(static_cast<std::size_t>(qs.gate_count()));
  std::vector<std::vector<End>> following(static_cast<std::size_t>(qs.gate_count()));

  for (std::size_t l = 0; l < diagram.loops.size(); ++l) {
    const LaneLoop& loop = diagram.loops[l];
    out.loops.push_back(loop_path(qs, loop));
    out.based.push_back(loop.based);
    int letter = 0;
    for (const Segment& segment : loop.segments) {
      if (const auto* arc = std::get_if<DiskArc>(&segment)) {
        const int start = qs.gate_at(arc->disk, arc->lane);
        const int finish = qs.gate_at(arc->disk, arc->lane + 1);
        const int loop_index = static_cast<int>(l);
        const GateCrossing in{loop_index, letter, 1};
        const GateCrossing out_{loop_index, letter + 1, -1};
        following[static_cast<std::size_t>(start)].push_back({arc->forward ? in : out_, arc->depth});
        preceding[static_cast<std::size_t>(finish)].push_back({arc->forward ? out_ : in, arc->depth});
        letter += 2;
      } else {
        letter += static_cast<int>(std::get<SingularPath>(segment).edges.size());
      }
    }
  }
  for (int k = 0; k < qs.gate_count(); ++k) {
    auto& pre = preceding[static_cast<std::size_t>(k)];
    auto& fol = following[static_cast<std::size_t>(k)];
    std::stable_sort(pre.begin(), pre.end(), [](const End& a, const End& b) { return a.depth < b.depth; });
    std::stable_sort(fol.begin(), fol.end(), [](const End& a, const End& b) { return a.depth > b.depth; });
    auto& order = out.gate_order[static_cast<std::size_t>(k)];
    for (const End& e : pre) order.push_back(e.crossing);
    for (const End& e : fol) order.push_back(e.crossing);
  }
  return out;
}

ExplicitDiagram chord_diagram(const QuasiSurface& qs, std::vector<EdgePath> loops, std::vector<bool> based,
                              std::vector<std::vector<GateCrossing>> gate_order) {
  if (based.size() != loops.size()) throw DiagramError("based flags do not match the loops");
  for (std::size_t l = 0; l < loops.size(); ++l) check_closed(qs, loops[l], based[l], "loop " + std::to_string(l));
  const auto where = index_gate_order(qs, loops, gate_order);

  // Circular positions of all endpoints on each disk boundary.
  std::vector<std::vector<int>> slot_offset(static_cast<std::size_t>(qs.disk_count()));
  std::vector<int> disk_total(static_cast<std::size_t>(qs.disk_count()), 0);
  for (int d = 0; d < qs.disk_count(); ++d) {
    for (int gate : qs.disk_gates(d)) {
      slot_offset[static_cast<std::size_t>(d)].push_back(disk_total[static_cast<std::size_t>(d)]);
      disk_total[static_cast<std::size_t>(d)] += static_cast<int>(gate_order[static_cast<std::size_t>(gate)].size());
    }
  }
  auto position = [&](int loop, int letter) {
    const auto [gate, rank] = where.at({loop, letter});
    return slot_offset[static_cast<std::size_t>(qs.gate_disk(gate))][static_cast<std::size_t>(qs.gate_slot(gate))] +
           rank;
  };

  struct Chord {
    int loop, letter, disk, from, to;
  };
  std::vector<Chord> chords;
  for (std::size_t l = 0; l < loops.size(); ++l) {
    const EdgePath& path = loops[l];
    for (int i : passages(qs, path, based[l])) {
      const int loop = static_cast<int>(l);
      const int exit_letter = static_cast<int>((static_cast<std::size_t>(i) + 1) % path.size());
      const int disk = qs.gate_disk(qs.edge_gate(path[static_cast<std::size_t>(i)].index));
      if (qs.gate_disk(qs.edge_gate(path[static_cast<std::size_t>(exit_letter)].index)) != disk)
        throw DiagramError("passage between different disks");
      chords.push_back({loop, i, disk, position(loop, i), position(loop, exit_letter)});
    }
  }

  ExplicitDiagram out;
  out.loops = std::move(loops);
  out.based = std::move(based);
  out.gate_order = std::move(gate_order);
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      const Chord& A = chords[a];
      const Chord& B = chords[b];
      if (A.disk != B.disk) continue;
      const int n = disk_total[static_cast<std::size_t>(A.disk)];
      const int span = ((A.to - A.from) % n + n) % n;
      auto inside = [&](int x) {
        const int off = ((x - A.from) % n + n) % n;
        return off > 0 && off < span;
      };
      const bool b_in = inside(B.from);
      if (b_in == inside(B.to)) continue;
      out.surface_crossings.push_back({A.loop, A.letter, B.loop, B.letter, b_in ? 1 : -1});
    }
  }
  return out;
}

ExplicitDiagram random_chord_diagram(const QuasiSurface& qs, const std::vector<ConjClass>& classes,
                                     std::uint64_t seed) {
  std::vector<EdgePath> loops;
  for (const ConjClass& cls : classes) loops.push_back(cyclic_path(qs, cls));
  std::vector<std::vector<GateCrossing>> order(static_cast<std::size_t>(qs.gate_count()));
  for (std::size_t l = 0; l < loops.size(); ++l) {
    for (std::size_t i = 0; i < loops[l].size(); ++i) {
      const Letter& letter = loops[l][i];
      if (!qs.is_gate_edge(letter.index)) continue;
      order[static_cast<std::size_t>(qs.edge_gate(letter.index))].push_back(
          {static_cast<int>(l), static_cast<int>(i), letter.sign});
    }
  }
  std::mt19937_64 rng(seed);
  for (auto& gate : order) std::shuffle(gate.begin(), gate.end(), rng);
  return chord_diagram(qs, std::move(loops), std::vector<bool>(classes.size(), false), std::move(order));
}

ExplicitDiagram explicit_diagram(const QuasiSurface& qs, std::vector<EdgePath> loops,
                                 std::vector<std::vector<GateCrossing>> gate_order,
                                 std::vector<SurfaceCrossing> declared) {
  for (std::size_t l = 0; l < loops.size(); ++l) check_closed(qs, loops[l], false, "loop " + std::to_string(l));
  index_gate_order(qs, loops, gate_order);

  auto arc_disk = [&](int loop, int letter) {
    if (loop < 0 || loop >= static_cast<int>(loops.size())) throw DiagramError("crossing names an unknown loop");
    const EdgePath& path = loops[static_cast<std::size_t>(loop)];
    if (letter < 0 || letter >= static_cast<int>(path.size()) || !is_entry(qs, path[static_cast<std::size_t>(letter)]))
      throw DiagramError("crossing must name the entry letter of a disk passage");
    return qs.gate_disk(qs.edge_gate(path[static_cast<std::size_t>(letter)].index));
  };

  // Unordered arc pair -> (sign in canonical order, orientations declared).
  struct Seen {
    int sign;
    bool as_is;
    bool mirrored;
  };
  std::map<std::tuple<int, int, int, int>, Seen> seen;
  ExplicitDiagram out;
  for (const SurfaceCrossing& c : declared) {
    if (c.sign != 1 && c.sign != -1) throw DiagramError("crossing sign must be +1 or -1");
    if (arc_disk(c.first_loop, c.first_letter) != arc_disk(c.second_loop, c.second_letter))
      throw DiagramError("crossing arcs lie in different disks");
    if (c.first_loop == c.second_loop && c.first_letter == c.second_letter)
      throw DiagramError("an arc cannot cross itself");
    const auto forward_key = std::tuple{c.first_loop, c.first_letter, c.second_loop, c.second_letter};
    const auto mirror_key = std::tuple{c.second_loop, c.second_letter, c.first_loop, c.first_letter};
    const bool canonical = forward_key < mirror_key;
    const int sign = canonical ? c.sign : -c.sign;
    auto [it, inserted] = seen.try_emplace(canonical ? forward_key : mirror_key, Seen{sign, canonical, !canonical});
    if (inserted) {
      out.surface_crossings.push_back(c);
      continue;
    }
    bool& flag = canonical ? it->second.as_is : it->second.mirrored;
    if (flag) throw DiagramError("crossing declared twice");
    if (it->second.sign != sign) throw DiagramError("declared crossing signs are not antisymmetric");
    flag = true;
  }
  out.based.assign(loops.size(), false);
  out.loops = std::move(loops);
  out.gate_order = std::move(gate_order);
  return out;
}

ExplicitDiagram explicit_diagram(const QuasiSurface& qs, const LaneDiagram& lanes,
                                 std::vector<SurfaceCrossing> declared) {
  ExplicitDiagram base = realize(qs, lanes);
  ExplicitDiagram out = explicit_diagram(qs, std::move(base.loops), std::move(base.gate_order), std::move(declared));
  out.based = std::move(base.based);
  return out;
}

}  // namespace qsurf
