#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "qsurf/quasi_surface.hpp"

namespace qsurf {

/// A disk passage hugging the boundary between two cyclically adjacent gates.
///
/// Lane `lane` of a disk with r gates runs from the gate at slot `lane` to
/// the gate at slot `lane + 1 (mod r)`. A forward arc enters the disk at the
/// first of these gates and leaves through the second; a backward arc runs
/// the other way. Larger depths lie further from the boundary.
struct DiskArc {
  int disk = 0;
  int lane = 0;
  int depth = 1;
  bool forward = true;

  friend bool operator==(const DiskArc&, const DiskArc&) = default;
};

/// An edge path in the graph Y between the glued vertices of two gates.
struct SingularPath {
  EdgePath edges;

  friend bool operator==(const SingularPath&, const SingularPath&) = default;
};

using Segment = std::variant<DiskArc, SingularPath>;

/// One loop in lane normal form.
///
/// A free loop lists its segments cyclically. A based loop starts and ends at
/// the basepoint, so its first and last segments are singular paths.
struct LaneLoop {
  std::vector<Segment> segments;
  bool based = false;

  friend bool operator==(const LaneLoop&, const LaneLoop&) = default;
};

/// A family of loops in lane normal form. Within each lane the arcs of all
/// loops have pairwise distinct depths, so the family has no crossings in
/// the surface part.
struct LaneDiagram {
  std::vector<LaneLoop> loops;

  friend bool operator==(const LaneDiagram&, const LaneDiagram&) = default;
};

enum class Route {
  Shortest,  ///< fewer lane hops, counterclockwise on ties
  Counterclockwise,
  Clockwise,
};

struct LaneOptions {
  Route route = Route::Shortest;
  /// When false, the concatenated generator paths are used verbatim; a
  /// passage that re-exits through its entry gate then circles the disk.
  bool reduce = true;
};

/// Raised for diagrams whose arcs and singular paths do not fit together.
struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Gate and sign of a loop's intersection with a gate; `letter` indexes the
/// gate-edge letter in the loop's edge path.
struct GateCrossing {
  int loop = 0;
  int letter = 0;
  int sign = 1;
};

/// A transversal crossing of two disk arcs inside a disk. Arcs are named by
/// the index of their entry letter. `sign` is the crossing sign of (first,
/// second); the sign of (second, first) is its negative.
struct SurfaceCrossing {
  int first_loop = 0;
  int first_letter = 0;
  int second_loop = 0;
  int second_letter = 0;
  int sign = 1;
};

/// A generic loop family with explicit gate positions and surface crossings.
///
/// Every loop is an edge path in the total graph; free loops are read
/// cyclically and based loops start at the basepoint. `gate_order[k]` lists
/// the crossings with gate k in counterclockwise order.
struct ExplicitDiagram {
  std::vector<EdgePath> loops;
  std::vector<bool> based;
  std::vector<std::vector<GateCrossing>> gate_order;
  std::vector<SurfaceCrossing> surface_crossings;

  /// Crossings of gate `gate` by loop `loop`, in counterclockwise order.
  std::vector<GateCrossing> crossings(int gate, int loop) const;
};

/// Lane normal form of a conjugacy class (a single free loop).
/// The trivial class gives a loop with no segments.
LaneDiagram word_to_diagram(const QuasiSurface& qs, const ConjClass& cls, const LaneOptions& options = {});
/// Lane normal form of the free loop read from an arbitrary word.
LaneDiagram word_to_diagram(const QuasiSurface& qs, const GroupWord& word, const LaneOptions& options = {});
/// Lane normal form of a loop based at the basepoint.
LaneDiagram based_diagram(const QuasiSurface& qs, const GroupWord& word, const LaneOptions& options = {});

/// Edge path of a lane loop. Throws DiagramError on arc/lane mismatch.
EdgePath loop_path(const QuasiSurface& qs, const LaneLoop& loop);
/// Conjugacy class of the first (free) loop of `diagram`.
ConjClass diagram_to_word(const QuasiSurface& qs, const LaneDiagram& diagram);
/// Group element of a based loop.
GroupWord based_loop_word(const QuasiSurface& qs, const LaneLoop& loop);

/// Signed number of crossings of the diagram's loops with `gate`.
int dual_v(const QuasiSurface& qs, int gate, const LaneDiagram& diagram);

enum class BlockOrder {
  EarlierInner,  ///< earlier arguments receive the smaller depths
  LaterInner,
};

/// Merges loop families into one generic family by shifting depths lane by
/// lane, one argument block at a time.
LaneDiagram combine_generic(const QuasiSurface& qs, const std::vector<LaneDiagram>& diagrams,
                            BlockOrder order = BlockOrder::EarlierInner);

/// Reassigns the depths within every lane by a seeded random permutation.
LaneDiagram permute_depths(const LaneDiagram& diagram, std::uint64_t seed);

/// Replaces arc `arc` (counted among the arcs of loop `loop`) by a zigzag
/// through the same lane: forward, back, forward again. The loop's class is
/// unchanged; the new arcs take fresh depths.
LaneDiagram insert_detour(const LaneDiagram& diagram, int loop, int arc);

/// Number of disk arcs in a loop.
int arc_count(const LaneLoop& loop);

/// Positions and crossings of a lane family; it has no surface crossings.
ExplicitDiagram realize(const QuasiSurface& qs, const LaneDiagram& diagram);

/// Straight-chord realization: every disk passage of every loop is a chord
/// between its entry and exit points, placed on the gates in the given
/// counterclockwise orders. Crossings are read off from interleaving.
/// `gate_order[k]` must list exactly the crossings of gate k.
ExplicitDiagram chord_diagram(const QuasiSurface& qs, std::vector<EdgePath> loops, std::vector<bool> based,
                              std::vector<std::vector<GateCrossing>> gate_order);

/// Chord realization of free loops through their reduced edge paths, with
/// the points on each gate shuffled by `seed`.
ExplicitDiagram random_chord_diagram(const QuasiSurface& qs, const std::vector<ConjClass>& classes,
                                     std::uint64_t seed);

/// An explicit family with user-declared surface crossings. Declaring the
/// same pair of arcs twice is rejected unless the signs are antisymmetric.
/// Planar realizability is not checked.
ExplicitDiagram explicit_diagram(const QuasiSurface& qs, std::vector<EdgePath> loops,
                                 std::vector<std::vector<GateCrossing>> gate_order,
                                 std::vector<SurfaceCrossing> declared);
/// A lane family with extra declared surface crossings.
ExplicitDiagram explicit_diagram(const QuasiSurface& qs, const LaneDiagram& lanes,
                                 std::vector<SurfaceCrossing> declared);

/// Reduced cyclic edge path of a free loop.
EdgePath cyclic_path(const QuasiSurface& qs, const ConjClass& cls);

}  // namespace qsurf
