#pragma once

#include <vector>

#include "qsurf/diagram.hpp"
#include "qsurf/group_ring.hpp"
#include "qsurf/orientation.hpp"

namespace qsurf {

/// A loop based at the basepoint, as a reduced word in the generators.
using BasedLoop = GroupWord;

/// The geometric m-brace of gate `gate` on loops `loops` of a family: for
/// every choice of one gate crossing per loop, the product of the crossing
/// signs times the class of the concatenated rotations.
LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const ExplicitDiagram& diagram,
                                     const std::vector<int>& loops);
/// The same on classes, through their lane normal forms.
LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const std::vector<ConjClass>& xs);
LoopCombination gate_brace_geometric(const QuasiSurface& qs, int gate, const std::vector<LoopCombination>& xs);

/// Homotopy intersection form x ._w y on loops a and b of a generic family.
LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const ExplicitDiagram& diagram, int a,
                       int b);
LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x, const ConjClass& y);
LoopCombination bullet(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                       const LoopCombination& y);

/// [x, y] = x ._w y - y ._w x, with the all-counterclockwise orientation by default.
LoopCombination second_bracket(const QuasiSurface& qs, const ConjClass& x, const ConjClass& y);
LoopCombination second_bracket(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x,
                               const ConjClass& y);
LoopCombination second_bracket(const QuasiSurface& qs, const LoopCombination& x, const LoopCombination& y);
LoopCombination second_bracket(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                               const LoopCombination& y);

/// Based pairing x ._w y in the group ring for a free loop `a` and a based
/// loop `b` of one family: each term splices the rotated free loop into the
/// based loop at the crossing.
GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const ExplicitDiagram& diagram,
                            int a, int b);
GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const ConjClass& x,
                            const BasedLoop& y);
GroupRingElement kk_pairing(const QuasiSurface& qs, const GateOrientation& omega, const LoopCombination& x,
                            const GroupRingElement& y);

}  // namespace qsurf
