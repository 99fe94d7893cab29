#pragma once

#include <cstdint>

#include "qsurf/diagram.hpp"
#include "qsurf/orientation.hpp"

namespace qsurf {

/// A class in H1 of the quasi-surface: exponent sums over the free generators.
using H1Class = VectorX<std::int64_t>;

H1Class homology_class(const QuasiSurface& qs, const GroupWord& word);
H1Class homology_class(const QuasiSurface& qs, const ConjClass& cls);
/// A conjugacy class representing `x`: the product of generator powers.
ConjClass representative(const H1Class& x);

/// Signed crossing count of gate `gate` on a class, the covector v_k.
std::int64_t gate_covector(const QuasiSurface& qs, int gate, const H1Class& x);

/// First intersection form of loops a and b of a generic family: surface
/// crossing signs plus eps(omega,k) eps_p eps_q over T_omega(a, b).
std::int64_t first_form(const GateOrientation& omega, const ExplicitDiagram& diagram, int a, int b);
/// Same on a combined lane family of two loops (a first, b second).
std::int64_t first_form(const QuasiSurface& qs, const GateOrientation& omega, const LaneDiagram& a,
                        const LaneDiagram& b);
std::int64_t first_form(const QuasiSurface& qs, const GateOrientation& omega, const H1Class& x, const H1Class& y);

/// Second intersection form i_X(x, y) = x._w y - y._w x, computed with the
/// all-counterclockwise orientation unless one is given.
std::int64_t second_form(const QuasiSurface& qs, const H1Class& x, const H1Class& y);
std::int64_t second_form(const QuasiSurface& qs, const GateOrientation& omega, const H1Class& x, const H1Class& y);

/// Gram matrix of i_X on the generator basis.
MatrixX<std::int64_t> intersection_gram(const QuasiSurface& qs);
MatrixX<std::int64_t> intersection_gram(const QuasiSurface& qs, const GateOrientation& omega);

}  // namespace qsurf
