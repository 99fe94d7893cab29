#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "qsurf/diagram.hpp"
#include "qsurf/fox.hpp"
#include "qsurf/quasi_surface.hpp"
#include "qsurf/trace_eval.hpp"

namespace qsurf {

/// Malformed input text. `what()` includes the byte offset when known.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::ordered_json;

QuasiSurfaceSpec parse_spec(const std::string& text);
QuasiSurfaceSpec load_spec_file(const std::string& path);
Json spec_to_json(const QuasiSurfaceSpec& spec);

/// Coefficients are JSON integers when they fit in 64 bits, strings otherwise.
Json to_json(const Integer& value);
Json to_json(const LoopCombination& x);
Json to_json(const GroupRingElement& x);
Json to_json(const FoxDerivative& d);
Json to_json(const MatrixQ& m);

/// A loop expression: either a word ("g1 g2^-1") or a JSON list of
/// [coefficient, word] pairs.
LoopCombination parse_loop_expression(const std::string& text);
GroupRingElement parse_ring_element(const Json& value);
FoxDerivative parse_fox_derivative(const Json& value, int rank);
/// {"g1": [["1","0"],["1/2","1"]], ...}; entries are "p/q" strings or integers.
RepresentationPoint parse_representation(const Json& value, int rank);
Json representation_to_json(const RepresentationPoint& rho);

/// Lane diagrams: {"loops":[{"based":false,"segments":[{"arc":{"disk":1,"lane":1,
/// "depth":1,"forward":true}},{"path":["y1","y2^-1"]}]}]}. Disks and lanes are
/// 1-based in JSON; paths name edges of Y.
Json diagram_to_json(const QuasiSurface& qs, const LaneDiagram& d);
LaneDiagram parse_diagram(const QuasiSurface& qs, const Json& value);

Json parse_json(const std::string& text);

}  // namespace qsurf
