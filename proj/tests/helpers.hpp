#pragma once

#include <random>
#include <string>

#include "qsurf/fixtures.hpp"
#include "qsurf/group_ring.hpp"
#include "qsurf/quasi_surface.hpp"

namespace qsurf::test {

inline GroupWord W(const std::string& text) { return parse_word(text); }
inline ConjClass C(const std::string& text) { return canonical_conjugacy(parse_word(text)); }
inline LoopCombination L(const std::string& text, long coeff = 1) { return loop_element(parse_word(text), coeff); }
inline GroupRingElement R(const std::string& text, long coeff = 1) { return ring_element(parse_word(text), coeff); }
inline QuasiSurface fixture(const std::string& name) { return build(fixture_spec(name)); }

// QT2 with an extra loop edge at v, so that Y carries a cycle of its own.
inline QuasiSurfaceSpec qt2_with_y_loop() {
  QuasiSurfaceSpec spec = fixture_spec("QT2");
  spec.edges.push_back({"c", "v", "v"});
  return spec;
}

}  // namespace qsurf::test
