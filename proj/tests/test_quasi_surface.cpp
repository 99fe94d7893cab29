#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qsurf/diagram.hpp"

using namespace qsurf;
using namespace qsurf::test;

namespace {

EdgePath edges(const QuasiSurface& qs, std::initializer_list<std::pair<const char*, int>> letters) {
  EdgePath out;
  for (const auto& [name, sign] : letters) {
    int e = 0;
    while (qs.edge_name(e) != name) ++e;
    out.push_back({e, sign});
  }
  return out;
}

LaneLoop free_loop(std::vector<Segment> segments) { return LaneLoop{std::move(segments), false}; }

}  // namespace

TEST(Build, QT2) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_EQ(qs.rank(), 1);
  EXPECT_EQ(qs.gate_count(), 2);
  EXPECT_EQ(qs.generator_path(0), edges(qs, {{"e:g1", 1}, {"e:g2", -1}}));
}

TEST(Build, FixtureRanks) {
  EXPECT_EQ(fixture("QG1").rank(), 2);
  EXPECT_EQ(fixture("QD2").rank(), 3);
  EXPECT_EQ(fixture("QTRI").rank(), 2);
  EXPECT_EQ(fixture("QTOR").rank(), 2);
}

TEST(Build, EulerCharacteristicGivesRank) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const QuasiSurface qs = random_quasi_surface(rng);
    EXPECT_EQ(qs.rank(), qs.total_edge_count() - qs.total_vertex_count() + 1);
    for (int g = 0; g < qs.rank(); ++g) {
      const EdgePath& p = qs.generator_path(g);
      ASSERT_FALSE(p.empty());
      EXPECT_EQ(qs.letter_source(p.front()), qs.basepoint());
      EXPECT_EQ(qs.letter_target(p.back()), qs.basepoint());
      EXPECT_EQ(qs.path_to_word(p), (GroupWord{{g, 1}}));
    }
  }
}

TEST(Build, ZeroGateDiskIsDisconnected) {
  QuasiSurfaceSpec spec;
  spec.disks.push_back({});
  spec.vertices = {"v"};
  spec.basepoint = "v";
  try {
    build(spec);
    FAIL() << "expected a validation error";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("disconnected G"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("disk 1"), std::string::npos) << e.what();
  }
}

TEST(Build, RejectsBadSpecs) {
  QuasiSurfaceSpec dup = fixture_spec("QT2");
  dup.disks[0].gates.push_back("g1");
  EXPECT_THROW(build(dup), ValidationError);

  QuasiSurfaceSpec partial = fixture_spec("QT2");
  partial.gluing.erase("g2");
  EXPECT_THROW(build(partial), ValidationError);

  QuasiSurfaceSpec unknown = fixture_spec("QT2");
  unknown.gluing["g2"] = "w";
  EXPECT_THROW(build(unknown), ValidationError);

  QuasiSurfaceSpec base = fixture_spec("QT2");
  base.basepoint = "w";
  EXPECT_THROW(build(base), ValidationError);

  QuasiSurfaceSpec stray = fixture_spec("QT2");
  stray.gluing["g9"] = "v";
  EXPECT_THROW(build(stray), ValidationError);
}

TEST(GateDerivative, QT2) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_EQ(fox_apply(gate_derivative(qs, 0), W("g1")), R(""));
  EXPECT_EQ(fox_apply(gate_derivative(qs, 1), W("g1")), R("g1", -1));
}

TEST(GateDerivative, ZeroOffItsGate) {
  const QuasiSurface qs = build(qt2_with_y_loop());
  // g1 is the loop edge of Y, which crosses no gate.
  EXPECT_EQ(qs.edge_name(qs.generator_edge(0)), "c");
  for (int k = 0; k < qs.gate_count(); ++k) EXPECT_TRUE(fox_apply(gate_derivative(qs, k), W("g1 g1")).is_zero());
}

TEST(GateDerivative, AugmentationCountsCrossings) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    const QuasiSurface qs = random_quasi_surface(rng);
    for (int k = 0; k < qs.gate_count(); ++k)
      for (int g = 0; g < qs.rank(); ++g)
        EXPECT_EQ(augmentation(fox_apply(gate_derivative(qs, k), GroupWord{{g, 1}})), qs.gate_crossing_count(k, g));
  }
}

TEST(DiagramToWord, Examples) {
  const QuasiSurface qs = fixture("QT2");
  const LaneDiagram one{{free_loop({DiskArc{0, 0, 1, true}, SingularPath{}})}};
  EXPECT_EQ(diagram_to_word(qs, one), C("g1"));
  const LaneDiagram there_and_back{
      {free_loop({DiskArc{0, 0, 1, true}, SingularPath{}, DiskArc{0, 1, 1, true}, SingularPath{}})}};
  EXPECT_TRUE(diagram_to_word(qs, there_and_back).is_trivial());
}

TEST(DiagramToWord, LoopInY) {
  const QuasiSurface qs = build(qt2_with_y_loop());
  const LaneDiagram d{{free_loop({SingularPath{edges(qs, {{"c", 1}})}})}};
  EXPECT_EQ(diagram_to_word(qs, d), C("g1"));
  for (int k = 0; k < qs.gate_count(); ++k) EXPECT_EQ(dual_v(qs, k, d), 0);
}

TEST(DiagramToWord, RejectsMismatchedArcs) {
  const QuasiSurface qs = fixture("QT2");
  EXPECT_THROW(diagram_to_word(qs, LaneDiagram{{free_loop({DiskArc{0, 5, 1, true}, SingularPath{}})}}), DiagramError);
  // On QG1 the exit through g2 lands on v2, but the next arc enters through g1 at v1.
  const QuasiSurface qg = fixture("QG1");
  EXPECT_THROW(diagram_to_word(qg, LaneDiagram{{free_loop({DiskArc{0, 0, 1, true}, DiskArc{0, 0, 2, true}})}}),
               DiagramError);
}

TEST(WordToDiagram, Examples) {
  const QuasiSurface qs = fixture("QT2");
  const LaneDiagram z = word_to_diagram(qs, C("g1"));
  ASSERT_EQ(z.loops.size(), 1u);
  ASSERT_EQ(arc_count(z.loops[0]), 1);
  EXPECT_EQ(std::get<DiskArc>(z.loops[0].segments[0]), (DiskArc{0, 0, 1, true}));

  const LaneDiagram z2 = word_to_diagram(qs, C("g1 g1"));
  EXPECT_EQ(arc_count(z2.loops[0]), 2);
  EXPECT_EQ(dual_v(qs, 0, z2), 2);
  EXPECT_EQ(dual_v(qs, 1, z2), -2);

  EXPECT_EQ(dual_v(qs, 0, z), 1);
  EXPECT_EQ(dual_v(qs, 1, z), -1);

  const LaneDiagram empty = word_to_diagram(qs, C(""));
  ASSERT_EQ(empty.loops.size(), 1u);
  EXPECT_TRUE(empty.loops[0].segments.empty());
}

TEST(WordToDiagram, RoundTripsOnEveryRoute) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 300; ++i) {
    const QuasiSurface qs = random_quasi_surface(rng);
    const ConjClass x = random_class(rng, qs.rank(), 8);
    for (Route route : {Route::Shortest, Route::Counterclockwise, Route::Clockwise})
      for (bool reduce : {true, false}) {
        const LaneDiagram d = word_to_diagram(qs, x, {route, reduce});
        EXPECT_EQ(diagram_to_word(qs, d), x);
        for (int k = 0; k < qs.gate_count(); ++k)
          EXPECT_EQ(dual_v(qs, k, d), [&] {
            int v = 0;
            for (const Letter& l : x.word()) v += l.sign * qs.gate_crossing_count(k, l.index);
            return v;
          }());
      }
    const GroupWord u = random_word(rng, qs.rank(), 6);
    const LaneDiagram b = based_diagram(qs, u);
    EXPECT_EQ(based_loop_word(qs, b.loops[0]), u);
  }
}

TEST(WordToDiagram, DepthsAndDetours) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    const QuasiSurface qs = random_quasi_surface(rng);
    const ConjClass x = random_nontrivial_class(rng, qs.rank(), 8);
    const LaneDiagram d = word_to_diagram(qs, x);
    EXPECT_EQ(diagram_to_word(qs, permute_depths(d, rng())), x);
    if (arc_count(d.loops[0]) > 0) {
      const LaneDiagram detour = insert_detour(d, 0, static_cast<int>(rng() % static_cast<unsigned>(arc_count(d.loops[0]))));
      EXPECT_EQ(arc_count(detour.loops[0]), arc_count(d.loops[0]) + 2);
      EXPECT_EQ(diagram_to_word(qs, detour), x);
    }
  }
}

TEST(CombineGeneric, QT2GateOrders) {
  const QuasiSurface qs = fixture("QT2");
  const LaneDiagram z = word_to_diagram(qs, C("g1"));
  const ExplicitDiagram e = realize(qs, combine_generic(qs, {z, z}));
  ASSERT_EQ(e.gate_order[0].size(), 2u);
  EXPECT_EQ(e.gate_order[0][0].loop, 1);
  EXPECT_EQ(e.gate_order[0][1].loop, 0);
  EXPECT_EQ(e.gate_order[1][0].loop, 0);
  EXPECT_EQ(e.gate_order[1][1].loop, 1);
  EXPECT_TRUE(e.surface_crossings.empty());

  const ExplicitDiagram later = realize(qs, combine_generic(qs, {z, z}, BlockOrder::LaterInner));
  EXPECT_EQ(later.gate_order[0][0].loop, 0);
}

TEST(CombineGeneric, SingleDiagramUnchanged) {
  const QuasiSurface qs = fixture("QG1");
  const LaneDiagram d = word_to_diagram(qs, C("g1 g2 g1^-1 g2 g2"));
  EXPECT_EQ(combine_generic(qs, {d}), d);
}

TEST(CombineGeneric, LoopInYSharesNoGate) {
  const QuasiSurface qs = build(qt2_with_y_loop());
  const ExplicitDiagram e =
      realize(qs, combine_generic(qs, {word_to_diagram(qs, C("g2")), word_to_diagram(qs, C("g1"))}));
  for (const auto& order : e.gate_order)
    for (const GateCrossing& c : order) EXPECT_EQ(c.loop, 0);
}

TEST(ExplicitDiagram, DeclaredCrossingsMustBeAntisymmetric) {
  const QuasiSurface qs = fixture("QT2");
  const LaneDiagram zz = combine_generic(qs, {word_to_diagram(qs, C("g1")), word_to_diagram(qs, C("g1"))});
  EXPECT_NO_THROW(explicit_diagram(qs, zz, {{0, 0, 1, 0, 1}, {1, 0, 0, 0, -1}}));
  EXPECT_THROW(explicit_diagram(qs, zz, {{0, 0, 1, 0, 1}, {1, 0, 0, 0, 1}}), DiagramError);
  EXPECT_THROW(explicit_diagram(qs, zz, {{0, 0, 1, 0, 1}, {0, 0, 1, 0, 1}}), DiagramError);
  EXPECT_THROW(explicit_diagram(qs, zz, {{0, 0, 0, 0, 1}}), DiagramError);
  EXPECT_THROW(explicit_diagram(qs, zz, {{0, 1, 1, 0, 1}}), DiagramError);
}

TEST(ChordDiagram, OrdersMustMatchTheLoops) {
  const QuasiSurface qs = fixture("QT2");
  const EdgePath z = qs.generator_path(0);
  EXPECT_THROW(chord_diagram(qs, {z}, {false}, {{}, {}}), DiagramError);
  EXPECT_NO_THROW(chord_diagram(qs, {z}, {false}, {{{0, 0, 1}}, {{0, 1, -1}}}));
}
