#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qsurf/quasi_surface.hpp"

namespace qsurf {

/// Built-in quasi-surfaces:
///   "QT2"  one disk with two gates glued to a single vertex (rank 1)
///   "QG1"  one disk with four gates, alternately glued to two vertices (rank 2)
///   "QD2"  two disks over a path graph with three vertices (rank 3)
///   "QTRI" one disk with three gates glued to one vertex (rank 2)
///   "QTOR" a disk with four gates glued pairwise along two edges, a torus with
///          a hole (rank 2)
QuasiSurfaceSpec fixture_spec(std::string_view name);
std::vector<std::string> fixture_names();

struct RandomSurfaceLimits {
  int max_disks = 2;
  int max_gates = 4;
  int max_vertices = 3;
  int max_edges = 3;
};

/// A connected random quasi-surface of rank at least one.
QuasiSurface random_quasi_surface(std::mt19937_64& rng, const RandomSurfaceLimits& limits = {});

/// A reduced word of length between 1 and `max_length`.
GroupWord random_word(std::mt19937_64& rng, int rank, int max_length);
/// The class of a random word; may be trivial.
ConjClass random_class(std::mt19937_64& rng, int rank, int max_length);
/// A nontrivial random class.
ConjClass random_nontrivial_class(std::mt19937_64& rng, int rank, int max_length);

}  // namespace qsurf
