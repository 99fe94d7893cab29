#pragma once

#include <string>

#include "qsurf/free_group.hpp"
#include "qsurf/linear_combination.hpp"

namespace qsurf {

/// Element of the group algebra Z[F] of a free group; keys are reduced words.
using GroupRingElement = LinearCombination<GroupWord, Integer>;
/// Element of Z[F]/[Z[F], Z[F]]: integer combination of conjugacy classes.
using LoopCombination = LinearCombination<ConjClass, Integer>;

/// The group-ring element `coeff * word` (the word is reduced first).
GroupRingElement ring_element(const GroupWord& word, const Integer& coeff = 1);
/// The loop combination `coeff * <word>`.
LoopCombination loop_element(const GroupWord& word, const Integer& coeff = 1);

GroupRingElement ring_multiply(const GroupRingElement& x, const GroupRingElement& y);
/// Left and right multiplication by a single group element.
GroupRingElement left_multiply(const GroupWord& g, const GroupRingElement& x);
GroupRingElement right_multiply(const GroupRingElement& x, const GroupWord& g);

/// The projection A -> A/[A, A].
LoopCombination project_p(const GroupRingElement& x);

/// The augmentation, sending every group element to 1.
Integer augmentation(const GroupRingElement& x);

/// Serialized as a list of (coefficient, word) pairs in canonical order.
std::string format_combination(const GroupRingElement& x);
std::string format_combination(const LoopCombination& x);

}  // namespace qsurf
