// Word normalization.  Every rule is local to an adjacent letter pair, so a
// reduction strategy is just a choice of which pending word and which redex
// to rewrite next; all strategies terminate (each step lowers the measure
// (generator count, inversions, length) lexicographically) and agree on the
// result, which the property tests exercise.
#pragma once

#include <cstdint>
#include <vector>

#include "qs3/element.hpp"

namespace qs3 {

// Positions i where rewrite_pair(w[i], w[i+1]) applies.
std::vector<int> redex_positions(const AlgebraPresentation& pres, const Word& w);

// Deterministic normalization (leftmost redex first).
NCElement normal_form(const Word& w, const AlgebraPresentation& pres);

// Same result through a randomized redex order; used to test confluence.
NCElement normal_form_randomized(const Word& w, const AlgebraPresentation& pres,
                                 std::uint64_t seed);

}  // namespace qs3
