#ifndef MRR_TESTS_CHECKS_H_
#define MRR_TESTS_CHECKS_H_

// Invariant checkers and random inputs shared by the unit tests and the
// acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "mrr/image.h"
#include "mrr/pyramid.h"

namespace mrr::check {

// Binary edge image drawn from a mix of generators: scattered pixels,
// straight segments, filled rectangles, empty and full frames.
ImageF RandomEdgeImage(std::mt19937_64& rng, int width, int height);

// Default level ladders with every enabled fine level's variance replaced by a
// random value in [0, max_variance].
std::vector<LevelConfig> RandomLevels(std::mt19937_64& rng, Real max_variance);

// Human-readable descriptions of every violated pyramid invariant: alpha in
// [0, 1], stencil == (alpha > 0), coarsest level complete, inclusiveness
// between consecutive enabled levels, level shapes. Empty when all hold.
std::vector<std::string> PyramidViolations(const MaskPyramid& pyramid,
                                           const std::vector<LevelConfig>& levels);

// Every stencil pixel of `small` is also set in `large` (same level shapes).
bool StencilsContained(const MaskPyramid& small, const MaskPyramid& large);

}  // namespace mrr::check

#endif  // MRR_TESTS_CHECKS_H_
