#pragma once

#include <string>

#include "genus2/chain.hpp"
#include "genus2/report.hpp"

namespace genus2 {

/// Writes the chain as a "genus2-scene v1" text file: one params line,
/// then one similarity per line with 17-significant-digit doubles so the
/// round trip is bit-identical.
void write_scene(const Chain& chain, const std::string& path);

/// Parses and validates a scene file. Throws SceneFormatError (with the
/// offending line) on malformed input or any invariant violation
/// (version tag, m multiple of 16, k consistency, map scale != k,
/// non-orthonormal rotations).
Chain read_scene(const std::string& path);

/// Writes all components of stage `level` as an OBJ: one group per
/// component named by its address, 8 vertices / 12 outward-facing
/// triangles per beam, optional core polylines.
void export_obj(const Chain& chain, int level, const std::string& path, bool with_cores = false,
                long budget = 100000);

struct VerifyOptions {
    int depth = 2;
    bool skip_containment = false;
    bool skip_disjoint = false;
    bool skip_linking = false;
    bool skip_symmetry = false;
    bool skip_disks = false;
};

/// Aggregated certification: four-way configuration, chain checks,
/// nesting to `depth` (exhaustive within budget, sampled beyond),
/// filling-disk piercings of consecutive pairs, iota1 symmetry, and the
/// derived all-levels disjointness corollary.
VerificationReport run_full_verification(const Chain& chain, const VerifyOptions& opts = {});
VerificationReport run_full_verification(const ChainParams& params, int depth);

}  // namespace genus2
