#pragma once

#include <string>
#include <vector>

#include "poncelet/ellipse.hpp"

namespace poncelet {

enum class CheckStatus { pass, warn, fail };

struct CheckResult {
    std::string name;
    double max_residual;  // worst observed defect
    double tolerance;     // threshold it was compared against
    CheckStatus status;
};

/// Every module invariant evaluated on one table. Locus/curvature/axes
/// checks are included only when a > b (they are degenerate for circles).
/// Closed-form transcription checks (the three locus parametrizations vs
/// the geometric pipeline) downgrade to WARN on failure; everything else
/// fails hard.
std::vector<CheckResult> run_checks(const Ellipse& E);

/// The full sweep: run_checks on the canonical tables plus the cross-table
/// grids — 50-ellipse confocality/similarity/curvature sweep, 200-point
/// axes-map roundtrip, containment flip at b*, covering and zero counts,
/// jet-vs-finite-difference and unimodular invariance of the affine
/// curvature, and the center-kind separation headline.
std::vector<CheckResult> run_grid_checks();

/// True iff no result has status fail (warn is allowed).
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace poncelet
