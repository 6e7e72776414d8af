#pragma once

#include "isofold/model.hpp"
#include "isofold/solver.hpp"

#include <cstdint>
#include <string>

namespace isofold {

struct OutsideDomain : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckResult {
    bool pass = false;
    double residual = 0.0;
    std::string detail;
};

/// Result of checking a (instance, mesh) pair without trusting how the mesh
/// was produced.
struct VerifyReport {
    bool pass = false;
    std::string structural_error;  // nonempty: mesh malformed, checks skipped
    CheckResult congruence;
    CheckResult continuity;
    CheckResult coverage;
    CheckResult boundary;
    CheckResult nonexpansive;
};

struct VerifyOptions {
    double tol_len = 0.0;  // 0: default 1e-7 * instance diameter
    int samples = 1000;
    std::uint64_t seed = 7;
};

/// Evaluate the piecewise-affine map at p by locating a containing face.
/// Points on shared edges give the same image from either side because the
/// faces reference identical vertex ids.
PointD evaluate(const SolutionMesh& mesh, const Point2& p);

/// Checks: (1) face edge lengths preserved; (2) every interior edge shared by
/// exactly two faces and every once-used edge on the polygon boundary;
/// (3) face areas tile the polygon and sampled interior points lie in exactly
/// one face; (4) prescribed vertex images and interpolated edge images
/// reproduced; (5) sampled point pairs nonexpansive.
VerifyReport verify(const BoundaryMapping& bm, const SolutionMesh& mesh,
                    const VerifyOptions& opts = {});

struct PropertyReport {
    int trials = 0;
    int premise_hits_a = 0;
    int premise_hits_b = 0;
    int premise_hits_b_critical = 0;
    int violations = 0;
    double worst_residual = 0.0;
    bool pass = false;
};

/// Randomized check of the crossing-segment nonexpansiveness relations:
/// configurations are built by forward folding so the criticality premises
/// hold by construction, then the conclusions are asserted.
PropertyReport property_suite(std::uint64_t seed, int trials = 10000);

}  // namespace isofold
