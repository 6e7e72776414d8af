#pragma once

#include "isofold/bend.hpp"

namespace isofold {

/// Nonexpansiveness of the bend line against vertex x, reduced to an affine
/// function of the ray parameter: D(t) = B + A*t with D(t) >= 0 iff
/// ||p(t)-x|| >= ||q(t)-f(x)||. The quadratic terms cancel because both
/// parameterizations are unit-speed.
struct LinearConstraint {
    int vertex;
    double A;
    double B;

    double at(double t) const { return B + A * t; }
};

struct SplitError : std::runtime_error {
    enum class Kind { NoVisibleSplitEnd, SeamMismatch, Degenerate };
    Kind kind;
    SplitError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

/// Farthest bend point that stays nonexpansive with every vertex, together
/// with its image and split end. When t* reaches the end of the bend line the
/// split point lies on the boundary: end_vertex names the carrier vertex if
/// the ray exits at one, otherwise end_edge names the carrier edge and the
/// point is synthetic.
struct SplitTriple {
    Point2 p{0.0, 0.0};
    PointD q;
    double t_star = 0.0;
    bool at_boundary = false;
    int end_vertex = -1;
    int end_edge = -1;
    std::vector<int> tight_set;
};

/// One constraint per vertex outside {u, v, w}, each touched once.
std::vector<LinearConstraint> split_constraints(const BoundaryMapping& bm, const BendLine& line,
                                                const BendLineImage& img);

/// Compute the split triple for a bend line/image pair. scale is the root
/// instance diameter so that nested pieces share one comparison policy.
SplitTriple compute_split(const BoundaryMapping& bm, const BendLine& line,
                          const BendLineImage& img, const Tolerance& tol, double scale);

}  // namespace isofold
