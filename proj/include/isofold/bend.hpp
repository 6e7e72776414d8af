#pragma once

#include "isofold/model.hpp"
#include "isofold/rng.hpp"

#include <utility>

namespace isofold {

/// Thrown when sphere constraints admit no solution (negative discriminant
/// beyond tolerance, or an off-plane requirement in the plane).
struct InfeasibleGeometry : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BendPolicy { Bisector, MinAngle, MaxAngle, Random };

/// A single candidate crease at vertex v, parameterized unit-speed as
/// p(t) = origin + t * dir for t in [0, length].
struct BendLine {
    int v = -1;
    int u = -1;  // next neighbor of v
    int w = -1;  // previous neighbor of v
    double theta = 0.0;
    double phi = 0.0;
    double beta = 0.0;
    Point2 origin{0.0, 0.0};
    Point2 dir{0.0, 0.0};
    double length = 0.0;
    Carrier carrier{Carrier::Kind::Edge, -1};

    Point2 at(double t) const { return origin + t * dir; }
};

/// Congruent image of a bend line: q(t) = origin + t * e.
struct BendLineImage {
    PointD origin;
    PointD e;

    PointD at(double t) const { return origin + t * e; }
};

/// Admissible range of the angle between the crease and the edge toward u.
/// A closed interval for d >= 3; for d = 2 only the two endpoints admit an
/// image. Requires 0 < phi < theta.
std::pair<double, double> bend_angle_interval(double theta, double phi);

/// Point at the prescribed distances from the three centers, solved in the
/// frame spanned by (c2->c1, c2->c3, one orthogonal direction). branch picks
/// the sign of the off-plane coordinate; an off-plane coordinate within
/// tolerance collapses to the planar solution.
PointD trilaterate(const PointD& c1, const PointD& c2, const PointD& c3, double r1, double r2,
                   double r3, int branch, const Tolerance& tol, double scale);

/// Choose a bend line at v. Preconditions: the neighbor pair of v is
/// contractive, and v is contractive with every visible nonadjacent vertex.
/// tol is the root instance tolerance so that nested pieces share one
/// comparison policy.
BendLine select_bend_line(const BoundaryMapping& bm, int v, BendPolicy policy, Rng& rng,
                          const Tolerance& tol);

BendLine select_bend_line(const BoundaryMapping& bm, int v, BendPolicy policy, Rng& rng);

/// Construct the congruent image ray of a bend line. d = 2 uses the planar
/// two-ray construction; d >= 3 trilaterates against f(u), f(v), f(w).
BendLineImage bend_line_image(const BoundaryMapping& bm, const BendLine& line, int branch,
                              const Tolerance& tol, double scale);

BendLineImage bend_line_image(const BoundaryMapping& bm, const BendLine& line, int branch);

}  // namespace isofold
