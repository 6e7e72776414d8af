#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <vector>

namespace isofold {

using Point2 = Eigen::Vector2d;
using PointD = Eigen::VectorXd;

/// Polygon in the domain plane: one column per vertex, counterclockwise.
using Polygon = Eigen::Matrix2Xd;

/// Thrown when an input polygon or point pair violates a precondition
/// (zero-length edge, coincident pair, ...).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Global tolerance policy. All length comparisons route through one of
/// these so that pair classifications stay mutually consistent.
struct Tolerance {
    double eps_rel = 1e-9;
    double eps_abs = 1e-12;

    static Tolerance for_diameter(double diameter)
    {
        Tolerance t;
        t.eps_abs = 1e-12 * diameter;
        return t;
    }

    /// Comparison band for a length of magnitude `scale`.
    double band(double scale) const { return std::max(eps_abs, eps_rel * scale); }
};

enum class PairClass { Expansive, Critical, Contractive };

/// Compare the image distance of a point pair against its domain distance.
/// Critical means equal within the tolerance band; Expansive / Contractive
/// mean strictly longer / shorter beyond it.
PairClass classify_pair(const Point2& a, const Point2& b, const PointD& fa, const PointD& fb,
                        const Tolerance& tol);

double cross2(const Point2& a, const Point2& b);

/// Signed area, positive for counterclockwise orientation.
double signed_area(const Polygon& poly);

/// Bounding-box diagonal; the instance scale used by tolerance policies.
double bbox_diameter(const Polygon& poly);

/// Interior angle at vertex i in (0, 2*pi); pi for collinear adjacent
/// edges, greater than pi at reflex vertices. Assumes counterclockwise
/// orientation. Zero-length incident edges raise GeometryError.
double interior_angle(const Polygon& poly, int i);

/// Unsigned angle at fv between the rays toward fu and fw, in [0, pi].
double image_angle(const PointD& fu, const PointD& fv, const PointD& fw, const Tolerance& tol);

/// Closed point-in-polygon test; points within eps of the boundary count
/// as inside.
bool point_in_polygon(const Polygon& poly, const Point2& p, double eps);

double distance_to_boundary(const Polygon& poly, const Point2& p);

/// True iff the closed segments intersect (shared endpoints count).
bool segments_cross(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2);

/// True iff the segments intersect at a single interior point of both.
bool segments_cross_proper(const Point2& a1, const Point2& a2, const Point2& b1,
                           const Point2& b2);

/// True iff the segment from a to b lies in the closed polygon. Boundary
/// contact is allowed.
bool visible(const Polygon& poly, const Point2& a, const Point2& b, double eps);

/// Stricter variant used when cutting along a chord: the open segment must
/// not touch the boundary at all, so that both resulting pieces are simple.
bool visible_through_interior(const Polygon& poly, const Point2& a, const Point2& b, double eps);

/// Boundary feature hit by a ray: an edge interior or a vertex.
struct Carrier {
    enum class Kind { Edge, Vertex } kind;
    int index;
};

struct RayExit {
    Point2 point;
    double length;
    Carrier carrier;
};

/// Follow the open ray from vertex v along dir until it first leaves the
/// closed polygon. Grazing a reflex vertex and continuing inside does not
/// end the ray. Returns nullopt when dir points strictly outside.
std::optional<RayExit> ray_exit(const Polygon& poly, int v, const Point2& dir, double eps);

/// Simplicity check: no zero-length edges, no spikes, and nonadjacent
/// edges disjoint. Collinear adjacent edges are legal.
bool polygon_is_simple(const Polygon& poly, double eps);

}  // namespace isofold
