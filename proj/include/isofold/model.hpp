#pragma once

#include "isofold/geom.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace isofold {

/// A polygon together with prescribed images for its vertices. The boundary
/// map is linear on edge interiors, so the caller must already have inserted
/// every boundary point where the map bends.
struct BoundaryMapping {
    Polygon vertices;        // 2 x n, counterclockwise
    Eigen::MatrixXd images;  // d x n, images.col(i) maps vertices.col(i)

    int size() const { return static_cast<int>(vertices.cols()); }
    int dimension() const { return static_cast<int>(images.rows()); }
    double diameter() const { return bbox_diameter(vertices); }

    Point2 vertex(int i) const { return vertices.col(i); }
    PointD image(int i) const { return images.col(i); }
    int next(int i) const { return (i + 1) % size(); }
    int prev(int i) const { return (i + size() - 1) % size(); }

    /// Interpolated image of a point at parameter t in [0,1] along edge i.
    PointD edge_image(int i, double t) const
    {
        return images.col(i) + t * (images.col(next(i)) - images.col(i));
    }

    /// Default tolerance for this instance's scale.
    Tolerance tolerance() const { return Tolerance::for_diameter(diameter()); }
};

enum class ViolationKind {
    NotSimple,
    WrongDimension,
    DegenerateEdge,
    ExpansivePair,
    EdgeNotCritical,
};

struct Violation {
    ViolationKind kind;
    int i = -1;
    int j = -1;
    double domain_length = 0.0;
    double image_length = 0.0;
};

std::string to_string(ViolationKind kind);
std::string describe(const Violation& v);

/// Validity decision: nullopt when the mapping is valid, otherwise the first
/// violation in lexicographic index order. Structural failures (NotSimple,
/// WrongDimension, DegenerateEdge) are reported before pair checks.
std::optional<Violation> validate(const BoundaryMapping& bm, const Tolerance& tol);

std::optional<Violation> validate(const BoundaryMapping& bm);

/// One stop of a restriction cycle: either a parent vertex index or a new
/// boundary point with a prescribed image.
struct CycleEntry {
    int parent = -1;  // >= 0: inherit vertex/image from the parent mapping
    Point2 point{0.0, 0.0};
    PointD image;

    static CycleEntry from_parent(int index)
    {
        CycleEntry e;
        e.parent = index;
        return e;
    }
    static CycleEntry from_point(const Point2& p, const PointD& q)
    {
        CycleEntry e;
        e.point = p;
        e.image = q;
        return e;
    }
};

/// Build the boundary mapping of a sub-polygon described by a cycle of
/// parent vertices and inserted points.
BoundaryMapping restrict_mapping(const BoundaryMapping& bm, const std::vector<CycleEntry>& cycle);

/// Reverse orientation in place (vertex 0 stays first) if the polygon is
/// clockwise; returns true when a flip happened.
bool normalize_ccw(BoundaryMapping& bm);

}  // namespace isofold
