#include "isofold/split.hpp"

#include <cmath>

namespace isofold {

std::vector<LinearConstraint> split_constraints(const BoundaryMapping& bm, const BendLine& line,
                                                const BendLineImage& img)
{
    const int n = bm.size();
    std::vector<LinearConstraint> out;
    out.reserve(std::max(n - 3, 0));
    const Point2 v = line.origin;
    const PointD fv = img.origin;
    for (int x = 0; x < n; ++x) {
        if (x == line.u || x == line.v || x == line.w) continue;
        const Point2 dv = v - Point2(bm.vertex(x));
        const PointD di = fv - bm.image(x);
        LinearConstraint c;
        c.vertex = x;
        c.B = dv.squaredNorm() - di.squaredNorm();
        c.A = 2.0 * (line.dir.dot(dv) - img.e.dot(di));
        out.push_back(c);
    }
    return out;
}

SplitTriple compute_split(const BoundaryMapping& bm, const BendLine& line,
                          const BendLineImage& img, const Tolerance& tol, double scale)
{
    const double lt = tol.band(scale);
    const double dt = 2.0 * scale * lt;  // tolerance for D(t), squared-length units

    const auto constraints = split_constraints(bm, line, img);
    SplitTriple out;
    out.t_star = line.length;
    for (const auto& c : constraints) {
        if (c.A < -lt) {
            const double tc = std::max(c.B, 0.0) / (-c.A);
            if (tc < out.t_star) out.t_star = tc;
        }
    }
    for (const auto& c : constraints) {
        if (c.A < -lt && std::abs(c.at(out.t_star)) <= dt) out.tight_set.push_back(c.vertex);
    }

    if (out.t_star <= lt)
        throw SplitError(SplitError::Kind::Degenerate,
                         "compute_split: no positive feasible parameter on the bend line");

    out.at_boundary = out.t_star >= line.length - lt;
    if (!out.at_boundary) {
        out.p = line.at(out.t_star);
        out.q = img.at(out.t_star);
        for (int x : out.tight_set) {
            if (visible(bm.vertices, out.p, bm.vertex(x), tol.eps_abs)) {
                out.end_vertex = x;
                break;
            }
        }
        if (out.end_vertex < 0)
            throw SplitError(SplitError::Kind::NoVisibleSplitEnd,
                             "compute_split: no tight vertex visible from the split point");
        return out;
    }

    // The bend line reaches the boundary; the split point is the ray exit.
    out.t_star = line.length;
    out.p = line.at(line.length);
    out.q = img.at(line.length);
    if (line.carrier.kind == Carrier::Kind::Vertex) {
        const int k = line.carrier.index;
        if ((out.q - bm.image(k)).norm() > lt)
            throw SplitError(SplitError::Kind::SeamMismatch,
                             "compute_split: bend line image misses the exit vertex image");
        out.end_vertex = k;
    } else {
        const int j = line.carrier.index;
        const Point2 a = bm.vertex(j);
        const Point2 b = bm.vertex(bm.next(j));
        const double s = (out.p - a).norm() / (b - a).norm();
        if ((out.q - bm.edge_image(j, s)).norm() > lt)
            throw SplitError(SplitError::Kind::SeamMismatch,
                             "compute_split: bend line image misses the interpolated exit image");
        out.end_edge = j;
    }
    return out;
}

}  // namespace isofold
