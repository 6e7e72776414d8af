#include "isofold/model.hpp"

#include <cmath>

namespace isofold {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
        case ViolationKind::NotSimple: return "NotSimple";
        case ViolationKind::WrongDimension: return "WrongDimension";
        case ViolationKind::DegenerateEdge: return "DegenerateEdge";
        case ViolationKind::ExpansivePair: return "ExpansivePair";
        case ViolationKind::EdgeNotCritical: return "EdgeNotCritical";
    }
    return "Unknown";
}

std::string describe(const Violation& v)
{
    std::string s = to_string(v.kind);
    s += " at (" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
    s += " domain " + std::to_string(v.domain_length) + " image " + std::to_string(v.image_length);
    return s;
}

std::optional<Violation> validate(const BoundaryMapping& bm, const Tolerance& tol)
{
    const int n = bm.size();
    if (bm.dimension() < 2 || static_cast<int>(bm.images.cols()) != n)
        return Violation{ViolationKind::WrongDimension, 0, 0, 0.0, 0.0};
    if (n < 3) return Violation{ViolationKind::NotSimple, 0, 0, 0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double len = (bm.vertex(bm.next(i)) - bm.vertex(i)).norm();
        if (len <= tol.eps_abs) return Violation{ViolationKind::DegenerateEdge, i, bm.next(i), len, 0.0};
    }
    if (!polygon_is_simple(bm.vertices, tol.eps_abs))
        return Violation{ViolationKind::NotSimple, 0, 0, 0.0, 0.0};
    // Pairwise nonexpansiveness plus criticality of every edge, first
    // violation in lexicographic order.
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dd = (bm.vertex(i) - bm.vertex(j)).norm();
            const double di = (bm.image(i) - bm.image(j)).norm();
            const bool adjacent = (j == bm.next(i)) || (i == bm.next(j));
            const double band = tol.band(dd);
            if (adjacent) {
                if (std::abs(di - dd) > band)
                    return Violation{ViolationKind::EdgeNotCritical, i, j, dd, di};
            } else if (di - dd > band) {
                return Violation{ViolationKind::ExpansivePair, i, j, dd, di};
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> validate(const BoundaryMapping& bm)
{
    return validate(bm, bm.tolerance());
}

BoundaryMapping restrict_mapping(const BoundaryMapping& bm, const std::vector<CycleEntry>& cycle)
{
    const int m = static_cast<int>(cycle.size());
    BoundaryMapping out;
    out.vertices.resize(2, m);
    out.images.resize(bm.dimension(), m);
    for (int k = 0; k < m; ++k) {
        const CycleEntry& e = cycle[k];
        if (e.parent >= 0) {
            out.vertices.col(k) = bm.vertex(e.parent);
            out.images.col(k) = bm.image(e.parent);
        } else {
            out.vertices.col(k) = e.point;
            out.images.col(k) = e.image;
        }
    }
    return out;
}

bool normalize_ccw(BoundaryMapping& bm)
{
    if (signed_area(bm.vertices) >= 0.0) return false;
    const int n = bm.size();
    Polygon v(2, n);
    Eigen::MatrixXd im(bm.dimension(), n);
    for (int i = 0; i < n; ++i) {
        const int src = (n - i) % n;  // keep vertex 0 first
        v.col(i) = bm.vertices.col(src);
        im.col(i) = bm.images.col(src);
    }
    bm.vertices = v;
    bm.images = im;
    return true;
}

}  // namespace isofold
