#include "isofold/corpus.hpp"

#include <cmath>

namespace isofold {
namespace corpus {

namespace {

BoundaryMapping make(std::initializer_list<Point2> verts, std::initializer_list<PointD> images)
{
    BoundaryMapping bm;
    const int n = static_cast<int>(verts.size());
    bm.vertices.resize(2, n);
    bm.images.resize(images.begin()->size(), n);
    int i = 0;
    for (const auto& v : verts) bm.vertices.col(i++) = v;
    i = 0;
    for (const auto& q : images) bm.images.col(i++) = q;
    return bm;
}

PointD p3(double x, double y, double z)
{
    PointD p(3);
    p << x, y, z;
    return p;
}

PointD p2(double x, double y)
{
    PointD p(2);
    p << x, y;
    return p;
}

}  // namespace

BoundaryMapping identity_square()
{
    return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                {p2(0, 0), p2(1, 0), p2(1, 1), p2(0, 1)});
}

BoundaryMapping folded_square()
{
    return make({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0, 1}},
                {p2(0, 0), p2(0.5, 0), p2(0, 0), p2(0, 1), p2(0.5, 1), p2(0, 1)});
}

FoldStep folded_square_step()
{
    FoldStep st;
    st.point = Point2(0.5, 0.0);
    st.dir = Point2(0.0, -1.0);
    st.side = +1;  // the half x > 0.5 moves
    st.kind = FoldStep::Kind::Reflection;
    return st;
}

BoundaryMapping dihedral_square()
{
    return make({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0.5, 1}, {0, 1}},
                {p3(0, 0, 0), p3(0.5, 0, 0), p3(0.5, 0, 0.5), p3(0.5, 1, 0.5), p3(0.5, 1, 0),
                 p3(0, 1, 0)});
}

FoldStep dihedral_square_step()
{
    FoldStep st = folded_square_step();
    st.kind = FoldStep::Kind::Dihedral;
    st.alpha = 1.5707963267948966;
    return st;
}

BoundaryMapping skew_square(double lift)
{
    const Eigen::Vector3d f1(1.0, 0.0, 0.0);
    const Eigen::Vector3d f2(1.0, 1.0, 0.0);
    const Eigen::Vector3d f3(1.0 - std::cos(0.3), 1.0 - std::sin(0.3), 0.0);
    // Fourth image on the intersection circle of the unit spheres around f1
    // and f3, parameterized by the lift angle.
    const double dist = (f3 - f1).norm();
    const Eigen::Vector3d mid = 0.5 * (f1 + f3);
    const double rc = std::sqrt(1.0 - 0.25 * dist * dist);
    const Eigen::Vector3d u = (f3 - f1) / dist;
    const Eigen::Vector3d n1(-u.y(), u.x(), 0.0);
    const Eigen::Vector3d n2 = u.cross(n1);
    const Eigen::Vector3d f0 = mid + rc * (std::cos(lift) * n1 + std::sin(lift) * n2);
    return make({{0, 0}, {1, 0}, {1, 1}, {0, 1}},
                {p3(f0.x(), f0.y(), f0.z()), p3(f1.x(), f1.y(), f1.z()),
                 p3(f2.x(), f2.y(), f2.z()), p3(f3.x(), f3.y(), f3.z())});
}

BoundaryMapping planar_kite()
{
    // Corner at the origin: interior angle pi/2, image angle pi/3. The
    // far image is the circle-intersection root on the contracted side.
    const Point2 x(1.2, 1.2);
    const Point2 fu(1.0, 0.0);
    const Point2 fw(0.5, 0.5 * std::sqrt(3.0));
    const double r2 = (x - Point2(1.0, 0.0)).squaredNorm();  // = |x - w|^2 as well
    const Point2 mid = 0.5 * (fu + fw);
    const double h = std::sqrt(r2 - 0.25);  // centers are unit distance apart
    const Point2 axis = fw - fu;
    const Point2 perp(axis.y(), -axis.x());
    const Point2 fx = mid - h * perp;
    return make({{0, 0}, {1, 0}, x, {0, 1}},
                {p2(0, 0), p2(fu.x(), fu.y()), p2(fx.x(), fx.y()), p2(fw.x(), fw.y())});
}

std::vector<Named> all()
{
    return {
        {"square-identity", identity_square()},
        {"square-fold", folded_square()},
        {"square-dihedral", dihedral_square()},
        {"square-skew", skew_square()},
        {"kite-planar", planar_kite()},
    };
}

}  // namespace corpus
}  // namespace isofold
