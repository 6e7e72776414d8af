#include "isofold/bend.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace isofold {

namespace {

Point2 rotate(const Point2& p, double angle)
{
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return Point2(c * p.x() - s * p.y(), s * p.x() + c * p.y());
}

// First standard basis direction with a nonnegligible component outside
// span(ex, ey), orthonormalized.
PointD orthogonal_complement(const PointD& ex, const PointD& ey)
{
    const int d = static_cast<int>(ex.size());
    int best = -1;
    double best_norm = 0.0;
    for (int k = 0; k < d; ++k) {
        PointD cand = PointD::Zero(d);
        cand(k) = 1.0;
        cand -= cand.dot(ex) * ex;
        cand -= cand.dot(ey) * ey;
        const double nrm = cand.norm();
        if (nrm > 0.5) return cand / nrm;
        if (nrm > best_norm) {
            best_norm = nrm;
            best = k;
        }
    }
    PointD cand = PointD::Zero(d);
    cand(best) = 1.0;
    cand -= cand.dot(ex) * ex;
    cand -= cand.dot(ey) * ey;
    return cand / cand.norm();
}

}  // namespace

std::pair<double, double> bend_angle_interval(double theta, double phi)
{
    if (!(phi < theta))
        throw std::invalid_argument("bend_angle_interval: image angle not contracted");
    if (!(phi >= 0.0) || theta <= 0.0)
        throw std::invalid_argument("bend_angle_interval: angles out of range");
    return {0.5 * (theta - phi), 0.5 * (theta + phi)};
}

PointD trilaterate(const PointD& c1, const PointD& c2, const PointD& c3, double r1, double r2,
                   double r3, int branch, const Tolerance& tol, double scale)
{
    const int d = static_cast<int>(c2.size());
    const double lin_tol = tol.band(scale);
    const double sq_tol = tol.band(scale * scale);

    PointD ex = c1 - c2;
    const double a = ex.norm();
    if (a <= lin_tol) throw InfeasibleGeometry("trilaterate: coincident centers c1, c2");
    ex /= a;

    const PointD w = c3 - c2;
    const double bx = w.dot(ex);
    PointD ey = w - bx * ex;
    const double by = ey.norm();

    const double alpha = (a * a + r2 * r2 - r1 * r1) / (2.0 * a);
    double beta;
    if (by > lin_tol) {
        ey /= by;
        beta = (r2 * r2 - r3 * r3 + w.squaredNorm() - 2.0 * alpha * bx) / (2.0 * by);
    } else {
        // Collinear centers: the c3 sphere adds no direction, only a
        // consistency requirement on alpha.
        const double resid = r2 * r2 - 2.0 * alpha * bx + w.squaredNorm() - r3 * r3;
        if (std::abs(resid) > 2.0 * sq_tol)
            throw InfeasibleGeometry("trilaterate: collinear centers with inconsistent radii");
        ey = orthogonal_complement(ex, PointD::Zero(d));
        const double rem = r2 * r2 - alpha * alpha;
        if (rem < -sq_tol) throw InfeasibleGeometry("trilaterate: negative discriminant");
        beta = std::sqrt(std::max(rem, 0.0));
    }

    const double gamma_sq = r2 * r2 - alpha * alpha - beta * beta;
    if (gamma_sq < -sq_tol) throw InfeasibleGeometry("trilaterate: negative discriminant");
    double gamma = std::sqrt(std::max(gamma_sq, 0.0));
    if (gamma <= lin_tol) gamma = 0.0;

    PointD q = c2 + alpha * ex + beta * ey;
    if (gamma != 0.0) {
        if (d < 3) throw InfeasibleGeometry("trilaterate: off-plane solution in the plane");
        q += (branch < 0 ? -gamma : gamma) * orthogonal_complement(ex, ey);
    }
    return q;
}

BendLine select_bend_line(const BoundaryMapping& bm, int v, BendPolicy policy, Rng& rng,
                          const Tolerance& tol)
{
    BendLine line;
    line.v = v;
    line.u = bm.next(v);
    line.w = bm.prev(v);
    if (classify_pair(bm.vertex(line.u), bm.vertex(line.w), bm.image(line.u), bm.image(line.w),
                      tol) != PairClass::Contractive)
        throw std::invalid_argument("select_bend_line: neighbor pair of v is not contractive");

    line.theta = interior_angle(bm.vertices, v);
    line.phi = image_angle(bm.image(line.u), bm.image(line.v), bm.image(line.w), tol);
    const auto [bmin, bmax] = bend_angle_interval(line.theta, line.phi);

    const bool planar = bm.dimension() == 2;
    switch (policy) {
        case BendPolicy::MinAngle: line.beta = bmin; break;
        case BendPolicy::MaxAngle: line.beta = bmax; break;
        case BendPolicy::Bisector: line.beta = planar ? bmin : 0.5 * line.theta; break;
        case BendPolicy::Random:
            line.beta = planar ? (rng.coin() ? bmax : bmin) : rng.uniform(bmin, bmax);
            break;
    }

    line.origin = bm.vertex(v);
    Point2 toward_u = bm.vertex(line.u) - line.origin;
    line.dir = rotate(toward_u / toward_u.norm(), line.beta);
    const auto exit = ray_exit(bm.vertices, v, line.dir, tol.eps_abs);
    if (!exit) throw InfeasibleGeometry("select_bend_line: bend direction leaves the polygon");
    line.length = exit->length;
    line.carrier = exit->carrier;
    return line;
}

BendLineImage bend_line_image(const BoundaryMapping& bm, const BendLine& line, int branch,
                              const Tolerance& tol, double scale)
{
    BendLineImage img;
    img.origin = bm.image(line.v);
    const PointD fu = bm.image(line.u);
    const PointD fw = bm.image(line.w);

    if (bm.dimension() == 2) {
        // Two-ray construction: e at angle beta from the f(u) ray, on the side
        // for which the angle to the f(w) ray comes out as theta - beta.
        const Point2 ru = Point2(fu - img.origin).normalized();
        const Point2 rw = Point2(fw - img.origin).normalized();
        const double want = line.theta - line.beta;
        Point2 best{0.0, 0.0};
        double best_err = std::numeric_limits<double>::infinity();
        for (int s : {+1, -1}) {
            const Point2 cand = rotate(ru, s * line.beta);
            const double got = std::acos(std::clamp(cand.dot(rw), -1.0, 1.0));
            const double err = std::abs(got - want);
            if (err < best_err) {
                best_err = err;
                best = cand;
            }
        }
        if (best_err > 1e-6)
            throw InfeasibleGeometry("bend_line_image: no planar ray matches both angles");
        img.e = PointD(2);
        img.e << best.x(), best.y();
        return img;
    }

    const Point2 p1 = line.at(1.0);
    const double ru = (p1 - Point2(bm.vertex(line.u))).norm();
    const double rw = (p1 - Point2(bm.vertex(line.w))).norm();
    const PointD q = trilaterate(fu, img.origin, fw, ru, 1.0, rw, branch, tol, scale);
    img.e = q - img.origin;
    return img;
}

BendLine select_bend_line(const BoundaryMapping& bm, int v, BendPolicy policy, Rng& rng)
{
    return select_bend_line(bm, v, policy, rng, bm.tolerance());
}

BendLineImage bend_line_image(const BoundaryMapping& bm, const BendLine& line, int branch)
{
    return bend_line_image(bm, line, branch, bm.tolerance(), bm.diameter());
}

}  // namespace isofold
