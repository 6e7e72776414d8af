#include "isofold/geom.hpp"

#include <algorithm>
#include <cmath>

namespace isofold {

namespace {

constexpr double kPi = 3.14159265358979323846;

int next_index(int i, int n) { return (i + 1) % n; }
int prev_index(int i, int n) { return (i + n - 1) % n; }

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b)
{
    const Point2 ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
}

// Parameters along segment (a1,a2) at which it meets segment (b1,b2),
// including collinear overlaps (both overlap endpoints are reported).
void hit_params(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2,
                double eps, std::vector<double>& out)
{
    const Point2 r = a2 - a1;
    const Point2 s = b2 - b1;
    const double rlen = r.norm();
    if (rlen == 0.0) return;
    const double denom = cross2(r, s);
    const Point2 qp = b1 - a1;
    const double eps_t = eps / rlen;
    if (std::abs(denom) > eps * std::max(rlen, s.norm())) {
        const double t = cross2(qp, s) / denom;
        const double u = cross2(qp, r) / denom;
        const double eps_u = eps / std::max(s.norm(), eps);
        if (t >= -eps_t && t <= 1.0 + eps_t && u >= -eps_u && u <= 1.0 + eps_u)
            out.push_back(std::clamp(t, 0.0, 1.0));
        return;
    }
    // Parallel; only collinear segments can touch.
    if (std::abs(cross2(qp, r)) > eps * rlen) return;
    double t0 = qp.dot(r) / (rlen * rlen);
    double t1 = (b2 - a1).dot(r) / (rlen * rlen);
    if (t0 > t1) std::swap(t0, t1);
    t0 = std::max(t0, 0.0);
    t1 = std::min(t1, 1.0);
    if (t0 <= t1 + eps_t) {
        out.push_back(std::clamp(t0, 0.0, 1.0));
        out.push_back(std::clamp(t1, 0.0, 1.0));
    }
}

void sort_dedupe(std::vector<double>& ts, double eps)
{
    std::sort(ts.begin(), ts.end());
    std::vector<double> out;
    for (double t : ts) {
        if (out.empty() || t - out.back() > eps) out.push_back(t);
    }
    ts.swap(out);
}

}  // namespace

double cross2(const Point2& a, const Point2& b) { return a.x() * b.y() - a.y() * b.x(); }

PairClass classify_pair(const Point2& a, const Point2& b, const PointD& fa, const PointD& fb,
                        const Tolerance& tol)
{
    const double dd = (a - b).norm();
    if (dd <= tol.eps_abs) throw GeometryError("classify_pair: coincident domain points");
    const double di = (fa - fb).norm();
    const double band = tol.band(dd);
    if (std::abs(di - dd) <= band) return PairClass::Critical;
    return di > dd ? PairClass::Expansive : PairClass::Contractive;
}

double signed_area(const Polygon& poly)
{
    const int n = static_cast<int>(poly.cols());
    double acc = 0.0;
    for (int i = 0; i < n; ++i) acc += cross2(poly.col(i), poly.col(next_index(i, n)));
    return 0.5 * acc;
}

double bbox_diameter(const Polygon& poly)
{
    if (poly.cols() == 0) return 0.0;
    const Point2 lo = poly.rowwise().minCoeff();
    const Point2 hi = poly.rowwise().maxCoeff();
    return (hi - lo).norm();
}

double interior_angle(const Polygon& poly, int i)
{
    const int n = static_cast<int>(poly.cols());
    const Point2 v = poly.col(i);
    const Point2 a = poly.col(next_index(i, n)) - v;
    const Point2 b = poly.col(prev_index(i, n)) - v;
    if (a.norm() == 0.0 || b.norm() == 0.0)
        throw GeometryError("interior_angle: zero-length edge");
    double ang = std::atan2(cross2(a, b), a.dot(b));
    if (ang <= 0.0) ang += 2.0 * kPi;
    return ang;
}

double image_angle(const PointD& fu, const PointD& fv, const PointD& fw, const Tolerance& tol)
{
    const PointD a = fu - fv;
    const PointD b = fw - fv;
    const double na = a.norm();
    const double nb = b.norm();
    if (na <= tol.eps_abs || nb <= tol.eps_abs)
        throw GeometryError("image_angle: coincident image points");
    const double c = std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
    return std::acos(c);
}

double distance_to_boundary(const Polygon& poly, const Point2& p)
{
    const int n = static_cast<int>(poly.cols());
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, poly.col(i), poly.col(next_index(i, n))));
    return best;
}

bool point_in_polygon(const Polygon& poly, const Point2& p, double eps)
{
    if (distance_to_boundary(poly, p) <= eps) return true;
    // Even-odd crossing count; p is safely off the boundary here.
    const int n = static_cast<int>(poly.cols());
    bool inside = false;
    for (int i = 0; i < n; ++i) {
        const Point2 a = poly.col(i);
        const Point2 b = poly.col(next_index(i, n));
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            const double xc = a.x() + (p.y() - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
            if (p.x() < xc) inside = !inside;
        }
    }
    return inside;
}

bool segments_cross(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2)
{
    const double d1 = cross2(a2 - a1, b1 - a1);
    const double d2 = cross2(a2 - a1, b2 - a1);
    const double d3 = cross2(b2 - b1, a1 - b1);
    const double d4 = cross2(b2 - b1, a2 - b1);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
        d4 != 0)
        return true;
    auto on = [](const Point2& a, const Point2& b, const Point2& p) {
        if (cross2(b - a, p - a) != 0.0) return false;
        return p.x() >= std::min(a.x(), b.x()) && p.x() <= std::max(a.x(), b.x()) &&
               p.y() >= std::min(a.y(), b.y()) && p.y() <= std::max(a.y(), b.y());
    };
    return on(a1, a2, b1) || on(a1, a2, b2) || on(b1, b2, a1) || on(b1, b2, a2);
}

bool segments_cross_proper(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2)
{
    const double d1 = cross2(a2 - a1, b1 - a1);
    const double d2 = cross2(a2 - a1, b2 - a1);
    const double d3 = cross2(b2 - b1, a1 - b1);
    const double d4 = cross2(b2 - b1, a2 - b1);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
           d4 != 0;
}

bool visible(const Polygon& poly, const Point2& a, const Point2& b, double eps)
{
    const int n = static_cast<int>(poly.cols());
    const double len = (b - a).norm();
    if (len <= eps) return point_in_polygon(poly, a, eps);
    std::vector<double> ts{0.0, 1.0};
    for (int i = 0; i < n; ++i)
        hit_params(a, b, poly.col(i), poly.col(next_index(i, n)), eps, ts);
    sort_dedupe(ts, eps / len);
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const Point2 mid = a + (0.5 * (ts[i] + ts[i + 1])) * (b - a);
        if (!point_in_polygon(poly, mid, eps)) return false;
    }
    return true;
}

bool visible_through_interior(const Polygon& poly, const Point2& a, const Point2& b, double eps)
{
    if (!visible(poly, a, b, eps)) return false;
    const int n = static_cast<int>(poly.cols());
    const double len = (b - a).norm();
    if (len <= eps) return false;
    std::vector<double> ts;
    for (int i = 0; i < n; ++i)
        hit_params(a, b, poly.col(i), poly.col(next_index(i, n)), eps, ts);
    const double eps_t = eps / len;
    for (double t : ts)
        if (t > eps_t && t < 1.0 - eps_t) return false;
    return true;
}

std::optional<RayExit> ray_exit(const Polygon& poly, int v, const Point2& dir, double eps)
{
    const int n = static_cast<int>(poly.cols());
    const Point2 o = poly.col(v);
    const double diam = bbox_diameter(poly);
    // A segment long enough to leave the polygon from anywhere inside.
    const Point2 far = o + (2.0 * diam + 1.0) * dir;
    std::vector<double> ts;
    for (int i = 0; i < n; ++i)
        hit_params(o, far, poly.col(i), poly.col(next_index(i, n)), eps, ts);
    const double seg_len = (far - o).norm();
    sort_dedupe(ts, eps / seg_len);
    double exit_t = -1.0;
    for (size_t i = 0; i + 1 < ts.size(); ++i) {
        const Point2 mid = o + (0.5 * (ts[i] + ts[i + 1])) * (far - o);
        if (!point_in_polygon(poly, mid, eps)) {
            exit_t = ts[i];
            break;
        }
    }
    if (exit_t < 0.0 && !ts.empty()) exit_t = ts.back();
    if (exit_t * seg_len <= eps) return std::nullopt;  // leaves immediately: dir points outside
    const Point2 exit = o + exit_t * (far - o);
    Carrier carrier{Carrier::Kind::Edge, -1};
    double best_vertex = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        const double d = (exit - Point2(poly.col(i))).norm();
        if (d < best_vertex) {
            best_vertex = d;
            carrier.index = i;
        }
    }
    if (best_vertex <= eps) {
        carrier.kind = Carrier::Kind::Vertex;
    } else {
        carrier.kind = Carrier::Kind::Edge;
        double best_edge = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            const double d = point_segment_distance(exit, poly.col(i), poly.col(next_index(i, n)));
            if (d < best_edge) {
                best_edge = d;
                carrier.index = i;
            }
        }
    }
    return RayExit{exit, exit_t * seg_len, carrier};
}

bool polygon_is_simple(const Polygon& poly, double eps)
{
    const int n = static_cast<int>(poly.cols());
    if (n < 3) return false;
    for (int i = 0; i < n; ++i) {
        const Point2 a = poly.col(i);
        const Point2 b = poly.col(next_index(i, n));
        if ((b - a).norm() <= eps) return false;  // degenerate edge
        // Spike: next edge folds back onto this one.
        const Point2 c = poly.col(next_index(next_index(i, n), n));
        const Point2 e1 = b - a;
        const Point2 e2 = c - b;
        if (std::abs(cross2(e1, e2)) <= eps * e1.norm() * e2.norm() && e1.dot(e2) < 0.0)
            return false;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i || next_index(j, n) == i || next_index(i, n) == j) continue;
            if (segments_cross(poly.col(i), poly.col(next_index(i, n)), poly.col(j),
                               poly.col(next_index(j, n))))
                return false;
        }
    }
    return true;
}

}  // namespace isofold
