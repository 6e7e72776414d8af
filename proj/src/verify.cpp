#include "isofold/verify.hpp"

#include "isofold/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace isofold {

namespace {

// Signed edge margins of p against triangle (a, b, c); the smallest value is
// (roughly) the signed distance of p to the nearest edge line.
double face_margin(const Point2& a, const Point2& b, const Point2& c, const Point2& p)
{
    const auto edge_margin = [&](const Point2& s, const Point2& t) {
        const Point2 d = t - s;
        return cross2(d, Point2(p - s)) / d.norm();
    };
    return std::min({edge_margin(a, b), edge_margin(b, c), edge_margin(c, a)});
}

Point2 sample_in_polygon(const Polygon& poly, Rng& rng, double margin)
{
    const Point2 lo = poly.rowwise().minCoeff();
    const Point2 hi = poly.rowwise().maxCoeff();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Point2 p(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()));
        if (distance_to_boundary(poly, p) > margin && point_in_polygon(poly, p, 0.0)) return p;
    }
    throw std::runtime_error("sample_in_polygon: rejection sampling failed");
}

}  // namespace

PointD evaluate(const SolutionMesh& mesh, const Point2& p)
{
    const double eps = 1e-9 * bbox_diameter(mesh.vertices_domain);
    int best_face = -1;
    double best_margin = -std::numeric_limits<double>::infinity();
    for (size_t fi = 0; fi < mesh.faces.size(); ++fi) {
        const auto& f = mesh.faces[fi];
        const double m = face_margin(mesh.vertices_domain.col(f[0]), mesh.vertices_domain.col(f[1]),
                                     mesh.vertices_domain.col(f[2]), p);
        if (m >= -eps) {
            best_face = static_cast<int>(fi);
            break;
        }
        if (m > best_margin) best_margin = m;
    }
    if (best_face < 0) throw OutsideDomain("evaluate: point not contained in any face");
    const auto& f = mesh.faces[best_face];
    const Point2 a = mesh.vertices_domain.col(f[0]);
    const Point2 b = mesh.vertices_domain.col(f[1]);
    const Point2 c = mesh.vertices_domain.col(f[2]);
    Eigen::Matrix2d m2;
    m2.col(0) = b - a;
    m2.col(1) = c - a;
    const Eigen::Vector2d bc = m2.inverse() * (p - a);
    return mesh.vertices_image.col(f[0]) +
           bc.x() * (mesh.vertices_image.col(f[1]) - mesh.vertices_image.col(f[0])) +
           bc.y() * (mesh.vertices_image.col(f[2]) - mesh.vertices_image.col(f[0]));
}

VerifyReport verify(const BoundaryMapping& bm, const SolutionMesh& mesh, const VerifyOptions& opts)
{
    VerifyReport report;
    const double diam = bm.diameter();
    const double tol = opts.tol_len > 0.0 ? opts.tol_len : 1e-7 * diam;
    const int m = mesh.vertex_count();

    // Structural screening before any metric check.
    if (mesh.dimension() != bm.dimension()) {
        report.structural_error = "mesh dimension differs from instance dimension";
        return report;
    }
    if (static_cast<int>(mesh.boundary_map.size()) != bm.size()) {
        report.structural_error = "boundary_map size differs from instance vertex count";
        return report;
    }
    for (int id : mesh.boundary_map) {
        if (id < 0 || id >= m) {
            report.structural_error = "boundary_map id out of range";
            return report;
        }
    }
    for (const auto& f : mesh.faces) {
        for (int k = 0; k < 3; ++k) {
            if (f[k] < 0 || f[k] >= m) {
                report.structural_error = "face index out of range";
                return report;
            }
        }
        const Point2 a = mesh.vertices_domain.col(f[0]);
        const Point2 b = mesh.vertices_domain.col(f[1]);
        const Point2 c = mesh.vertices_domain.col(f[2]);
        if (cross2(Point2(b - a), Point2(c - a)) <= 0.0) {
            report.structural_error = "degenerate or clockwise face";
            return report;
        }
    }
    if (mesh.faces.empty()) {
        report.structural_error = "mesh has no faces";
        return report;
    }

    Rng rng(opts.seed);

    // (1) Congruence: every face edge preserves its length.
    {
        double worst = 0.0;
        for (const auto& f : mesh.faces) {
            for (int k = 0; k < 3; ++k) {
                const int a = f[k];
                const int b = f[(k + 1) % 3];
                const double dd =
                    (mesh.vertices_domain.col(a) - mesh.vertices_domain.col(b)).norm();
                const double di = (mesh.vertices_image.col(a) - mesh.vertices_image.col(b)).norm();
                worst = std::max(worst, std::abs(dd - di));
            }
        }
        report.congruence = {worst <= tol, worst, ""};
    }

    // (2) Continuity: interior edges shared by exactly two faces via index
    // identity; edges used once must lie on the input boundary.
    {
        std::map<std::pair<int, int>, int> edge_count;
        for (const auto& f : mesh.faces) {
            for (int k = 0; k < 3; ++k) {
                const int a = std::min(f[k], f[(k + 1) % 3]);
                const int b = std::max(f[k], f[(k + 1) % 3]);
                ++edge_count[{a, b}];
            }
        }
        bool ok = true;
        std::string detail;
        for (const auto& [edge, count] : edge_count) {
            if (count > 2) {
                ok = false;
                detail = "edge shared by more than two faces";
                break;
            }
            if (count == 1) {
                const Point2 mid = 0.5 * (mesh.vertices_domain.col(edge.first) +
                                          mesh.vertices_domain.col(edge.second));
                if (distance_to_boundary(bm.vertices, mid) > tol) {
                    ok = false;
                    detail = "once-used edge not on the polygon boundary";
                    break;
                }
            }
        }
        report.continuity = {ok, 0.0, detail};
    }

    // (3) Coverage: areas tile the polygon; random interior points lie in
    // exactly one face up to a tolerance band at edges.
    {
        double area_sum = 0.0;
        for (const auto& f : mesh.faces) {
            const Point2 a = mesh.vertices_domain.col(f[0]);
            const Point2 b = mesh.vertices_domain.col(f[1]);
            const Point2 c = mesh.vertices_domain.col(f[2]);
            area_sum += 0.5 * cross2(Point2(b - a), Point2(c - a));
        }
        const double poly_area = std::abs(signed_area(bm.vertices));
        double worst = std::abs(area_sum - poly_area);
        bool ok = worst <= tol * diam;
        std::string detail = ok ? "" : "face areas do not sum to the polygon area";
        for (int s = 0; ok && s < opts.samples; ++s) {
            const Point2 p = sample_in_polygon(bm.vertices, rng, 2.0 * tol);
            int strict = 0;
            int loose = 0;
            for (const auto& f : mesh.faces) {
                const double margin =
                    face_margin(mesh.vertices_domain.col(f[0]), mesh.vertices_domain.col(f[1]),
                                mesh.vertices_domain.col(f[2]), p);
                if (margin > tol) ++strict;
                if (margin > -tol) ++loose;
            }
            if (strict > 1) {
                ok = false;
                detail = "sampled point inside two faces";
            } else if (strict == 0 && loose == 0) {
                ok = false;
                detail = "sampled interior point in no face";
            }
        }
        report.coverage = {ok, worst, detail};
    }

    // (4) Boundary agreement: prescribed vertex images, then interpolated
    // images at edge midpoints.
    {
        double worst = 0.0;
        for (int i = 0; i < bm.size(); ++i) {
            const int id = mesh.boundary_map[i];
            worst = std::max(worst,
                             (Point2(mesh.vertices_domain.col(id)) - bm.vertex(i)).norm());
            worst = std::max(worst, (PointD(mesh.vertices_image.col(id)) - bm.image(i)).norm());
        }
        std::string detail;
        for (int i = 0; i < bm.size(); ++i) {
            const Point2 mid = 0.5 * (bm.vertex(i) + bm.vertex(bm.next(i)));
            try {
                worst = std::max(worst, (evaluate(mesh, mid) - bm.edge_image(i, 0.5)).norm());
            } catch (const OutsideDomain&) {
                detail = "edge midpoint not covered by any face";
                worst = std::numeric_limits<double>::infinity();
            }
        }
        report.boundary = {worst <= tol, worst, detail};
    }

    // (5) Sampled nonexpansiveness of the evaluated map.
    {
        double worst = 0.0;
        std::string detail;
        for (int s = 0; s < opts.samples && detail.empty(); ++s) {
            const Point2 a = sample_in_polygon(bm.vertices, rng, 0.0);
            const Point2 b = sample_in_polygon(bm.vertices, rng, 0.0);
            try {
                const double excess =
                    (evaluate(mesh, a) - evaluate(mesh, b)).norm() - (a - b).norm();
                worst = std::max(worst, excess);
            } catch (const OutsideDomain&) {
                detail = "sampled point not covered by any face";
                worst = std::numeric_limits<double>::infinity();
            }
        }
        report.nonexpansive = {worst <= tol, worst, detail};
    }

    report.pass = report.congruence.pass && report.continuity.pass && report.coverage.pass &&
                  report.boundary.pass && report.nonexpansive.pass;
    return report;
}

namespace {

// Accordion fold of the plane into R^d: parallel crease lines in a rotated
// frame, each folded by its own dihedral angle (pi = flat). Cellwise rigid,
// continuous, and nonexpansive, so images of vertex tuples satisfy the
// crossing-segment relations by construction.
struct FoldFixture {
    static constexpr double kPi = 3.14159265358979323846;

    int d = 2;
    Point2 frame_x, frame_y;
    std::vector<double> offsets;  // increasing crease positions in the frame
    std::vector<double> angles;   // dihedral angle per crease (d = 3 only)

    double coord(const Point2& p) const { return frame_x.dot(p); }

    PointD map(const Point2& p) const
    {
        const double x = coord(p);
        const double y = frame_y.dot(p);
        if (d == 2) {
            // Accordion of flat folds: the strip transform is s*x + b.
            double s = 1.0;
            double b = 0.0;
            for (std::size_t i = 0; i < offsets.size() && offsets[i] < x; ++i) {
                const double image_of_crease = s * offsets[i] + b;
                s = -s;
                b = 2.0 * image_of_crease - b;
            }
            PointD out(2);
            out << s * x + b, y;
            return out;
        }
        Eigen::Matrix3d rot = Eigen::Matrix3d::Identity();
        Eigen::Vector3d shift = Eigen::Vector3d::Zero();
        for (std::size_t i = 0; i < offsets.size() && offsets[i] < x; ++i) {
            const Eigen::Vector3d axis_point = rot * Eigen::Vector3d(offsets[i], 0.0, 0.0) + shift;
            const Eigen::Vector3d axis_dir = rot * Eigen::Vector3d(0.0, 1.0, 0.0);
            const Eigen::Matrix3d turn =
                Eigen::AngleAxisd(kPi - angles[i], axis_dir.normalized()).toRotationMatrix();
            rot = turn * rot;
            shift = turn * (shift - axis_point) + axis_point;
        }
        const Eigen::Vector3d q = rot * Eigen::Vector3d(x, y, 0.0) + shift;
        PointD out(3);
        out << q.x(), q.y(), q.z();
        return out;
    }
};

}  // namespace

PropertyReport property_suite(std::uint64_t seed, int trials)
{
    Rng rng(seed);
    PropertyReport rep;
    rep.trials = trials;
    const double tol = 1e-9 * 8.0;  // coordinates live in [-4, 4]

    for (int t = 0; t < trials; ++t) {
        FoldFixture fx;
        fx.d = (t % 2 == 0) ? 2 : 3;
        const double ang = rng.uniform(0.0, 2.0 * 3.14159265358979323846);
        fx.frame_x = Point2(std::cos(ang), std::sin(ang));
        fx.frame_y = Point2(-fx.frame_x.y(), fx.frame_x.x());

        // Segment (u, v) and a crossing segment (p, q): q stays with {u, v};
        // p wanders across fold lines.
        const Point2 u(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        Point2 v(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        while ((v - u).norm() < 0.2) v = Point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        const Point2 x = u + rng.uniform(0.2, 0.8) * (v - u);
        Point2 dir(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        while (dir.norm() < 0.1 ||
               std::abs(cross2(dir, Point2(v - u))) < 0.05 * dir.norm() * (v - u).norm())
            dir = Point2(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        dir.normalize();
        const Point2 q = x - rng.uniform(0.2, 1.5) * dir;
        const Point2 p = x + rng.uniform(0.2, 1.5) * dir;

        // Fold lines kept clear of {u, v, q} so those stay critical.
        const double safe = std::max({fx.coord(u), fx.coord(v), fx.coord(q)});
        const int nfolds = rng.uniform_int(1, 3);
        double c = safe + rng.uniform(0.05, 0.5);
        for (int k = 0; k < nfolds; ++k) {
            fx.offsets.push_back(c);
            fx.angles.push_back(rng.uniform(0.3, 2.8));
            c += rng.uniform(0.05, 0.5);
        }

        const PointD fu = fx.map(u);
        const PointD fv = fx.map(v);
        const PointD fq = fx.map(q);
        const PointD fp = fx.map(p);

        const auto crit = [&](const Point2& a, const Point2& b, const PointD& fa,
                              const PointD& fb) {
            return std::abs((fa - fb).norm() - (a - b).norm()) <= tol;
        };
        const auto nonexp = [&](const Point2& a, const Point2& b, const PointD& fa,
                                const PointD& fb) {
            return (fa - fb).norm() - (a - b).norm();  // must be <= tol
        };

        // Premise (a): {q, u, v} critical, {p, u, v} nonexpansive.
        if (crit(q, u, fq, fu) && crit(q, v, fq, fv) && crit(u, v, fu, fv) &&
            nonexp(p, u, fp, fu) <= tol && nonexp(p, v, fp, fv) <= tol) {
            ++rep.premise_hits_a;
            const double excess = nonexp(p, q, fp, fq);
            rep.worst_residual = std::max(rep.worst_residual, excess);
            if (excess > tol) ++rep.violations;
        }

        // Premise (b): {u, v} critical and both endpoints nonexpansive with it.
        if (crit(u, v, fu, fv) && nonexp(p, u, fp, fu) <= tol && nonexp(p, v, fp, fv) <= tol &&
            nonexp(q, u, fq, fu) <= tol && nonexp(q, v, fq, fv) <= tol) {
            ++rep.premise_hits_b;
            const double excess = nonexp(p, q, fp, fq);
            rep.worst_residual = std::max(rep.worst_residual, excess);
            if (excess > tol) ++rep.violations;
            if (crit(p, q, fp, fq)) {
                ++rep.premise_hits_b_critical;
                const Point2 dom[4] = {p, q, u, v};
                const PointD img[4] = {fp, fq, fu, fv};
                for (int a = 0; a < 4; ++a) {
                    for (int b = a + 1; b < 4; ++b) {
                        const double resid =
                            std::abs((img[a] - img[b]).norm() - (dom[a] - dom[b]).norm());
                        rep.worst_residual = std::max(rep.worst_residual, resid);
                        if (resid > tol) ++rep.violations;
                    }
                }
            }
        }
    }

    rep.pass = rep.violations == 0 && rep.premise_hits_a > trials / 10 &&
               rep.premise_hits_b > trials / 10 && rep.premise_hits_b_critical > 0;
    return rep;
}

}  // namespace isofold
