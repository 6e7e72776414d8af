#include "isofold/gen.hpp"

#include <algorithm>
#include <cmath>

namespace isofold {

namespace {

constexpr double kPi = 3.14159265358979323846;

// One rigid piece of the folded sheet: a convex domain polygon and the
// affine isometry mapping it into R^d.
struct Cell {
    std::vector<Point2> poly;
    Eigen::MatrixXd A;  // d x 2, orthonormal columns
    PointD b;

    PointD map(const Point2& x) const { return A * x + b; }
};

double poly_area(const std::vector<Point2>& p)
{
    double acc = 0.0;
    const int n = static_cast<int>(p.size());
    for (int i = 0; i < n; ++i) acc += cross2(p[i], p[(i + 1) % n]);
    return 0.5 * acc;
}

// Split a convex polygon by the zero set of an affine function given by its
// vertex values. Vertices within eps of zero go to both sides.
void split_convex(const std::vector<Point2>& poly, const std::vector<double>& s, double eps,
                  std::vector<Point2>& pos, std::vector<Point2>& neg)
{
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const double si = s[i];
        const double sj = s[j];
        if (si >= -eps) pos.push_back(poly[i]);
        if (si <= eps) neg.push_back(poly[i]);
        if ((si > eps && sj < -eps) || (si < -eps && sj > eps)) {
            const double t = si / (si - sj);
            const Point2 x = poly[i] + t * (poly[j] - poly[i]);
            pos.push_back(x);
            neg.push_back(x);
        }
    }
}

bool degenerate(const std::vector<Point2>& poly, double eps)
{
    return poly.size() < 3 || std::abs(poly_area(poly)) < eps * eps;
}

std::vector<std::array<int, 3>> triangulate_indices(const std::vector<Point2>& pts, double eps)
{
    const int n = static_cast<int>(pts.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::vector<std::array<int, 3>> tris;
    while (static_cast<int>(idx.size()) > 3) {
        const int m = static_cast<int>(idx.size());
        bool clipped = false;
        for (int k = 0; k < m; ++k) {
            const Point2 a = pts[idx[(k + m - 1) % m]];
            const Point2 b = pts[idx[k]];
            const Point2 c = pts[idx[(k + 1) % m]];
            if (cross2(Point2(b - a), Point2(c - b)) <= eps) continue;  // reflex or flat corner
            bool ear = true;
            for (int t = 0; t < m && ear; ++t) {
                if (t == k || t == (k + m - 1) % m || t == (k + 1) % m) continue;
                const Point2 p = pts[idx[t]];
                if (cross2(Point2(b - a), Point2(p - a)) > eps &&
                    cross2(Point2(c - b), Point2(p - b)) > eps &&
                    cross2(Point2(a - c), Point2(p - c)) > eps)
                    ear = false;
            }
            if (!ear) continue;
            tris.push_back({idx[(k + m - 1) % m], idx[k], idx[(k + 1) % m]});
            idx.erase(idx.begin() + k);
            clipped = true;
            break;
        }
        if (!clipped) throw GenError("triangulate: no ear found (polygon not simple?)");
    }
    tris.push_back({idx[0], idx[1], idx[2]});
    return tris;
}

Eigen::Matrix2d reflection_about(const Point2& point, const Point2& dir, Point2& offset_out)
{
    const Point2 u = dir.normalized();
    Eigen::Matrix2d r;
    r << u.x() * u.x() - u.y() * u.y(), 2.0 * u.x() * u.y(),  //
        2.0 * u.x() * u.y(), u.y() * u.y() - u.x() * u.x();
    offset_out = point - r * point;
    return r;
}

}  // namespace

Point2 fold_point_2d(const std::vector<FoldStep>& steps, const Point2& x)
{
    Point2 y = x;
    for (const auto& st : steps) {
        if (st.kind != FoldStep::Kind::Reflection)
            throw GenError("fold_point_2d: reflections only");
        if (st.side * cross2(st.dir, Point2(y - st.point)) > 0.0) {
            Point2 off;
            const Eigen::Matrix2d r = reflection_about(st.point, st.dir, off);
            y = r * y + off;
        }
    }
    return y;
}

GenResult generate(const Polygon& base, const std::vector<FoldStep>& steps, int d)
{
    if (d < 2) throw GenError("generate: dimension must be at least 2");
    const int n = static_cast<int>(base.cols());
    if (n < 3) throw GenError("generate: polygon needs at least 3 vertices");

    Polygon ccw = base;
    if (signed_area(ccw) < 0.0) ccw.rowwise().reverseInPlace();
    const double scale = bbox_diameter(ccw);
    const double eps = 1e-9 * scale;
    if (!polygon_is_simple(ccw, eps)) throw GenError("generate: polygon not simple");

    std::vector<Point2> pts(n);
    for (int i = 0; i < n; ++i) pts[i] = ccw.col(i);

    GenResult result;

    // Seed cells from a triangulation so every later split stays convex.
    std::vector<Cell> cells;
    for (const auto& t : triangulate_indices(pts, eps)) {
        Cell c;
        c.poly = {pts[t[0]], pts[t[1]], pts[t[2]]};
        c.A = Eigen::MatrixXd::Zero(d, 2);
        c.A(0, 0) = 1.0;
        c.A(1, 1) = 1.0;
        c.b = PointD::Zero(d);
        cells.push_back(std::move(c));
    }

    for (size_t si = 0; si < steps.size(); ++si) {
        const FoldStep& st = steps[si];
        const Point2 u = st.dir.normalized();

        // Steps act on the folded picture: cells are sided by where their
        // images lie relative to the line. Flat state is required for
        // reflections and for every cell a dihedral step moves.
        const auto planar = [&](const Cell& cell) {
            if (d == 2) return true;
            for (const auto& x : cell.poly) {
                const PointD y = cell.map(x);
                if (y.tail(d - 2).cwiseAbs().maxCoeff() > eps) return false;
            }
            return true;
        };

        std::vector<std::vector<double>> sides(cells.size());
        double lo = 1e300, hi = -1e300;
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            const Cell& cell = cells[ci];
            sides[ci].resize(cell.poly.size());
            for (size_t i = 0; i < cell.poly.size(); ++i) {
                const PointD y = cell.map(cell.poly[i]);
                sides[ci][i] = st.side * cross2(u, Point2(y.head<2>()) - st.point);
                lo = std::min(lo, sides[ci][i]);
                hi = std::max(hi, sides[ci][i]);
            }
        }
        if (lo > -eps || hi < eps) {
            result.warnings.push_back("fold step " + std::to_string(si) +
                                      " misses the folded sheet");
            continue;
        }

        const bool is_reflection = st.kind == FoldStep::Kind::Reflection;
        if (!is_reflection && d < 3) throw GenError("generate: dihedral folds need d >= 3");

        Eigen::Matrix2d refl2;
        Point2 off2;
        Eigen::Matrix3d rot3 = Eigen::Matrix3d::Identity();
        Eigen::Vector3d axis_point = Eigen::Vector3d::Zero();
        if (is_reflection) {
            refl2 = reflection_about(st.point, u, off2);
        } else {
            axis_point = Eigen::Vector3d(st.point.x(), st.point.y(), 0.0);
            const Eigen::Vector3d axis_dir(u.x(), u.y(), 0.0);
            rot3 = Eigen::AngleAxisd(st.alpha, axis_dir).toRotationMatrix();
        }

        std::vector<Cell> out;
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            Cell& cell = cells[ci];
            const double cell_hi =
                *std::max_element(sides[ci].begin(), sides[ci].end());
            if (!planar(cell)) {
                // A bent flap can only stay put; folding across it is not a
                // simple fold of the sheet.
                if (cell_hi > eps)
                    throw GenError("generate: fold line crosses an earlier bent crease");
                out.push_back(std::move(cell));
                continue;
            }
            std::vector<Point2> moving, fixed;
            split_convex(cell.poly, sides[ci], eps, moving, fixed);
            if (!degenerate(moving, eps)) {
                Cell m;
                m.poly = std::move(moving);
                if (is_reflection) {
                    m.A = cell.A;
                    m.b = cell.b;
                    m.A.topRows(2) = refl2 * cell.A.topRows(2);
                    m.b.head<2>() = refl2 * Eigen::Vector2d(cell.b.head<2>()) + off2;
                } else {
                    m.A = Eigen::MatrixXd(d, 2);
                    m.A.topRows(3) = rot3 * cell.A.topRows(3);
                    if (d > 3) m.A.bottomRows(d - 3) = cell.A.bottomRows(d - 3);
                    m.b = PointD(cell.b);
                    m.b.head<3>() =
                        rot3 * (Eigen::Vector3d(cell.b.head<3>()) - axis_point) + axis_point;
                }
                out.push_back(std::move(m));
            }
            if (!degenerate(fixed, eps)) {
                Cell f;
                f.poly = std::move(fixed);
                f.A = cell.A;
                f.b = cell.b;
                out.push_back(std::move(f));
            }
        }
        cells.swap(out);
    }

    // Collect the subdivided boundary: every cell corner on a base edge is a
    // potential bend point of f.
    std::vector<Point2> verts;
    for (int i = 0; i < n; ++i) {
        const Point2 a = pts[i];
        const Point2 b = pts[(i + 1) % n];
        const double elen = (b - a).norm();
        verts.push_back(a);
        std::vector<double> params;
        for (const auto& cell : cells) {
            for (const auto& p : cell.poly) {
                const double t = (p - a).dot(b - a) / (elen * elen);
                if (t <= eps / elen || t >= 1.0 - eps / elen) continue;
                if ((a + t * (b - a) - p).norm() <= eps) params.push_back(t);
            }
        }
        std::sort(params.begin(), params.end());
        for (double t : params) {
            if (!verts.empty() && (verts.back() - (a + t * (b - a))).norm() <= eps) continue;
            verts.push_back(a + t * (b - a));
        }
    }

    BoundaryMapping bm;
    const int vn = static_cast<int>(verts.size());
    bm.vertices.resize(2, vn);
    bm.images.resize(d, vn);
    for (int i = 0; i < vn; ++i) {
        bm.vertices.col(i) = verts[i];
        const Cell* owner = nullptr;
        double best = std::numeric_limits<double>::infinity();
        for (const auto& cell : cells) {
            Polygon cp(2, cell.poly.size());
            for (size_t k = 0; k < cell.poly.size(); ++k) cp.col(k) = cell.poly[k];
            const double dist = distance_to_boundary(cp, verts[i]);
            const bool inside = point_in_polygon(cp, verts[i], eps);
            const double score = inside ? 0.0 : dist;
            if (score < best) {
                best = score;
                owner = &cell;
                if (inside) break;
            }
        }
        if (owner == nullptr) throw GenError("generate: boundary vertex outside all cells");
        bm.images.col(i) = owner->map(verts[i]);
    }
    result.mapping = std::move(bm);
    return result;
}

BoundaryMapping random_instance(int n_folds, int d, std::uint64_t seed, int n_vertices)
{
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const int n = n_vertices > 0 ? n_vertices : rng.uniform_int(8, 40);
        const Polygon base = random_star_polygon(n, rng);
        std::vector<FoldStep> steps;
        for (int k = 0; k < n_folds; ++k) {
            // Dihedral fold lines must not cross earlier creases inside the
            // polygon, so rejection-sample the line against accepted ones.
            for (int tries = 0; tries < 40; ++tries) {
                FoldStep st;
                const double r = rng.uniform(0.0, 0.45);
                const double a = rng.uniform(0.0, 2.0 * kPi);
                st.point = Point2(r * std::cos(a), r * std::sin(a));
                const double dir_a = rng.uniform(0.0, 2.0 * kPi);
                st.dir = Point2(std::cos(dir_a), std::sin(dir_a));
                st.side = rng.coin() ? +1 : -1;
                if (d >= 3) {
                    st.kind = FoldStep::Kind::Dihedral;
                    st.alpha = rng.uniform(0.3 * kPi, 0.7 * kPi);
                }
                bool clear = true;
                if (d >= 3) {
                    for (const auto& prev : steps) {
                        const double denom = cross2(st.dir, prev.dir);
                        if (std::abs(denom) < 1e-9) {
                            if (std::abs(cross2(prev.dir, Point2(st.point - prev.point))) < 0.05) {
                                clear = false;
                                break;
                            }
                            continue;
                        }
                        const double t = cross2(Point2(prev.point - st.point), prev.dir) / denom;
                        if (point_in_polygon(base, st.point + t * st.dir, 0.05)) {
                            clear = false;
                            break;
                        }
                    }
                }
                if (clear) {
                    steps.push_back(st);
                    break;
                }
            }
        }
        try {
            GenResult res = generate(base, steps, d);
            if (!validate(res.mapping, res.mapping.tolerance())) return res.mapping;
        } catch (const GenError&) {
            // fold sequence rejected (e.g. crossing a nonflat crease); retry
        }
    }
    throw GenError("random_instance: no valid instance after 64 attempts");
}

Polygon unit_square()
{
    Polygon p(2, 4);
    p << 0, 1, 1, 0,  //
        0, 0, 1, 1;
    return p;
}

Polygon lshape_hexagon()
{
    Polygon p(2, 6);
    p << 0, 2, 2, 1, 1, 0,  //
        0, 0, 1, 1, 2, 2;
    return p;
}

Polygon regular_ngon(int k)
{
    Polygon p(2, k);
    for (int i = 0; i < k; ++i) {
        const double a = 2.0 * kPi * i / k;
        p.col(i) = Point2(std::cos(a), std::sin(a));
    }
    return p;
}

Polygon random_star_polygon(int n, Rng& rng)
{
    Polygon p(2, n);
    for (int i = 0; i < n; ++i) {
        const double jitter = rng.uniform(-0.3, 0.3);
        const double a = 2.0 * kPi * (i + 0.5 * jitter) / n;
        const double r = rng.uniform(0.75, 1.0);
        p.col(i) = Point2(r * std::cos(a), r * std::sin(a));
    }
    return p;
}

}  // namespace isofold
