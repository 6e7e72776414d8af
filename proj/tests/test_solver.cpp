#include "isofold/corpus.hpp"
#include "isofold/gen.hpp"
#include "isofold/io.hpp"
#include "isofold/solver.hpp"
#include "isofold/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace isofold;

namespace {

PointD pd(std::initializer_list<double> cs)
{
    PointD p(cs.size());
    int i = 0;
    for (double c : cs) p(i++) = c;
    return p;
}

}  // namespace

TEST_CASE("find_visible_critical_pair picks the lowest qualifying pair")
{
    const BoundaryMapping id = corpus::identity_square();
    auto pair = find_visible_critical_pair(id, id.tolerance());
    REQUIRE(pair.has_value());
    CHECK(*pair == std::make_pair(0, 2));

    const BoundaryMapping fold = corpus::folded_square();
    pair = find_visible_critical_pair(fold, fold.tolerance());
    REQUIRE(pair.has_value());
    // (0,4) is the first critical visible pair: |v0-v4| = |f0-f4| = sqrt(1.25),
    // and the lower nonadjacent candidates (0,2) and (0,3) contract.
    CHECK(*pair == std::make_pair(0, 4));
    CHECK((fold.vertex(0) - fold.vertex(4)).norm() ==
          doctest::Approx((fold.image(0) - fold.image(4)).norm()));
    CHECK((fold.image(0) - fold.image(2)).norm() < (fold.vertex(0) - fold.vertex(2)).norm());
    CHECK((fold.image(0) - fold.image(3)).norm() < (fold.vertex(0) - fold.vertex(3)).norm());

    CHECK_FALSE(find_visible_critical_pair(corpus::skew_square(),
                                           corpus::skew_square().tolerance())
                    .has_value());
}

TEST_CASE("find_double_contractive_vertex")
{
    const BoundaryMapping skew = corpus::skew_square();
    CHECK(find_double_contractive_vertex(skew, skew.tolerance()) == 0);
    const BoundaryMapping id = corpus::identity_square();
    CHECK_THROWS_AS(find_double_contractive_vertex(id, id.tolerance()), SolveError);
}

TEST_CASE("routine1 splits along a diagonal and both pieces stay valid")
{
    const BoundaryMapping id = corpus::identity_square();
    auto [a, b] = routine1(id, 0, 2);
    CHECK(a.size() == 3);
    CHECK(b.size() == 3);
    CHECK_FALSE(validate(a).has_value());
    CHECK_FALSE(validate(b).has_value());

    const BoundaryMapping fold = corpus::folded_square();
    auto [left, right] = routine1(fold, 1, 4);
    CHECK(left.size() == 4);
    CHECK(right.size() == 4);
    CHECK_FALSE(validate(left).has_value());
    CHECK_FALSE(validate(right).has_value());
    // One piece maps by identity, the other by the reflection at x = 0.5.
    bool identity_seen = false, reflected_seen = false;
    for (const BoundaryMapping* piece : {&left, &right}) {
        bool identity = true, reflected = true;
        for (int i = 0; i < piece->size(); ++i) {
            const Point2 v = piece->vertex(i);
            identity &= (piece->image(i) - PointD(v)).norm() < 1e-12;
            reflected &= (piece->image(i) - PointD(Point2(1.0 - v.x(), v.y()))).norm() < 1e-12;
        }
        identity_seen |= identity;
        reflected_seen |= reflected;
    }
    CHECK(identity_seen);
    CHECK(reflected_seen);
}

TEST_CASE("routine1 tolerates a diagonal grazing a collinear vertex")
{
    // Hexagon with collinear vertices on the bottom edge, identity images.
    BoundaryMapping bm;
    bm.vertices.resize(2, 6);
    bm.vertices << 0, 1, 2, 2, 1, 0,  //
        0, 0, 0, 1, 1, 1;
    bm.images = bm.vertices;
    REQUIRE_FALSE(validate(bm).has_value());
    auto [a, b] = routine1(bm, 1, 4);
    CHECK_FALSE(validate(a).has_value());
    CHECK_FALSE(validate(b).has_value());
    CHECK(a.size() + b.size() == 8);
}

TEST_CASE("triangle_map evaluates the barycentric formula")
{
    const Tolerance tol;
    const Point2 u(0, 0), v(1, 0), w(0, 1);
    const auto map3 =
        triangle_map(u, v, w, pd({0, 0, 0}), pd({1, 0, 0}), pd({0, 0, 1}), tol, 1.0);
    CHECK((map3(Point2(0, 0)) - pd({0, 0, 0})).norm() < 1e-15);
    CHECK((map3(Point2(0.5, 0.5)) - pd({0.5, 0, 0.5})).norm() < 1e-15);

    const auto ident = triangle_map(u, v, w, pd({0, 0}), pd({1, 0}), pd({0, 1}), tol, 1.0);
    const Point2 centroid(1.0 / 3, 1.0 / 3);
    CHECK((ident(centroid) - PointD(centroid)).norm() < 1e-15);

    CHECK_THROWS_AS(triangle_map(u, v, w, pd({0, 0}), pd({2, 0}), pd({0, 1}), tol, 1.0),
                    NotIsometric);
    CHECK_THROWS_AS(
        triangle_map(u, v, Point2(2, 0), pd({0, 0}), pd({1, 0}), pd({2, 0}), tol, 1.0),
        NotIsometric);
}

TEST_CASE("solve: identity square gives two identity faces")
{
    const auto [mesh, trace] = solve(corpus::identity_square(), {});
    CHECK(mesh.faces.size() == 2);
    CHECK(trace.routine1 == 1);
    CHECK(trace.routine2 == 0);
    CHECK((mesh.vertices_image - mesh.vertices_domain).norm() == 0.0);
}

TEST_CASE("solve: folded square tiles and verifies")
{
    const BoundaryMapping bm = corpus::folded_square();
    SolveOptions opts;
    opts.audit = true;
    const auto [mesh, trace] = solve(bm, opts);
    CHECK(trace.routine1 + trace.routine2 == 3);
    CHECK(verify(bm, mesh).pass);
}

TEST_CASE("solve: skew square runs the inset construction on both branches")
{
    const BoundaryMapping bm = corpus::skew_square();
    for (int branch : {+1, -1}) {
        SolveOptions opts;
        opts.branch = branch;
        opts.audit = true;
        const auto [mesh, trace] = solve(bm, opts);
        CHECK(trace.routine2 >= 1);
        CHECK(mesh.faces.size() == 4);
        CHECK(verify(bm, mesh).pass);
    }
    // The two branches place the inset vertex image on opposite sides.
    SolveOptions plus, minus;
    minus.branch = -1;
    const auto [mp, tp] = solve(bm, plus);
    const auto [mm, tm] = solve(bm, minus);
    CHECK((mp.vertices_image.col(4) - mm.vertices_image.col(4)).norm() > 0.1);
}

TEST_CASE("solve: planar kite creases at pi/12 from the corner edge")
{
    const BoundaryMapping bm = corpus::planar_kite();
    SolveOptions opts;
    opts.audit = true;
    const auto [mesh, trace] = solve(bm, opts);
    CHECK(trace.routine2 == 1);
    CHECK(verify(bm, mesh).pass);
    REQUIRE(trace.steps.size() >= 1);
    const SolveStep& step = trace.steps.front();
    CHECK(step.kind == SolveStep::Kind::Routine2);
    CHECK(step.beta == doctest::Approx(3.14159265358979323846 / 12));
    // The inset vertex p = t* * (cos beta, sin beta) from the corner.
    const Point2 p = mesh.vertices_domain.col(4);
    CHECK(std::atan2(p.y(), p.x()) == doctest::Approx(step.beta));
}

TEST_CASE("potential accounting holds on corpus and generated instances")
{
    auto check_accounting = [](const BoundaryMapping& bm) {
        const auto [mesh, trace] = solve(bm, {});
        REQUIRE(trace.seam_splits == 0);
        CHECK(trace.routine1 + trace.routine2 == bm.size() - 3);
        CHECK(static_cast<int>(mesh.faces.size()) == 1 + trace.routine1 + 3 * trace.routine2);
        REQUIRE_FALSE(trace.potential_history.empty());
        // History starts at n-3 and each recorded call drops it by one.
        int expected = bm.size() - 3;
        CHECK(trace.potential_history[0] == expected);
        for (size_t i = 0; i < trace.steps.size(); ++i) {
            expected -= 1;
            CHECK(trace.potential_history[i + 1] == expected);
        }
        CHECK(trace.potential_history.back() == 0);
    };
    for (const auto& [name, bm] : corpus::all()) {
        CAPTURE(name);
        check_accounting(bm);
    }
    for (int seed = 0; seed < 20; ++seed) {
        check_accounting(random_instance(seed % 5, seed % 2 ? 2 : 3, 9000 + seed));
    }
}

TEST_CASE("solve rejects invalid boundaries with the violation attached")
{
    BoundaryMapping bad = corpus::identity_square();
    bad.images *= 2.0;
    CHECK_THROWS_AS(solve(bad, {}), InvalidBoundary);
    try {
        solve(bad, {});
    } catch (const InvalidBoundary& e) {
        CHECK(e.violation.kind == ViolationKind::EdgeNotCritical);
    }
}

TEST_CASE("solve accepts clockwise input and maps boundary indices back")
{
    BoundaryMapping cw = corpus::folded_square();
    BoundaryMapping orig = cw;
    const int n = cw.size();
    for (int i = 0; i < n; ++i) {
        cw.vertices.col(i) = orig.vertices.col((n - i) % n);
        cw.images.col(i) = orig.images.col((n - i) % n);
    }
    const auto [mesh, trace] = solve(cw, {});
    for (int i = 0; i < n; ++i) {
        const int id = mesh.boundary_map[i];
        CHECK((Point2(mesh.vertices_domain.col(id)) - cw.vertex(i)).norm() < 1e-15);
        CHECK((PointD(mesh.vertices_image.col(id)) - cw.image(i)).norm() < 1e-15);
    }
    CHECK(verify(cw, mesh).pass);
}

TEST_CASE("identical options give bit-identical solutions")
{
    for (const auto& [name, bm] : corpus::all()) {
        CAPTURE(name);
        SolveOptions opts;
        opts.policy = BendPolicy::Random;
        opts.seed = 1234;
        const auto [m1, t1] = solve(bm, opts);
        const auto [m2, t2] = solve(bm, opts);
        CHECK(solution_to_json(m1, t1) == solution_to_json(m2, t2));
    }
}

TEST_CASE("audited solve passes on mixed generated instances")
{
    for (int seed = 0; seed < 30; ++seed) {
        const int d = seed % 2 ? 2 : 3;
        const BoundaryMapping bm = random_instance(seed % 5, d, 777 + seed);
        SolveOptions opts;
        opts.audit = true;
        CHECK_NOTHROW(solve(bm, opts));
    }
}
