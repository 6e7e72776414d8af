#include "isofold/corpus.hpp"
#include "isofold/solver.hpp"
#include "isofold/verify.hpp"

#include <doctest.h>

#include <cmath>

using namespace isofold;

namespace {

// Hand-written two-face mesh for the identity square, independent of solve().
SolutionMesh handmade_identity_mesh()
{
    SolutionMesh m;
    m.vertices_domain.resize(2, 4);
    m.vertices_domain << 0, 1, 1, 0,  //
        0, 0, 1, 1;
    m.vertices_image = m.vertices_domain;
    m.faces = {{0, 1, 2}, {0, 2, 3}};
    m.boundary_map = {0, 1, 2, 3};
    return m;
}

}  // namespace

TEST_CASE("verify passes solver output and the handmade identity mesh")
{
    const BoundaryMapping fold = corpus::folded_square();
    const auto [mesh, trace] = solve(fold, {});
    const VerifyReport rep = verify(fold, mesh);
    CHECK(rep.pass);

    const BoundaryMapping id = corpus::identity_square();
    const VerifyReport rep2 = verify(id, handmade_identity_mesh());
    CHECK(rep2.pass);
    CHECK(rep2.congruence.residual == 0.0);
    CHECK(rep2.nonexpansive.residual <= 0.0);
}

TEST_CASE("a perturbed image vertex fails congruence with a matching residual")
{
    const BoundaryMapping fold = corpus::folded_square();
    auto [mesh, trace] = solve(fold, {});
    mesh.vertices_image(0, 2) += 1e-3;
    const VerifyReport rep = verify(fold, mesh);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.congruence.pass);
    CHECK(rep.congruence.residual == doctest::Approx(1e-3).epsilon(0.3));
}

TEST_CASE("corrupted meshes fail the check that was corrupted")
{
    const BoundaryMapping id = corpus::identity_square();

    SUBCASE("face index out of range is structural")
    {
        SolutionMesh m = handmade_identity_mesh();
        m.faces[0][1] = 17;
        const VerifyReport rep = verify(id, m);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.structural_error.empty());
    }
    SUBCASE("missing face breaks coverage")
    {
        SolutionMesh m = handmade_identity_mesh();
        m.faces.pop_back();
        const VerifyReport rep = verify(id, m);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.coverage.pass);
    }
    SUBCASE("duplicated vertex with a different image breaks continuity")
    {
        SolutionMesh m = handmade_identity_mesh();
        m.vertices_domain.conservativeResize(2, 6);
        m.vertices_image.conservativeResize(2, 6);
        // Same domain diagonal, shifted images: the seam no longer shares ids.
        m.vertices_domain.col(4) = m.vertices_domain.col(0);
        m.vertices_domain.col(5) = m.vertices_domain.col(2);
        m.vertices_image.col(4) = Point2(0.25, 0.25);
        m.vertices_image.col(5) = Point2(0.75, 0.75);
        m.faces[1] = {4, 5, 3};
        const VerifyReport rep = verify(id, m);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.continuity.pass);
    }
    SUBCASE("wrong boundary image fails the boundary check")
    {
        SolutionMesh m = handmade_identity_mesh();
        m.vertices_image.col(1) = Point2(1.0, 0.5);
        const VerifyReport rep = verify(id, m);
        CHECK_FALSE(rep.pass);
        CHECK_FALSE(rep.boundary.pass);
    }
}

TEST_CASE("evaluate: corners, centroids, and shared-edge continuity")
{
    const SolutionMesh m = handmade_identity_mesh();
    CHECK((evaluate(m, Point2(0, 0)) - PointD(Point2(0, 0))).norm() < 1e-12);
    const Point2 centroid(2.0 / 3, 1.0 / 3);  // centroid of face 0
    CHECK((evaluate(m, centroid) - PointD(centroid)).norm() < 1e-12);
    // A point on the shared diagonal evaluates identically from both sides.
    const Point2 on_edge(0.4, 0.4);
    const PointD via_mesh = evaluate(m, on_edge);
    CHECK((via_mesh - PointD(on_edge)).norm() < 1e-12);
    CHECK_THROWS_AS(evaluate(m, Point2(2, 2)), OutsideDomain);
}

TEST_CASE("evaluate is nonexpansive and exact within a face")
{
    const BoundaryMapping bm = corpus::skew_square();
    const auto [mesh, trace] = solve(bm, {});
    Rng rng(5);
    for (int t = 0; t < 300; ++t) {
        const Point2 a(rng.next_double(), rng.next_double());
        const Point2 b(rng.next_double(), rng.next_double());
        CHECK((evaluate(mesh, a) - evaluate(mesh, b)).norm() <= (a - b).norm() + 1e-9);
    }
    // Distance-preserving when both points share a face.
    for (const auto& f : mesh.faces) {
        const Point2 p0 = mesh.vertices_domain.col(f[0]);
        const Point2 p1 = mesh.vertices_domain.col(f[1]);
        const Point2 p2 = mesh.vertices_domain.col(f[2]);
        const Point2 a = (p0 + p1 + p2) / 3.0;
        const Point2 b = 0.6 * p0 + 0.3 * p1 + 0.1 * p2;
        CHECK((evaluate(mesh, a) - evaluate(mesh, b)).norm() ==
              doctest::Approx((a - b).norm()).epsilon(1e-10));
    }
}

TEST_CASE("crossing-segment property suite")
{
    const PropertyReport rep = property_suite(99, 2000);
    CHECK(rep.pass);
    CHECK(rep.violations == 0);
    CHECK(rep.premise_hits_a > 0);
    CHECK(rep.premise_hits_b > 0);
    CHECK(rep.premise_hits_b_critical > 0);
    CHECK(rep.worst_residual <= 1e-9 * 8.0);
}
