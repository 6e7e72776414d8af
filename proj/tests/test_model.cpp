#include "isofold/corpus.hpp"
#include "isofold/model.hpp"
#include "isofold/rng.hpp"
#include "isofold/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace isofold;

TEST_CASE("validate accepts the identity square and every corpus instance")
{
    CHECK_FALSE(validate(corpus::identity_square()).has_value());
    for (const auto& [name, bm] : corpus::all()) {
        CAPTURE(name);
        CHECK_FALSE(validate(bm).has_value());
    }
}

TEST_CASE("validate rejects scaled images with an edge witness")
{
    BoundaryMapping bm = corpus::identity_square();
    bm.images *= 2.0;
    const auto viol = validate(bm);
    REQUIRE(viol.has_value());
    CHECK(viol->kind == ViolationKind::EdgeNotCritical);
    CHECK(viol->i == 0);
    CHECK(viol->j == 1);
    CHECK(viol->domain_length == doctest::Approx(1.0));
    CHECK(viol->image_length == doctest::Approx(2.0));
}

TEST_CASE("validate checks all pairs of the folded square directly")
{
    const BoundaryMapping bm = corpus::folded_square();
    REQUIRE_FALSE(validate(bm).has_value());
    // Independent all-pairs sweep: every pair nonexpansive, every edge equal.
    const int n = bm.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dd = (bm.vertex(i) - bm.vertex(j)).norm();
            const double di = (bm.image(i) - bm.image(j)).norm();
            CHECK(di <= dd + 1e-12);
            if (j == bm.next(i) || i == bm.next(j)) CHECK(di == doctest::Approx(dd));
        }
    }
}

TEST_CASE("structural violations are reported before pair checks")
{
    BoundaryMapping bm = corpus::identity_square();

    SUBCASE("degenerate edge")
    {
        bm.vertices.col(1) = bm.vertices.col(0);
        const auto viol = validate(bm);
        REQUIRE(viol.has_value());
        CHECK(viol->kind == ViolationKind::DegenerateEdge);
    }
    SUBCASE("self-intersection")
    {
        bm.vertices.col(2) = Point2(0, 1);
        bm.vertices.col(3) = Point2(1, 1);
        const auto viol = validate(bm);
        REQUIRE(viol.has_value());
        CHECK(viol->kind == ViolationKind::NotSimple);
    }
    SUBCASE("dimension below two")
    {
        bm.images = Eigen::MatrixXd::Zero(1, 4);
        const auto viol = validate(bm);
        REQUIRE(viol.has_value());
        CHECK(viol->kind == ViolationKind::WrongDimension);
    }
}

TEST_CASE("the skew square forces the inset construction")
{
    const BoundaryMapping bm = corpus::skew_square();
    REQUIRE_FALSE(validate(bm).has_value());
    CHECK_FALSE(find_visible_critical_pair(bm, bm.tolerance()).has_value());
    // Both diagonals strictly contracted.
    CHECK((bm.image(0) - bm.image(2)).norm() < std::sqrt(2.0) - 1e-6);
    CHECK((bm.image(1) - bm.image(3)).norm() < std::sqrt(2.0) - 1e-6);
}

TEST_CASE("restrict: plain sub-cycles inherit vertices and images")
{
    const BoundaryMapping id = corpus::identity_square();
    const BoundaryMapping tri = restrict_mapping(
        id, {CycleEntry::from_parent(0), CycleEntry::from_parent(1), CycleEntry::from_parent(2)});
    CHECK(tri.size() == 3);
    CHECK_FALSE(validate(tri).has_value());
    CHECK((tri.vertex(2) - Point2(1, 1)).norm() == 0.0);
    CHECK((tri.image(2) - id.image(2)).norm() == 0.0);

    // Left half of the folded square: identity images.
    const BoundaryMapping fold = corpus::folded_square();
    const BoundaryMapping left = restrict_mapping(
        fold, {CycleEntry::from_parent(0), CycleEntry::from_parent(1), CycleEntry::from_parent(4),
               CycleEntry::from_parent(5)});
    CHECK_FALSE(validate(left).has_value());
    for (int i = 0; i < 4; ++i) CHECK((left.image(i) - PointD(left.vertex(i))).norm() < 1e-15);
}

TEST_CASE("restrict with an inserted interior point")
{
    const BoundaryMapping id = corpus::identity_square();
    PointD q(2);
    q << 0.5, 0.5;
    const BoundaryMapping piece = restrict_mapping(
        id, {CycleEntry::from_parent(0), CycleEntry::from_parent(1),
             CycleEntry::from_point(Point2(0.5, 0.5), q)});
    CHECK(piece.size() == 3);
    CHECK_FALSE(validate(piece).has_value());
    CHECK((piece.image(2) - q).norm() == 0.0);
}

TEST_CASE("validate is invariant under cyclic relabeling and rigid motions")
{
    Rng rng(21);
    const BoundaryMapping base = corpus::skew_square();
    for (int shift = 0; shift < base.size(); ++shift) {
        BoundaryMapping rotated = base;
        for (int i = 0; i < base.size(); ++i) {
            rotated.vertices.col(i) = base.vertices.col((i + shift) % base.size());
            rotated.images.col(i) = base.images.col((i + shift) % base.size());
        }
        CHECK_FALSE(validate(rotated).has_value());
    }
    // Random rotation plus translation of all images.
    const double a = rng.uniform(0, 6.28), b = rng.uniform(0, 6.28), c = rng.uniform(0, 6.28);
    Eigen::Matrix3d rot;
    rot = Eigen::AngleAxisd(a, Eigen::Vector3d::UnitX()) *
          Eigen::AngleAxisd(b, Eigen::Vector3d::UnitY()) *
          Eigen::AngleAxisd(c, Eigen::Vector3d::UnitZ());
    BoundaryMapping moved = base;
    for (int i = 0; i < base.size(); ++i)
        moved.images.col(i) = rot * Eigen::Vector3d(base.images.col(i)) + Eigen::Vector3d(1, 2, 3);
    CHECK_FALSE(validate(moved).has_value());
}

TEST_CASE("interpolated boundary pairs of a valid mapping stay nonexpansive")
{
    Rng rng(33);
    for (const auto& [name, bm] : corpus::all()) {
        CAPTURE(name);
        for (int t = 0; t < 200; ++t) {
            const int e1 = rng.uniform_int(0, bm.size() - 1);
            const int e2 = rng.uniform_int(0, bm.size() - 1);
            const double t1 = rng.next_double();
            const double t2 = rng.next_double();
            const Point2 a =
                bm.vertex(e1) + t1 * (bm.vertex(bm.next(e1)) - bm.vertex(e1));
            const Point2 b =
                bm.vertex(e2) + t2 * (bm.vertex(bm.next(e2)) - bm.vertex(e2));
            const PointD fa = bm.edge_image(e1, t1);
            const PointD fb = bm.edge_image(e2, t2);
            CHECK((fa - fb).norm() <= (a - b).norm() + 1e-9);
        }
    }
}

TEST_CASE("normalize_ccw flips clockwise input and keeps vertex zero first")
{
    BoundaryMapping bm = corpus::identity_square();
    BoundaryMapping cw = bm;
    for (int i = 0; i < 4; ++i) {
        cw.vertices.col(i) = bm.vertices.col((4 - i) % 4);
        cw.images.col(i) = bm.images.col((4 - i) % 4);
    }
    CHECK(signed_area(cw.vertices) < 0);
    CHECK(normalize_ccw(cw));
    CHECK(signed_area(cw.vertices) > 0);
    CHECK((cw.vertices.col(0) - bm.vertices.col(0)).norm() == 0.0);
    CHECK_FALSE(normalize_ccw(bm));
}
