#pragma once

#include "isofold/split.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isofold {

struct SolveError : std::runtime_error {
    explicit SolveError(const std::string& msg, std::string trace_dump = {})
        : std::runtime_error(msg), trace(std::move(trace_dump))
    {
    }
    std::string trace;
};

struct InvalidBoundary : SolveError {
    explicit InvalidBoundary(const Violation& v)
        : SolveError("invalid boundary mapping: " + describe(v)), violation(v)
    {
    }
    Violation violation;
};

struct SolveStep {
    enum class Kind { Routine1, Routine2, SeamSplit };
    Kind kind;
    int piece_size = 0;
    // Routine 1 / seam split: the chord, as mesh vertex ids.
    int diag_i = -1;
    int diag_j = -1;
    // Routine 2 details.
    int vertex = -1;  // mesh id of the inset vertex v
    double beta = 0.0;
    int branch = +1;
    double t_star = 0.0;
    int split_end = -1;                        // mesh id of the split end
    std::array<int, 3> triangle_u{-1, -1, -1}; // inset triangle (v, u, p)
    std::array<int, 3> triangle_w{-1, -1, -1}; // inset triangle (v, w, p)
};

/// Record of one solve run. Every Routine 1 or Routine 2 call decreases the
/// potential (sum over pieces of vertex count minus three) by exactly one;
/// seam splits keep it unchanged and are tracked separately.
struct SolveTrace {
    int routine1 = 0;
    int routine2 = 0;
    int seam_splits = 0;
    std::vector<SolveStep> steps;
    std::vector<int> potential_history;  // initial value, then one entry per step
    std::vector<std::string> warnings;
    BendPolicy policy = BendPolicy::Bisector;
    int branch = +1;
    std::uint64_t seed = 0;
};

/// Triangulation of the input polygon with folded coordinates per corner.
/// Faces sharing a domain edge reference identical vertex ids, so the
/// piecewise-affine map is continuous by construction.
struct SolutionMesh {
    Polygon vertices_domain;         // 2 x m
    Eigen::MatrixXd vertices_image;  // d x m
    std::vector<std::array<int, 3>> faces;  // counterclockwise in the domain
    std::vector<int> boundary_map;          // input vertex index -> mesh vertex id

    int dimension() const { return static_cast<int>(vertices_image.rows()); }
    int vertex_count() const { return static_cast<int>(vertices_domain.cols()); }
};

struct SolveOptions {
    std::optional<BendPolicy> policy;  // default: bisector for d >= 3, min-angle for d = 2
    int branch = +1;
    std::uint64_t seed = 0;
    bool audit = false;
};

/// Lowest lexicographic nonadjacent vertex pair that is critical and whose
/// open diagonal runs through the interior.
std::optional<std::pair<int, int>> find_visible_critical_pair(const BoundaryMapping& bm,
                                                              const Tolerance& tol);

/// Lowest-index vertex whose two neighbors form a contractive pair. Throws
/// SolveError when none exists (possible only for invalid inputs).
int find_double_contractive_vertex(const BoundaryMapping& bm, const Tolerance& tol);

/// Split along the diagonal (i, j); both pieces inherit their images.
std::pair<BoundaryMapping, BoundaryMapping> routine1(const BoundaryMapping& bm, int i, int j);

/// Affine map of a congruent triangle pair: g(p) = offset + J * p.
struct TriangleMap {
    Eigen::MatrixXd jacobian;  // d x 2
    PointD offset;

    PointD operator()(const Point2& p) const { return offset + jacobian * p; }
};

struct NotIsometric : std::runtime_error {
    using std::runtime_error::runtime_error;
};

TriangleMap triangle_map(const Point2& u, const Point2& v, const Point2& w, const PointD& fu,
                         const PointD& fv, const PointD& fw, const Tolerance& tol, double scale);

/// Solve the instance: recursive partitioning into congruent triangles.
std::pair<SolutionMesh, SolveTrace> solve(const BoundaryMapping& bm, const SolveOptions& opts);

}  // namespace isofold
