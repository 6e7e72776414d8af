#pragma once

#include "isofold/model.hpp"
#include "isofold/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace isofold {

/// A simple fold of the sheet. The line lives in the domain plane. side
/// selects the moving half-plane as the sign of cross(dir, x - point).
/// Reflections fold flat; dihedral steps rotate the moving side by alpha
/// about the line's image (d = 3 only).
struct FoldStep {
    Point2 point{0.0, 0.0};
    Point2 dir{1.0, 0.0};
    int side = +1;
    enum class Kind { Reflection, Dihedral } kind = Kind::Reflection;
    double alpha = 1.5707963267948966;  // dihedral turn, in (0, pi)
};

struct GenError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GenResult {
    BoundaryMapping mapping;
    std::vector<std::string> warnings;  // e.g. fold lines missing the polygon
};

/// Forward-fold the base polygon through the steps and return its boundary
/// mapping, with the boundary subdivided at every point where the composed
/// map bends. The output always validates: each fold is an isometry of the
/// sheet, so edges stay congruent and vertex pairs nonexpansive.
GenResult generate(const Polygon& base, const std::vector<FoldStep>& steps, int d);

/// Random valid instance: star-shaped base polygon (8-40 vertices unless
/// n_vertices is given), reflective folds for d = 2 and dihedral folds for
/// d = 3. Deterministic per seed; retries internally until validation passes.
BoundaryMapping random_instance(int n_folds, int d, std::uint64_t seed, int n_vertices = 0);

/// Pointwise flat-fold evaluator, used to cross-check the cell composition.
Point2 fold_point_2d(const std::vector<FoldStep>& steps, const Point2& x);

Polygon unit_square();
Polygon lshape_hexagon();
Polygon regular_ngon(int k);
Polygon random_star_polygon(int n, Rng& rng);

}  // namespace isofold
