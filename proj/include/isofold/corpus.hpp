#pragma once

#include "isofold/gen.hpp"
#include "isofold/model.hpp"

#include <string>
#include <vector>

namespace isofold {
namespace corpus {

/// Unit square, identity images, d = 2.
BoundaryMapping identity_square();

/// Square folded flat at x = 0.5 (d = 2), subdivided at the crease.
BoundaryMapping folded_square();

/// The fold step reproducing folded_square() from the unit square.
FoldStep folded_square_step();

/// Square folded at x = 0.5 with dihedral angle pi/2 (d = 3).
BoundaryMapping dihedral_square();

FoldStep dihedral_square_step();

/// Unit square whose images form a skew quadrilateral with unit edges and
/// both diagonals strictly contracted: no visible critical pair exists, so
/// solving it must run the inset construction. lift is the circle parameter
/// of the fourth image on the two-sphere intersection; pi/2 is the corpus
/// value, nearby values give valid perturbed variants.
BoundaryMapping skew_square(double lift = 1.5707963267948966);

/// Planar d = 2 instance exercising the inset construction: a convex kite
/// whose corner at the origin has interior angle pi/2 and image angle pi/3,
/// with no critical nonadjacent pair.
BoundaryMapping planar_kite();

struct Named {
    std::string name;
    BoundaryMapping mapping;
};

/// All named instances in a fixed order.
std::vector<Named> all();

}  // namespace corpus
}  // namespace isofold
