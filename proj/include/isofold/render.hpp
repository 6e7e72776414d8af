#pragma once

#include "isofold/solver.hpp"

#include <string>

namespace isofold {

struct RenderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SvgStroke { Parity, Plain };

/// Domain polygon with interior mesh edges as SVG 1.1. With Parity strokes
/// and d = 2, faces whose image flips orientation get a distinct class from
/// preserved ones, which makes the crease structure visible.
std::string render_svg(const SolutionMesh& mesh, SvgStroke style);

/// Wavefront OBJ (v/f records) of the folded image; requires d = 3.
std::string render_obj(const SolutionMesh& mesh);

}  // namespace isofold
