#include "isofold/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace isofold {

namespace {

std::string num(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

// Orientation of the affine image of a face relative to its domain; only
// meaningful for planar images.
bool face_flipped(const SolutionMesh& mesh, const std::array<int, 3>& f)
{
    const Point2 a = mesh.vertices_domain.col(f[0]);
    const Point2 b = mesh.vertices_domain.col(f[1]);
    const Point2 c = mesh.vertices_domain.col(f[2]);
    const Eigen::Vector2d ia = mesh.vertices_image.col(f[0]).head<2>();
    const Eigen::Vector2d ib = mesh.vertices_image.col(f[1]).head<2>();
    const Eigen::Vector2d ic = mesh.vertices_image.col(f[2]).head<2>();
    const double dom = cross2(Point2(b - a), Point2(c - a));
    const double img = (ib - ia).x() * (ic - ia).y() - (ib - ia).y() * (ic - ia).x();
    return dom * img < 0.0;
}

}  // namespace

std::string render_svg(const SolutionMesh& mesh, SvgStroke style)
{
    const Point2 lo = mesh.vertices_domain.rowwise().minCoeff();
    const Point2 hi = mesh.vertices_domain.rowwise().maxCoeff();
    const double margin = 0.05 * std::max(hi.x() - lo.x(), hi.y() - lo.y());
    const double w = (hi.x() - lo.x()) + 2.0 * margin;
    const double h = (hi.y() - lo.y()) + 2.0 * margin;

    // Emit with y negated so the domain appears with y up.
    const auto px = [&](int id) { return num(mesh.vertices_domain(0, id)); };
    const auto py = [&](int id) { return num(-mesh.vertices_domain(1, id)); };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(lo.x() - margin) << " "
        << num(-hi.y() - margin) << " " << num(w) << " " << num(h) << "\">\n";
    out << "<style>.face{fill:none;stroke:#555;stroke-width:" << num(0.004 * std::max(w, h))
        << "}.flip{stroke:#c22;fill:#fdd}.keep{fill:#ddf}"
        << ".outline{fill:none;stroke:#000;stroke-width:" << num(0.008 * std::max(w, h))
        << "}</style>\n";
    for (const auto& f : mesh.faces) {
        std::string cls = "face";
        if (style == SvgStroke::Parity && mesh.dimension() == 2)
            cls += face_flipped(mesh, f) ? " flip" : " keep";
        out << "<path class=\"" << cls << "\" d=\"M" << px(f[0]) << " " << py(f[0]) << " L"
            << px(f[1]) << " " << py(f[1]) << " L" << px(f[2]) << " " << py(f[2]) << " Z\"/>\n";
    }
    out << "<path class=\"outline\" d=\"";
    for (size_t i = 0; i < mesh.boundary_map.size(); ++i)
        out << (i == 0 ? "M" : " L") << px(mesh.boundary_map[i]) << " " << py(mesh.boundary_map[i]);
    out << " Z\"/>\n</svg>\n";
    return out.str();
}

std::string render_obj(const SolutionMesh& mesh)
{
    if (mesh.dimension() != 3)
        throw RenderError("obj export requires a three-dimensional image");
    std::ostringstream out;
    for (int i = 0; i < mesh.vertex_count(); ++i)
        out << "v " << num(mesh.vertices_image(0, i)) << " " << num(mesh.vertices_image(1, i))
            << " " << num(mesh.vertices_image(2, i)) << "\n";
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
    return out.str();
}

}  // namespace isofold
