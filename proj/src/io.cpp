#include "isofold/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace isofold {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text)
{
    try {
        return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

json point_list(const Eigen::MatrixXd& m)
{
    json arr = json::array();
    for (int i = 0; i < m.cols(); ++i) {
        json p = json::array();
        for (int r = 0; r < m.rows(); ++r) p.push_back(m(r, i));
        arr.push_back(std::move(p));
    }
    return arr;
}

Eigen::MatrixXd matrix_from(const json& arr, const char* what)
{
    if (!arr.is_array() || arr.empty()) throw ParseError(std::string(what) + ": expected a list");
    const auto& first = arr.front();
    if (!first.is_array() || first.empty())
        throw ParseError(std::string(what) + ": expected lists of numbers");
    const int rows = static_cast<int>(first.size());
    Eigen::MatrixXd m(rows, arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& p = arr[i];
        if (!p.is_array() || static_cast<int>(p.size()) != rows)
            throw ParseError(std::string(what) + ": ragged coordinate lists");
        for (int r = 0; r < rows; ++r) {
            if (!p[r].is_number()) throw ParseError(std::string(what) + ": non-numeric entry");
            m(r, i) = p[r].get<double>();
        }
    }
    return m;
}

}  // namespace

BoundaryMapping parse_instance(const std::string& text)
{
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("instance: expected an object");
    if (!j.contains("version") || j["version"] != 1)
        throw ParseError("instance: unsupported version");
    if (!j.contains("dimension") || !j["dimension"].is_number_integer())
        throw ParseError("instance: missing dimension");
    if (!j.contains("vertices") || !j.contains("images"))
        throw ParseError("instance: missing vertices or images");

    BoundaryMapping bm;
    bm.vertices = matrix_from(j["vertices"], "vertices");
    if (bm.vertices.rows() != 2) throw ParseError("vertices: expected [x,y] pairs");
    bm.images = matrix_from(j["images"], "images");
    if (bm.images.cols() != bm.vertices.cols())
        throw ParseError("images: count differs from vertex count");
    if (bm.images.rows() != j["dimension"].get<int>())
        throw ParseError("images: coordinate count differs from declared dimension");
    normalize_ccw(bm);
    return bm;
}

BoundaryMapping load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string instance_to_json(const BoundaryMapping& bm)
{
    json j;
    j["version"] = 1;
    j["dimension"] = bm.dimension();
    j["vertices"] = point_list(bm.vertices);
    j["images"] = point_list(bm.images);
    return j.dump() + "\n";
}

void save_instance(const BoundaryMapping& bm, const std::string& path)
{
    write_file(path, instance_to_json(bm));
}

std::string solution_to_json(const SolutionMesh& mesh, const SolveTrace& trace)
{
    json j;
    j["version"] = 1;
    j["dimension"] = mesh.dimension();
    j["vertices_domain"] = point_list(mesh.vertices_domain);
    j["vertices_image"] = point_list(mesh.vertices_image);
    json faces = json::array();
    for (const auto& f : mesh.faces) faces.push_back({f[0], f[1], f[2]});
    j["faces"] = std::move(faces);
    j["boundary_map"] = mesh.boundary_map;
    json t;
    t["routine1"] = trace.routine1;
    t["routine2"] = trace.routine2;
    t["policy"] = to_string(trace.policy);
    t["branch"] = trace.branch;
    t["seed"] = trace.seed;
    if (!trace.warnings.empty()) t["warnings"] = trace.warnings;
    j["trace"] = std::move(t);
    return j.dump() + "\n";
}

SolutionFile parse_solution(const std::string& text)
{
    const json j = parse_text(text);
    if (!j.is_object()) throw ParseError("solution: expected an object");
    if (!j.contains("version") || j["version"] != 1)
        throw ParseError("solution: unsupported version");
    for (const char* key : {"dimension", "vertices_domain", "vertices_image", "faces",
                            "boundary_map", "trace"})
        if (!j.contains(key)) throw ParseError(std::string("solution: missing ") + key);

    SolutionFile out;
    out.mesh.vertices_domain = matrix_from(j["vertices_domain"], "vertices_domain");
    if (out.mesh.vertices_domain.rows() != 2)
        throw ParseError("vertices_domain: expected [x,y] pairs");
    out.mesh.vertices_image = matrix_from(j["vertices_image"], "vertices_image");
    if (out.mesh.vertices_image.cols() != out.mesh.vertices_domain.cols())
        throw ParseError("vertices_image: count differs from domain vertex count");
    if (out.mesh.vertices_image.rows() != j["dimension"].get<int>())
        throw ParseError("vertices_image: coordinate count differs from declared dimension");
    for (const auto& f : j["faces"]) {
        if (!f.is_array() || f.size() != 3) throw ParseError("faces: expected index triples");
        out.mesh.faces.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    for (const auto& b : j["boundary_map"]) out.mesh.boundary_map.push_back(b.get<int>());
    const auto& t = j["trace"];
    out.routine1 = t.value("routine1", 0);
    out.routine2 = t.value("routine2", 0);
    out.policy = t.value("policy", "");
    out.branch = t.value("branch", +1);
    out.seed = t.value("seed", std::uint64_t{0});
    return out;
}

SolutionFile load_solution(const std::string& path) { return parse_solution(read_file(path)); }

void save_solution(const SolutionMesh& mesh, const SolveTrace& trace, const std::string& path)
{
    write_file(path, solution_to_json(mesh, trace));
}

std::string violation_to_json(const Violation& v)
{
    json j;
    j["valid"] = false;
    j["kind"] = to_string(v.kind);
    j["witness"] = {{"i", v.i},
                    {"j", v.j},
                    {"domain_length", v.domain_length},
                    {"image_length", v.image_length}};
    return j.dump() + "\n";
}

std::string verify_report_to_json(const VerifyReport& report)
{
    json j;
    j["pass"] = report.pass;
    if (!report.structural_error.empty()) {
        j["structural_error"] = report.structural_error;
        return j.dump() + "\n";
    }
    const auto emit = [](const CheckResult& c) {
        json r;
        r["pass"] = c.pass;
        r["residual"] = c.residual;
        if (!c.detail.empty()) r["detail"] = c.detail;
        return r;
    };
    j["checks"] = {{"congruence", emit(report.congruence)},
                   {"continuity", emit(report.continuity)},
                   {"coverage", emit(report.coverage)},
                   {"boundary", emit(report.boundary)},
                   {"nonexpansive", emit(report.nonexpansive)}};
    return j.dump() + "\n";
}

std::string to_string(BendPolicy policy)
{
    switch (policy) {
        case BendPolicy::Bisector: return "bisector";
        case BendPolicy::MinAngle: return "min-angle";
        case BendPolicy::MaxAngle: return "max-angle";
        case BendPolicy::Random: return "random";
    }
    return "bisector";
}

BendPolicy policy_from_string(const std::string& name)
{
    if (name == "bisector") return BendPolicy::Bisector;
    if (name == "min-angle") return BendPolicy::MinAngle;
    if (name == "max-angle") return BendPolicy::MaxAngle;
    if (name == "random") return BendPolicy::Random;
    throw std::invalid_argument("unknown policy: " + name);
}

}  // namespace isofold
