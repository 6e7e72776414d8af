#pragma once

#include "isofold/model.hpp"
#include "isofold/solver.hpp"
#include "isofold/verify.hpp"

#include <string>

namespace isofold {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance file: {"version":1, "dimension":d, "vertices":[[x,y],...],
/// "images":[[c1,...,cd],...]}. Vertices are normalized to counterclockwise
/// on load (vertex 0 stays first).
BoundaryMapping parse_instance(const std::string& text);
BoundaryMapping load_instance(const std::string& path);
std::string instance_to_json(const BoundaryMapping& bm);
void save_instance(const BoundaryMapping& bm, const std::string& path);

struct SolutionFile {
    SolutionMesh mesh;
    int routine1 = 0;
    int routine2 = 0;
    std::string policy;
    int branch = +1;
    std::uint64_t seed = 0;
};

/// Solution file: {"version":1, "dimension":d, "vertices_domain":[...],
/// "vertices_image":[...], "faces":[[i,j,k],...], "boundary_map":[...],
/// "trace":{"routine1":c1,"routine2":c2,"policy":...,"branch":...,"seed":...}}.
std::string solution_to_json(const SolutionMesh& mesh, const SolveTrace& trace);
SolutionFile parse_solution(const std::string& text);
SolutionFile load_solution(const std::string& path);
void save_solution(const SolutionMesh& mesh, const SolveTrace& trace, const std::string& path);

std::string violation_to_json(const Violation& v);
std::string verify_report_to_json(const VerifyReport& report);

std::string to_string(BendPolicy policy);
BendPolicy policy_from_string(const std::string& name);

}  // namespace isofold
