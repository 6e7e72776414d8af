#include "isofold/solver.hpp"

#include <cmath>
#include <utility>

namespace isofold {

namespace {

constexpr double kPi = 3.14159265358979323846;

// A sub-polygon in flight: its boundary mapping plus the mesh vertex id of
// every local vertex. Seam vertices keep their ids across pieces, which is
// what glues the final mesh together.
struct Piece {
    BoundaryMapping bm;
    std::vector<int> ids;

    int size() const { return bm.size(); }
};

std::vector<int> chain_locals(int from, int to, int n)
{
    std::vector<int> out;
    for (int k = from;; k = (k + 1) % n) {
        out.push_back(k);
        if (k == to) break;
    }
    return out;
}

Piece make_piece(const Piece& parent, const std::vector<int>& locals)
{
    std::vector<CycleEntry> cycle;
    Piece out;
    cycle.reserve(locals.size());
    out.ids.reserve(locals.size());
    for (int k : locals) {
        cycle.push_back(CycleEntry::from_parent(k));
        out.ids.push_back(parent.ids[k]);
    }
    out.bm = restrict_mapping(parent.bm, cycle);
    return out;
}

Piece make_piece_with_point(const Piece& parent, const std::vector<int>& locals_before,
                            const Point2& p, const PointD& q, int pid,
                            const std::vector<int>& locals_after)
{
    std::vector<CycleEntry> cycle;
    Piece out;
    for (int k : locals_before) {
        cycle.push_back(CycleEntry::from_parent(k));
        out.ids.push_back(parent.ids[k]);
    }
    cycle.push_back(CycleEntry::from_point(p, q));
    out.ids.push_back(pid);
    for (int k : locals_after) {
        cycle.push_back(CycleEntry::from_parent(k));
        out.ids.push_back(parent.ids[k]);
    }
    out.bm = restrict_mapping(parent.bm, cycle);
    return out;
}

}  // namespace

std::optional<std::pair<int, int>> find_visible_critical_pair(const BoundaryMapping& bm,
                                                              const Tolerance& tol)
{
    const int n = bm.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // adjacent around the seam
            if (classify_pair(bm.vertex(i), bm.vertex(j), bm.image(i), bm.image(j), tol) !=
                PairClass::Critical)
                continue;
            if (visible_through_interior(bm.vertices, bm.vertex(i), bm.vertex(j), tol.eps_abs))
                return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

int find_double_contractive_vertex(const BoundaryMapping& bm, const Tolerance& tol)
{
    const int n = bm.size();
    for (int v = 0; v < n; ++v) {
        const int u = bm.next(v);
        const int w = bm.prev(v);
        if (classify_pair(bm.vertex(u), bm.vertex(w), bm.image(u), bm.image(w), tol) ==
            PairClass::Contractive)
            return v;
    }
    throw SolveError(
        "existence violation: no visible critical pair and no vertex with contractive neighbors");
}

std::pair<BoundaryMapping, BoundaryMapping> routine1(const BoundaryMapping& bm, int i, int j)
{
    const int n = bm.size();
    auto build = [&](const std::vector<int>& locals) {
        std::vector<CycleEntry> cycle;
        for (int k : locals) cycle.push_back(CycleEntry::from_parent(k));
        return restrict_mapping(bm, cycle);
    };
    return {build(chain_locals(i, j, n)), build(chain_locals(j, i, n))};
}

TriangleMap triangle_map(const Point2& u, const Point2& v, const Point2& w, const PointD& fu,
                         const PointD& fv, const PointD& fw, const Tolerance& tol, double scale)
{
    Eigen::Matrix2d dom;
    dom.col(0) = v - u;
    dom.col(1) = w - u;
    if (std::abs(dom.determinant()) <= tol.band(scale * scale))
        throw NotIsometric("triangle_map: degenerate domain triangle");
    const auto check = [&](double a, double b) {
        if (std::abs(a - b) > tol.band(std::max(a, b)))
            throw NotIsometric("triangle_map: image triangle not congruent");
    };
    check((v - u).norm(), (fv - fu).norm());
    check((w - u).norm(), (fw - fu).norm());
    check((w - v).norm(), (fw - fv).norm());

    Eigen::MatrixXd img(fu.size(), 2);
    img.col(0) = fv - fu;
    img.col(1) = fw - fu;
    TriangleMap map;
    map.jacobian = img * dom.inverse();
    map.offset = fu - map.jacobian * u;
    return map;
}

namespace {

struct Solver {
    const Tolerance tol;
    const double scale;
    const SolveOptions& opts;
    BendPolicy policy;
    Rng rng;
    SolveTrace trace;
    std::vector<Point2> mesh_domain;
    std::vector<PointD> mesh_image;
    std::vector<std::array<int, 3>> faces;
    std::vector<Piece> work;
    int phi = 0;

    Solver(const BoundaryMapping& root, const SolveOptions& o)
        : tol(root.tolerance()), scale(root.diameter()), opts(o),
          policy(o.policy.value_or(root.dimension() == 2 ? BendPolicy::MinAngle
                                                         : BendPolicy::Bisector)),
          rng(o.seed)
    {
        trace.policy = policy;
        trace.branch = opts.branch;
        trace.seed = opts.seed;
    }

    int new_vertex(const Point2& p, const PointD& q)
    {
        mesh_domain.push_back(p);
        mesh_image.push_back(q);
        return static_cast<int>(mesh_domain.size()) - 1;
    }

    void audit_children(const Piece& parent, const std::vector<const Piece*>& children)
    {
        if (!opts.audit) return;
        double area_sum = 0.0;
        for (const Piece* c : children) {
            if (auto viol = validate(c->bm, tol))
                throw SolveError("partition audit: piece not valid: " + describe(*viol));
            const double area = signed_area(c->bm.vertices);
            if (area <= 0.0) throw SolveError("partition audit: piece not counterclockwise");
            area_sum += area;
        }
        const double parent_area = signed_area(parent.bm.vertices);
        if (std::abs(area_sum - parent_area) > tol.band(scale * scale) * 10.0)
            throw SolveError("partition audit: piece areas do not cover the parent");
    }

    void push(Piece&& piece) { work.push_back(std::move(piece)); }

    void emit(const Piece& tri) { faces.push_back({tri.ids[0], tri.ids[1], tri.ids[2]}); }

    void record(SolveStep step)
    {
        trace.steps.push_back(step);
        trace.potential_history.push_back(phi);
    }

    // Chord split along local diagonal (i, j); counts as Routine 1.
    void apply_routine1(const Piece& piece, int i, int j)
    {
        const int n = piece.size();
        Piece a = make_piece(piece, chain_locals(i, j, n));
        Piece b = make_piece(piece, chain_locals(j, i, n));
        ++trace.routine1;
        --phi;
        SolveStep step;
        step.kind = SolveStep::Kind::Routine1;
        step.piece_size = n;
        step.diag_i = piece.ids[i];
        step.diag_j = piece.ids[j];
        record(step);
        audit_children(piece, {&a, &b});
        push(std::move(b));
        push(std::move(a));
    }

    // Split a routine-2 piece along its guaranteed critical diagonal
    // (anchor, p); falls back to any visible critical pair.
    std::pair<Piece, Piece> inner_split(const Piece& piece, int anchor_local, int p_local,
                                        bool& used_anchor)
    {
        const int n = piece.size();
        int i = anchor_local;
        int j = p_local;
        used_anchor = true;
        if (!visible_through_interior(piece.bm.vertices, piece.bm.vertex(i), piece.bm.vertex(j),
                                      tol.eps_abs)) {
            const auto alt = find_visible_critical_pair(piece.bm, tol);
            if (!alt)
                throw SolveError(
                    "routine 2: no visible critical pair in a partition piece (expected one at "
                    "the inset vertex)");
            i = alt->first;
            j = alt->second;
            used_anchor = false;
            trace.warnings.push_back("routine 2: fell back to an alternate critical diagonal");
        }
        Piece a = make_piece(piece, chain_locals(i, j, n));
        Piece b = make_piece(piece, chain_locals(j, i, n));
        audit_children(piece, {&a, &b});
        return {std::move(a), std::move(b)};
    }

    void apply_routine2(const Piece& piece, int v)
    {
        const int n = piece.size();
        const int u = piece.bm.next(v);
        const int w = piece.bm.prev(v);
        const BendLine line = select_bend_line(piece.bm, v, policy, rng, tol);
        if (line.theta > kPi + tol.eps_abs)
            trace.warnings.push_back("routine 2 at a reflex contractive vertex");
        const BendLineImage img = bend_line_image(piece.bm, line, opts.branch, tol, scale);
        const SplitTriple st = compute_split(piece.bm, line, img, tol, scale);

        if (st.at_boundary) {
            apply_boundary_split(piece, line, st);
            return;
        }

        const int pid = new_vertex(st.p, st.q);
        const int x = st.end_vertex;
        Piece p1 = make_piece_with_point(piece, chain_locals(v, x, n), st.p, st.q, pid, {});
        Piece p2 = make_piece_with_point(piece, chain_locals(x, v, n), st.p, st.q, pid, {});
        audit_children(piece, {&p1, &p2});

        SolveStep step;
        step.kind = SolveStep::Kind::Routine2;
        step.piece_size = n;
        step.vertex = piece.ids[v];
        step.beta = line.beta;
        step.branch = opts.branch;
        step.t_star = st.t_star;
        step.split_end = piece.ids[x];

        // P1 = [v, u, ..., x, p]: diagonal (u, p) cuts off triangle (p, v, u).
        bool anchored1 = false;
        auto [rest1, tri1] = inner_split(p1, 1, p1.size() - 1, anchored1);
        // P2 = [x, ..., w, v, p]: diagonal (w, p) cuts off triangle (w, v, p).
        bool anchored2 = false;
        auto [tri2, rest2] = inner_split(p2, p2.size() - 3, p2.size() - 1, anchored2);
        if (anchored1) step.triangle_u = {piece.ids[v], piece.ids[u], pid};
        if (anchored2) step.triangle_w = {piece.ids[v], piece.ids[w], pid};

        ++trace.routine2;
        --phi;
        record(step);
        push(std::move(rest2));
        push(std::move(tri2));
        push(std::move(rest1));
        push(std::move(tri1));
    }

    // t* reached the boundary: the split degenerates to a chord from v to the
    // exit point. With an exit vertex this is a plain Routine 1 application;
    // with an edge interior exit the point is inserted first, which keeps the
    // potential unchanged (logged, not counted as either routine).
    void apply_boundary_split(const Piece& piece, const BendLine& line, const SplitTriple& st)
    {
        const int n = piece.size();
        const int v = line.v;
        if (st.end_vertex >= 0) {
            const int k = st.end_vertex;
            if (k == line.u || k == line.v || k == line.w)
                throw SolveError("routine 2: bend line exits at an adjacent vertex");
            trace.warnings.push_back(
                "routine 2: bend line reached a boundary vertex; applied as a chord split");
            apply_routine1(piece, std::min(v, k), std::max(v, k));
            return;
        }
        const int j = st.end_edge;
        const int pid = new_vertex(st.p, st.q);
        Piece a = make_piece_with_point(piece, chain_locals(v, j, n), st.p, st.q, pid, {});
        Piece b = make_piece_with_point(piece, {}, st.p, st.q, pid,
                                        chain_locals(piece.bm.next(j), v, n));
        ++trace.seam_splits;
        trace.warnings.push_back(
            "routine 2: split point on an edge interior; inserted a boundary vertex");
        SolveStep step;
        step.kind = SolveStep::Kind::SeamSplit;
        step.piece_size = n;
        step.diag_i = piece.ids[v];
        step.diag_j = pid;
        step.vertex = piece.ids[v];
        step.beta = line.beta;
        step.branch = opts.branch;
        step.t_star = st.t_star;
        step.split_end = pid;
        record(step);
        audit_children(piece, {&a, &b});
        push(std::move(b));
        push(std::move(a));
    }

    void run(const BoundaryMapping& root, const std::vector<int>& root_ids)
    {
        const int n = root.size();
        phi = n - 3;
        trace.potential_history.push_back(phi);
        for (int i = 0; i < n; ++i) new_vertex(root.vertex(i), root.image(i));

        Piece whole;
        whole.bm = root;
        whole.ids = root_ids;
        push(std::move(whole));

        while (!work.empty()) {
            Piece piece = std::move(work.back());
            work.pop_back();
            if (piece.size() == 3) {
                emit(piece);
                continue;
            }
            if (const auto pair = find_visible_critical_pair(piece.bm, tol)) {
                apply_routine1(piece, pair->first, pair->second);
            } else {
                apply_routine2(piece, find_double_contractive_vertex(piece.bm, tol));
            }
        }
        if (phi != 0) throw SolveError("internal: potential did not reach zero");
    }

    SolutionMesh mesh(std::vector<int> boundary_map) const
    {
        SolutionMesh m;
        const int count = static_cast<int>(mesh_domain.size());
        m.vertices_domain.resize(2, count);
        m.vertices_image.resize(mesh_image.empty() ? 0 : mesh_image[0].size(), count);
        for (int i = 0; i < count; ++i) {
            m.vertices_domain.col(i) = mesh_domain[i];
            m.vertices_image.col(i) = mesh_image[i];
        }
        m.faces = faces;
        m.boundary_map = std::move(boundary_map);
        return m;
    }
};

}  // namespace

std::pair<SolutionMesh, SolveTrace> solve(const BoundaryMapping& bm, const SolveOptions& opts)
{
    BoundaryMapping root = bm;
    const bool flipped = normalize_ccw(root);
    const int n = root.size();

    if (const auto viol = validate(root, root.tolerance())) throw InvalidBoundary(*viol);

    std::vector<int> root_ids(n);
    std::vector<int> boundary_map(n);
    for (int i = 0; i < n; ++i) {
        root_ids[i] = i;
        boundary_map[flipped ? (n - i) % n : i] = i;
    }

    Solver solver(root, opts);
    solver.run(root, root_ids);
    return {solver.mesh(std::move(boundary_map)), std::move(solver.trace)};
}

}  // namespace isofold
