#include "gordian/covers.hpp"

#include "gordian/error.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iterator>
#include <set>

namespace gordian {

namespace {

struct Rewriter {
    int arcs = 0;
    std::vector<Perm> col;
    std::vector<std::array<int, 3>> sg; // [arc][sheet-1] -> Schreier index, -1 on the tree
    int gens = 0;

    int act(int v, int a) const { return col[a].apply(v); }

    std::vector<Int> rewrite(const std::vector<int>& word, int start) const {
        std::vector<Int> row(gens, 0);
        int cur = start;
        for (int letter : word) {
            int a = std::abs(letter) - 1;
            if (letter > 0) {
                int idx = sg[a][cur - 1];
                if (idx >= 0) row[idx] += 1;
                cur = act(cur, a);
            } else {
                int prev = col[a].inverse().apply(cur);
                int idx = sg[a][prev - 1];
                if (idx >= 0) row[idx] -= 1;
                cur = prev;
            }
        }
        GORDIAN_CHECK(cur == start, "rewritten word must close up");
        return row;
    }
};

Rewriter build_rewriter(const PlanarDiagram& d, const ClassColoring& c) {
    if (!(c.spec == symmetric_transpositions(3)))
        fail(ErrorKind::SpecMismatch, "covers are built from S3 transposition colorings");
    if (first_violated_crossing(d, c) != -1)
        fail(ErrorKind::SpecMismatch, "assignment does not color the diagram");
    if (!is_surjective_coloring(c))
        fail(ErrorKind::NotSurjective, "covers need a surjective coloring");

    Rewriter rw;
    rw.arcs = d.arc_count;
    rw.col = c.assignment;
    rw.sg.assign(rw.arcs, {-2, -2, -2});

    // Breadth-first spanning tree from sheet 1, arcs tried in order.
    std::array<char, 4> seen{};
    std::vector<int> order{1};
    seen[1] = 1;
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int a = 0; a < rw.arcs; ++a) {
            int w = rw.act(v, a);
            if (!seen[w]) {
                seen[w] = 1;
                rw.sg[a][v - 1] = -1;
                order.push_back(w);
            }
        }
    }
    GORDIAN_CHECK(order.size() == 3, "a surjective coloring reaches every sheet");
    int next = 0;
    for (int v = 1; v <= 3; ++v)
        for (int a = 0; a < rw.arcs; ++a)
            if (rw.sg[a][v - 1] != -1) rw.sg[a][v - 1] = next++;
    rw.gens = next;
    return rw;
}

int fixed_sheet(const Perm& t) {
    for (int v = 1; v <= 3; ++v)
        if (t.apply(v) == v) return v;
    fail(ErrorKind::Internal, "a transposition of three points fixes one");
}

int least_swapped_sheet(const Perm& t) {
    for (int v = 1; v <= 3; ++v)
        if (t.apply(v) != v) return v;
    fail(ErrorKind::Internal, "a transposition moves two points");
}

} // namespace

CoverPresentation reidemeister_schreier(const PlanarDiagram& d, const ClassColoring& c) {
    validate(d);
    Rewriter rw = build_rewriter(d, c);
    GroupPresentation pres = wirtinger(d);

    CoverPresentation out;
    out.gens = rw.gens;
    for (const std::vector<int>& rel : pres.relators)
        for (int v = 1; v <= 3; ++v) out.relator_rows.push_back(rw.rewrite(rel, v));
    for (int a = 0; a < d.arc_count; ++a) {
        const Perm& t = c.assignment[a];
        out.meridian_deg1.push_back(rw.rewrite({a + 1}, fixed_sheet(t)));
        out.meridian_deg2.push_back(rw.rewrite({a + 1, a + 1}, least_swapped_sheet(t)));
    }
    std::vector<int> lw = longitude_word(d, 0);
    for (int v = 1; v <= 3; ++v) out.longitude_lifts.push_back(rw.rewrite(lw, v));
    return out;
}

AbelianGroup branched_homology(const PlanarDiagram& d, const ClassColoring& c) {
    CoverPresentation p = reidemeister_schreier(d, c);
    IntMat rows = p.relator_rows;
    rows.insert(rows.end(), p.meridian_deg1.begin(), p.meridian_deg1.end());
    rows.insert(rows.end(), p.meridian_deg2.begin(), p.meridian_deg2.end());
    return cokernel(rows, p.gens);
}

std::optional<Rat> dihedral_linking(const PlanarDiagram& d, const ClassColoring& c) {
    CoverPresentation p = reidemeister_schreier(d, c);
    IntMat filled = p.relator_rows;
    filled.insert(filled.end(), p.meridian_deg2.begin(), p.meridian_deg2.end());
    const std::vector<Int>& u = p.meridian_deg1[0];
    const std::vector<Int>& v = p.longitude_lifts[least_swapped_sheet(c.assignment[0]) - 1];
    if (in_rational_rowspan(filled, u)) return std::nullopt;
    return solve_ratio_mod_rowspan(filled, u, v);
}

LinkingSet linking_set(const PlanarDiagram& d, long long node_limit) {
    SolveOptions o;
    o.node_limit = node_limit;
    SolveResult r = solve_class_colorings(d, symmetric_transpositions(3), o);
    if (!r.complete) fail(ErrorKind::BudgetExceeded, "coloring class search hit the node limit");
    LinkingSet out;
    out.classes = static_cast<int>(r.colorings.size());
    std::set<Rat> seen;
    for (const ClassColoring& c : r.colorings) {
        std::optional<Rat> lk = dihedral_linking(d, c);
        if (lk)
            seen.insert(*lk);
        else
            ++out.undefined;
    }
    out.values.assign(seen.begin(), seen.end());
    return out;
}

ObstructionReport lk_obstruction(const PlanarDiagram& a, const PlanarDiagram& b,
                                 long long node_limit) {
    ObstructionReport rep;
    rep.left = linking_set(a, node_limit);
    rep.right = linking_set(b, node_limit);
    std::set_intersection(rep.left.values.begin(), rep.left.values.end(),
                          rep.right.values.begin(), rep.right.values.end(),
                          std::back_inserter(rep.common));
    rep.obstructed = !rep.left.values.empty() && !rep.right.values.empty() &&
                     rep.left.undefined == 0 && rep.right.undefined == 0 && rep.common.empty();
    return rep;
}

std::string rational_string(const Rat& r) {
    Int num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace gordian
