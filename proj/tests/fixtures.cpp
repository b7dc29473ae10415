#include "fixtures.hpp"

#include <array>
#include <set>

namespace fixtures {

using namespace gordian;

namespace {

PlanarDiagram close(int strands, std::vector<int> letters) {
    BraidWord b;
    b.strands = strands;
    b.letters = std::move(letters);
    return braid_closure(b);
}

} // namespace

PlanarDiagram unknot() { return close(1, {}); }

PlanarDiagram trefoil() { return close(2, {1, 1, 1}); }

PlanarDiagram trefoil_bar() { return mirror(trefoil()); }

PlanarDiagram figure_eight() { return close(3, {1, -2, 1, -2}); }

PlanarDiagram k8_20() { return close(3, {1, 1, 1, -2, -1, -1, -1, -2}); }

PlanarDiagram k8_20_bar() { return mirror(k8_20()); }

PlanarDiagram k8_21() { return close(3, {1, 1, 1, 2, -1, -1, 2, 2}); }

PlanarDiagram k8_21_bar() { return mirror(k8_21()); }

PlanarDiagram granny() { return connected_sum(trefoil(), trefoil(), 0, 0); }

PlanarDiagram granny_bar() { return mirror(granny()); }

PlanarDiagram square_knot() { return connected_sum(trefoil(), trefoil_bar(), 0, 0); }

PlanarDiagram p333() { return pretzel_knot(3, 3, 3); }

PlanarDiagram whitehead(int m) { return whitehead_double_diagram(m); }

int splice_arc(const PlanarDiagram& d) {
    std::set<int> blocked;
    for (auto [i, j] : d.clasp_marks)
        for (int c : {i, j})
            for (int a : {d.crossings[c].over_in, d.crossings[c].under_in,
                          d.crossings[c].under_out})
                blocked.insert(a);
    int a = 0;
    while (blocked.count(a)) ++a;
    return a;
}

PlanarDiagram sum_with_whitehead(const PlanarDiagram& k) {
    PlanarDiagram w = whitehead(1);
    return connected_sum(k, w, splice_arc(k), splice_arc(w));
}

std::vector<std::pair<std::string, PlanarDiagram>> all_fixture_knots() {
    return {
        {"unknot", unknot()},
        {"3_1", trefoil()},
        {"3_1bar", trefoil_bar()},
        {"4_1", figure_eight()},
        {"8_20", k8_20()},
        {"8_20bar", k8_20_bar()},
        {"8_21", k8_21()},
        {"8_21bar", k8_21_bar()},
        {"granny", granny()},
        {"grannybar", granny_bar()},
        {"square", square_knot()},
        {"P(3,3,3)", p333()},
        {"W_1", whitehead(1)},
    };
}

namespace {

// All crossings positive; a row is {over, under_in, under_out}.
PlanarDiagram assemble(int arc_count, const std::vector<std::array<int, 3>>& rows) {
    PlanarDiagram d;
    d.arc_count = arc_count;
    for (auto [over, in, out] : rows) d.crossings.push_back({1, over, over, in, out});
    validate(d);
    return d;
}

ClassColoring transposition_colors(int n, const std::vector<std::pair<int, int>>& pairs) {
    ClassColoring c;
    c.spec = symmetric_transpositions(n);
    for (auto [i, j] : pairs) c.assignment.push_back(Perm::transposition(n, i, j));
    return c;
}

// Splices a trefoil onto the arc leaving the poke and extends the coloring
// constantly across it, so any record change at the section leaves a
// summand that still colors the whole knot onto S_3.
SectionFixture add_guard_summand(SectionFixture f) {
    const int tail = f.section.diagram.crossings[f.section.clasp_a.second].under_out;
    f.section.diagram = connected_sum(f.section.diagram, trefoil(), tail, 0);
    while (static_cast<int>(f.coloring.assignment.size()) < f.section.diagram.arc_count)
        f.coloring.assignment.push_back(f.coloring.assignment[tail]);
    return f;
}

// Shared layout of the one-cycle section cores: arcs in traversal order are
// b1, b2, b4, b3, b5, v, b5'; crossings 0-1 are the intact clasp, 2-3 the
// poke, 4-6 the closure.  Only the closure overs differ between cases.
SectionFixture section_core(int over_c2, int over_c3,
                            const std::vector<std::pair<int, int>>& colors) {
    SectionFixture f;
    f.section.diagram = assemble(7, {
        {2, 0, 1},       // b4 over b1 -> b2
        {1, 2, 3},       // b2 over b4 -> b3
        {3, 4, 5},       // b3 over b5 -> v
        {3, 5, 6},       // b3 over v -> b5'
        {3, 1, 2},       // b3 over b2 -> b4
        {over_c2, 3, 4}, // ... over b3 -> b5
        {over_c3, 6, 0}, // ... over b5' -> b1
    });
    f.section.clasp_a = {2, 3};
    f.section.clasp_b = {0, 1};
    f.section.section_arcs = {0, 1, 3, 2, 4};
    f.coloring = transposition_colors(3, colors);
    return f;
}

} // namespace

SectionFixture clasp_section_case2a() {
    return section_core(0, 3, {{2, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 3}, {2, 3}, {2, 3}});
}

SectionFixture clasp_section_case2b() {
    return add_guard_summand(
        section_core(2, 2, {{2, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {1, 2}}));
}

SectionFixture clasp_section_case2c() {
    return add_guard_summand(
        section_core(1, 1, {{2, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 3}, {1, 2}, {1, 3}}));
}

SectionFixture clasp_section_case1() {
    SectionFixture f;
    // b1 b2 h1 h2 h3 b4 b3 b5 v b5' in traversal order; the helpers h1..h3
    // walk the color path between the disjoint clasp colors (12) and (34).
    f.section.diagram = assemble(10, {
        {5, 0, 1}, // b4 over b1 -> b2
        {1, 5, 6}, // b2 over b4 -> b3
        {6, 7, 8}, // b3 over b5 -> v
        {6, 8, 9}, // b3 over v -> b5'
        {9, 1, 2}, // closure: b5' over b2 -> h1
        {6, 2, 3}, // b3 over h1 -> h2
        {0, 3, 4}, // b1 over h2 -> h3
        {9, 4, 5}, // b5' over h3 -> b4
        {4, 6, 7}, // h3 over b3 -> b5
        {2, 9, 0}, // h1 over b5' -> b1
    });
    f.section.clasp_a = {2, 3};
    f.section.clasp_b = {0, 1};
    f.section.section_arcs = {0, 1, 6, 5, 7};
    f.coloring = transposition_colors(4, {{1, 2}, {1, 2}, {2, 3}, {2, 4}, {1, 4},
                                          {3, 4}, {3, 4}, {1, 3}, {1, 4}, {1, 3}});
    return f;
}

SectionFixture clasp_section_precedence() {
    SectionFixture f;
    // As in the 2a core, but b5 carries (45), disjoint from the clasp
    // colors; the helper chains h1..h3 and g1..g3 conjugate (23) out to
    // (45) and back.
    f.section.diagram = assemble(13, {
        {2, 0, 1},   // b4 over b1 -> b2
        {1, 2, 3},   // b2 over b4 -> b3
        {3, 7, 8},   // b3 over b5 -> v
        {3, 8, 9},   // b3 over v -> b5'
        {3, 1, 2},   // b3 over b2 -> b4
        {5, 3, 4},   // h2 over b3 -> h1
        {0, 4, 5},   // b1 over h1 -> h2
        {9, 5, 6},   // b5' over h2 -> h3
        {5, 6, 7},   // h2 over h3 -> b5
        {5, 9, 10},  // h2 over b5' -> g1
        {7, 10, 11}, // b5 over g1 -> g2
        {0, 11, 12}, // b1 over g2 -> g3
        {5, 12, 0},  // h2 over g3 -> b1
    });
    f.section.clasp_a = {2, 3};
    f.section.clasp_b = {0, 1};
    f.section.section_arcs = {0, 1, 3, 2, 7};
    f.coloring = transposition_colors(5, {{2, 3}, {1, 2}, {1, 3}, {2, 3}, {2, 4},
                                          {3, 4}, {3, 5}, {4, 5}, {4, 5}, {4, 5},
                                          {3, 5}, {3, 4}, {2, 4}});
    return f;
}

std::vector<std::pair<std::string, SectionFixture>> all_section_fixtures() {
    return {
        {"case 1", clasp_section_case1()},
        {"case 2a", clasp_section_case2a()},
        {"case 2b", clasp_section_case2b()},
        {"case 2c", clasp_section_case2c()},
        {"disjoint b5", clasp_section_precedence()},
    };
}

} // namespace fixtures
