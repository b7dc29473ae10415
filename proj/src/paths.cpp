#include "gordian/paths.hpp"

#include "gordian/error.hpp"

#include <algorithm>
#include <set>

namespace gordian {

std::string case_label_name(CaseLabel label) {
    switch (label) {
        case CaseLabel::case1: return "1";
        case CaseLabel::case2a: return "2a";
        case CaseLabel::case2b: return "2b";
        case CaseLabel::case2c: return "2c";
    }
    fail(ErrorKind::Internal, "unknown case label");
}

void validate_section(const ClaspSection& s) {
    validate(s.diagram);
    for (const Crossing& c : s.diagram.crossings)
        if (c.switched())
            fail(ErrorKind::MalformedSection, "section diagram must be in honest arc form");

    const int C = s.diagram.crossing_count();
    const std::array<int, 4> marked = {s.clasp_a.first, s.clasp_a.second,
                                       s.clasp_b.first, s.clasp_b.second};
    for (int c : marked)
        if (c < 0 || c >= C) fail(ErrorKind::MalformedSection, "clasp crossing out of range");
    if (std::set<int>(marked.begin(), marked.end()).size() != 4)
        fail(ErrorKind::MalformedSection, "the clasps need four distinct crossings");

    const Crossing& a1 = s.diagram.crossings[s.clasp_a.first];
    const Crossing& a2 = s.diagram.crossings[s.clasp_a.second];
    if (a1.over_in != a2.over_in)
        fail(ErrorKind::MalformedSection, "the poke crossings must share their over strand");
    const int connector = a1.under_out;
    if (a2.under_in != connector)
        fail(ErrorKind::MalformedSection, "the poke crossings must be joined by their under arc");
    for (const Crossing& c : s.diagram.crossings)
        if (c.over_in == connector)
            fail(ErrorKind::MalformedSection, "the poke connector cannot pass over a crossing");

    const Crossing& h1 = s.diagram.crossings[s.clasp_b.first];
    const Crossing& h2 = s.diagram.crossings[s.clasp_b.second];
    if (h1.over_in != h2.under_in || h1.under_out != h2.over_in)
        fail(ErrorKind::MalformedSection, "the clasp_b strands must alternate over");

    const auto& arcs = s.section_arcs;
    for (int a : arcs)
        if (a < 0 || a >= s.diagram.arc_count)
            fail(ErrorKind::MalformedSection, "section arc out of range");
    if (std::set<int>(arcs.begin(), arcs.end()).size() != arcs.size())
        fail(ErrorKind::MalformedSection, "the five section arcs must be distinct");
    if (arcs[0] != h1.under_in || arcs[1] != h1.under_out || arcs[2] != h2.under_out ||
        arcs[3] != h1.over_in)
        fail(ErrorKind::MalformedSection, "b1..b4 must frame the intact clasp");
    if (arcs[2] != a1.over_in)
        fail(ErrorKind::MalformedSection, "the poke must ride the b3 strand");
    if (arcs[4] != a1.under_in)
        fail(ErrorKind::MalformedSection, "b5 must enter the first poke crossing");
}

namespace {

// The moved point two distinct transpositions share, or -1.
int shared_point(const Perm& p, const Perm& q) {
    int shared = -1, count = 0;
    for (int x : p.support())
        for (int y : q.support())
            if (x == y) {
                shared = x;
                ++count;
            }
    return count == 1 ? shared : -1;
}

int other_point(const Perm& p, int x) {
    for (int y : p.support())
        if (y != x) return y;
    fail(ErrorKind::Internal, "transposition moving one point");
}

} // namespace

CaseLabel classify_clasp_case(const ClaspSection& s, const ClassColoring& col) {
    validate_section(s);
    if (col.spec.cls != ClassKind::transpositions)
        fail(ErrorKind::SpecMismatch, "the clasp case split reads transposition colorings");
    if (!check_coloring(s.diagram, col))
        fail(ErrorKind::SpecMismatch, "coloring does not satisfy the section diagram");

    const auto& arcs = s.section_arcs;
    const Perm& c1 = col.assignment[arcs[0]];
    const Perm& c2 = col.assignment[arcs[1]];
    const Perm& c3 = col.assignment[arcs[2]];
    const Perm& c4 = col.assignment[arcs[3]];
    const Perm& c5 = col.assignment[arcs[4]];

    if (c1 == c2) {
        if (c3 != c4 || !c3.commutes_with(c1))
            fail(ErrorKind::MalformedSection,
                 "case 1 needs b3 and b4 colored alike, commuting with b1");
        return CaseLabel::case1;
    }
    const int j = shared_point(c1, c2);
    if (j < 0)
        fail(ErrorKind::MalformedSection, "b1 and b2 must overlap in exactly one point");
    const int k = other_point(c1, j);
    const int i = other_point(c2, j);
    if (c3 != c1 || c4 != Perm::transposition(col.spec.n, i, k))
        fail(ErrorKind::MalformedSection, "case 2 needs b3 = (jk) and b4 = (ik)");
    if (c5.commutes_with(c1)) return CaseLabel::case2a;
    if (c5.commutes_with(c2)) return CaseLabel::case2b;
    if (c5.commutes_with(c4)) return CaseLabel::case2c;
    fail(ErrorKind::Internal, "transposition escaping every commutation test");
}

SynthesisResult synthesize_k1_tilde(const ClaspSection& s, const ClassColoring& col,
                                    int budget) {
    const CaseLabel label = classify_clasp_case(s, col);
    if (!is_surjective_coloring(col))
        fail(ErrorKind::NotSurjective, "the section coloring must be surjective");
    if (budget < 2)
        fail(ErrorKind::SynthesisExhausted,
             "a clasp tangle needs two crossings, budget allows " + std::to_string(budget));

    // A diagram one record change away from both this one and the far
    // neighbour (both marked clasps changed) must differ here at exactly one
    // of the two marked clasps, so those two changes are the only candidates.
    for (int site : {s.clasp_a.first, s.clasp_b.first}) {
        PlanarDiagram cand = crossing_change(s.diagram, site);
        NormalizedDiagram norm = normalize(cand);

        SynthesisResult out;
        out.normalized = std::move(norm.diagram);
        out.arc_map = std::move(norm.arc_map);
        out.split_tail = norm.split_tail;
        out.label = label;
        out.identity_rewrite = site == s.clasp_a.first;

        // Carry the coloring across when the healed arcs agree; the cut
        // strand keeps its color on both pieces.
        ClassColoring carried;
        carried.spec = col.spec;
        carried.assignment.assign(out.normalized.arc_count, Perm());
        bool carries = true;
        for (int a = 0; a < s.diagram.arc_count && carries; ++a) {
            Perm& slot = carried.assignment[out.arc_map[a]];
            if (slot.degree() == 0)
                slot = col.assignment[a];
            else if (slot != col.assignment[a])
                carries = false;
        }
        if (carries) {
            carried.assignment[out.split_tail] = col.assignment[cand.crossings[site].under_in];
            carries = check_coloring(out.normalized, carried) && is_surjective_coloring(carried);
        }
        if (carries) {
            out.coloring = std::move(carried);
            out.descended = true;
            out.diagram = std::move(cand);
            return out;
        }

        SolveOptions opts;
        opts.max_solutions = 1;
        SolveResult found = solve_class_colorings(out.normalized, col.spec, opts);
        if (!found.colorings.empty()) {
            out.coloring = std::move(found.colorings.front());
            out.descended = false;
            out.diagram = std::move(cand);
            return out;
        }
    }
    fail(ErrorKind::SynthesisExhausted,
         "neither one-change neighbour admits a surjective coloring");
}

} // namespace gordian
