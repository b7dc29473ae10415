#pragma once

#include "gordian/coloring.hpp"
#include "gordian/diagram.hpp"
#include "gordian/snf.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gordian {

// Rewriting data for the 3-sheeted cover attached to a surjective S_3
// transposition coloring.  Sheets are the points {1,2,3}; the generator of
// arc a carries sheet v to col(a)(v).  A breadth-first spanning tree through
// sheet 1 collapses, leaving 3A-2 Schreier generators; every row below is an
// abelianized rewrite over those generators.
struct CoverPresentation {
    int gens = 0;
    std::vector<std::vector<Int>> relator_rows;    // one per (crossing, sheet)
    std::vector<std::vector<Int>> meridian_deg1;   // arc loop at its color's fixed sheet
    std::vector<std::vector<Int>> meridian_deg2;   // arc run twice at the swapped sheets
    std::vector<std::vector<Int>> longitude_lifts; // per sheet, longitude based at arc 0
};

CoverPresentation reidemeister_schreier(const PlanarDiagram& d, const ClassColoring& c);

// H_1 of the cover branched over the whole knot: relators plus both meridian
// lifts of every arc.
AbelianGroup branched_homology(const PlanarDiagram& d, const ClassColoring& c);

// The knot lifts to a degree-one and a degree-two branch curve.  Filling only
// the doubled one leaves a manifold where that curve's longitude is measured
// as a rational multiple of the degree-one meridian: the linking number of
// the two curves.  Empty when the ratio is not determined.
std::optional<Rat> dihedral_linking(const PlanarDiagram& d, const ClassColoring& c);

struct LinkingSet {
    std::vector<Rat> values; // distinct, ascending
    int undefined = 0;       // coloring classes with no determined ratio
    int classes = 0;         // surjective coloring classes examined
};

// One linking number per surjective coloring class; empty set when the knot
// has no such coloring.  Throws BudgetExceeded if the class search was cut.
LinkingSet linking_set(const PlanarDiagram& d, long long node_limit = -1);

struct ObstructionReport {
    LinkingSet left, right;
    std::vector<Rat> common;
    bool obstructed = false;
};

// Knots one crossing change apart share a linking value, so two complete,
// nonempty, disjoint sets certify that no single change relates the diagrams.
ObstructionReport lk_obstruction(const PlanarDiagram& a, const PlanarDiagram& b,
                                 long long node_limit = -1);

std::string rational_string(const Rat& r); // "4", "-2", "1/3"

} // namespace gordian
