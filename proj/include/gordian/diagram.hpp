#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gordian {

// One crossing of an oriented knot diagram.  Arcs are maximal segments
// between undercrossings, so a strand passing over does not split its arc
// and over_in == over_out in a fully faired diagram.  crossing_change leaves
// records with over_in != over_out ("switched" records); validation and the
// coloring relations understand those, see below.
struct Crossing {
    int sign = 1;
    int over_in = 0;
    int over_out = 0;
    int under_in = 0;
    int under_out = 0;

    bool operator==(const Crossing&) const = default;
    bool switched() const { return over_in != over_out; }
};

struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 1; // trivial diagram: no crossings, one closed arc
    std::vector<std::pair<int, int>> clasp_marks;
    std::vector<int> bottom_arcs; // braid-closure seeds in strand order

    bool operator==(const PlanarDiagram&) const = default;
    int crossing_count() const { return static_cast<int>(crossings.size()); }
};

struct BraidWord {
    int strands = 1;
    std::vector<int> letters; // +-i for the i-th generator
};

void validate_braid(const BraidWord& b);
bool closes_to_knot(const BraidWord& b); // braid permutation is an n-cycle

// Checks the arc model: A = C (or the trivial diagram), every arc once as
// under_in and once as under_out, the under-chain a single cycle, clasp marks
// referencing crossing pairs joined by two shared arcs.  Diagrams containing
// switched records are checked by undoing the switches first, so any
// record-level crossing change of a valid diagram is accepted.
void validate(const PlanarDiagram& d);

PlanarDiagram braid_closure(const BraidWord& b);
BraidWord trefoil_sum_braid(int k); // sigma_1^3 ... sigma_k^3 in B_{k+1}

// Closure of beta_m in B_{2m+2} with the two-crossing clasp replacing the
// plain closure of the first two strands; the clasp pair is recorded in
// clasp_marks.  Variant 0 is the doubling clasp, the pattern under which the
// (12),(23),...,(2m+1 2m+2) bottom seeding extends to a coloring for every
// m; the other three (mirrored clasp, swapped cup order) exist to refute it.
PlanarDiagram whitehead_double_diagram(int m);
PlanarDiagram whitehead_double_variant(int m, int variant); // variants 0..3

PlanarDiagram pretzel_knot(int p, int q, int r); // odd positive twist counts

// Splices d2 into d1 at the end of arc a1 / the start of arc a2.  Crossing
// counts add; so do arc counts when both summands are nontrivial (A = C).
PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2,
                            int a1, int a2);

PlanarDiagram mirror(PlanarDiagram d); // negates every sign; arcs untouched

// Record-level switch at crossing c: over and under strands exchange roles,
// the sign flips, nothing else moves.  Applying it twice is the identity.
PlanarDiagram crossing_change(PlanarDiagram d, int c);

// True iff the diagrams agree except at exactly one crossing, where one is
// the record-level switch of the other.  Metadata (clasp marks, seeds) is
// not compared.
bool is_one_crossing_adjacent(const PlanarDiagram& d1, const PlanarDiagram& d2);

struct NormalizedDiagram {
    PlanarDiagram diagram;
    std::vector<int> arc_map; // old arc id -> new arc id
    int split_tail = -1;      // new id of the tail cut from the former over arc
};

// Rebuilds honest arcs after a record-level crossing change: the strand now
// on top heals into one arc (smaller label wins) and the strand now cut
// gains a tail piece carrying only its old endpoint.  Accepts at most one
// switched record; with none this is the identity.
NormalizedDiagram normalize(const PlanarDiagram& d);

int overpass_count(const PlanarDiagram& d); // arcs passing over >= 1 crossing
int writhe(const PlanarDiagram& d);

struct GroupPresentation {
    int generator_count = 0;
    std::vector<std::vector<int>> relators; // words over +-(generator+1)
    std::vector<bool> meridian_flags;
    std::vector<std::string> labels;
};

// One meridian generator per arc; per crossing the length-4 relator
// x_out x_over^e x_in^-1 x_over^-e with e the crossing sign.
GroupPresentation wirtinger(const PlanarDiagram& d);

// Word of the preferred longitude based at base_arc: over-generators with
// crossing signs along the knot, then base_arc^-writhe.
std::vector<int> longitude_word(const PlanarDiagram& d, int base_arc);

} // namespace gordian
