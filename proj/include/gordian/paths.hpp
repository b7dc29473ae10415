#pragma once

#include "gordian/coloring.hpp"
#include "gordian/diagram.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace gordian {

// A two-clasp stretch of a knot diagram, recorded in the state where the
// first clasp has been undone.  clasp_a is then a poke -- the b3 strand
// passes over the b5 strand twice in a row with only a short connector arc
// between the crossings -- while clasp_b is an intact clasp whose strands
// alternate over.  section_arcs names b1..b5: b1 enters clasp_b, b2 joins
// its crossings, b3 leaves it carrying the poke, b4 is its top strand at
// the first crossing, and b5 enters the poke.
struct ClaspSection {
    PlanarDiagram diagram;
    std::pair<int, int> clasp_a; // poke crossings in under-strand order
    std::pair<int, int> clasp_b; // clasp crossings in under-strand order
    std::array<int, 5> section_arcs;
};

enum class CaseLabel { case1, case2a, case2b, case2c };
std::string case_label_name(CaseLabel label); // "1", "2a", "2b", "2c"

// Shape check for the two marked crossing pairs and the five named arcs;
// throws MalformedSection.  The diagram itself must be in honest arc form.
void validate_section(const ClaspSection& s);

// Case split of a transposition coloring at the section: case1 iff b1 and b2
// carry the same color.  Otherwise their supports overlap in one point j
// with (jk) on b1 and (ij) on b2, and the label is the first of: b5 commutes
// with (jk) -> 2a, with (ij) -> 2b, with (ik) -> 2c.  MalformedSection when
// the remaining arcs disagree with the colors the crossing relations force
// there (case 1: b3 = b4 commuting with b1; case 2: b3 = (jk), b4 = (ik)).
CaseLabel classify_clasp_case(const ClaspSection& s, const ClassColoring& col);

struct SynthesisResult {
    PlanarDiagram diagram;    // section labels, exactly one record switched
    PlanarDiagram normalized; // the same knot with honest arcs
    std::vector<int> arc_map; // section diagram arc -> normalized arc
    int split_tail = -1;      // normalized id of the strand tail the change cut
    CaseLabel label = CaseLabel::case1;
    ClassColoring coloring; // on the normalized diagram
    bool identity_rewrite = false; // the undone clasp was simply restored
    bool descended = false;        // coloring carried over arc by arc
};

// Replaces the undone clasp so the result stays one crossing change from
// both the section diagram and the far neighbour (the diagram with both
// marked clasps changed) while keeping a surjective coloring of col's class.
// In case 2a the restored clasp itself carries the original coloring over
// and is returned unchanged.  Throws NotSurjective when col is not
// surjective and SynthesisExhausted when the budget cannot fit the
// two-crossing clasp tangle or neither adjacent diagram is colorable.
SynthesisResult synthesize_k1_tilde(const ClaspSection& s, const ClassColoring& col,
                                    int budget = 8);

} // namespace gordian
