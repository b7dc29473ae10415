#pragma once

#include "gordian/coloring.hpp"
#include "gordian/diagram.hpp"
#include "gordian/paths.hpp"

#include <string>

namespace gordian {

// Diagram schema: {"crossings": [[a,b,c,d], ...], "signs": [1,-1,...],
// "clasps": [[i,j], ...], "bottom_arcs": [...]} with the last two optional.
// A crossing row reads [under_in, x, under_out, y]; at positive crossings
// x,y are over_out,over_in and at negative ones over_in,over_out, so faired
// rows carry the over arc twice and switched rows stay faithful.
std::string diagram_to_json(const PlanarDiagram& d);
PlanarDiagram diagram_from_json(const std::string& text);

// {"strands": n, "word": [i, -j, ...]}
std::string braid_to_json(const BraidWord& b);
BraidWord braid_from_json(const std::string& text);

// {"group": "S5", "class": "transpositions", "assignment": {"0": [1,2], ...}}
// with permutations in cycle form, points 1-based.
std::string coloring_to_json(const ClassColoring& c);
ClassColoring coloring_from_json(const std::string& text);

std::string fox_space_to_json(const FoxSpace& s);

// {"clasp_a": [i,j], "clasp_b": [k,l], "arcs": [b1,b2,b3,b4,b5]} — the marks
// only; the diagram travels separately and is attached by the caller.
std::string section_to_json(const ClaspSection& s);
ClaspSection section_from_json(const std::string& text, const PlanarDiagram& d);

// "-" reads stdin, a leading '{' is inline JSON, anything else a file path.
std::string slurp_input(const std::string& arg);

} // namespace gordian
