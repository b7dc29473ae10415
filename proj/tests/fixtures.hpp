#pragma once

#include "gordian/diagram.hpp"
#include "gordian/paths.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

gordian::PlanarDiagram unknot();
gordian::PlanarDiagram trefoil(); // 3_1, closure of three positive half-twists
gordian::PlanarDiagram trefoil_bar();
gordian::PlanarDiagram figure_eight(); // 4_1
gordian::PlanarDiagram k8_20();
gordian::PlanarDiagram k8_20_bar();
gordian::PlanarDiagram k8_21();
gordian::PlanarDiagram k8_21_bar();
gordian::PlanarDiagram granny();    // 3_1 # 3_1
gordian::PlanarDiagram granny_bar();
gordian::PlanarDiagram square_knot(); // 3_1 # mirror
gordian::PlanarDiagram p333();        // pretzel P(3,3,3)
gordian::PlanarDiagram whitehead(int m);

// First arc not touching any clasp crossing; splicing there keeps clasps intact.
int splice_arc(const gordian::PlanarDiagram& d);
gordian::PlanarDiagram sum_with_whitehead(const gordian::PlanarDiagram& k);

// The named knots above, for fixture-wide property sweeps.
std::vector<std::pair<std::string, gordian::PlanarDiagram>> all_fixture_knots();

struct SectionFixture {
    gordian::ClaspSection section;
    gordian::ClassColoring coloring;
};

// Single-cycle diagrams realizing each label of the clasp case split,
// together with the coloring that produces the label.  The 2b and 2c ones
// carry a trefoil summand away from the section so both one-change
// neighbours stay colorable.
SectionFixture clasp_section_case1(); // S_4 colors
SectionFixture clasp_section_case2a();
SectionFixture clasp_section_case2b();
SectionFixture clasp_section_case2c();
SectionFixture clasp_section_precedence(); // b5 disjoint from the section colors, S_5

std::vector<std::pair<std::string, SectionFixture>> all_section_fixtures();

} // namespace fixtures
