#include "doctest.h"

#include "fixtures.hpp"
#include "gordian/error.hpp"
#include "gordian/paths.hpp"

#include <optional>
#include <utility>

using namespace gordian;
using fixtures::SectionFixture;

namespace {

template <typename F>
std::optional<ErrorKind> thrown_kind(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

PlanarDiagram far_neighbour(const ClaspSection& s) {
    return crossing_change(crossing_change(s.diagram, s.clasp_a.first), s.clasp_b.first);
}

// The bare 2b core without its guard summand; valid, but neither one-change
// neighbour is colorable.
SectionFixture bare_core_2b() {
    SectionFixture f;
    f.section.diagram.arc_count = 7;
    for (auto [over, in, out] : {std::array<int, 3>{2, 0, 1}, {1, 2, 3}, {3, 4, 5}, {3, 5, 6},
                                 {3, 1, 2}, {2, 3, 4}, {2, 6, 0}})
        f.section.diagram.crossings.push_back({1, over, over, in, out});
    f.section.clasp_a = {2, 3};
    f.section.clasp_b = {0, 1};
    f.section.section_arcs = {0, 1, 3, 2, 4};
    f.coloring.spec = symmetric_transpositions(3);
    for (auto [i, j] : {std::pair<int, int>{2, 3}, {1, 2}, {1, 3}, {2, 3}, {1, 2}, {1, 3}, {1, 2}})
        f.coloring.assignment.push_back(Perm::transposition(3, i, j));
    return f;
}

} // namespace

TEST_CASE("case labels name themselves") {
    CHECK(case_label_name(CaseLabel::case1) == "1");
    CHECK(case_label_name(CaseLabel::case2a) == "2a");
    CHECK(case_label_name(CaseLabel::case2b) == "2b");
    CHECK(case_label_name(CaseLabel::case2c) == "2c");
}

TEST_CASE("fixture sections classify as designed") {
    auto expect = [](const SectionFixture& f, CaseLabel want) {
        REQUIRE(check_coloring(f.section.diagram, f.coloring));
        REQUIRE(is_surjective_coloring(f.coloring));
        CHECK(classify_clasp_case(f.section, f.coloring) == want);
    };
    expect(fixtures::clasp_section_case1(), CaseLabel::case1);
    expect(fixtures::clasp_section_case2a(), CaseLabel::case2a);
    expect(fixtures::clasp_section_case2b(), CaseLabel::case2b);
    expect(fixtures::clasp_section_case2c(), CaseLabel::case2c);
    // b5 carries (45): disjoint support commutes with all three section
    // transpositions and the first test wins.
    expect(fixtures::clasp_section_precedence(), CaseLabel::case2a);
}

TEST_CASE("the crossing relations force the classified colors") {
    // With the shape checks passed and the coloring valid, the b3/b4 colors
    // the classifier asserts are consequences, never free choices.
    for (auto& [name, f] : fixtures::all_section_fixtures()) {
        CAPTURE(name);
        const auto& arcs = f.section.section_arcs;
        const Perm& c1 = f.coloring.assignment[arcs[0]];
        const Perm& c2 = f.coloring.assignment[arcs[1]];
        const Perm& c3 = f.coloring.assignment[arcs[2]];
        const Perm& c4 = f.coloring.assignment[arcs[3]];
        if (c1 == c2) {
            CHECK(c3 == c4);
            CHECK(c3.commutes_with(c1));
        } else {
            CHECK(c3 == c1);
            CHECK(c4 == c2 * c1 * c2.inverse());
        }
    }
}

TEST_CASE("section validation rejects broken shapes") {
    SectionFixture good = fixtures::clasp_section_case2a();
    CHECK_NOTHROW(validate_section(good.section));

    ClaspSection s = good.section;
    std::swap(s.clasp_a, s.clasp_b);
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);

    s = good.section;
    s.clasp_a.second = 9;
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);

    s = good.section;
    s.clasp_b.second = s.clasp_a.first;
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);

    s = good.section;
    std::swap(s.section_arcs[2], s.section_arcs[3]);
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);

    s = good.section;
    s.section_arcs[4] = s.section_arcs[0];
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);

    s = good.section;
    s.diagram = crossing_change(s.diagram, s.clasp_b.first);
    CHECK(thrown_kind([&] { validate_section(s); }) == ErrorKind::MalformedSection);
}

TEST_CASE("classification validates its coloring argument") {
    SectionFixture f = fixtures::clasp_section_case2a();

    ClassColoring wrong_class = f.coloring;
    wrong_class.spec = alternating_three_cycles(4);
    wrong_class.assignment.assign(f.section.diagram.arc_count, Perm::three_cycle(4, 1, 2, 3));
    CHECK(thrown_kind([&] { classify_clasp_case(f.section, wrong_class); }) ==
          ErrorKind::SpecMismatch);

    ClassColoring broken = f.coloring;
    broken.assignment[f.section.section_arcs[1]] = Perm::transposition(3, 1, 3);
    CHECK(thrown_kind([&] { classify_clasp_case(f.section, broken); }) ==
          ErrorKind::SpecMismatch);

    ClassColoring short_one = f.coloring;
    short_one.assignment.pop_back();
    CHECK(thrown_kind([&] { classify_clasp_case(f.section, short_one); }) ==
          ErrorKind::SpecMismatch);
}

TEST_CASE("synthesized rewrites satisfy all three contracts") {
    for (auto& [name, f] : fixtures::all_section_fixtures()) {
        CAPTURE(name);
        SynthesisResult r = synthesize_k1_tilde(f.section, f.coloring);
        CHECK(r.label == classify_clasp_case(f.section, f.coloring));

        // (i) valid surjective coloring of the same class
        CHECK(r.coloring.spec == f.coloring.spec);
        CHECK(check_coloring(r.normalized, r.coloring));
        CHECK(is_surjective_coloring(r.coloring));

        // (ii), (iii) one record change from both neighbours
        CHECK(is_one_crossing_adjacent(r.diagram, f.section.diagram));
        CHECK(is_one_crossing_adjacent(r.diagram, far_neighbour(f.section)));

        // the raw and normalized forms describe the same crossings
        CHECK(r.normalized.crossing_count() == r.diagram.crossing_count());
        CHECK(r.normalized.arc_count == r.diagram.arc_count);
    }
}

TEST_CASE("a commuting b5 restores the clasp with its coloring") {
    for (SectionFixture f :
         {fixtures::clasp_section_case2a(), fixtures::clasp_section_precedence()}) {
        SynthesisResult r = synthesize_k1_tilde(f.section, f.coloring);
        CHECK(r.identity_rewrite);
        CHECK(r.descended);
        CHECK(r.diagram == crossing_change(f.section.diagram, f.section.clasp_a.first));
        // Every old arc keeps its color; the cut strand colors its tail.
        for (int a = 0; a < f.section.diagram.arc_count; ++a)
            CHECK(r.coloring.assignment[r.arc_map[a]] == f.coloring.assignment[a]);
        CHECK(r.coloring.assignment[r.split_tail] ==
              f.coloring.assignment[f.section.section_arcs[2]]);
    }
}

TEST_CASE("equal clasp colors move the rewrite to the far clasp") {
    SectionFixture f = fixtures::clasp_section_case1();
    SynthesisResult r = synthesize_k1_tilde(f.section, f.coloring);
    CHECK_FALSE(r.identity_rewrite);
    CHECK(r.descended);
    CHECK(r.diagram == crossing_change(f.section.diagram, f.section.clasp_b.first));
    for (int a = 0; a < f.section.diagram.arc_count; ++a)
        CHECK(r.coloring.assignment[r.arc_map[a]] == f.coloring.assignment[a]);
}

TEST_CASE("non-commuting cases recolor through the summand") {
    for (SectionFixture f : {fixtures::clasp_section_case2b(), fixtures::clasp_section_case2c()}) {
        SynthesisResult r = synthesize_k1_tilde(f.section, f.coloring);
        CHECK(r.identity_rewrite);
        CHECK_FALSE(r.descended);
        SynthesisResult again = synthesize_k1_tilde(f.section, f.coloring);
        CHECK(again.diagram == r.diagram);
        CHECK(again.coloring == r.coloring);
    }
}

TEST_CASE("synthesis reports its failure modes") {
    SectionFixture f = fixtures::clasp_section_case2a();
    CHECK(thrown_kind([&] { synthesize_k1_tilde(f.section, f.coloring, 1); }) ==
          ErrorKind::SynthesisExhausted);

    ClassColoring constant = f.coloring;
    for (Perm& p : constant.assignment) p = Perm::transposition(3, 1, 2);
    CHECK(thrown_kind([&] { synthesize_k1_tilde(f.section, constant); }) ==
          ErrorKind::NotSurjective);

    SectionFixture bare = bare_core_2b();
    CHECK(classify_clasp_case(bare.section, bare.coloring) == CaseLabel::case2b);
    CHECK(thrown_kind([&] { synthesize_k1_tilde(bare.section, bare.coloring); }) ==
          ErrorKind::SynthesisExhausted);
}
