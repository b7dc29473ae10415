#pragma once

#include "gordian/diagram.hpp"
#include "gordian/permutation.hpp"
#include "gordian/snf.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gordian {

enum class GroupKind : std::uint8_t { symmetric, alternating };
enum class ClassKind : std::uint8_t { transpositions, three_cycles };

// A conjugacy class of permutations used as colors.  Supported combinations
// are transpositions in S_n (n >= 2) and 3-cycles in A_n (n >= 3); both
// classes generate their group.
struct ClassSpec {
    GroupKind group = GroupKind::symmetric;
    ClassKind cls = ClassKind::transpositions;
    int n = 3;

    bool operator==(const ClassSpec&) const = default;
};

ClassSpec symmetric_transpositions(int n);
ClassSpec alternating_three_cycles(int n);
void validate_spec(const ClassSpec& spec);
std::vector<Perm> class_elements(const ClassSpec& spec); // sorted
bool in_class(const ClassSpec& spec, const Perm& p);
std::string group_name(const ClassSpec& spec);     // "S5", "A5", ...
std::string class_name(const ClassSpec& spec);     // "transpositions" / "three_cycles"
ClassSpec spec_from_names(const std::string& group, const std::string& cls);

// Arc-indexed assignment of class elements.
struct ClassColoring {
    ClassSpec spec;
    std::vector<Perm> assignment;

    bool operator==(const ClassColoring&) const = default;
};

// -1 if every crossing relation holds, else the smallest offending crossing
// id.  Throws SpecMismatch when the assignment misses arcs or leaves the
// class.  At a crossing the outgoing under arc must carry in conjugated by
// the over color (by its inverse for negative crossings); switched records
// instead require their two over arcs to agree and to commute with the
// stranded under color.
int first_violated_crossing(const PlanarDiagram& d, const ClassColoring& c);
bool check_coloring(const PlanarDiagram& d, const ClassColoring& c);

// Surjectivity of the induced homomorphism: for transpositions the colors,
// read as edges, must connect all n vertices; for 3-cycles the generated
// subgroup must be all of A_n.
bool is_surjective_transpositions(const std::vector<Perm>& colors, int n);
bool is_surjective_coloring(const ClassColoring& c);

struct SolveOptions {
    bool up_to_conjugation = true; // ignored when seeds are given
    bool surjective_only = true;
    std::map<int, Perm> seeds;     // arc id -> required color
    long long node_limit = -1;     // < 0 means unlimited
    std::size_t max_solutions = 0; // stop after this many; 0 means all
};

struct SolveResult {
    std::vector<ClassColoring> colorings; // canonically sorted
    bool complete = true;                 // false iff the node budget ran out
    long long nodes = 0;
};

SolveResult solve_class_colorings(const PlanarDiagram& d, const ClassSpec& spec,
                                  const SolveOptions& opts = {});

bool has_surjective_coloring(const PlanarDiagram& d, const ClassSpec& spec,
                             long long node_limit = -1);

// Largest n in 2..n_max admitting a surjective transposition coloring; the
// search is exhaustive at every n since colorability is not monotone.
// n_max <= 0 selects the diagram bound, overpass count + 1.
struct PnumResult {
    int p = 2;
    bool exact = true; // false when a node budget cut some search short
    std::vector<ClassColoring> witnesses;
};

PnumResult permutation_number(const PlanarDiagram& d, int n_max = 0,
                              long long node_limit = -1);

// Membership in the n-th Gordian filtration layer: some m >= n within the
// diagram bound admits a surjective transposition coloring.  n <= 1 is
// always true; throws BudgetExceeded when a truncated search prevents a
// definite answer.
bool gn_member(const PlanarDiagram& d, int n, long long node_limit = -1);

// Solution space of the mod-p crossing conditions out + in = 2*over.
struct FoxSpace {
    int p = 3;
    int dimension = 0;
    std::vector<std::vector<int>> basis; // arc-indexed vectors over F_p
};

FoxSpace fox_coloring_space(const PlanarDiagram& d, int p);
bool twice_three_colorable(const FoxSpace& s);

// Some combination C1, C2, C1+C2, C1-C2 has all three colors at crossing x
// equal; returns its (lambda, mu), trying in that fixed order.
std::pair<int, int> monochromatic_combination(const PlanarDiagram& d,
                                              const std::vector<int>& c1,
                                              const std::vector<int>& c2, int x);

// |H_1| of the double branched cover (0 would mean infinite).
Int knot_determinant(const PlanarDiagram& d);

} // namespace gordian
