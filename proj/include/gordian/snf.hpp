#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace gordian {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using IntMat = std::vector<std::vector<Int>>; // row-major

// Smith normal form u*a*v = d with u, v unimodular; the product identity is
// re-verified by exact multiplication before returning.
struct SmithForm {
    IntMat u, d, v;
    std::vector<Int> diagonal; // d_1 | d_2 | ..., nonnegative; zeros trail
    int rank = 0;              // nonzero diagonal entries
};

SmithForm smith_normal_form(const IntMat& a);

// Cokernel of the map whose matrix rows are relations among `generators`
// free generators: Z^generators / rowspan.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<Int> invariant_factors; // each > 1, d_i | d_{i+1}

    bool operator==(const AbelianGroup& o) const {
        return free_rank == o.free_rank && invariant_factors == o.invariant_factors;
    }
    bool is_trivial() const { return free_rank == 0 && invariant_factors.empty(); }
};

AbelianGroup cokernel(const IntMat& relations, int generators);

std::string abelian_group_string(const AbelianGroup& g); // "0", "Z", "Z/3 + Z/9", ...

IntMat mat_mul(const IntMat& a, const IntMat& b);
Int determinant(IntMat a); // square matrices, Bareiss elimination

int rational_rank(const IntMat& a);
bool in_rational_rowspan(const IntMat& b, const std::vector<Int>& v);

// Smallest-index-free particular solution r of v - r*u in rowspan_Q(b).
// Returns nullopt if no rational solution exists.  r is only well defined
// when u is not itself in rowspan_Q(b); callers must check that first.
std::optional<Rat> solve_ratio_mod_rowspan(const IntMat& b,
                                           const std::vector<Int>& u,
                                           const std::vector<Int>& v);

} // namespace gordian
