#include "gordian/snf.hpp"

#include "gordian/error.hpp"

#include <algorithm>

namespace gordian {

namespace {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

std::size_t column_count(const IntMat& a) {
    std::size_t n = a.empty() ? 0 : a[0].size();
    for (const auto& row : a) GORDIAN_CHECK(row.size() == n, "ragged matrix");
    return n;
}

Int egcd(Int a, Int b, Int& x, Int& y) {
    // g = a*x + b*y, g >= 0
    Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        Int q = a / b;
        Int r = a - q * b;
        a = b;
        b = r;
        Int nx = x0 - q * x1, ny = y0 - q * y1;
        x0 = x1;
        y0 = y1;
        x1 = nx;
        y1 = ny;
    }
    if (a < 0) {
        a = -a;
        x0 = -x0;
        y0 = -y0;
    }
    x = x0;
    y = y0;
    return a;
}

} // namespace

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    std::size_t m = a.size();
    std::size_t n = column_count(a);
    std::size_t p = column_count(b);
    GORDIAN_CHECK(b.size() == n, "matrix dimension mismatch");
    IntMat r(m, std::vector<Int>(p, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

SmithForm smith_normal_form(const IntMat& a0) {
    const std::size_t m = a0.size();
    const std::size_t n = column_count(a0);
    SmithForm f;
    f.u = identity_matrix(m);
    f.v = identity_matrix(n);
    f.d = a0;
    IntMat& a = f.d;

    auto row_sub = [&](std::size_t i, std::size_t k, const Int& q) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[k][j];
        for (std::size_t j = 0; j < m; ++j) f.u[i][j] -= q * f.u[k][j];
    };
    auto col_sub = [&](std::size_t j, std::size_t k, const Int& q) {
        for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][k];
        for (std::size_t i = 0; i < n; ++i) f.v[i][j] -= q * f.v[i][k];
    };
    auto row_swap = [&](std::size_t i, std::size_t k) {
        std::swap(a[i], a[k]);
        std::swap(f.u[i], f.u[k]);
    };
    auto col_swap = [&](std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][j], a[i][k]);
        for (std::size_t i = 0; i < n; ++i) std::swap(f.v[i][j], f.v[i][k]);
    };
    const std::size_t t_limit = std::min(m, n);
    std::size_t t = 0;
    // Clears a[i][t] using rows t and i.  Divisible entries use a plain
    // subtraction; otherwise a Bezout 2x2 transform (determinant 1) replaces
    // the pivot by the gcd, which keeps intermediate entries small.
    auto clear_in_column = [&](std::size_t i) {
        const Int p = a[t][t], x = a[i][t];
        if (x == 0) return false;
        if (x % p == 0) {
            row_sub(i, t, x / p);
            return false;
        }
        Int s, w;
        Int g = egcd(p, x, s, w);
        Int pg = p / g, xg = x / g;
        for (std::size_t j = 0; j < n; ++j) {
            Int rt = a[t][j], ri = a[i][j];
            a[t][j] = s * rt + w * ri;
            a[i][j] = pg * ri - xg * rt;
        }
        for (std::size_t j = 0; j < m; ++j) {
            Int rt = f.u[t][j], ri = f.u[i][j];
            f.u[t][j] = s * rt + w * ri;
            f.u[i][j] = pg * ri - xg * rt;
        }
        return true;
    };
    auto clear_in_row = [&](std::size_t j) {
        const Int p = a[t][t], x = a[t][j];
        if (x == 0) return false;
        if (x % p == 0) {
            col_sub(j, t, x / p);
            return false;
        }
        Int s, w;
        Int g = egcd(p, x, s, w);
        Int pg = p / g, xg = x / g;
        for (std::size_t i = 0; i < m; ++i) {
            Int ct = a[i][t], cj = a[i][j];
            a[i][t] = s * ct + w * cj;
            a[i][j] = pg * cj - xg * ct;
        }
        for (std::size_t i = 0; i < n; ++i) {
            Int ct = f.v[i][t], cj = f.v[i][j];
            f.v[i][t] = s * ct + w * cj;
            f.v[i][j] = pg * cj - xg * ct;
        }
        return true;
    };

    while (t < t_limit) {
        // Smallest-magnitude pivot in the remaining block.
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        // Gcd transforms shrink |pivot| strictly, so this settles; once a full
        // pass makes no transform, row and column t are clear.
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = t + 1; i < m; ++i)
                if (clear_in_column(i)) progress = true;
            for (std::size_t j = t + 1; j < n; ++j)
                if (clear_in_row(j)) progress = true;
        }

        // Divisibility of the remaining block by the pivot, required for the
        // invariant-factor chain; mixing in an offending row restarts t.
        bool restart = false;
        for (std::size_t i = t + 1; i < m && !restart; ++i)
            for (std::size_t j = t + 1; j < n && !restart; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_sub(t, i, Int(-1));
                    restart = true;
                }
        if (!restart) ++t;
    }

    for (std::size_t i = 0; i < t_limit; ++i)
        if (a[i][i] < 0) {
            for (auto& x : a[i]) x = -x;
            for (auto& x : f.u[i]) x = -x;
        }

    f.diagonal.reserve(t_limit);
    for (std::size_t i = 0; i < t_limit; ++i) {
        f.diagonal.push_back(a[i][i]);
        if (a[i][i] != 0) ++f.rank;
    }
    for (std::size_t i = 0; i + 1 < f.diagonal.size(); ++i)
        if (f.diagonal[i] != 0)
            GORDIAN_CHECK(f.diagonal[i + 1] % f.diagonal[i] == 0, "SNF divisibility chain");
    if (m > 0 && n > 0) GORDIAN_CHECK(mat_mul(mat_mul(f.u, a0), f.v) == f.d, "SNF transform certificate");
    return f;
}

AbelianGroup cokernel(const IntMat& relations, int generators) {
    GORDIAN_CHECK(generators >= 0, "negative generator count");
    AbelianGroup g;
    if (relations.empty()) {
        g.free_rank = generators;
        return g;
    }
    GORDIAN_CHECK(column_count(relations) == static_cast<std::size_t>(generators),
                  "relation width != generator count");
    SmithForm f = smith_normal_form(relations);
    g.free_rank = generators - f.rank;
    for (const Int& d : f.diagonal)
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

std::string abelian_group_string(const AbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::string s;
    if (g.free_rank == 1) s = "Z";
    else if (g.free_rank > 1) s = "Z^" + std::to_string(g.free_rank);
    for (const Int& d : g.invariant_factors) {
        if (!s.empty()) s += " + ";
        s += "Z/" + d.str();
    }
    return s;
}

Int determinant(IntMat a) {
    const std::size_t n = a.size();
    GORDIAN_CHECK(column_count(a) == n, "determinant needs a square matrix");
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

int rational_rank_of(std::vector<std::vector<Rat>>& w) {
    if (w.empty()) return 0;
    const std::size_t m = w.size(), n = w[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pr = r;
        while (pr < m && w[pr][c] == 0) ++pr;
        if (pr == m) continue;
        std::swap(w[r], w[pr]);
        for (std::size_t i = r + 1; i < m; ++i) {
            if (w[i][c] == 0) continue;
            Rat f = w[i][c] / w[r][c];
            for (std::size_t j = c; j < n; ++j) w[i][j] -= f * w[r][j];
        }
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int rational_rank(const IntMat& a) {
    if (a.empty()) return 0;
    const std::size_t n = column_count(a);
    std::vector<std::vector<Rat>> w(a.size(), std::vector<Rat>(n));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) w[i][j] = a[i][j];
    return rational_rank_of(w);
}

bool in_rational_rowspan(const IntMat& b, const std::vector<Int>& v) {
    IntMat ext = b;
    ext.push_back(v);
    return rational_rank(b) == rational_rank(ext);
}

std::optional<Rat> solve_ratio_mod_rowspan(const IntMat& b,
                                           const std::vector<Int>& u,
                                           const std::vector<Int>& v) {
    const std::size_t k = b.size();
    const std::size_t n = u.size();
    GORDIAN_CHECK(v.size() == n, "vector length mismatch");
    for (const auto& row : b) GORDIAN_CHECK(row.size() == n, "row length mismatch");

    // Unknowns y_0..y_{k-1} (rowspan coefficients) and y_k (the ratio);
    // equations are the n coordinates of y*[b; u] = v.
    const std::size_t vars = k + 1;
    std::vector<std::vector<Rat>> mt(n, std::vector<Rat>(vars + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) mt[i][j] = b[j][i];
        mt[i][k] = u[i];
        mt[i][vars] = v[i];
    }

    std::vector<int> pivot_row_of_col(vars, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < vars && r < n; ++c) {
        std::size_t pr = r;
        while (pr < n && mt[pr][c] == 0) ++pr;
        if (pr == n) continue;
        std::swap(mt[r], mt[pr]);
        Rat piv = mt[r][c];
        for (std::size_t j = c; j <= vars; ++j) mt[r][j] /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || mt[i][c] == 0) continue;
            Rat f = mt[i][c];
            for (std::size_t j = c; j <= vars; ++j) mt[i][j] -= f * mt[r][j];
        }
        pivot_row_of_col[c] = static_cast<int>(r);
        ++r;
    }
    for (std::size_t i = r; i < n; ++i)
        if (mt[i][vars] != 0) return std::nullopt;
    // Free variables set to zero; with full Jordan elimination each pivot
    // variable then reads off its augmented entry.
    if (pivot_row_of_col[k] < 0) return Rat(0);
    return mt[pivot_row_of_col[k]][vars];
}

} // namespace gordian
