#include "gordian/permutation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gordian {

Perm::Perm(int n) : n_(n) {
    if (n < 0 || n > max_n) throw std::invalid_argument("Perm degree out of range");
    img_.fill(0);
    for (int i = 1; i <= n; ++i) img_[i - 1] = static_cast<std::uint8_t>(i);
}

Perm Perm::transposition(int n, int i, int j) {
    Perm p(n);
    p.set(i, j);
    p.set(j, i);
    return p;
}

Perm Perm::three_cycle(int n, int a, int b, int c) {
    Perm p(n);
    p.set(a, b);
    p.set(b, c);
    p.set(c, a);
    return p;
}

Perm Perm::operator*(const Perm& other) const {
    Perm r(n_);
    for (int x = 1; x <= n_; ++x) r.set(x, apply(other.apply(x)));
    return r;
}

Perm Perm::inverse() const {
    Perm r(n_);
    for (int x = 1; x <= n_; ++x) r.set(apply(x), x);
    return r;
}

Perm Perm::conjugated_by(const Perm& g) const {
    Perm r(n_);
    for (int x = 1; x <= n_; ++x) r.set(g.apply(x), g.apply(apply(x)));
    return r;
}

bool Perm::is_identity() const {
    for (int x = 1; x <= n_; ++x)
        if (apply(x) != x) return false;
    return true;
}

bool Perm::commutes_with(const Perm& other) const {
    for (int x = 1; x <= n_; ++x)
        if (apply(other.apply(x)) != other.apply(apply(x))) return false;
    return true;
}

bool Perm::operator==(const Perm& other) const {
    if (n_ != other.n_) return false;
    for (int x = 1; x <= n_; ++x)
        if (apply(x) != other.apply(x)) return false;
    return true;
}

bool Perm::operator<(const Perm& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    for (int x = 1; x <= n_; ++x) {
        if (apply(x) != other.apply(x)) return apply(x) < other.apply(x);
    }
    return false;
}

std::vector<int> Perm::support() const {
    std::vector<int> s;
    for (int x = 1; x <= n_; ++x)
        if (apply(x) != x) s.push_back(x);
    return s;
}

int Perm::parity() const {
    std::array<bool, max_n> seen{};
    int transpositions = 0;
    for (int x = 1; x <= n_; ++x) {
        if (seen[x - 1]) continue;
        int len = 0;
        int y = x;
        do {
            seen[y - 1] = true;
            y = apply(y);
            ++len;
        } while (y != x);
        transpositions += len - 1;
    }
    return transpositions % 2;
}

std::string Perm::cycle_string() const {
    std::array<bool, max_n> seen{};
    std::string out;
    for (int x = 1; x <= n_; ++x) {
        if (seen[x - 1] || apply(x) == x) continue;
        out += '(';
        int y = x;
        bool first = true;
        do {
            if (!first) out += ' ';
            out += std::to_string(y);
            seen[y - 1] = true;
            first = false;
            y = apply(y);
        } while (y != x);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

unsigned long long subgroup_order(int n, const std::vector<Perm>& gens) {
    // Stabilizer chain by plain orbit-stabilizer with Schreier generators,
    // deduplicating at each level.  n <= 12 keeps everything tiny.
    std::vector<Perm> level_gens = gens;
    unsigned long long order = 1;
    for (int base = 1; base <= n; ++base) {
        if (level_gens.empty()) break;
        // Orbit of `base` with transversal.
        std::vector<int> orbit = {base};
        std::vector<Perm> rep(n + 1, Perm(n));
        std::vector<bool> in_orbit(n + 1, false);
        in_orbit[base] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            int pt = orbit[k];
            for (const Perm& g : level_gens) {
                int q = g.apply(pt);
                if (!in_orbit[q]) {
                    in_orbit[q] = true;
                    rep[q] = g * rep[pt];
                    orbit.push_back(q);
                }
            }
        }
        order *= orbit.size();
        // Schreier generators for the stabilizer of `base`.
        std::set<Perm> stab;
        for (int pt : orbit) {
            for (const Perm& g : level_gens) {
                Perm s = rep[g.apply(pt)].inverse() * g * rep[pt];
                if (!s.is_identity()) stab.insert(s);
            }
        }
        level_gens.assign(stab.begin(), stab.end());
    }
    return order;
}

} // namespace gordian
