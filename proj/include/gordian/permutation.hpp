#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace gordian {

// Permutations of {1..n}, n <= 12.  Stored as images in one-line notation,
// img[i-1] = image of i.  Composition acts on the left: (a*b)(x) = a(b(x)).
class Perm {
public:
    static constexpr int max_n = 12;

    Perm() : n_(0) { img_.fill(0); }
    explicit Perm(int n);

    static Perm identity(int n) { return Perm(n); }
    static Perm transposition(int n, int i, int j);
    static Perm three_cycle(int n, int a, int b, int c); // a -> b -> c -> a

    int degree() const { return n_; }
    int apply(int x) const { return img_[x - 1]; }
    void set(int x, int y) { img_[x - 1] = static_cast<std::uint8_t>(y); }

    Perm operator*(const Perm& other) const;
    Perm inverse() const;
    Perm conjugated_by(const Perm& g) const; // g * this * g^{-1}

    bool is_identity() const;
    bool commutes_with(const Perm& other) const;
    bool operator==(const Perm& other) const;
    bool operator!=(const Perm& other) const { return !(*this == other); }
    bool operator<(const Perm& other) const; // lex on images

    // Support = points moved.
    std::vector<int> support() const;
    int parity() const; // 0 even, 1 odd

    std::string cycle_string() const;

private:
    int n_;
    std::array<std::uint8_t, max_n> img_;
};

// Order of the subgroup generated by `gens` (Schreier-Sims with explicit
// coset enumeration per stabilizer level; fine for n <= 12 and few gens).
unsigned long long subgroup_order(int n, const std::vector<Perm>& gens);

} // namespace gordian
