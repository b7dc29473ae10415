#include "gordian/diagram.hpp"

#include "gordian/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace gordian {

void validate_braid(const BraidWord& b) {
    if (b.strands < 1) fail(ErrorKind::MalformedDiagram, "braid needs at least one strand");
    for (int l : b.letters)
        if (l == 0 || std::abs(l) > b.strands - 1)
            fail(ErrorKind::MalformedDiagram, "braid letter out of range");
}

namespace {

// pos[p] = strand at position p after the whole word (1-based; strands are
// named by their bottom positions).
std::vector<int> final_positions(const BraidWord& b) {
    std::vector<int> pos(b.strands + 1);
    std::iota(pos.begin(), pos.end(), 0);
    for (int l : b.letters) {
        int i = std::abs(l);
        std::swap(pos[i], pos[i + 1]);
    }
    return pos;
}

struct Passage {
    int crossing;
    bool over;
};

// Walks a full passage sequence of the knot and cuts arcs at undercrossings;
// fills over/under arc fields and returns arc_before[i] = arc in hand just
// before passage i (last entry: after the final passage, always 0).
std::vector<int> assign_arcs_from_walk(const std::vector<Passage>& walk,
                                       std::vector<Crossing>& cr) {
    int unders_total = 0;
    for (const Passage& p : walk)
        if (!p.over) ++unders_total;
    GORDIAN_CHECK(unders_total == static_cast<int>(cr.size()), "one undercrossing per crossing");
    std::vector<int> arc_before(walk.size() + 1);
    int cur = 0, next = 1, seen = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
        arc_before[i] = cur;
        const Passage& p = walk[i];
        if (p.over) {
            cr[p.crossing].over_in = cur;
            cr[p.crossing].over_out = cur;
        } else {
            cr[p.crossing].under_in = cur;
            cur = (++seen == unders_total) ? 0 : next++;
            cr[p.crossing].under_out = cur;
        }
    }
    arc_before[walk.size()] = cur;
    GORDIAN_CHECK(cur == 0, "arc walk closes up");
    return arc_before;
}

// Common construction for plain braid closures and for the cap/cup closure
// used by the Whitehead doubles, where the tops of strands 1,2 are joined by
// a cap, their would-be closure arcs by a cup, and cap and cup cross twice.
PlanarDiagram closure_walk(const BraidWord& b, bool with_clasp, int variant) {
    const int n = b.strands;
    const int K = static_cast<int>(b.letters.size());

    std::vector<int> pos(n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::vector<Passage>> path(n + 1); // per strand, bottom to top
    std::vector<int> over_strand(K), under_strand(K), letter_sign(K);
    for (int c = 0; c < K; ++c) {
        int l = b.letters[c];
        int i = std::abs(l);
        int left = pos[i], right = pos[i + 1];
        over_strand[c] = l > 0 ? left : right;
        under_strand[c] = l > 0 ? right : left;
        letter_sign[c] = l > 0 ? 1 : -1;
        path[over_strand[c]].push_back({c, true});
        path[under_strand[c]].push_back({c, false});
        std::swap(pos[i], pos[i + 1]);
    }
    std::vector<int> top_pos_of(n + 1);
    for (int p = 1; p <= n; ++p) top_pos_of[pos[p]] = p;

    // Knot traversal across strands and closure connections, starting at the
    // bottom of strand 1; records each strand's direction of travel.
    struct Visit {
        int strand;
        int dir;
        int conn; // 0 plain closure, 1 cap, 2 cup
    };
    std::vector<Visit> visits;
    std::vector<int> dir(n + 1, 0);
    bool at_top = false;
    int cur = 1;
    bool cap_rightward = true, cup_rightward = true; // entered at position 1
    while (true) {
        int s = at_top ? pos[cur] : cur;
        int d = at_top ? -1 : +1;
        if (dir[s] != 0) fail(ErrorKind::MultiComponentClosure, "closure is not a knot");
        dir[s] = d;
        if (d > 0) {
            at_top = true;
            cur = top_pos_of[s];
        } else {
            at_top = false;
            cur = s;
        }
        int conn;
        if (with_clasp && cur <= 2) {
            conn = at_top ? 1 : 2;
            (at_top ? cap_rightward : cup_rightward) = cur == 1;
            cur = 3 - cur;
        } else {
            conn = 0;
            at_top = !at_top;
        }
        visits.push_back({s, d, conn});
        if (!at_top && cur == 1) break;
    }
    if (static_cast<int>(visits.size()) != n)
        fail(ErrorKind::MultiComponentClosure, "closure is not a knot");

    const int X = K, Y = K + 1; // clasp crossings, X = the one the cap meets first
    // The variant bits fix the gadget in the plane, so the braid permutation
    // (which decides from which side cap and cup are entered) cannot change
    // the knot: bit 2 picks which crossing carries the cap over, bit 1 swaps
    // the order in which the cup runs through the pair.
    const bool cap_over_left = (variant & 2) == 0;
    const bool cup_planar = (variant & 1) == 0;
    const bool cap_over_x = cap_over_left == cap_rightward;
    const bool cup_xy_order = (cap_rightward == cup_rightward) == cup_planar;
    std::vector<Passage> walk;
    std::vector<int> bottom_mark(n + 1, 0);
    for (const Visit& v : visits) {
        if (v.dir > 0) bottom_mark[v.strand] = static_cast<int>(walk.size());
        std::vector<Passage> seq = path[v.strand];
        if (v.dir < 0) std::reverse(seq.begin(), seq.end());
        walk.insert(walk.end(), seq.begin(), seq.end());
        if (v.dir < 0) bottom_mark[v.strand] = static_cast<int>(walk.size());
        if (v.conn == 1) {
            walk.push_back({X, cap_over_x});
            walk.push_back({Y, !cap_over_x});
        } else if (v.conn == 2) {
            if (cup_xy_order) {
                walk.push_back({X, !cap_over_x});
                walk.push_back({Y, cap_over_x});
            } else {
                walk.push_back({Y, cap_over_x});
                walk.push_back({X, !cap_over_x});
            }
        }
    }

    PlanarDiagram d;
    const int total = K + (with_clasp ? 2 : 0);
    if (total == 0) {
        d.arc_count = 1;
        d.bottom_arcs = {0};
        return d;
    }
    d.crossings.resize(total);
    std::vector<int> arc_before = assign_arcs_from_walk(walk, d.crossings);
    d.arc_count = total;
    for (int c = 0; c < K; ++c)
        d.crossings[c].sign = letter_sign[c] * dir[over_strand[c]] * dir[under_strand[c]];
    if (with_clasp) {
        int s = cap_over_x ? 1 : -1;
        d.crossings[X].sign = s;
        d.crossings[Y].sign = s;
        d.clasp_marks.push_back({X, Y});
    }
    d.bottom_arcs.resize(n);
    for (int j = 1; j <= n; ++j) d.bottom_arcs[j - 1] = arc_before[bottom_mark[j]];
    validate(d);
    return d;
}

constexpr int whitehead_clasp_variant = 0; // fixed by the seeded coloring check

} // namespace

bool closes_to_knot(const BraidWord& b) {
    validate_braid(b);
    std::vector<int> pos = final_positions(b);
    std::vector<int> top_pos_of(b.strands + 1);
    for (int p = 1; p <= b.strands; ++p) top_pos_of[pos[p]] = p;
    int seen = 0, p = 1;
    do {
        p = top_pos_of[p];
        ++seen;
    } while (p != 1);
    return seen == b.strands;
}

PlanarDiagram braid_closure(const BraidWord& b) {
    validate_braid(b);
    if (!closes_to_knot(b))
        fail(ErrorKind::MultiComponentClosure, "braid closure has more than one component");
    return closure_walk(b, false, 0);
}

BraidWord trefoil_sum_braid(int k) {
    if (k < 1) fail(ErrorKind::MalformedDiagram, "need at least one summand");
    BraidWord b;
    b.strands = k + 1;
    for (int i = 1; i <= k; ++i)
        for (int r = 0; r < 3; ++r) b.letters.push_back(i);
    return b;
}

namespace {

BraidWord whitehead_braid(int m) {
    BraidWord b;
    b.strands = 2 * m + 2;
    for (int k = 1; k <= m; ++k) {
        for (int rep = 0; rep < 5; ++rep)
            for (int g : {2 * k, 2 * k - 1, 2 * k + 1, 2 * k}) b.letters.push_back(g);
        b.letters.push_back(2 * k + 1);
    }
    b.letters.push_back(1);
    return b;
}

} // namespace

PlanarDiagram whitehead_double_variant(int m, int variant) {
    if (m < 1) fail(ErrorKind::MalformedDiagram, "Whitehead parameter must be positive");
    GORDIAN_CHECK(variant >= 0 && variant < 4, "clasp variant out of range");
    return closure_walk(whitehead_braid(m), true, variant);
}

PlanarDiagram whitehead_double_diagram(int m) {
    return whitehead_double_variant(m, whitehead_clasp_variant);
}

PlanarDiagram pretzel_knot(int p, int q, int r) {
    const int t[3] = {p, q, r};
    for (int k = 0; k < 3; ++k)
        if (t[k] < 1 || t[k] % 2 == 0)
            fail(ErrorKind::MalformedDiagram, "pretzel twist counts must be odd and positive");
    int offset[3] = {0, t[0], t[0] + t[1]};
    const int total = t[0] + t[1] + t[2];
    // The knot runs down band 0, up band 1, down band 2, then up 0, down 1,
    // up 2.  Going down a band the strand is over at even crossings (from the
    // top); going up it is over at odd ones.
    std::vector<Passage> walk;
    auto down = [&](int band) {
        for (int j = 0; j < t[band]; ++j) walk.push_back({offset[band] + j, j % 2 == 0});
    };
    auto up = [&](int band) {
        for (int j = t[band] - 1; j >= 0; --j) walk.push_back({offset[band] + j, j % 2 == 1});
    };
    down(0);
    up(1);
    down(2);
    up(0);
    down(1);
    up(2);
    PlanarDiagram d;
    d.crossings.resize(total);
    assign_arcs_from_walk(walk, d.crossings);
    d.arc_count = total;
    for (Crossing& c : d.crossings) c.sign = -1; // one strand up, one down per band
    validate(d);
    return d;
}

PlanarDiagram connected_sum(const PlanarDiagram& d1, const PlanarDiagram& d2,
                            int a1, int a2) {
    validate(d1);
    validate(d2);
    if (a1 < 0 || a1 >= d1.arc_count) fail(ErrorKind::InvalidArc, "arc not in first diagram");
    if (a2 < 0 || a2 >= d2.arc_count) fail(ErrorKind::InvalidArc, "arc not in second diagram");
    for (const Crossing& c : d1.crossings)
        if (c.switched()) fail(ErrorKind::MalformedDiagram, "cannot splice at a switched crossing");
    for (const Crossing& c : d2.crossings)
        if (c.switched()) fail(ErrorKind::MalformedDiagram, "cannot splice at a switched crossing");
    if (d1.crossings.empty()) return d2;
    if (d2.crossings.empty()) return d1;

    // The spliced main arc keeps id a1: it runs from a1's start through a1's
    // overpasses into d2, carries a2's overpasses and ends where a2 ended.
    // The return connector (a2's start role to a1's end role, no overpasses)
    // gets the id freed by a2.
    const int A1 = d1.arc_count;
    const int beta = A1 + a2;
    PlanarDiagram out;
    out.arc_count = A1 + d2.arc_count;
    out.crossings = d1.crossings;
    for (Crossing& c : out.crossings)
        if (c.under_in == a1) c.under_in = beta;
    for (Crossing c : d2.crossings) {
        auto shift = [&](int x) { return x == a2 ? a1 : A1 + x; };
        c.over_in = shift(c.over_in);
        c.over_out = shift(c.over_out);
        c.under_in = shift(c.under_in);
        c.under_out = c.under_out == a2 ? beta : A1 + c.under_out;
        out.crossings.push_back(c);
    }
    for (auto [i, j] : d1.clasp_marks) out.clasp_marks.emplace_back(i, j);
    for (auto [i, j] : d2.clasp_marks)
        out.clasp_marks.emplace_back(i + d1.crossing_count(), j + d1.crossing_count());
    validate(out);
    return out;
}

PlanarDiagram mirror(PlanarDiagram d) {
    for (Crossing& c : d.crossings) c.sign = -c.sign;
    return d;
}

PlanarDiagram crossing_change(PlanarDiagram d, int c) {
    if (c < 0 || c >= d.crossing_count()) fail(ErrorKind::InvalidCrossing, "no such crossing");
    Crossing& x = d.crossings[c];
    x = Crossing{-x.sign, x.under_in, x.under_out, x.over_in, x.over_out};
    return d;
}

bool is_one_crossing_adjacent(const PlanarDiagram& d1, const PlanarDiagram& d2) {
    if (d1.arc_count != d2.arc_count || d1.crossing_count() != d2.crossing_count())
        return false;
    int diff = -1;
    for (int i = 0; i < d1.crossing_count(); ++i) {
        if (d1.crossings[i] == d2.crossings[i]) continue;
        if (diff >= 0) return false;
        diff = i;
    }
    if (diff < 0) return false;
    const Crossing& a = d1.crossings[diff];
    const Crossing& b = d2.crossings[diff];
    return b.sign == -a.sign && b.over_in == a.under_in && b.over_out == a.under_out &&
           b.under_in == a.over_in && b.under_out == a.over_out;
}

NormalizedDiagram normalize(const PlanarDiagram& d) {
    validate(d);
    NormalizedDiagram out;
    out.arc_map.resize(d.arc_count);
    std::iota(out.arc_map.begin(), out.arc_map.end(), 0);

    int c = -1;
    for (int i = 0; i < d.crossing_count(); ++i)
        if (d.crossings[i].switched()) {
            if (c >= 0)
                fail(ErrorKind::MalformedDiagram, "can only normalize one switched crossing");
            c = i;
        }
    if (c < 0) {
        out.diagram = d;
        return out;
    }

    const Crossing r = d.crossings[c];
    const int heal_a = r.over_in, heal_b = r.over_out; // pieces of the healed strand
    const int cut = r.under_in;                        // the strand losing its top spot
    if (heal_a == heal_b || cut == heal_a || cut == heal_b)
        fail(ErrorKind::MalformedDiagram, "cannot normalize a switched kink");

    const int A = d.arc_count;
    const int keep = std::min(heal_a, heal_b), drop = std::max(heal_a, heal_b);
    // Old labels keep their order, drop folds into keep, the tail comes last.
    std::vector<int> dense(A + 1, -1);
    int next_id = 0;
    for (int a = 0; a <= A; ++a)
        if (a != drop) dense[a] = next_id++;
    auto relabel = [&](int a) { return dense[a == drop ? keep : a]; };
    for (int a = 0; a < A; ++a) out.arc_map[a] = relabel(a);
    out.split_tail = dense[A];

    PlanarDiagram nd;
    nd.arc_count = A;
    nd.crossings = d.crossings;
    nd.clasp_marks = d.clasp_marks;
    nd.bottom_arcs = d.bottom_arcs;
    for (int& a : nd.bottom_arcs) a = relabel(a);
    for (int i = 0; i < nd.crossing_count(); ++i) {
        if (i == c) continue;
        Crossing& x = nd.crossings[i];
        // The cut arc's old endpoint now ends the tail; its overpasses and
        // its start stay with the head, which inherits the label.
        x.under_in = x.under_in == cut ? out.split_tail : relabel(x.under_in);
        x.under_out = relabel(x.under_out);
        x.over_in = relabel(x.over_in);
        x.over_out = relabel(x.over_out);
    }
    const int top = relabel(keep);
    nd.crossings[c] = Crossing{r.sign, top, top, relabel(cut), out.split_tail};
    validate(nd);
    out.diagram = std::move(nd);
    return out;
}

void validate(const PlanarDiagram& d) {
    const int C = d.crossing_count();
    const int A = d.arc_count;
    if (C == 0) {
        if (A != 1) fail(ErrorKind::MalformedDiagram, "trivial diagram must have exactly one arc");
        if (!d.clasp_marks.empty())
            fail(ErrorKind::MalformedDiagram, "trivial diagram cannot carry clasp marks");
        return;
    }
    if (A != C) fail(ErrorKind::MalformedDiagram, "arc count must equal crossing count");

    PlanarDiagram s = d;
    for (Crossing& c : s.crossings)
        if (c.switched()) {
            c = Crossing{-c.sign, c.under_in, c.under_out, c.over_in, c.over_out};
            if (c.switched())
                fail(ErrorKind::MalformedDiagram, "crossing has no consistent over arc");
        }

    std::vector<int> ends(A, 0), starts(A, 0);
    for (const Crossing& c : s.crossings) {
        for (int arc : {c.over_in, c.under_in, c.under_out})
            if (arc < 0 || arc >= A) fail(ErrorKind::MalformedDiagram, "arc id out of range");
        ++ends[c.under_in];
        ++starts[c.under_out];
    }
    for (int a = 0; a < A; ++a)
        if (ends[a] != 1 || starts[a] != 1)
            fail(ErrorKind::MalformedDiagram,
                 "arc " + std::to_string(a) + " must begin and end at exactly one undercrossing");

    std::vector<int> next(A);
    for (const Crossing& c : s.crossings) next[c.under_in] = c.under_out;
    int seen = 0, a = 0;
    do {
        a = next[a];
        ++seen;
    } while (a != 0 && seen <= A);
    if (seen != A) fail(ErrorKind::MalformedDiagram, "diagram is not a single closed component");

    for (auto [i, j] : d.clasp_marks) {
        if (i < 0 || i >= C || j < 0 || j >= C || i == j)
            fail(ErrorKind::MalformedDiagram, "clasp mark must reference two distinct crossings");
        auto incident = [&](int c) {
            return std::set<int>{s.crossings[c].over_in, s.crossings[c].under_in,
                                 s.crossings[c].under_out};
        };
        std::set<int> ai = incident(i), bi = incident(j), shared;
        std::set_intersection(ai.begin(), ai.end(), bi.begin(), bi.end(),
                              std::inserter(shared, shared.begin()));
        if (shared.size() < 2)
            fail(ErrorKind::MalformedDiagram, "clasp crossings must share two arcs");
    }
    for (int arc : d.bottom_arcs)
        if (arc < 0 || arc >= A) fail(ErrorKind::MalformedDiagram, "seed arc out of range");
}

int overpass_count(const PlanarDiagram& d) {
    validate(d);
    // A maximal overpass is a run of arcs passing over crossings; at a
    // switched record the over strand continues through the stale cut, so
    // its two over arcs belong to one overpass.
    std::vector<int> root(d.arc_count);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    std::vector<char> over(d.arc_count, 0);
    for (const Crossing& c : d.crossings) {
        over[c.over_in] = 1;
        if (c.switched()) {
            over[c.over_out] = 1;
            root[find(c.over_in)] = find(c.over_out);
        }
    }
    std::set<int> passes;
    for (int a = 0; a < d.arc_count; ++a)
        if (over[a]) passes.insert(find(a));
    return static_cast<int>(passes.size());
}

int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (const Crossing& c : d.crossings) w += c.sign;
    return w;
}

GroupPresentation wirtinger(const PlanarDiagram& d) {
    validate(d);
    GroupPresentation g;
    g.generator_count = d.arc_count;
    g.meridian_flags.assign(d.arc_count, true);
    for (int i = 0; i < d.arc_count; ++i) g.labels.push_back("x" + std::to_string(i));
    for (const Crossing& c : d.crossings) {
        if (c.switched())
            fail(ErrorKind::MalformedDiagram, "switched crossings have no Wirtinger relator");
        int o = c.over_in + 1;
        int e = c.sign;
        g.relators.push_back({c.under_out + 1, e * o, -(c.under_in + 1), -e * o});
    }
    return g;
}

std::vector<int> longitude_word(const PlanarDiagram& d, int base_arc) {
    validate(d);
    if (base_arc < 0 || base_arc >= d.arc_count) fail(ErrorKind::InvalidArc, "no such arc");
    std::vector<int> word;
    if (d.crossings.empty()) return word;
    std::vector<const Crossing*> at_end(d.arc_count, nullptr);
    for (const Crossing& c : d.crossings) {
        if (c.switched())
            fail(ErrorKind::MalformedDiagram, "switched crossings have no longitude letter");
        at_end[c.under_in] = &c;
    }
    int a = base_arc;
    do {
        const Crossing* c = at_end[a];
        word.push_back(c->sign * (c->over_in + 1));
        a = c->under_out;
    } while (a != base_arc);
    // Loops compose right to left, so the underpass leaving the base arc
    // supplies the rightmost letter.
    std::reverse(word.begin(), word.end());
    int w = writhe(d);
    for (int i = 0; i < std::abs(w); ++i) word.push_back(w > 0 ? -(base_arc + 1) : base_arc + 1);
    return word;
}

} // namespace gordian
