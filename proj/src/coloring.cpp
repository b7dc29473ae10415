#include "gordian/coloring.hpp"

#include "gordian/error.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>

namespace gordian {

void validate_spec(const ClassSpec& spec) {
    if (spec.n > Perm::max_n)
        fail(ErrorKind::SpecMismatch, "group degree exceeds " + std::to_string(Perm::max_n));
    if (spec.group == GroupKind::symmetric && spec.cls == ClassKind::transpositions) {
        if (spec.n < 2) fail(ErrorKind::SpecMismatch, "transpositions need degree at least 2");
    } else if (spec.group == GroupKind::alternating && spec.cls == ClassKind::three_cycles) {
        if (spec.n < 3) fail(ErrorKind::SpecMismatch, "3-cycles need degree at least 3");
    } else {
        fail(ErrorKind::SpecMismatch, "class must generate the group");
    }
}

ClassSpec symmetric_transpositions(int n) {
    ClassSpec s{GroupKind::symmetric, ClassKind::transpositions, n};
    validate_spec(s);
    return s;
}

ClassSpec alternating_three_cycles(int n) {
    ClassSpec s{GroupKind::alternating, ClassKind::three_cycles, n};
    validate_spec(s);
    return s;
}

std::vector<Perm> class_elements(const ClassSpec& spec) {
    validate_spec(spec);
    std::vector<Perm> out;
    if (spec.cls == ClassKind::transpositions) {
        for (int i = 1; i <= spec.n; ++i)
            for (int j = i + 1; j <= spec.n; ++j) out.push_back(Perm::transposition(spec.n, i, j));
    } else {
        for (int a = 1; a <= spec.n; ++a)
            for (int b = a + 1; b <= spec.n; ++b)
                for (int c = b + 1; c <= spec.n; ++c) {
                    out.push_back(Perm::three_cycle(spec.n, a, b, c));
                    out.push_back(Perm::three_cycle(spec.n, a, c, b));
                }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool in_class(const ClassSpec& spec, const Perm& p) {
    if (p.degree() != spec.n) return false;
    std::size_t want = spec.cls == ClassKind::transpositions ? 2 : 3;
    return p.support().size() == want; // a 3-point support forces a 3-cycle
}

std::string group_name(const ClassSpec& spec) {
    return (spec.group == GroupKind::symmetric ? "S" : "A") + std::to_string(spec.n);
}

std::string class_name(const ClassSpec& spec) {
    return spec.cls == ClassKind::transpositions ? "transpositions" : "three_cycles";
}

ClassSpec spec_from_names(const std::string& group, const std::string& cls) {
    if (group.size() < 2 || (group[0] != 'S' && group[0] != 'A'))
        fail(ErrorKind::ParseError, "group names look like S5 or A5");
    int n = 0;
    for (std::size_t i = 1; i < group.size(); ++i) {
        if (group[i] < '0' || group[i] > '9')
            fail(ErrorKind::ParseError, "group names look like S5 or A5");
        n = n * 10 + (group[i] - '0');
    }
    ClassSpec s;
    s.group = group[0] == 'S' ? GroupKind::symmetric : GroupKind::alternating;
    s.n = n;
    if (cls == "transpositions")
        s.cls = ClassKind::transpositions;
    else if (cls == "three_cycles")
        s.cls = ClassKind::three_cycles;
    else
        fail(ErrorKind::ParseError, "unknown color class " + cls);
    validate_spec(s);
    return s;
}

namespace {

Perm conj_out(const Perm& over, int sign, const Perm& in) {
    return sign >= 0 ? in.conjugated_by(over) : in.conjugated_by(over.inverse());
}

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
    return f;
}

} // namespace

int first_violated_crossing(const PlanarDiagram& d, const ClassColoring& c) {
    validate(d);
    validate_spec(c.spec);
    if (static_cast<int>(c.assignment.size()) != d.arc_count)
        fail(ErrorKind::SpecMismatch, "assignment must cover every arc exactly once");
    for (const Perm& p : c.assignment)
        if (!in_class(c.spec, p))
            fail(ErrorKind::SpecMismatch, "assignment leaves the chosen class");
    for (int i = 0; i < d.crossing_count(); ++i) {
        const Crossing& cr = d.crossings[i];
        bool ok;
        if (cr.switched())
            ok = c.assignment[cr.over_in] == c.assignment[cr.over_out] &&
                 c.assignment[cr.under_in].commutes_with(c.assignment[cr.over_in]);
        else
            ok = c.assignment[cr.under_out] ==
                 conj_out(c.assignment[cr.over_in], cr.sign, c.assignment[cr.under_in]);
        if (!ok) return i;
    }
    return -1;
}

bool check_coloring(const PlanarDiagram& d, const ClassColoring& c) {
    return first_violated_crossing(d, c) < 0;
}

bool is_surjective_transpositions(const std::vector<Perm>& colors, int n) {
    if (colors.empty()) return false;
    std::vector<int> root(n + 1);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    for (const Perm& p : colors) {
        std::vector<int> s = p.support();
        GORDIAN_CHECK(s.size() == 2, "colors must be transpositions");
        root[find(s[0])] = find(s[1]);
    }
    for (int v = 2; v <= n; ++v)
        if (find(v) != find(1)) return false;
    return true;
}

bool is_surjective_coloring(const ClassColoring& c) {
    validate_spec(c.spec);
    if (c.assignment.empty()) return false;
    if (c.spec.cls == ClassKind::transpositions)
        return is_surjective_transpositions(c.assignment, c.spec.n);
    std::vector<Perm> gens = c.assignment;
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return subgroup_order(c.spec.n, gens) == factorial(c.spec.n) / 2;
}

// ---------------------------------------------------------------------------
// Solver

namespace {

struct ClassTables {
    ClassSpec spec;
    std::vector<Perm> elems;
    int K = 0;
    std::vector<int> conj_pos, conj_neg; // [over*K + in] -> out
    std::vector<char> commute;           // [i*K + j]

    int index_of(const Perm& p) const {
        auto it = std::lower_bound(elems.begin(), elems.end(), p);
        if (it == elems.end() || !(*it == p)) return -1;
        return static_cast<int>(it - elems.begin());
    }
};

ClassTables build_tables(const ClassSpec& spec) {
    ClassTables t;
    t.spec = spec;
    t.elems = class_elements(spec);
    t.K = static_cast<int>(t.elems.size());
    t.conj_pos.resize(t.K * t.K);
    t.conj_neg.resize(t.K * t.K);
    t.commute.resize(t.K * t.K);
    for (int o = 0; o < t.K; ++o)
        for (int i = 0; i < t.K; ++i) {
            t.conj_pos[o * t.K + i] = t.index_of(conj_out(t.elems[o], 1, t.elems[i]));
            t.conj_neg[o * t.K + i] = t.index_of(conj_out(t.elems[o], -1, t.elems[i]));
            t.commute[o * t.K + i] = t.elems[o].commutes_with(t.elems[i]);
        }
    return t;
}

// One crossing as a constraint: faired records relate (in, over) -> out;
// switched records tie their two over arcs together and make the stranded
// under color commute with them.
struct Cons {
    bool stale = false;
    int sign = 1;
    int in = 0, out = 0, over = 0; // faired roles
    int a = 0, b = 0, u = 0;       // stale roles
};

struct State {
    std::vector<int> col;          // arc -> element index, -1 unknown
    std::vector<std::vector<char>> dom;
    std::vector<int> cnt;
};

bool assign(State& st, int arc, int k, std::vector<int>& work) {
    if (st.col[arc] == k) return true;
    if (st.col[arc] != -1) return false;
    if (!st.dom[arc][k]) return false;
    st.col[arc] = k;
    std::fill(st.dom[arc].begin(), st.dom[arc].end(), 0);
    st.dom[arc][k] = 1;
    st.cnt[arc] = 1;
    work.push_back(arc);
    return true;
}

template <typename Pred>
bool restrict_dom(State& st, int arc, Pred allowed, std::vector<int>& work) {
    if (st.col[arc] >= 0) return allowed(st.col[arc]);
    int left = 0, last = -1;
    for (int k = 0; k < static_cast<int>(st.dom[arc].size()); ++k) {
        if (!st.dom[arc][k]) continue;
        if (!allowed(k)) {
            st.dom[arc][k] = 0;
        } else {
            ++left;
            last = k;
        }
    }
    st.cnt[arc] = left;
    if (left == 0) return false;
    if (left == 1) {
        st.col[arc] = last;
        work.push_back(arc);
    }
    return true;
}

struct Engine {
    const ClassTables& t;
    std::vector<Cons> cons;
    std::vector<std::vector<int>> incident; // arc -> constraint ids
    int arcs = 0;

    Engine(const PlanarDiagram& d, const ClassTables& tables) : t(tables) {
        arcs = d.arc_count;
        incident.resize(arcs);
        for (const Crossing& c : d.crossings) {
            Cons cn;
            if (c.switched()) {
                cn.stale = true;
                cn.a = c.over_in;
                cn.b = c.over_out;
                cn.u = c.under_in;
            } else {
                cn.sign = c.sign;
                cn.in = c.under_in;
                cn.out = c.under_out;
                cn.over = c.over_in;
            }
            int id = static_cast<int>(cons.size());
            cons.push_back(cn);
            std::set<int> touched = cn.stale ? std::set<int>{cn.a, cn.b, cn.u}
                                             : std::set<int>{cn.in, cn.out, cn.over};
            for (int a : touched) incident[a].push_back(id);
        }
    }

    State fresh() const {
        State st;
        st.col.assign(arcs, -1);
        st.dom.assign(arcs, std::vector<char>(t.K, 1));
        st.cnt.assign(arcs, t.K);
        return st;
    }

    bool process(State& st, const Cons& c, std::vector<int>& work) const {
        const int K = t.K;
        if (c.stale) {
            if (st.col[c.a] >= 0 && !assign(st, c.b, st.col[c.a], work)) return false;
            if (st.col[c.b] >= 0 && !assign(st, c.a, st.col[c.b], work)) return false;
            if (st.col[c.u] >= 0) {
                int u = st.col[c.u];
                auto ok = [&](int k) { return static_cast<bool>(t.commute[u * K + k]); };
                if (!restrict_dom(st, c.a, ok, work)) return false;
                if (!restrict_dom(st, c.b, ok, work)) return false;
            }
            if (st.col[c.a] >= 0) {
                int a = st.col[c.a];
                auto ok = [&](int k) { return static_cast<bool>(t.commute[a * K + k]); };
                if (!restrict_dom(st, c.u, ok, work)) return false;
            }
            return true;
        }
        const std::vector<int>& fwd = c.sign > 0 ? t.conj_pos : t.conj_neg;
        const std::vector<int>& bwd = c.sign > 0 ? t.conj_neg : t.conj_pos;
        if (st.col[c.in] >= 0 && st.col[c.over] >= 0) {
            if (!assign(st, c.out, fwd[st.col[c.over] * K + st.col[c.in]], work)) return false;
        }
        if (st.col[c.out] >= 0 && st.col[c.over] >= 0 && st.col[c.in] < 0) {
            if (!assign(st, c.in, bwd[st.col[c.over] * K + st.col[c.out]], work)) return false;
        }
        if (st.col[c.in] >= 0 && st.col[c.out] >= 0 && st.col[c.over] < 0) {
            int in = st.col[c.in], out = st.col[c.out];
            auto ok = [&](int k) { return fwd[k * K + in] == out; };
            if (!restrict_dom(st, c.over, ok, work)) return false;
        }
        return true;
    }

    bool propagate(State& st, std::vector<int>& work) const {
        while (!work.empty()) {
            int arc = work.back();
            work.pop_back();
            for (int id : incident[arc])
                if (!process(st, cons[id], work)) return false;
        }
        return true;
    }
};

struct Search {
    const Engine& eng;
    bool surjective_only = true;
    std::size_t max_solutions = 0;
    long long node_limit = -1;
    long long nodes = 0;
    bool complete = true;
    std::vector<std::vector<Perm>> found;

    explicit Search(const Engine& e) : eng(e) {}

    bool capped() const { return max_solutions && found.size() >= max_solutions; }

    void emit(const State& st) {
        std::vector<Perm> asg(eng.arcs);
        for (int a = 0; a < eng.arcs; ++a) asg[a] = eng.t.elems[st.col[a]];
        if (surjective_only) {
            ClassColoring c{eng.t.spec, asg};
            if (!is_surjective_coloring(c)) return;
        }
        found.push_back(std::move(asg));
        if (capped()) complete = false; // branches may remain unexplored
    }

    void dfs(const State& st) {
        if (capped()) return;
        int best = -1, bc = INT_MAX;
        for (int a = 0; a < eng.arcs; ++a)
            if (st.col[a] < 0 && st.cnt[a] < bc) {
                bc = st.cnt[a];
                best = a;
            }
        if (best < 0) {
            emit(st);
            return;
        }
        for (int k = 0; k < eng.t.K; ++k) {
            if (!st.dom[best][k]) continue;
            if (capped()) return;
            if (node_limit >= 0 && nodes >= node_limit) {
                complete = false;
                return;
            }
            ++nodes;
            State child = st;
            std::vector<int> work;
            if (assign(child, best, k, work) && eng.propagate(child, work)) dfs(child);
        }
    }
};

// Marks the class elements minimal within their conjugation orbit under the
// subgroup generated by `gens`.
std::vector<char> orbit_min_mask(const ClassTables& t, const std::vector<Perm>& gens) {
    std::vector<char> allowed(t.K, 0);
    for (int i = 0; i < t.K; ++i) {
        std::set<int> orbit{i};
        std::vector<int> todo{i};
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (const Perm& g : gens) {
                int y = t.index_of(t.elems[x].conjugated_by(g));
                if (orbit.insert(y).second) todo.push_back(y);
            }
        }
        allowed[i] = *orbit.begin() == i;
    }
    return allowed;
}

std::vector<Perm> conjugation_gens(const ClassSpec& spec) {
    std::vector<Perm> gens;
    if (spec.cls == ClassKind::transpositions) {
        for (int i = 1; i < spec.n; ++i) gens.push_back(Perm::transposition(spec.n, i, i + 1));
    } else {
        for (int k = 3; k <= spec.n; ++k) gens.push_back(Perm::three_cycle(spec.n, 1, 2, k));
    }
    return gens;
}

// Orbit-minimal second colors under the centralizer of the least element;
// restricting the second anchor to these keeps one representative per
// conjugation orbit reachable.
std::vector<char> second_anchor_mask(const ClassTables& t) {
    const Perm& e0 = t.elems[0];
    int n = t.spec.n;
    std::vector<int> supp = e0.support();
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (std::find(supp.begin(), supp.end(), v) == supp.end()) rest.push_back(v);
    std::vector<Perm> gens{e0};
    if (t.spec.cls == ClassKind::transpositions) {
        for (std::size_t i = 0; i + 1 < rest.size(); ++i)
            gens.push_back(Perm::transposition(n, rest[i], rest[i + 1]));
    } else {
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = i + 1; j < rest.size(); ++j)
                for (std::size_t k = j + 1; k < rest.size(); ++k) {
                    gens.push_back(Perm::three_cycle(n, rest[i], rest[j], rest[k]));
                    gens.push_back(Perm::three_cycle(n, rest[i], rest[k], rest[j]));
                }
    }
    return orbit_min_mask(t, gens);
}

// Least conjugate of a transposition sequence, by relabeling points greedily
// position by position while carrying every partial relabeling that still
// attains the minimal prefix.
std::vector<Perm> canonical_transpositions(const std::vector<Perm>& col, const ClassTables& t) {
    const int n = t.spec.n;
    struct PMap {
        std::array<std::uint8_t, Perm::max_n + 1> to{};
        std::uint16_t used = 0;

        bool operator<(const PMap& o) const { return to < o.to; }
    };
    std::set<PMap> cands{PMap{}};
    std::vector<Perm> out;
    for (const Perm& e : col) {
        std::vector<int> s = e.support();
        int x = s[0], y = s[1];
        int best = INT_MAX;
        std::set<PMap> next;
        for (const PMap& m : cands) {
            auto offer = [&](int l1, int l2) {
                int idx = t.index_of(Perm::transposition(n, l1, l2));
                if (idx > best) return;
                PMap ext = m;
                ext.to[x] = static_cast<std::uint8_t>(l1);
                ext.to[y] = static_cast<std::uint8_t>(l2);
                ext.used = static_cast<std::uint16_t>(m.used | (1u << l1) | (1u << l2));
                if (idx < best) {
                    best = idx;
                    next.clear();
                }
                next.insert(ext);
            };
            int px = m.to[x], py = m.to[y];
            if (px && py) {
                offer(px, py);
            } else if (px || py) {
                int have = px ? px : py;
                for (int l = 1; l <= n; ++l)
                    if (!(m.used & (1u << l)) && l != have) {
                        if (px)
                            offer(px, l);
                        else
                            offer(l, py);
                    }
            } else {
                for (int l1 = 1; l1 <= n; ++l1) {
                    if (m.used & (1u << l1)) continue;
                    for (int l2 = 1; l2 <= n; ++l2)
                        if (l2 != l1 && !(m.used & (1u << l2))) offer(l1, l2);
                }
            }
        }
        GORDIAN_CHECK(best != INT_MAX, "relabeling always extends");
        out.push_back(t.elems[best]);
        cands = std::move(next);
    }
    return out;
}

// For 3-cycle colorings the relabeling group is A_n; orbits are small in
// practice, so take the minimum of the orbit directly.
std::vector<Perm> canonical_three_cycles(const std::vector<Perm>& col, const ClassTables& t) {
    int n = t.spec.n;
    std::vector<Perm> gens;
    for (int k = 3; k <= n; ++k) gens.push_back(Perm::three_cycle(n, 1, 2, k));
    std::set<std::vector<Perm>> orbit{col};
    std::vector<std::vector<Perm>> todo{col};
    while (!todo.empty()) {
        GORDIAN_CHECK(orbit.size() < 200000, "conjugation orbit too large to canonicalize");
        std::vector<Perm> cur = todo.back();
        todo.pop_back();
        for (const Perm& g : gens) {
            std::vector<Perm> img(cur.size());
            for (std::size_t a = 0; a < cur.size(); ++a) img[a] = cur[a].conjugated_by(g);
            if (orbit.insert(img).second) todo.push_back(img);
        }
    }
    return *orbit.begin();
}

} // namespace

SolveResult solve_class_colorings(const PlanarDiagram& d, const ClassSpec& spec,
                                  const SolveOptions& opts) {
    validate(d);
    validate_spec(spec);
    ClassTables t = build_tables(spec);
    Engine eng(d, t);
    State st = eng.fresh();
    std::vector<int> work;
    bool feasible = true;
    for (const auto& [arc, p] : opts.seeds) {
        if (arc < 0 || arc >= d.arc_count) fail(ErrorKind::InvalidArc, "seed arc out of range");
        int k = t.index_of(p);
        if (k < 0) fail(ErrorKind::SpecMismatch, "seed color is not in the class");
        if (!assign(st, arc, k, work)) {
            feasible = false;
            break;
        }
    }
    bool sym_break = opts.up_to_conjugation && opts.seeds.empty();
    if (feasible && sym_break) {
        std::vector<int> order = d.bottom_arcs;
        for (int a = 0; a < d.arc_count; ++a) order.push_back(a);
        int a1 = order.front();
        std::vector<char> first = orbit_min_mask(t, conjugation_gens(t.spec));
        feasible = restrict_dom(st, a1, [&](int k) { return static_cast<bool>(first[k]); }, work);
        // With a single conjugation orbit the anchor is pinned to the least
        // element, so the second arc can be pruned by its centralizer; with
        // several orbits (3-cycles under A_3 or A_4) that pruning is unsound.
        if (feasible && std::count(first.begin(), first.end(), char(1)) == 1) {
            auto it = std::find_if(order.begin(), order.end(), [&](int a) { return a != a1; });
            if (it != order.end()) {
                std::vector<char> mask = second_anchor_mask(t);
                feasible =
                    restrict_dom(st, *it, [&](int k) { return static_cast<bool>(mask[k]); }, work);
            }
        }
    }
    Search s(eng);
    s.surjective_only = opts.surjective_only;
    s.max_solutions = opts.max_solutions;
    s.node_limit = opts.node_limit;
    if (feasible && eng.propagate(st, work)) s.dfs(st);

    std::vector<ClassColoring> out;
    out.reserve(s.found.size());
    for (std::vector<Perm>& asg : s.found) {
        if (sym_break)
            asg = spec.cls == ClassKind::transpositions ? canonical_transpositions(asg, t)
                                                        : canonical_three_cycles(asg, t);
        out.push_back(ClassColoring{spec, std::move(asg)});
    }
    std::sort(out.begin(), out.end(), [](const ClassColoring& x, const ClassColoring& y) {
        return x.assignment < y.assignment;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return SolveResult{std::move(out), s.complete, s.nodes};
}

bool has_surjective_coloring(const PlanarDiagram& d, const ClassSpec& spec,
                             long long node_limit) {
    SolveOptions o;
    o.max_solutions = 1;
    o.node_limit = node_limit;
    SolveResult r = solve_class_colorings(d, spec, o);
    if (!r.colorings.empty()) return true;
    if (!r.complete) fail(ErrorKind::BudgetExceeded, "coloring search hit the node limit");
    return false;
}

PnumResult permutation_number(const PlanarDiagram& d, int n_max, long long node_limit) {
    validate(d);
    if (n_max <= 0) n_max = std::max(2, overpass_count(d) + 1);
    if (n_max < 2) fail(ErrorKind::SpecMismatch, "n_max must be at least 2");
    PnumResult result;
    std::vector<int> uncertain;
    for (int n = 2; n <= std::min(n_max, Perm::max_n); ++n) {
        SolveOptions o;
        o.max_solutions = 1;
        o.node_limit = node_limit;
        SolveResult r = solve_class_colorings(d, symmetric_transpositions(n), o);
        if (!r.colorings.empty()) {
            result.p = n;
            result.witnesses = r.colorings;
        } else if (!r.complete) {
            uncertain.push_back(n);
        }
    }
    for (int n : uncertain)
        if (n > result.p) result.exact = false;
    return result;
}

bool gn_member(const PlanarDiagram& d, int n, long long node_limit) {
    validate(d);
    if (n <= 1) return true;
    int bound = std::max(2, overpass_count(d) + 1);
    bool uncertain = false;
    for (int m = std::max(n, 2); m <= std::min(bound, Perm::max_n); ++m) {
        SolveOptions o;
        o.max_solutions = 1;
        o.node_limit = node_limit;
        SolveResult r = solve_class_colorings(d, symmetric_transpositions(m), o);
        if (!r.colorings.empty()) return true;
        if (!r.complete) uncertain = true;
    }
    if (uncertain) fail(ErrorKind::BudgetExceeded, "membership search hit the node limit");
    return false;
}

// ---------------------------------------------------------------------------
// Fox colorings

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Crossing relations as rows over F_p (or Z when p == 0).
std::vector<std::vector<int>> fox_rows(const PlanarDiagram& d) {
    std::vector<std::vector<int>> rows;
    for (const Crossing& c : d.crossings) {
        if (c.switched()) {
            std::vector<int> r1(d.arc_count, 0), r2(d.arc_count, 0);
            r1[c.over_in] += 1;
            r1[c.over_out] -= 1;
            r2[c.under_in] += 1;
            r2[c.over_in] -= 1;
            rows.push_back(r1);
            rows.push_back(r2);
        } else {
            std::vector<int> r(d.arc_count, 0);
            r[c.under_out] += 1;
            r[c.under_in] += 1;
            r[c.over_in] -= 2;
            rows.push_back(r);
        }
    }
    return rows;
}

} // namespace

FoxSpace fox_coloring_space(const PlanarDiagram& d, int p) {
    validate(d);
    if (p < 3 || !is_prime(p)) fail(ErrorKind::SpecMismatch, "p must be an odd prime");
    const int A = d.arc_count;
    std::vector<std::vector<int>> rows = fox_rows(d);
    for (auto& r : rows)
        for (int& v : r) v = ((v % p) + p) % p;

    // Reduced echelon form over F_p.
    std::vector<int> pivot_col;
    std::size_t rank = 0;
    for (int col = 0; col < A && rank < rows.size(); ++col) {
        std::size_t pr = rank;
        while (pr < rows.size() && rows[pr][col] == 0) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[rank], rows[pr]);
        int inv = 1;
        for (int x = 1; x < p; ++x)
            if (rows[rank][col] * x % p == 1) inv = x;
        for (int& v : rows[rank]) v = v * inv % p;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            int f = rows[r][col];
            for (int j = 0; j < A; ++j) rows[r][j] = ((rows[r][j] - f * rows[rank][j]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }

    FoxSpace out;
    out.p = p;
    out.dimension = A - static_cast<int>(rank);
    std::vector<bool> is_pivot(A, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int f = 0; f < A; ++f) {
        if (is_pivot[f]) continue;
        std::vector<int> v(A, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = (p - rows[r][f]) % p;
        out.basis.push_back(std::move(v));
    }
    return out;
}

bool twice_three_colorable(const FoxSpace& s) { return s.p == 3 && s.dimension >= 3; }

std::pair<int, int> monochromatic_combination(const PlanarDiagram& d,
                                              const std::vector<int>& c1,
                                              const std::vector<int>& c2, int x) {
    validate(d);
    if (x < 0 || x >= d.crossing_count()) fail(ErrorKind::InvalidCrossing, "no such crossing");
    GORDIAN_CHECK(static_cast<int>(c1.size()) == d.arc_count &&
                      static_cast<int>(c2.size()) == d.arc_count,
                  "coloring vectors must cover every arc");
    const Crossing& cr = d.crossings[x];
    std::array<int, 3> arcs = cr.switched()
                                  ? std::array<int, 3>{cr.over_in, cr.over_out, cr.under_in}
                                  : std::array<int, 3>{cr.under_in, cr.under_out, cr.over_in};
    static constexpr std::pair<int, int> combos[4] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (auto [lam, mu] : combos) {
        auto at = [&](int a) { return (((lam * c1[a] + mu * c2[a]) % 3) + 3) % 3; };
        if (at(arcs[0]) == at(arcs[1]) && at(arcs[1]) == at(arcs[2])) return {lam, mu};
    }
    GORDIAN_CHECK(false, "one of the four combinations must be monochromatic");
    return {0, 0};
}

Int knot_determinant(const PlanarDiagram& d) {
    validate(d);
    std::vector<std::vector<int>> rows = fox_rows(d);
    IntMat rel;
    for (const auto& r : rows) {
        std::vector<Int> row;
        for (int j = 1; j < d.arc_count; ++j) row.push_back(r[j]);
        rel.push_back(std::move(row));
    }
    AbelianGroup g = cokernel(rel, d.arc_count - 1);
    if (g.free_rank > 0) return 0;
    Int det = 1;
    for (const Int& f : g.invariant_factors) det *= f;
    return det;
}

} // namespace gordian
