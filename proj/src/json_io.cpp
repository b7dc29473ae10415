#include "gordian/json_io.hpp"

#include "gordian/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gordian {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON");
    return j;
}

int int_at(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(ErrorKind::ParseError, std::string(what) + " must be an integer");
    return j.get<int>();
}

std::vector<int> int_array(const json& j, const char* what) {
    if (!j.is_array()) fail(ErrorKind::ParseError, std::string(what) + " must be an array");
    std::vector<int> out;
    for (const json& v : j) out.push_back(int_at(v, what));
    return out;
}

// Class elements are single cycles; serialized from the least moved point.
json cycle_of(const Perm& p) {
    json cyc = json::array();
    int a = 0;
    for (int i = 1; i <= p.degree(); ++i)
        if (p.apply(i) != i) {
            a = i;
            break;
        }
    if (a == 0) return cyc;
    int x = a;
    do {
        cyc.push_back(x);
        x = p.apply(x);
    } while (x != a);
    return cyc;
}

Perm perm_from_cycle(const std::vector<int>& cyc, int n) {
    for (int v : cyc)
        if (v < 1 || v > n) fail(ErrorKind::ParseError, "cycle point out of range");
    if (cyc.size() == 2) return Perm::transposition(n, cyc[0], cyc[1]);
    if (cyc.size() == 3) return Perm::three_cycle(n, cyc[0], cyc[1], cyc[2]);
    fail(ErrorKind::ParseError, "color cycles must have length 2 or 3");
}

} // namespace

std::string diagram_to_json(const PlanarDiagram& d) {
    json j;
    j["crossings"] = json::array();
    j["signs"] = json::array();
    for (const Crossing& c : d.crossings) {
        if (c.sign > 0)
            j["crossings"].push_back({c.under_in, c.over_out, c.under_out, c.over_in});
        else
            j["crossings"].push_back({c.under_in, c.over_in, c.under_out, c.over_out});
        j["signs"].push_back(c.sign);
    }
    if (!d.clasp_marks.empty()) {
        j["clasps"] = json::array();
        for (auto [a, b] : d.clasp_marks) j["clasps"].push_back({a, b});
    }
    if (!d.bottom_arcs.empty()) j["bottom_arcs"] = d.bottom_arcs;
    return j.dump();
}

PlanarDiagram diagram_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("crossings") || !j.contains("signs"))
        fail(ErrorKind::ParseError, "diagram needs \"crossings\" and \"signs\"");
    if (!j["crossings"].is_array() || !j["signs"].is_array() ||
        j["crossings"].size() != j["signs"].size())
        fail(ErrorKind::ParseError, "signs must match crossings one to one");
    PlanarDiagram d;
    for (std::size_t i = 0; i < j["crossings"].size(); ++i) {
        std::vector<int> row = int_array(j["crossings"][i], "crossing");
        if (row.size() != 4) fail(ErrorKind::ParseError, "crossing rows have four arcs");
        int sign = int_at(j["signs"][i], "sign");
        if (sign != 1 && sign != -1) fail(ErrorKind::ParseError, "signs are +1 or -1");
        Crossing c;
        c.sign = sign;
        c.under_in = row[0];
        c.under_out = row[2];
        if (sign > 0) {
            c.over_out = row[1];
            c.over_in = row[3];
        } else {
            c.over_in = row[1];
            c.over_out = row[3];
        }
        d.crossings.push_back(c);
    }
    d.arc_count = d.crossings.empty() ? 1 : static_cast<int>(d.crossings.size());
    if (j.contains("clasps")) {
        if (!j["clasps"].is_array()) fail(ErrorKind::ParseError, "clasps must be an array");
        for (const json& pr : j["clasps"]) {
            std::vector<int> p = int_array(pr, "clasp");
            if (p.size() != 2) fail(ErrorKind::ParseError, "clasp entries are crossing pairs");
            d.clasp_marks.emplace_back(p[0], p[1]);
        }
    }
    if (j.contains("bottom_arcs")) d.bottom_arcs = int_array(j["bottom_arcs"], "bottom arc");
    validate(d);
    return d;
}

std::string braid_to_json(const BraidWord& b) {
    json j;
    j["strands"] = b.strands;
    j["word"] = b.letters;
    return j.dump();
}

BraidWord braid_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("strands") || !j.contains("word"))
        fail(ErrorKind::ParseError, "braid needs \"strands\" and \"word\"");
    BraidWord b;
    b.strands = int_at(j["strands"], "strands");
    b.letters = int_array(j["word"], "braid letter");
    validate_braid(b);
    return b;
}

std::string coloring_to_json(const ClassColoring& c) {
    json j;
    j["group"] = group_name(c.spec);
    j["class"] = class_name(c.spec);
    json assign = json::object();
    for (std::size_t a = 0; a < c.assignment.size(); ++a)
        assign[std::to_string(a)] = cycle_of(c.assignment[a]);
    j["assignment"] = assign;
    return j.dump();
}

ClassColoring coloring_from_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("group") || !j.contains("class") ||
        !j.contains("assignment"))
        fail(ErrorKind::ParseError, "coloring needs \"group\", \"class\", \"assignment\"");
    if (!j["group"].is_string() || !j["class"].is_string() || !j["assignment"].is_object())
        fail(ErrorKind::ParseError, "malformed coloring fields");
    ClassColoring c;
    c.spec = spec_from_names(j["group"].get<std::string>(), j["class"].get<std::string>());
    const json& assign = j["assignment"];
    c.assignment.resize(assign.size());
    std::vector<bool> seen(assign.size(), false);
    for (auto it = assign.begin(); it != assign.end(); ++it) {
        int arc;
        try {
            std::size_t used = 0;
            arc = std::stoi(it.key(), &used);
            if (used != it.key().size()) throw std::invalid_argument(it.key());
        } catch (const std::exception&) {
            fail(ErrorKind::ParseError, "assignment keys are arc ids");
        }
        if (arc < 0 || arc >= static_cast<int>(assign.size()) || seen[arc])
            fail(ErrorKind::ParseError, "assignment keys must cover arcs 0..A-1 once");
        seen[arc] = true;
        Perm p = perm_from_cycle(int_array(*it, "cycle"), c.spec.n);
        if (!in_class(c.spec, p))
            fail(ErrorKind::SpecMismatch, "color at arc " + it.key() + " is not in the class");
        c.assignment[arc] = p;
    }
    return c;
}

std::string section_to_json(const ClaspSection& s) {
    json j;
    j["clasp_a"] = {s.clasp_a.first, s.clasp_a.second};
    j["clasp_b"] = {s.clasp_b.first, s.clasp_b.second};
    j["arcs"] = s.section_arcs;
    return j.dump();
}

ClaspSection section_from_json(const std::string& text, const PlanarDiagram& d) {
    json j = parse_text(text);
    if (!j.is_object() || !j.contains("clasp_a") || !j.contains("clasp_b") || !j.contains("arcs"))
        fail(ErrorKind::ParseError, "section needs \"clasp_a\", \"clasp_b\", \"arcs\"");
    std::vector<int> a = int_array(j["clasp_a"], "clasp_a");
    std::vector<int> b = int_array(j["clasp_b"], "clasp_b");
    std::vector<int> arcs = int_array(j["arcs"], "arcs");
    if (a.size() != 2 || b.size() != 2) fail(ErrorKind::ParseError, "clasps are crossing pairs");
    if (arcs.size() != 5) fail(ErrorKind::ParseError, "arcs must list b1..b5");
    ClaspSection s;
    s.diagram = d;
    s.clasp_a = {a[0], a[1]};
    s.clasp_b = {b[0], b[1]};
    std::copy(arcs.begin(), arcs.end(), s.section_arcs.begin());
    validate_section(s);
    return s;
}

std::string fox_space_to_json(const FoxSpace& s) {
    json j;
    j["p"] = s.p;
    j["dimension"] = s.dimension;
    j["basis"] = s.basis;
    return j.dump();
}

std::string slurp_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::size_t i = 0;
    while (i < arg.size() && std::isspace(static_cast<unsigned char>(arg[i]))) ++i;
    if (i < arg.size() && (arg[i] == '{' || arg[i] == '[')) return arg;
    std::ifstream f(arg);
    if (!f) fail(ErrorKind::ParseError, "cannot open " + arg);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace gordian
