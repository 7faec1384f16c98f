#include "wmscss/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace wmscss {

namespace {

// Next content line, with '#' comment lines and blank lines skipped.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] void fail(const std::string& what) {
    throw std::runtime_error("graph format error: " + what);
}

}  // namespace

Digraph read_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) fail("missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) fail("header must be 'n m'");

    Digraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) fail("expected " + std::to_string(m) + " arcs");
        std::istringstream arc(line);
        long long tail, head;
        std::string weight;
        if (!(arc >> tail >> head >> weight)) fail("arc line must be 'tail head weight'");
        auto w = parse_rational(weight);
        if (!w) fail("bad weight literal '" + weight + "'");
        try {
            g.add_arc(static_cast<int>(tail), static_cast<int>(head), *w);
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    return g;
}

Digraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Digraph& g) {
    out << g.vertex_count() << ' ' << g.arc_count() << '\n';
    for (const Arc& a : g.arcs())
        out << a.tail << ' ' << a.head << ' ' << to_string(a.weight) << '\n';
}

void write_graph_file(const std::string& path, const Digraph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_graph(out, g);
}

std::vector<Rational> read_solution(std::istream& in, int arc_count) {
    std::vector<Rational> values(arc_count, Rational(0));
    std::string line;
    while (next_line(in, line)) {
        std::istringstream row(line);
        long long id;
        std::string value;
        if (!(row >> id >> value)) fail("solution line must be 'arc-id value'");
        if (id < 0 || id >= arc_count) fail("arc id " + std::to_string(id) + " out of range");
        auto v = parse_rational(value);
        if (!v) fail("bad value literal '" + value + "'");
        values[static_cast<int>(id)] = *v;
    }
    return values;
}

std::vector<Rational> read_solution_file(const std::string& path, int arc_count) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_solution(in, arc_count);
}

void write_solution(std::ostream& out, const std::vector<Rational>& values) {
    for (std::size_t id = 0; id < values.size(); ++id)
        out << id << ' ' << to_string(values[id]) << '\n';
}

void write_solution_file(const std::string& path, const std::vector<Rational>& values) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    write_solution(out, values);
}

}  // namespace wmscss
