#include "mindom/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mindom {

namespace {

// Next line that is not a comment; returns false at end of stream.
bool next_content_line(std::istream& in, std::string& line, bool skip_blank) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line.front() == '#') continue;
        if (skip_blank) {
            bool blank = true;
            for (char c : line)
                if (!std::isspace(static_cast<unsigned char>(c))) {
                    blank = false;
                    break;
                }
            if (blank) continue;
        }
        return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& line, const char* what) {
    std::istringstream ss(line);
    std::vector<int> out;
    int x;
    while (ss >> x) out.push_back(x);
    if (!ss.eof()) throw std::invalid_argument(std::string(what) + ": invalid integer");
    return out;
}

}  // namespace

Poset parse_poset(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line, true)) throw std::invalid_argument("poset file: missing header line");
    auto header = parse_ints(line, "poset file header");
    if (header.size() != 2) throw std::invalid_argument("poset file: header must be \"n d\"");
    const int n = header[0], d = header[1];
    if (n < 1 || d < 1) throw std::invalid_argument("poset file: n and d must be >= 1");

    std::vector<std::vector<int>> orders;
    orders.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (!next_content_line(in, line, true)) throw std::invalid_argument("poset file: missing order line");
        auto ord = parse_ints(line, "poset file order");
        if (static_cast<int>(ord.size()) != n)
            throw std::invalid_argument("poset file: order line must list n elements");
        orders.push_back(std::move(ord));
    }
    return poset_from_orders(std::move(orders));  // validates the permutations
}

void write_poset(const Poset& p, std::ostream& out) {
    out << p.size() << ' ' << p.dim() << '\n';
    for (const auto& ord : p.orders()) {
        for (size_t i = 0; i < ord.size(); ++i) out << (i ? " " : "") << ord[i];
        out << '\n';
    }
}

Hypergraph parse_hypergraph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line, true)) throw std::invalid_argument("hypergraph file: missing header line");
    auto header = parse_ints(line, "hypergraph file header");
    if (header.size() != 2) throw std::invalid_argument("hypergraph file: header must be \"m k\"");
    const int m = header[0], k = header[1];
    if (m < 0 || k < 0) throw std::invalid_argument("hypergraph file: m and k must be >= 0");
    if (m > VertexSet::max_universe) throw std::invalid_argument("hypergraph file: ground set too large");

    Hypergraph h(m);
    for (int e = 0; e < k; ++e) {
        // Blank lines are meaningful here: they encode empty edges.
        if (!next_content_line(in, line, false)) throw std::invalid_argument("hypergraph file: missing edge line");
        auto verts = parse_ints(line, "hypergraph file edge");
        VertexSet edge(m);
        for (int v : verts) {
            if (v < 0 || v >= m) throw std::invalid_argument("hypergraph file: vertex index out of range");
            edge.insert(v);
        }
        h.edges.push_back(edge);
    }
    return h;
}

void write_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << h.m << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        bool first = true;
        for (int v : e) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
}

std::string format_solution(const VertexSet& s) {
    if (s.empty()) return "-";
    std::string out;
    bool first = true;
    for (int v : s) {
        if (!first) out += ' ';
        out += std::to_string(v);
        first = false;
    }
    return out;
}

VertexSet parse_solution(const std::string& line, int n) {
    VertexSet s(n);
    if (line == "-") return s;
    auto verts = parse_ints(line, "solution line");
    for (int v : verts) {
        if (v < 0 || v >= n) throw std::invalid_argument("solution line: vertex index out of range");
        s.insert(v);
    }
    return s;
}

}  // namespace mindom
