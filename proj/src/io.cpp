#include "pipart/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "pipart/errors.hpp"

namespace pipart {

namespace {

std::vector<long long> parse_ints(const std::string& body, int line_no) {
    std::istringstream iss(body);
    std::vector<long long> out;
    long long x;
    while (iss >> x) out.push_back(x);
    if (!iss.eof()) {
        iss.clear();
        std::string trailing;
        iss >> trailing;
        if (!trailing.empty()) throw ParseError("unexpected token '" + trailing + "'", line_no);
    }
    return out;
}

} // namespace

Hypergraph parse_hypergraph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long k = 0, n = 0, m = 0;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        if (!have_header) {
            std::istringstream iss(line);
            std::string p, hg;
            if (!(iss >> p >> hg >> k >> n >> m) || p != "p" || hg != "hg")
                throw ParseError("expected header 'p hg <k> <n> <m>'", line_no);
            std::string extra;
            if (iss >> extra) throw ParseError("trailing content after header", line_no);
            if (k < 1) throw ParseError("uniformity must be at least 1", line_no);
            if (n < 0) throw ParseError("vertex count must be nonnegative", line_no);
            if (m < 0) throw ParseError("edge count must be nonnegative", line_no);
            have_header = true;
            continue;
        }
        std::vector<long long> vals = parse_ints(line, line_no);
        if (static_cast<long long>(vals.size()) != k)
            throw ParseError("edge has " + std::to_string(vals.size()) + " vertices, expected " +
                                 std::to_string(k),
                             line_no);
        Edge e;
        e.reserve(vals.size());
        for (std::size_t i = 0; i < vals.size(); ++i) {
            long long v = vals[i];
            if (v < 0 || v >= n)
                throw ParseError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")",
                                 line_no);
            if (i > 0 && v <= vals[i - 1])
                throw ParseError("vertices must be strictly ascending", line_no);
            e.push_back(static_cast<int>(v));
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError("more edges than declared in header", line_no);
        for (const Edge& prev : edges)
            if (prev == e) throw ParseError("duplicate edge", line_no);
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError("missing header 'p hg <k> <n> <m>'", line_no == 0 ? 1 : line_no);
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError("header declares " + std::to_string(m) + " edges but " +
                             std::to_string(edges.size()) + " were given",
                         line_no);
    return Hypergraph(static_cast<int>(n), static_cast<int>(k), std::move(edges));
}

std::string serialize_hypergraph(const Hypergraph& g) {
    std::ostringstream out;
    out << "p hg " << g.k() << ' ' << g.n() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write file: " + path);
    out << content;
}

} // namespace pipart
