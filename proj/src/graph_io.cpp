#include "hcz/graph_io.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hcz {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
    throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

// Yields successive non-blank, non-comment lines together with their
// 1-based position in the stream.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out, int& line_no) {
        std::string raw;
        while (std::getline(in_, raw)) {
            ++count_;
            std::size_t i = raw.find_first_not_of(" \t\r");
            if (i == std::string::npos || raw[i] == '#') continue;
            out = raw;
            line_no = count_;
            return true;
        }
        return false;
    }

  private:
    std::istream& in_;
    int count_ = 0;
};

// Splits a line into whitespace-separated tokens.
std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> toks;
    std::stringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line_no, const char* what) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        fail(line_no, std::string("expected ") + what + ", got \"" + tok + "\"");
    }
    if (used != tok.size())
        fail(line_no, std::string("trailing characters in ") + what + " \"" + tok + "\"");
    return v;
}

double parse_double(const std::string& tok, int line_no, const char* what) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(tok, &used);
    } catch (const std::exception&) {
        fail(line_no, std::string("expected ") + what + ", got \"" + tok + "\"");
    }
    if (used != tok.size())
        fail(line_no, std::string("trailing characters in ") + what + " \"" + tok + "\"");
    return v;
}

}  // namespace

Graph parse_graph(std::istream& in) {
    LineReader reader(in);
    std::string line;
    int line_no = 0;
    if (!reader.next(line, line_no)) throw std::runtime_error("empty graph file");

    auto head = tokens_of(line);
    if (head.size() != 2) fail(line_no, "header must be \"n m\"");
    int n = parse_int(head[0], line_no, "vertex count");
    int m = parse_int(head[1], line_no, "edge count");
    if (n < 0) fail(line_no, "vertex count must be nonnegative");
    if (m < 0) fail(line_no, "edge count must be nonnegative");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        if (!reader.next(line, line_no))
            throw std::runtime_error("expected " + std::to_string(m) + " edges, found " +
                                     std::to_string(i));
        auto toks = tokens_of(line);
        if (toks.size() != 2) fail(line_no, "edge line must be \"u v\"");
        int u = parse_int(toks[0], line_no, "vertex id");
        int v = parse_int(toks[1], line_no, "vertex id");
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (u == v) fail(line_no, "self-loops are not allowed");
        edges.emplace_back(u, v);
    }
    if (reader.next(line, line_no)) fail(line_no, "unexpected content after last edge");
    return Graph::from_edges(n, edges);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file \"" + path + "\"");
    try {
        return parse_graph(in);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_graph(std::ostream& out, const Graph& g) {
    auto edges = g.edges();
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

WeightAssignment parse_weights(std::istream& in, int n, bool exact) {
    if (n < 0) throw std::runtime_error("vertex count must be nonnegative");
    WeightAssignment w;
    w.repr = exact ? WeightAssignment::Repr::Exact : WeightAssignment::Repr::Floating;
    if (exact) {
        w.exact.assign(static_cast<std::size_t>(n), GaussianRational{});
    } else {
        w.floating.assign(static_cast<std::size_t>(n), {0.0, 0.0});
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);

    LineReader reader(in);
    std::string line;
    int line_no = 0;
    while (reader.next(line, line_no)) {
        auto toks = tokens_of(line);
        if (toks.size() != 3) fail(line_no, "weight line must be \"v re im\"");
        int v = parse_int(toks[0], line_no, "vertex id");
        if (v < 0 || v >= n)
            fail(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
        if (seen[static_cast<std::size_t>(v)])
            fail(line_no, "duplicate weight for vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        if (exact) {
            try {
                w.exact[static_cast<std::size_t>(v)] = {parse_rational(toks[1]),
                                                        parse_rational(toks[2])};
            } catch (const std::exception& e) {
                fail(line_no, std::string("bad rational: ") + e.what());
            }
        } else {
            w.floating[static_cast<std::size_t>(v)] = {
                parse_double(toks[1], line_no, "real part"),
                parse_double(toks[2], line_no, "imaginary part")};
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw std::runtime_error("missing weight for vertex " + std::to_string(v));
    return w;
}

WeightAssignment read_weights_file(const std::string& path, int n, bool exact) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open weights file \"" + path + "\"");
    try {
        return parse_weights(in, n, exact);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_weights(std::ostream& out, const WeightAssignment& w) {
    if (w.repr == WeightAssignment::Repr::Exact) {
        for (std::size_t v = 0; v < w.exact.size(); ++v)
            out << v << ' ' << w.exact[v].re.str() << ' ' << w.exact[v].im.str() << '\n';
    } else {
        out << std::setprecision(17);
        for (std::size_t v = 0; v < w.floating.size(); ++v)
            out << v << ' ' << w.floating[v].real() << ' ' << w.floating[v].imag() << '\n';
    }
}

}  // namespace hcz
