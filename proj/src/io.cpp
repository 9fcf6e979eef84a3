#include "ttone/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ttone/error.hpp"

namespace ttone::io {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

bool read_two(const std::string& line, long long& a, long long& b) {
    std::istringstream is(line);
    std::string rest;
    return static_cast<bool>(is >> a >> b) && !(is >> rest);
}

json labels_object(const PartialToneColoring& c) {
    json labels = json::object();
    for (Vertex v = 0; v < c.vertex_count(); ++v)
        if (c.is_colored(v)) labels[std::to_string(v)] = c.label(v).colors();
    return labels;
}

std::string finish(json doc) { return doc.dump(2) + "\n"; }

}  // namespace

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        long long a = 0, b = 0;
        if (!read_two(line, a, b)) parse_fail(lineno, "expected two integers, got '" + line + "'");
        if (!have_header) {
            if (a < 0 || b < 0) parse_fail(lineno, "negative header");
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw Error(ErrorKind::InvalidVertex, "line " + std::to_string(lineno) + ": vertex out of range 0.." +
                                                      std::to_string(n - 1));
        if (static_cast<long long>(edges.size()) == m) parse_fail(lineno, "more than " + std::to_string(m) + " edges");
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) parse_fail(lineno, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        parse_fail(lineno, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return build_graph(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string write_coloring_json(const PartialToneColoring& c, const BoundReport& report) {
    json stats = {{"budget", report.budget}, {"formula_budget", report.formula_budget}};
    if (report.palette_size) stats["palette_size"] = *report.palette_size;
    return finish({{"algorithm", report.algorithm},
                   {"k", c.params().k},
                   {"labels", labels_object(c)},
                   {"stats", stats},
                   {"t", c.params().t},
                   {"used", report.used},
                   {"valid", report.valid}});
}

std::string write_coloring_json(const PartialToneColoring& c, const SearchStats& stats, bool valid) {
    return finish({{"algorithm", "exact"},
                   {"k", c.params().k},
                   {"labels", labels_object(c)},
                   {"stats",
                    {{"nodes", stats.nodes},
                     {"forbidden_prunes", stats.forbidden_prunes},
                     {"symmetry_prunes", stats.symmetry_prunes}}},
                   {"t", c.params().t},
                   {"used", c.used_color_count()},
                   {"valid", valid}});
}

PartialToneColoring read_coloring_json(const std::string& text, std::size_t n) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    try {
        ToneParams p{doc.at("t").get<unsigned>(), doc.at("k").get<unsigned>()};
        PartialToneColoring c(p, n);
        for (const auto& [key, value] : doc.at("labels").items()) {
            std::size_t pos = 0;
            const unsigned long v = std::stoul(key, &pos);
            if (pos != key.size()) throw Error(ErrorKind::ParseError, "bad vertex key '" + key + "'");
            if (v >= n) throw Error(ErrorKind::InvalidVertex, "label for vertex " + key + " with n=" + std::to_string(n));
            Label l;
            std::size_t count = 0;
            for (const auto& col : value) {
                l.insert(col.get<Color>());
                ++count;
            }
            if (count != l.size()) throw Error(ErrorKind::InvalidLabel, "repeated color at vertex " + key);
            c.assign(static_cast<Vertex>(v), l);
        }
        check_labels(c);
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "bad vertex key");
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::ParseError, "vertex key out of range");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
    out << contents;
}

}  // namespace ttone::io
