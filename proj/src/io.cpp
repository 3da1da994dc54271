#include "bulab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bulab/error.hpp"

namespace bulab {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text)
{
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string w; words >> w;)
            line.tokens.push_back(std::move(w));
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

VertexId lookup(const Complex& complex, const std::string& name, const std::string& source, int line)
{
    if (auto v = complex.find(name))
        return *v;
    throw ParseError(source, line, "unknown vertex '" + name + "'");
}

long long parse_integer(const std::string& token, const std::string& source, int line)
{
    long long value = 0;
    const char* end = token.data() + token.size();
    const char* begin = token.data();
    if (!token.empty() && token[0] == '+')
        ++begin;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || begin == end)
        throw ParseError(source, line, "expected an integer, got '" + token + "'");
    return value;
}

double parse_double(const std::string& token, const std::string& source, int line)
{
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used == token.size())
            return value;
    } catch (const std::exception&) {
    }
    throw ParseError(source, line, "expected a number, got '" + token + "'");
}

void expect_tokens(const Line& line, std::size_t count, const std::string& what, const std::string& source)
{
    if (line.tokens.size() != count)
        throw ParseError(source, line.number, "expected " + what);
}

void check_writable(const std::string& name)
{
    if (name.empty() || name.find_first_of(" \t\r\n#") != std::string::npos)
        throw Error(ErrorCode::InvalidArgument, "vertex name '" + name + "' cannot be written in the text formats");
}

} // namespace

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << contents;
    if (!out)
        throw Error(ErrorCode::InvalidArgument, "write to '" + path + "' failed");
}

Complex parse_complex(const std::string& text, const std::string& source)
{
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(source, 1, "missing 'dim D' header");
    const Line& header = lines.front();
    if (header.tokens.size() != 2 || header.tokens[0] != "dim")
        throw ParseError(source, header.number, "expected 'dim D'");
    const long long dim = parse_integer(header.tokens[1], source, header.number);
    if (dim < 0 || dim > 64)
        throw ParseError(source, header.number, "dimension out of range");

    std::vector<std::vector<std::string>> facets;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (static_cast<long long>(line.tokens.size()) != dim + 1)
            throw ParseError(source, line.number,
                             "facet has " + std::to_string(line.tokens.size()) + " vertices, expected " +
                                 std::to_string(dim + 1));
        std::set<std::string> distinct(line.tokens.begin(), line.tokens.end());
        if (distinct.size() != line.tokens.size())
            throw ParseError(source, line.number, "repeated vertex in facet");
        facets.push_back(line.tokens);
    }
    if (facets.empty())
        throw ParseError(source, header.number, "no facets");
    return Complex::from_facets(facets);
}

std::string write_complex(const Complex& complex)
{
    std::vector<std::vector<std::string>> facets;
    for (const auto& f : complex.facets()) {
        auto names = complex.facet_names(f);
        for (const auto& n : names)
            check_writable(n);
        std::sort(names.begin(), names.end());
        facets.push_back(std::move(names));
    }
    std::sort(facets.begin(), facets.end());
    std::string out = "dim " + std::to_string(complex.dimension()) + "\n";
    for (const auto& f : facets) {
        for (std::size_t i = 0; i < f.size(); ++i)
            out += (i ? " " : "") + f[i];
        out += "\n";
    }
    return out;
}

Involution parse_involution(const std::string& text, const Complex& complex, const std::string& source)
{
    std::vector<VertexId> image(complex.num_vertices());
    std::vector<char> set(complex.num_vertices(), 0);
    for (VertexId v = 0; v < image.size(); ++v)
        image[v] = v;
    auto assign = [&](VertexId v, VertexId w, int line) {
        if (set[v] && image[v] != w)
            throw ParseError(source, line,
                             "conflicting image for '" + complex.name(v) + "'");
        image[v] = w;
        set[v] = 1;
    };
    for (const Line& line : tokenize(text)) {
        expect_tokens(line, 2, "'v w'", source);
        const VertexId v = lookup(complex, line.tokens[0], source, line.number);
        const VertexId w = lookup(complex, line.tokens[1], source, line.number);
        assign(v, w, line.number);
        assign(w, v, line.number);
    }
    return Involution::build(complex, std::move(image));
}

std::string write_involution(const Involution& a)
{
    const Complex& c = a.complex();
    std::vector<std::pair<std::string, std::string>> rows;
    for (VertexId v = 0; v < a.image().size(); ++v) {
        const std::string& x = c.name(v);
        const std::string& y = c.name(a(v));
        check_writable(x);
        if (x <= y)
            rows.emplace_back(x, y);
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& [x, y] : rows)
        out += x + " " + y + "\n";
    return out;
}

Labelling parse_labelling(const std::string& text, const Complex& complex, const std::string& source)
{
    std::vector<int> labels(complex.num_vertices(), 0);
    int last_line = 0;
    for (const Line& line : tokenize(text)) {
        expect_tokens(line, 2, "'v k'", source);
        const VertexId v = lookup(complex, line.tokens[0], source, line.number);
        const long long k = parse_integer(line.tokens[1], source, line.number);
        if (k == 0 || k > 1'000'000 || k < -1'000'000)
            throw ParseError(source, line.number, "label must be a nonzero integer of modest size");
        if (labels[v] != 0)
            throw ParseError(source, line.number, "vertex '" + line.tokens[0] + "' labelled twice");
        labels[v] = static_cast<int>(k);
        last_line = line.number;
    }
    for (VertexId v = 0; v < labels.size(); ++v)
        if (labels[v] == 0)
            throw ParseError(source, last_line + 1, "no label for vertex '" + complex.name(v) + "'");
    return Labelling::build(complex, std::move(labels));
}

std::string write_labelling(const Labelling& l)
{
    const Complex& c = l.complex();
    std::vector<std::pair<std::string, int>> rows;
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
        check_writable(c.name(v));
        rows.emplace_back(c.name(v), l[v]);
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& [name, k] : rows)
        out += name + " " + std::to_string(k) + "\n";
    return out;
}

SimplicialMap parse_map(const std::string& text, const Complex& source_complex, const Complex& target_complex,
                        const std::string& source)
{
    std::vector<VertexId> image(source_complex.num_vertices(), 0);
    std::vector<char> set(source_complex.num_vertices(), 0);
    int last_line = 0;
    for (const Line& line : tokenize(text)) {
        expect_tokens(line, 2, "'v w'", source);
        const VertexId v = lookup(source_complex, line.tokens[0], source, line.number);
        const VertexId w = lookup(target_complex, line.tokens[1], source, line.number);
        if (set[v])
            throw ParseError(source, line.number, "vertex '" + line.tokens[0] + "' mapped twice");
        image[v] = w;
        set[v] = 1;
        last_line = line.number;
    }
    for (VertexId v = 0; v < image.size(); ++v)
        if (!set[v])
            throw ParseError(source, last_line + 1, "no image for vertex '" + source_complex.name(v) + "'");
    return SimplicialMap::build(source_complex, target_complex, std::move(image));
}

std::string write_map(const SimplicialMap& f)
{
    std::vector<std::pair<std::string, std::string>> rows;
    for (VertexId v = 0; v < f.vertex_map().size(); ++v) {
        check_writable(f.source().name(v));
        rows.emplace_back(f.source().name(v), f.target().name(f(v)));
    }
    std::sort(rows.begin(), rows.end());
    std::string out;
    for (const auto& [x, y] : rows)
        out += x + " " + y + "\n";
    return out;
}

Cover parse_cover(const std::string& text, const Complex& complex, const std::string& source)
{
    struct PendingSet {
        std::string name;
        std::vector<VertexId> vertices;
    };
    std::vector<PendingSet> sets;
    std::map<std::string, std::size_t> index;
    std::vector<std::pair<Line, int>> pair_lines;

    for (const Line& line : tokenize(text)) {
        const std::string& head = line.tokens[0];
        if (head == "set") {
            expect_tokens(line, 2, "'set NAME'", source);
            if (index.count(line.tokens[1]))
                throw ParseError(source, line.number, "set '" + line.tokens[1] + "' declared twice");
            index[line.tokens[1]] = sets.size();
            sets.push_back({line.tokens[1], {}});
        } else if (head == "pair") {
            expect_tokens(line, 3, "'pair NAME1 NAME2'", source);
            pair_lines.emplace_back(line, line.number);
        } else {
            if (sets.empty())
                throw ParseError(source, line.number, "vertex listed before any 'set'");
            for (const auto& name : line.tokens)
                sets.back().vertices.push_back(lookup(complex, name, source, line.number));
        }
    }

    Cover out;
    out.complex = complex;
    for (auto& s : sets)
        out.sets.push_back(ClosedSet::from_ids(complex, s.name, s.vertices));
    std::vector<char> paired(sets.size(), 0);
    for (const auto& [line, number] : pair_lines) {
        auto find_set = [&](const std::string& name) {
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError(source, number, "unknown set '" + name + "'");
            return it->second;
        };
        const std::size_t p = find_set(line.tokens[1]);
        const std::size_t q = find_set(line.tokens[2]);
        if (p == q || paired[p] || paired[q])
            throw ParseError(source, number, "each set may appear in at most one pair, with a different partner");
        paired[p] = paired[q] = 1;
        out.pairs.emplace_back(p, q);
    }
    return out;
}

std::string write_cover(const Cover& cover)
{
    std::string out;
    for (const auto& s : cover.sets) {
        check_writable(s.name());
        out += "set " + s.name() + "\n";
        std::vector<std::string> names;
        for (VertexId v : s.vertices()) {
            check_writable(cover.complex.name(v));
            names.push_back(cover.complex.name(v));
        }
        std::sort(names.begin(), names.end());
        for (std::size_t i = 0; i < names.size(); ++i)
            out += (i ? " " : "") + names[i];
        if (!names.empty())
            out += "\n";
    }
    for (const auto& [p, q] : cover.pairs)
        out += "pair " + cover.sets[p].name() + " " + cover.sets[q].name() + "\n";
    return out;
}

Layout parse_layout(const std::string& text, const std::string& source)
{
    Layout out;
    for (const Line& line : tokenize(text)) {
        expect_tokens(line, 3, "'v x y'", source);
        if (out.count(line.tokens[0]))
            throw ParseError(source, line.number, "vertex '" + line.tokens[0] + "' placed twice");
        out[line.tokens[0]] = {parse_double(line.tokens[1], source, line.number),
                               parse_double(line.tokens[2], source, line.number)};
    }
    return out;
}

std::string write_layout(const Layout& layout)
{
    std::string out;
    char buffer[64];
    for (const auto& [name, p] : layout) {
        check_writable(name);
        std::snprintf(buffer, sizeof buffer, " %.10g %.10g\n", p.x + 0.0, p.y + 0.0);
        out += name + buffer;
    }
    return out;
}

} // namespace bulab
