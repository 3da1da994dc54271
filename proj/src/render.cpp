#include "bulab/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>

#include "bulab/error.hpp"

namespace bulab {

Layout force_directed_layout(const Complex& complex, int iterations)
{
    const std::size_t n = complex.num_vertices();
    std::vector<Point> pos(n);
    for (std::size_t v = 0; v < n; ++v) {
        const double angle = 2 * std::numbers::pi * static_cast<double>(v) / static_cast<double>(std::max<std::size_t>(n, 1));
        pos[v] = {std::cos(angle), std::sin(angle)};
    }
    const double k = 1.0 / std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));
    std::vector<std::pair<VertexId, VertexId>> edges;
    if (complex.dimension() >= 1)
        for (const auto& e : complex.edges())
            edges.emplace_back(e[0], e[1]);

    double temperature = 0.1;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Point> force(n);
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                const double dx = pos[u].x - pos[v].x;
                const double dy = pos[u].y - pos[v].y;
                const double d2 = std::max(dx * dx + dy * dy, 1e-9);
                const double f = k * k / d2;
                force[u].x += dx * f;
                force[u].y += dy * f;
                force[v].x -= dx * f;
                force[v].y -= dy * f;
            }
        }
        for (const auto& [u, v] : edges) {
            const double dx = pos[u].x - pos[v].x;
            const double dy = pos[u].y - pos[v].y;
            const double d = std::sqrt(dx * dx + dy * dy);
            const double f = d / k;
            force[u].x -= dx * f;
            force[u].y -= dy * f;
            force[v].x += dx * f;
            force[v].y += dy * f;
        }
        for (std::size_t v = 0; v < n; ++v) {
            const double len = std::sqrt(force[v].x * force[v].x + force[v].y * force[v].y);
            if (len > 0) {
                const double step = std::min(len, temperature);
                pos[v].x += force[v].x / len * step;
                pos[v].y += force[v].y / len * step;
            }
        }
        temperature *= 0.985;
    }
    Layout out;
    for (VertexId v = 0; v < n; ++v)
        out[complex.name(v)] = pos[v];
    return out;
}

namespace {

std::string fmt(double x)
{
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", x + 0.0);
    std::string s = buffer;
    return s == "-0.00" ? "0.00" : s;
}

std::string escape(const std::string& text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

std::string render_svg(const Complex& complex, const std::optional<Labelling>& labelling, const Layout& layout,
                       const RenderOptions& options)
{
    if (complex.dimension() > 2)
        throw Error(ErrorCode::DimensionTooHigh, "can only draw complexes of dimension <= 2, got " +
                                                     std::to_string(complex.dimension()));
    const std::size_t n = complex.num_vertices();
    bool complete = true;
    for (VertexId v = 0; v < n && complete; ++v)
        complete = layout.count(complex.name(v)) > 0;
    const Layout used = complete ? layout : force_directed_layout(complex);

    std::vector<Point> raw(n);
    for (VertexId v = 0; v < n; ++v)
        raw[v] = used.at(complex.name(v));
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    if (n > 0) {
        min_x = max_x = raw[0].x;
        min_y = max_y = raw[0].y;
        for (const auto& p : raw) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double scale = (options.size - 2 * options.margin) / span;
    std::vector<Point> pos(n);
    for (VertexId v = 0; v < n; ++v)
        pos[v] = {options.margin + (raw[v].x - min_x) * scale, options.size - options.margin - (raw[v].y - min_y) * scale};

    std::set<Simplex> complementary;
    if (labelling)
        for (const auto& e : complementary_edges(*labelling))
            complementary.insert(e);

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(options.size) + "\" height=\"" +
           fmt(options.size) + "\" viewBox=\"0 0 " + fmt(options.size) + " " + fmt(options.size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (complex.dimension() == 2) {
        out += "<g class=\"triangles\" fill=\"#dde8f4\" stroke=\"none\">\n";
        for (const auto& f : complex.facets()) {
            out += "<polygon points=\"";
            for (std::size_t i = 0; i < f.size(); ++i)
                out += (i ? " " : "") + fmt(pos[f[i]].x) + "," + fmt(pos[f[i]].y);
            out += "\"/>\n";
        }
        out += "</g>\n";
    }
    if (complex.dimension() >= 1) {
        out += "<g class=\"edges\" stroke=\"#555555\" stroke-width=\"1.2\">\n";
        for (const auto& e : complex.edges()) {
            const bool hot = complementary.count(e) > 0;
            out += "<line x1=\"" + fmt(pos[e[0]].x) + "\" y1=\"" + fmt(pos[e[0]].y) + "\" x2=\"" + fmt(pos[e[1]].x) +
                   "\" y2=\"" + fmt(pos[e[1]].y) + "\"";
            if (hot)
                out += " class=\"complementary\" stroke=\"#d62728\" stroke-width=\"3.5\"";
            out += "/>\n";
        }
        out += "</g>\n";
    }
    out += "<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"11\">\n";
    for (VertexId v = 0; v < n; ++v) {
        out += "<circle cx=\"" + fmt(pos[v].x) + "\" cy=\"" + fmt(pos[v].y) + "\" r=\"4\" fill=\"#1f3b5c\"/>\n";
        std::string text;
        if (options.show_names)
            text = complex.name(v);
        if (labelling)
            text += (text.empty() ? "" : ": ") + std::to_string((*labelling)[v]);
        if (!text.empty())
            out += "<text x=\"" + fmt(pos[v].x + 6) + "\" y=\"" + fmt(pos[v].y - 6) + "\">" + escape(text) + "</text>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

} // namespace bulab
