#include "bulab/labels.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "bulab/error.hpp"

namespace bulab {

std::vector<int> LabelAlphabet::labels() const
{
    std::vector<int> out;
    for (int k = 1; k <= n; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

Labelling Labelling::build(const Complex& complex, std::vector<int> labels)
{
    if (labels.size() != complex.num_vertices())
        throw Error(ErrorCode::InvalidArgument, "labelling is not total on the vertices");
    for (VertexId v = 0; v < labels.size(); ++v)
        if (labels[v] == 0)
            throw Error(ErrorCode::LabelOutOfRange, "vertex " + complex.name(v) + " has label 0");
    return Labelling(complex, std::move(labels));
}

Labelling Labelling::from_pairs(const Complex& complex, const std::vector<std::pair<std::string, int>>& pairs)
{
    std::vector<int> labels(complex.num_vertices(), 0);
    for (const auto& [name, label] : pairs) {
        const VertexId v = complex.id(name);
        if (labels[v] != 0)
            throw Error(ErrorCode::InvalidArgument, "vertex " + name + " labelled twice");
        if (label == 0)
            throw Error(ErrorCode::LabelOutOfRange, "vertex " + name + " has label 0");
        labels[v] = label;
    }
    for (VertexId v = 0; v < labels.size(); ++v)
        if (labels[v] == 0)
            throw Error(ErrorCode::InvalidArgument, "vertex " + complex.name(v) + " is not labelled");
    return build(complex, std::move(labels));
}

int Labelling::max_abs() const
{
    int m = 0;
    for (int l : labels_)
        m = std::max(m, std::abs(l));
    return m;
}

Signature Signature::from_mask(int size, std::uint32_t negative_mask)
{
    if (size < 1 || size > 31)
        throw Error(ErrorCode::InvalidArgument, "signature size out of range");
    std::vector<int> labels;
    for (int i = 0; i < size; ++i)
        labels.push_back((negative_mask >> i) & 1u ? -(i + 1) : i + 1);
    return Signature(std::move(labels));
}

Signature Signature::from_labels(std::vector<int> labels)
{
    std::sort(labels.begin(), labels.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (std::abs(labels[i]) != static_cast<int>(i) + 1)
            throw Error(ErrorCode::InvalidArgument, "signature must use each absolute value 1..n exactly once");
    if (labels.empty())
        throw Error(ErrorCode::InvalidArgument, "empty signature");
    return Signature(std::move(labels));
}

Signature Signature::parse(const std::string& text)
{
    std::vector<int> labels;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            labels.push_back(std::stoi(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "bad signature entry '" + item + "'");
        }
    }
    return from_labels(std::move(labels));
}

std::uint32_t Signature::mask() const
{
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] < 0)
            m |= 1u << i;
    return m;
}

Signature Signature::negated() const
{
    auto labels = labels_;
    for (int& l : labels)
        l = -l;
    return Signature(std::move(labels));
}

std::string Signature::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
        out += (i ? "," : "") + std::to_string(labels_[i]);
    return out;
}

LabelAntipodality is_antipodal_labelling(const Labelling& l, const Involution& a)
{
    if (a.image().size() != l.complex().num_vertices())
        throw Error(ErrorCode::InvalidArgument, "involution and labelling live on different complexes");
    LabelAntipodality out;
    for (VertexId v = 0; v < l.complex().num_vertices(); ++v) {
        if (l[a(v)] != -l[v]) {
            out.antipodal = false;
            out.witness = v;
            break;
        }
    }
    return out;
}

LabelAntipodality is_boundary_antipodal(const Labelling& l, const Involution& boundary_involution)
{
    const auto& bc = boundary_involution.complex();
    const auto to_t = map_by_name(bc, l.complex());
    LabelAntipodality out;
    for (VertexId w = 0; w < bc.num_vertices(); ++w) {
        if (l[to_t[boundary_involution(w)]] != -l[to_t[w]]) {
            out.antipodal = false;
            out.witness = to_t[w];
            break;
        }
    }
    return out;
}

std::vector<Simplex> complementary_edges(const Labelling& l)
{
    std::vector<Simplex> out;
    for (const auto& e : l.complex().edges())
        if (l[e[0]] == -l[e[1]])
            out.push_back(e);
    return out;
}

namespace {

void check_range(const Labelling& l, int n)
{
    for (VertexId v = 0; v < l.complex().num_vertices(); ++v)
        if (std::abs(l[v]) > n)
            throw Error(ErrorCode::LabelOutOfRange, "vertex " + l.complex().name(v) + " has label " +
                                                        std::to_string(l[v]) + " outside Pi_" + std::to_string(n));
}

TuckerResult tucker_search(const Labelling& l)
{
    TuckerResult out;
    const auto edges = complementary_edges(l);
    out.complementary_count = edges.size();
    if (!edges.empty()) {
        out.edge = edges.front();
    } else {
        out.counterexample = "antipodal labelling into Pi_" + std::to_string(l.complex().dimension()) +
                             " without complementary edges on a complex of dimension " +
                             std::to_string(l.complex().dimension());
    }
    return out;
}

} // namespace

TuckerResult verify_tucker(const Labelling& l, const Involution& a)
{
    check_range(l, l.complex().dimension());
    if (!is_free(a).is_free)
        throw Error(ErrorCode::PreconditionViolated, "involution is not free");
    if (auto anti = is_antipodal_labelling(l, a); !anti.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal at vertex " + l.complex().name(*anti.witness));
    return tucker_search(l);
}

TuckerResult verify_tucker_with_boundary(const Labelling& l, const Involution& boundary_involution)
{
    check_range(l, l.complex().dimension());
    if (!is_free(boundary_involution).is_free)
        throw Error(ErrorCode::PreconditionViolated, "boundary involution is not free");
    if (auto anti = is_boundary_antipodal(l, boundary_involution); !anti.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal on the boundary at vertex " + l.complex().name(*anti.witness));
    return tucker_search(l);
}

InducedMap induced_map(const Labelling& l, int n)
{
    check_range(l, n);
    if (auto edges = complementary_edges(l); !edges.empty())
        throw Error(ErrorCode::ComplementaryEdgePresent, "edge " + l.complex().format(edges.front()));
    auto target = crosspolytope_boundary(n);
    std::vector<VertexId> image(l.complex().num_vertices());
    for (VertexId v = 0; v < image.size(); ++v) {
        const int label = l[v];
        image[v] = static_cast<VertexId>(2 * (std::abs(label) - 1) + (label < 0 ? 1 : 0));
    }
    auto map = SimplicialMap::build(l.complex(), target.complex, std::move(image));
    return {std::move(map), std::move(target)};
}

std::vector<long long> signature_table(const Labelling& l)
{
    const int width = l.complex().dimension() + 1;
    if (width > 30)
        throw Error(ErrorCode::InvalidArgument, "dimension too large for a signature table");
    std::vector<long long> table(std::size_t{1} << width, 0);
    for (const auto& facet : l.complex().facets()) {
        std::uint32_t seen = 0;
        std::uint32_t negative = 0;
        bool full = true;
        for (VertexId v : facet) {
            const int label = l[v];
            const int a = std::abs(label);
            if (a > width || (seen >> (a - 1)) & 1u) {
                full = false;
                break;
            }
            seen |= 1u << (a - 1);
            if (label < 0)
                negative |= 1u << (a - 1);
        }
        if (full)
            ++table[negative];
    }
    return table;
}

long long count_signature(const Labelling& l, const Signature& s)
{
    if (s.size() != l.complex().dimension() + 1)
        throw Error(ErrorCode::SignatureDimensionMismatch,
                    "signature of size " + std::to_string(s.size()) + " on a complex of dimension " +
                        std::to_string(l.complex().dimension()));
    return signature_table(l)[s.mask()];
}

long long count_signature_pair(const Labelling& l, const Signature& s)
{
    if (s.size() != l.complex().dimension() + 1)
        throw Error(ErrorCode::SignatureDimensionMismatch,
                    "signature of size " + std::to_string(s.size()) + " on a complex of dimension " +
                        std::to_string(l.complex().dimension()));
    const auto table = signature_table(l);
    return table[s.mask()] + table[s.negated().mask()];
}

AlternatingCount count_alternating(const Labelling& l, int n)
{
    check_range(l, n);
    AlternatingCount out;
    const int d = l.complex().dimension();
    out.alphabet_large_enough = n >= d + 1;
    for (const auto& facet : l.complex().facets()) {
        std::vector<int> labels;
        for (VertexId v : facet)
            labels.push_back(l[v]);
        std::sort(labels.begin(), labels.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
        bool alternating = true;
        for (std::size_t i = 0; i < labels.size() && alternating; ++i) {
            if (i > 0 && std::abs(labels[i]) == std::abs(labels[i - 1]))
                alternating = false;
            else if ((labels[i] > 0) != (i % 2 == 0))
                alternating = false;
        }
        if (!alternating)
            continue;
        std::vector<int> key;
        for (int label : labels)
            key.push_back(std::abs(label));
        ++out.per_sequence[key];
        ++out.total;
    }
    out.total_odd = out.total % 2 == 1;
    return out;
}

ShashkinReport shashkin_report(const Labelling& l, const Involution& a)
{
    const int d = l.complex().dimension();
    check_range(l, d + 1);
    if (!is_free(a).is_free)
        throw Error(ErrorCode::PreconditionViolated, "involution is not free");
    if (auto anti = is_antipodal_labelling(l, a); !anti.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal at vertex " + l.complex().name(*anti.witness));

    ShashkinReport report;
    report.closed = true;
    report.complementary = complementary_edges(l);
    const auto table = signature_table(l);
    report.all_odd = true;
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
        report.rows.push_back({Signature::from_mask(d + 1, mask), table[mask]});
        if (table[mask] % 2 == 0)
            report.all_odd = false;
    }
    if (report.complementary.empty() && manifold_check(l.complex()).is_closed_pseudomanifold) {
        const auto f = induced_map(l, d + 1);
        report.degree = degree_mod2(f.map);
        report.parity_matches_degree =
            report.degree->consistent &&
            std::all_of(table.begin(), table.end(),
                        [&](long long c) { return (c & 1) == report.degree->degree_mod2; });
    }
    report.holds = report.complementary.empty() && report.all_odd && report.parity_matches_degree;
    return report;
}

ShashkinReport shashkin_report_with_boundary(const Labelling& l, const Involution& boundary_involution)
{
    const int d = l.complex().dimension();
    check_range(l, d + 1);
    if (!is_free(boundary_involution).is_free)
        throw Error(ErrorCode::PreconditionViolated, "boundary involution is not free");
    if (auto anti = is_boundary_antipodal(l, boundary_involution); !anti.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal on the boundary at vertex " + l.complex().name(*anti.witness));

    ShashkinReport report;
    report.closed = false;
    report.complementary = complementary_edges(l);
    const auto table = signature_table(l);
    report.all_odd = true;
    // Classes {s, -s} are represented by the signature with +1; masks with bit 0 clear.
    for (std::uint32_t mask = 0; mask < table.size(); mask += 2) {
        const auto s = Signature::from_mask(d + 1, mask);
        const long long count = table[mask] + table[s.negated().mask()];
        report.rows.push_back({s, count});
        if (count % 2 == 0)
            report.all_odd = false;
    }
    report.holds = report.complementary.empty() && report.all_odd;
    return report;
}

Labelling lift_labelling(const Labelling& l, const Subdivision& sd)
{
    std::vector<int> labels(sd.carrier.size());
    for (VertexId v = 0; v < labels.size(); ++v) {
        int best = 0;
        for (VertexId w : sd.carrier[v]) {
            const int label = l[w];
            if (std::abs(label) > std::abs(best) || (std::abs(label) == std::abs(best) && label > best))
                best = label;
        }
        labels[v] = best;
    }
    return Labelling::build(sd.complex, std::move(labels));
}

Labelling extend_labelling(const Labelling& l, const FullBoundaryRefinement& refinement)
{
    if (l.complex().num_vertices() != refinement.original_vertices)
        throw Error(ErrorCode::InvalidArgument, "labelling does not match the refined complex");
    std::vector<int> labels = l.values();
    for (const auto& carrier : refinement.carriers)
        labels.push_back(labels[carrier.front()]);
    return Labelling::build(refinement.complex, std::move(labels));
}

Labelling double_labelling(const Labelling& l, const DoublingResult& doubled, const Involution& boundary_involution)
{
    if (auto anti = is_boundary_antipodal(l, boundary_involution); !anti.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal on the boundary at vertex " + l.complex().name(*anti.witness));
    if (doubled.inclusion.size() != l.complex().num_vertices())
        throw Error(ErrorCode::InvalidArgument, "labelling does not live on the doubled complex's source");
    std::vector<int> labels(doubled.doubled.num_vertices(), 0);
    for (VertexId v = 0; v < l.complex().num_vertices(); ++v) {
        labels[doubled.inclusion[v]] = l[v];
        labels[doubled.mirror[v]] = -l[v];
    }
    return Labelling::build(doubled.doubled, std::move(labels));
}

} // namespace bulab
