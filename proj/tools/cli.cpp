#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

#include <CLI11.hpp>

#include "bulab/complex.hpp"
#include "bulab/covers.hpp"
#include "bulab/degree.hpp"
#include "bulab/error.hpp"
#include "bulab/generators.hpp"
#include "bulab/io.hpp"
#include "bulab/labels.hpp"
#include "bulab/render.hpp"
#include "bulab/symmetry.hpp"

namespace bulab::cli {

std::string fnv1a_hex(const std::string& bytes)
{
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

nlohmann::ordered_json RunReport::to_json() const
{
    nlohmann::ordered_json j;
    j["command"] = command;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const auto& in : inputs)
        j["inputs"].push_back({{"role", in.role}, {"path", in.path}, {"fnv1a", in.fnv1a}});
    j["facts"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : facts)
        j["facts"][key] = value;
    j["counts"] = nlohmann::ordered_json::array();
    for (const auto& [key, value] : counts)
        j["counts"].push_back({{"key", key}, {"count", value}});
    j["witnesses"] = witnesses;
    j["outputs"] = outputs;
    j["verdict"] = verdict;
    j["exit_code"] = exit_code;
    if (elapsed_ms)
        j["elapsed_ms"] = *elapsed_ms;
    return j;
}

std::string RunReport::to_text() const
{
    std::ostringstream out;
    out << "command   " << command << "\n";
    for (const auto& in : inputs)
        out << "input     " << in.role << " " << in.path << " fnv1a:" << in.fnv1a << "\n";
    for (const auto& [key, value] : facts)
        out << "fact      " << key << " = " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    for (const auto& [key, value] : counts)
        out << "count     " << key << " = " << value << "\n";
    for (const auto& w : witnesses)
        out << "witness   " << w << "\n";
    for (const auto& o : outputs)
        out << "output    " << o << "\n";
    if (elapsed_ms)
        out << "elapsed   " << *elapsed_ms << " ms\n";
    out << "verdict   " << verdict << " (exit " << exit_code << ")\n";
    return out.str();
}

namespace {

struct Options {
    std::uint64_t seed = kDefaultSeed;
    int refine = 0;
    std::uint64_t budget = 1'000'000;
    bool json = false;
    bool timing = false;

    std::string complex, labelling, involution, boundary_involution, cover, layout;
    std::string source, target, map, source_involution, target_involution;
    std::string signature;
    std::string out;
    int labels = 0;
    int k = 0;
    int max_refine = 2;
    bool make_full = false;

    std::string gen_kind;
    int dim = 2;
    int disk_k = 2;
    int size = 4;
    int random_labels = 0;
    int free_labels = 0;
};

class Session {
public:
    explicit Session(const Options& o) : o_(o) {}

    RunReport& report() { return report_; }

    std::string load(const std::string& role, const std::string& path)
    {
        if (path.empty())
            throw Error(ErrorCode::InvalidArgument, "--" + role + " is required");
        std::string text = read_text_file(path);
        report_.inputs.push_back({role, path, fnv1a_hex(text)});
        return text;
    }

    Complex complex(const std::string& role, const std::string& path) { return parse_complex(load(role, path), path); }

    Labelling labelling(const Complex& c) { return parse_labelling(load("labelling", o_.labelling), c, o_.labelling); }

    /// The closed or the boundary involution, whichever was given.
    std::pair<Involution, bool> symmetry(const Complex& c)
    {
        const bool closed = !o_.involution.empty();
        const bool boundary = !o_.boundary_involution.empty();
        if (closed == boundary)
            throw Error(ErrorCode::InvalidArgument, "give exactly one of --involution and --boundary-involution");
        if (closed)
            return {parse_involution(load("involution", o_.involution), c, o_.involution), false};
        const Complex b = boundary_complex(c);
        return {parse_involution(load("boundary-involution", o_.boundary_involution), b, o_.boundary_involution), true};
    }

    Involution closed_involution(const Complex& c)
    {
        auto [a, boundary] = symmetry(c);
        if (boundary)
            throw Error(ErrorCode::InvalidArgument, "this command needs a closed complex and --involution");
        return a;
    }

    void fact(const std::string& key, nlohmann::ordered_json value) { report_.facts.emplace_back(key, std::move(value)); }
    void count(const std::string& key, long long value) { report_.counts.emplace_back(key, value); }
    void witness(std::string w) { report_.witnesses.push_back(std::move(w)); }
    void output(std::string path) { report_.outputs.push_back(std::move(path)); }

    void verdict(bool verified, const std::string& yes, const std::string& no)
    {
        report_.verdict = verified ? yes : no;
        report_.exit_code = verified ? kVerified : kConclusionFailed;
    }

private:
    const Options& o_;
    RunReport report_;
};

std::string describe_labelled(const Labelling& l, const Simplex& s)
{
    std::string text = l.complex().format(s) + " labels ";
    for (std::size_t i = 0; i < s.size(); ++i)
        text += (i ? "," : "") + std::to_string(l[s[i]]);
    return text;
}

std::optional<Simplex> facet_labelled_by(const Labelling& l, const Signature& s, bool either_sign)
{
    auto wanted = s.labels();
    auto opposite = s.negated().labels();
    std::sort(wanted.begin(), wanted.end());
    std::sort(opposite.begin(), opposite.end());
    for (const auto& f : l.complex().facets()) {
        std::vector<int> got;
        for (VertexId v : f)
            got.push_back(l[v]);
        std::sort(got.begin(), got.end());
        if (got == wanted || (either_sign && got == opposite))
            return f;
    }
    return std::nullopt;
}

struct ClosedInput {
    Complex complex;
    Involution involution;
    std::optional<Labelling> labelling;
};

ClosedInput refine_closed(ClosedInput in, int depth)
{
    for (int i = 0; i < depth; ++i) {
        const auto sd = barycentric_subdivision(in.complex);
        in.involution = lift_involution(in.involution, sd);
        if (in.labelling)
            in.labelling = lift_labelling(*in.labelling, sd);
        in.complex = sd.complex;
    }
    return in;
}

void require_no_refine(const Options& o, const std::string& command)
{
    if (o.refine != 0)
        throw Error(ErrorCode::InvalidArgument, "--refine is not supported by '" + command + "'");
}

void complex_facts(Session& s, const Complex& c)
{
    s.fact("dimension", c.dimension());
    s.fact("vertices", c.num_vertices());
    s.fact("facets", c.facets().size());
}

void cmd_tucker(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    auto [a, boundary] = s.symmetry(c);
    Labelling l = s.labelling(c);
    TuckerResult result;
    if (boundary) {
        require_no_refine(o, "verify tucker with a boundary");
        complex_facts(s, c);
        result = verify_tucker_with_boundary(l, a);
    } else {
        auto in = refine_closed({c, a, l}, o.refine);
        s.fact("refinements", o.refine);
        complex_facts(s, in.complex);
        result = verify_tucker(*in.labelling, in.involution);
        l = *in.labelling;
    }
    s.fact("boundary_case", boundary);
    s.fact("complementary_edges", result.complementary_count);
    if (result.edge)
        s.witness("complementary edge " + describe_labelled(l, *result.edge));
    else
        s.witness("no complementary edge: " + result.counterexample);
    s.verdict(result.edge.has_value(), "verified: complementary edge found", "failed: no complementary edge");
}

void cmd_shashkin(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    auto [a, boundary] = s.symmetry(c);
    Labelling l = s.labelling(c);
    ShashkinReport r;
    if (boundary) {
        require_no_refine(o, "verify shashkin with a boundary");
        complex_facts(s, c);
        s.fact("boundary_antipodal", is_boundary_antipodal(l, a).antipodal);
        r = shashkin_report_with_boundary(l, a);
    } else {
        auto in = refine_closed({c, a, l}, o.refine);
        s.fact("refinements", o.refine);
        complex_facts(s, in.complex);
        s.fact("antipodal", is_antipodal_labelling(*in.labelling, in.involution).antipodal);
        l = *in.labelling;
        r = shashkin_report(l, in.involution);
    }
    s.fact("boundary_case", boundary);
    s.fact("complementary_edges", r.complementary.size());
    s.fact("all_odd", r.all_odd);
    if (r.degree) {
        s.fact("degree_consistent", r.degree->consistent);
        s.fact("degree_mod2", r.degree->degree_mod2);
        s.fact("parity_matches_degree", r.parity_matches_degree);
    }
    std::optional<Signature> only;
    if (!o.signature.empty()) {
        only = Signature::parse(o.signature);
        s.fact("signature", only->to_string());
        s.fact("signature_count", boundary ? count_signature_pair(l, *only) : count_signature(l, *only));
    }
    for (const auto& row : r.rows)
        s.count(row.signature.to_string(), row.count);
    if (!r.complementary.empty()) {
        for (const auto& e : r.complementary)
            s.witness("complementary edge " + describe_labelled(l, e));
        s.verdict(true, "verified: complementary edge found (the counting hypothesis fails)", "");
        return;
    }
    for (const auto& row : r.rows) {
        if (auto f = facet_labelled_by(l, row.signature, boundary))
            s.witness(row.signature.to_string() + ": " + describe_labelled(l, *f));
        else
            s.witness(row.signature.to_string() + ": no facet");
    }
    s.verdict(r.holds, "verified: every signature count is odd", "failed: some signature count is even");
}

void cmd_kyfan(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    Involution a = s.closed_involution(c);
    auto in = refine_closed({c, a, s.labelling(c)}, o.refine);
    const Labelling& l = *in.labelling;
    s.fact("refinements", o.refine);
    complex_facts(s, in.complex);
    const auto antipodality = is_antipodal_labelling(l, in.involution);
    if (!antipodality.antipodal)
        throw Error(ErrorCode::PreconditionViolated,
                    "labelling is not antipodal at " + in.complex.name(*antipodality.witness));
    const int n = o.labels > 0 ? o.labels : l.max_abs();
    if (l.max_abs() > n)
        throw Error(ErrorCode::LabelOutOfRange, "labels exceed Pi_" + std::to_string(n));
    s.fact("alphabet", n);
    const auto complementary = complementary_edges(l);
    s.fact("complementary_edges", complementary.size());
    const AlternatingCount count = count_alternating(l, n);
    s.fact("alphabet_large_enough", count.alphabet_large_enough);
    s.fact("alternating_total", count.total);
    for (const auto& [sequence, value] : count.per_sequence) {
        std::string key;
        for (std::size_t i = 0; i < sequence.size(); ++i)
            key += (i ? "," : "") + std::to_string(i % 2 ? -sequence[i] : sequence[i]);
        s.count(key, value);
    }
    if (!complementary.empty()) {
        s.witness("complementary edge " + describe_labelled(l, complementary.front()));
        s.verdict(true, "verified: complementary edge found", "");
        return;
    }
    for (const auto& [sequence, value] : count.per_sequence) {
        if (value % 2 == 0)
            continue;
        std::vector<int> labels;
        for (std::size_t i = 0; i < sequence.size(); ++i)
            labels.push_back(i % 2 ? -sequence[i] : sequence[i]);
        for (const auto& f : in.complex.facets()) {
            std::vector<int> got;
            for (VertexId v : f)
                got.push_back(l[v]);
            std::sort(got.begin(), got.end());
            auto want = labels;
            std::sort(want.begin(), want.end());
            if (got == want) {
                s.witness("alternating facet " + describe_labelled(l, f));
                break;
            }
        }
        break;
    }
    s.verdict(count.total_odd, "verified: odd number of alternating facets",
              "failed: even number of alternating facets");
}

void cmd_odd_map(Session& s, const Options& o)
{
    require_no_refine(o, "verify odd-map");
    Complex src = s.complex("source", o.source);
    Complex dst = s.complex("target", o.target);
    SimplicialMap f = parse_map(s.load("map", o.map), src, dst, o.map);
    Involution a = parse_involution(s.load("source-involution", o.source_involution), src, o.source_involution);
    Involution b = parse_involution(s.load("target-involution", o.target_involution), dst, o.target_involution);
    const auto verdict = verify_odd_mapping(f, a, b);
    s.fact("antipodal", true);
    s.fact("degree_consistent", verdict.degree.consistent);
    s.fact("degree_mod2", verdict.degree.degree_mod2);
    for (std::size_t i = 0; i < dst.facets().size(); ++i)
        s.count(dst.format(dst.facets()[i]), verdict.degree.preimage_counts[i]);
    for (const auto& t : dst.facets()) {
        for (const auto& sf : src.facets()) {
            if (f.image(sf) == t) {
                s.witness("facet " + src.format(sf) + " -> " + dst.format(t));
                break;
            }
        }
        break;
    }
    s.verdict(verdict.holds, "verified: odd degree", "failed: even or inconsistent degree");
}

std::string memberships(const std::vector<ClosedSet>& sets, VertexId v)
{
    std::string text;
    for (const auto& set : sets)
        if (set.contains(v))
            text += (text.empty() ? "" : ",") + set.name();
    return "{" + text + "}";
}

void cmd_cover(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    Involution a = s.closed_involution(c);
    Cover cover = parse_cover(s.load("cover", o.cover), c, o.cover);
    complex_facts(s, c);
    s.fact("sets", cover.sets.size());

    if (o.k != 0) {
        if (o.refine != 0)
            throw Error(ErrorCode::InvalidArgument, "with --k use --max-refine instead of --refine");
        s.fact("k", o.k);
        try {
            const FanWitness w = verify_fan_cover_theorem(c, a, cover.sets, o.k, o.max_refine);
            const bool valid = is_fan_witness(w.sets, w.involution, o.k, w.vertex);
            s.fact("refinements", w.refinements);
            s.fact("flipped", w.flipped);
            s.fact("found_near_rainbow", w.vertex_found_near_rainbow);
            s.fact("witness_revalidated", valid);
            s.witness("rainbow facet " + w.complex.format(w.rainbow_facet));
            s.witness("x = " + w.complex.name(w.vertex) + " in " + memberships(w.sets, w.vertex) + ", A(x) = " +
                      w.complex.name(w.involution(w.vertex)) + " in " +
                      memberships(w.sets, w.involution(w.vertex)));
            s.verdict(valid, "verified: fan witness found", "failed: witness did not revalidate");
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NoWitnessAtThisResolution)
                throw;
            s.witness(e.what());
            s.verdict(false, "", "failed: no witness at this resolution");
        }
        return;
    }

    PairedCover paired = paired_view(cover);
    for (int i = 0; i < o.refine; ++i) {
        const auto sd = barycentric_subdivision(paired.complex);
        a = lift_involution(a, sd);
        paired = lift_paired_cover(paired, sd);
    }
    s.fact("refinements", o.refine);
    s.fact("paired_by_involution", is_paired_by(paired, a));
    const int d = paired.complex.dimension();
    if (paired.size() != d + 1)
        throw Error(ErrorCode::SignatureDimensionMismatch,
                    "need " + std::to_string(d + 1) + " pairs, cover declares " + std::to_string(paired.size()));
    std::vector<Signature> signatures;
    if (!o.signature.empty())
        signatures.push_back(Signature::parse(o.signature));
    else
        for (std::uint32_t mask = 0; mask < (1u << (d + 1)); ++mask)
            signatures.push_back(Signature::from_mask(d + 1, mask));

    const auto members = paired.members();
    std::size_t found = 0;
    for (const auto& sig : signatures) {
        const RainbowResult r = find_rainbow_simplex(paired, sig);
        s.count(sig.to_string(), r.facet ? 1 : 0);
        if (!r.facet) {
            s.witness(sig.to_string() + ": none (" + r.diagnostic + ")");
            continue;
        }
        bool valid = true;
        std::string text = sig.to_string() + ": " + paired.complex.format(*r.facet) + " via";
        for (std::size_t i = 0; i < r.facet->size(); ++i) {
            valid = valid && paired.at(r.assignment[i]).contains((*r.facet)[i]);
            text += " " + paired.complex.name((*r.facet)[i]) + "->" + paired.at(r.assignment[i]).name();
        }
        if (valid)
            ++found;
        s.witness(text);
    }
    s.fact("witnessed", found);
    s.verdict(found == signatures.size(), "verified: rainbow facet for every signature",
              "failed: some signature has no rainbow facet");
}

void cmd_ls(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    Involution a = s.closed_involution(c);
    Cover cover = parse_cover(s.load("cover", o.cover), c, o.cover);
    std::vector<ClosedSet> sets = cover.sets;
    for (int i = 0; i < o.refine; ++i) {
        const auto sd = barycentric_subdivision(c);
        a = lift_involution(a, sd);
        for (auto& set : sets)
            set = lift_set(set, sd);
        c = sd.complex;
    }
    s.fact("refinements", o.refine);
    complex_facts(s, c);
    s.fact("sets", sets.size());
    const LsReport r = ls_corollary_check(c, a, sets);
    s.fact("covers", r.violation);
    if (r.uncovered_facet)
        s.witness("uncovered facet " + c.format(*r.uncovered_facet));
    else
        s.witness("every facet lies in some set");
    s.verdict(!r.violation, "verified: the sets do not cover", "failed: antipode-free sets cover the complex");
}

void cmd_count(Session& s, const Options& o)
{
    Complex c = s.complex("complex", o.complex);
    ClosedInput in{c, Involution{}, s.labelling(c)};
    for (int i = 0; i < o.refine; ++i) {
        const auto sd = barycentric_subdivision(in.complex);
        in.labelling = lift_labelling(*in.labelling, sd);
        in.complex = sd.complex;
    }
    s.fact("refinements", o.refine);
    complex_facts(s, in.complex);
    const Labelling& l = *in.labelling;
    s.fact("complementary_edges", complementary_edges(l).size());
    if (!o.signature.empty()) {
        const auto sig = Signature::parse(o.signature);
        s.count(sig.to_string(), count_signature(l, sig));
        if (auto f = facet_labelled_by(l, sig, false))
            s.witness(sig.to_string() + ": " + describe_labelled(l, *f));
    } else {
        const auto table = signature_table(l);
        for (std::uint32_t mask = 0; mask < table.size(); ++mask)
            s.count(Signature::from_mask(in.complex.dimension() + 1, mask).to_string(), table[mask]);
    }
    s.verdict(true, "report", "");
}

void cmd_degree(Session& s, const Options& o)
{
    require_no_refine(o, "degree");
    Complex src = s.complex("source", o.source);
    Complex dst = s.complex("target", o.target);
    SimplicialMap f = parse_map(s.load("map", o.map), src, dst, o.map);
    const DegreeReport r = degree_mod2(f);
    s.fact("consistent", r.consistent);
    s.fact("degree_mod2", r.degree_mod2);
    for (std::size_t i = 0; i < dst.facets().size(); ++i)
        s.count(dst.format(dst.facets()[i]), r.preimage_counts[i]);
    s.verdict(true, "report", "");
}

Involution rebuild_by_names(const Involution& a, const Complex& target)
{
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [v, w] : a.orbit_pairs())
        pairs.emplace_back(a.complex().name(v), a.complex().name(w));
    return Involution::from_pairs(target, pairs);
}

void cmd_double(Session& s, const Options& o)
{
    require_no_refine(o, "double");
    if (o.out.empty())
        throw Error(ErrorCode::InvalidArgument, "--out PREFIX is required");
    Complex m = s.complex("complex", o.complex);
    if (o.boundary_involution.empty())
        throw Error(ErrorCode::InvalidArgument, "--boundary-involution is required");
    Involution b = parse_involution(s.load("boundary-involution", o.boundary_involution), boundary_complex(m),
                                    o.boundary_involution);
    std::optional<Labelling> l;
    if (!o.labelling.empty())
        l = s.labelling(m);
    if (o.make_full) {
        const auto refinement = make_boundary_full(m);
        s.fact("chords_subdivided", refinement.carriers.size());
        if (l)
            l = extend_labelling(*l, refinement);
        m = refinement.complex;
        b = rebuild_by_names(b, boundary_complex(m));
    }
    const DoublingResult d = double_complex(m, b);
    const auto check = manifold_check(d.doubled);
    complex_facts(s, d.doubled);
    s.fact("euler_characteristic", euler_characteristic(d.doubled));
    s.fact("closed", check.is_closed_pseudomanifold);
    s.fact("strongly_connected", check.is_strongly_connected);
    s.fact("involution_free", is_free(d.involution).is_free);
    s.witness("copy of " + m.name(0) + ": " + d.doubled.name(d.inclusion[0]) + " <-> " +
              d.doubled.name(d.involution(d.inclusion[0])));
    write_text_file(o.out + ".cx", write_complex(d.doubled));
    s.output(o.out + ".cx");
    write_text_file(o.out + ".inv", write_involution(d.involution));
    s.output(o.out + ".inv");
    if (l) {
        write_text_file(o.out + ".lab", write_labelling(double_labelling(*l, d, b)));
        s.output(o.out + ".lab");
    }
    s.verdict(true, "done", "");
}

void cmd_render(Session& s, const Options& o)
{
    require_no_refine(o, "render");
    if (o.out.empty())
        throw Error(ErrorCode::InvalidArgument, "--out FILE.svg is required");
    Complex c = s.complex("complex", o.complex);
    std::optional<Labelling> l;
    if (!o.labelling.empty())
        l = s.labelling(c);
    Layout layout;
    if (!o.layout.empty())
        layout = parse_layout(s.load("layout", o.layout), o.layout);
    const std::string svg = render_svg(c, l, layout);
    complex_facts(s, c);
    if (l)
        s.fact("complementary_edges", complementary_edges(*l).size());
    write_text_file(o.out, svg);
    s.output(o.out);
    s.verdict(true, "done", "");
}

void cmd_gen(Session& s, const Options& o)
{
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(o.gen_kind);
    spec.dimension = o.dim;
    spec.k = o.disk_k;
    spec.size = o.size;
    spec.refine = o.refine;
    Generated g = generate(spec);
    const std::string prefix = o.out.empty() ? o.gen_kind : o.out;

    if (o.random_labels > 0 && o.free_labels > 0)
        throw Error(ErrorCode::InvalidArgument, "choose one of --random-labels and --free-labels");
    if ((o.random_labels > 0 || o.free_labels > 0) && g.involution_on_boundary)
        throw Error(ErrorCode::InvalidArgument, "generated labellings need a closed generator");
    if (o.random_labels > 0) {
        g.labelling = random_antipodal_labelling(g.involution, o.random_labels, o.seed);
        s.fact("seed", o.seed);
    } else if (o.free_labels > 0) {
        const auto r = search_complementary_free(g.involution, o.free_labels, o.seed, o.budget);
        s.fact("seed", o.seed);
        s.fact("search_steps", r.steps);
        if (r.status != SearchStatus::Found) {
            s.fact("search", r.status == SearchStatus::Exhausted ? "exhausted" : "budget exceeded");
            g.labelling.reset();
        } else {
            s.fact("search", "found");
            g.labelling = r.labelling;
        }
    }

    complex_facts(s, g.complex);
    s.fact("euler_characteristic", euler_characteristic(g.complex));
    write_text_file(prefix + ".cx", write_complex(g.complex));
    s.output(prefix + ".cx");
    write_text_file(prefix + ".inv", write_involution(g.involution));
    s.output(prefix + ".inv");
    if (g.labelling) {
        write_text_file(prefix + ".lab", write_labelling(*g.labelling));
        s.output(prefix + ".lab");
    }
    if (!g.layout.empty()) {
        write_text_file(prefix + ".lay", write_layout(g.layout));
        s.output(prefix + ".lay");
    }
    const bool failed_search = o.free_labels > 0 && !g.labelling;
    s.verdict(!failed_search, "done", "failed: no complementary-free labelling found");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Combinatorial Borsuk-Ulam verifiers for triangulations with free involutions.", "bulab"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", o.seed, "seed for random labellings and searches");
    app.add_option("--refine", o.refine, "barycentric subdivisions applied before the command");
    app.add_option("--budget", o.budget, "assignment budget for labelling searches");
    app.add_flag("--json", o.json, "print the report as JSON");
    app.add_flag("--timing", o.timing, "include wall-clock time in the report");

    auto add_complex = [&](CLI::App* c) { c->add_option("--complex", o.complex, "complex file")->required(); };
    auto add_symmetry = [&](CLI::App* c) {
        c->add_option("--involution", o.involution, "involution of the complex");
        c->add_option("--boundary-involution", o.boundary_involution, "involution of the boundary");
    };

    auto* gen = app.add_subcommand("gen", "write generated complexes, involutions, labellings and layouts");
    gen->add_option("kind", o.gen_kind, "crosspolytope | fig2 | disk | punctured-torus | genus2")->required();
    gen->add_option("--dim", o.dim, "sphere dimension (crosspolytope)");
    gen->add_option("--k", o.disk_k, "rim of 2k edges (disk)");
    gen->add_option("--size", o.size, "grid size (punctured-torus)");
    gen->add_option("--random-labels", o.random_labels, "random antipodal labelling into Pi_n");
    gen->add_option("--free-labels", o.free_labels, "searched complementary-free labelling into Pi_n");
    gen->add_option("--out", o.out, "output prefix (default: the kind)");

    auto* verify = app.add_subcommand("verify", "run a verifier on given inputs");
    verify->require_subcommand(1);
    auto* tucker = verify->add_subcommand("tucker", "complementary edge for labellings into Pi_d");
    add_complex(tucker);
    add_symmetry(tucker);
    tucker->add_option("--labelling", o.labelling)->required();
    auto* shashkin = verify->add_subcommand("shashkin", "odd signature counts");
    add_complex(shashkin);
    add_symmetry(shashkin);
    shashkin->add_option("--labelling", o.labelling)->required();
    shashkin->add_option("--signature", o.signature, "also report one signature, e.g. 1,-2,3");
    auto* kyfan = verify->add_subcommand("kyfan", "odd number of alternating facets");
    add_complex(kyfan);
    add_symmetry(kyfan);
    kyfan->add_option("--labelling", o.labelling)->required();
    kyfan->add_option("--labels", o.labels, "alphabet size n (default: largest label)");
    auto* odd = verify->add_subcommand("odd-map", "antipodal maps have odd degree");
    odd->add_option("--source", o.source)->required();
    odd->add_option("--target", o.target)->required();
    odd->add_option("--map", o.map)->required();
    odd->add_option("--source-involution", o.source_involution)->required();
    odd->add_option("--target-involution", o.target_involution)->required();
    auto* cover = verify->add_subcommand("cover", "rainbow facets of a paired cover, or the fan witness with --k");
    add_complex(cover);
    add_symmetry(cover);
    cover->add_option("--cover", o.cover)->required();
    cover->add_option("--signature", o.signature, "one signature instead of all");
    cover->add_option("--k", o.k, "fan statement with C_1..C_k against C_{k+1}..C_{d+2}");
    cover->add_option("--max-refine", o.max_refine, "subdivisions allowed while searching the fan witness");
    auto* ls = verify->add_subcommand("ls", "d+1 antipode-free closed sets do not cover");
    add_complex(ls);
    add_symmetry(ls);
    ls->add_option("--cover", o.cover)->required();

    auto* count = app.add_subcommand("count", "signature counts of a labelling");
    add_complex(count);
    count->add_option("--labelling", o.labelling)->required();
    count->add_option("--signature", o.signature);

    auto* degree = app.add_subcommand("degree", "mod-2 degree of a simplicial map");
    degree->add_option("--source", o.source)->required();
    degree->add_option("--target", o.target)->required();
    degree->add_option("--map", o.map)->required();

    auto* dbl = app.add_subcommand("double", "glue two copies along the boundary");
    add_complex(dbl);
    dbl->add_option("--boundary-involution", o.boundary_involution)->required();
    dbl->add_option("--labelling", o.labelling, "labelling to double as L / -L");
    dbl->add_flag("--make-full", o.make_full, "subdivide chords first so the boundary is a full subcomplex");
    dbl->add_option("--out", o.out, "output prefix")->required();

    auto* render = app.add_subcommand("render", "SVG drawing of a complex of dimension <= 2");
    add_complex(render);
    render->add_option("--labelling", o.labelling);
    render->add_option("--layout", o.layout, "vertex positions");
    render->add_option("--out", o.out, "SVG file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kVerified : kInputError;
    }

    std::string command;
    for (const CLI::App* sub = app.get_subcommands().front();; ) {
        command += (command.empty() ? "" : " ") + sub->get_name();
        const auto nested = sub->get_subcommands();
        if (nested.empty())
            break;
        sub = nested.front();
    }

    Session session(o);
    session.report().command = command;
    const auto start = std::chrono::steady_clock::now();
    try {
        if (command == "gen")
            cmd_gen(session, o);
        else if (command == "verify tucker")
            cmd_tucker(session, o);
        else if (command == "verify shashkin")
            cmd_shashkin(session, o);
        else if (command == "verify kyfan")
            cmd_kyfan(session, o);
        else if (command == "verify odd-map")
            cmd_odd_map(session, o);
        else if (command == "verify cover")
            cmd_cover(session, o);
        else if (command == "verify ls")
            cmd_ls(session, o);
        else if (command == "count")
            cmd_count(session, o);
        else if (command == "degree")
            cmd_degree(session, o);
        else if (command == "double")
            cmd_double(session, o);
        else if (command == "render")
            cmd_render(session, o);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    RunReport& report = session.report();
    if (o.timing)
        report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (o.json)
        out << report.to_json().dump(2) << "\n";
    else
        out << report.to_text();
    return report.exit_code;
}

} // namespace bulab::cli
