#include "commands.hpp"

#include <pka/constructions.hpp>
#include <pka/corpus.hpp>
#include <pka/errors.hpp>
#include <pka/homsearch.hpp>
#include <pka/text_format.hpp>
#include <pka/verify.hpp>

#include <sstream>
#include <tuple>

namespace pka::cli {

namespace {

struct Input {
    std::string name;
    std::string text;
    Document document;
};

auto load(const std::filesystem::path &path, RunReport &report) -> Input
{
    auto text = read_text_file(path);
    report.add_input(path.string(), text);
    auto doc = parse_document(text);
    return Input{path.string(), std::move(text), std::move(doc)};
}

auto load_pka(const std::filesystem::path &path, RunReport &report) -> FinitePKA
{
    auto in = load(path, report);
    if (auto *k = std::get_if<FinitePKA>(&in.document))
        return *k;
    throw Error(ErrorKind::KindMismatch, path.string() + " is not a pka file");
}

auto load_structure(const std::filesystem::path &path, RunReport &report) -> Structure
{
    auto in = load(path, report);
    if (auto *k = std::get_if<FinitePKA>(&in.document))
        return *k;
    if (auto *s = std::get_if<FinitePS>(&in.document))
        return *s;
    throw Error(ErrorKind::KindMismatch, path.string() + " is a monoid, not a pka/ps/cs file");
}

auto verify_options(const GlobalOptions &g) -> VerifyOptions
{
    VerifyOptions o;
    o.strict_associativity = g.strict;
    return o;
}

auto ps_options(const GlobalOptions &g) -> PsVerifyOptions
{
    PsVerifyOptions o;
    o.deep_partitions = g.deep_partitions;
    return o;
}

auto completion_options(const GlobalOptions &g) -> CompletionOptions
{
    CompletionOptions o;
    o.force = g.force;
    if (g.max_carrier)
        o.host_limit = *g.max_carrier;
    o.ps = ps_options(g);
    return o;
}

auto search_options(const GlobalOptions &g) -> SearchOptions
{
    SearchOptions o;
    if (g.budget)
        o.budget = *g.budget;
    return o;
}

auto print_structure(const Structure &s) -> std::string
{
    if (const auto *k = std::get_if<FinitePKA>(&s))
        return print_pka(*k);
    return print_ps(std::get<FinitePS>(s));
}

auto describe_set(const Structure &s, ElementSet set) -> std::string
{
    std::string out = "{";
    for (auto e : set) {
        if (out.size() > 1)
            out += ',';
        out += structure_label(s, e);
    }
    return out + "}";
}

auto generated(std::string what, const FinitePKA &k, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "generate " + std::move(what);
    r.report.add("verify_pka", verify_pka(k, verify_options(g)));
    r.report.notes.push_back(k.name() + ": " + std::to_string(k.size()) + " elements" + (k.is_total() ? ", total" : ""));
    r.artifact = print_pka(k);
    return r;
}

} // namespace

auto cmd_check(const std::filesystem::path &path, bool require_total, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "check";
    auto in = load(path, r.report);
    if (const auto *k = std::get_if<FinitePKA>(&in.document)) {
        r.report.add(require_total ? "verify_total_ka" : "verify_pka", require_total ? verify_total_ka(*k, verify_options(g)) : verify_pka(*k, verify_options(g)));
        r.report.add("verify_star_continuity", verify_star_continuity(*k, verify_options(g)));
        r.report.notes.push_back(k->name() + ": " + std::to_string(k->size()) + " elements" + (k->is_total() ? ", total" : ", partial"));
    } else if (const auto *s = std::get_if<FinitePS>(&in.document)) {
        if (require_total || s->is_total())
            r.report.add("verify_cs", verify_cs(*s, ps_options(g)));
        else
            r.report.add("verify_ps", verify_ps(*s, ps_options(g)));
        r.report.notes.push_back(s->name() + ": " + std::to_string(s->size()) + " elements");
    } else {
        const auto &m = std::get<CommutativeMonoid>(in.document);
        r.report.add("monoid", true);
        r.report.notes.push_back(m.name() + ": " + std::to_string(m.size()) + " elements");
    }
    return r;
}

auto cmd_generate_monoid_ext(const std::filesystem::path &monoid, bool literal, const GlobalOptions &g) -> CommandResult
{
    RunReport inputs;
    auto in = load(monoid, inputs);
    const auto *m = std::get_if<CommutativeMonoid>(&in.document);
    if (!m)
        throw Error(ErrorKind::KindMismatch, monoid.string() + " is not a monoid file");
    auto r = generated("monoid-ext", monoid_extension(*m, literal ? ExtensionStar::Literal : ExtensionStar::Corrected), g);
    r.report.digests = inputs.digests;
    return r;
}

auto cmd_generate_cyclic(std::size_t order, const GlobalOptions &) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "generate cyclic";
    auto m = cyclic_monoid(order);
    r.report.add("monoid", true);
    r.artifact = print_monoid(m);
    return r;
}

auto cmd_generate_pfn(const std::vector<std::string> &states, const std::vector<std::string> &omega, std::size_t maxlen, const GlobalOptions &g) -> CommandResult
{
    PfnOptions o;
    o.maxlen = maxlen;
    if (g.max_carrier)
        o.max_carrier = *g.max_carrier;
    auto pfn = pfn_algebra(StringContext(states, omega), o);
    auto r = generated("pfn", pfn.algebra, g);
    r.report.add("verify_star_continuity", verify_star_continuity(pfn.algebra, verify_options(g)));
    return r;
}

auto cmd_generate_adjoin_top(const std::filesystem::path &path, const GlobalOptions &g) -> CommandResult
{
    RunReport inputs;
    auto k = load_pka(path, inputs);
    auto r = generated("adjoin-top", adjoin_top(k), g);
    r.report.digests = inputs.digests;
    return r;
}

auto cmd_complete(const std::filesystem::path &path, Functor f, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "complete " + std::string(to_string(f));
    auto host = load_structure(path, r.report);
    auto result = complete(f, host, completion_options(g));
    r.report.add("verify " + std::string(to_string(f)) + "(" + structure_name(host) + ")", result.report);
    // C and C' change the kind of structure, so there is no hom check for their unit.
    if (result.host.index() == result.completed.index())
        r.report.add("unit homomorphism", is_homomorphism(result.unit, result.host, result.completed, host_kind(f)));
    for (const auto &line : result.log)
        r.report.notes.push_back(line);

    std::ostringstream out;
    out << "# unit: " << structure_name(result.host) << " -> " << structure_name(result.completed) << '\n';
    for (std::size_t x = 0; x < result.unit.size(); ++x)
        out << "#   " << structure_label(result.host, static_cast<Elem>(x)) << " -> " << structure_label(result.completed, result.unit[x]) << '\n';
    out << "# parts:\n";
    for (std::size_t i = 0; i < result.parts.size(); ++i)
        out << "#   " << structure_label(result.completed, static_cast<Elem>(i)) << " = " << describe_set(result.host, result.parts[i]) << '\n';
    out << print_structure(result.completed);
    r.artifact = out.str();
    return r;
}

auto cmd_ideals(const std::filesystem::path &path, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "ideals";
    auto host = load_structure(path, r.report);
    std::ostringstream out;
    if (const auto *k = std::get_if<FinitePKA>(&host)) {
        const auto ideals = enumerate_star_ideals(*k, g.max_carrier.value_or(kDefaultIdealHostLimit));
        for (const auto &i : ideals)
            out << ideal_label(*k, i.members) << " members=" << describe_set(host, i.members) << " generators=" << describe_set(host, maximal_elements(*k, i.members)) << '\n';
        r.report.add("star ideals: " + std::to_string(ideals.size()), true);
    } else {
        const auto &s = std::get<FinitePS>(host);
        const auto ideals = enumerate_ps_ideals(s);
        for (auto i : ideals)
            out << ps_ideal_label(s, i) << " members=" << describe_set(host, i) << " generators=" << describe_set(host, ps_maximal_elements(s, i)) << '\n';
        r.report.add("ps ideals: " + std::to_string(ideals.size()), true);
    }
    r.artifact = out.str();
    return r;
}

auto cmd_adjoint_test(Functor f, const std::filesystem::path &src, const std::filesystem::path &tgt, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "adjoint-test " + std::string(to_string(f));
    auto host = load_structure(src, r.report);
    auto target = load_structure(tgt, r.report);
    auto fk = complete(f, host, completion_options(g));
    r.report.add("completion " + structure_name(fk.completed), fk.report);
    auto adj = check_adjunction(fk, target, search_options(g));
    r.report.add("|Hom(" + structure_name(fk.completed) + ", " + adj.target + ")| = " + std::to_string(adj.left_count) + ", |Hom(" + adj.host + ", U " + adj.target + ")| = " + std::to_string(adj.right_count),
        adj.left_count == adj.right_count);
    r.report.add("phi lands in host homs", adj.phi_lands);
    r.report.add("psi . phi = id", adj.psi_phi_identity);
    r.report.add("phi . psi = id", adj.phi_psi_identity);
    if (!adj.report.pass())
        r.report.add("adjunction details", adj.report);

    // Naturality against every endomorphism of the target and of the host.
    const auto opts = search_options(g);
    AxiomReport target_squares;
    for (const auto &h : enumerate_homs(target, target, result_kind(f), opts))
        target_squares.merge(check_naturality_target(fk, target, target, h, opts));
    r.report.add("naturality in the target", target_squares);
    AxiomReport source_squares;
    for (const auto &h : enumerate_homs(host, host, host_kind(f), opts))
        source_squares.merge(check_naturality_source(fk, fk, h, target, opts));
    r.report.add("naturality in the host", source_squares);
    return r;
}

auto cmd_iso_test(const std::filesystem::path &path, const std::optional<std::filesystem::path> &other, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "iso-test";
    auto [a, b, kind] = [&]() -> std::tuple<Structure, Structure, StructureKind> {
        if (other) {
            auto x = load_structure(path, r.report);
            auto y = load_structure(*other, r.report);
            const auto k = std::holds_alternative<FinitePKA>(x) ? StructureKind::PKA : StructureKind::PS;
            return {std::move(x), std::move(y), k};
        }
        auto k = load_pka(path, r.report);
        const auto opts = completion_options(g);
        auto ct = cs_from_ka(total_completion(k, opts).pka(), opts);
        r.report.add("verify " + ct.ps().name(), ct.report);
        auto c = ps_completion(k, opts);
        r.report.add("verify " + c.ps().name(), c.report);
        auto tc = cs_from_ps(c.ps(), opts);
        r.report.add("verify " + tc.ps().name(), tc.report);
        return {ct.completed, tc.completed, StructureKind::PS};
    }();
    auto iso = find_isomorphism(a, b, kind, search_options(g));
    r.report.add("isomorphism " + structure_name(a) + " ~ " + structure_name(b), iso.has_value(),
        iso ? std::vector<std::string>{} : std::vector<std::string>{"sizes " + std::to_string(structure_size(a)) + " and " + std::to_string(structure_size(b))});
    if (iso) {
        std::ostringstream out;
        for (std::size_t x = 0; x < iso->size(); ++x)
            out << structure_label(a, static_cast<Elem>(x)) << " -> " << structure_label(b, (*iso)[x]) << '\n';
        r.artifact = out.str();
    }
    return r;
}

auto cmd_probe(const std::vector<std::filesystem::path> &hosts, const std::vector<std::filesystem::path> &targets, const GlobalOptions &g) -> CommandResult
{
    CommandResult r;
    r.report.subcommand = "probe-universality";
    std::vector<FinitePKA> hs;
    std::vector<FinitePKA> ts;
    for (const auto &p : hosts)
        hs.push_back(load_pka(p, r.report));
    for (const auto &p : targets)
        ts.push_back(load_pka(p, r.report));
    if (hs.empty())
        hs = standard_corpus();
    if (ts.empty())
        ts = standard_corpus();
    const auto budget = g.budget.value_or(1'000'000);
    auto probe = probe_adjoin_top_nonuniversality(hs, ts, budget);
    r.report.notes = probe.log;
    r.report.notes.push_back("candidate maps tried: " + std::to_string(probe.candidates) + " of budget " + std::to_string(budget));
    if (probe.witness) {
        const auto &w = *probe.witness;
        std::vector<std::string> details{"host " + w.host.name() + ", target " + w.target.name(),
            "g = " + render_map(w.g, Structure{w.host}, Structure{w.target}),
            w.extended.name() + (verify_pka(w.extended).pass() ? " passes" : " fails") + " verify_pka"};
        for (const auto &line : w.refutations)
            details.push_back("refuted " + line);
        r.report.add("witness found", true, std::move(details));
        r.report.add("witness re-verified", verify_probe_witness(w));
    } else {
        r.report.notes.push_back(probe.budget_exhausted ? "NotFound: budget exhausted, inconclusive" : "NotFound: every hom factored");
        r.report.add("probe completed", true);
    }
    return r;
}

auto guidance(ErrorKind kind) -> std::string
{
    switch (kind) {
    case ErrorKind::StarDivergence: return "a product or star left the string fragment; raise --maxlen or use fewer states";
    case ErrorKind::CarrierOverflow: return "the carrier is too large; raise --max-carrier or use a smaller input";
    case ErrorKind::NotStarContinuous: return "the host is not star-continuous; complete with --functor s first, or pass --force";
    case ErrorKind::NotTotal: return "this construction needs a total +; complete with --functor t first";
    case ErrorKind::SearchBudgetExceeded: return "raise --budget";
    case ErrorKind::MalformedAlgebra: return "the input fails a precondition; pass --force to run the construction anyway";
    default: return {};
    }
}

} // namespace pka::cli
