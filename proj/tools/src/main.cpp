#include "commands.hpp"

#include <pka/errors.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

using namespace pka;
using namespace pka::cli;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

auto functor_option(CLI::App &cmd, std::string &value) -> void
{
    cmd.add_option("--functor,-f", value, "s, t, c, tp or cp")->required();
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Finite partially additive Kleene algebras: checking, constructions, completions, adjunctions"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::size_t max_carrier = 0;
    std::uint64_t budget = 0;
    bool json = false;
    std::string output;
    app.add_option("--max-carrier", max_carrier, "host size limit for ideal enumeration; carrier cap for generated algebras");
    app.add_option("--budget", budget, "search budget (assignments for hom search, candidate maps for the probe)");
    app.add_flag("--deep-partitions", g.deep_partitions, "check partition-associativity over all set partitions");
    app.add_flag("--force", g.force, "run constructions whose precondition fails");
    app.add_flag("--strict", g.strict, "also check the converse of guarded associativity");
    app.add_flag("--json", json, "print the run report as JSON");
    app.add_option("--output,-o", output, "write the produced file here instead of stdout");

    std::string path, other, functor, monoid, states, omega, src, tgt;
    std::size_t maxlen = 2, order = 2;
    bool total = false, literal = false;
    std::vector<std::string> hosts, targets;

    auto *check = app.add_subcommand("check", "verify the axioms of a pka, ps, cs or monoid file");
    check->add_option("file", path)->required();
    check->add_flag("--total", total, "require a total + (pka) or a total sum (ps)");

    auto *generate = app.add_subcommand("generate", "write a constructed algebra");
    generate->require_subcommand(1);
    auto *gen_ext = generate->add_subcommand("monoid-ext", "extension of a commutative monoid by 0 and top");
    gen_ext->add_option("--monoid", monoid)->required();
    gen_ext->add_flag("--literal", literal, "use the star table 0* = 0, b* = top");
    auto *gen_cyclic = generate->add_subcommand("cyclic", "the cyclic monoid of the given order");
    gen_cyclic->add_option("--order", order)->required();
    auto *gen_pfn = generate->add_subcommand("pfn", "sparsely functional string sets");
    gen_pfn->add_option("--states", states, "comma-separated state names")->required();
    gen_pfn->add_option("--omega", omega, "comma-separated subset of the states")->required();
    gen_pfn->add_option("--maxlen", maxlen);
    auto *gen_top = generate->add_subcommand("adjoin-top", "total the sum by a new top element");
    gen_top->add_option("file", path)->required();

    auto *comp = app.add_subcommand("complete", "apply a completion functor");
    functor_option(*comp, functor);
    comp->add_option("file", path)->required();

    auto *ideals = app.add_subcommand("ideals", "list the star-ideals of a pka (or ideals of a ps)");
    ideals->add_option("file", path)->required();

    auto *adj = app.add_subcommand("adjoint-test", "compare Hom(F K, X) with Hom(K, U X)");
    functor_option(*adj, functor);
    adj->add_option("--src", src)->required();
    adj->add_option("--tgt", tgt)->required();

    auto *iso = app.add_subcommand("iso-test", "C'(T(K)) against T'(C(K)), or two given files");
    iso->add_option("file", path)->required();
    iso->add_option("other", other);

    auto *probe = app.add_subcommand("probe-universality", "look for a hom that does not factor through adjoin-top");
    probe->add_option("--host", hosts, "host pka files (default: built-in corpus)");
    probe->add_option("--target", targets, "total star-continuous target files (default: built-in corpus)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }
    if (app.count("--max-carrier"))
        g.max_carrier = max_carrier;
    if (app.count("--budget"))
        g.budget = budget;

    auto split = [](const std::string &text) {
        std::vector<std::string> out;
        std::string item;
        for (char c : text + ",") {
            if (c == ',') {
                if (!item.empty())
                    out.push_back(item);
                item.clear();
            } else {
                item += c;
            }
        }
        return out;
    };

    const auto start = std::chrono::steady_clock::now();
    CommandResult result;
    try {
        if (*check)
            result = cmd_check(path, total, g);
        else if (*gen_ext)
            result = cmd_generate_monoid_ext(monoid, literal, g);
        else if (*gen_cyclic)
            result = cmd_generate_cyclic(order, g);
        else if (*gen_pfn)
            result = cmd_generate_pfn(split(states), split(omega), maxlen, g);
        else if (*gen_top)
            result = cmd_generate_adjoin_top(path, g);
        else if (*comp)
            result = cmd_complete(path, parse_functor(functor), g);
        else if (*ideals)
            result = cmd_ideals(path, g);
        else if (*adj)
            result = cmd_adjoint_test(parse_functor(functor), src, tgt, g);
        else if (*iso)
            result = cmd_iso_test(path, other.empty() ? std::nullopt : std::optional<std::filesystem::path>(other), g);
        else if (*probe)
            result = cmd_probe({hosts.begin(), hosts.end()}, {targets.begin(), targets.end()}, g);
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        if (auto hint = guidance(e.kind()); !hint.empty())
            std::cerr << "hint: " << hint << '\n';
        const bool usage = e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::KindMismatch;
        return usage ? kExitUsage : kExitFail;
    }
    result.report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    // The report goes to stdout unless the produced file does.
    std::ostream *report_stream = &std::cout;
    if (!result.artifact.empty()) {
        if (output.empty()) {
            std::cout << result.artifact;
            report_stream = &std::cerr;
        } else {
            std::ofstream file(output);
            if (!file) {
                std::cerr << "error: cannot write " << output << '\n';
                return kExitUsage;
            }
            file << result.artifact;
        }
    }
    if (json)
        *report_stream << result.report.to_json().dump(2) << '\n';
    else
        *report_stream << result.report.to_text();
    return result.report.pass() ? kExitPass : kExitFail;
}
