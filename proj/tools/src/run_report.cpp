#include "run_report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace pka::cli {

auto fnv1a64(std::string_view bytes) -> std::uint64_t
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

auto hex_digest(std::string_view bytes) -> std::string
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

auto RunReport::add_input(std::string name, std::string_view bytes) -> void
{
    digests.emplace_back(std::move(name), hex_digest(bytes));
}

auto RunReport::add(std::string check, bool ok, std::vector<std::string> details) -> void
{
    outcomes.push_back(Outcome{std::move(check), ok, std::move(details)});
}

auto RunReport::add(std::string check, const AxiomReport &report) -> void
{
    std::vector<std::string> details;
    for (const auto &v : report.violations())
        details.push_back("[" + v.axiom + "] " + v.message);
    if (report.failure_count() > report.violations().size())
        details.push_back(std::to_string(report.failure_count()) + " failures in total");
    for (const auto &n : report.notes())
        details.push_back("note: " + n);
    add(std::move(check), report.pass(), std::move(details));
}

auto RunReport::pass() const -> bool
{
    return std::all_of(outcomes.begin(), outcomes.end(), [](const Outcome &o) { return o.pass; });
}

auto RunReport::to_text() const -> std::string
{
    std::ostringstream out;
    out << "run " << subcommand << '\n';
    for (const auto &[name, digest] : digests)
        out << "input " << name << " fnv1a64=" << digest << '\n';
    for (const auto &o : outcomes) {
        out << (o.pass ? "pass " : "FAIL ") << o.check << '\n';
        for (const auto &d : o.details)
            out << "  " << d << '\n';
    }
    for (const auto &n : notes)
        out << "note " << n << '\n';
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.6f", wall_seconds);
    out << "wall " << wall << "s\n";
    out << "result " << (pass() ? "pass" : "fail") << '\n';
    return out.str();
}

auto RunReport::to_json() const -> nlohmann::json
{
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["inputs"] = nlohmann::json::array();
    for (const auto &[name, digest] : digests)
        j["inputs"].push_back({{"name", name}, {"fnv1a64", digest}});
    j["outcomes"] = nlohmann::json::array();
    for (const auto &o : outcomes)
        j["outcomes"].push_back({{"check", o.check}, {"pass", o.pass}, {"details", o.details}});
    j["notes"] = notes;
    j["wall_seconds"] = wall_seconds;
    j["pass"] = pass();
    return j;
}

} // namespace pka::cli
