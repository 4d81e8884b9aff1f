#pragma once

#include <pka/report.hpp>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pka::cli {

auto fnv1a64(std::string_view bytes) -> std::uint64_t;
auto hex_digest(std::string_view bytes) -> std::string;

struct Outcome {
    std::string check;
    bool pass = true;
    /// Violation lines or other evidence; printed indented under the outcome.
    std::vector<std::string> details;
};

/// What one invocation did. Exit status 0 iff every outcome passed.
struct RunReport {
    std::string subcommand;
    /// (input name, FNV-1a 64 of its bytes)
    std::vector<std::pair<std::string, std::string>> digests;
    std::vector<Outcome> outcomes;
    std::vector<std::string> notes;
    double wall_seconds = 0;

    auto add_input(std::string name, std::string_view bytes) -> void;
    auto add(std::string check, bool pass, std::vector<std::string> details = {}) -> void;
    /// One outcome from a verifier report: its violations and notes become details.
    auto add(std::string check, const AxiomReport &report) -> void;

    [[nodiscard]] auto pass() const -> bool;
    [[nodiscard]] auto to_text() const -> std::string;
    [[nodiscard]] auto to_json() const -> nlohmann::json;
};

} // namespace pka::cli
