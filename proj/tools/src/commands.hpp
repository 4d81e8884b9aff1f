#pragma once

#include "run_report.hpp"

#include <pka/completions.hpp>
#include <pka/errors.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pka::cli {

struct GlobalOptions {
    /// Host size limit for ideal enumeration and the carrier cap for generated algebras.
    std::optional<std::size_t> max_carrier;
    std::optional<std::uint64_t> budget;
    bool deep_partitions = false;
    bool force = false;
    bool strict = false;
};

/// A report plus an optional file body (generated algebra, completion, iso table).
struct CommandResult {
    RunReport report;
    std::string artifact;
};

auto cmd_check(const std::filesystem::path &path, bool require_total, const GlobalOptions &g) -> CommandResult;

auto cmd_generate_monoid_ext(const std::filesystem::path &monoid, bool literal, const GlobalOptions &g) -> CommandResult;
auto cmd_generate_cyclic(std::size_t order, const GlobalOptions &g) -> CommandResult;
auto cmd_generate_pfn(const std::vector<std::string> &states, const std::vector<std::string> &omega, std::size_t maxlen, const GlobalOptions &g) -> CommandResult;
auto cmd_generate_adjoin_top(const std::filesystem::path &path, const GlobalOptions &g) -> CommandResult;

/// The artifact starts with a comment block listing the unit map.
auto cmd_complete(const std::filesystem::path &path, Functor f, const GlobalOptions &g) -> CommandResult;
auto cmd_ideals(const std::filesystem::path &path, const GlobalOptions &g) -> CommandResult;
auto cmd_adjoint_test(Functor f, const std::filesystem::path &src, const std::filesystem::path &tgt, const GlobalOptions &g) -> CommandResult;

/// With one file K: C'(T(K)) against T'(C(K)). With two files: the two structures directly.
auto cmd_iso_test(const std::filesystem::path &path, const std::optional<std::filesystem::path> &other, const GlobalOptions &g) -> CommandResult;

/// Hosts and targets default to the built-in corpus when no files are given.
auto cmd_probe(const std::vector<std::filesystem::path> &hosts, const std::vector<std::filesystem::path> &targets, const GlobalOptions &g) -> CommandResult;

/// Hint printed after an error of the given kind, or empty.
auto guidance(ErrorKind kind) -> std::string;

} // namespace pka::cli
