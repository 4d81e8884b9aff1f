#pragma once

#include <pka/element_set.hpp>

#include <map>
#include <string>
#include <vector>

namespace pka {

struct Violation {
    std::string axiom; ///< "1".."16", "star-continuity", "totality", ...
    std::vector<Elem> witness;
    std::string message;
};

/// Outcome of an exhaustive check. Passes iff no violation was recorded.
class AxiomReport {
public:
    explicit AxiomReport(std::size_t witnesses_per_axiom = 3) : witnesses_per_axiom_(witnesses_per_axiom) {}

    auto record(std::string axiom, std::vector<Elem> witness, std::string message) -> void;
    auto note(std::string text) -> void { notes_.push_back(std::move(text)); }
    auto merge(const AxiomReport &other) -> void;

    [[nodiscard]] auto pass() const -> bool { return violations_.empty(); }
    [[nodiscard]] auto violations() const -> const std::vector<Violation> & { return violations_; }
    [[nodiscard]] auto notes() const -> const std::vector<std::string> & { return notes_; }
    /// Total number of failures seen, including ones beyond the per-axiom witness cap.
    [[nodiscard]] auto failure_count() const -> std::size_t;
    [[nodiscard]] auto failure_count(const std::string &axiom) const -> std::size_t;
    [[nodiscard]] auto violates(const std::string &axiom) const -> bool { return failure_count(axiom) > 0; }

    /// One line per violation, then notes.
    [[nodiscard]] auto summary() const -> std::string;

private:
    std::size_t witnesses_per_axiom_;
    std::vector<Violation> violations_;
    std::map<std::string, std::size_t> counts_;
    std::vector<std::string> notes_;
};

} // namespace pka
