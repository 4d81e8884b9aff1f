#pragma once

#include <pka/algebra.hpp>
#include <pka/homomorphism.hpp>
#include <pka/report.hpp>
#include <pka/semiring.hpp>
#include <pka/star_ideals.hpp>

#include <string>
#include <vector>

namespace pka {

/// S: star-continuous quotient. T: total KA of star-ideals. C: PS of star-ideals.
/// Tp: closed semiring of PS-ideals. Cp: closed semiring of star-ideals of a total KA.
enum class Functor { S, T, C, Tp, Cp };

auto to_string(Functor f) -> std::string_view;
/// Accepts s, t, c, tp, cp (any case). Throws MalformedAlgebra otherwise.
auto parse_functor(std::string_view text) -> Functor;

/// Kind of the structures a functor produces.
auto result_kind(Functor f) -> StructureKind;
/// Kind of the hosts a functor accepts.
auto host_kind(Functor f) -> StructureKind;

struct CompletionOptions {
    /// Run the construction even when its precondition fails.
    bool force = false;
    std::size_t host_limit = kDefaultIdealHostLimit;
    PsVerifyOptions ps;
};

struct CompletionResult {
    Functor functor = Functor::T;
    Structure host;
    Structure completed;
    /// host element -> completed element: its class for S, its principal ideal otherwise.
    ElementMap unit;
    /// For each completed element, the host elements it stands for (class or ideal members).
    std::vector<ElementSet> parts;
    /// Verifier output for the completed structure.
    AxiomReport report;
    std::vector<std::string> log;

    [[nodiscard]] auto pka() const -> const FinitePKA & { return std::get<FinitePKA>(completed); }
    [[nodiscard]] auto ps() const -> const FinitePS & { return std::get<FinitePS>(completed); }
    [[nodiscard]] auto host_pka() const -> const FinitePKA & { return std::get<FinitePKA>(host); }
    [[nodiscard]] auto host_ps() const -> const FinitePS & { return std::get<FinitePS>(host); }
    /// Completed element whose part equals the given set. Throws MalformedAlgebra if there is none.
    [[nodiscard]] auto element_of(ElementSet part) const -> Elem;
};

/// Least congruence forcing star-continuity, with rule premises read in K.
auto quotient_star_continuous(const FinitePKA &k, const CompletionOptions &options = {}) -> CompletionResult;

/// Throws NotStarContinuous unless forced, CarrierOverflow for large hosts.
auto total_completion(const FinitePKA &k, const CompletionOptions &options = {}) -> CompletionResult;

/// A family of ideals is summable when every finite sum over the union of their
/// members is defined in K under every association.
auto ps_completion(const FinitePKA &k, const CompletionOptions &options = {}) -> CompletionResult;

/// Throws MalformedAlgebra unless forced when the host fails verify_ps.
auto cs_from_ps(const FinitePS &s, const CompletionOptions &options = {}) -> CompletionResult;

/// Throws NotTotal / NotStarContinuous unless forced.
auto cs_from_ka(const FinitePKA &k, const CompletionOptions &options = {}) -> CompletionResult;

/// Runs the functor on a host of the matching kind.
auto complete(Functor f, const Structure &host, const CompletionOptions &options = {}) -> CompletionResult;

/// Whether every finite subset of A sums in K under every association; memoized per call.
auto fully_summable(const FinitePKA &k, ElementSet a) -> bool;

/// F applied to a host homomorphism f: src.host -> tgt.host. Both results must come from
/// the same functor. Throws NotAHomomorphism if f or the lifted map fails verification.
auto lift_hom(const CompletionResult &src, const CompletionResult &tgt, std::span<const Elem> f) -> ElementMap;

} // namespace pka
