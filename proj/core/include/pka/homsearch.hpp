#pragma once

#include <pka/completions.hpp>
#include <pka/homomorphism.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pka {

struct SearchOptions {
    /// Maximum number of tentative assignments before SearchBudgetExceeded.
    std::uint64_t budget = 50'000'000;
    bool injective = false;
};

/// Visits every homomorphism src -> tgt of the given kind, in lexicographic order of the
/// map. The visitor returns false to stop early. Returns the number of assignments tried.
auto search_homs(const Structure &src, const Structure &tgt, StructureKind kind, const SearchOptions &options,
    const std::function<bool(const ElementMap &)> &visit) -> std::uint64_t;

/// All homomorphisms, lexicographically sorted. Throws SearchBudgetExceeded.
auto enumerate_homs(const Structure &src, const Structure &tgt, StructureKind kind, const SearchOptions &options = {}) -> std::vector<ElementMap>;

/// KA homs out of a T completion, found by assigning only the principal ideals: every
/// PKA hom g of the host is extended by summing generator images and the extension is
/// re-verified. The target must have a total +.
auto enumerate_homs_from_total_completion(const CompletionResult &tk, const FinitePKA &tgt, const SearchOptions &options = {}) -> std::vector<ElementMap>;

/// f ∘ unit.
auto phi(const CompletionResult &fk, std::span<const Elem> f) -> ElementMap;

/// Inverse of phi: g(x) on classes for S; the sum of generator images on ideals otherwise.
/// Checks well-definedness against a second generator set and verifies the result.
/// Throws NotAHomomorphism.
auto psi(const CompletionResult &fk, const Structure &target, std::span<const Elem> g) -> ElementMap;

/// The structure homs of the host are searched into: U(target) for C, the target itself otherwise.
auto right_adjoint_target(Functor f, const Structure &target) -> Structure;
auto right_hom_kind(Functor f) -> StructureKind;

struct AdjunctionReport {
    Functor functor = Functor::T;
    std::string host;
    std::string target;
    std::size_t left_count = 0;  ///< |Hom(F K, X)|
    std::size_t right_count = 0; ///< |Hom(K, U X)|
    bool phi_lands = false;      ///< every φ f is a hom of the right kind
    bool psi_phi_identity = false;
    bool phi_psi_identity = false;
    AxiomReport report;

    [[nodiscard]] auto pass() const -> bool
    {
        return left_count == right_count && phi_lands && psi_phi_identity && phi_psi_identity && report.pass();
    }
};

/// Materializes both hom-sets and checks that φ and ψ are mutually inverse between them.
auto check_adjunction(const CompletionResult &fk, const Structure &target, const SearchOptions &options = {}) -> AdjunctionReport;

using PhiFunction = std::function<ElementMap(const CompletionResult &, std::span<const Elem>)>;

/// φ(h∘f) = h∘φ(f) for every f: F K -> X1, with h: X1 -> X2.
auto check_naturality_target(const CompletionResult &fk, const Structure &x1, const Structure &x2, std::span<const Elem> h,
    const SearchOptions &options = {}, const PhiFunction &phi_fn = phi) -> AxiomReport;

/// φ(f∘Fh) = φ(f)∘h for every f: F K2 -> X, with h: K1 -> K2 lifted through F.
auto check_naturality_source(const CompletionResult &fk1, const CompletionResult &fk2, std::span<const Elem> h, const Structure &x,
    const SearchOptions &options = {}, const PhiFunction &phi_fn = phi) -> AxiomReport;

/// A bijective homomorphism whose inverse is also a homomorphism, if any.
auto find_isomorphism(const Structure &a, const Structure &b, StructureKind kind, const SearchOptions &options = {}) -> std::optional<ElementMap>;

/// K, a total KA K', a PKA hom g: K -> K', and for each candidate value of the new top
/// the reason the extension fails to be a KA hom.
struct ProbeWitness {
    FinitePKA host;
    FinitePKA target;
    FinitePKA extended;
    ElementMap g;
    std::vector<std::string> refutations;
};

struct ProbeResult {
    std::optional<ProbeWitness> witness;
    std::uint64_t candidates = 0;
    bool budget_exhausted = false;
    std::vector<std::string> log;
};

/// Looks for a hom g: K -> K' that does not factor through adjoin_top(K). Targets are T(K)
/// when K is star-continuous, then every total star-continuous algebra in `targets`.
/// Each tried value for the image of the new top counts as one candidate map.
auto probe_adjoin_top_nonuniversality(const std::vector<FinitePKA> &hosts, const std::vector<FinitePKA> &targets, std::uint64_t budget) -> ProbeResult;

/// Re-checks a witness from scratch: g is a PKA hom and no value for the top gives a KA hom.
auto verify_probe_witness(const ProbeWitness &w) -> bool;

struct SmallPkaStats {
    std::uint64_t candidates = 0;
    std::uint64_t algebras = 0;
    bool exhausted = true;
};

/// Every PKA on carriers of size 2..max_size with 0 and 1 as the first two elements
/// (labels 0, 1, a, b, ...), subject to a candidate budget. The visitor returns false to stop.
auto enumerate_small_pkas(std::size_t max_size, std::uint64_t budget, const std::function<bool(const FinitePKA &)> &visit) -> SmallPkaStats;

} // namespace pka
