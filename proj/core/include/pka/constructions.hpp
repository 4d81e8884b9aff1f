#pragma once

#include <pka/algebra.hpp>

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace pka {

struct MonoidTables {
    std::string name;
    std::vector<std::string> labels;
    Elem one = 0;
    std::vector<Elem> op;
};

/// Finite commutative monoid; the constructor rejects tables that are not
/// total, commutative, associative, or lack the declared identity.
class CommutativeMonoid {
public:
    explicit CommutativeMonoid(MonoidTables tables);

    [[nodiscard]] auto name() const -> const std::string & { return name_; }
    [[nodiscard]] auto size() const -> std::size_t { return labels_.size(); }
    [[nodiscard]] auto label(Elem x) const -> const std::string & { return labels_[x]; }
    [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return labels_; }
    [[nodiscard]] auto one() const -> Elem { return one_; }
    [[nodiscard]] auto op(Elem x, Elem y) const -> Elem { return op_[x * size() + y]; }
    [[nodiscard]] auto tables() const -> MonoidTables { return {name_, labels_, one_, op_}; }

    auto operator==(const CommutativeMonoid &other) const -> bool
    {
        return labels_ == other.labels_ && one_ == other.one_ && op_ == other.op_;
    }

private:
    std::string name_;
    std::vector<std::string> labels_;
    Elem one_;
    std::vector<Elem> op_;
};

/// Z_n with elements 1, g, g2, ..., g(n-1). n = 1 gives the trivial monoid.
auto cyclic_monoid(std::size_t n) -> CommutativeMonoid;

/// Labels used by monoid_extension for the two new elements.
inline constexpr const char *kExtensionZero = "0";
inline constexpr const char *kExtensionTop = "top";

enum class ExtensionStar {
    /// 0* = 1, 1* = 1, b* = top otherwise.
    Corrected,
    /// 0* = 0 and b* = top for every nonzero b; fails the star axioms.
    Literal,
};

/// Carrier 0, the monoid elements in order, then top. The only defined sums are
/// x+0, x+x and x+top.
auto monoid_extension(const CommutativeMonoid &m, ExtensionStar star = ExtensionStar::Corrected) -> FinitePKA;

/// The two-element Boolean Kleene algebra {0, 1}.
auto boolean_ka() -> FinitePKA;

/// Adds a new greatest element that absorbs every undefined sum. The new
/// element is appended last and labelled "inf" (primed until unique).
auto adjoin_top(const FinitePKA &k) -> FinitePKA;

// String-set algebra over a finite state set.

using State = std::uint8_t;

/// A string of states; the empty string stands for ε.
struct StateString {
    std::vector<State> states;

    [[nodiscard]] auto empty() const -> bool { return states.empty(); }
    [[nodiscard]] auto ini() const -> State { return states.front(); }
    [[nodiscard]] auto fin() const -> State { return states.back(); }
    [[nodiscard]] auto size() const -> std::size_t { return states.size(); }

    auto operator<=>(const StateString &) const = default;
    auto operator==(const StateString &) const -> bool = default;
};

using StringSet = std::set<StateString>;

/// The state set and its distinguished subset Ω.
struct StringContext {
    std::vector<std::string> states;
    std::vector<bool> omega;

    StringContext(std::vector<std::string> state_names, const std::vector<std::string> &omega_names);

    [[nodiscard]] auto in_omega(State s) const -> bool { return omega[s]; }
    [[nodiscard]] auto state(std::string_view name) const -> State;
    [[nodiscard]] auto render(const StateString &s) const -> std::string;
    /// "{pq,q}"; "{}" for the empty set.
    [[nodiscard]] auto render(const StringSet &a) const -> std::string;
    [[nodiscard]] auto parse(std::string_view text) const -> StateString;
};

/// s⊗t: s followed by t without its first state, or ε when either is ε or the endpoints differ.
auto fusion_product(const StateString &s, const StateString &t) -> StateString;

/// s is a subsequence of t and both start in the same state. ε is a generalized prefix of everything.
auto is_generalized_prefix(const StateString &s, const StateString &t) -> bool;

/// Ω states only at the end, every Ω state starts some string, and maximal strings
/// with a common initial state share their final state.
auto is_functional(const StringContext &ctx, const StringSet &a) -> bool;

/// Functional, and no member is a generalized prefix of another.
auto is_sparsely_functional(const StringContext &ctx, const StringSet &a) -> bool;

/// Largest sparsely functional subset of a functional set. Throws NotFunctional.
auto sf_normalize(const StringContext &ctx, const StringSet &a) -> StringSet;

struct PfnOptions {
    std::size_t maxlen = 2;
    std::size_t max_carrier = kMaxCarrier;
};

/// Strings of the finite fragment: nonempty, no repeated state, at most maxlen long,
/// Ω states only in last position.
auto pfn_universe(const StringContext &ctx, std::size_t maxlen) -> std::vector<StateString>;

/// The sparsely functional sets over the fragment plus ∅, with their operation tables.
struct PfnAlgebra {
    StringContext context;
    std::vector<StringSet> carrier;
    FinitePKA algebra;
};

/// Throws StarDivergence when a product or star leaves the fragment and
/// CarrierOverflow past options.max_carrier elements.
auto pfn_algebra(const StringContext &ctx, const PfnOptions &options = {}) -> PfnAlgebra;

} // namespace pka
