#pragma once

#include <pka/algebra.hpp>
#include <pka/element_set.hpp>
#include <pka/semiring.hpp>

#include <string>
#include <vector>

namespace pka {

/// A star-ideal of a finite PKA, represented by its closed member set.
/// Equality compares members only; generators record how the ideal was produced.
struct StarIdeal {
    ElementSet members;
    ElementSet generators;

    auto operator==(const StarIdeal &other) const -> bool { return members == other.members; }
};

/// Default bound on the host carrier for ideal enumeration.
inline constexpr std::size_t kDefaultIdealHostLimit = 8;

/// One step of the closure: pairwise sums, the down-set, and every a·b*·c whose
/// a·b^n·c all lie in A.
auto tau_step(const FinitePKA &k, ElementSet a) -> ElementSet;

/// Smallest star-ideal containing A. close(∅) is {0}.
auto close(const FinitePKA &k, ElementSet a) -> StarIdeal;

/// The down-set {x | x <= a}.
auto principal(const FinitePKA &k, Elem a) -> StarIdeal;

auto down_set(const FinitePKA &k, ElementSet a) -> ElementSet;

/// {a·b | a in A, b in B}
auto set_product(const FinitePKA &k, ElementSet a, ElementSet b) -> ElementSet;

auto ideal_zero(const FinitePKA &k) -> StarIdeal;
auto ideal_one(const FinitePKA &k) -> StarIdeal;
auto ideal_add(const FinitePKA &k, const StarIdeal &i, const StarIdeal &j) -> StarIdeal;
auto ideal_mul(const FinitePKA &k, const StarIdeal &i, const StarIdeal &j) -> StarIdeal;
/// Uses the members of I in ascending id order as generators.
auto ideal_star(const FinitePKA &k, const StarIdeal &i) -> StarIdeal;
/// ⟨(a1*·...·ak*)*⟩ for the given generator list, in the given order.
auto ideal_star_from(const FinitePKA &k, const std::vector<Elem> &generators) -> StarIdeal;

/// Every star-ideal of K, sorted by size and then by member mask, so {0} comes first.
/// Throws CarrierOverflow when |K| exceeds host_limit or the ideals outnumber kMaxCarrier.
auto enumerate_star_ideals(const FinitePKA &k, std::size_t host_limit = kDefaultIdealHostLimit) -> std::vector<StarIdeal>;

/// Elements of A with nothing strictly above them in A.
auto maximal_elements(const FinitePKA &k, ElementSet a) -> ElementSet;

/// "<a,b>" built from the maximal members.
auto ideal_label(const FinitePKA &k, ElementSet members) -> std::string;

// Ideals of a partially additive semiring: closed under Σ of summable subsets and downward.

auto ps_down_set(const FinitePS &s, ElementSet a) -> ElementSet;
auto ps_close(const FinitePS &s, ElementSet a) -> ElementSet;
auto ps_set_product(const FinitePS &s, ElementSet a, ElementSet b) -> ElementSet;
auto ps_maximal_elements(const FinitePS &s, ElementSet a) -> ElementSet;
auto ps_ideal_label(const FinitePS &s, ElementSet members) -> std::string;
/// Sorted like enumerate_star_ideals. Throws CarrierOverflow past kMaxCarrier ideals.
auto enumerate_ps_ideals(const FinitePS &s) -> std::vector<ElementSet>;

} // namespace pka
