#pragma once

#include <pka/algebra.hpp>
#include <pka/element_set.hpp>
#include <pka/report.hpp>

#include <optional>
#include <string>
#include <vector>

namespace pka {

/// Σ tables are indexed by subset mask, so PS carriers are much smaller than PKA ones.
inline constexpr std::size_t kMaxSumCarrier = 20;

/// Raw tables for a finite partially additive idempotent semiring.
///
/// A countable family is represented by its set of distinct values: idempotence plus
/// partition-associativity make the sum of a family depend only on that set, so
/// `sum` is indexed by subset mask (size 2^n, kUndefined = not summable).
struct PsTables {
    std::string name;
    std::vector<std::string> labels;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> sum;
    std::vector<Elem> mul;
    /// Declared as a closed semiring ("cs" header); verify_cs checks the claim.
    bool closed = false;
};

/// Finite partially additive idempotent semiring (PS). A closed semiring (CS) is a
/// FinitePS whose Σ is total; both share this type.
class FinitePS {
public:
    explicit FinitePS(PsTables tables);

    [[nodiscard]] auto name() const -> const std::string & { return name_; }
    [[nodiscard]] auto size() const -> std::size_t { return labels_.size(); }
    [[nodiscard]] auto label(Elem x) const -> const std::string & { return labels_[x]; }
    [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return labels_; }
    [[nodiscard]] auto find(std::string_view label) const -> std::optional<Elem>;
    [[nodiscard]] auto element(std::string_view label) const -> Elem;
    [[nodiscard]] auto carrier() const -> ElementSet { return ElementSet::full(size()); }

    [[nodiscard]] auto zero() const -> Elem { return zero_; }
    [[nodiscard]] auto one() const -> Elem { return one_; }
    [[nodiscard]] auto declared_closed() const -> bool { return closed_; }

    [[nodiscard]] auto summable(ElementSet family) const -> bool { return sum_[family.mask()] != kUndefined; }
    [[nodiscard]] auto sum_or_undefined(ElementSet family) const -> Elem { return sum_[family.mask()]; }
    /// Throws UndefinedSum when the family is not summable.
    [[nodiscard]] auto sum(ElementSet family) const -> Elem;
    [[nodiscard]] auto mul(Elem x, Elem y) const -> Elem { return mul_[x * size() + y]; }
    /// x <= y iff {x, y} is summable with sum y.
    [[nodiscard]] auto leq(Elem x, Elem y) const -> bool { return sum_[ElementSet{x, y}.mask()] == y; }
    [[nodiscard]] auto is_total() const -> bool;

    [[nodiscard]] auto tables() const -> PsTables;
    auto operator==(const FinitePS &other) const -> bool;

private:
    std::string name_;
    std::vector<std::string> labels_;
    Elem zero_;
    Elem one_;
    std::vector<Elem> sum_;
    std::vector<Elem> mul_;
    bool closed_;
};

using FiniteCS = FinitePS;

struct PsVerifyOptions {
    /// Check partition-associativity over every set partition instead of only 2- and 3-block ones.
    bool deep_partitions = false;
    std::size_t witnesses_per_axiom = 3;
};

/// Partition-associativity, unary sums, downward summability (the finite consequence of
/// the limit axiom), zero as identity, the multiplicative monoid, distributivity over Σ
/// on both sides, and annihilation.
auto verify_ps(const FinitePS &s, const PsVerifyOptions &options = {}) -> AxiomReport;

/// verify_ps plus totality of Σ.
auto verify_cs(const FinitePS &s, const PsVerifyOptions &options = {}) -> AxiomReport;

auto ps_sum(const FinitePS &s, ElementSet family) -> Elem;

/// The set of distinct powers of b.
auto ps_powers(const FinitePS &s, Elem b) -> ElementSet;

/// b* = Σ(b^n); throws UndefinedSum when the powers are not summable.
auto ps_star(const FinitePS &s, Elem b) -> Elem;

/// Views a PS as a PKA: x↓y iff {x, y} is summable, star from ps_star.
/// Throws UndefinedStar listing every element whose powers are not summable.
auto forget_to_pka(const FinitePS &s) -> FinitePKA;

} // namespace pka
