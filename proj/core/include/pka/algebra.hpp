#pragma once

#include <pka/element_set.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pka {

/// Raw operation tables, the input to FinitePKA's validating constructor.
/// Square tables are row-major (index x * n + y); undefined sums hold kUndefined.
struct PkaTables {
    std::string name;
    std::vector<std::string> labels;
    Elem zero = 0;
    Elem one = 0;
    std::vector<Elem> add;
    std::vector<Elem> mul;
    std::vector<Elem> star;
};

/// A finite partially additive Kleene algebra: partial +, total ·, total *, constants 0 and 1.
///
/// Immutable once built. The constructor symmetrizes the sum table (a conflicting pair
/// of entries is rejected) and inserts the mandatory sums x+0 = x and x+x = x where
/// they are absent. Entries already present are kept as given, so a wrong x+0 still
/// shows up in verify_pka.
class FinitePKA {
public:
    explicit FinitePKA(PkaTables tables);

    [[nodiscard]] auto name() const -> const std::string & { return name_; }
    [[nodiscard]] auto size() const -> std::size_t { return labels_.size(); }
    [[nodiscard]] auto label(Elem x) const -> const std::string & { return labels_[x]; }
    [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return labels_; }
    [[nodiscard]] auto find(std::string_view label) const -> std::optional<Elem>;
    /// Like find, but throws MalformedAlgebra for an unknown label.
    [[nodiscard]] auto element(std::string_view label) const -> Elem;
    [[nodiscard]] auto carrier() const -> ElementSet { return ElementSet::full(size()); }

    [[nodiscard]] auto zero() const -> Elem { return zero_; }
    [[nodiscard]] auto one() const -> Elem { return one_; }

    [[nodiscard]] auto summable(Elem x, Elem y) const -> bool { return add_[x * size() + y] != kUndefined; }
    /// Throws UndefinedSum when x and y are not summable.
    [[nodiscard]] auto add(Elem x, Elem y) const -> Elem;
    [[nodiscard]] auto add_or_undefined(Elem x, Elem y) const -> Elem { return add_[x * size() + y]; }
    [[nodiscard]] auto mul(Elem x, Elem y) const -> Elem { return mul_[x * size() + y]; }
    [[nodiscard]] auto star(Elem x) const -> Elem { return star_[x]; }
    /// Natural order: x <= y iff x and y are summable and x + y = y.
    [[nodiscard]] auto leq(Elem x, Elem y) const -> bool { return add_[x * size() + y] == y; }
    [[nodiscard]] auto is_total() const -> bool;

    [[nodiscard]] auto tables() const -> PkaTables;
    /// Same tables under a different name.
    [[nodiscard]] auto renamed(std::string name) const -> FinitePKA;

    /// Structural equality: same labels, constants and tables. The name is ignored.
    auto operator==(const FinitePKA &other) const -> bool;

private:
    std::string name_;
    std::vector<std::string> labels_;
    Elem zero_;
    Elem one_;
    std::vector<Elem> add_;
    std::vector<Elem> mul_;
    std::vector<Elem> star_;
};

/// The distinct powers b^0 = 1, b^1, ... up to the first repetition.
/// values[tail .. tail+cycle) is the periodic part.
struct PowerSequence {
    std::vector<Elem> values;
    std::size_t tail = 0;
    std::size_t cycle = 0;
};

auto powers(const FinitePKA &k, Elem b) -> PowerSequence;

/// powers() for every element, indexed by element.
auto all_powers(const FinitePKA &k) -> std::vector<PowerSequence>;

} // namespace pka
