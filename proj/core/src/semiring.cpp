#include <pka/errors.hpp>
#include <pka/semiring.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace pka {

namespace {

auto malformed(const std::string &name, const std::string &what) -> Error
{
    return Error(ErrorKind::MalformedAlgebra, "semiring '" + name + "': " + what);
}

auto set_label(const FinitePS &s, ElementSet x) -> std::string
{
    std::string out = "{";
    bool first = true;
    for (auto e : x) {
        if (!first)
            out += ',';
        out += s.label(e);
        first = false;
    }
    return out + "}";
}

auto set_witness(ElementSet x) -> std::vector<Elem> { return x.to_vector(); }

/// Sum of the set of block sums, or kUndefined if any block or the outer family is not summable.
auto outer_sum(const FinitePS &s, std::initializer_list<ElementSet> blocks) -> Elem
{
    ElementSet values;
    for (auto b : blocks) {
        auto v = s.sum_or_undefined(b);
        if (v == kUndefined)
            return kUndefined;
        values.insert(v);
    }
    return s.sum_or_undefined(values);
}

auto check_partition(const FinitePS &s, AxiomReport &report, ElementSet whole_set, Elem whole, Elem outer, const std::string &shape) -> void
{
    if (whole == outer)
        return;
    std::string msg = "partition-associativity (" + shape + ") fails on " + set_label(s, whole_set) + ": ";
    if (whole == kUndefined)
        msg += "family not summable but its block sums are";
    else if (outer == kUndefined)
        msg += "family summable but some block or the block sums are not";
    else
        msg += "Σ = " + s.label(whole) + " but Σ of block sums = " + s.label(outer);
    report.record("partition-associativity", set_witness(whole_set), msg);
}

constexpr std::size_t kTwoBlockLimit = 16;
constexpr std::size_t kThreeBlockLimit = 12;
constexpr std::size_t kDeepLimit = 12;

auto all_partitions(const FinitePS &s, AxiomReport &report, ElementSet x) -> void
{
    const auto elems = x.to_vector();
    std::vector<ElementSet> blocks;
    const Elem whole = s.sum_or_undefined(x);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == elems.size()) {
            if (blocks.size() < 2)
                return;
            ElementSet values;
            Elem outer = kUndefined;
            bool ok = true;
            for (auto b : blocks) {
                auto v = s.sum_or_undefined(b);
                if (v == kUndefined) {
                    ok = false;
                    break;
                }
                values.insert(v);
            }
            if (ok)
                outer = s.sum_or_undefined(values);
            check_partition(s, report, x, whole, outer, std::to_string(blocks.size()) + "-block");
            return;
        }
        for (auto &b : blocks) {
            b.insert(elems[i]);
            rec(i + 1);
            b.erase(elems[i]);
        }
        blocks.push_back(ElementSet{elems[i]});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
}

} // namespace

FinitePS::FinitePS(PsTables t) :
    name_(std::move(t.name)),
    labels_(std::move(t.labels)),
    zero_(t.zero),
    one_(t.one),
    sum_(std::move(t.sum)),
    mul_(std::move(t.mul)),
    closed_(t.closed)
{
    const auto n = labels_.size();
    if (n == 0)
        throw malformed(name_, "empty carrier");
    if (n > kMaxSumCarrier)
        throw Error(ErrorKind::CarrierOverflow, "semiring '" + name_ + "' has " + std::to_string(n) + " elements, limit is " + std::to_string(kMaxSumCarrier));
    std::set<std::string> seen;
    for (const auto &l : labels_)
        if (l.empty() || !seen.insert(l).second)
            throw malformed(name_, "empty or duplicate label '" + l + "'");
    if (zero_ >= n || one_ >= n)
        throw malformed(name_, "constant out of range");
    const std::size_t subsets = std::size_t{1} << n;
    if (sum_.empty())
        sum_.assign(subsets, kUndefined);
    if (sum_.size() != subsets || mul_.size() != n * n)
        throw malformed(name_, "table sizes do not match carrier size " + std::to_string(n));
    for (auto v : mul_)
        if (v >= n)
            throw malformed(name_, "multiplication table is not total");
    for (auto v : sum_)
        if (v != kUndefined && v >= n)
            throw malformed(name_, "sum value out of range");
    if (sum_[0] != kUndefined && sum_[0] != zero_)
        throw malformed(name_, "sum of the empty family must be zero");
    sum_[0] = zero_;
    for (Elem x = 0; x < n; ++x)
        if (sum_[ElementSet{x}.mask()] == kUndefined)
            sum_[ElementSet{x}.mask()] = x;
}

auto FinitePS::find(std::string_view label) const -> std::optional<Elem>
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<Elem>(i);
    return std::nullopt;
}

auto FinitePS::element(std::string_view label) const -> Elem
{
    if (auto e = find(label))
        return *e;
    throw malformed(name_, "no element labelled '" + std::string(label) + "'");
}

auto FinitePS::sum(ElementSet family) const -> Elem
{
    auto v = sum_or_undefined(family);
    if (v == kUndefined)
        throw Error(ErrorKind::UndefinedSum, "family " + set_label(*this, family) + " is not summable in '" + name_ + "'");
    return v;
}

auto FinitePS::is_total() const -> bool
{
    return std::none_of(sum_.begin(), sum_.end(), [](Elem v) { return v == kUndefined; });
}

auto FinitePS::tables() const -> PsTables
{
    return {name_, labels_, zero_, one_, sum_, mul_, closed_};
}

auto FinitePS::operator==(const FinitePS &o) const -> bool
{
    return labels_ == o.labels_ && zero_ == o.zero_ && one_ == o.one_ && sum_ == o.sum_ && mul_ == o.mul_;
}

auto verify_ps(const FinitePS &s, const PsVerifyOptions &options) -> AxiomReport
{
    AxiomReport report(options.witnesses_per_axiom);
    const auto m = s.size();
    const auto n = static_cast<Elem>(m);
    const std::uint64_t subsets = std::uint64_t{1} << m;

    for (Elem x = 0; x < n; ++x)
        if (s.sum_or_undefined(ElementSet{x}) != x)
            report.record("unary-sum", {x}, "Σ{x} != x at x=" + s.label(x));

    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        const ElementSet x(mask);
        const Elem whole = s.sum_or_undefined(x);
        if (whole == kUndefined)
            continue;
        for (auto e : x)
            if (!s.summable(x - ElementSet{e}))
                report.record("downward-summability", set_witness(x),
                    set_label(s, x) + " is summable but its subfamily without " + s.label(e) + " is not");
        ElementSet with_zero = x;
        with_zero.insert(s.zero());
        if (s.sum_or_undefined(with_zero) != whole)
            report.record("zero-identity", set_witness(x), "adding 0 to " + set_label(s, x) + " changes or breaks its sum");
    }

    // Partition-associativity, an "iff": checked on summable and non-summable families alike.
    if (options.deep_partitions && m <= kDeepLimit) {
        for (std::uint64_t mask = 1; mask < subsets; ++mask)
            if (std::popcount(mask) >= 2)
                all_partitions(s, report, ElementSet(mask));
    } else {
        if (options.deep_partitions)
            report.note("deep partition check skipped: carrier larger than " + std::to_string(kDeepLimit));
        for (std::uint64_t mask = 1; mask < subsets; ++mask) {
            if (std::popcount(mask) < 2)
                continue;
            const ElementSet x(mask);
            const Elem whole = s.sum_or_undefined(x);
            const ElementSet low{static_cast<Elem>(std::countr_zero(mask))};
            const ElementSet rest = x - low;
            if (m <= kTwoBlockLimit) {
                // first block holds the lowest element; its companions range over subsets of rest
                for (std::uint64_t sub = rest.mask();; sub = (sub - 1) & rest.mask()) {
                    const ElementSet first = low | ElementSet(sub);
                    const ElementSet second = x - first;
                    if (!second.empty())
                        check_partition(s, report, x, whole, outer_sum(s, {first, second}), "2-block");
                    if (sub == 0)
                        break;
                }
            } else {
                for (auto e : x)
                    check_partition(s, report, x, whole, outer_sum(s, {x - ElementSet{e}, ElementSet{e}}), "peel");
            }
            if (m <= kThreeBlockLimit && x.size() >= 3) {
                for (std::uint64_t sub = rest.mask();; sub = (sub - 1) & rest.mask()) {
                    const ElementSet first = low | ElementSet(sub);
                    const ElementSet remaining = x - first;
                    if (remaining.size() >= 2) {
                        const ElementSet low2{static_cast<Elem>(std::countr_zero(remaining.mask()))};
                        const ElementSet rest2 = remaining - low2;
                        for (std::uint64_t sub2 = rest2.mask();; sub2 = (sub2 - 1) & rest2.mask()) {
                            const ElementSet second = low2 | ElementSet(sub2);
                            const ElementSet third = remaining - second;
                            if (!third.empty())
                                check_partition(s, report, x, whole, outer_sum(s, {first, second, third}), "3-block");
                            if (sub2 == 0)
                                break;
                        }
                    }
                    if (sub == 0)
                        break;
                }
            }
        }
        if (m > kTwoBlockLimit)
            report.note("carrier larger than " + std::to_string(kTwoBlockLimit) + ": partition-associativity checked by peeling single elements only");
        else if (m > kThreeBlockLimit)
            report.note("carrier larger than " + std::to_string(kThreeBlockLimit) + ": 3-block partitions skipped");
    }

    for (Elem x = 0; x < n; ++x) {
        if (s.mul(s.one(), x) != x || s.mul(x, s.one()) != x)
            report.record("monoid-identity", {x}, "1 is not a two-sided identity at x=" + s.label(x));
        if (s.mul(s.zero(), x) != s.zero() || s.mul(x, s.zero()) != s.zero())
            report.record("annihilation", {x}, "0 does not annihilate x=" + s.label(x));
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (s.mul(x, s.mul(y, z)) != s.mul(s.mul(x, y), z))
                    report.record("monoid-associativity", {x, y, z},
                        "x·(y·z) != (x·y)·z at x=" + s.label(x) + " y=" + s.label(y) + " z=" + s.label(z));
    }

    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        const ElementSet x(mask);
        const Elem whole = s.sum_or_undefined(x);
        if (whole == kUndefined)
            continue;
        for (Elem y = 0; y < n; ++y) {
            ElementSet left, right;
            for (auto e : x) {
                left.insert(s.mul(y, e));
                right.insert(s.mul(e, y));
            }
            if (s.sum_or_undefined(left) != s.mul(y, whole))
                report.record("left-distributivity", set_witness(x),
                    "y·Σ" + set_label(s, x) + " != Σ(y·x_i) at y=" + s.label(y));
            if (s.sum_or_undefined(right) != s.mul(whole, y))
                report.record("right-distributivity", set_witness(x),
                    "Σ" + set_label(s, x) + "·y != Σ(x_i·y) at y=" + s.label(y));
        }
    }
    return report;
}

auto verify_cs(const FinitePS &s, const PsVerifyOptions &options) -> AxiomReport
{
    auto report = verify_ps(s, options);
    const std::uint64_t subsets = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask)
        if (!s.summable(ElementSet(mask)))
            report.record("totality", set_witness(ElementSet(mask)), "family " + set_label(s, ElementSet(mask)) + " is not summable");
    return report;
}

auto ps_sum(const FinitePS &s, ElementSet family) -> Elem
{
    return s.sum(family);
}

auto ps_powers(const FinitePS &s, Elem b) -> ElementSet
{
    ElementSet seen;
    Elem p = s.one();
    while (!seen.contains(p)) {
        seen.insert(p);
        p = s.mul(b, p);
    }
    return seen;
}

auto ps_star(const FinitePS &s, Elem b) -> Elem
{
    return s.sum(ps_powers(s, b));
}

auto forget_to_pka(const FinitePS &s) -> FinitePKA
{
    const auto n = s.size();
    PkaTables t;
    t.name = s.name();
    t.labels = s.labels();
    t.zero = s.zero();
    t.one = s.one();
    t.add.assign(n * n, kUndefined);
    t.mul.resize(n * n);
    t.star.resize(n);
    std::string offenders;
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            t.add[x * n + y] = s.sum_or_undefined(ElementSet{x, y});
            t.mul[x * n + y] = s.mul(x, y);
        }
        auto star = s.sum_or_undefined(ps_powers(s, x));
        if (star == kUndefined)
            offenders += (offenders.empty() ? "" : ",") + s.label(x);
        t.star[x] = star;
    }
    if (!offenders.empty())
        throw Error(ErrorKind::UndefinedStar, "powers not summable in '" + s.name() + "' for: " + offenders);
    return FinitePKA(std::move(t));
}

} // namespace pka
