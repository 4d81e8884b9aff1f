#include <pka/algebra.hpp>
#include <pka/errors.hpp>
#include <pka/report.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace pka {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
    case ErrorKind::UndefinedSum: return "UndefinedSum";
    case ErrorKind::UndefinedStar: return "UndefinedStar";
    case ErrorKind::MalformedAlgebra: return "MalformedAlgebra";
    case ErrorKind::NotFunctional: return "NotFunctional";
    case ErrorKind::StarDivergence: return "StarDivergence";
    case ErrorKind::CarrierOverflow: return "CarrierOverflow";
    case ErrorKind::NotStarContinuous: return "NotStarContinuous";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

// AxiomReport

auto AxiomReport::record(std::string axiom, std::vector<Elem> witness, std::string message) -> void
{
    auto &count = counts_[axiom];
    if (count++ < witnesses_per_axiom_)
        violations_.push_back({std::move(axiom), std::move(witness), std::move(message)});
}

auto AxiomReport::merge(const AxiomReport &other) -> void
{
    for (const auto &v : other.violations_)
        violations_.push_back(v);
    for (const auto &[axiom, count] : other.counts_)
        counts_[axiom] += count;
    notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

auto AxiomReport::failure_count() const -> std::size_t
{
    std::size_t total = 0;
    for (const auto &[_, count] : counts_)
        total += count;
    return total;
}

auto AxiomReport::failure_count(const std::string &axiom) const -> std::size_t
{
    auto it = counts_.find(axiom);
    return it == counts_.end() ? 0 : it->second;
}

auto AxiomReport::summary() const -> std::string
{
    std::ostringstream out;
    for (const auto &v : violations_)
        out << "violation [" << v.axiom << "] " << v.message << '\n';
    for (const auto &[axiom, count] : counts_) {
        auto shown = static_cast<std::size_t>(std::count_if(violations_.begin(), violations_.end(),
            [&](const Violation &v) { return v.axiom == axiom; }));
        if (count > shown)
            out << "violation [" << axiom << "] ... " << (count - shown) << " more\n";
    }
    for (const auto &n : notes_)
        out << "note " << n << '\n';
    return out.str();
}

// FinitePKA

namespace {

auto malformed(const std::string &name, const std::string &what) -> Error
{
    return Error(ErrorKind::MalformedAlgebra, "algebra '" + name + "': " + what);
}

} // namespace

FinitePKA::FinitePKA(PkaTables t) :
    name_(std::move(t.name)),
    labels_(std::move(t.labels)),
    zero_(t.zero),
    one_(t.one),
    add_(std::move(t.add)),
    mul_(std::move(t.mul)),
    star_(std::move(t.star))
{
    const auto n = labels_.size();
    if (n == 0)
        throw malformed(name_, "empty carrier");
    if (n > kMaxCarrier)
        throw Error(ErrorKind::CarrierOverflow, "algebra '" + name_ + "' has " + std::to_string(n) + " elements, limit is " + std::to_string(kMaxCarrier));
    std::set<std::string> seen;
    for (const auto &l : labels_) {
        if (l.empty())
            throw malformed(name_, "empty label");
        if (!seen.insert(l).second)
            throw malformed(name_, "duplicate label '" + l + "'");
    }
    if (zero_ >= n || one_ >= n)
        throw malformed(name_, "constant out of range");
    if (add_.empty())
        add_.assign(n * n, kUndefined);
    if (add_.size() != n * n || mul_.size() != n * n || star_.size() != n)
        throw malformed(name_, "table sizes do not match carrier size " + std::to_string(n));
    for (auto v : mul_)
        if (v >= n)
            throw malformed(name_, "multiplication table is not total");
    for (auto v : star_)
        if (v >= n)
            throw malformed(name_, "star table is not total");

    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            auto &xy = add_[x * n + y];
            auto &yx = add_[y * n + x];
            if (xy != kUndefined && xy >= n)
                throw malformed(name_, "sum value out of range");
            if (xy != kUndefined && yx != kUndefined && xy != yx)
                throw malformed(name_, "conflicting sums for " + labels_[x] + "+" + labels_[y]);
            if (xy == kUndefined)
                xy = yx;
        }
    for (Elem x = 0; x < n; ++x) {
        if (add_[x * n + zero_] == kUndefined) {
            add_[x * n + zero_] = x;
            add_[zero_ * n + x] = x;
        }
        if (add_[x * n + x] == kUndefined)
            add_[x * n + x] = x;
    }
}

auto FinitePKA::find(std::string_view label) const -> std::optional<Elem>
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label)
            return static_cast<Elem>(i);
    return std::nullopt;
}

auto FinitePKA::element(std::string_view label) const -> Elem
{
    if (auto e = find(label))
        return *e;
    throw malformed(name_, "no element labelled '" + std::string(label) + "'");
}

auto FinitePKA::add(Elem x, Elem y) const -> Elem
{
    auto v = add_or_undefined(x, y);
    if (v == kUndefined)
        throw Error(ErrorKind::UndefinedSum, labels_[x] + " + " + labels_[y] + " is undefined in '" + name_ + "'");
    return v;
}

auto FinitePKA::is_total() const -> bool
{
    return std::none_of(add_.begin(), add_.end(), [](Elem v) { return v == kUndefined; });
}

auto FinitePKA::tables() const -> PkaTables
{
    return {name_, labels_, zero_, one_, add_, mul_, star_};
}

auto FinitePKA::renamed(std::string name) const -> FinitePKA
{
    auto t = tables();
    t.name = std::move(name);
    return FinitePKA(std::move(t));
}

auto FinitePKA::operator==(const FinitePKA &o) const -> bool
{
    return labels_ == o.labels_ && zero_ == o.zero_ && one_ == o.one_ && add_ == o.add_ && mul_ == o.mul_ && star_ == o.star_;
}

auto powers(const FinitePKA &k, Elem b) -> PowerSequence
{
    PowerSequence seq;
    std::vector<int> position(k.size(), -1);
    Elem p = k.one();
    while (position[p] < 0) {
        position[p] = static_cast<int>(seq.values.size());
        seq.values.push_back(p);
        p = k.mul(b, p);
    }
    seq.tail = static_cast<std::size_t>(position[p]);
    seq.cycle = seq.values.size() - seq.tail;
    return seq;
}

auto all_powers(const FinitePKA &k) -> std::vector<PowerSequence>
{
    std::vector<PowerSequence> result;
    result.reserve(k.size());
    for (Elem b = 0; b < k.size(); ++b)
        result.push_back(powers(k, b));
    return result;
}

} // namespace pka
