#include <pka/completions.hpp>
#include <pka/errors.hpp>
#include <pka/verify.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace pka {

auto to_string(Functor f) -> std::string_view
{
    switch (f) {
    case Functor::S: return "S";
    case Functor::T: return "T";
    case Functor::C: return "C";
    case Functor::Tp: return "T'";
    case Functor::Cp: return "C'";
    }
    return "?";
}

auto parse_functor(std::string_view text) -> Functor
{
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "s")
        return Functor::S;
    if (lower == "t")
        return Functor::T;
    if (lower == "c")
        return Functor::C;
    if (lower == "tp" || lower == "t'")
        return Functor::Tp;
    if (lower == "cp" || lower == "c'")
        return Functor::Cp;
    throw Error(ErrorKind::MalformedAlgebra, "unknown functor '" + std::string(text) + "' (expected s, t, c, tp or cp)");
}

auto result_kind(Functor f) -> StructureKind
{
    switch (f) {
    case Functor::S: return StructureKind::PKA;
    case Functor::T: return StructureKind::KA;
    case Functor::C: return StructureKind::PS;
    case Functor::Tp:
    case Functor::Cp: return StructureKind::CS;
    }
    return StructureKind::PKA;
}

auto host_kind(Functor f) -> StructureKind
{
    switch (f) {
    case Functor::Tp: return StructureKind::PS;
    case Functor::Cp: return StructureKind::KA;
    default: return StructureKind::PKA;
    }
}

auto CompletionResult::element_of(ElementSet part) const -> Elem
{
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i] == part)
            return static_cast<Elem>(i);
    throw Error(ErrorKind::MalformedAlgebra, "no completed element for the given set");
}

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Elem{0}); }

    auto find(Elem x) -> Elem
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    /// Keeps the smaller id as root. Returns whether two classes merged.
    auto unite(Elem x, Elem y) -> bool
    {
        x = find(x);
        y = find(y);
        if (x == y)
            return false;
        if (y < x)
            std::swap(x, y);
        parent_[y] = x;
        return true;
    }

private:
    std::vector<Elem> parent_;
};

/// Merges x·y, x+y and x* across classes until the partition is a congruence.
/// Sums use the strong form: x≡x', y≡y', both pairs summable ⇒ x+y ≡ x'+y'.
auto congruence_close(const FinitePKA &k, UnionFind &uf) -> void
{
    const auto n = static_cast<Elem>(k.size());
    for (bool progress = true; progress;) {
        progress = false;
        std::map<std::pair<Elem, Elem>, Elem> mul_seen, add_seen;
        std::map<Elem, Elem> star_seen;
        for (Elem x = 0; x < n; ++x) {
            auto [it, fresh] = star_seen.emplace(uf.find(x), k.star(x));
            if (!fresh)
                progress |= uf.unite(it->second, k.star(x));
            for (Elem y = 0; y < n; ++y) {
                const std::pair key{uf.find(x), uf.find(y)};
                auto [m, mfresh] = mul_seen.emplace(key, k.mul(x, y));
                if (!mfresh)
                    progress |= uf.unite(m->second, k.mul(x, y));
                if (auto s = k.add_or_undefined(x, y); s != kUndefined) {
                    auto [a, afresh] = add_seen.emplace(key, s);
                    if (!afresh)
                        progress |= uf.unite(a->second, s);
                }
            }
        }
    }
}

auto make_result(Functor f, Structure host, Structure completed) -> CompletionResult
{
    return CompletionResult{f, std::move(host), std::move(completed), {}, {}, AxiomReport{}, {}};
}

auto require_star_continuous(const FinitePKA &k, const CompletionOptions &options, std::vector<std::string> &log) -> void
{
    auto sc = verify_star_continuity(k);
    if (sc.pass())
        return;
    if (!options.force)
        throw Error(ErrorKind::NotStarContinuous, "'" + k.name() + "' is not star-continuous: " + sc.violations().front().message);
    log.push_back("forced: host is not star-continuous (" + sc.violations().front().message + ")");
}

auto ideal_index(const std::vector<StarIdeal> &ideals)
{
    std::map<std::uint64_t, Elem> index;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        index.emplace(ideals[i].members.mask(), static_cast<Elem>(i));
    return index;
}

/// Memo over subsets of K: the values of every association tree, or "undefined"
/// as soon as one tree is undefined.
class AssociationOracle {
public:
    explicit AssociationOracle(const FinitePKA &k) : k_(k), state_(std::size_t{1} << k.size(), Unknown), values_(state_.size()) {}

    auto defined(ElementSet a) -> bool { return evaluate(a.mask()); }

private:
    enum State : std::uint8_t { Unknown, Defined, Undefined };

    auto evaluate(std::uint64_t mask) -> bool
    {
        if (state_[mask] != Unknown)
            return state_[mask] == Defined;
        bool ok = true;
        ElementSet values;
        if (std::popcount(mask) <= 1) {
            if (mask == 0)
                values.insert(k_.zero());
            else
                values.insert(static_cast<Elem>(std::countr_zero(mask)));
        } else {
            // splits with the lowest element on the left cover every unordered split once
            const auto low = mask & (~mask + 1);
            const auto rest = mask & ~low;
            for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                const auto left = low | sub;
                const auto right = mask & ~left;
                if (right != 0) {
                    if (!evaluate(left) || !evaluate(right)) {
                        ok = false;
                        break;
                    }
                    for (auto x : values_[left])
                        for (auto y : values_[right]) {
                            auto s = k_.add_or_undefined(x, y);
                            if (s == kUndefined)
                                ok = false;
                            else
                                values.insert(s);
                        }
                    if (!ok)
                        break;
                }
                if (sub == 0)
                    break;
            }
        }
        state_[mask] = ok ? Defined : Undefined;
        values_[mask] = values;
        return ok;
    }

    const FinitePKA &k_;
    std::vector<State> state_;
    std::vector<ElementSet> values_;
};

auto ideal_labels(const FinitePKA &k, const std::vector<StarIdeal> &ideals) -> std::vector<std::string>
{
    std::vector<std::string> labels;
    for (const auto &i : ideals)
        labels.push_back(ideal_label(k, i.members));
    return labels;
}

auto ideal_parts(const std::vector<StarIdeal> &ideals) -> std::vector<ElementSet>
{
    std::vector<ElementSet> parts;
    for (const auto &i : ideals)
        parts.push_back(i.members);
    return parts;
}

auto ideal_mul_table(const FinitePKA &k, const std::vector<StarIdeal> &ideals, const std::map<std::uint64_t, Elem> &index) -> std::vector<Elem>
{
    const auto m = ideals.size();
    std::vector<Elem> mul(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            mul[i * m + j] = index.at(ideal_mul(k, ideals[i], ideals[j]).members.mask());
    return mul;
}

auto principal_unit(const FinitePKA &k, const std::map<std::uint64_t, Elem> &index) -> ElementMap
{
    ElementMap unit(k.size());
    for (Elem x = 0; x < k.size(); ++x)
        unit[x] = index.at(principal(k, x).members.mask());
    return unit;
}

/// Σ table of a star-ideal structure; summable decides each family from the union of its members.
template <typename Summable>
auto ideal_sum_table(const FinitePKA &k, const std::vector<StarIdeal> &ideals, const std::map<std::uint64_t, Elem> &index, Summable summable) -> std::vector<Elem>
{
    if (ideals.size() > kMaxSumCarrier)
        throw Error(ErrorKind::CarrierOverflow, std::to_string(ideals.size()) + " ideals exceed the sum-table limit of " + std::to_string(kMaxSumCarrier));
    const std::uint64_t subsets = std::uint64_t{1} << ideals.size();
    std::vector<Elem> sum(subsets, kUndefined);
    std::map<std::uint64_t, Elem> closed_union;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        ElementSet u;
        for (auto i : ElementSet(mask))
            u |= ideals[i].members;
        if (!summable(u))
            continue;
        auto [it, fresh] = closed_union.emplace(u.mask(), Elem{0});
        if (fresh)
            it->second = index.at(close(k, u).members.mask());
        sum[mask] = it->second;
    }
    return sum;
}

} // namespace

auto fully_summable(const FinitePKA &k, ElementSet a) -> bool
{
    return AssociationOracle(k).defined(a);
}

auto quotient_star_continuous(const FinitePKA &k, const CompletionOptions & /*options*/) -> CompletionResult
{
    const auto n = static_cast<Elem>(k.size());
    UnionFind uf(n);
    const auto pows = all_powers(k);
    std::set<std::vector<Elem>> unforceable;

    for (bool changed = true; changed;) {
        changed = false;
        congruence_close(k, uf);
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b)
                for (Elem c = 0; c < n; ++c) {
                    const Elem top = k.mul(k.mul(a, k.star(b)), c);
                    for (Elem w = 0; w < n; ++w) {
                        bool premise = true;
                        for (auto p : pows[b].values) {
                            const auto s = k.add_or_undefined(k.mul(k.mul(a, p), c), w);
                            if (s == kUndefined || uf.find(s) != uf.find(w)) {
                                premise = false;
                                break;
                            }
                        }
                        if (!premise)
                            continue;
                        const auto s = k.add_or_undefined(top, w);
                        if (s == kUndefined)
                            unforceable.insert({a, b, c, w});
                        else
                            changed |= uf.unite(s, w);
                    }
                }
    }

    std::vector<ElementSet> classes;
    ElementMap unit(n);
    std::map<Elem, Elem> class_of_root;
    for (Elem x = 0; x < n; ++x) {
        auto [it, fresh] = class_of_root.emplace(uf.find(x), static_cast<Elem>(classes.size()));
        if (fresh)
            classes.emplace_back();
        classes[it->second].insert(x);
        unit[x] = it->second;
    }

    const auto m = classes.size();
    PkaTables t;
    t.name = m == n ? k.name() : "S(" + k.name() + ")";
    for (auto cls : classes) {
        if (cls.size() == 1) {
            t.labels.push_back(k.label(*cls.begin()));
            continue;
        }
        std::string label = "[";
        for (auto x : cls)
            label += (label.size() > 1 ? "," : "") + k.label(x);
        t.labels.push_back(label + "]");
    }
    t.zero = unit[k.zero()];
    t.one = unit[k.one()];
    t.add.assign(m * m, kUndefined);
    t.mul.resize(m * m);
    t.star.resize(m);
    for (Elem x = 0; x < n; ++x) {
        t.star[unit[x]] = unit[k.star(x)];
        for (Elem y = 0; y < n; ++y) {
            t.mul[unit[x] * m + unit[y]] = unit[k.mul(x, y)];
            if (auto s = k.add_or_undefined(x, y); s != kUndefined)
                t.add[unit[x] * m + unit[y]] = unit[s];
        }
    }

    auto result = make_result(Functor::S, k, FinitePKA(std::move(t)));
    result.unit = std::move(unit);
    result.parts = std::move(classes);
    result.report = verify_pka(result.pka());
    result.report.merge(verify_star_continuity(result.pka()));
    for (const auto &w : unforceable) {
        if (result.log.size() == 20) {
            result.log.push_back("... " + std::to_string(unforceable.size() - 20) + " more unforceable obligations");
            break;
        }
        result.log.push_back("unforceable star-continuity obligation: a=" + k.label(w[0]) + " b=" + k.label(w[1]) + " c=" + k.label(w[2]) + " w=" + k.label(w[3]) + " (a·b*·c and w not summable)");
    }
    return result;
}

auto total_completion(const FinitePKA &k, const CompletionOptions &options) -> CompletionResult
{
    std::vector<std::string> log;
    require_star_continuous(k, options, log);
    const auto ideals = enumerate_star_ideals(k, options.host_limit);
    const auto index = ideal_index(ideals);
    const auto m = ideals.size();

    PkaTables t;
    t.name = "T(" + k.name() + ")";
    t.labels = ideal_labels(k, ideals);
    t.zero = index.at(ideal_zero(k).members.mask());
    t.one = index.at(ideal_one(k).members.mask());
    t.add.resize(m * m);
    t.star.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            t.add[i * m + j] = index.at(ideal_add(k, ideals[i], ideals[j]).members.mask());
        t.star[i] = index.at(ideal_star(k, ideals[i]).members.mask());
    }
    t.mul = ideal_mul_table(k, ideals, index);

    auto result = make_result(Functor::T, k, FinitePKA(std::move(t)));
    result.unit = principal_unit(k, index);
    result.parts = ideal_parts(ideals);
    result.report = verify_total_ka(result.pka());
    result.report.merge(verify_star_continuity(result.pka()));
    result.log = std::move(log);
    return result;
}

auto ps_completion(const FinitePKA &k, const CompletionOptions &options) -> CompletionResult
{
    std::vector<std::string> log;
    require_star_continuous(k, options, log);
    const auto ideals = enumerate_star_ideals(k, options.host_limit);
    const auto index = ideal_index(ideals);
    AssociationOracle oracle(k);

    PsTables t;
    t.name = "C(" + k.name() + ")";
    t.labels = ideal_labels(k, ideals);
    t.zero = index.at(ideal_zero(k).members.mask());
    t.one = index.at(ideal_one(k).members.mask());
    t.sum = ideal_sum_table(k, ideals, index, [&](ElementSet u) { return oracle.defined(u); });
    t.mul = ideal_mul_table(k, ideals, index);

    auto result = make_result(Functor::C, k, FinitePS(std::move(t)));
    result.unit = principal_unit(k, index);
    result.parts = ideal_parts(ideals);
    result.report = verify_ps(result.ps(), options.ps);
    result.log = std::move(log);
    return result;
}

auto cs_from_ps(const FinitePS &s, const CompletionOptions &options) -> CompletionResult
{
    std::vector<std::string> log;
    if (auto host_report = verify_ps(s, options.ps); !host_report.pass()) {
        if (!options.force)
            throw Error(ErrorKind::MalformedAlgebra, "'" + s.name() + "' is not a partially additive semiring: " + host_report.violations().front().message);
        log.push_back("forced: host fails verify_ps (" + host_report.violations().front().message + ")");
    }
    const auto ideals = enumerate_ps_ideals(s);
    if (ideals.size() > kMaxSumCarrier)
        throw Error(ErrorKind::CarrierOverflow, std::to_string(ideals.size()) + " ideals exceed the sum-table limit of " + std::to_string(kMaxSumCarrier));
    std::map<std::uint64_t, Elem> index;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        index.emplace(ideals[i].mask(), static_cast<Elem>(i));
    const auto m = ideals.size();

    PsTables t;
    t.name = "T'(" + s.name() + ")";
    for (auto i : ideals)
        t.labels.push_back(ps_ideal_label(s, i));
    t.zero = index.at(ps_close(s, ElementSet{s.zero()}).mask());
    t.one = index.at(ps_close(s, ElementSet{s.one()}).mask());
    t.closed = true;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    t.sum.resize(subsets);
    std::map<std::uint64_t, Elem> closed_union;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        ElementSet u;
        for (auto i : ElementSet(mask))
            u |= ideals[i];
        auto [it, fresh] = closed_union.emplace(u.mask(), Elem{0});
        if (fresh)
            it->second = index.at(ps_close(s, u).mask());
        t.sum[mask] = it->second;
    }
    t.mul.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t.mul[i * m + j] = index.at(ps_close(s, ps_set_product(s, ideals[i], ideals[j])).mask());

    auto result = make_result(Functor::Tp, s, FinitePS(std::move(t)));
    result.unit.resize(s.size());
    for (Elem x = 0; x < s.size(); ++x)
        result.unit[x] = index.at(ps_close(s, ElementSet{x}).mask());
    result.parts = ideals;
    result.report = verify_cs(result.ps(), options.ps);
    result.log = std::move(log);
    return result;
}

auto cs_from_ka(const FinitePKA &k, const CompletionOptions &options) -> CompletionResult
{
    std::vector<std::string> log;
    if (!k.is_total()) {
        if (!options.force)
            throw Error(ErrorKind::NotTotal, "'" + k.name() + "' does not have a total +");
        log.push_back("forced: host + is not total");
    }
    require_star_continuous(k, options, log);
    const auto ideals = enumerate_star_ideals(k, options.host_limit);
    const auto index = ideal_index(ideals);

    PsTables t;
    t.name = "C'(" + k.name() + ")";
    t.labels = ideal_labels(k, ideals);
    t.zero = index.at(ideal_zero(k).members.mask());
    t.one = index.at(ideal_one(k).members.mask());
    t.closed = true;
    t.sum = ideal_sum_table(k, ideals, index, [](ElementSet) { return true; });
    t.mul = ideal_mul_table(k, ideals, index);

    auto result = make_result(Functor::Cp, k, FinitePS(std::move(t)));
    result.unit = principal_unit(k, index);
    result.parts = ideal_parts(ideals);
    result.report = verify_cs(result.ps(), options.ps);
    result.log = std::move(log);
    return result;
}

auto complete(Functor f, const Structure &host, const CompletionOptions &options) -> CompletionResult
{
    if (f == Functor::Tp) {
        if (const auto *s = std::get_if<FinitePS>(&host))
            return cs_from_ps(*s, options);
        throw Error(ErrorKind::KindMismatch, "T' needs a partially additive semiring host");
    }
    const auto *k = std::get_if<FinitePKA>(&host);
    if (k == nullptr)
        throw Error(ErrorKind::KindMismatch, std::string(to_string(f)) + " needs a PKA host");
    switch (f) {
    case Functor::S: return quotient_star_continuous(*k, options);
    case Functor::T: return total_completion(*k, options);
    case Functor::C: return ps_completion(*k, options);
    case Functor::Cp: return cs_from_ka(*k, options);
    case Functor::Tp: break;
    }
    throw Error(ErrorKind::KindMismatch, "unreachable functor");
}

auto lift_hom(const CompletionResult &src, const CompletionResult &tgt, std::span<const Elem> f) -> ElementMap
{
    if (src.functor != tgt.functor)
        throw Error(ErrorKind::KindMismatch, "lifting across different functors");
    const auto functor = src.functor;
    const auto input_kind = functor == Functor::Tp ? StructureKind::PS : StructureKind::PKA;
    if (auto r = is_homomorphism(f, src.host, tgt.host, input_kind); !r.pass())
        throw Error(ErrorKind::NotAHomomorphism, "input map is not a homomorphism: " + r.violations().front().message);

    ElementMap lifted(src.parts.size());
    for (std::size_t i = 0; i < src.parts.size(); ++i) {
        const auto part = src.parts[i];
        ElementSet image;
        for (auto x : part)
            image.insert(f[x]);
        if (functor == Functor::S) {
            std::set<Elem> classes;
            for (auto x : image)
                classes.insert(tgt.unit[x]);
            if (classes.size() != 1)
                throw Error(ErrorKind::NotAHomomorphism, "lifted map is not well defined on class " + structure_label(src.completed, static_cast<Elem>(i)));
            lifted[i] = *classes.begin();
        } else if (functor == Functor::Tp) {
            const auto &host = tgt.host_ps();
            ElementSet from_generators;
            for (auto x : ps_maximal_elements(src.host_ps(), part))
                from_generators.insert(f[x]);
            const auto closed = ps_close(host, image);
            if (ps_close(host, from_generators) != closed)
                throw Error(ErrorKind::NotAHomomorphism, "closure of the image depends on the generators");
            lifted[i] = tgt.element_of(closed);
        } else {
            const auto &host = tgt.host_pka();
            ElementSet from_generators;
            for (auto x : maximal_elements(src.host_pka(), part))
                from_generators.insert(f[x]);
            const auto closed = close(host, image).members;
            if (close(host, from_generators).members != closed)
                throw Error(ErrorKind::NotAHomomorphism, "closure of the image depends on the generators");
            lifted[i] = tgt.element_of(closed);
        }
    }
    if (auto r = is_homomorphism(lifted, src.completed, tgt.completed, result_kind(functor)); !r.pass())
        throw Error(ErrorKind::NotAHomomorphism, "lifted map fails verification: " + r.violations().front().message);
    return lifted;
}

} // namespace pka
