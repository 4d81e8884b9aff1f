#include <pka/errors.hpp>
#include <pka/star_ideals.hpp>

#include <algorithm>
#include <deque>
#include <set>

namespace pka {

namespace {

auto by_size_then_mask(ElementSet a, ElementSet b) -> bool
{
    return a.size() != b.size() ? a.size() < b.size() : a.mask() < b.mask();
}

template <typename Close>
auto enumerate_closed(ElementSet universe, ElementSet bottom, Close close_fn) -> std::vector<ElementSet>
{
    std::set<std::uint64_t> seen{bottom.mask()};
    std::deque<ElementSet> queue{bottom};
    std::vector<ElementSet> found{bottom};
    while (!queue.empty()) {
        auto current = queue.front();
        queue.pop_front();
        for (auto x : universe - current) {
            ElementSet grown = current;
            grown.insert(x);
            auto next = close_fn(grown);
            if (!seen.insert(next.mask()).second)
                continue;
            if (found.size() == kMaxCarrier)
                throw Error(ErrorKind::CarrierOverflow, "more than " + std::to_string(kMaxCarrier) + " ideals");
            found.push_back(next);
            queue.push_back(next);
        }
    }
    std::sort(found.begin(), found.end(), by_size_then_mask);
    return found;
}

template <typename Leq>
auto maximal_in(ElementSet a, Leq leq) -> ElementSet
{
    ElementSet out;
    for (auto x : a) {
        bool dominated = false;
        for (auto y : a)
            if (y != x && leq(x, y)) {
                dominated = true;
                break;
            }
        if (!dominated)
            out.insert(x);
    }
    return out;
}

template <typename Labeler>
auto angle_label(ElementSet maximal, Labeler labeler) -> std::string
{
    std::string out = "<";
    bool first = true;
    for (auto x : maximal) {
        if (!first)
            out += ',';
        out += labeler(x);
        first = false;
    }
    return out + ">";
}

} // namespace

auto down_set(const FinitePKA &k, ElementSet a) -> ElementSet
{
    ElementSet out;
    for (Elem y = 0; y < k.size(); ++y)
        for (auto x : a)
            if (k.leq(y, x)) {
                out.insert(y);
                break;
            }
    return out;
}

auto tau_step(const FinitePKA &k, ElementSet a) -> ElementSet
{
    ElementSet out = down_set(k, a);
    for (auto x : a)
        for (auto y : a)
            if (auto s = k.add_or_undefined(x, y); s != kUndefined)
                out.insert(s);

    const auto n = static_cast<Elem>(k.size());
    for (Elem b = 0; b < n; ++b) {
        const auto pw = powers(k, b).values;
        for (Elem x = 0; x < n; ++x)
            for (Elem c = 0; c < n; ++c) {
                bool all_in = true;
                for (auto p : pw)
                    if (!a.contains(k.mul(k.mul(x, p), c))) {
                        all_in = false;
                        break;
                    }
                if (all_in)
                    out.insert(k.mul(k.mul(x, k.star(b)), c));
            }
    }
    return out;
}

auto close(const FinitePKA &k, ElementSet a) -> StarIdeal
{
    ElementSet current = a.empty() ? ElementSet{k.zero()} : a;
    for (;;) {
        auto next = tau_step(k, current) | current;
        if (next == current)
            return {current, a};
        current = next;
    }
}

auto principal(const FinitePKA &k, Elem a) -> StarIdeal
{
    return {down_set(k, ElementSet{a}), ElementSet{a}};
}

auto set_product(const FinitePKA &k, ElementSet a, ElementSet b) -> ElementSet
{
    ElementSet out;
    for (auto x : a)
        for (auto y : b)
            out.insert(k.mul(x, y));
    return out;
}

auto ideal_zero(const FinitePKA &k) -> StarIdeal { return close(k, ElementSet{k.zero()}); }

auto ideal_one(const FinitePKA &k) -> StarIdeal { return close(k, ElementSet{k.one()}); }

auto ideal_add(const FinitePKA &k, const StarIdeal &i, const StarIdeal &j) -> StarIdeal
{
    return close(k, i.members | j.members);
}

auto ideal_mul(const FinitePKA &k, const StarIdeal &i, const StarIdeal &j) -> StarIdeal
{
    return close(k, set_product(k, i.members, j.members));
}

auto ideal_star(const FinitePKA &k, const StarIdeal &i) -> StarIdeal
{
    return ideal_star_from(k, i.members.to_vector());
}

auto ideal_star_from(const FinitePKA &k, const std::vector<Elem> &generators) -> StarIdeal
{
    Elem product = k.one();
    for (auto g : generators)
        product = k.mul(product, k.star(g));
    return close(k, ElementSet{k.star(product)});
}

auto enumerate_star_ideals(const FinitePKA &k, std::size_t host_limit) -> std::vector<StarIdeal>
{
    if (k.size() > host_limit)
        throw Error(ErrorKind::CarrierOverflow, "'" + k.name() + "' has " + std::to_string(k.size()) + " elements; ideal enumeration is limited to " + std::to_string(host_limit));
    auto sets = enumerate_closed(k.carrier(), close(k, {}).members, [&](ElementSet a) { return close(k, a).members; });
    std::vector<StarIdeal> out;
    out.reserve(sets.size());
    for (auto s : sets)
        out.push_back({s, maximal_elements(k, s)});
    return out;
}

auto maximal_elements(const FinitePKA &k, ElementSet a) -> ElementSet
{
    return maximal_in(a, [&](Elem x, Elem y) { return k.leq(x, y); });
}

auto ideal_label(const FinitePKA &k, ElementSet members) -> std::string
{
    return angle_label(maximal_elements(k, members), [&](Elem x) { return k.label(x); });
}

auto ps_down_set(const FinitePS &s, ElementSet a) -> ElementSet
{
    ElementSet out;
    for (Elem y = 0; y < s.size(); ++y)
        for (auto x : a)
            if (s.leq(y, x)) {
                out.insert(y);
                break;
            }
    return out;
}

auto ps_close(const FinitePS &s, ElementSet a) -> ElementSet
{
    ElementSet current = a;
    current.insert(s.zero());
    for (;;) {
        ElementSet next = ps_down_set(s, current);
        const auto m = current.mask();
        for (std::uint64_t sub = m; sub != 0; sub = (sub - 1) & m)
            if (auto v = s.sum_or_undefined(ElementSet(sub)); v != kUndefined)
                next.insert(v);
        next |= current;
        if (next == current)
            return current;
        current = next;
    }
}

auto ps_set_product(const FinitePS &s, ElementSet a, ElementSet b) -> ElementSet
{
    ElementSet out;
    for (auto x : a)
        for (auto y : b)
            out.insert(s.mul(x, y));
    return out;
}

auto ps_maximal_elements(const FinitePS &s, ElementSet a) -> ElementSet
{
    return maximal_in(a, [&](Elem x, Elem y) { return s.leq(x, y); });
}

auto ps_ideal_label(const FinitePS &s, ElementSet members) -> std::string
{
    return angle_label(ps_maximal_elements(s, members), [&](Elem x) { return s.label(x); });
}

auto enumerate_ps_ideals(const FinitePS &s) -> std::vector<ElementSet>
{
    return enumerate_closed(s.carrier(), ps_close(s, {}), [&](ElementSet a) { return ps_close(s, a); });
}

} // namespace pka
