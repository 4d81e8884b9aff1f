#pragma once

// Reference implementations used to freeze expected values. They share no code with the
// library beyond the table accessors: each one recomputes its answer the slow, obvious way.

#include <pka/algebra.hpp>
#include <pka/constructions.hpp>
#include <pka/homomorphism.hpp>
#include <pka/semiring.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace pka::oracle {

/// {b^n : n >= 0} by multiplying until a value repeats.
inline auto power_set(const FinitePKA &k, Elem b) -> ElementSet
{
    ElementSet seen;
    Elem p = k.one();
    while (!seen.contains(p)) {
        seen.insert(p);
        p = k.mul(b, p);
    }
    return seen;
}

inline auto below(const FinitePKA &k, Elem x, Elem y) -> bool
{
    return k.add_or_undefined(x, y) == y;
}

/// Least superset of A ∪ {0} closed under defined sums, the order ideal, and the
/// star rule, by naive saturation.
inline auto saturate(const FinitePKA &k, ElementSet a) -> ElementSet
{
    const auto n = static_cast<Elem>(k.size());
    ElementSet s = a;
    s.insert(k.zero());
    for (bool grew = true; grew;) {
        grew = false;
        auto put = [&](Elem e) {
            if (!s.contains(e)) {
                s.insert(e);
                grew = true;
            }
        };
        for (Elem x = 0; x < n; ++x) {
            if (!s.contains(x))
                continue;
            for (Elem y = 0; y < n; ++y) {
                if (below(k, y, x))
                    put(y);
                if (s.contains(y) && k.add_or_undefined(x, y) != kUndefined)
                    put(k.add_or_undefined(x, y));
            }
        }
        for (Elem a1 = 0; a1 < n; ++a1)
            for (Elem b = 0; b < n; ++b) {
                const auto ps = power_set(k, b);
                for (Elem c = 0; c < n; ++c) {
                    bool all = true;
                    for (auto p : ps)
                        all = all && s.contains(k.mul(k.mul(a1, p), c));
                    if (all)
                        put(k.mul(k.mul(a1, k.star(b)), c));
                }
            }
    }
    return s;
}

/// Every distinct close(A) over all subsets A.
inline auto all_ideals(const FinitePKA &k) -> std::vector<ElementSet>
{
    std::vector<ElementSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << k.size()); ++m) {
        auto c = saturate(k, ElementSet(m));
        if (std::find(out.begin(), out.end(), c) == out.end())
            out.push_back(c);
    }
    return out;
}

inline auto ps_below(const FinitePS &s, Elem x, Elem y) -> bool
{
    return s.sum_or_undefined(ElementSet{x, y}) == y;
}

inline auto ps_close(const FinitePS &s, ElementSet a) -> ElementSet
{
    const auto n = static_cast<Elem>(s.size());
    ElementSet out = a;
    out.insert(s.zero());
    for (bool grew = true; grew;) {
        grew = false;
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                if (out.contains(x) && !out.contains(y) && ps_below(s, y, x)) {
                    out.insert(y);
                    grew = true;
                }
        for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
            const ElementSet fam(m);
            if (!fam.subset_of(out))
                continue;
            const auto v = s.sum_or_undefined(fam);
            if (v != kUndefined && !out.contains(v)) {
                out.insert(v);
                grew = true;
            }
        }
    }
    return out;
}

/// Hom check written out clause by clause from the definition.
inline auto is_pka_hom(const std::vector<Elem> &f, const FinitePKA &a, const FinitePKA &b) -> bool
{
    const auto n = static_cast<Elem>(a.size());
    if (f[a.zero()] != b.zero() || f[a.one()] != b.one())
        return false;
    for (Elem x = 0; x < n; ++x) {
        if (f[a.star(x)] != b.star(f[x]))
            return false;
        for (Elem y = 0; y < n; ++y) {
            if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
                return false;
            if (a.add_or_undefined(x, y) == kUndefined)
                continue;
            if (b.add_or_undefined(f[x], f[y]) != f[a.add_or_undefined(x, y)])
                return false;
        }
    }
    return true;
}

inline auto is_ps_hom(const std::vector<Elem> &f, const FinitePS &a, const FinitePS &b) -> bool
{
    const auto n = static_cast<Elem>(a.size());
    if (f[a.zero()] != b.zero() || f[a.one()] != b.one())
        return false;
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (f[a.mul(x, y)] != b.mul(f[x], f[y]))
                return false;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
        const auto v = a.sum_or_undefined(ElementSet(m));
        if (v == kUndefined)
            continue;
        ElementSet image;
        for (auto e : ElementSet(m))
            image.insert(f[e]);
        if (b.sum_or_undefined(image) != f[v])
            return false;
    }
    return true;
}

/// All maps |a| -> |b| passing the hom check, in lexicographic order.
template <typename S, typename Check>
auto brute_homs(const S &a, const S &b, Check check) -> std::vector<std::vector<Elem>>
{
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> f(a.size(), 0);
    const auto m = static_cast<Elem>(b.size());
    while (true) {
        if (check(f, a, b))
            out.push_back(f);
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == m)
            f[i++] = 0;
        if (i == f.size())
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline auto brute_pka_homs(const FinitePKA &a, const FinitePKA &b) { return brute_homs(a, b, is_pka_hom); }
inline auto brute_ps_homs(const FinitePS &a, const FinitePS &b) { return brute_homs(a, b, is_ps_hom); }

/// s is obtained from t by deleting states, and both start alike.
inline auto subsequence_with_same_start(const StateString &s, const StateString &t) -> bool
{
    if (s.empty())
        return true;
    if (t.empty() || s.states.front() != t.states.front())
        return false;
    std::size_t i = 0;
    for (auto st : t.states)
        if (i < s.size() && s.states[i] == st)
            ++i;
    return i == s.size();
}

/// Inclusion-maximal subsets of A that are functional and contain no generalized-prefix pair.
inline auto maximal_sparse_subsets(const StringContext &ctx, const StringSet &a) -> std::vector<StringSet>
{
    std::vector<StateString> items(a.begin(), a.end());
    std::vector<StringSet> sparse;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << items.size()); ++m) {
        StringSet sub;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (m >> i & 1)
                sub.insert(items[i]);
        bool ok = is_functional(ctx, sub);
        for (const auto &s : sub)
            for (const auto &t : sub)
                if (!(s == t) && subsequence_with_same_start(s, t))
                    ok = false;
        if (ok)
            sparse.push_back(sub);
    }
    std::vector<StringSet> out;
    for (const auto &s : sparse) {
        bool maximal = true;
        for (const auto &t : sparse)
            if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
                maximal = false;
        if (maximal)
            out.push_back(s);
    }
    return out;
}

inline auto random_subset(std::mt19937_64 &rng, std::size_t n) -> ElementSet
{
    return ElementSet(std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << n) - 1)(rng));
}

} // namespace pka::oracle
