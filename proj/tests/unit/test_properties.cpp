#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <pka/completions.hpp>
#include <pka/homsearch.hpp>
#include <pka/star_ideals.hpp>
#include <pka/verify.hpp>

#include <doctest.h>

using namespace pka;

namespace {

/// Axiom-passing algebras plus extensions of random groups and their T completions.
auto population() -> std::vector<FinitePKA>
{
    auto out = fixtures::axiom_passing();
    for (std::size_t n = 4; n <= 6; ++n) {
        out.push_back(fixtures::ext(n));
        out.push_back(total_completion(fixtures::ext(n)).pka());
    }
    return out;
}

auto below(const FinitePKA &k, Elem x, Elem y) -> bool { return oracle::below(k, x, y); }

} // namespace

TEST_CASE("the natural order is a partial order with 0 at the bottom")
{
    for (const auto &k : population()) {
        const auto n = static_cast<Elem>(k.size());
        INFO(k.name());
        for (Elem x = 0; x < n; ++x) {
            CHECK(k.leq(x, x));
            CHECK(k.leq(k.zero(), x));
            for (Elem y = 0; y < n; ++y) {
                if (x != y && k.leq(x, y))
                    CHECK_FALSE(k.leq(y, x));
                for (Elem z = 0; z < n; ++z)
                    if (k.leq(x, y) && k.leq(y, z))
                        CHECK(k.leq(x, z));
            }
        }
    }
}

TEST_CASE("a defined sum is the least upper bound")
{
    for (const auto &k : population()) {
        const auto n = static_cast<Elem>(k.size());
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                const auto s = k.add_or_undefined(x, y);
                if (s == kUndefined)
                    continue;
                CHECK(k.leq(x, s));
                CHECK(k.leq(y, s));
                for (Elem z = 0; z < n; ++z)
                    if (k.leq(x, z) && k.leq(y, z))
                        CHECK(k.leq(s, z));
            }
    }
}

TEST_CASE("multiplication is monotone")
{
    for (const auto &k : population()) {
        const auto n = static_cast<Elem>(k.size());
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y) {
                if (!k.leq(x, y))
                    continue;
                for (Elem z = 0; z < n; ++z) {
                    CHECK(k.leq(k.mul(z, x), k.mul(z, y)));
                    CHECK(k.leq(k.mul(x, z), k.mul(y, z)));
                }
            }
    }
}

TEST_CASE("star laws")
{
    for (const auto &k : population()) {
        const auto n = static_cast<Elem>(k.size());
        INFO(k.name());
        for (Elem x = 0; x < n; ++x) {
            const auto xs = k.star(x);
            CHECK(k.leq(k.one(), xs));
            CHECK(k.leq(x, xs));
            CHECK(k.mul(xs, xs) == xs);
            CHECK(k.star(xs) == xs);
            for (auto p : oracle::power_set(k, x))
                CHECK(k.leq(p, xs));
            for (Elem y = 0; y < n; ++y)
                if (k.leq(x, y))
                    CHECK(k.leq(xs, k.star(y)));
        }
        CHECK(k.star(k.zero()) == k.one());
    }
}

TEST_CASE("verify_pka agrees with clause oracles on random tables")
{
    gen::Rng rng(53);
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = gen::random_pka(rng, 1 + gen::pick(rng, 5));
        const auto n = static_cast<Elem>(k.size());
        const auto r = verify_pka(k);
        bool assoc = true, one_below_star = true, zero_left = true;
        for (Elem x = 0; x < n; ++x) {
            one_below_star = one_below_star && below(k, k.one(), k.star(x));
            zero_left = zero_left && k.mul(k.zero(), x) == k.zero();
            for (Elem y = 0; y < n; ++y)
                for (Elem z = 0; z < n; ++z)
                    assoc = assoc && k.mul(x, k.mul(y, z)) == k.mul(k.mul(x, y), z);
        }
        CHECK(r.violates("5") == !assoc);
        CHECK(r.violates("12") == !one_below_star);
        CHECK(r.violates("10") == !zero_left);
        CHECK(verify_total_ka(k).violates("totality") == !k.is_total());
    }
}

TEST_CASE("homomorphisms preserve the order")
{
    const auto pop = population();
    for (std::size_t i = 0; i < pop.size(); i += 4)
        for (std::size_t j = 0; j < pop.size(); j += 5) {
            if (pop[i].size() > 6 || pop[j].size() > 6)
                continue;
            for (const auto &f : enumerate_homs(pop[i], pop[j], StructureKind::PKA))
                for (Elem x = 0; x < pop[i].size(); ++x)
                    for (Elem y = 0; y < pop[i].size(); ++y)
                        if (pop[i].leq(x, y))
                            CHECK(pop[j].leq(f[x], f[y]));
        }
}

TEST_CASE("star-ideals are closed under intersection and join by addition")
{
    for (const auto &k : fixtures::axiom_passing()) {
        if (!verify_star_continuity(k).pass())
            continue;
        const auto ideals = enumerate_star_ideals(k);
        for (const auto &i : ideals)
            for (const auto &j : ideals) {
                const auto meet = i.members & j.members;
                CHECK(close(k, meet).members == meet);
                const auto join = ideal_add(k, i, j).members;
                CHECK(i.members.subset_of(join));
                CHECK(j.members.subset_of(join));
                for (const auto &l : ideals)
                    if (i.members.subset_of(l.members) && j.members.subset_of(l.members))
                        CHECK(join.subset_of(l.members));
            }
    }
}

TEST_CASE("T is idempotent up to isomorphism")
{
    for (const auto &k : standard_corpus()) {
        const auto t = total_completion(k).pka();
        const auto tt = total_completion(t).pka();
        CHECK(find_isomorphism(t, tt, StructureKind::KA).has_value());
    }
}
