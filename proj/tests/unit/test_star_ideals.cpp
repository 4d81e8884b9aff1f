#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <pka/completions.hpp>
#include <pka/errors.hpp>
#include <pka/star_ideals.hpp>
#include <pka/verify.hpp>

#include <doctest.h>

using namespace pka;

namespace {

auto star_continuous_corpus() -> std::vector<FinitePKA>
{
    std::vector<FinitePKA> out;
    for (const auto &k : fixtures::axiom_passing())
        if (verify_star_continuity(k).pass() && k.size() <= 8)
            out.push_back(k);
    return out;
}

} // namespace

TEST_CASE("tau_step clauses")
{
    const auto k = fixtures::ext(2);
    const auto top = k.element("top"), one = k.element("1"), g = k.element("g");
    const auto step = tau_step(k, ElementSet{top});
    CHECK(step == k.carrier()); // everything lies below top
    CHECK(tau_step(k, ElementSet{one}) == ElementSet{k.zero(), one});
    // {1·g^n·1} = {1, g} forces 1·g*·1 = top
    CHECK(tau_step(k, ElementSet{one, g}).contains(top));
    for (const auto &i : enumerate_star_ideals(k))
        CHECK(tau_step(k, i.members) == i.members);
}

TEST_CASE("close matches the saturation oracle on every subset")
{
    for (const auto &k : fixtures::axiom_passing()) {
        if (k.size() > 6)
            continue;
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << k.size()); ++m)
            CHECK(close(k, ElementSet(m)).members == oracle::saturate(k, ElementSet(m)));
    }
}

TEST_CASE("close of a singleton is its down-set")
{
    for (const auto &k : fixtures::axiom_passing())
        for (Elem a = 0; a < k.size(); ++a) {
            ElementSet below;
            for (Elem x = 0; x < k.size(); ++x)
                if (k.leq(x, a))
                    below.insert(x);
            CHECK(close(k, ElementSet{a}).members == below);
            CHECK(principal(k, a).members == below);
        }
}

TEST_CASE("close edge cases")
{
    const auto k = fixtures::ext(3);
    CHECK(close(k, ElementSet{}).members == ElementSet{k.zero()});
    CHECK(close(k, ElementSet{k.zero()}).members == ElementSet{k.zero()});
    CHECK(principal(k, k.zero()).members == ElementSet{k.zero()});
    CHECK(ElementSet{k.zero(), k.one()}.subset_of(principal(k, k.one()).members));
}

TEST_CASE("close is a closure operator")
{
    gen::Rng rng(3);
    for (const auto &k : fixtures::axiom_passing())
        for (int trial = 0; trial < 30; ++trial) {
            const auto a = oracle::random_subset(rng, k.size());
            const auto b = a | oracle::random_subset(rng, k.size());
            const auto ca = close(k, a).members;
            CHECK(a.subset_of(ca));
            CHECK(ca.subset_of(close(k, b).members));
            CHECK(close(k, ca).members == ca);
        }
}

TEST_CASE("set_product")
{
    const auto k = fixtures::ext(3);
    const auto all = k.carrier();
    CHECK(set_product(k, ElementSet{k.one()}, all) == all);
    CHECK(set_product(k, ElementSet{k.zero()}, all) == ElementSet{k.zero()});
    const auto g = k.element("g"), g2 = k.element("g2"), one = k.one();
    CHECK(set_product(k, ElementSet{g, g2}, ElementSet{g}) == ElementSet{k.mul(g, g), k.mul(g2, g)});
    CHECK(set_product(k, ElementSet{g, g2}, ElementSet{g}) == ElementSet{g2, one});
}

TEST_CASE("ideal arithmetic identities")
{
    for (const auto &k : star_continuous_corpus()) {
        const auto ideals = enumerate_star_ideals(k);
        for (const auto &i : ideals) {
            CHECK(ideal_add(k, i, ideal_zero(k)) == i);
            CHECK(ideal_mul(k, ideal_one(k), i) == i);
            CHECK(ideal_mul(k, i, ideal_one(k)) == i);
            for (const auto &j : ideals)
                CHECK((ideal_add(k, i, j) == j) == i.members.subset_of(j.members));
        }
        CHECK(ideal_star(k, ideal_zero(k)) == principal(k, k.one()));
    }
}

TEST_CASE("enumerate_star_ideals matches closing every subset")
{
    for (const auto &k : fixtures::axiom_passing()) {
        if (k.size() > 6)
            continue;
        const auto ideals = enumerate_star_ideals(k);
        auto expected = oracle::all_ideals(k);
        CHECK(ideals.size() == expected.size());
        CHECK(ideals.size() <= (std::size_t{1} << k.size()));
        for (const auto &i : ideals)
            CHECK(std::find(expected.begin(), expected.end(), i.members) != expected.end());
        CHECK(ideals.front().members == ElementSet{k.zero()});
        for (Elem a = 0; a < k.size(); ++a)
            CHECK(std::find(ideals.begin(), ideals.end(), principal(k, a)) != ideals.end());
    }
}

TEST_CASE("ideal counts on the corpus")
{
    // frozen from oracle::all_ideals
    const auto corpus = standard_corpus();
    const std::vector<std::size_t> counts{2, 3, 4, 8, 4};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(enumerate_star_ideals(corpus[i]).size() == counts[i]);
        CHECK(oracle::all_ideals(corpus[i]).size() == counts[i]);
    }
    const auto b = enumerate_star_ideals(boolean_ka());
    CHECK(b[0].members == ElementSet{0});
    CHECK(b[1].members == ElementSet{0, 1});
}

TEST_CASE("enumeration bounds")
{
    CHECK_THROWS_AS(enumerate_star_ideals(fixtures::ext(3), 4), Error);
    CHECK_NOTHROW(enumerate_star_ideals(fixtures::ext(3), 5));
}

TEST_CASE("closure absorbs inner closures of products and unions")
{
    for (const auto &k : standard_corpus()) {
        const auto subsets = std::uint64_t{1} << k.size();
        for (std::uint64_t ma = 0; ma < subsets; ++ma) {
            const ElementSet a(ma);
            const auto ca = close(k, a).members;
            for (std::uint64_t mb = 0; mb < subsets; ++mb) {
                const ElementSet b(mb);
                const auto cb = close(k, b).members;
                const auto prod = close(k, set_product(k, a, b)).members;
                CHECK(prod == close(k, set_product(k, ca, b)).members);
                CHECK(prod == close(k, set_product(k, a, cb)).members);
                const auto uni = close(k, a | b).members;
                CHECK(uni == close(k, ca | b).members);
                CHECK(uni == close(k, a | cb).members);
            }
        }
    }
}

TEST_CASE("ps_close")
{
    const auto s = ps_completion(boolean_ka()).ps();
    for (Elem a = 0; a < s.size(); ++a) {
        CHECK(ps_close(s, ElementSet{a}) == ps_down_set(s, ElementSet{a}));
        CHECK(ps_close(s, ElementSet{a}) == oracle::ps_close(s, ElementSet{a}));
    }
    CHECK(ps_close(s, ElementSet{s.zero()}) == ElementSet{s.zero()});
    for (const auto &k : standard_corpus()) {
        const auto c = ps_completion(k).ps();
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << c.size()); ++m) {
            const auto once = ps_close(c, ElementSet(m));
            CHECK(once == oracle::ps_close(c, ElementSet(m)));
            CHECK(ps_close(c, once) == once);
        }
    }
}

TEST_CASE("labels of ideals")
{
    const auto k = fixtures::ext(3);
    CHECK(ideal_label(k, principal(k, k.element("top")).members) == "<top>");
    CHECK(ideal_label(k, close(k, ElementSet{k.one(), k.element("g")}).members) == "<1,g>");
    CHECK(maximal_elements(k, close(k, ElementSet{k.one(), k.element("g")}).members) == ElementSet{k.one(), k.element("g")});
}

TEST_CASE("ideal operations do not depend on the chosen generators")
{
    gen::Rng rng(17);
    auto other_generators = [&](const FinitePKA &k, const StarIdeal &i) {
        // maximal members always generate; throw in random extra members
        auto g = maximal_elements(k, i.members);
        for (auto x : i.members)
            if (gen::coin(rng))
                g.insert(x);
        return g;
    };
    auto shuffled = [&](ElementSet s) {
        auto v = s.to_vector();
        std::shuffle(v.begin(), v.end(), rng);
        return v;
    };
    for (const auto &k : star_continuous_corpus()) {
        const auto ideals = enumerate_star_ideals(k);
        for (int trial = 0; trial < 40; ++trial) {
            const auto &i = ideals[gen::pick(rng, ideals.size())];
            const auto &j = ideals[gen::pick(rng, ideals.size())];
            const auto a1 = other_generators(k, i), a2 = other_generators(k, i);
            const auto b1 = other_generators(k, j), b2 = other_generators(k, j);
            REQUIRE(close(k, a1) == i);
            REQUIRE(close(k, a2) == i);
            CHECK(close(k, a1 | b1) == close(k, a2 | b2));
            CHECK(close(k, a1 | b1) == ideal_add(k, i, j));
            CHECK(close(k, set_product(k, a1, b1)) == close(k, set_product(k, a2, b2)));
            CHECK(close(k, set_product(k, a1, b1)) == ideal_mul(k, i, j));
            CHECK(ideal_star_from(k, shuffled(a1)) == ideal_star_from(k, shuffled(a2)));
            CHECK(ideal_star_from(k, shuffled(a1)) == ideal_star(k, i));
        }
    }
}
