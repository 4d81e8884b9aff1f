#include "fixtures.hpp"
#include "oracles.hpp"

#include <pka/constructions.hpp>
#include <pka/errors.hpp>
#include <pka/verify.hpp>

#include <doctest.h>

using namespace pka;

namespace {

auto ext2() -> FinitePKA { return fixtures::ext(2); }

} // namespace

TEST_CASE("summable and add on the Z2 extension")
{
    const auto k = ext2();
    const auto one = k.element("1"), g = k.element("g"), top = k.element("top");
    for (Elem x = 0; x < k.size(); ++x) {
        CHECK(k.summable(x, k.zero()));
        CHECK(k.summable(x, x));
        CHECK(k.add(x, k.zero()) == x);
    }
    CHECK_FALSE(k.summable(g, one));
    CHECK_FALSE(k.summable(one, g));
    CHECK(k.add(g, top) == top);
    CHECK_THROWS_AS((void)k.add(g, one), Error);
}

TEST_CASE("mul, star and order on the Boolean algebra")
{
    const auto b = boolean_ka();
    const auto zero = b.zero(), one = b.one();
    CHECK(b.add(one, one) == one);
    CHECK(b.star(zero) == one);
    for (Elem x = 0; x < b.size(); ++x) {
        CHECK(b.mul(one, x) == x);
        CHECK(b.mul(zero, x) == zero);
        CHECK(b.leq(zero, x));
        CHECK(b.leq(x, x));
    }
}

TEST_CASE("star of 0 in B is forced to 1")
{
    // Both candidate star tables for 0; only 0* = 1 survives the checker.
    for (Elem candidate : {Elem{0}, Elem{1}}) {
        auto t = boolean_ka().tables();
        t.star[0] = candidate;
        CHECK(verify_pka(FinitePKA(t)).pass() == (candidate == 1));
    }
}

TEST_CASE("1 <= top in the Z2 extension")
{
    const auto k = ext2();
    CHECK(k.leq(k.element("1"), k.element("top")));
    CHECK_FALSE(k.leq(k.element("top"), k.element("1")));
}

TEST_CASE("powers")
{
    const auto b = boolean_ka();
    auto p = powers(b, b.one());
    CHECK(p.values == std::vector<Elem>{b.one()});
    CHECK(p.tail == 0);
    CHECK(p.cycle == 1);

    const auto k = ext2();
    const auto g = k.element("g");
    p = powers(k, g);
    CHECK(p.values == std::vector<Elem>{k.one(), g});
    CHECK(p.tail == 0);
    CHECK(p.cycle == 2);

    for (const auto &a : fixtures::axiom_passing()) {
        p = powers(a, a.zero());
        CHECK(p.values == std::vector<Elem>{a.one(), a.zero()});
        CHECK(p.values[p.tail] == a.zero());
    }
}

TEST_CASE("powers agree with direct multiplication and are closed under b·")
{
    for (const auto &k : fixtures::axiom_passing())
        for (Elem b = 0; b < k.size(); ++b) {
            const auto p = powers(k, b);
            const auto set = ElementSet::of(p.values);
            CHECK(set == oracle::power_set(k, b));
            CHECK(set.size() == p.values.size());
            CHECK(p.tail + p.cycle == p.values.size());
            for (auto s : set)
                CHECK(set.contains(k.mul(b, s)));
        }
}

TEST_CASE("verify_pka on the corpus")
{
    for (const auto &k : standard_corpus()) {
        INFO(k.name());
        CHECK(verify_pka(k).pass());
        CHECK(verify_star_continuity(k).pass());
    }
}

TEST_CASE("the literal star table of the monoid extension")
{
    const auto lit = monoid_extension(cyclic_monoid(2), ExtensionStar::Literal);
    const auto r = verify_pka(lit);
    CHECK_FALSE(r.pass());
    REQUIRE(r.violates("12"));
    const auto v12 = std::find_if(r.violations().begin(), r.violations().end(), [](const Violation &v) { return v.axiom == "12"; });
    CHECK(v12->witness == std::vector<Elem>{lit.element("0")});
    CHECK(r.violates("15"));
    CHECK(r.violates("16"));
    const auto v15 = std::find_if(r.violations().begin(), r.violations().end(), [](const Violation &v) { return v.axiom == "15"; });
    CHECK(v15->witness == std::vector<Elem>{lit.element("1"), lit.element("1")});
    // Only the star table differs from the corrected extension.
    auto corrected = fixtures::ext(2).tables();
    auto literal = lit.tables();
    CHECK(corrected.add == literal.add);
    CHECK(corrected.mul == literal.mul);
    CHECK(corrected.star != literal.star);
}

TEST_CASE("verify_total_ka")
{
    CHECK(verify_total_ka(boolean_ka()).pass());
    const auto r = verify_total_ka(ext2());
    CHECK(r.violates("totality"));
    CHECK(verify_pka(ext2()).pass());
}

TEST_CASE("adjoining a top to a host that already has one")
{
    // ext(Z2) has an absorbing top; the new element makes 1 + g differ from 1 + (g + top).
    const auto k = adjoin_top(ext2());
    const auto r = verify_total_ka(k);
    CHECK_FALSE(r.violates("totality"));
    CHECK(r.violates("1"));
    CHECK(r.violates("8"));
    CHECK(r.violates("9"));
    const auto v1 = std::find_if(r.violations().begin(), r.violations().end(), [](const Violation &v) { return v.axiom == "1"; });
    CHECK(v1->witness == std::vector<Elem>{k.element("1"), k.element("g"), k.element("top")});
}

TEST_CASE("star-continuity failures carry a witness")
{
    const auto lit = monoid_extension(cyclic_monoid(2), ExtensionStar::Literal);
    const auto r = verify_star_continuity(lit);
    CHECK(r.violates("star-continuity-upper"));
    for (const auto &v : r.violations())
        CHECK(v.witness.size() == 4);
}

TEST_CASE("strict associativity mode")
{
    for (const auto &k : standard_corpus()) {
        VerifyOptions strict;
        strict.strict_associativity = true;
        CHECK(verify_pka(k, strict).pass());
    }
    // 1+a = a and a+b = b but 1+b is undefined: (b+a)+1 is undefined while b+(a+1) = b.
    PkaTables t;
    t.name = "lopsided";
    t.labels = {"0", "1", "a", "b"};
    t.zero = 0;
    t.one = 1;
    t.add.assign(16, kUndefined);
    auto put = [&](Elem x, Elem y, Elem z) { t.add[x * 4 + y] = t.add[y * 4 + x] = z; };
    put(1, 2, 2);
    put(2, 3, 3);
    t.mul.assign(16, 0);
    t.star.assign(4, 1);
    const FinitePKA k(t);
    const auto plain = verify_pka(k);
    CHECK(plain.violates("1"));
    CHECK_FALSE(plain.violates("1-converse"));
    VerifyOptions strict;
    strict.strict_associativity = true;
    const auto r = verify_pka(k, strict);
    CHECK(r.violates("1-converse"));
    const auto v = std::find_if(r.violations().begin(), r.violations().end(), [](const Violation &x) { return x.axiom == "1-converse"; });
    CHECK(v->witness == std::vector<Elem>{3, 2, 1});
}

TEST_CASE("malformed tables are rejected")
{
    auto t = boolean_ka().tables();
    t.mul[0] = 7;
    CHECK_THROWS_AS(FinitePKA{t}, Error);
    t = boolean_ka().tables();
    t.labels[1] = "0";
    CHECK_THROWS_AS(FinitePKA{t}, Error);
    t = boolean_ka().tables();
    t.add[1] = 0;
    t.add[2] = 1;
    CHECK_THROWS_AS(FinitePKA{t}, Error);
    t = boolean_ka().tables();
    t.star.pop_back();
    CHECK_THROWS_AS(FinitePKA{t}, Error);
}

TEST_CASE("the loader symmetrizes sums and inserts x+0 and x+x")
{
    PkaTables t;
    t.name = "one-sided";
    t.labels = {"0", "1"};
    t.zero = 0;
    t.one = 1;
    t.add.assign(4, kUndefined);
    t.mul = {0, 0, 0, 1};
    t.star = {1, 1};
    const FinitePKA k(t);
    CHECK(k.add(1, 0) == 1);
    CHECK(k.add(0, 1) == 1);
    CHECK(k.add(1, 1) == 1);
    CHECK(k == boolean_ka());
}
