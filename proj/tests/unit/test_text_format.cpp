#include "fixtures.hpp"
#include "generators.hpp"

#include <pka/errors.hpp>
#include <pka/text_format.hpp>

#include <doctest.h>

using namespace pka;

namespace {

auto error_line(std::string_view text) -> std::size_t
{
    try {
        (void)parse_document(text);
    } catch (const ParseError &e) {
        return e.line();
    }
    FAIL("parsed without error: " << text);
    return 0;
}

const char *kBool = R"(# comment before the header
pka B
elements 0 1   # trailing comment
zero 0
one 1

add 1 0 1
mul 0 0 0
mul 0 1 0
mul 1 0 0
mul 1 1 1
star 0 1
star 1 1
end
)";

} // namespace

TEST_CASE("parsing a hand-written file")
{
    const auto k = parse_pka(kBool);
    CHECK(k == boolean_ka());
    CHECK(k.name() == "B");
    CHECK(detect_kind(kBool) == FileKind::Pka);
    CHECK(std::holds_alternative<FinitePKA>(parse_document(kBool)));
}

TEST_CASE("round trips of library structures")
{
    for (const auto &k : fixtures::axiom_passing()) {
        const auto text = print_pka(k);
        const auto back = parse_pka(text);
        CHECK(back == k);
        CHECK(back.name() == k.name());
        CHECK(print_pka(back) == text);
    }
    for (std::size_t n = 1; n <= 4; ++n) {
        const auto m = cyclic_monoid(n);
        CHECK(parse_monoid(print_monoid(m)) == m);
        CHECK(detect_kind(print_monoid(m)) == FileKind::Monoid);
    }
    for (const auto &k : standard_corpus()) {
        const auto c = ps_completion(k).ps();
        const auto text = print_ps(c);
        CHECK(detect_kind(text) == (c.is_total() ? FileKind::Cs : FileKind::Ps));
        CHECK(parse_ps(text) == c);
        const auto cp = cs_from_ka(total_completion(k).pka()).ps();
        CHECK(parse_ps(print_ps(cp)) == cp);
        CHECK(detect_kind(print_ps(cp)) == FileKind::Cs);
    }
}

TEST_CASE("round trips of random tables with awkward labels")
{
    gen::Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = gen::random_pka(rng, 1 + gen::pick(rng, 7));
        const auto back = parse_pka(print_pka(k));
        CHECK(back == k);
        CHECK(back.name() == k.name());
        const auto s = gen::random_ps(rng, 1 + gen::pick(rng, 5), gen::coin(rng));
        CHECK(parse_ps(print_ps(s)) == s);
        const auto m = gen::random_monoid(rng, 6, false);
        CHECK(parse_monoid(print_monoid(m)) == m);
    }
}

TEST_CASE("errors carry the offending line")
{
    CHECK(error_line("") == 1);
    CHECK(error_line("pkaa B\nend\n") == 1);
    CHECK(error_line("pka\nend\n") == 1);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\nmul 0 0 zero\nend\n") == 5);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\nfrobnicate\nend\n") == 5);
    CHECK(error_line("pka B\nzero 0\nelements 0 1\nend\n") == 2);
    CHECK(error_line("pka B\nelements 0 0\nend\n") == 2);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\nadd 0 1 1\nadd 1 0 0\nend\n") == 6);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\nstar 0 1\nstar 0 0\nend\n") == 6);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\nzero 1\nend\n") == 4);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\n") == 5);
    CHECK(error_line("pka B\nelements 0 1\nzero 0\none 1\nend\nstar 0 1\n") == 6);
    CHECK(error_line("ps S\nelements 0 1\nzero 0\none 1\nsum 0 1 1\nend\n") == 5);
    CHECK(error_line("ps S\nelements 0 1\nzero 0\none 1\nsum 0 0 -> 1\nend\n") == 5);
    CHECK(error_line("cs S\nelements 0 1\nzero 0\none 1\nmul 0 0 0\nmul 0 1 0\nmul 1 0 0\nmul 1 1 1\nend\n") == 9);
    CHECK(error_line("monoid M\nelements 1 g\none 1\nop 1 1 1\nend\n") == 5);
    CHECK(error_line("monoid M\nelements 1\none 1\nop 1 1 1\nop 1 1 1\nend\n") == 5);
}

TEST_CASE("the shipped malformed file points at line 8")
{
    const auto text = read_text_file(PKA_TEST_DATA_DIR "/malformed.pka");
    try {
        (void)parse_pka(text);
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 8);
        CHECK(std::string(e.what()).find("line 8") != std::string::npos);
    }
}

TEST_CASE("shipped data files")
{
    CHECK(parse_pka(read_text_file(PKA_TEST_DATA_DIR "/ex2.pka")) == fixtures::ext(2));
    CHECK(parse_pka(read_text_file(PKA_TEST_DATA_DIR "/pfn.pka")) == pfn_example());
    CHECK(parse_monoid(read_text_file(PKA_TEST_DATA_DIR "/z3.mon")) == cyclic_monoid(3));
    CHECK(parse_ps(read_text_file(PKA_TEST_DATA_DIR "/c-bool.ps")) == ps_completion(boolean_ka()).ps());
    try {
        (void)read_text_file(PKA_TEST_DATA_DIR "/no-such-file.pka");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.line() == 0);
    }
}

TEST_CASE("sums are symmetrized and tables validated on load")
{
    const auto k = parse_pka("pka B\nelements 0 1\nzero 0\none 1\nadd 0 1 1\nadd 1 0 1\nmul 0 0 0\nmul 0 1 0\nmul 1 0 0\nmul 1 1 1\nstar 0 1\nstar 1 1\nend\n");
    CHECK(k == boolean_ka());
    // missing mul entries are a malformed table, not a silent default
    CHECK_THROWS_AS((void)parse_pka("pka B\nelements 0 1\nzero 0\none 1\nmul 0 0 0\nstar 0 1\nstar 1 1\nend\n"), ParseError);
}
