#include <pka/constructions.hpp>
#include <pka/corpus.hpp>

namespace pka {

auto pfn_example() -> FinitePKA
{
    return pfn_algebra(StringContext({"p", "q"}, {"q"})).algebra;
}

auto standard_corpus() -> std::vector<FinitePKA>
{
    return {
        boolean_ka(),
        monoid_extension(cyclic_monoid(1)),
        monoid_extension(cyclic_monoid(2)),
        monoid_extension(cyclic_monoid(3)),
        pfn_example(),
    };
}

} // namespace pka
