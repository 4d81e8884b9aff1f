#pragma once

#include <pka/completions.hpp>
#include <pka/constructions.hpp>
#include <pka/corpus.hpp>
#include <pka/homsearch.hpp>

#include <vector>

namespace pka::fixtures {

inline auto ext(std::size_t n) -> FinitePKA
{
    return monoid_extension(cyclic_monoid(n));
}

/// Every PKA on at most four elements (with 0 and 1 first), found by exhaustive search.
inline auto small_pkas() -> const std::vector<FinitePKA> &
{
    static const auto all = [] {
        std::vector<FinitePKA> out;
        enumerate_small_pkas(4, 100'000'000, [&](const FinitePKA &k) {
            out.push_back(k);
            return true;
        });
        return out;
    }();
    return all;
}

/// Corpus, its T completions, and the small PKAs: every one passes verify_pka.
inline auto axiom_passing() -> const std::vector<FinitePKA> &
{
    static const auto all = [] {
        auto out = standard_corpus();
        for (const auto &k : standard_corpus())
            out.push_back(total_completion(k).pka());
        const auto &small = small_pkas();
        out.insert(out.end(), small.begin(), small.end());
        return out;
    }();
    return all;
}

} // namespace pka::fixtures
