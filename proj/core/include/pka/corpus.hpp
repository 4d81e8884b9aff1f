#pragma once

#include <pka/algebra.hpp>

#include <vector>

namespace pka {

/// pfn over states {p, q} with Ω = {q}, strings of length at most 2.
auto pfn_example() -> FinitePKA;

/// B, ext(trivial), ext(Z2), ext(Z3), pfn_example(), in that order.
auto standard_corpus() -> std::vector<FinitePKA>;

} // namespace pka
