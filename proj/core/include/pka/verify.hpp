#pragma once

#include <pka/algebra.hpp>
#include <pka/report.hpp>

namespace pka {

struct VerifyOptions {
    /// Also check the converse direction of guarded associativity:
    /// y↓z, x↓(y+z), x↓y imply (x+y)↓z and equality.
    bool strict_associativity = false;
    std::size_t witnesses_per_axiom = 3;
};

/// Carriers above this size still get verified, with a note in the report.
inline constexpr std::size_t kQuadrupleSoftLimit = 16;

/// Exhaustively checks axioms (1)-(16) over all element tuples.
auto verify_pka(const FinitePKA &k, const VerifyOptions &options = {}) -> AxiomReport;

/// verify_pka plus totality of +.
auto verify_total_ka(const FinitePKA &k, const VerifyOptions &options = {}) -> AxiomReport;

/// For every (a, b, c): each a·b^n·c lies below a·b*·c, and a·b*·c lies below
/// every common upper bound w of the a·b^n·c. n ranges over the distinct powers of b.
auto verify_star_continuity(const FinitePKA &k, const VerifyOptions &options = {}) -> AxiomReport;

} // namespace pka
