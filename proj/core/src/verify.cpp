#include <pka/verify.hpp>

#include <string>

namespace pka {

namespace {

auto join_labels(const FinitePKA &k, std::initializer_list<std::pair<const char *, Elem>> items) -> std::string
{
    std::string out;
    for (const auto &[name, e] : items) {
        if (!out.empty())
            out += ' ';
        out += name;
        out += '=';
        out += k.label(e);
    }
    return out;
}

} // namespace

auto verify_pka(const FinitePKA &k, const VerifyOptions &options) -> AxiomReport
{
    AxiomReport report(options.witnesses_per_axiom);
    const auto n = static_cast<Elem>(k.size());
    const Elem zero = k.zero();
    const Elem one = k.one();

    for (Elem x = 0; x < n; ++x) {
        // (2) only reachable through a hand-built table; the constructor symmetrizes
        for (Elem y = 0; y < n; ++y)
            if (k.add_or_undefined(x, y) != k.add_or_undefined(y, x))
                report.record("2", {x, y}, "sum not commutative at " + join_labels(k, {{"x", x}, {"y", y}}));

        if (k.add_or_undefined(x, zero) != x)
            report.record("3", {x}, "x+0 != x at " + join_labels(k, {{"x", x}}));
        if (k.add_or_undefined(x, x) != x)
            report.record("4", {x}, "x+x != x at " + join_labels(k, {{"x", x}}));
        if (k.mul(one, x) != x)
            report.record("6", {x}, "1·x != x at " + join_labels(k, {{"x", x}}));
        if (k.mul(x, one) != x)
            report.record("7", {x}, "x·1 != x at " + join_labels(k, {{"x", x}}));
        if (k.mul(zero, x) != zero)
            report.record("10", {x}, "0·x != 0 at " + join_labels(k, {{"x", x}}));
        if (k.mul(x, zero) != zero)
            report.record("11", {x}, "x·0 != 0 at " + join_labels(k, {{"x", x}}));

        const Elem xs = k.star(x);
        if (!k.leq(one, xs))
            report.record("12", {x}, "1 <= x* fails at " + join_labels(k, {{"x", x}, {"x*", xs}}));
        if (!k.leq(k.mul(x, xs), xs))
            report.record("13", {x}, "x·x* <= x* fails at " + join_labels(k, {{"x", x}}));
        if (!k.leq(k.mul(xs, x), xs))
            report.record("14", {x}, "x*·x <= x* fails at " + join_labels(k, {{"x", x}}));

        for (Elem a = 0; a < n; ++a) {
            const Elem as = k.star(a);
            if (k.leq(k.mul(a, x), x) && !k.leq(k.mul(as, x), x))
                report.record("15", {a, x}, "a·x <= x but a*·x <= x fails at " + join_labels(k, {{"a", a}, {"x", x}}));
            if (k.leq(k.mul(x, a), x) && !k.leq(k.mul(x, as), x))
                report.record("16", {a, x}, "x·a <= x but x·a* <= x fails at " + join_labels(k, {{"a", a}, {"x", x}}));
        }
    }

    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy = k.add_or_undefined(x, y);
            for (Elem z = 0; z < n; ++z) {
                if (k.mul(x, k.mul(y, z)) != k.mul(k.mul(x, y), z))
                    report.record("5", {x, y, z}, "x·(y·z) != (x·y)·z at " + join_labels(k, {{"x", x}, {"y", y}, {"z", z}}));

                const Elem yz = k.add_or_undefined(y, z);
                if (xy != kUndefined && yz != kUndefined) {
                    const Elem left = k.add_or_undefined(xy, z);
                    const Elem right = k.add_or_undefined(x, yz);
                    if (left != kUndefined && left != right)
                        report.record("1", {x, y, z}, "(x+y)+z defined but x+(y+z) differs or is undefined at " + join_labels(k, {{"x", x}, {"y", y}, {"z", z}}));
                    if (options.strict_associativity && right != kUndefined && left != right)
                        report.record("1-converse", {x, y, z}, "x+(y+z) defined but (x+y)+z differs or is undefined at " + join_labels(k, {{"x", x}, {"y", y}, {"z", z}}));
                }

                if (xy != kUndefined) {
                    const Elem zx = k.mul(z, x), zy = k.mul(z, y);
                    const Elem left = k.add_or_undefined(zx, zy);
                    if (left == kUndefined || left != k.mul(z, xy))
                        report.record("8", {x, y, z}, "z·(x+y) != z·x+z·y at " + join_labels(k, {{"x", x}, {"y", y}, {"z", z}}));
                    const Elem xz = k.mul(x, z), yz2 = k.mul(y, z);
                    const Elem right = k.add_or_undefined(xz, yz2);
                    if (right == kUndefined || right != k.mul(xy, z))
                        report.record("9", {x, y, z}, "(x+y)·z != x·z+y·z at " + join_labels(k, {{"x", x}, {"y", y}, {"z", z}}));
                }
            }
        }

    return report;
}

auto verify_total_ka(const FinitePKA &k, const VerifyOptions &options) -> AxiomReport
{
    auto report = verify_pka(k, options);
    const auto n = static_cast<Elem>(k.size());
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x; y < n; ++y)
            if (!k.summable(x, y))
                report.record("totality", {x, y}, "x+y undefined at " + join_labels(k, {{"x", x}, {"y", y}}));
    return report;
}

auto verify_star_continuity(const FinitePKA &k, const VerifyOptions & /*options*/) -> AxiomReport
{
    // first witness per half is reported; the rest are only counted
    AxiomReport report(1);
    const auto n = static_cast<Elem>(k.size());
    if (n > kQuadrupleSoftLimit)
        report.note("carrier size " + std::to_string(n) + " exceeds the quadruple-loop soft limit of " + std::to_string(kQuadrupleSoftLimit));

    const auto pows = all_powers(k);
    std::vector<Elem> terms;

    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const auto &bp = pows[b].values;
            const Elem ab_star = k.mul(a, k.star(b));
            for (Elem c = 0; c < n; ++c) {
                const Elem top = k.mul(ab_star, c);
                terms.clear();
                for (auto p : bp)
                    terms.push_back(k.mul(k.mul(a, p), c));

                for (std::size_t i = 0; i < terms.size(); ++i)
                    if (!k.leq(terms[i], top)) {
                        report.record("star-continuity-upper", {a, b, c, static_cast<Elem>(i)},
                            "a·b^n·c <= a·b*·c fails at " + join_labels(k, {{"a", a}, {"b", b}, {"c", c}}) + " n=" + std::to_string(i));
                        break;
                    }

                for (Elem w = 0; w < n; ++w) {
                    bool bound = true;
                    for (auto t : terms)
                        if (!k.leq(t, w)) {
                            bound = false;
                            break;
                        }
                    if (bound && !k.leq(top, w))
                        report.record("star-continuity-least", {a, b, c, w},
                            "w bounds every a·b^n·c but not a·b*·c at " + join_labels(k, {{"a", a}, {"b", b}, {"c", c}, {"w", w}}));
                }
            }
        }
    return report;
}

} // namespace pka
