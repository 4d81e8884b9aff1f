#include <pka/constructions.hpp>
#include <pka/errors.hpp>
#include <pka/homsearch.hpp>
#include <pka/verify.hpp>

#include <algorithm>

namespace pka {

namespace {

/// Operation tables of both sides in a uniform shape for propagation.
/// For a PS, the binary sum is Σ over two-element families and there is no star.
struct Signature {
    std::size_t n = 0;
    std::size_t m = 0;
    Elem src_zero = 0, src_one = 0, tgt_zero = 0, tgt_one = 0;
    std::vector<Elem> src_mul, tgt_mul, src_add, tgt_add, src_star, tgt_star;
};

auto tables_of(const FinitePKA &k, std::vector<Elem> &mul, std::vector<Elem> &add, std::vector<Elem> &star) -> void
{
    auto t = k.tables();
    mul = std::move(t.mul);
    add = std::move(t.add);
    star = std::move(t.star);
}

auto tables_of(const FinitePS &s, std::vector<Elem> &mul, std::vector<Elem> &add, std::vector<Elem> &star) -> void
{
    const auto n = static_cast<Elem>(s.size());
    mul.resize(std::size_t{n} * n);
    add.resize(std::size_t{n} * n);
    star.clear();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            mul[x * n + y] = s.mul(x, y);
            add[x * n + y] = s.sum_or_undefined(ElementSet{x, y});
        }
}

auto signature(const Structure &src, const Structure &tgt) -> Signature
{
    if (src.index() != tgt.index())
        throw Error(ErrorKind::KindMismatch, "source and target are different kinds of structure");
    Signature sig;
    std::visit([&](const auto &s) {
        sig.n = s.size();
        sig.src_zero = s.zero();
        sig.src_one = s.one();
        tables_of(s, sig.src_mul, sig.src_add, sig.src_star);
    }, src);
    std::visit([&](const auto &t) {
        sig.m = t.size();
        sig.tgt_zero = t.zero();
        sig.tgt_one = t.one();
        tables_of(t, sig.tgt_mul, sig.tgt_add, sig.tgt_star);
    }, tgt);
    return sig;
}

class Searcher {
public:
    Searcher(const Structure &src, const Structure &tgt, StructureKind kind, const SearchOptions &options,
        const std::function<bool(const ElementMap &)> &visit) :
        src_(src), tgt_(tgt), kind_(kind), options_(options), visit_(visit), sig_(signature(src, tgt))
    {
    }

    auto run() -> std::uint64_t
    {
        if (options_.injective && sig_.n > sig_.m)
            return 0;
        ElementMap f(sig_.n, kUndefined);
        std::vector<bool> used(sig_.m, false);
        if (assign(f, used, sig_.src_zero, sig_.tgt_zero) && assign(f, used, sig_.src_one, sig_.tgt_one) && propagate(f, used))
            descend(f, used);
        return nodes_;
    }

private:
    auto assign(ElementMap &f, std::vector<bool> &used, Elem x, Elem v) -> bool
    {
        if (f[x] != kUndefined)
            return f[x] == v;
        if (options_.injective && used[v])
            return false;
        f[x] = v;
        used[v] = true;
        changed_ = true;
        return true;
    }

    auto propagate(ElementMap &f, std::vector<bool> &used) -> bool
    {
        const auto n = sig_.n;
        const auto m = sig_.m;
        do {
            changed_ = false;
            for (std::size_t x = 0; x < n; ++x) {
                if (f[x] == kUndefined)
                    continue;
                if (!sig_.src_star.empty() && !assign(f, used, sig_.src_star[x], sig_.tgt_star[f[x]]))
                    return false;
                for (std::size_t y = 0; y < n; ++y) {
                    if (f[y] == kUndefined)
                        continue;
                    if (!assign(f, used, sig_.src_mul[x * n + y], sig_.tgt_mul[f[x] * m + f[y]]))
                        return false;
                    const auto s = sig_.src_add[x * n + y];
                    if (s == kUndefined)
                        continue;
                    const auto t = sig_.tgt_add[f[x] * m + f[y]];
                    if (t == kUndefined || !assign(f, used, s, t))
                        return false;
                }
            }
        } while (changed_);
        return true;
    }

    auto descend(const ElementMap &f, const std::vector<bool> &used) -> void
    {
        if (stopped_)
            return;
        auto next = std::find(f.begin(), f.end(), kUndefined);
        if (next == f.end()) {
            if (is_homomorphism(f, src_, tgt_, kind_).pass() && !visit_(f))
                stopped_ = true;
            return;
        }
        const auto x = static_cast<Elem>(next - f.begin());
        for (Elem v = 0; v < sig_.m && !stopped_; ++v) {
            if (options_.injective && used[v])
                continue;
            if (++nodes_ > options_.budget)
                throw Error(ErrorKind::SearchBudgetExceeded, "homomorphism search from '" + structure_name(src_) + "' to '" + structure_name(tgt_) + "' exceeded " + std::to_string(options_.budget) + " assignments");
            auto g = f;
            auto u = used;
            if (assign(g, u, x, v) && propagate(g, u))
                descend(g, u);
        }
    }

    const Structure &src_;
    const Structure &tgt_;
    StructureKind kind_;
    const SearchOptions &options_;
    const std::function<bool(const ElementMap &)> &visit_;
    Signature sig_;
    std::uint64_t nodes_ = 0;
    bool changed_ = false;
    bool stopped_ = false;
};

auto failed(const std::string &what) -> Error { return Error(ErrorKind::NotAHomomorphism, what); }

} // namespace

auto search_homs(const Structure &src, const Structure &tgt, StructureKind kind, const SearchOptions &options,
    const std::function<bool(const ElementMap &)> &visit) -> std::uint64_t
{
    // reject kind mismatches before searching
    is_homomorphism(identity_map(structure_size(src)), src, src, kind);
    is_homomorphism(identity_map(structure_size(tgt)), tgt, tgt, kind);
    return Searcher(src, tgt, kind, options, visit).run();
}

auto enumerate_homs(const Structure &src, const Structure &tgt, StructureKind kind, const SearchOptions &options) -> std::vector<ElementMap>
{
    std::vector<ElementMap> out;
    search_homs(src, tgt, kind, options, [&](const ElementMap &f) {
        out.push_back(f);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

auto enumerate_homs_from_total_completion(const CompletionResult &tk, const FinitePKA &tgt, const SearchOptions &options) -> std::vector<ElementMap>
{
    if (tk.functor != Functor::T)
        throw Error(ErrorKind::KindMismatch, "expected a T completion");
    std::vector<ElementMap> out;
    const Structure target = tgt;
    for (const auto &g : enumerate_homs(tk.host, target, StructureKind::PKA, options)) {
        try {
            out.push_back(psi(tk, target, g));
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::NotAHomomorphism)
                throw;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

auto phi(const CompletionResult &fk, std::span<const Elem> f) -> ElementMap
{
    return compose(fk.unit, f);
}

auto psi(const CompletionResult &fk, const Structure &target, std::span<const Elem> g) -> ElementMap
{
    ElementMap out(fk.parts.size());
    for (std::size_t i = 0; i < fk.parts.size(); ++i) {
        const auto part = fk.parts[i];
        const auto &label = structure_label(fk.completed, static_cast<Elem>(i));
        if (fk.functor == Functor::S) {
            ElementSet images;
            for (auto x : part)
                images.insert(g[x]);
            if (images.size() != 1)
                throw failed("ψ not well defined: class " + label + " has several images");
            out[i] = *images.begin();
            continue;
        }
        const ElementSet generators = fk.functor == Functor::Tp ? ps_maximal_elements(fk.host_ps(), part) : maximal_elements(fk.host_pka(), part);
        if (fk.functor == Functor::T) {
            const auto &k = std::get<FinitePKA>(target);
            auto fold = [&](ElementSet gens) {
                Elem acc = k.zero();
                for (auto a : gens) {
                    acc = k.add_or_undefined(acc, g[a]);
                    if (acc == kUndefined)
                        throw failed("ψ undefined on " + label + ": generator images are not summable");
                }
                return acc;
            };
            out[i] = fold(generators);
            if (fold(part) != out[i])
                throw failed("ψ not well defined on " + label + ": two generator sets disagree");
        } else {
            const auto &s = std::get<FinitePS>(target);
            auto total = [&](ElementSet gens) {
                ElementSet images;
                for (auto a : gens)
                    images.insert(g[a]);
                const auto v = s.sum_or_undefined(images);
                if (v == kUndefined)
                    throw failed("ψ undefined on " + label + ": generator images are not summable");
                return v;
            };
            out[i] = total(generators);
            if (total(part) != out[i])
                throw failed("ψ not well defined on " + label + ": two generator sets disagree");
        }
    }
    if (auto r = is_homomorphism(out, fk.completed, target, result_kind(fk.functor)); !r.pass())
        throw failed("ψ g is not a homomorphism: " + r.violations().front().message);
    return out;
}

auto right_adjoint_target(Functor f, const Structure &target) -> Structure
{
    if (f == Functor::C || f == Functor::Cp)
        return forget_to_pka(std::get<FinitePS>(target));
    return target;
}

auto right_hom_kind(Functor f) -> StructureKind
{
    return f == Functor::Tp ? StructureKind::PS : StructureKind::PKA;
}

auto check_adjunction(const CompletionResult &fk, const Structure &target, const SearchOptions &options) -> AdjunctionReport
{
    AdjunctionReport rep;
    rep.functor = fk.functor;
    rep.host = structure_name(fk.host);
    rep.target = structure_name(target);

    const auto left = enumerate_homs(fk.completed, target, result_kind(fk.functor), options);
    rep.left_count = left.size();
    std::optional<Structure> ux;
    try {
        ux = right_adjoint_target(fk.functor, target);
    } catch (const Error &e) {
        rep.report.record("right-adjoint", {}, std::string("target does not forget: ") + e.what());
        return rep;
    }
    const auto right = enumerate_homs(fk.host, *ux, right_hom_kind(fk.functor), options);
    rep.right_count = right.size();

    rep.phi_lands = true;
    rep.psi_phi_identity = true;
    for (const auto &f : left) {
        const auto p = phi(fk, f);
        if (!std::binary_search(right.begin(), right.end(), p)) {
            rep.phi_lands = false;
            rep.report.record("phi-lands", p, "φ f is not a homomorphism of the host");
        }
        try {
            if (psi(fk, target, p) != f) {
                rep.psi_phi_identity = false;
                rep.report.record("psi-phi", f, "ψ(φ f) != f");
            }
        } catch (const Error &e) {
            rep.psi_phi_identity = false;
            rep.report.record("psi-phi", f, e.what());
        }
    }
    rep.phi_psi_identity = true;
    for (const auto &g : right) {
        try {
            if (phi(fk, psi(fk, target, g)) != g) {
                rep.phi_psi_identity = false;
                rep.report.record("phi-psi", g, "φ(ψ g) != g");
            }
        } catch (const Error &e) {
            rep.phi_psi_identity = false;
            rep.report.record("phi-psi", g, e.what());
        }
    }
    return rep;
}

auto check_naturality_target(const CompletionResult &fk, const Structure &x1, const Structure &x2, std::span<const Elem> h,
    const SearchOptions &options, const PhiFunction &phi_fn) -> AxiomReport
{
    AxiomReport report;
    const auto kind = result_kind(fk.functor);
    if (auto r = is_homomorphism(h, x1, x2, kind); !r.pass()) {
        report.record("naturality-input", {}, "h is not a homomorphism: " + r.violations().front().message);
        return report;
    }
    for (const auto &f : enumerate_homs(fk.completed, x1, kind, options)) {
        const auto lhs = phi_fn(fk, compose(f, h));
        const auto rhs = compose(phi_fn(fk, f), h);
        if (lhs != rhs)
            report.record("naturality-target", f, "φ(h∘f) != h∘φ(f) for f = " + render_map(f, fk.completed, x1));
    }
    return report;
}

auto check_naturality_source(const CompletionResult &fk1, const CompletionResult &fk2, std::span<const Elem> h, const Structure &x,
    const SearchOptions &options, const PhiFunction &phi_fn) -> AxiomReport
{
    AxiomReport report;
    ElementMap lifted;
    try {
        lifted = lift_hom(fk1, fk2, h);
    } catch (const Error &e) {
        report.record("naturality-input", {}, e.what());
        return report;
    }
    for (const auto &f : enumerate_homs(fk2.completed, x, result_kind(fk2.functor), options)) {
        const auto lhs = phi_fn(fk1, compose(lifted, f));
        const auto rhs = compose(h, phi_fn(fk2, f));
        if (lhs != rhs)
            report.record("naturality-source", f, "φ(f∘Fh) != φ(f)∘h for f = " + render_map(f, fk2.completed, x));
    }
    return report;
}

auto find_isomorphism(const Structure &a, const Structure &b, StructureKind kind, const SearchOptions &options) -> std::optional<ElementMap>
{
    if (structure_size(a) != structure_size(b))
        return std::nullopt;
    SearchOptions injective = options;
    injective.injective = true;
    std::optional<ElementMap> found;
    search_homs(a, b, kind, injective, [&](const ElementMap &f) {
        ElementMap inverse(f.size());
        for (std::size_t i = 0; i < f.size(); ++i)
            inverse[f[i]] = static_cast<Elem>(i);
        if (!is_homomorphism(inverse, b, a, kind).pass())
            return true;
        found = f;
        return false;
    });
    return found;
}

namespace {

auto is_total_star_continuous(const FinitePKA &k) -> bool
{
    return k.is_total() && verify_pka(k).pass() && verify_star_continuity(k).pass();
}

auto extend_with_top(std::span<const Elem> g, Elem top_image) -> ElementMap
{
    ElementMap h(g.begin(), g.end());
    h.push_back(top_image);
    return h;
}

} // namespace

auto probe_adjoin_top_nonuniversality(const std::vector<FinitePKA> &hosts, const std::vector<FinitePKA> &targets, std::uint64_t budget) -> ProbeResult
{
    ProbeResult result;
    if (budget == 0) {
        result.budget_exhausted = true;
        return result;
    }
    for (const auto &k : hosts) {
        std::vector<FinitePKA> candidates;
        if (verify_star_continuity(k).pass()) {
            try {
                candidates.push_back(total_completion(k).pka());
            } catch (const Error &e) {
                result.log.push_back("no T completion for " + k.name() + ": " + e.what());
            }
        }
        for (const auto &t : targets)
            if (is_total_star_continuous(t))
                candidates.push_back(t);
        const auto extended = adjoin_top(k);
        const Structure host = k;
        const Structure ext = extended;
        const auto top = static_cast<Elem>(k.size());

        for (const auto &kp : candidates) {
            const Structure target = kp;
            search_homs(host, target, StructureKind::PKA, {}, [&](const ElementMap &g) {
                std::vector<std::string> refutations;
                for (Elem v = 0; v < kp.size(); ++v) {
                    if (++result.candidates > budget) {
                        result.budget_exhausted = true;
                        return false;
                    }
                    auto r = is_homomorphism(extend_with_top(g, v), ext, target, StructureKind::KA);
                    if (r.pass())
                        return true;
                    refutations.push_back(extended.label(top) + "->" + kp.label(v) + ": " + r.violations().front().message);
                }
                result.witness = ProbeWitness{k, kp, extended, g, std::move(refutations)};
                return false;
            });
            if (result.witness || result.budget_exhausted)
                return result;
            result.log.push_back("every hom " + k.name() + " -> " + kp.name() + " factors through " + extended.name());
        }
    }
    return result;
}

auto verify_probe_witness(const ProbeWitness &w) -> bool
{
    if (!(adjoin_top(w.host) == w.extended))
        return false;
    if (!w.target.is_total() || !is_homomorphism(w.g, w.host, w.target, StructureKind::PKA).pass())
        return false;
    for (Elem v = 0; v < w.target.size(); ++v)
        if (is_homomorphism(extend_with_top(w.g, v), w.extended, w.target, StructureKind::KA).pass())
            return false;
    return true;
}

namespace {

/// Odometer over `digits` positions with values 0..base-1.
auto advance(std::vector<Elem> &digits, std::size_t base) -> bool
{
    for (auto &d : digits) {
        if (++d < base)
            return true;
        d = 0;
    }
    return false;
}

auto additive_ok(const PkaTables &t, std::size_t n) -> bool
{
    auto add = [&](Elem x, Elem y) { return t.add[x * n + y]; };
    auto mul = [&](Elem x, Elem y) { return t.mul[x * n + y]; };
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const auto xy = add(x, y);
            for (Elem z = 0; z < n; ++z) {
                const auto yz = add(y, z);
                if (xy != kUndefined && yz != kUndefined) {
                    const auto left = add(xy, z);
                    if (left != kUndefined && left != add(x, yz))
                        return false;
                }
                if (xy != kUndefined) {
                    if (add(mul(z, x), mul(z, y)) != mul(z, xy) || add(mul(x, z), mul(y, z)) != mul(xy, z))
                        return false;
                }
            }
        }
    return true;
}

auto leq_in(const PkaTables &t, std::size_t n, Elem x, Elem y) -> bool
{
    return t.add[x * n + y] == y;
}

/// Values v for x* that satisfy every star axiom mentioning x* alone.
auto star_candidates(const PkaTables &t, std::size_t n, Elem x) -> std::vector<Elem>
{
    auto mul = [&](Elem a, Elem b) { return t.mul[a * n + b]; };
    std::vector<Elem> out;
    for (Elem v = 0; v < n; ++v) {
        bool ok = leq_in(t, n, t.one, v) && leq_in(t, n, mul(x, v), v) && leq_in(t, n, mul(v, x), v);
        for (Elem y = 0; y < n && ok; ++y) {
            if (leq_in(t, n, mul(x, y), y) && !leq_in(t, n, mul(v, y), y))
                ok = false;
            if (leq_in(t, n, mul(y, x), y) && !leq_in(t, n, mul(y, v), y))
                ok = false;
        }
        if (ok)
            out.push_back(v);
    }
    return out;
}

} // namespace

auto enumerate_small_pkas(std::size_t max_size, std::uint64_t budget, const std::function<bool(const FinitePKA &)> &visit) -> SmallPkaStats
{
    SmallPkaStats stats;
    auto spend = [&] {
        if (++stats.candidates > budget) {
            stats.exhausted = false;
            return false;
        }
        return true;
    };
    const char *names[] = {"0", "1", "a", "b", "c", "d", "e", "f"};
    max_size = std::min<std::size_t>(max_size, std::size(names));

    for (std::size_t n = 2; n <= max_size; ++n) {
        PkaTables t;
        t.name = "small" + std::to_string(n);
        t.labels.assign(names, names + n);
        t.zero = 0;
        t.one = 1;
        t.mul.assign(n * n, 0);
        for (Elem x = 1; x < n; ++x) {
            t.mul[1 * n + x] = x;
            t.mul[x * n + 1] = x;
        }
        std::vector<Elem> mul_free((n - 2) * (n - 2), 0);
        do {
            if (!spend())
                return stats;
            for (std::size_t i = 0; i < mul_free.size(); ++i)
                t.mul[(2 + i / (n - 2)) * n + 2 + i % (n - 2)] = mul_free[i];
            bool assoc = true;
            for (Elem x = 0; x < n && assoc; ++x)
                for (Elem y = 0; y < n && assoc; ++y)
                    for (Elem z = 0; z < n && assoc; ++z)
                        assoc = t.mul[x * n + t.mul[y * n + z]] == t.mul[t.mul[x * n + y] * n + z];
            if (!assoc)
                continue;

            std::vector<std::pair<Elem, Elem>> pairs;
            for (Elem x = 1; x < n; ++x)
                for (Elem y = x + 1; y < n; ++y)
                    pairs.emplace_back(x, y);
            // digit 0 = undefined, d > 0 = element d - 1
            std::vector<Elem> add_digits(pairs.size(), 0);
            do {
                if (!spend())
                    return stats;
                t.add.assign(n * n, kUndefined);
                for (Elem x = 0; x < n; ++x) {
                    t.add[x * n + x] = x;
                    t.add[x * n] = t.add[x] = x;
                }
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    const auto [x, y] = pairs[i];
                    const Elem v = add_digits[i] == 0 ? kUndefined : static_cast<Elem>(add_digits[i] - 1);
                    t.add[x * n + y] = t.add[y * n + x] = v;
                }
                if (!additive_ok(t, n))
                    continue;

                std::vector<std::vector<Elem>> choices(n);
                bool possible = true;
                for (Elem x = 0; x < n && possible; ++x) {
                    choices[x] = star_candidates(t, n, x);
                    possible = !choices[x].empty();
                }
                if (!possible)
                    continue;
                std::vector<Elem> pick(n, 0);
                do {
                    if (!spend())
                        return stats;
                    t.star.resize(n);
                    for (Elem x = 0; x < n; ++x)
                        t.star[x] = choices[x][pick[x]];
                    FinitePKA k(t);
                    if (!verify_pka(k).pass())
                        continue;
                    ++stats.algebras;
                    if (!visit(k)) {
                        stats.exhausted = false;
                        return stats;
                    }
                } while ([&] {
                    for (std::size_t i = 0; i < n; ++i) {
                        if (++pick[i] < choices[i].size())
                            return true;
                        pick[i] = 0;
                    }
                    return false;
                }());
            } while (advance(add_digits, n + 1));
        } while (advance(mul_free, n));
    }
    return stats;
}

} // namespace pka
