#include <pka/constructions.hpp>
#include <pka/errors.hpp>

#include <algorithm>
#include <map>

namespace pka {

// Monoids

CommutativeMonoid::CommutativeMonoid(MonoidTables t) :
    name_(std::move(t.name)), labels_(std::move(t.labels)), one_(t.one), op_(std::move(t.op))
{
    const auto n = labels_.size();
    auto bad = [&](const std::string &what) { return Error(ErrorKind::MalformedAlgebra, "monoid '" + name_ + "': " + what); };
    if (n == 0)
        throw bad("empty carrier");
    if (n + 2 > kMaxCarrier)
        throw Error(ErrorKind::CarrierOverflow, "monoid '" + name_ + "' is too large to extend");
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != n)
        throw bad("duplicate label");
    if (one_ >= n || op_.size() != n * n)
        throw bad("identity out of range or table size mismatch");
    for (auto v : op_)
        if (v >= n)
            throw bad("operation table is not total");
    for (Elem x = 0; x < n; ++x) {
        if (op(one_, x) != x)
            throw bad("'" + labels_[one_] + "' is not an identity for '" + labels_[x] + "'");
        for (Elem y = 0; y < n; ++y) {
            if (op(x, y) != op(y, x))
                throw bad("not commutative at " + labels_[x] + "," + labels_[y]);
            for (Elem z = 0; z < n; ++z)
                if (op(x, op(y, z)) != op(op(x, y), z))
                    throw bad("not associative at " + labels_[x] + "," + labels_[y] + "," + labels_[z]);
        }
    }
}

auto cyclic_monoid(std::size_t n) -> CommutativeMonoid
{
    MonoidTables t;
    t.name = n == 1 ? "trivial" : "Z" + std::to_string(n);
    for (std::size_t i = 0; i < n; ++i)
        t.labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            t.op.push_back(static_cast<Elem>((i + j) % n));
    return CommutativeMonoid(std::move(t));
}

auto monoid_extension(const CommutativeMonoid &m, ExtensionStar star) -> FinitePKA
{
    const auto k = m.size();
    const auto n = k + 2;
    const Elem zero = 0;
    const auto top = static_cast<Elem>(k + 1);
    auto inner = [](Elem x) { return static_cast<Elem>(x + 1); };

    PkaTables t;
    t.name = "ext(" + m.name() + ")";
    t.labels.push_back(kExtensionZero);
    for (const auto &l : m.labels()) {
        if (l == kExtensionZero || l == kExtensionTop)
            throw Error(ErrorKind::MalformedAlgebra, "monoid label '" + l + "' clashes with an added element");
        t.labels.push_back(l);
    }
    t.labels.push_back(kExtensionTop);
    t.zero = zero;
    t.one = inner(m.one());

    t.add.assign(n * n, kUndefined);
    for (Elem x = 0; x < n; ++x) {
        t.add[x * n + x] = x;
        t.add[x * n + zero] = t.add[zero * n + x] = x;
        t.add[x * n + top] = t.add[top * n + x] = top;
    }

    t.mul.assign(n * n, zero);
    for (Elem x = 1; x < n; ++x)
        for (Elem y = 1; y < n; ++y)
            t.mul[x * n + y] = (x == top || y == top) ? top : inner(m.op(x - 1, y - 1));

    t.star.assign(n, top);
    if (star == ExtensionStar::Corrected) {
        t.star[zero] = t.one;
        t.star[t.one] = t.one;
    } else {
        t.star[zero] = zero;
    }
    return FinitePKA(std::move(t));
}

auto boolean_ka() -> FinitePKA
{
    PkaTables t;
    t.name = "B";
    t.labels = {"0", "1"};
    t.zero = 0;
    t.one = 1;
    t.add = {0, 1, 1, 1};
    t.mul = {0, 0, 0, 1};
    t.star = {1, 1};
    return FinitePKA(std::move(t));
}

auto adjoin_top(const FinitePKA &k) -> FinitePKA
{
    const auto old = k.size();
    const auto n = old + 1;
    const auto top = static_cast<Elem>(old);
    auto src = k.tables();

    std::string label = "inf";
    while (k.find(label))
        label += '\'';

    PkaTables t;
    t.name = k.name() + "+inf";
    t.labels = src.labels;
    t.labels.push_back(label);
    t.zero = src.zero;
    t.one = src.one;
    t.add.assign(n * n, top);
    t.mul.assign(n * n, top);
    t.star.assign(n, top);
    for (Elem x = 0; x < old; ++x) {
        for (Elem y = 0; y < old; ++y) {
            if (auto s = k.add_or_undefined(x, y); s != kUndefined)
                t.add[x * n + y] = s;
            t.mul[x * n + y] = k.mul(x, y);
        }
        t.star[x] = k.star(x);
    }
    t.mul[src.zero * n + top] = src.zero;
    t.mul[top * n + src.zero] = src.zero;
    return FinitePKA(std::move(t));
}

// Strings

StringContext::StringContext(std::vector<std::string> state_names, const std::vector<std::string> &omega_names) :
    states(std::move(state_names)), omega(states.size(), false)
{
    if (states.empty() || states.size() > 32)
        throw Error(ErrorKind::MalformedAlgebra, "state set must have between 1 and 32 states");
    if (std::set<std::string>(states.begin(), states.end()).size() != states.size())
        throw Error(ErrorKind::MalformedAlgebra, "duplicate state name");
    for (const auto &s : states)
        if (s.empty() || s.find_first_of("{},. \t") != std::string::npos)
            throw Error(ErrorKind::MalformedAlgebra, "invalid state name '" + s + "'");
    for (const auto &w : omega_names)
        omega[state(w)] = true;
}

auto StringContext::state(std::string_view name) const -> State
{
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == name)
            return static_cast<State>(i);
    throw Error(ErrorKind::MalformedAlgebra, "unknown state '" + std::string(name) + "'");
}

auto StringContext::render(const StateString &s) const -> std::string
{
    const bool short_names = std::all_of(states.begin(), states.end(), [](const auto &n) { return n.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0 && !short_names)
            out += '.';
        out += states[s.states[i]];
    }
    return out;
}

auto StringContext::render(const StringSet &a) const -> std::string
{
    std::string out = "{";
    bool first = true;
    for (const auto &s : a) {
        if (!first)
            out += ',';
        out += render(s);
        first = false;
    }
    return out + "}";
}

auto StringContext::parse(std::string_view text) const -> StateString
{
    StateString s;
    const bool short_names = std::all_of(states.begin(), states.end(), [](const auto &n) { return n.size() == 1; });
    if (short_names) {
        for (char c : text)
            s.states.push_back(state(std::string_view(&c, 1)));
        return s;
    }
    std::size_t start = 0;
    while (start <= text.size() && !text.empty()) {
        auto dot = text.find('.', start);
        if (dot == std::string_view::npos)
            dot = text.size();
        s.states.push_back(state(text.substr(start, dot - start)));
        start = dot + 1;
    }
    return s;
}

auto fusion_product(const StateString &s, const StateString &t) -> StateString
{
    if (s.empty() || t.empty() || s.fin() != t.ini())
        return {};
    StateString out = s;
    out.states.insert(out.states.end(), t.states.begin() + 1, t.states.end());
    return out;
}

auto is_generalized_prefix(const StateString &s, const StateString &t) -> bool
{
    if (s.empty())
        return true;
    if (t.empty() || s.ini() != t.ini())
        return false;
    std::size_t i = 0;
    for (auto c : t.states)
        if (i < s.size() && s.states[i] == c)
            ++i;
    return i == s.size();
}

namespace {

auto proper_prefix_of_member(const StringSet &a, const StateString &s) -> bool
{
    return std::any_of(a.begin(), a.end(), [&](const StateString &t) { return t != s && is_generalized_prefix(s, t); });
}

} // namespace

auto is_functional(const StringContext &ctx, const StringSet &a) -> bool
{
    for (const auto &s : a)
        for (std::size_t i = 0; i + 1 < s.size(); ++i)
            if (ctx.in_omega(s.states[i]))
                return false;
    for (std::size_t w = 0; w < ctx.states.size(); ++w) {
        if (!ctx.omega[w])
            continue;
        if (std::none_of(a.begin(), a.end(), [&](const StateString &s) { return !s.empty() && s.ini() == w; }))
            return false;
    }
    // maximal strings out of the same state must agree on where they end
    std::map<State, State> end_of;
    for (const auto &s : a) {
        if (s.empty() || proper_prefix_of_member(a, s))
            continue;
        auto [it, inserted] = end_of.emplace(s.ini(), s.fin());
        if (!inserted && it->second != s.fin())
            return false;
    }
    return true;
}

auto is_sparsely_functional(const StringContext &ctx, const StringSet &a) -> bool
{
    if (!is_functional(ctx, a))
        return false;
    return std::none_of(a.begin(), a.end(), [&](const StateString &s) { return proper_prefix_of_member(a, s); });
}

auto sf_normalize(const StringContext &ctx, const StringSet &a) -> StringSet
{
    if (!is_functional(ctx, a))
        throw Error(ErrorKind::NotFunctional, "set " + ctx.render(a) + " is not functional");
    StringSet out;
    for (const auto &s : a)
        if (!proper_prefix_of_member(a, s))
            out.insert(s);
    if (!is_sparsely_functional(ctx, out))
        throw Error(ErrorKind::NotFunctional, "no sparsely functional core for " + ctx.render(a));
    return out;
}

auto pfn_universe(const StringContext &ctx, std::size_t maxlen) -> std::vector<StateString>
{
    std::vector<StateString> out;
    const auto n = ctx.states.size();
    StateString current;
    std::vector<bool> used(n, false);
    auto extend = [&](auto &self) -> void {
        if (!current.empty())
            out.push_back(current);
        if (current.size() == maxlen || (!current.empty() && ctx.in_omega(current.fin())))
            return;
        for (std::size_t s = 0; s < n; ++s) {
            if (used[s])
                continue;
            used[s] = true;
            current.states.push_back(static_cast<State>(s));
            self(self);
            current.states.pop_back();
            used[s] = false;
        }
    };
    extend(extend);
    std::sort(out.begin(), out.end(), [](const StateString &x, const StateString &y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return out;
}

namespace {

constexpr std::size_t kMaxUniverse = 20;

struct PfnBuilder {
    const StringContext &ctx;
    std::set<StateString> universe;

    auto product(const StringSet &a, const StringSet &b) const -> StringSet
    {
        if (a.empty() || b.empty())
            return {};
        StringSet fused;
        for (const auto &s : a)
            for (const auto &t : b) {
                auto f = fusion_product(s, t);
                if (f.empty())
                    continue;
                if (!universe.contains(f))
                    throw Error(ErrorKind::StarDivergence, "fusion " + ctx.render(s) + "⊗" + ctx.render(t) + " leaves the length or acyclicity bound");
                fused.insert(std::move(f));
            }
        if (fused.empty())
            return {};
        return sf_normalize(ctx, fused);
    }

    auto star(const StringSet &a) const -> StringSet
    {
        StringSet result;
        for (std::size_t s = 0; s < ctx.states.size(); ++s)
            result.insert(StateString{{static_cast<State>(s)}});
        StringSet power;
        for (std::size_t s = 0; s < ctx.states.size(); ++s)
            if (ctx.omega[s])
                power.insert(StateString{{static_cast<State>(s)}});
        std::set<StringSet> seen;
        while (seen.insert(power).second) {
            for (const auto &s : power)
                if (ctx.in_omega(s.fin()))
                    result.insert(s);
            power = product(a, power);
        }
        return sf_normalize(ctx, result);
    }
};

} // namespace

auto pfn_algebra(const StringContext &ctx, const PfnOptions &options) -> PfnAlgebra
{
    if (options.maxlen == 0)
        throw Error(ErrorKind::MalformedAlgebra, "maxlen must be positive");
    const auto strings = pfn_universe(ctx, options.maxlen);
    if (strings.size() > kMaxUniverse)
        throw Error(ErrorKind::CarrierOverflow, std::to_string(strings.size()) + " strings in the fragment, limit is " + std::to_string(kMaxUniverse));
    PfnBuilder builder{ctx, {strings.begin(), strings.end()}};

    std::vector<StringSet> carrier{StringSet{}};
    const std::uint64_t subsets = std::uint64_t{1} << strings.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        StringSet a;
        for (auto i : ElementSet(mask))
            a.insert(strings[i]);
        if (!is_sparsely_functional(ctx, a))
            continue;
        if (carrier.size() == options.max_carrier)
            throw Error(ErrorKind::CarrierOverflow, "string-set algebra exceeds " + std::to_string(options.max_carrier) + " elements");
        carrier.push_back(std::move(a));
    }
    std::sort(carrier.begin() + 1, carrier.end(), [](const StringSet &x, const StringSet &y) {
        return x.size() != y.size() ? x.size() < y.size() : x < y;
    });

    std::map<StringSet, Elem> index;
    for (std::size_t i = 0; i < carrier.size(); ++i)
        index.emplace(carrier[i], static_cast<Elem>(i));
    auto lookup = [&](const StringSet &a) {
        auto it = index.find(a);
        if (it == index.end())
            throw Error(ErrorKind::StarDivergence, "result " + ctx.render(a) + " is outside the carrier");
        return it->second;
    };

    const auto n = carrier.size();
    PkaTables t;
    t.name = "pfn";
    for (const auto &a : carrier)
        t.labels.push_back(ctx.render(a));
    t.zero = 0;
    StringSet sigma;
    for (std::size_t s = 0; s < ctx.states.size(); ++s)
        sigma.insert(StateString{{static_cast<State>(s)}});
    t.one = lookup(sigma);
    t.add.assign(n * n, kUndefined);
    t.mul.resize(n * n);
    t.star.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            StringSet joined = carrier[i];
            joined.insert(carrier[j].begin(), carrier[j].end());
            if (carrier[i].empty())
                t.add[i * n + j] = static_cast<Elem>(j);
            else if (carrier[j].empty())
                t.add[i * n + j] = static_cast<Elem>(i);
            else if (is_functional(ctx, joined))
                t.add[i * n + j] = lookup(sf_normalize(ctx, joined));
            t.mul[i * n + j] = lookup(builder.product(carrier[i], carrier[j]));
        }
        t.star[i] = lookup(builder.star(carrier[i]));
    }
    return {ctx, std::move(carrier), FinitePKA(std::move(t))};
}

} // namespace pka
