#include <pka/errors.hpp>
#include <pka/homomorphism.hpp>

namespace pka {

auto structure_name(const Structure &s) -> const std::string &
{
    return std::visit([](const auto &x) -> const std::string & { return x.name(); }, s);
}

auto structure_size(const Structure &s) -> std::size_t
{
    return std::visit([](const auto &x) { return x.size(); }, s);
}

auto structure_label(const Structure &s, Elem e) -> const std::string &
{
    return std::visit([e](const auto &x) -> const std::string & { return x.label(e); }, s);
}

auto to_string(StructureKind kind) -> std::string_view
{
    switch (kind) {
    case StructureKind::PKA: return "PKA";
    case StructureKind::KA: return "KA";
    case StructureKind::PS: return "PS";
    case StructureKind::CS: return "CS";
    }
    return "?";
}

namespace {

auto check_map_shape(std::span<const Elem> f, std::size_t src_size, std::size_t tgt_size) -> void
{
    if (f.size() != src_size)
        throw Error(ErrorKind::KindMismatch, "map has " + std::to_string(f.size()) + " entries for a source of size " + std::to_string(src_size));
    for (auto v : f)
        if (v >= tgt_size)
            throw Error(ErrorKind::KindMismatch, "map value out of target range");
}

} // namespace

auto is_homomorphism(std::span<const Elem> f, const FinitePKA &src, const FinitePKA &tgt, StructureKind kind) -> AxiomReport
{
    if (kind != StructureKind::PKA && kind != StructureKind::KA)
        throw Error(ErrorKind::KindMismatch, "PKA structures checked as " + std::string(to_string(kind)));
    if (kind == StructureKind::KA && (!src.is_total() || !tgt.is_total()))
        throw Error(ErrorKind::KindMismatch, "KA homomorphism between structures without total +");
    check_map_shape(f, src.size(), tgt.size());

    AxiomReport report;
    auto lbl = [&](Elem x) { return src.label(x); };
    if (f[src.zero()] != tgt.zero())
        report.record("hom-zero", {src.zero()}, "f(0) = " + tgt.label(f[src.zero()]));
    if (f[src.one()] != tgt.one())
        report.record("hom-one", {src.one()}, "f(1) = " + tgt.label(f[src.one()]));
    const auto n = static_cast<Elem>(src.size());
    for (Elem a = 0; a < n; ++a) {
        if (f[src.star(a)] != tgt.star(f[a]))
            report.record("hom-star", {a}, "f(a*) != f(a)* at a=" + lbl(a));
        for (Elem b = 0; b < n; ++b) {
            if (f[src.mul(a, b)] != tgt.mul(f[a], f[b]))
                report.record("hom-mul", {a, b}, "f(a·b) != f(a)·f(b) at a=" + lbl(a) + " b=" + lbl(b));
            const auto s = src.add_or_undefined(a, b);
            if (s == kUndefined || b < a)
                continue;
            const auto image = tgt.add_or_undefined(f[a], f[b]);
            if (image == kUndefined)
                report.record("hom-summable", {a, b}, "f(a), f(b) not summable at a=" + lbl(a) + " b=" + lbl(b));
            else if (image != f[s])
                report.record("hom-add", {a, b}, "f(a+b) != f(a)+f(b) at a=" + lbl(a) + " b=" + lbl(b));
        }
    }
    return report;
}

auto is_homomorphism(std::span<const Elem> f, const FinitePS &src, const FinitePS &tgt, StructureKind kind) -> AxiomReport
{
    if (kind != StructureKind::PS && kind != StructureKind::CS)
        throw Error(ErrorKind::KindMismatch, "PS structures checked as " + std::string(to_string(kind)));
    if (kind == StructureKind::CS && (!src.is_total() || !tgt.is_total()))
        throw Error(ErrorKind::KindMismatch, "CS homomorphism between structures without total Σ");
    check_map_shape(f, src.size(), tgt.size());

    AxiomReport report;
    if (f[src.zero()] != tgt.zero())
        report.record("hom-zero", {src.zero()}, "f(0) = " + tgt.label(f[src.zero()]));
    if (f[src.one()] != tgt.one())
        report.record("hom-one", {src.one()}, "f(1) = " + tgt.label(f[src.one()]));
    const auto n = static_cast<Elem>(src.size());
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (f[src.mul(a, b)] != tgt.mul(f[a], f[b]))
                report.record("hom-mul", {a, b}, "f(a·b) != f(a)·f(b) at a=" + src.label(a) + " b=" + src.label(b));
    const std::uint64_t subsets = std::uint64_t{1} << src.size();
    for (std::uint64_t mask = 1; mask < subsets; ++mask) {
        const ElementSet family(mask);
        const auto s = src.sum_or_undefined(family);
        if (s == kUndefined)
            continue;
        ElementSet image;
        for (auto e : family)
            image.insert(f[e]);
        const auto v = tgt.sum_or_undefined(image);
        if (v == kUndefined)
            report.record("hom-summable", family.to_vector(), "image of a summable family is not summable");
        else if (v != f[s])
            report.record("hom-sum", family.to_vector(), "f(Σ) != Σ f");
    }
    return report;
}

auto is_homomorphism(std::span<const Elem> f, const Structure &src, const Structure &tgt, StructureKind kind) -> AxiomReport
{
    if (src.index() != tgt.index())
        throw Error(ErrorKind::KindMismatch, "source and target are different kinds of structure");
    if (const auto *k = std::get_if<FinitePKA>(&src))
        return is_homomorphism(f, *k, std::get<FinitePKA>(tgt), kind);
    return is_homomorphism(f, std::get<FinitePS>(src), std::get<FinitePS>(tgt), kind);
}

auto compose(std::span<const Elem> f, std::span<const Elem> g) -> ElementMap
{
    ElementMap out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = g[f[i]];
    return out;
}

auto identity_map(std::size_t n) -> ElementMap
{
    ElementMap out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<Elem>(i);
    return out;
}

auto render_map(std::span<const Elem> f, const Structure &src, const Structure &tgt) -> std::string
{
    std::string out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!out.empty())
            out += ' ';
        out += structure_label(src, static_cast<Elem>(i)) + "->" + structure_label(tgt, f[i]);
    }
    return out;
}

} // namespace pka
