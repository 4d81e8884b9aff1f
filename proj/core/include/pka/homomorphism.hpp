#pragma once

#include <pka/algebra.hpp>
#include <pka/report.hpp>
#include <pka/semiring.hpp>

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pka {

/// Either side of a homomorphism: a PKA (possibly total) or a PS (possibly closed).
using Structure = std::variant<FinitePKA, FinitePS>;

auto structure_name(const Structure &s) -> const std::string &;
auto structure_size(const Structure &s) -> std::size_t;
auto structure_label(const Structure &s, Elem x) -> const std::string &;

enum class StructureKind { PKA, KA, PS, CS };

auto to_string(StructureKind kind) -> std::string_view;

/// Map from source element ids to target element ids.
using ElementMap = std::vector<Elem>;

struct HomTable {
    std::string source;
    std::string target;
    StructureKind kind = StructureKind::PKA;
    ElementMap map;
    AxiomReport report;
};

/// PKA/KA: preserves 0, 1, ·, *, and every defined sum (the image pair must be summable).
/// PS/CS: preserves 0, 1, · and Σ of every summable subset.
/// Throws KindMismatch when the kind does not fit the structures (KA and CS need total sums on both sides)
/// or when the map has the wrong length or range.
auto is_homomorphism(std::span<const Elem> f, const Structure &src, const Structure &tgt, StructureKind kind) -> AxiomReport;

auto is_homomorphism(std::span<const Elem> f, const FinitePKA &src, const FinitePKA &tgt, StructureKind kind = StructureKind::PKA) -> AxiomReport;
auto is_homomorphism(std::span<const Elem> f, const FinitePS &src, const FinitePS &tgt, StructureKind kind = StructureKind::PS) -> AxiomReport;

/// g∘f
auto compose(std::span<const Elem> f, std::span<const Elem> g) -> ElementMap;

auto identity_map(std::size_t n) -> ElementMap;

/// "a->x b->y"
auto render_map(std::span<const Elem> f, const Structure &src, const Structure &tgt) -> std::string;

} // namespace pka
