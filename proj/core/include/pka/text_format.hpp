#pragma once

#include <pka/algebra.hpp>
#include <pka/constructions.hpp>
#include <pka/semiring.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

namespace pka {

/// Which header a file starts with.
enum class FileKind { Pka, Monoid, Ps, Cs };

auto to_string(FileKind kind) -> std::string_view;

/// Looks at the first non-comment line. Throws ParseError when it is not a known header.
auto detect_kind(std::string_view text) -> FileKind;

// All parsers throw ParseError carrying the 1-based line of the offending directive.

auto parse_pka(std::string_view text) -> FinitePKA;
auto parse_monoid(std::string_view text) -> CommutativeMonoid;
/// Accepts both "ps" and "cs" headers; a "cs" file must list every subset of two or more elements.
auto parse_ps(std::string_view text) -> FinitePS;

using Document = std::variant<FinitePKA, CommutativeMonoid, FinitePS>;
auto parse_document(std::string_view text) -> Document;

/// Canonical text. parse(print(x)) == x, names included.
auto print_pka(const FinitePKA &k) -> std::string;
auto print_monoid(const CommutativeMonoid &m) -> std::string;
/// Uses the "cs" header when Σ is total, otherwise "ps".
auto print_ps(const FinitePS &s) -> std::string;

/// Whole file as a string; throws ParseError (line 0) when unreadable.
auto read_text_file(const std::filesystem::path &path) -> std::string;

} // namespace pka
