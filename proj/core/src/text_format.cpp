#include <pka/errors.hpp>
#include <pka/text_format.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace pka {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

auto tokenize(std::string_view text) -> std::vector<Line>
{
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos)
            eol = text.size();
        ++number;
        auto line = text.substr(pos, eol - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::istringstream in{std::string(line)};
        Line parsed{number, {}};
        for (std::string tok; in >> tok;)
            parsed.tokens.push_back(std::move(tok));
        if (!parsed.tokens.empty())
            out.push_back(std::move(parsed));
        pos = eol + 1;
    }
    return out;
}

auto sanitize(const std::string &name) -> std::string
{
    std::string out = name.empty() ? "unnamed" : name;
    for (auto &c : out)
        if (c == ' ' || c == '\t' || c == '#' || c == '\r')
            c = '_';
    return out;
}

/// Shared bookkeeping for header, elements, zero and one.
class Reader {
public:
    Reader(std::string_view text, std::initializer_list<std::string_view> headers) : lines_(tokenize(text))
    {
        if (lines_.empty())
            throw ParseError(1, "empty input");
        const auto &first = lines_.front();
        bool known = false;
        for (auto h : headers)
            known = known || first.tokens[0] == h;
        if (!known)
            throw ParseError(first.number, "unexpected header '" + first.tokens[0] + "'");
        if (first.tokens.size() != 2)
            throw ParseError(first.number, "header needs exactly one name");
        header_ = first.tokens[0];
        name_ = first.tokens[1];
    }

    [[nodiscard]] auto header() const -> const std::string & { return header_; }
    [[nodiscard]] auto name() const -> const std::string & { return name_; }
    [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return labels_; }
    [[nodiscard]] auto size() const -> std::size_t { return labels_.size(); }

    /// Calls body for every directive after the header until `end`, and returns the `end` line.
    template <typename Body>
    auto run(Body body) -> std::size_t
    {
        std::optional<std::size_t> end_line;
        for (std::size_t i = 1; i < lines_.size(); ++i) {
            const auto &line = lines_[i];
            if (end_line)
                throw ParseError(line.number, "content after 'end'");
            const auto &kw = line.tokens[0];
            if (kw == "end") {
                if (line.tokens.size() != 1)
                    throw ParseError(line.number, "'end' takes no arguments");
                end_line = line.number;
            } else if (kw == "elements") {
                read_elements(line);
            } else if (!body(line)) {
                throw ParseError(line.number, "unknown directive '" + kw + "'");
            }
        }
        if (!end_line)
            throw ParseError(lines_.back().number + 1, "missing 'end'");
        if (labels_.empty())
            throw ParseError(*end_line, "missing 'elements'");
        return *end_line;
    }

    auto element(const Line &line, const std::string &label) const -> Elem
    {
        if (labels_.empty())
            throw ParseError(line.number, "'elements' must come before '" + line.tokens[0] + "'");
        auto it = index_.find(label);
        if (it == index_.end())
            throw ParseError(line.number, "unknown element '" + label + "'");
        return it->second;
    }

    static auto arity(const Line &line, std::size_t args) -> void
    {
        if (line.tokens.size() != args + 1)
            throw ParseError(line.number, "'" + line.tokens[0] + "' expects " + std::to_string(args) + " argument(s)");
    }

    auto constant(const Line &line, std::optional<Elem> &slot) const -> void
    {
        arity(line, 1);
        if (slot)
            throw ParseError(line.number, "duplicate '" + line.tokens[0] + "'");
        slot = element(line, line.tokens[1]);
    }

    /// Reads `kw x y z` into a square table, rejecting duplicates.
    auto square_entry(const Line &line, std::vector<Elem> &table, std::size_t &count) const -> void
    {
        arity(line, 3);
        const auto x = element(line, line.tokens[1]);
        const auto y = element(line, line.tokens[2]);
        const auto z = element(line, line.tokens[3]);
        auto &slot = table[x * size() + y];
        if (slot != kUndefined)
            throw ParseError(line.number, "duplicate '" + line.tokens[0] + "' entry for " + line.tokens[1] + " " + line.tokens[2]);
        slot = z;
        ++count;
    }

    auto prepare(std::vector<Elem> &table, std::size_t entries, const Line &line) const -> void
    {
        if (labels_.empty())
            throw ParseError(line.number, "'elements' must come before '" + line.tokens[0] + "'");
        if (table.empty())
            table.assign(entries, kUndefined);
    }

private:
    auto read_elements(const Line &line) -> void
    {
        if (!labels_.empty())
            throw ParseError(line.number, "duplicate 'elements'");
        if (line.tokens.size() < 2)
            throw ParseError(line.number, "'elements' needs at least one label");
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            const auto &l = line.tokens[i];
            if (l == "->")
                throw ParseError(line.number, "'->' is not a valid label");
            if (!index_.emplace(l, static_cast<Elem>(i - 1)).second)
                throw ParseError(line.number, "duplicate label '" + l + "'");
            labels_.push_back(l);
        }
    }

    std::vector<Line> lines_;
    std::string header_;
    std::string name_;
    std::vector<std::string> labels_;
    std::map<std::string, Elem> index_;
};

template <typename Build>
auto build_at(std::size_t line, Build build)
{
    try {
        return build();
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(line, e.what());
    }
}

auto require(std::size_t line, const std::optional<Elem> &slot, const char *what) -> Elem
{
    if (!slot)
        throw ParseError(line, std::string("missing '") + what + "'");
    return *slot;
}

auto expect_count(std::size_t line, std::size_t got, std::size_t want, const char *what) -> void
{
    if (got != want)
        throw ParseError(line, std::to_string(got) + " '" + what + "' lines, expected " + std::to_string(want));
}

auto header_lines(std::ostringstream &out, std::string_view kind, const std::string &name, const std::vector<std::string> &labels) -> void
{
    out << kind << ' ' << sanitize(name) << "\nelements";
    for (const auto &l : labels)
        out << ' ' << l;
    out << '\n';
}

} // namespace

auto to_string(FileKind kind) -> std::string_view
{
    switch (kind) {
    case FileKind::Pka: return "pka";
    case FileKind::Monoid: return "monoid";
    case FileKind::Ps: return "ps";
    case FileKind::Cs: return "cs";
    }
    return "?";
}

auto detect_kind(std::string_view text) -> FileKind
{
    auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, "empty input");
    const auto &h = lines.front().tokens[0];
    if (h == "pka")
        return FileKind::Pka;
    if (h == "monoid")
        return FileKind::Monoid;
    if (h == "ps")
        return FileKind::Ps;
    if (h == "cs")
        return FileKind::Cs;
    throw ParseError(lines.front().number, "unknown header '" + h + "'");
}

auto parse_pka(std::string_view text) -> FinitePKA
{
    Reader r(text, {"pka"});
    std::optional<Elem> zero, one;
    std::vector<Elem> add, mul, star;
    std::size_t muls = 0, stars = 0;
    const auto end = r.run([&](const Line &line) {
        const auto &kw = line.tokens[0];
        const auto n = r.size();
        if (kw == "zero") {
            r.constant(line, zero);
        } else if (kw == "one") {
            r.constant(line, one);
        } else if (kw == "add") {
            r.prepare(add, n * n, line);
            Reader::arity(line, 3);
            const auto x = r.element(line, line.tokens[1]);
            const auto y = r.element(line, line.tokens[2]);
            const auto z = r.element(line, line.tokens[3]);
            for (auto idx : {x * n + y, y * n + x}) {
                if (add[idx] != kUndefined && add[idx] != z)
                    throw ParseError(line.number, "conflicting sums for " + line.tokens[1] + "+" + line.tokens[2]);
                add[idx] = z;
            }
        } else if (kw == "mul") {
            r.prepare(mul, n * n, line);
            r.square_entry(line, mul, muls);
        } else if (kw == "star") {
            r.prepare(star, n, line);
            Reader::arity(line, 2);
            const auto x = r.element(line, line.tokens[1]);
            if (star[x] != kUndefined)
                throw ParseError(line.number, "duplicate 'star' entry for " + line.tokens[1]);
            star[x] = r.element(line, line.tokens[2]);
            ++stars;
        } else {
            return false;
        }
        return true;
    });
    const auto n = r.size();
    expect_count(end, muls, n * n, "mul");
    expect_count(end, stars, n, "star");
    PkaTables t{r.name(), r.labels(), require(end, zero, "zero"), require(end, one, "one"), std::move(add), std::move(mul), std::move(star)};
    return build_at(end, [&] { return FinitePKA(std::move(t)); });
}

auto parse_monoid(std::string_view text) -> CommutativeMonoid
{
    Reader r(text, {"monoid"});
    std::optional<Elem> one;
    std::vector<Elem> op;
    std::size_t ops = 0;
    const auto end = r.run([&](const Line &line) {
        const auto &kw = line.tokens[0];
        if (kw == "one") {
            r.constant(line, one);
        } else if (kw == "op") {
            r.prepare(op, r.size() * r.size(), line);
            r.square_entry(line, op, ops);
        } else {
            return false;
        }
        return true;
    });
    expect_count(end, ops, r.size() * r.size(), "op");
    MonoidTables t{r.name(), r.labels(), require(end, one, "one"), std::move(op)};
    return build_at(end, [&] { return CommutativeMonoid(std::move(t)); });
}

auto parse_ps(std::string_view text) -> FinitePS
{
    Reader r(text, {"ps", "cs"});
    std::optional<Elem> zero, one;
    std::vector<Elem> sum, mul;
    std::size_t muls = 0;
    const auto end = r.run([&](const Line &line) {
        const auto &kw = line.tokens[0];
        const auto n = r.size();
        if (kw == "zero") {
            r.constant(line, zero);
        } else if (kw == "one") {
            r.constant(line, one);
        } else if (kw == "sum") {
            if (n > kMaxSumCarrier)
                throw ParseError(line.number, "carrier too large for a sum table");
            r.prepare(sum, std::size_t{1} << n, line);
            if (line.tokens.size() < 3 || line.tokens[line.tokens.size() - 2] != "->")
                throw ParseError(line.number, "expected 'sum <x> ... -> <z>'");
            ElementSet family;
            for (std::size_t i = 1; i + 2 < line.tokens.size(); ++i) {
                const auto e = r.element(line, line.tokens[i]);
                if (family.contains(e))
                    throw ParseError(line.number, "repeated element '" + line.tokens[i] + "' in sum");
                family.insert(e);
            }
            auto &slot = sum[family.mask()];
            if (slot != kUndefined)
                throw ParseError(line.number, "duplicate sum for this family");
            slot = r.element(line, line.tokens.back());
        } else if (kw == "mul") {
            r.prepare(mul, n * n, line);
            r.square_entry(line, mul, muls);
        } else {
            return false;
        }
        return true;
    });
    const auto n = r.size();
    if (n > kMaxSumCarrier)
        throw ParseError(end, "carrier too large for a sum table");
    expect_count(end, muls, n * n, "mul");
    const bool closed = r.header() == "cs";
    if (sum.empty())
        sum.assign(std::size_t{1} << n, kUndefined);
    if (closed)
        for (std::uint64_t mask = 0; mask < sum.size(); ++mask)
            if (std::popcount(mask) >= 2 && sum[mask] == kUndefined)
                throw ParseError(end, "cs file has no sum for a family of " + std::to_string(std::popcount(mask)) + " elements (mask " + std::to_string(mask) + ")");
    PsTables t{r.name(), r.labels(), require(end, zero, "zero"), require(end, one, "one"), std::move(sum), std::move(mul), closed};
    return build_at(end, [&] { return FinitePS(std::move(t)); });
}

auto parse_document(std::string_view text) -> Document
{
    switch (detect_kind(text)) {
    case FileKind::Pka: return parse_pka(text);
    case FileKind::Monoid: return parse_monoid(text);
    case FileKind::Ps:
    case FileKind::Cs: return parse_ps(text);
    }
    throw ParseError(1, "unknown file kind");
}

auto print_pka(const FinitePKA &k) -> std::string
{
    std::ostringstream out;
    header_lines(out, "pka", k.name(), k.labels());
    out << "zero " << k.label(k.zero()) << "\none " << k.label(k.one()) << '\n';
    const auto n = static_cast<Elem>(k.size());
    for (Elem x = 0; x < n; ++x)
        for (Elem y = x; y < n; ++y)
            if (auto s = k.add_or_undefined(x, y); s != kUndefined)
                out << "add " << k.label(x) << ' ' << k.label(y) << ' ' << k.label(s) << '\n';
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            out << "mul " << k.label(x) << ' ' << k.label(y) << ' ' << k.label(k.mul(x, y)) << '\n';
    for (Elem x = 0; x < n; ++x)
        out << "star " << k.label(x) << ' ' << k.label(k.star(x)) << '\n';
    out << "end\n";
    return out.str();
}

auto print_monoid(const CommutativeMonoid &m) -> std::string
{
    std::ostringstream out;
    header_lines(out, "monoid", m.name(), m.labels());
    out << "one " << m.label(m.one()) << '\n';
    const auto n = static_cast<Elem>(m.size());
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            out << "op " << m.label(x) << ' ' << m.label(y) << ' ' << m.label(m.op(x, y)) << '\n';
    out << "end\n";
    return out.str();
}

auto print_ps(const FinitePS &s) -> std::string
{
    std::ostringstream out;
    header_lines(out, s.is_total() ? "cs" : "ps", s.name(), s.labels());
    out << "zero " << s.label(s.zero()) << "\none " << s.label(s.one()) << '\n';
    const std::uint64_t subsets = std::uint64_t{1} << s.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        const ElementSet family(mask);
        const auto v = s.sum_or_undefined(family);
        // Σ∅ = 0 and Σ{x} = x are implied; a singleton is written only when it breaks that
        if (v == kUndefined || family.empty() || (family.size() == 1 && *family.begin() == v))
            continue;
        out << "sum";
        for (auto e : family)
            out << ' ' << s.label(e);
        out << " -> " << s.label(v) << '\n';
    }
    const auto n = static_cast<Elem>(s.size());
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            out << "mul " << s.label(x) << ' ' << s.label(y) << ' ' << s.label(s.mul(x, y)) << '\n';
    out << "end\n";
    return out.str();
}

auto read_text_file(const std::filesystem::path &path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(0, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace pka
