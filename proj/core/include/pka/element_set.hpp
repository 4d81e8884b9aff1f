#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace pka {

/// Index of an element inside one finite carrier.
using Elem = std::uint16_t;

inline constexpr Elem kUndefined = 0xFFFF;

/// Carriers are capped so that subsets fit in one machine word.
inline constexpr std::size_t kMaxCarrier = 64;

/// A subset of a finite carrier, stored as a 64-bit mask.
class ElementSet {
public:
    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Elem;
        using difference_type = std::ptrdiff_t;
        using pointer = const Elem *;
        using reference = Elem;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        auto operator*() const -> Elem { return static_cast<Elem>(std::countr_zero(rest_)); }
        auto operator++() -> iterator &
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto old = *this;
            ++*this;
            return old;
        }
        auto operator==(const iterator &) const -> bool = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t mask) : mask_(mask) {}
    ElementSet(std::initializer_list<Elem> elems)
    {
        for (auto e : elems)
            insert(e);
    }

    static auto of(const std::vector<Elem> &elems) -> ElementSet
    {
        ElementSet s;
        for (auto e : elems)
            s.insert(e);
        return s;
    }

    /// The first n elements of a carrier.
    static constexpr auto full(std::size_t n) -> ElementSet
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    [[nodiscard]] constexpr auto mask() const -> std::uint64_t { return mask_; }
    [[nodiscard]] constexpr auto empty() const -> bool { return mask_ == 0; }
    [[nodiscard]] constexpr auto size() const -> std::size_t { return static_cast<std::size_t>(std::popcount(mask_)); }
    [[nodiscard]] constexpr auto contains(Elem e) const -> bool { return (mask_ >> e) & 1U; }

    constexpr auto insert(Elem e) -> void { mask_ |= std::uint64_t{1} << e; }
    constexpr auto erase(Elem e) -> void { mask_ &= ~(std::uint64_t{1} << e); }

    [[nodiscard]] constexpr auto subset_of(ElementSet other) const -> bool { return (mask_ & ~other.mask_) == 0; }

    [[nodiscard]] auto begin() const -> iterator { return iterator(mask_); }
    [[nodiscard]] auto end() const -> iterator { return iterator(0); }

    [[nodiscard]] auto to_vector() const -> std::vector<Elem> { return {begin(), end()}; }

    friend constexpr auto operator|(ElementSet a, ElementSet b) -> ElementSet { return ElementSet(a.mask_ | b.mask_); }
    friend constexpr auto operator&(ElementSet a, ElementSet b) -> ElementSet { return ElementSet(a.mask_ & b.mask_); }
    friend constexpr auto operator-(ElementSet a, ElementSet b) -> ElementSet { return ElementSet(a.mask_ & ~b.mask_); }
    constexpr auto operator|=(ElementSet other) -> ElementSet &
    {
        mask_ |= other.mask_;
        return *this;
    }
    constexpr auto operator==(const ElementSet &) const -> bool = default;
    constexpr auto operator<=>(const ElementSet &) const = default;

private:
    std::uint64_t mask_ = 0;
};

} // namespace pka
