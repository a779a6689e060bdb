#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#ifndef EKRLAB_MAX_GROUND
#define EKRLAB_MAX_GROUND 1024
#endif

namespace ekrlab
{
    /// Fixed-capacity set of small non-negative integers. Ordering compares the
    /// ascending element lists lexicographically, so {0,1,2} < {0,1,3} < {0,2}
    /// and a proper prefix sorts first.
    template <std::size_t Bits>
    class BitSet
    {
    public:
        static constexpr std::size_t capacity = Bits;
        static constexpr std::size_t words = (Bits + 63) / 64;

        BitSet() = default;

        BitSet(std::initializer_list<unsigned> elems)
        {
            for (auto e : elems)
                set(e);
        }

        static auto from(const std::vector<unsigned> & elems) -> BitSet
        {
            BitSet b;
            for (auto e : elems)
                b.set(e);
            return b;
        }

        void set(std::size_t i) { _w[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { _w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        [[nodiscard]] auto test(std::size_t i) const -> bool { return (_w[i / 64] >> (i % 64)) & 1U; }

        [[nodiscard]] auto count() const -> unsigned
        {
            unsigned c = 0;
            for (auto w : _w)
                c += std::popcount(w);
            return c;
        }

        [[nodiscard]] auto none() const -> bool
        {
            for (auto w : _w)
                if (w)
                    return false;
            return true;
        }

        [[nodiscard]] auto any() const -> bool { return ! none(); }

        [[nodiscard]] auto intersection_count(const BitSet & o) const -> unsigned
        {
            unsigned c = 0;
            for (std::size_t i = 0; i < words; ++i)
                c += std::popcount(_w[i] & o._w[i]);
            return c;
        }

        [[nodiscard]] auto intersects(const BitSet & o) const -> bool
        {
            for (std::size_t i = 0; i < words; ++i)
                if (_w[i] & o._w[i])
                    return true;
            return false;
        }

        [[nodiscard]] auto subset_of(const BitSet & o) const -> bool
        {
            for (std::size_t i = 0; i < words; ++i)
                if (_w[i] & ~o._w[i])
                    return false;
            return true;
        }

        /// Index of the smallest element, or capacity when empty.
        [[nodiscard]] auto first() const -> std::size_t
        {
            for (std::size_t i = 0; i < words; ++i)
                if (_w[i])
                    return i * 64 + std::countr_zero(_w[i]);
            return capacity;
        }

        /// Index of the largest element, or capacity when empty.
        [[nodiscard]] auto last() const -> std::size_t
        {
            for (std::size_t i = words; i-- > 0;)
                if (_w[i])
                    return i * 64 + 63 - std::countl_zero(_w[i]);
            return capacity;
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t i = 0; i < words; ++i) {
                auto w = _w[i];
                while (w) {
                    f(static_cast<unsigned>(i * 64 + std::countr_zero(w)));
                    w &= w - 1;
                }
            }
        }

        [[nodiscard]] auto elements() const -> std::vector<unsigned>
        {
            std::vector<unsigned> out;
            for_each([&](unsigned e) { out.push_back(e); });
            return out;
        }

        auto operator&=(const BitSet & o) -> BitSet &
        {
            for (std::size_t i = 0; i < words; ++i)
                _w[i] &= o._w[i];
            return *this;
        }

        auto operator|=(const BitSet & o) -> BitSet &
        {
            for (std::size_t i = 0; i < words; ++i)
                _w[i] |= o._w[i];
            return *this;
        }

        friend auto operator&(BitSet a, const BitSet & b) -> BitSet { return a &= b; }
        friend auto operator|(BitSet a, const BitSet & b) -> BitSet { return a |= b; }

        friend auto operator==(const BitSet &, const BitSet &) -> bool = default;

        friend auto operator<=>(const BitSet & a, const BitSet & b) -> std::strong_ordering
        {
            for (std::size_t i = 0; i < words; ++i) {
                auto d = a._w[i] ^ b._w[i];
                if (! d)
                    continue;
                // The smallest differing element x belongs to exactly one side.
                // That side is smaller unless the other list stops before x.
                auto x = i * 64 + std::countr_zero(d);
                const BitSet & has = a.test(x) ? a : b;
                const BitSet & lacks = a.test(x) ? b : a;
                bool lacks_continues = lacks.last() != capacity && lacks.last() > x;
                bool a_smaller = (&has == &a) == lacks_continues;
                return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
            }
            return std::strong_ordering::equal;
        }

        [[nodiscard]] auto hash() const -> std::size_t
        {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (auto w : _w) {
                h ^= w;
                h *= 0x100000001b3ULL;
            }
            return h;
        }

    private:
        std::array<std::uint64_t, words> _w{};
    };

    inline constexpr std::size_t max_ground = EKRLAB_MAX_GROUND;

    /// Path families live on graphs of at most this many vertices.
    inline constexpr std::size_t max_path_ground = 128;

    using ElementSet = BitSet<max_ground>;

    struct ElementSetHash
    {
        auto operator()(const ElementSet & s) const -> std::size_t { return s.hash(); }
    };

    /// Growable bit vector used for adjacency rows and candidate sets over
    /// family members.
    class DynBits
    {
    public:
        DynBits() = default;
        explicit DynBits(std::size_t n) : _n(n), _w((n + 63) / 64, 0) {}

        [[nodiscard]] auto size() const -> std::size_t { return _n; }

        void set(std::size_t i) { _w[i / 64] |= std::uint64_t{1} << (i % 64); }
        void reset(std::size_t i) { _w[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
        [[nodiscard]] auto test(std::size_t i) const -> bool { return (_w[i / 64] >> (i % 64)) & 1U; }

        void set_all()
        {
            for (auto & w : _w)
                w = ~std::uint64_t{0};
            if (_n % 64)
                _w.back() &= (std::uint64_t{1} << (_n % 64)) - 1;
        }

        [[nodiscard]] auto count() const -> unsigned
        {
            unsigned c = 0;
            for (auto w : _w)
                c += std::popcount(w);
            return c;
        }

        [[nodiscard]] auto none() const -> bool
        {
            for (auto w : _w)
                if (w)
                    return false;
            return true;
        }

        [[nodiscard]] auto intersects(const DynBits & o) const -> bool
        {
            for (std::size_t i = 0; i < _w.size(); ++i)
                if (_w[i] & o._w[i])
                    return true;
            return false;
        }

        auto operator&=(const DynBits & o) -> DynBits &
        {
            for (std::size_t i = 0; i < _w.size(); ++i)
                _w[i] &= o._w[i];
            return *this;
        }

        auto operator|=(const DynBits & o) -> DynBits &
        {
            for (std::size_t i = 0; i < _w.size(); ++i)
                _w[i] |= o._w[i];
            return *this;
        }

        /// Removes every element of o.
        auto subtract(const DynBits & o) -> DynBits &
        {
            for (std::size_t i = 0; i < _w.size(); ++i)
                _w[i] &= ~o._w[i];
            return *this;
        }

        /// Keeps only elements strictly greater than i.
        void keep_above(std::size_t i)
        {
            std::size_t wi = i / 64;
            for (std::size_t k = 0; k < wi && k < _w.size(); ++k)
                _w[k] = 0;
            if (wi < _w.size()) {
                auto shift = i % 64;
                _w[wi] &= shift == 63 ? 0 : (~std::uint64_t{0} << (shift + 1));
            }
        }

        template <typename F>
        void for_each(F && f) const
        {
            for (std::size_t i = 0; i < _w.size(); ++i) {
                auto w = _w[i];
                while (w) {
                    f(static_cast<unsigned>(i * 64 + std::countr_zero(w)));
                    w &= w - 1;
                }
            }
        }

        template <typename F>
        void for_each_descending(F && f) const
        {
            for (std::size_t i = _w.size(); i-- > 0;) {
                auto w = _w[i];
                while (w) {
                    auto b = 63 - std::countl_zero(w);
                    f(static_cast<unsigned>(i * 64 + b));
                    w &= ~(std::uint64_t{1} << b);
                }
            }
        }

        friend auto operator==(const DynBits &, const DynBits &) -> bool = default;

    private:
        std::size_t _n = 0;
        std::vector<std::uint64_t> _w;
    };
}
