#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace satforge
{
    using Vertex = unsigned;

    /// Fixed-capacity bitset over vertex indices. Every adjacency row and every
    /// vertex class in the library is one of these, so set algebra is a handful of
    /// word operations and never allocates.
    class VertexSet
    {
        public:
            static constexpr std::size_t capacity = 512;
            using Word = std::uint64_t;
            static constexpr std::size_t word_count = capacity / 64;

            class Iterator
            {
                public:
                    using iterator_category = std::forward_iterator_tag;
                    using value_type = Vertex;
                    using difference_type = std::ptrdiff_t;
                    using pointer = const Vertex *;
                    using reference = Vertex;

                    Iterator() = default;
                    Iterator(const VertexSet * set, Vertex at) : _set(set), _at(at) {}

                    auto operator* () const -> Vertex { return _at; }
                    auto operator++ () -> Iterator &
                    {
                        _at = _set->next(_at);
                        return *this;
                    }
                    auto operator++ (int) -> Iterator
                    {
                        auto old = *this;
                        ++*this;
                        return old;
                    }
                    auto operator== (const Iterator & other) const -> bool { return _at == other._at; }

                private:
                    const VertexSet * _set = nullptr;
                    Vertex _at = capacity;
            };

            constexpr VertexSet() = default;

            /// The set {0, ..., n-1}.
            static auto first_n(std::size_t n) -> VertexSet
            {
                VertexSet result;
                for (std::size_t w = 0; w < word_count && n > 0; ++w) {
                    auto take = n >= 64 ? std::size_t{ 64 } : n;
                    result._words[w] = take == 64 ? ~Word{ 0 } : ((Word{ 1 } << take) - 1);
                    n -= take;
                }
                return result;
            }

            static auto of(std::initializer_list<Vertex> vs) -> VertexSet
            {
                VertexSet result;
                for (auto v : vs)
                    result.set(v);
                return result;
            }

            auto set(Vertex v) -> void { _words[v / 64] |= Word{ 1 } << (v % 64); }
            auto reset(Vertex v) -> void { _words[v / 64] &= ~(Word{ 1 } << (v % 64)); }
            auto test(Vertex v) const -> bool { return (_words[v / 64] >> (v % 64)) & 1; }
            auto contains(Vertex v) const -> bool { return v < capacity && test(v); }

            auto count() const -> std::size_t
            {
                std::size_t result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            /// Smallest member, or capacity when empty.
            auto first() const -> Vertex
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    if (_words[w])
                        return Vertex(w * 64 + std::countr_zero(_words[w]));
                return capacity;
            }

            /// Smallest member strictly greater than v, or capacity.
            auto next(Vertex v) const -> Vertex
            {
                auto start = v + 1;
                if (start >= capacity)
                    return capacity;
                auto w = start / 64;
                Word masked = _words[w] & (~Word{ 0 } << (start % 64));
                if (masked)
                    return Vertex(w * 64 + std::countr_zero(masked));
                for (++w; w < word_count; ++w)
                    if (_words[w])
                        return Vertex(w * 64 + std::countr_zero(_words[w]));
                return capacity;
            }

            auto is_subset_of(const VertexSet & other) const -> bool
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    if (_words[w] & ~other._words[w])
                        return false;
                return true;
            }

            auto intersects(const VertexSet & other) const -> bool
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    if (_words[w] & other._words[w])
                        return true;
                return false;
            }

            auto intersection_count(const VertexSet & other) const -> std::size_t
            {
                std::size_t result = 0;
                for (std::size_t w = 0; w < word_count; ++w)
                    result += std::popcount(_words[w] & other._words[w]);
                return result;
            }

            auto operator&= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    _words[w] &= other._words[w];
                return *this;
            }

            auto operator|= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    _words[w] |= other._words[w];
                return *this;
            }

            /// Set difference.
            auto operator-= (const VertexSet & other) -> VertexSet &
            {
                for (std::size_t w = 0; w < word_count; ++w)
                    _words[w] &= ~other._words[w];
                return *this;
            }

            friend auto operator& (VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
            friend auto operator| (VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
            friend auto operator- (VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }

            auto operator== (const VertexSet &) const -> bool = default;

            /// Orders by the ascending member lists, so std::set<VertexSet> iterates
            /// {0} < {0,1} < {1} and so on.
            auto operator<=> (const VertexSet & other) const -> std::strong_ordering
            {
                auto a = begin(), b = other.begin();
                for ( ; a != end() && b != other.end(); ++a, ++b)
                    if (*a != *b)
                        return *a <=> *b;
                if (a == end() && b == other.end())
                    return std::strong_ordering::equal;
                return a == end() ? std::strong_ordering::less : std::strong_ordering::greater;
            }

            auto begin() const -> Iterator { return Iterator{ this, first() }; }
            auto end() const -> Iterator { return Iterator{ this, capacity }; }

            auto to_vector() const -> std::vector<Vertex>
            {
                std::vector<Vertex> result;
                result.reserve(count());
                for (auto v : *this)
                    result.push_back(v);
                return result;
            }

        private:
            std::array<Word, word_count> _words{};
    };
}
