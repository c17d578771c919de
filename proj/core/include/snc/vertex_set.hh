#ifndef SNC_GUARD_SNC_VERTEX_SET_HH
#define SNC_GUARD_SNC_VERTEX_SET_HH 1

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

namespace snc
{
    using VertexId = std::size_t;

    /// A set of vertices drawn from [0, universe), stored as a dense bitset.
    /// Iteration is in increasing id order.
    class VertexSet
    {
    public:
        using Word = std::uint64_t;
        static constexpr std::size_t word_bits = 64;

        class const_iterator
        {
        private:
            const Word * _words = nullptr;
            std::size_t _word_count = 0, _word = 0;
            Word _remaining = 0;

            auto skip_empty() -> void
            {
                while (_remaining == 0 && ++_word < _word_count)
                    _remaining = _words[_word];
            }

        public:
            using iterator_category = std::forward_iterator_tag;
            using value_type = VertexId;
            using difference_type = std::ptrdiff_t;
            using pointer = const VertexId *;
            using reference = VertexId;

            const_iterator() = default;

            const_iterator(const Word * words, std::size_t word_count, std::size_t word) :
                _words(words), _word_count(word_count), _word(word)
            {
                if (_word < _word_count) {
                    _remaining = _words[_word];
                    skip_empty();
                }
            }

            auto operator*() const -> VertexId
            {
                return _word * word_bits + static_cast<std::size_t>(std::countr_zero(_remaining));
            }

            auto operator++() -> const_iterator &
            {
                _remaining &= _remaining - 1;
                skip_empty();
                return *this;
            }

            auto operator++(int) -> const_iterator
            {
                auto result = *this;
                ++*this;
                return result;
            }

            auto operator==(const const_iterator & other) const -> bool
            {
                return _word == other._word && _remaining == other._remaining;
            }
        };

    private:
        std::size_t _universe = 0;
        std::vector<Word> _words;

    public:
        VertexSet() = default;
        explicit VertexSet(std::size_t universe);

        static auto from_words(std::size_t universe, std::span<const Word> words) -> VertexSet;
        static auto full(std::size_t universe) -> VertexSet;
        static auto of(std::size_t universe, std::initializer_list<VertexId> members) -> VertexSet;

        static auto words_for(std::size_t universe) -> std::size_t { return (universe + word_bits - 1) / word_bits; }

        auto universe() const noexcept -> std::size_t { return _universe; }
        auto size() const noexcept -> std::size_t;
        auto empty() const noexcept -> bool;

        auto contains(VertexId v) const noexcept -> bool
        {
            return v < _universe && (_words[v / word_bits] >> (v % word_bits)) & 1u;
        }

        auto insert(VertexId v) -> void { _words[v / word_bits] |= Word{1} << (v % word_bits); }
        auto erase(VertexId v) -> void { _words[v / word_bits] &= ~(Word{1} << (v % word_bits)); }

        auto words() const noexcept -> std::span<const Word> { return _words; }
        auto mutable_words() noexcept -> std::span<Word> { return _words; }

        auto operator|=(const VertexSet & other) -> VertexSet &;
        auto operator&=(const VertexSet & other) -> VertexSet &;
        auto operator-=(const VertexSet & other) -> VertexSet &;

        auto intersection_size(const VertexSet & other) const noexcept -> std::size_t;
        auto is_subset_of(const VertexSet & other) const noexcept -> bool;

        auto begin() const -> const_iterator { return const_iterator{_words.data(), _words.size(), 0}; }
        auto end() const -> const_iterator { return const_iterator{_words.data(), _words.size(), _words.size()}; }

        auto to_vector() const -> std::vector<VertexId>;

        auto operator==(const VertexSet & other) const -> bool = default;
    };

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet;
    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet;
}

#endif
