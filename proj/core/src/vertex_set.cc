#include <snc/vertex_set.hh>

#include <algorithm>
#include <numeric>

using std::size_t;
using std::span;
using std::vector;

namespace snc
{
    VertexSet::VertexSet(size_t universe) :
        _universe(universe),
        _words(words_for(universe), 0)
    {
    }

    auto VertexSet::from_words(size_t universe, span<const Word> words) -> VertexSet
    {
        VertexSet result{universe};
        std::copy_n(words.begin(), std::min(words.size(), result._words.size()), result._words.begin());
        if (auto tail = universe % word_bits; tail != 0 && ! result._words.empty())
            result._words.back() &= (Word{1} << tail) - 1;
        return result;
    }

    auto VertexSet::full(size_t universe) -> VertexSet
    {
        VertexSet result{universe};
        std::fill(result._words.begin(), result._words.end(), ~Word{0});
        if (auto tail = universe % word_bits; tail != 0)
            result._words.back() = (Word{1} << tail) - 1;
        return result;
    }

    auto VertexSet::of(size_t universe, std::initializer_list<VertexId> members) -> VertexSet
    {
        VertexSet result{universe};
        for (auto v : members)
            result.insert(v);
        return result;
    }

    auto VertexSet::size() const noexcept -> size_t
    {
        size_t result = 0;
        for (auto w : _words)
            result += static_cast<size_t>(std::popcount(w));
        return result;
    }

    auto VertexSet::empty() const noexcept -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](Word w) { return w == 0; });
    }

    auto VertexSet::operator|=(const VertexSet & other) -> VertexSet &
    {
        for (size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto VertexSet::operator&=(const VertexSet & other) -> VertexSet &
    {
        for (size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    auto VertexSet::operator-=(const VertexSet & other) -> VertexSet &
    {
        for (size_t i = 0; i < _words.size(); ++i)
            _words[i] &= ~other._words[i];
        return *this;
    }

    auto VertexSet::intersection_size(const VertexSet & other) const noexcept -> size_t
    {
        size_t result = 0;
        for (size_t i = 0; i < _words.size(); ++i)
            result += static_cast<size_t>(std::popcount(_words[i] & other._words[i]));
        return result;
    }

    auto VertexSet::is_subset_of(const VertexSet & other) const noexcept -> bool
    {
        for (size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & ~other._words[i])
                return false;
        return true;
    }

    auto VertexSet::to_vector() const -> vector<VertexId>
    {
        return vector<VertexId>(begin(), end());
    }

    auto operator|(VertexSet a, const VertexSet & b) -> VertexSet { return a |= b; }
    auto operator&(VertexSet a, const VertexSet & b) -> VertexSet { return a &= b; }
    auto operator-(VertexSet a, const VertexSet & b) -> VertexSet { return a -= b; }
}
