#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace idcode {

using Vertex = std::uint32_t;

/// Fixed-universe bitset over vertex ids [0, universe).
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }
    void insert(Vertex v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }
    void erase(Vertex v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const noexcept {
        for (Word w : words_)
            if (w) return false;
        return true;
    }

    bool intersects(const VertexSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const noexcept {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
        return *this;
    }
    VertexSet& operator^=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    /// Calls f(v) for every member in ascending order.
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            Word w = words_[k];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<Vertex>(k * kWordBits + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
        for (Word w : words_) h = (h ^ std::hash<Word>{}(w)) * 0x100000001b3ULL + 0x7f4a7c15ULL;
        return h;
    }

private:
    void check(Vertex v) const {
        if (v >= universe_) throw std::out_of_range("vertex id outside the set universe");
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw std::invalid_argument("vertex sets over different universes");
    }
    void trim() noexcept {
        if (const std::size_t tail = universe_ % kWordBits; tail != 0 && !words_.empty())
            words_.back() &= (Word{1} << tail) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace idcode
