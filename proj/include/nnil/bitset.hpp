#ifndef NNIL_BITSET_HPP
#define NNIL_BITSET_HPP

#include <cstdint>
#include <vector>

namespace nnil {

// Dynamic bitset sized at construction. Models here are small, but universal
// model generation for n=3 can produce trees past any fixed word size.
class Bitset {
public:
    Bitset() : size_(0) {}
    explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all() {
        for (auto& w : words_) w = ~std::uint64_t{0};
        trim();
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    bool subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset operator&(const Bitset& o) const {
        Bitset r = *this;
        r &= o;
        return r;
    }
    Bitset operator|(const Bitset& o) const {
        Bitset r = *this;
        r |= o;
        return r;
    }
    // Set difference: bits in *this and not in o.
    Bitset minus(const Bitset& o) const {
        Bitset r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    Bitset complement() const {
        Bitset r = *this;
        for (auto& w : r.words_) w = ~w;
        r.trim();
        return r;
    }

    bool operator==(const Bitset& o) const {
        return size_ == o.size_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }
    bool operator<(const Bitset& o) const {
        if (size_ != o.size_) return size_ < o.size_;
        return words_ < o.words_;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = 0; i < size_; ++i)
            if (test(i)) out.push_back(i);
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int i = 0; i < size_; ++i)
            if (test(i)) f(i);
    }

private:
    void trim() {
        if (size_ & 63) words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
    }

    int size_;
    std::vector<std::uint64_t> words_;
};

}  // namespace nnil

#endif
