#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace mcc {

/// Hard capacity of an ElemSet in elements. GroundSet enforces a runtime
/// limit at or below this.
inline constexpr std::size_t kMaxElements = 128;

/// Fixed-width bit vector over element indices 0..kMaxElements-1.
///
/// Ordering is lectic: the bit pattern read as an unsigned integer with
/// index 0 least significant.
class ElemSet {
 public:
  static constexpr std::size_t kWords = kMaxElements / 64;
  using Word = std::uint64_t;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = const std::size_t*;
    using reference = std::size_t;

    iterator() = default;
    iterator(const ElemSet* set, std::size_t word, Word rest)
        : set_(set), word_(word), rest_(rest) { settle(); }

    std::size_t operator*() const {
      return word_ * 64 + static_cast<std::size_t>(std::countr_zero(rest_));
    }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return word_ == o.word_ && rest_ == o.rest_; }

   private:
    void settle() {
      while (rest_ == 0 && word_ + 1 < kWords) {
        ++word_;
        rest_ = set_->words_[word_];
      }
      if (rest_ == 0) word_ = kWords;
    }

    const ElemSet* set_ = nullptr;
    std::size_t word_ = kWords;
    Word rest_ = 0;
  };

  constexpr ElemSet() = default;

  ElemSet(std::initializer_list<std::size_t> elems) {
    for (auto e : elems) insert(e);
  }

  template <class Range>
  static ElemSet of(const Range& elems) {
    ElemSet s;
    for (auto e : elems) s.insert(static_cast<std::size_t>(e));
    return s;
  }

  /// {0, ..., n-1}.
  static ElemSet full(std::size_t n) {
    ElemSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~Word{0} : ((Word{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  static ElemSet singleton(std::size_t e) {
    ElemSet s;
    s.insert(e);
    return s;
  }

  bool contains(std::size_t e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(std::size_t e) { words_[e >> 6] |= Word{1} << (e & 63); }
  void erase(std::size_t e) { words_[e >> 6] &= ~(Word{1} << (e & 63)); }

  ElemSet with(std::size_t e) const {
    ElemSet s = *this;
    s.insert(e);
    return s;
  }
  ElemSet without(std::size_t e) const {
    ElemSet s = *this;
    s.erase(e);
    return s;
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool proper_subset_of(const ElemSet& o) const { return subset_of(o) && *this != o; }

  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Largest member; undefined on the empty set.
  std::size_t max() const {
    for (std::size_t i = kWords; i-- > 0;)
      if (words_[i]) return i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[i]));
    return 0;
  }

  /// Complement within {0, ..., n-1}.
  ElemSet complement(std::size_t n) const { return full(n) - *this; }

  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) {
    for (std::size_t i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  friend std::strong_ordering operator<=>(const ElemSet& a, const ElemSet& b) {
    for (std::size_t i = kWords; i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] <=> b.words_[i];
    return std::strong_ordering::equal;
  }

  iterator begin() const { return iterator(this, 0, words_[0]); }
  iterator end() const { return iterator(this, kWords, 0); }

  std::vector<std::size_t> to_vector() const { return {begin(), end()}; }

  const std::array<Word, kWords>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<Word>{}(w);
    return h;
  }

 private:
  std::array<Word, kWords> words_{};
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

/// Sort lectically and drop duplicates.
inline void normalize(std::vector<ElemSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

/// Keep only inclusion-minimal members; result is lectically sorted.
inline std::vector<ElemSet> minimal_members(std::vector<ElemSet> sets) {
  // Supersets have strictly more bits, so ascending size order means any
  // subset of a candidate has already been kept.
  normalize(sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const ElemSet& a, const ElemSet& b) { return a.size() < b.size(); });
  std::vector<ElemSet> kept;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (k.subset_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

/// Keep only inclusion-maximal members; result is lectically sorted.
inline std::vector<ElemSet> maximal_members(std::vector<ElemSet> sets) {
  normalize(sets);
  std::stable_sort(sets.begin(), sets.end(),
                   [](const ElemSet& a, const ElemSet& b) { return a.size() > b.size(); });
  std::vector<ElemSet> kept;
  for (const auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept)
      if (s.subset_of(k)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

inline bool is_antichain(const std::vector<ElemSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = 0; j < sets.size(); ++j)
      if (i != j && sets[i].subset_of(sets[j])) return false;
  return true;
}

}  // namespace mcc
