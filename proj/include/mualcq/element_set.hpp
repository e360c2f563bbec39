// element_set.hpp - subsets of a finite, index-addressed universe.
//
// Domains in this project are tiny, so a set is a bit vector whose first
// 64 bits live inline; larger universes spill to the heap.

#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace mualcq {

class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static ElementSet of(std::size_t universe, std::initializer_list<std::size_t> elems) {
    ElementSet s(universe);
    for (auto e : elems) s.insert(e);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(std::size_t e) const noexcept {
    assert(e < universe_);
    return (words_[e / 64] >> (e % 64)) & 1U;
  }
  void insert(std::size_t e) noexcept {
    assert(e < universe_);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  void erase(std::size_t e) noexcept {
    assert(e < universe_);
    words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }
  void set(std::size_t e, bool value) noexcept {
    if (value)
      insert(e);
    else
      erase(e);
  }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const ElementSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  /// Number of common elements.
  std::size_t count_common(const ElementSet& o) const noexcept {
    assert(universe_ == o.universe_);
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
    return n;
  }

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return universe_;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w != 0) {
        out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  ElementSet& operator&=(const ElementSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  ElementSet complement() const {
    ElementSet r = *this;
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  boost::container::small_vector<std::uint64_t, 1> words_;
};

}  // namespace mualcq
