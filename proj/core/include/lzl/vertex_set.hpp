#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

namespace lzl {

using Vertex = std::size_t;

/// Fixed-width bit vector over the vertex indices of one graph.
///
/// The width (universe) is set at construction and never changes; binary
/// operations require equal universes. Iteration is in ascending vertex order.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return index_ * kWordBits + static_cast<std::size_t>(std::countr_zero(word_)); }
    const_iterator& operator++() {
      word_ &= word_ - 1;
      skip_empty();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return index_ == other.index_ && word_ == other.word_; }

   private:
    friend class VertexSet;
    const_iterator(const Word* words, std::size_t count, std::size_t index)
        : words_(words), count_(count), index_(index), word_(index < count ? words[index] : 0) {
      skip_empty();
    }
    void skip_empty() {
      while (word_ == 0 && index_ < count_) {
        ++index_;
        word_ = index_ < count_ ? words_[index_] : 0;
      }
    }

    const Word* words_ = nullptr;
    std::size_t count_ = 0;
    std::size_t index_ = 0;
    Word word_ = 0;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_vector(std::size_t universe, const std::vector<Vertex>& members);
  /// Set from the low `universe` bits of `mask`; requires universe <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const { return v < universe_ && ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0; }
  void insert(Vertex v);
  void erase(Vertex v);
  void clear();

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  std::optional<Vertex> first() const noexcept;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  /// Low 64 bits as a mask; requires universe <= 64.
  std::uint64_t mask() const;

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  std::string to_string() const;

  const_iterator begin() const { return {words_.data(), words_.size(), 0}; }
  const_iterator end() const { return {words_.data(), words_.size(), words_.size()}; }

  const std::vector<Word>& words() const noexcept { return words_; }

  bool operator==(const VertexSet& other) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

 private:
  static std::size_t word_count(std::size_t universe) { return (universe + kWordBits - 1) / kWordBits; }
  void require_same_universe(const VertexSet& other) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept;
};

}  // namespace lzl
