#include "lzl/vertex_set.hpp"

#include <algorithm>
#include <sstream>

#include "lzl/errors.hpp"

namespace lzl {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

VertexSet VertexSet::from_vector(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > kWordBits) throw PreconditionError("VertexSet::from_mask needs universe <= 64");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = mask;
  s.trim();
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_) throw PreconditionError("vertex " + std::to_string(v) + " outside universe " + std::to_string(universe_));
  words_[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  if (v >= universe_) return;
  words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() { std::fill(words_.begin(), words_.end(), 0); }

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const noexcept {
  auto it = begin();
  if (it == end()) return std::nullopt;
  return *it;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw PreconditionError("VertexSet universe mismatch: " + std::to_string(universe_) + " vs " +
                            std::to_string(other.universe_));
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (Word& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > kWordBits) throw PreconditionError("VertexSet::mask needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string VertexSet::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first_item = true;
  for (Vertex v : *this) {
    if (!first_item) out << ',';
    out << v;
    first_item = false;
  }
  out << '}';
  return out.str();
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  if (auto c = universe_ <=> other.universe_; c != 0) return c;
  // Compare as big integers, most significant word first.
  for (std::size_t i = words_.size(); i-- > 0;) {
    if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

void VertexSet::trim() {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t VertexSetHash::operator()(const VertexSet& s) const noexcept {
  std::size_t h = s.universe() * 0x9E3779B97F4A7C15ULL;
  for (auto w : s.words()) {
    h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace lzl
