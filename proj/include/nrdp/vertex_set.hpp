#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace nrdp {

using Vertex = std::size_t;

// Fixed-universe subset of {0, ..., n-1} stored as 64-bit words.
// Binary operations require both operands to share the same universe size.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, const std::vector<Vertex>& members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return n_; }

  bool contains(Vertex v) const { return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U); }

  void insert(Vertex v) {
    check_index(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check_index(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member, or universe() when empty.
  Vertex first() const { return next(0); }
  // Smallest member >= from, or universe() if there is none.
  Vertex next(Vertex from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) {
        Vertex v = (wi << 6) + static_cast<Vertex>(std::countr_zero(w));
        return v < n_ ? v : n_;
      }
      if (++wi >= words_.size()) return n_;
      w = words_[wi];
    }
  }
  // Largest member, or universe() when empty.
  Vertex last() const {
    for (std::size_t wi = words_.size(); wi-- > 0;) {
      if (words_[wi] != 0) return (wi << 6) + 63 - static_cast<Vertex>(std::countl_zero(words_[wi]));
    }
    return n_;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (Vertex v = first(); v < n_; v = next(v + 1)) out.push_back(v);
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        f((wi << 6) + static_cast<Vertex>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const {
    VertexSet c(n_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  // Orders by universe, then lexicographically by sorted member list.
  friend bool operator<(const VertexSet& a, const VertexSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    Vertex x = a.first(), y = b.first();
    while (x < a.n_ && y < b.n_) {
      if (x != y) return x < y;
      x = a.next(x + 1);
      y = b.next(y + 1);
    }
    return x == a.n_ && y < b.n_;
  }

  std::size_t hash() const {
    std::size_t h = std::hash<std::size_t>{}(n_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  // "0,3" style, members ascending. Empty set renders as "".
  std::string to_string() const {
    std::string s;
    for_each([&](Vertex v) {
      if (!s.empty()) s += ',';
      s += std::to_string(v);
    });
    return s;
  }

 private:
  void check_index(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
  }
  void check_same(const VertexSet& o) const {
    if (o.n_ != n_) throw std::invalid_argument("vertex sets over different universes");
  }
  void trim() {
    if (n_ & 63) words_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace nrdp

template <>
struct std::hash<nrdp::VertexSet> {
  std::size_t operator()(const nrdp::VertexSet& s) const { return s.hash(); }
};
