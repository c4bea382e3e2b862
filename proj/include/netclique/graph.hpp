// Immutable undirected loopless graph stored as packed adjacency bitrows.
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace netclique {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

inline bool test_bit(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }

inline void clear_bit(std::span<Word> row, std::size_t i) { row[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t popcount(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline bool any_bit(std::span<const Word> row) {
  for (Word w : row) {
    if (w) return true;
  }
  return false;
}

template <class F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    Word w = row[i];
    while (w) {
      const auto b = static_cast<std::size_t>(std::countr_zero(w));
      f(static_cast<Vertex>(i * kWordBits + b));
      w &= w - 1;
    }
  }
}

class Graph {
 public:
  Graph() = default;

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }

  std::span<const Word> row(Vertex v) const { return {rows_.data() + std::size_t{v} * words_, words_}; }

  bool adjacent(Vertex u, Vertex v) const { return test_bit(row(u), v); }
  std::size_t degree(Vertex v) const { return popcount(row(v)); }
  std::size_t edge_count() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  // Optional per-vertex tags (empty when vertices carry no label).
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Vertex v) const;

  Graph complement() const;

  // Sorted edge list with u < v.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> rows_;
  std::vector<std::string> labels_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  // Symmetric; loops and out-of-range vertices throw std::invalid_argument.
  void add_edge(Vertex u, Vertex v);
  void set_label(Vertex v, std::string label);
  bool has_edge(Vertex u, Vertex v) const;

  Graph build() &&;

 private:
  Graph g_;
};

}  // namespace netclique
