#include "netclique/graph.hpp"

#include <stdexcept>

namespace netclique {

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Vertex v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_bit(row(v), [&](Vertex u) { out.push_back(u); });
  return out;
}

std::string Graph::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Graph Graph::complement() const {
  GraphBuilder b(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (!adjacent(u, v)) b.add_edge(u, v);
    }
  }
  for (Vertex v = 0; v < labels_.size(); ++v) b.set_label(v, labels_[v]);
  return std::move(b).build();
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.rows_.assign(n * g_.words_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_) throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  set_bit({g_.rows_.data() + std::size_t{u} * g_.words_, g_.words_}, v);
  set_bit({g_.rows_.data() + std::size_t{v} * g_.words_, g_.words_}, u);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

void GraphBuilder::set_label(Vertex v, std::string label) {
  if (v >= g_.n_) throw std::invalid_argument("label vertex out of range");
  if (g_.labels_.empty()) g_.labels_.resize(g_.n_);
  g_.labels_[v] = std::move(label);
}

Graph GraphBuilder::build() && { return std::move(g_); }

}  // namespace netclique
