#include "netclique/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace netclique {

Clique::Clique(std::vector<Vertex> v) : vertices(std::move(v)) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
}

bool Clique::contains(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

std::size_t CliqueHash::operator()(const Clique& c) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ c.vertices.size();
  for (Vertex v : c.vertices) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

namespace {

struct SharedState {
  const EnumerationOptions& opts;
  const CliqueSink& sink;
  std::mutex mutex;
  std::atomic<std::uint64_t> emitted{0};
  std::atomic<bool> stop{false};
  bool serialise = false;

  void emit(const std::vector<Vertex>& r) {
    Clique c{r};
    if (emitted.fetch_add(1) + 1 > opts.max_cliques) {
      throw CapExceeded("maximal clique count exceeds cap of " + std::to_string(opts.max_cliques));
    }
    if (serialise) {
      std::lock_guard lock(mutex);
      sink(c);
    } else {
      sink(c);
    }
  }
};

class Search {
 public:
  Search(const Graph& g, SharedState& shared) : g_(g), w_(g.words()), shared_(shared) {}

  void run(std::span<const Vertex> r0, std::span<const Word> p, std::span<const Word> x) {
    r_.assign(r0.begin(), r0.end());
    Word* level = buffers(0);
    std::copy(p.begin(), p.end(), level);
    std::copy(x.begin(), x.end(), level + w_);
    expand(0);
  }

 private:
  Word* buffers(std::size_t depth) {
    while (levels_.size() <= depth) levels_.emplace_back(3 * w_, 0);
    return levels_[depth].data();
  }

  void check_deadline() {
    if ((++nodes_ & 0xfff) != 0) return;
    if (shared_.stop.load(std::memory_order_relaxed)) throw CapExceeded("enumeration cancelled");
    if (shared_.opts.deadline && std::chrono::steady_clock::now() > *shared_.opts.deadline) {
      throw CapExceeded("enumeration exceeded its time budget");
    }
  }

  void expand(std::size_t depth) {
    check_deadline();
    Word* p = buffers(depth);
    Word* x = p + w_;
    Word* cand = p + 2 * w_;
    const std::span<const Word> ps(p, w_), xs(x, w_);
    const auto& opts = shared_.opts;

    if (!any_bit(ps)) {
      if (!any_bit(xs) && r_.size() >= opts.min_size) shared_.emit(r_);
      return;
    }
    std::size_t plen = popcount(ps);
    if (r_.size() + plen < opts.min_size) return;
    if (r_.size() >= opts.max_size) return;

    // Tomita pivot: u in P u X maximising |P n N(u)|.
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have = false;
    for (std::size_t i = 0; i < w_; ++i) {
      Word w = p[i] | x[i];
      while (w) {
        const Vertex u = static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        const std::size_t c = and_popcount(ps, g_.row(u));
        if (!have || c > best) {
          best = c;
          pivot = u;
          have = true;
        }
      }
    }
    const auto prow = g_.row(pivot);
    for (std::size_t i = 0; i < w_; ++i) cand[i] = p[i] & ~prow[i];

    for (std::size_t i = 0; i < w_; ++i) {
      Word w = cand[i];
      while (w) {
        const Vertex v = static_cast<Vertex>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
        Word* np = buffers(depth + 1);
        // buffers() may reallocate the level table, so re-derive this level's pointers.
        p = buffers(depth);
        x = p + w_;
        const auto vrow = g_.row(v);
        for (std::size_t k = 0; k < w_; ++k) {
          np[k] = p[k] & vrow[k];
          np[w_ + k] = x[k] & vrow[k];
        }
        r_.push_back(v);
        expand(depth + 1);
        r_.pop_back();
        p = buffers(depth);
        x = p + w_;
        clear_bit({p, w_}, v);
        set_bit({x, w_}, v);
        if (--plen + r_.size() < opts.min_size) return;
      }
    }
  }

  const Graph& g_;
  std::size_t w_;
  SharedState& shared_;
  std::vector<Vertex> r_;
  std::vector<std::vector<Word>> levels_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t enumerate_maximal_cliques(const Graph& g, std::span<const Vertex> seed, const CliqueSink& sink,
                                        const EnumerationOptions& opts) {
  const std::size_t w = g.words();
  for (Vertex v : seed) {
    if (v >= g.size()) throw std::out_of_range("seed vertex out of range");
  }
  if (!is_clique(g, seed)) return 0;

  std::vector<Word> p0(w, 0), x0(w, 0);
  {
    const auto common = common_neighbors(g, seed);
    for (Vertex v : common) set_bit(p0, v);
    for (Vertex v : seed) clear_bit(p0, v);
  }
  std::vector<Vertex> r0(seed.begin(), seed.end());

  SharedState shared{opts, sink, {}, {0}, {false}, false};
  const unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1 || !any_bit(p0) || r0.size() >= opts.max_size) {
    Search s(g, shared);
    s.run(r0, p0, x0);
    return shared.emitted.load();
  }

  // Top-level branches are independent once the root pivot is fixed.
  Vertex pivot = 0;
  std::size_t best = 0;
  bool have = false;
  for_each_bit(p0, [&](Vertex u) {
    const std::size_t c = and_popcount(p0, g.row(u));
    if (!have || c > best) {
      best = c;
      pivot = u;
      have = true;
    }
  });
  std::vector<Vertex> branches;
  for_each_bit(p0, [&](Vertex v) {
    if (!g.adjacent(pivot, v)) branches.push_back(v);
  });

  shared.serialise = true;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    Search s(g, shared);
    std::vector<Word> p(w), x(w);
    try {
      for (;;) {
        const std::size_t j = next.fetch_add(1);
        if (j >= branches.size() || shared.stop.load()) break;
        const Vertex v = branches[j];
        const auto vrow = g.row(v);
        std::vector<Word> earlier(w, 0);
        for (std::size_t i = 0; i < j; ++i) set_bit(earlier, branches[i]);
        for (std::size_t k = 0; k < w; ++k) {
          p[k] = p0[k] & ~earlier[k] & vrow[k];
          x[k] = earlier[k] & vrow[k];
        }
        std::vector<Vertex> r = r0;
        r.push_back(v);
        s.run(r, p, x);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      shared.stop = true;
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return shared.emitted.load();
}

std::vector<Clique> collect_maximal_cliques(const Graph& g, std::span<const Vertex> seed,
                                            const EnumerationOptions& opts) {
  std::vector<Clique> out;
  enumerate_maximal_cliques(g, seed, [&](const Clique& c) { out.push_back(c); }, opts);
  std::sort(out.begin(), out.end());
  return out;
}

SizeHistogram size_histogram(std::span<const Clique> cliques) {
  SizeHistogram h;
  for (const auto& c : cliques) ++h[c.size()];
  return h;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.size()) throw std::out_of_range("vertex out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

std::vector<Vertex> common_neighbors(const Graph& g, std::span<const Vertex> s) {
  const std::size_t w = g.words();
  std::vector<Word> acc(w, ~Word{0});
  if (g.size() % kWordBits) acc.back() = (Word{1} << (g.size() % kWordBits)) - 1;
  if (g.size() == 0) acc.clear();
  for (Vertex v : s) {
    if (v >= g.size()) throw std::out_of_range("vertex out of range");
    const auto row = g.row(v);
    for (std::size_t k = 0; k < w; ++k) {
      acc[k] &= (row[k] | (k == v / kWordBits ? Word{1} << (v % kWordBits) : Word{0}));
    }
  }
  std::vector<Vertex> out;
  for_each_bit(acc, [&](Vertex v) { out.push_back(v); });
  return out;
}

bool is_maximal_clique(const Graph& g, std::span<const Vertex> s) {
  if (!is_clique(g, s)) return false;
  std::vector<Vertex> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  return common_neighbors(g, s) == sorted;
}

bool is_line(const FieldSpec& f, std::span<const Vertex> s) {
  const std::uint32_t r = subfield_order(f);
  if (s.size() != r) return false;
  const FieldElement base{s[0]};
  const FieldElement dir = f.sub(FieldElement{s[1]}, base);
  for (Vertex v : s) {
    const FieldElement d = f.sub(FieldElement{v}, base);
    if (d.code == 0) continue;
    if (f.log(f.div(d, dir)) % (r + 1) != 0) return false;
  }
  return true;
}

DelsarteReport delsarte_check(const FieldSpec& f, const Graph& g, const NetSpec& net, std::span<const Clique> cliques) {
  if (net.m() == 0 || net.m() >= net.r + 1) {
    throw std::invalid_argument("Delsarte check needs a net with 0 < m < r+1");
  }
  if (g.size() != std::size_t{net.r} * net.r) throw std::invalid_argument("graph is not on r^2 vertices");
  DelsarteReport rep;
  rep.bound = net.r;
  for (const auto& c : cliques) rep.max_clique = std::max(rep.max_clique, c.size());
  rep.within_bound = rep.max_clique <= rep.bound;
  for (const auto& c : cliques) {
    if (c.size() != rep.bound) continue;
    ++rep.maximum_cliques;
    if (is_line(f, c.vertices)) ++rep.maximum_cliques_that_are_lines;
  }
  rep.attained = rep.maximum_cliques > 0;
  rep.all_maximum_are_lines = rep.maximum_cliques == rep.maximum_cliques_that_are_lines;
  return rep;
}

}  // namespace netclique
