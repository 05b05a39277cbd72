#include "fgs/core_graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace fgs {

std::size_t LabeledGraph::add_vertex(std::string note) {
  if (!notes.empty() || !note.empty()) {
    notes.resize(vertex_count);
    notes.push_back(std::move(note));
  }
  return vertex_count++;
}

void LabeledGraph::add_letter_edge(std::size_t from, Letter l, std::size_t to) {
  if (l.is_inverse()) {
    add_edge(to, l.generator(), from);
  } else {
    add_edge(from, l.generator(), to);
  }
}

LabeledGraph lollipop(const Word& w, std::size_t rank) {
  LabeledGraph g;
  g.rank = rank;
  const std::size_t n = w.length();
  if (n == 0) return g;
  // w = p · c · p⁻¹ with p maximal; c is nonempty because w is reduced.
  std::size_t stem = 0;
  while (2 * stem + 2 <= n && w[stem] == w[n - 1 - stem].inverse()) ++stem;
  std::size_t at = g.basepoint;
  for (std::size_t i = 0; i < stem; ++i) {
    const std::size_t next = g.add_vertex();
    g.add_letter_edge(at, w[i], next);
    at = next;
  }
  const std::size_t cycle_start = at;
  const std::size_t cycle_len = n - 2 * stem;
  for (std::size_t i = 0; i < cycle_len; ++i) {
    const std::size_t next = i + 1 == cycle_len ? cycle_start : g.add_vertex();
    g.add_letter_edge(at, w[stem + i], next);
    at = next;
  }
  return g;
}

LabeledGraph wedge(const std::vector<LabeledGraph>& graphs) {
  LabeledGraph out;
  if (!graphs.empty()) out.rank = graphs.front().rank;
  for (const auto& g : graphs) {
    if (g.rank != out.rank) throw std::invalid_argument("wedge of graphs over different alphabets");
    std::vector<std::size_t> remap(g.vertex_count);
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
      remap[v] = v == g.basepoint ? out.basepoint : out.add_vertex();
    }
    for (const auto& e : g.edges) out.add_edge(remap[e.from], e.label, remap[e.to]);
  }
  return out;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  // Keeps the smaller representative so the basepoint survives as itself.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

/// Renumbers the listed vertices 0..k-1 in list order and keeps the flagged
/// edges. The basepoint must be listed first.
LabeledGraph restrict_to(const LabeledGraph& g, const std::vector<std::size_t>& keep,
                         const std::vector<bool>& keep_edge) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> remap(g.vertex_count, none);
  LabeledGraph out;
  out.rank = g.rank;
  out.vertex_count = 0;
  for (std::size_t v : keep) {
    remap[v] = out.vertex_count++;
  }
  if (!g.notes.empty()) {
    out.notes.resize(out.vertex_count);
    for (std::size_t v : keep) {
      if (v < g.notes.size()) out.notes[remap[v]] = g.notes[v];
    }
  }
  out.basepoint = remap[g.basepoint];
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!keep_edge[i]) continue;
    const auto& e = g.edges[i];
    out.add_edge(remap[e.from], e.label, remap[e.to]);
  }
  return out;
}

}  // namespace

LabeledGraph fold(const LabeledGraph& g, std::optional<std::uint64_t> shuffle_seed) {
  UnionFind uf(g.vertex_count);
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), 0);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<bool> alive(g.edges.size(), true);
  bool merged = true;
  while (merged) {
    merged = false;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> out_edge;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> in_edge;
    for (std::size_t i : order) {
      if (!alive[i]) continue;
      const auto& e = g.edges[i];
      const std::size_t f = uf.find(e.from);
      const std::size_t t = uf.find(e.to);
      const auto out_it = out_edge.find({f, e.label});
      if (out_it != out_edge.end()) {
        uf.unite(t, g.edges[out_it->second].to);
        alive[i] = false;
        merged = true;
        break;
      }
      const auto in_it = in_edge.find({t, e.label});
      if (in_it != in_edge.end()) {
        uf.unite(f, g.edges[in_it->second].from);
        alive[i] = false;
        merged = true;
        break;
      }
      out_edge.emplace(std::make_pair(f, e.label), i);
      in_edge.emplace(std::make_pair(t, e.label), i);
    }
  }

  LabeledGraph quotient;
  quotient.rank = g.rank;
  quotient.vertex_count = g.vertex_count;
  quotient.basepoint = uf.find(g.basepoint);
  quotient.notes = g.notes;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (!alive[i]) continue;
    const auto& e = g.edges[i];
    quotient.add_edge(uf.find(e.from), e.label, uf.find(e.to));
  }
  std::vector<std::size_t> keep{quotient.basepoint};
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (uf.find(v) == v && v != quotient.basepoint) keep.push_back(v);
  }
  return restrict_to(quotient, keep, std::vector<bool>(quotient.edges.size(), true));
}

LabeledGraph basepoint_component(const LabeledGraph& g) {
  std::vector<std::vector<std::size_t>> neighbours(g.vertex_count);
  for (const auto& e : g.edges) {
    neighbours[e.from].push_back(e.to);
    neighbours[e.to].push_back(e.from);
  }
  std::vector<bool> seen(g.vertex_count, false);
  std::vector<std::size_t> keep{g.basepoint};
  seen[g.basepoint] = true;
  for (std::size_t head = 0; head < keep.size(); ++head) {
    for (std::size_t w : neighbours[keep[head]]) {
      if (!seen[w]) {
        seen[w] = true;
        keep.push_back(w);
      }
    }
  }
  std::sort(keep.begin() + 1, keep.end());
  std::vector<bool> keep_edge(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) keep_edge[i] = seen[g.edges[i].from];
  return restrict_to(g, keep, keep_edge);
}

LabeledGraph trim(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count;
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    incident[g.edges[i].from].push_back(i);
    incident[g.edges[i].to].push_back(i);
  }
  std::vector<bool> in_component(n, false);
  std::deque<std::size_t> queue{g.basepoint};
  in_component[g.basepoint] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t i : incident[v]) {
      for (std::size_t w : {g.edges[i].from, g.edges[i].to}) {
        if (!in_component[w]) {
          in_component[w] = true;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<bool> edge_alive(g.edges.size());
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    edge_alive[i] = in_component[g.edges[i].from];
    if (!edge_alive[i]) continue;
    ++degree[g.edges[i].from];
    ++degree[g.edges[i].to];
  }
  std::vector<bool> vertex_alive = in_component;
  std::deque<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (vertex_alive[v] && v != g.basepoint && degree[v] <= 1) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    const std::size_t v = leaves.front();
    leaves.pop_front();
    if (!vertex_alive[v]) continue;
    vertex_alive[v] = false;
    for (std::size_t i : incident[v]) {
      if (!edge_alive[i]) continue;
      edge_alive[i] = false;
      const std::size_t other = g.edges[i].from == v ? g.edges[i].to : g.edges[i].from;
      --degree[g.edges[i].from];
      --degree[g.edges[i].to];
      if (vertex_alive[other] && other != g.basepoint && degree[other] <= 1) leaves.push_back(other);
    }
  }

  std::vector<std::size_t> keep{g.basepoint};
  for (std::size_t v = 0; v < n; ++v) {
    if (vertex_alive[v] && v != g.basepoint) keep.push_back(v);
  }
  return restrict_to(g, keep, edge_alive);
}

bool is_folded(const LabeledGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, int> out_count;
  std::map<std::pair<std::size_t, std::size_t>, int> in_count;
  for (const auto& e : g.edges) {
    if (++out_count[{e.from, e.label}] > 1) return false;
    if (++in_count[{e.to, e.label}] > 1) return false;
  }
  return true;
}

CoreGraph CoreGraph::certify(const LabeledGraph& g) {
  if (!is_folded(g)) throw std::invalid_argument("graph is not folded");
  const std::size_t n = g.vertex_count;
  const std::size_t letters = 2 * g.rank;
  std::vector<std::uint32_t> adj(n * letters, 0);
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : g.edges) {
    if (e.label >= g.rank || e.from >= n || e.to >= n) throw std::invalid_argument("edge outside the graph");
    adj[e.from * letters + Letter(e.label, false).code()] = static_cast<std::uint32_t>(e.to + 1);
    adj[e.to * letters + Letter(e.label, true).code()] = static_cast<std::uint32_t>(e.from + 1);
    ++degree[e.from];
    ++degree[e.to];
  }

  // Canonical numbering: BFS from the basepoint, outgoing labels in alphabet
  // order, then incoming labels in alphabet order. Foldedness makes every
  // step deterministic.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, none);
  std::vector<std::size_t> order{g.basepoint};
  number[g.basepoint] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t v = order[head];
    for (int inverse = 0; inverse < 2; ++inverse) {
      for (std::size_t label = 0; label < g.rank; ++label) {
        const std::uint32_t w = adj[v * letters + Letter(label, inverse != 0).code()];
        if (w != 0 && number[w - 1] == none) {
          number[w - 1] = order.size();
          order.push_back(w - 1);
        }
      }
    }
  }
  if (order.size() != n) throw std::invalid_argument("graph is not connected");
  for (std::size_t v = 0; v < n; ++v) {
    if (v != g.basepoint && degree[v] < 2) throw std::invalid_argument("graph has a hanging vertex");
  }

  CoreGraph c;
  c.rank_ = g.rank;
  c.vertex_count_ = n;
  c.edges_.reserve(g.edges.size());
  for (const auto& e : g.edges) c.edges_.push_back({number[e.from], e.label, number[e.to]});
  std::sort(c.edges_.begin(), c.edges_.end());
  c.adjacency_.assign(n * letters, 0);
  for (const auto& e : c.edges_) {
    c.adjacency_[e.from * letters + Letter(e.label, false).code()] = static_cast<std::uint32_t>(e.to + 1);
    c.adjacency_[e.to * letters + Letter(e.label, true).code()] = static_cast<std::uint32_t>(e.from + 1);
  }
  std::string& key = c.key_.bytes;
  key = std::to_string(g.rank) + ":" + std::to_string(n) + ":";
  for (const auto& e : c.edges_) {
    key += std::to_string(e.from) + "." + std::to_string(e.label) + "." + std::to_string(e.to) + ";";
  }
  return c;
}

std::optional<std::size_t> CoreGraph::step(std::size_t v, Letter l) const {
  if (l.generator() >= rank_) return std::nullopt;
  const std::uint32_t w = adjacency_[v * 2 * rank_ + l.code()];
  if (w == 0) return std::nullopt;
  return w - 1;
}

LabeledGraph CoreGraph::to_labeled() const {
  LabeledGraph g;
  g.rank = rank_;
  g.vertex_count = vertex_count_;
  g.basepoint = 0;
  g.edges = edges_;
  return g;
}

CoreGraph core_of(const WordSet& z, const Alphabet& alphabet) {
  std::vector<LabeledGraph> pieces;
  pieces.reserve(z.size());
  for (const auto& w : z) pieces.push_back(lollipop(w, alphabet.rank()));
  LabeledGraph g = wedge(pieces);
  g.rank = alphabet.rank();
  return CoreGraph::certify(trim(fold(g)));
}

std::optional<std::size_t> trace(const CoreGraph& g, const Word& w) {
  std::size_t at = CoreGraph::basepoint();
  for (Letter l : w.letters()) {
    const auto next = g.step(at, l);
    if (!next) return std::nullopt;
    at = *next;
  }
  return at;
}

std::vector<std::size_t> basepoint_loop_letters(const CoreGraph& g) {
  std::vector<std::size_t> out;
  for (std::size_t label = 0; label < g.rank(); ++label) {
    if (g.step(CoreGraph::basepoint(), Letter(label, false)) == CoreGraph::basepoint()) out.push_back(label);
  }
  return out;
}

WordSet subgroup_basis(const CoreGraph& g) {
  const std::size_t n = g.vertex_count();
  // Tree path from the basepoint to each vertex; tree_edge marks used edges.
  std::vector<Word> path(n);
  std::vector<bool> reached(n, false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_index;  // (from, label) -> i
  for (std::size_t i = 0; i < g.edge_count(); ++i) edge_index[{g.edges()[i].from, g.edges()[i].label}] = i;

  std::deque<std::size_t> queue{CoreGraph::basepoint()};
  reached[CoreGraph::basepoint()] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (int inverse = 0; inverse < 2; ++inverse) {
      for (std::size_t label = 0; label < g.rank(); ++label) {
        const Letter l(label, inverse != 0);
        const auto w = g.step(v, l);
        if (!w || reached[*w]) continue;
        reached[*w] = true;
        path[*w] = concat(path[v], Word::from_letter(l));
        tree_edge[inverse ? edge_index.at({*w, label}) : edge_index.at({v, label})] = true;
        queue.push_back(*w);
      }
    }
  }
  std::vector<Word> basis;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (tree_edge[i]) continue;
    const auto& e = g.edges()[i];
    basis.push_back(concat(concat(path[e.from], Word::from_letter(Letter(e.label, false))), invert(path[e.to])));
  }
  return WordSet(std::move(basis));
}

}  // namespace fgs
