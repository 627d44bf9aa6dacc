#include "primepark/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace primepark {

const char* to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::TooFewVertices: return "too few vertices";
    case GraphErrorKind::DuplicateVertex: return "duplicate vertex";
    case GraphErrorKind::UnknownVertex: return "unknown vertex";
    case GraphErrorKind::LoopEdge: return "loop edge";
    case GraphErrorKind::InvalidMultiplicity: return "invalid multiplicity";
    case GraphErrorKind::Disconnected: return "disconnected graph";
    case GraphErrorKind::SinkDeletion: return "sink deletion";
  }
  return "graph error";
}

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::initializer_list<VertexId> members)
    : bits_(universe, false) {
  for (VertexId v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members)
    : bits_(universe, false) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  VertexSet set(universe);
  for (VertexId v = 0; v < universe && v < 64; ++v) {
    if ((mask >> v) & 1U) set.bits_[v] = true;
  }
  return set;
}

void VertexSet::insert(VertexId v) {
  if (v >= bits_.size()) throw std::out_of_range("vertex outside the set's universe");
  bits_[v] = true;
}

void VertexSet::erase(VertexId v) {
  if (v < bits_.size()) bits_[v] = false;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

VertexSet VertexSet::complement() const {
  VertexSet out(*this);
  out.bits_.flip();
  return out;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < bits_.size(); ++v) {
    if (bits_[v]) out.push_back(v);
  }
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw std::invalid_argument("vertex sets over different universes");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] || other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && other.bits_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] && !other.bits_[i];
  return *this;
}

// ---------------------------------------------------------------------------
// RootedMultigraph

VertexId RootedMultigraph::id(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw GraphError(GraphErrorKind::UnknownVertex, "unknown vertex '" + std::string(name) + "'");
  }
  return it->second;
}

bool RootedMultigraph::has_vertex(std::string_view name) const {
  return index_.contains(std::string(name));
}

Multiplicity RootedMultigraph::mult(VertexId v, VertexId w) const {
  const auto& row = adjacency_.at(v);
  auto it = std::lower_bound(row.begin(), row.end(), w,
                             [](const Neighbour& n, VertexId x) { return n.vertex < x; });
  return (it != row.end() && it->vertex == w) ? it->multiplicity : 0;
}

Multiplicity RootedMultigraph::deg_within(VertexId v, const VertexSet& subset) const {
  Multiplicity total = 0;
  for (const Neighbour& n : adjacency_.at(v)) {
    if (subset.contains(n.vertex)) total += n.multiplicity;
  }
  return total;
}

VertexSet RootedMultigraph::all_vertices() const {
  return VertexSet(vertex_count()).complement();
}

VertexSet RootedMultigraph::non_sink_vertices() const {
  VertexSet set = all_vertices();
  set.erase(sink());
  return set;
}

std::vector<EdgeSpec> RootedMultigraph::edges() const {
  std::vector<std::size_t> rank(vertex_count());
  for (std::size_t i = 0; i < declaration_order_.size(); ++i) rank[declaration_order_[i]] = i;
  std::vector<EdgeSpec> out;
  for (VertexId v : declaration_order_) {
    for (const Neighbour& n : adjacency_[v]) {
      if (rank[n.vertex] > rank[v]) out.push_back({names_[v], names_[n.vertex], n.multiplicity});
    }
  }
  return out;
}

RootedMultigraph RootedMultigraph::with_parts(std::vector<std::vector<VertexId>> parts) const {
  std::vector<int> seen(non_sink_count(), 0);
  for (const auto& part : parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (VertexId v : part) {
      if (v >= non_sink_count()) throw std::invalid_argument("part member is not a non-sink vertex");
      ++seen[v];
    }
  }
  if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
    throw std::invalid_argument("parts must partition the non-sink vertices");
  }
  RootedMultigraph out(*this);
  out.parts_ = std::move(parts);
  return out;
}

std::string RootedMultigraph::describe() const {
  std::ostringstream os;
  os << "graph(|V|=" << vertex_count() << ",|E|=" << total_multiplicity_ << ",sink=" << name(sink()) << ")";
  return os.str();
}

RootedMultigraph build_graph(std::vector<std::string> vertices, std::string_view sink,
                             std::span<const EdgeSpec> edges) {
  if (vertices.size() < 2) {
    throw GraphError(GraphErrorKind::TooFewVertices, "a rooted graph needs a sink and at least one other vertex");
  }
  std::unordered_map<std::string, std::size_t> declared;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!declared.emplace(vertices[i], i).second) {
      throw GraphError(GraphErrorKind::DuplicateVertex, "duplicate vertex '" + vertices[i] + "'");
    }
  }
  auto sink_it = declared.find(std::string(sink));
  if (sink_it == declared.end()) {
    throw GraphError(GraphErrorKind::UnknownVertex, "sink '" + std::string(sink) + "' is not a declared vertex");
  }

  RootedMultigraph g;
  const std::size_t count = vertices.size();
  // declaration index -> internal id
  std::vector<VertexId> internal(count);
  {
    VertexId next = 0;
    for (std::size_t i = 0; i < count; ++i) {
      internal[i] = (i == sink_it->second) ? count - 1 : next++;
    }
  }
  g.names_.resize(count);
  g.declaration_order_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    g.names_[internal[i]] = vertices[i];
    g.declaration_order_[i] = internal[i];
    g.index_.emplace(vertices[i], internal[i]);
  }

  std::vector<std::map<VertexId, Multiplicity>> rows(count);
  for (const EdgeSpec& e : edges) {
    auto a = declared.find(e.from);
    auto b = declared.find(e.to);
    if (a == declared.end() || b == declared.end()) {
      const std::string& missing = (a == declared.end()) ? e.from : e.to;
      throw GraphError(GraphErrorKind::UnknownVertex, "edge references unknown vertex '" + missing + "'");
    }
    if (a->second == b->second) {
      throw GraphError(GraphErrorKind::LoopEdge, "loop edge at '" + e.from + "'");
    }
    if (e.multiplicity < 1) {
      throw GraphError(GraphErrorKind::InvalidMultiplicity,
                       "edge " + e.from + "-" + e.to + " has multiplicity " + std::to_string(e.multiplicity));
    }
    VertexId v = internal[a->second];
    VertexId w = internal[b->second];
    rows[v][w] += e.multiplicity;
    rows[w][v] += e.multiplicity;
    g.total_multiplicity_ += e.multiplicity;
  }

  g.adjacency_.resize(count);
  g.degree_.assign(count, 0);
  for (VertexId v = 0; v < count; ++v) {
    for (const auto& [w, m] : rows[v]) {
      g.adjacency_[v].push_back({w, m});
      g.degree_[v] += m;
    }
  }

  std::vector<bool> reached(count, false);
  std::queue<VertexId> frontier;
  frontier.push(g.sink());
  reached[g.sink()] = true;
  while (!frontier.empty()) {
    VertexId v = frontier.front();
    frontier.pop();
    for (const auto& n : g.adjacency_[v]) {
      if (!reached[n.vertex]) {
        reached[n.vertex] = true;
        frontier.push(n.vertex);
      }
    }
  }
  for (VertexId v = 0; v < count; ++v) {
    if (!reached[v]) {
      throw GraphError(GraphErrorKind::Disconnected, "vertex '" + g.names_[v] + "' is not connected to the sink");
    }
  }
  return g;
}

namespace {

// Builds the subgraph on the kept vertices (sink always kept), preserving
// declaration order and restricting parts.
RootedMultigraph restrict_to(const RootedMultigraph& graph, const VertexSet& keep) {
  std::vector<std::string> names;
  for (VertexId v : graph.declaration_order()) {
    if (keep.contains(v)) names.push_back(graph.name(v));
  }
  std::vector<EdgeSpec> edges;
  for (const EdgeSpec& e : graph.edges()) {
    if (keep.contains(graph.id(e.from)) && keep.contains(graph.id(e.to))) edges.push_back(e);
  }
  RootedMultigraph out = build_graph(std::move(names), graph.name(graph.sink()), edges);
  if (graph.has_parts()) {
    std::vector<std::vector<VertexId>> parts;
    for (const auto& part : graph.parts()) {
      std::vector<VertexId> kept;
      for (VertexId v : part) {
        if (keep.contains(v)) kept.push_back(out.id(graph.name(v)));
      }
      if (!kept.empty()) parts.push_back(std::move(kept));
    }
    out = out.with_parts(std::move(parts));
  }
  return out;
}

}  // namespace

RootedMultigraph induced_with_sink(const RootedMultigraph& graph, const VertexSet& subset) {
  if (subset.universe() != graph.vertex_count()) {
    throw std::invalid_argument("vertex set does not belong to this graph");
  }
  if (subset.contains(graph.sink())) throw DomainError("induced_with_sink expects non-sink vertices");
  if (subset.empty()) throw DomainError("induced_with_sink expects a non-empty subset");
  VertexSet keep = subset;
  keep.insert(graph.sink());
  return restrict_to(graph, keep);
}

bool sink_is_cut_vertex(const RootedMultigraph& graph) {
  const std::size_t n = graph.non_sink_count();
  std::vector<bool> reached(n, false);
  std::vector<VertexId> stack{0};
  reached[0] = true;
  std::size_t seen = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (const auto& nb : graph.neighbours(v)) {
      if (nb.vertex < n && !reached[nb.vertex]) {
        reached[nb.vertex] = true;
        ++seen;
        stack.push_back(nb.vertex);
      }
    }
  }
  return seen != n;
}

BigInt spanning_tree_count(const RootedMultigraph& graph) {
  const std::size_t n = graph.non_sink_count();
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (VertexId v = 0; v < n; ++v) {
    m[v][v] = graph.degree(v);
    for (const auto& nb : graph.neighbours(v)) {
      if (nb.vertex < n) m[v][nb.vertex] = -BigInt(nb.multiplicity);
    }
  }
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / previous;
      }
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

RootedMultigraph delete_vertex(const RootedMultigraph& graph, VertexId v) {
  if (v >= graph.vertex_count()) throw GraphError(GraphErrorKind::UnknownVertex, "vertex id out of range");
  if (graph.is_sink(v)) throw GraphError(GraphErrorKind::SinkDeletion, "cannot delete the sink");
  VertexSet keep = graph.all_vertices();
  keep.erase(v);
  return restrict_to(graph, keep);
}

std::string format_vertex_set(const RootedMultigraph& graph, const VertexSet& subset) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : graph.declaration_order()) {
    if (!subset.contains(v)) continue;
    if (!first) out += ",";
    out += graph.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace primepark
