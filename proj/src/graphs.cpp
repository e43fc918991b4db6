#include "entloc/graphs.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>

#include "entloc/measures.hpp"

namespace entloc {

Graph::Graph(int n_vertices) : n(n_vertices) {
  check_qubit_count(n, "Graph");
  rows.assign(std::size_t(n), 0);
}

void Graph::add_edge(int u, int v) {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("Graph::add_edge: bad edge");
  rows[std::size_t(u)] |= std::uint32_t(1) << v;
  rows[std::size_t(v)] |= std::uint32_t(1) << u;
}

bool Graph::edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("Graph::edge: out of range");
  return (rows[std::size_t(u)] >> v) & 1u;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n) throw std::invalid_argument("Graph::degree");
  return popcount64(rows[std::size_t(v)]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g = path(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

Graph Graph::ame6() {
  Graph g(6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(3, 5);
  g.add_edge(0, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 5);
  return g;
}

namespace {

// Number of edges inside the support of z (amplitude index bits, big-endian:
// vertex v is bit n-1-v).
int edges_in_support(const Graph& g, std::uint64_t z) {
  const int n = g.n;
  std::uint32_t supp = 0;
  for (int v = 0; v < n; ++v)
    if ((z >> (n - 1 - v)) & 1u) supp |= std::uint32_t(1) << v;
  int count = 0;
  for (int v = 0; v < n; ++v)
    if ((supp >> v) & 1u)
      count += popcount64(g.rows[std::size_t(v)] & supp);
  return count / 2;
}

}  // namespace

StateVector build_graph_state(const Graph& g) {
  const std::int64_t d = std::int64_t(1) << g.n;
  const double r = 1.0 / std::sqrt(double(d));
  Eigen::VectorXcd a(d);
  for (std::int64_t z = 0; z < d; ++z)
    a[z] = (edges_in_support(g, std::uint64_t(z)) & 1) ? -r : r;
  return StateVector(g.n, std::move(a));
}

StateVector build_weighted_graph_state(const WeightedGraph& wg) {
  const Graph& g = wg.graph;
  const std::int64_t d = std::int64_t(1) << g.n;
  const double r = 1.0 / std::sqrt(double(d));
  Eigen::VectorXcd a(d);
  // Exact signs at phase pi keep the graph-state identity bit-for-bit.
  const bool is_pi = wg.phase == std::numbers::pi;
  for (std::int64_t z = 0; z < d; ++z) {
    const int q = edges_in_support(g, std::uint64_t(z));
    a[z] = is_pi ? cplx((q & 1) ? -r : r, 0.0)
                 : r * std::polar(1.0, wg.phase * q);
  }
  return StateVector(g.n, std::move(a));
}

F2Vector degree_vector(const Graph& g, const SubsystemMask& a) {
  if (a.total_qubits != g.n)
    throw std::invalid_argument("degree_vector: mask mismatch");
  const SubsystemMask b = a.complement();
  std::uint32_t amask = 0;
  for (int v : a.members) amask |= std::uint32_t(1) << v;
  F2Vector d(b.size());
  for (int i = 0; i < b.size(); ++i) {
    const int v = b.members[std::size_t(i)];
    const int deg_rest = popcount64(g.rows[std::size_t(v)] & ~amask);
    d.set(i, deg_rest % 2 == 0);
  }
  return d;
}

std::optional<TauClass> cor10_fast_path(const Graph& g,
                                        const SubsystemMask& a) {
  if (a.total_qubits != g.n)
    throw std::invalid_argument("cor10_fast_path: mask mismatch");
  std::uint32_t amask = 0;
  for (int v : a.members) amask |= std::uint32_t(1) << v;
  for (int v = 0; v < g.n; ++v) {
    if ((amask >> v) & 1u) continue;
    const bool no_a_neighbors = (g.rows[std::size_t(v)] & amask) == 0;
    const bool even_rest = popcount64(g.rows[std::size_t(v)] & ~amask) % 2 == 0;
    if (no_a_neighbors && even_rest) return TauClass::TauZeroOnly;
  }
  return std::nullopt;
}

GraphCheckResult graph_check(const Graph& g, const SubsystemMask& a) {
  if (a.total_qubits != g.n)
    throw std::invalid_argument("graph_check: mask mismatch");
  if (a.empty() || a.size() == g.n)
    throw std::invalid_argument("graph_check: measured set must be proper");
  const SubsystemMask b = a.complement();
  if (b.size() % 2 != 0)
    throw std::invalid_argument("graph_check: kept vertex count must be even");

  GraphCheckResult out;
  if (auto fast = cor10_fast_path(g, a)) {
    out.solvable = false;
    out.used_fast_path = true;
    return out;
  }
  F2Matrix gamma_ba(b.size(), a.size());
  for (int r = 0; r < b.size(); ++r)
    for (int c = 0; c < a.size(); ++c)
      gamma_ba.set(r, c,
                   g.edge(b.members[std::size_t(r)], a.members[std::size_t(c)]));
  auto x = f2_solve(gamma_ba, degree_vector(g, a));
  out.solvable = x.has_value();
  out.x = std::move(x);
  return out;
}

TauClass tau_classify(const Graph& g, const SubsystemMask& a) {
  return graph_check(g, a).solvable ? TauClass::TauOneAchievable
                                    : TauClass::TauZeroOnly;
}

double graph_ce(const Graph& g, const SubsystemMask& s) {
  if (s.total_qubits != g.n)
    throw std::invalid_argument("graph_ce: mask mismatch");
  if (s.empty()) throw std::invalid_argument("graph_ce: empty s");
  if (s.size() > 12) throw std::invalid_argument("graph_ce: |s| > 12");
  const int k = s.size();
  double sum = 0.0;
  for (std::uint64_t sub = 0; sub < (std::uint64_t(1) << k); ++sub) {
    std::uint32_t gamma = 0;
    for (int i = 0; i < k; ++i)
      if ((sub >> i) & 1u)
        gamma |= std::uint32_t(1) << s.members[std::size_t(i)];
    // rank of the adjacency block between gamma and V - gamma
    std::vector<int> gm, rest;
    for (int v = 0; v < g.n; ++v)
      ((gamma >> v) & 1u ? gm : rest).push_back(v);
    F2Matrix block(int(gm.size()), int(rest.size()));
    for (std::size_t r = 0; r < gm.size(); ++r)
      for (std::size_t c = 0; c < rest.size(); ++c)
        block.set(int(r), int(c), g.edge(gm[r], rest[c]));
    sum += std::ldexp(1.0, -block.rank());
  }
  return 1.0 - std::ldexp(sum, -k);
}

std::array<double, 2> rotated_x_basis(double phi) {
  return {0.5 * std::numbers::pi, phi};
}

double ghz_extraction_probability(int n_pairs, double phi) {
  if (n_pairs < 1)
    throw std::invalid_argument("ghz_extraction_probability: n_pairs < 1");
  return std::ldexp(std::pow(std::abs(std::sin(0.5 * phi)), n_pairs),
                    -n_pairs);
}

double weighted_trace_distance(const Graph& g, double phi, double chi) {
  const std::int64_t d = std::int64_t(1) << g.n;
  cplx acc = 0.0;
  for (std::int64_t z = 0; z < d; ++z)
    acc += std::polar(1.0, (phi - chi) * edges_in_support(g, std::uint64_t(z)));
  const double overlap2 = std::norm(acc) / (double(d) * double(d));
  return 2.0 * std::sqrt(std::max(0.0, 1.0 - overlap2));
}

ProtocolResult rotated_x_line_protocol(int n_pairs, double phi) {
  if (n_pairs < 1)
    throw std::invalid_argument("rotated_x_line_protocol: n_pairs < 1");
  const int n = 2 * n_pairs + 1;
  check_qubit_count(n, "rotated_x_line_protocol");
  WeightedGraph wg{Graph::path(n), phi};
  StateVector psi = build_weighted_graph_state(wg);
  std::vector<int> measured;
  for (int v = 1; v < n; v += 2) measured.push_back(v);
  SubsystemMask a(n, measured);
  LocalBasisParams params;
  params.angles.assign(std::size_t(a.size()), rotated_x_basis(phi));
  ProtocolResult out;
  out.ensemble = measure_local(psi, a, params);
  out.avg_tau = average_entanglement(out.ensemble, MeasureKind::ntangle());
  return out;
}

Graph read_graph(std::istream& in) {
  std::string line;
  int n = -1;
  Graph g;
  bool have_n = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n))
        throw std::invalid_argument("graph file: first line must be the vertex count");
      g = Graph(n);
      have_n = true;
      continue;
    }
    int u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw std::invalid_argument("graph file: malformed edge at line " +
                                  std::to_string(lineno));
    g.add_edge(u, v);
  }
  if (!have_n) throw std::invalid_argument("graph file: empty input");
  return g;
}

Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n << "\n";
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.edge(u, v)) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace entloc
