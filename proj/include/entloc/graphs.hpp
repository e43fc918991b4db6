#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "entloc/f2.hpp"
#include "entloc/localize.hpp"
#include "entloc/state.hpp"

namespace entloc {

// Simple undirected graph on n <= capacity() vertices, adjacency rows packed
// into 32-bit masks (vertex v's bit is 1u << v).
struct Graph {
  int n = 0;
  std::vector<std::uint32_t> rows;

  Graph() = default;
  explicit Graph(int n_vertices);

  void add_edge(int u, int v);
  bool edge(int u, int v) const;
  int degree(int v) const;
  int edge_count() const;

  static Graph path(int n);
  static Graph cycle(int n);
  // Triangular prism: triangles {0,1,2} and {3,4,5} plus the matching
  // {0,3},{1,4},{2,5}.  Every 3-qubit marginal of its graph state is
  // maximally mixed (checked in the tests).
  static Graph ame6();
};

// |G> = prod_{(u,v) in E} CZ_uv |+>^n: amplitude of |z> is
// 2^{-n/2} (-1)^{#edges inside the support of z}.
StateVector build_graph_state(const Graph& g);

// D_b = 1 iff b in B has even degree in G - A (isolated vertices count as
// even).  Entries follow B in ascending vertex order.
F2Vector degree_vector(const Graph& g, const SubsystemMask& a);

enum class TauClass { TauZeroOnly, TauOneAchievable };

// Solvability of Gamma_BA x = D over GF(2) decides the n-tangle MEA of a
// graph state: solvable means some local-X-pattern measurement leaves every
// branch with tau = 1; unsolvable means every measurement leaves tau = 0.
// Requires |B| even.
TauClass tau_classify(const Graph& g, const SubsystemMask& a);

// Shortcut: a B-vertex with no neighbors in A and even degree in G - A
// forces TauZeroOnly without touching the linear system.
std::optional<TauClass> cor10_fast_path(const Graph& g,
                                        const SubsystemMask& a);

struct GraphCheckResult {
  bool solvable = false;
  std::optional<F2Vector> x;   // one solution, A members ascending
  bool used_fast_path = false;
};
GraphCheckResult graph_check(const Graph& g, const SubsystemMask& a);

// C(|G>; s) = 1 - 2^{-|s|} sum_{gamma subseteq s} 2^{-rk Gamma_{gamma,V-gamma}}
// with ranks over GF(2); exact up to floating-point rounding of dyadics.
double graph_ce(const Graph& g, const SubsystemMask& s);

// Uniformly weighted graph state: amplitude of |z> is
// 2^{-n/2} exp(i phase * #edges inside the support of z).  phase = pi
// reproduces build_graph_state exactly (signs computed without trig).
struct WeightedGraph {
  Graph graph;
  double phase = 0.0;
};
StateVector build_weighted_graph_state(const WeightedGraph& wg);

// Eigenbasis of M_x(phi) = e^{-i phi sz/2} sx e^{i phi sz/2} as local-basis
// angles: (theta, phi) = (pi/2, phi).
std::array<double, 2> rotated_x_basis(double phi);

// GHZ-success probability of the rotated-X line protocol on 2n+1 vertices:
// 2^{-n} |sin(phi/2)|^n.
double ghz_extraction_probability(int n_pairs, double phi);

// || |G_phi> - |G_chi> ||_1 = 2 sqrt(1 - d^{-2} |sum_z e^{i(phi-chi) q(z)}|^2)
// where q(z) counts edges inside the support of z.
double weighted_trace_distance(const Graph& g, double phi, double chi);

// Line graph on 2*n_pairs+1 vertices, phase phi on every edge; the interior
// odd-labeled vertices (0-indexed 1, 3, ..., 2n-1) are measured in the
// rotated-X basis.  avg_tau averages the (n_pairs+1)-tangle over branches.
struct ProtocolResult {
  Ensemble ensemble;
  double avg_tau = 0.0;
};
ProtocolResult rotated_x_line_protocol(int n_pairs, double phi);

// Graph file format: first line is the vertex count, each following
// non-empty line one 0-indexed edge "u v".
Graph read_graph(std::istream& in);
Graph read_graph_string(const std::string& text);
std::string write_graph(const Graph& g);

}  // namespace entloc
