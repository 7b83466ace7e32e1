#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prx/error.hpp"

namespace prx {

// Unweighted directed graph. Loops are allowed, duplicate arcs are rejected.
// Arcs can only be added; every algorithm takes the graph by const reference,
// so a fully built graph is safe to share across threads.
class Digraph {
 public:
  explicit Digraph(int n);

  int order() const { return n_; }
  int arc_count() const { return arc_count_; }

  void add_arc(int u, int v);
  bool has_arc(int u, int v) const;
  int out_degree(int u) const;
  std::span<const int> out_neighbors(int u) const;  // sorted ascending

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int u) const;

  int n_;
  int arc_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

struct SccReport {
  std::vector<std::vector<int>> components;  // sorted vertex lists
  std::vector<int> component_of;             // vertex -> index into components
  std::vector<bool> is_sink;                 // no arc leaves the component
  std::vector<bool> is_aperiodic;            // gcd of internal cycle lengths is 1
};

SccReport scc_report(const Digraph& g);

bool is_weakly_connected(const Digraph& g);

// The pure walk (no jumps) has a limiting distribution iff the graph is
// weakly connected with a unique sink component that is aperiodic.
bool alpha1_valid(const Digraph& g);

// Text format: first significant line is the vertex count, every following
// significant line is "u v" for an arc u->v. Lines starting with '#' and
// blank lines are ignored. Errors carry the offending line number.
Digraph parse_graph(std::string_view text);
std::string serialize_graph(const Digraph& g);

}  // namespace prx
