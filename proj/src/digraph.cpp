#include "prx/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>

namespace prx {

Digraph::Digraph(int n) : n_(n) {
  if (n < 1) fail(errc::invalid_argument, "vertex count must be positive");
  adj_.resize(n);
}

void Digraph::check_vertex(int u) const {
  if (u < 0 || u >= n_)
    fail(errc::out_of_range,
         "vertex " + std::to_string(u) + " out of range [0, " + std::to_string(n_) + ")");
}

void Digraph::add_arc(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  auto& out = adj_[u];
  auto it = std::lower_bound(out.begin(), out.end(), v);
  if (it != out.end() && *it == v)
    fail(errc::duplicate_arc,
         "duplicate arc " + std::to_string(u) + " -> " + std::to_string(v));
  out.insert(it, v);
  ++arc_count_;
}

bool Digraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& out = adj_[u];
  return std::binary_search(out.begin(), out.end(), v);
}

int Digraph::out_degree(int u) const {
  check_vertex(u);
  return static_cast<int>(adj_[u].size());
}

std::span<const int> Digraph::out_neighbors(int u) const {
  check_vertex(u);
  return adj_[u];
}

namespace {

// Iterative Tarjan; recursion would overflow on long chain graphs.
struct TarjanFrame {
  int vertex;
  size_t next_child;
};

}  // namespace

SccReport scc_report(const Digraph& g) {
  const int n = g.order();
  SccReport report;
  report.component_of.assign(n, -1);

  std::vector<int> index(n, -1);
  std::vector<int> lowlink(n, 0);
  std::vector<int> on_stack_at(n, -1);
  std::vector<int> scc_stack;
  std::vector<TarjanFrame> frames;
  int next_index = 0;

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    index[root] = lowlink[root] = next_index++;
    on_stack_at[root] = static_cast<int>(scc_stack.size());
    scc_stack.push_back(root);
    frames.push_back({root, 0});

    while (!frames.empty()) {
      const int v = frames.back().vertex;
      const auto succ = g.out_neighbors(v);
      if (frames.back().next_child < succ.size()) {
        const int w = succ[frames.back().next_child++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          on_stack_at[w] = static_cast<int>(scc_stack.size());
          scc_stack.push_back(w);
          frames.push_back({w, 0});
        } else if (on_stack_at[w] != -1) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
        continue;
      }
      frames.pop_back();
      if (!frames.empty()) {
        const int parent = frames.back().vertex;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        std::vector<int> comp(scc_stack.begin() + on_stack_at[v], scc_stack.end());
        scc_stack.resize(on_stack_at[v]);
        const int id = static_cast<int>(report.components.size());
        for (int w : comp) {
          on_stack_at[w] = -1;
          report.component_of[w] = id;
        }
        std::sort(comp.begin(), comp.end());
        report.components.push_back(std::move(comp));
      }
    }
  }

  const int count = static_cast<int>(report.components.size());
  report.is_sink.assign(count, true);
  for (int u = 0; u < n; ++u)
    for (int w : g.out_neighbors(u))
      if (report.component_of[w] != report.component_of[u])
        report.is_sink[report.component_of[u]] = false;

  // A component is aperiodic iff the gcd of its cycle lengths is 1. With
  // breadth-first levels inside the component, that gcd equals the gcd of
  // level[u] + 1 - level[w] over internal arcs u->w.
  report.is_aperiodic.assign(count, false);
  std::vector<int> level(n, -1);
  std::vector<int> queue;
  for (int c = 0; c < count; ++c) {
    const auto& comp = report.components[c];
    queue.clear();
    queue.push_back(comp[0]);
    level[comp[0]] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.out_neighbors(u)) {
        if (report.component_of[w] != c || level[w] != -1) continue;
        level[w] = level[u] + 1;
        queue.push_back(w);
      }
    }
    int gcd = 0;
    for (int u : comp)
      for (int w : g.out_neighbors(u))
        if (report.component_of[w] == c)
          gcd = std::gcd(gcd, std::abs(level[u] + 1 - level[w]));
    report.is_aperiodic[c] = (gcd == 1);
    for (int u : comp) level[u] = -1;
  }

  return report;
}

bool is_weakly_connected(const Digraph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> und(n);
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u)) {
      und[u].push_back(v);
      und[v].push_back(u);
    }
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int v : und[queue[head]])
      if (!seen[v]) {
        seen[v] = 1;
        ++visited;
        queue.push_back(v);
      }
  return visited == n;
}

bool alpha1_valid(const Digraph& g) {
  if (!is_weakly_connected(g)) return false;
  const SccReport report = scc_report(g);
  int sink = -1;
  for (size_t c = 0; c < report.components.size(); ++c) {
    if (!report.is_sink[c]) continue;
    if (sink != -1) return false;
    sink = static_cast<int>(c);
  }
  return sink != -1 && report.is_aperiodic[sink];
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<int> take_int(std::string_view& s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  int value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr == s.data()) return std::nullopt;
  s.remove_prefix(res.ptr - s.data());
  return value;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  fail(errc::parse, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Digraph parse_graph(std::string_view text) {
  std::optional<Digraph> g;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    if (!g) {
      std::string_view rest = line;
      const auto n = take_int(rest);
      if (!n || !trim(rest).empty()) parse_fail(line_no, "expected the vertex count");
      if (*n < 1) parse_fail(line_no, "vertex count must be positive");
      g.emplace(*n);
      continue;
    }

    std::string_view rest = line;
    const auto u = take_int(rest);
    const auto v = take_int(rest);
    if (!u || !v || !trim(rest).empty()) parse_fail(line_no, "expected an arc line \"u v\"");
    try {
      g->add_arc(*u, *v);
    } catch (const error& e) {
      parse_fail(line_no, e.what());
    }
  }
  if (!g) fail(errc::parse, "missing vertex count line");
  return *std::move(g);
}

std::string serialize_graph(const Digraph& g) {
  std::string out = std::to_string(g.order());
  out.push_back('\n');
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.out_neighbors(u)) {
      out += std::to_string(u);
      out.push_back(' ');
      out += std::to_string(v);
      out.push_back('\n');
    }
  return out;
}

}  // namespace prx
