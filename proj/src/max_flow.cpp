#include "ehsec/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ehsec {

MaxFlow::MaxFlow(int n_nodes)
    : adjacency_(static_cast<std::size_t>(n_nodes)),
      level_(static_cast<std::size_t>(n_nodes)),
      cursor_(static_cast<std::size_t>(n_nodes)) {}

int MaxFlow::add_edge(int from, int to, int capacity) {
  if (capacity < 0) throw std::invalid_argument("MaxFlow: negative capacity");
  const int id = static_cast<int>(edges_.size());
  edges_.push_back({to, capacity, capacity});
  edges_.push_back({from, 0, 0});
  adjacency_[static_cast<std::size_t>(from)].push_back(id);
  adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

int MaxFlow::flow_on(int edge_id) const {
  const Edge& e = edges_[static_cast<std::size_t>(edge_id)];
  return e.original - e.capacity;
}

bool MaxFlow::build_levels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int node = frontier.front();
    frontier.pop();
    for (int id : adjacency_[static_cast<std::size_t>(node)]) {
      const Edge& e = edges_[static_cast<std::size_t>(id)];
      auto& next = level_[static_cast<std::size_t>(e.to)];
      if (e.capacity > 0 && next < 0) {
        next = level_[static_cast<std::size_t>(node)] + 1;
        frontier.push(e.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

int MaxFlow::push(int node, int sink, int limit) {
  if (node == sink) return limit;
  const auto n = static_cast<std::size_t>(node);
  for (int& i = cursor_[n]; i < static_cast<int>(adjacency_[n].size()); ++i) {
    const int id = adjacency_[n][static_cast<std::size_t>(i)];
    Edge& e = edges_[static_cast<std::size_t>(id)];
    if (e.capacity <= 0 ||
        level_[static_cast<std::size_t>(e.to)] != level_[n] + 1) {
      continue;
    }
    const int pushed = push(e.to, sink, std::min(limit, e.capacity));
    if (pushed > 0) {
      e.capacity -= pushed;
      edges_[static_cast<std::size_t>(id ^ 1)].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

int MaxFlow::solve(int source, int sink) {
  int total = 0;
  while (build_levels(source, sink)) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (int pushed = push(source, sink, std::numeric_limits<int>::max())) {
      total += pushed;
    }
  }
  return total;
}

}  // namespace ehsec
