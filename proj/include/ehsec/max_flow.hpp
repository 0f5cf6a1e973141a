#ifndef EHSEC_MAX_FLOW_HPP_
#define EHSEC_MAX_FLOW_HPP_

#include <vector>

namespace ehsec {

// Dinic's algorithm on an integer-capacity directed graph.
class MaxFlow {
 public:
  explicit MaxFlow(int n_nodes);

  // Returns the edge id, usable with flow_on().
  int add_edge(int from, int to, int capacity);

  int solve(int source, int sink);

  int flow_on(int edge_id) const;

 private:
  struct Edge {
    int to;
    int capacity;  // residual
    int original;
  };

  bool build_levels(int source, int sink);
  int push(int node, int sink, int limit);

  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace ehsec

#endif  // EHSEC_MAX_FLOW_HPP_
