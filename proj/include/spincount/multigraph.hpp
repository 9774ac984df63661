#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spincount/rational.hpp"

namespace spincount {

enum class EdgeLabel { WithinTriangle, BetweenTriangles, Plain };
const char* to_string(EdgeLabel label);

struct Edge {
  int u = 0;
  int v = 0;  // u == v is a self-loop
  Rational weight;
  EdgeLabel label = EdgeLabel::Plain;
};

/// Vertex names plus a multiset of weighted edges; parallel edges and loops allowed.
class WeightedMultigraph {
 public:
  int add_vertex(const std::string& name);
  void add_edge(int u, int v, const Rational& weight, EdgeLabel label = EdgeLabel::Plain);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int index_of(const std::string& name) const;

  /// `v <name>` and `e <u> <v> <weight> <label>` lines.
  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
};

WeightedMultigraph parse_multigraph(std::string_view text);

}  // namespace spincount
