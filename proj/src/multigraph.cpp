#include "spincount/multigraph.hpp"

#include <algorithm>
#include <sstream>

#include "spincount/error.hpp"

namespace spincount {

const char* to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::WithinTriangle:
      return "within";
    case EdgeLabel::BetweenTriangles:
      return "between";
    case EdgeLabel::Plain:
      return "plain";
  }
  return "?";
}

int WeightedMultigraph::add_vertex(const std::string& name) {
  if (std::find(names_.begin(), names_.end(), name) != names_.end()) {
    throw InputError("duplicate vertex '" + name + "'");
  }
  names_.push_back(name);
  return static_cast<int>(names_.size()) - 1;
}

void WeightedMultigraph::add_edge(int u, int v, const Rational& weight, EdgeLabel label) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) throw InputError("edge endpoint out of range");
  if (weight < 0) throw InputError("edge weights must be nonnegative");
  edges_.push_back(Edge{u, v, weight, label});
}

int WeightedMultigraph::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown vertex '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

std::string WeightedMultigraph::to_text() const {
  std::ostringstream out;
  for (const auto& n : names_) out << "v " << n << '\n';
  for (const auto& e : edges_) {
    out << "e " << names_[e.u] << ' ' << names_[e.v] << ' ' << to_string(e.weight) << ' ' << to_string(e.label)
        << '\n';
  }
  return out.str();
}

WeightedMultigraph parse_multigraph(std::string_view text) {
  WeightedMultigraph g;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "v" && tok.size() == 2) {
        g.add_vertex(tok[1]);
      } else if (tok[0] == "e" && (tok.size() == 4 || tok.size() == 5)) {
        EdgeLabel label = EdgeLabel::Plain;
        if (tok.size() == 5) {
          if (tok[4] == "within") {
            label = EdgeLabel::WithinTriangle;
          } else if (tok[4] == "between") {
            label = EdgeLabel::BetweenTriangles;
          } else if (tok[4] != "plain") {
            throw InputError("unknown edge label '" + tok[4] + "'");
          }
        }
        g.add_edge(g.index_of(tok[1]), g.index_of(tok[2]), parse_rational(tok[3]), label);
      } else {
        throw InputError("expected 'v <name>' or 'e <u> <v> <weight> [label]'");
      }
    } catch (const Error& e) {
      throw InputError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return g;
}

}  // namespace spincount
