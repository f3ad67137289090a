#include "starlab/hasse.hpp"

#include <sstream>

namespace starlab {

namespace {

std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::vector<std::pair<ElementId, ElementId>> covering_pairs(const Relation& leq) {
  const auto n = leq.size();
  std::vector<Bits> strict(leq.rows);
  for (std::size_t a = 0; a < n; ++a) strict[a].reset(a);
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (std::size_t a = 0; a < n; ++a) {
    // b covers a iff b is strictly above a but not strictly above any c > a.
    Bits reachable_in_two(n);
    for (auto c = strict[a].find_first(); c != Bits::npos; c = strict[a].find_next(c))
      reachable_in_two |= strict[c];
    const Bits covers = strict[a] - reachable_in_two;
    for (auto b = covers.find_first(); b != Bits::npos; b = covers.find_next(b))
      pairs.emplace_back(ElementId{static_cast<std::uint32_t>(a)},
                         ElementId{static_cast<std::uint32_t>(b)});
  }
  return pairs;
}

std::string hasse_dot(const StarRing& ring, const OrderStructure& order) {
  if (!order.diagnostics.partial_order()) {
    throw PreconditionError("Conrad relation on " + ring.label() + " is not a partial order");
  }
  std::ostringstream out;
  out << "digraph conrad {\n";
  out << "  label=" << quoted(ring.label()) << ";\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (auto a : ring.elements())
    out << "  " << a.index() << " [label=" << quoted(ring.name(a)) << "];\n";
  for (const auto& [a, b] : covering_pairs(order.leq))
    out << "  " << a.index() << " -> " << b.index() << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace starlab
