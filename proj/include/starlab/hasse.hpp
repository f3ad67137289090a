#pragma once

#include <string>

#include "starlab/order.hpp"

namespace starlab {

/// Pairs (a, b) where b covers a: a < b with nothing strictly between.
std::vector<std::pair<ElementId, ElementId>> covering_pairs(const Relation& leq);

/// DOT rendering of the Hasse diagram, nodes and edges in ascending index
/// order. Throws PreconditionError when the relation is not a partial order.
std::string hasse_dot(const StarRing& ring, const OrderStructure& order);

}  // namespace starlab
