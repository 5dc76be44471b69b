#pragma once

#include <vector>

#include "umlxml/diagnostic.hpp"
#include "umlxml/model.hpp"

namespace umlxml {

// Checks a diagram against the class-diagram rules and returns every
// violation, ordered by class (input order) and then by rule:
//
//   R1 DuplicateClassName     class names are unique
//   R2 UnknownTarget          relationship targets name a class in the diagram
//   R3 BadCardinality         non-generalizations carry a valid cardinality
//   R4 SelfGeneralization,
//      GeneralizationCycle    the child -> parent graph is acyclic
//   R5 DuplicateMember        attribute names and method names unique per class
//   R6 SelfRelationWarning    (warning) non-generalization targeting its own class
//
// A cycle is reported once, on the member class that comes first in input
// order, with one witness cycle in the message.
std::vector<Diagnostic> validate_diagram(const Diagram& diagram);

}  // namespace umlxml
