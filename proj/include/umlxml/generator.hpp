#pragma once

#include "umlxml/model.hpp"
#include "umlxml/xml.hpp"

namespace umlxml {

// Builds the document tree for a validated diagram:
//
//   <Diagram>
//     <Class name-Class="...">
//       <Attribute name="..."> Attr-Type, Visibility, Dvalue </Attribute>*
//       <Method name-Method="..."> Method-type, Visibility </Method>*
//       <Relationships> ASS*, Aggregation*, Composition*, Generalization* </Relationships>
//     </Class>*
//   </Diagram>
//
// ASS/Aggregation/Composition hold Cardinality then Class-Relation;
// Generalization holds Class-Relation only. Relationships are grouped by kind
// in that order, keeping input order within a kind. An absent default value
// becomes an empty <Dvalue/>.
XmlNode generate_document(const Diagram& diagram);

// Inverse of generate_document. Throws Error(ShapeError) with the element
// path of the first deviation from the expected shape.
Diagram document_to_diagram(const XmlNode& root);

}  // namespace umlxml
