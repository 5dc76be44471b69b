#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "umlxml/diagnostic.hpp"
#include "umlxml/model.hpp"

namespace umlxml {

// Line-per-class codification format:
//
//   record := name ';' NA ';' (attr)* NM ';' (meth)* NAS ';' (rel)*
//             NAG ';' (rel)* NCO ';' (rel)* NGE ';' (gen)*
//   attr   := name ':' type ':' visibility ';' default ';'
//   meth   := name ':' type ':' visibility ';'
//   rel    := cardinality ':' target ';'
//   gen    := target ';'
//
// An empty default token means "no default". Relationship categories are
// Association, Aggregation, Composition, Generalization in that order.

struct ParseOptions {
    // Lenient mode tolerates one surplus numeric token at the end of a
    // record (reported as TrailingToken) so damaged corpora stay loadable.
    bool strict = true;
};

struct ParseResult {
    Diagram diagram;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

// Records that fail to decode are reported and left out of the diagram;
// decoding continues with the next line.
ParseResult parse_codification(std::string_view text, ParseOptions options = {});

// One LF-terminated record per class. Throws std::invalid_argument if a name
// cannot be encoded (empty or containing a delimiter).
std::string emit_codification(const Diagram& diagram);

}  // namespace umlxml
