#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlxml/diagnostic.hpp"
#include "umlxml/xml.hpp"

namespace umlxml {

struct Particle {
    std::string element;
    std::uint32_t min_occurs = 1;
    std::optional<std::uint32_t> max_occurs = 1;  // empty = unbounded

    bool operator==(const Particle&) const = default;
};

struct AttributeDecl {
    std::string name;
    std::string type;  // always "xsd:string" in the supported subset

    bool operator==(const AttributeDecl&) const = default;
};

struct ElementDecl {
    std::vector<AttributeDecl> attributes;  // all required
    std::vector<Particle> particles;        // xsd:sequence, in order
    bool text_allowed = false;              // declared type="xsd:string"

    bool operator==(const ElementDecl&) const = default;
};

// Compiled schema. Declarations are keyed by element name; a name declared in
// several places must be declared identically everywhere.
struct ContentModel {
    std::string root;
    std::map<std::string, ElementDecl, std::less<>> elements;

    const ElementDecl* find(std::string_view name) const;
};

// The class-diagram schema shipped with the library (schema/class_diagram.xsd).
std::string_view embedded_schema_text();

// Compiles the XSD subset: xsd:schema with one global xsd:element; local
// xsd:element with name, type="xsd:string", minOccurs, maxOccurs; xsd:complexType
// holding an optional xsd:sequence of elements followed by xsd:attribute
// declarations. Declared attributes are treated as required.
//
// Throws Error with UnsupportedSchemaFeature, SchemaSyntaxError or
// AmbiguousParticles (a sequence naming the same element twice). XML errors
// from reading the text propagate unchanged.
ContentModel compile_schema(std::string_view xsd_text);

// The compiled embedded schema, built once.
const ContentModel& embedded_model();

// Structural validation; an empty result means the document conforms.
// Children are matched greedily against each element's particle list.
std::vector<Diagnostic> validate_document(const XmlNode& root, const ContentModel& model);

}  // namespace umlxml
