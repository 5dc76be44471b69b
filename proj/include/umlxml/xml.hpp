#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace umlxml {

// Element node of a small document tree. A node holds text or element
// children, never both. Attribute order is kept as inserted.
struct XmlNode {
    std::string name;
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<XmlNode> children;
    std::optional<std::string> text;

    XmlNode() = default;
    explicit XmlNode(std::string element_name) : name(std::move(element_name)) {}

    static XmlNode leaf(std::string element_name, std::string content) {
        XmlNode n(std::move(element_name));
        n.text = std::move(content);
        return n;
    }

    // Replaces the value if the attribute already exists.
    XmlNode& set_attribute(std::string attr_name, std::string value);
    const std::string* attribute(std::string_view attr_name) const;
    bool remove_attribute(std::string_view attr_name);

    XmlNode& append(XmlNode child) { return children.emplace_back(std::move(child)); }

    bool operator==(const XmlNode&) const = default;
};

// [A-Za-z_][A-Za-z0-9_.-]*
bool is_valid_xml_name(std::string_view name);

// Escapes & < > " ' (plus tab, CR and LF as character references, so that
// attribute values survive re-reading unchanged).
std::string escape_xml(std::string_view text);

inline constexpr std::string_view kXmlDeclaration = R"(<?xml version="1.0" encoding="utf-8"?>)";

// Two-space indentation, one element per line, LF line endings, `<Name/>` for
// empty elements and inline text content. Throws std::invalid_argument if a
// node has both text and children.
std::string serialize(const XmlNode& root, bool with_declaration = true);

// Reads the subset serialize() writes: an optional XML declaration, elements,
// quoted attributes, text, the five predefined entities and numeric character
// references. Whitespace-only text between elements is dropped.
//
// Throws Error with code XmlSyntaxError (malformed input, with line/column)
// or UnsupportedXml (comments, CDATA, DOCTYPE, processing instructions,
// namespace declarations other than xmlns:xsd, mixed content).
XmlNode parse_xml(std::string_view text);

}  // namespace umlxml
