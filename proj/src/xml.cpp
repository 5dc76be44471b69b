#include "umlxml/xml.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "umlxml/diagnostic.hpp"

namespace umlxml {

XmlNode& XmlNode::set_attribute(std::string attr_name, std::string value) {
    for (auto& [k, v] : attributes) {
        if (k == attr_name) {
            v = std::move(value);
            return *this;
        }
    }
    attributes.emplace_back(std::move(attr_name), std::move(value));
    return *this;
}

const std::string* XmlNode::attribute(std::string_view attr_name) const {
    for (const auto& [k, v] : attributes) {
        if (k == attr_name) return &v;
    }
    return nullptr;
}

bool XmlNode::remove_attribute(std::string_view attr_name) {
    auto it = std::find_if(attributes.begin(), attributes.end(),
                           [&](const auto& kv) { return kv.first == attr_name; });
    if (it == attributes.end()) return false;
    attributes.erase(it);
    return true;
}

namespace {

bool is_name_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_name_char(char c) {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '.' || c == '-';
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += char(cp);
    } else if (cp < 0x800) {
        out += char(0xC0 | (cp >> 6));
        out += char(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += char(0xE0 | (cp >> 12));
        out += char(0x80 | ((cp >> 6) & 0x3F));
        out += char(0x80 | (cp & 0x3F));
    } else {
        out += char(0xF0 | (cp >> 18));
        out += char(0x80 | ((cp >> 12) & 0x3F));
        out += char(0x80 | ((cp >> 6) & 0x3F));
        out += char(0x80 | (cp & 0x3F));
    }
}

void write_node(std::string& out, const XmlNode& node, std::size_t depth) {
    if (node.text && !node.children.empty()) {
        throw std::invalid_argument("element '" + node.name + "' has both text and children");
    }
    out.append(depth * 2, ' ');
    out += '<';
    out += node.name;
    for (const auto& [k, v] : node.attributes) {
        out += ' ';
        out += k;
        out += "=\"";
        out += escape_xml(v);
        out += '"';
    }
    if (node.text) {
        out += '>';
        out += escape_xml(*node.text);
        out += "</" + node.name + ">\n";
    } else if (node.children.empty()) {
        out += "/>\n";
    } else {
        out += ">\n";
        for (const auto& child : node.children) write_node(out, child, depth + 1);
        out.append(depth * 2, ' ');
        out += "</" + node.name + ">\n";
    }
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    XmlNode document() {
        if (text_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
        if (rest().starts_with("<?xml") && pos_ + 5 < text_.size() && is_space(text_[pos_ + 5])) {
            declaration();
        }
        skip_space();
        prolog_check();
        if (at_end()) syntax("document has no root element");
        XmlNode root = element();
        skip_space();
        if (!at_end()) {
            prolog_check();
            syntax("content after the root element");
        }
        return root;
    }

private:
    std::string_view rest() const { return text_.substr(pos_); }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && is_space(text_[pos_])) ++pos_;
    }

    Location location_at(std::size_t offset) const {
        Location loc;
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        loc.line = line;
        loc.column = column;
        return loc;
    }

    [[noreturn]] void syntax(std::string message) const { syntax_at(pos_, std::move(message)); }

    [[noreturn]] void syntax_at(std::size_t offset, std::string message) const {
        throw Error(make_error(codes::kXmlSyntaxError, std::move(message), location_at(offset)));
    }

    [[noreturn]] void unsupported(std::string message) const {
        throw Error(make_error(codes::kUnsupportedXml, std::move(message), location_at(pos_)));
    }

    void expect(char c) {
        if (peek() != c) syntax(std::string("expected '") + c + "'");
        ++pos_;
    }

    // Rejects markup this reader does not handle, wherever it shows up.
    void prolog_check() const {
        const auto r = rest();
        if (r.starts_with("<!--")) unsupported("comments are not supported");
        if (r.starts_with("<![CDATA[")) unsupported("CDATA sections are not supported");
        if (r.starts_with("<!DOCTYPE")) unsupported("DOCTYPE declarations are not supported");
        if (r.starts_with("<!")) unsupported("markup declarations are not supported");
        if (r.starts_with("<?")) unsupported("processing instructions are not supported");
    }

    void declaration() {
        const auto end = text_.find("?>", pos_);
        if (end == std::string_view::npos) syntax("unterminated XML declaration");
        pos_ = end + 2;
    }

    // Name with an optional "xsd:" prefix; any other prefix is unsupported.
    std::string name() {
        const auto start = pos_;
        if (!is_name_start(peek())) syntax("expected a name");
        while (!at_end() && (is_name_char(text_[pos_]) || text_[pos_] == ':')) ++pos_;
        std::string result(text_.substr(start, pos_ - start));
        const auto colon = result.find(':');
        if (colon != std::string::npos) {
            const auto prefix = result.substr(0, colon);
            const auto local = result.substr(colon + 1);
            if (local.empty() || !is_valid_xml_name(local)) syntax_at(start, "malformed name '" + result + "'");
            if (prefix != "xsd" && prefix != "xmlns") {
                pos_ = start;
                unsupported("namespace prefix '" + prefix + "' is not supported");
            }
        }
        return result;
    }

    void entity(std::string& out) {
        const auto start = pos_;
        ++pos_;  // '&'
        const auto semi = text_.find(';', pos_);
        if (semi == std::string_view::npos || semi - pos_ > 10) syntax_at(start, "unterminated entity reference");
        const auto ref = text_.substr(pos_, semi - pos_);
        pos_ = semi + 1;
        if (ref == "amp") out += '&';
        else if (ref == "lt") out += '<';
        else if (ref == "gt") out += '>';
        else if (ref == "quot") out += '"';
        else if (ref == "apos") out += '\'';
        else if (ref.starts_with('#')) {
            auto digits = ref.substr(1);
            int base = 10;
            if (digits.starts_with('x')) {
                digits.remove_prefix(1);
                base = 16;
            }
            std::uint32_t cp = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cp, base);
            if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || cp == 0 ||
                cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
                syntax_at(start, "bad character reference '&" + std::string(ref) + ";'");
            }
            append_utf8(out, cp);
        } else {
            syntax_at(start, "unknown entity '&" + std::string(ref) + ";'");
        }
    }

    std::string attribute_value() {
        const char quote = peek();
        if (quote != '"' && quote != '\'') syntax("attribute value must be quoted");
        ++pos_;
        std::string value;
        while (true) {
            if (at_end()) syntax("unterminated attribute value");
            const char c = text_[pos_];
            if (c == quote) break;
            if (c == '<') syntax("'<' in attribute value");
            if (c == '&') {
                entity(value);
            } else {
                value += c;
                ++pos_;
            }
        }
        ++pos_;
        return value;
    }

    XmlNode element() {
        const auto open = pos_;
        expect('<');
        XmlNode node(name());
        if (node.name.starts_with("xmlns")) syntax_at(open, "'xmlns' is not an element name");

        while (true) {
            const bool spaced = !at_end() && is_space(peek());
            skip_space();
            if (rest().starts_with("/>")) {
                pos_ += 2;
                return node;
            }
            if (peek() == '>') {
                ++pos_;
                break;
            }
            if (at_end()) syntax("unterminated start tag <" + node.name + ">");
            if (!spaced) syntax("expected whitespace before attribute");
            const auto attr_start = pos_;
            auto attr = name();
            if (attr == "xmlns" || (attr.starts_with("xmlns:") && attr != "xmlns:xsd")) {
                pos_ = attr_start;
                unsupported("namespace declaration '" + attr + "' is not supported");
            }
            skip_space();
            expect('=');
            skip_space();
            auto value = attribute_value();
            if (node.attribute(attr)) syntax_at(attr_start, "duplicate attribute '" + attr + "'");
            node.attributes.emplace_back(std::move(attr), std::move(value));
        }

        std::string text;
        bool significant_text = false;
        while (true) {
            if (at_end()) syntax_at(open, "element <" + node.name + "> is never closed");
            const char c = text_[pos_];
            if (c == '<') {
                if (rest().starts_with("</")) {
                    const auto close = pos_;
                    pos_ += 2;
                    const auto end_name = name();
                    skip_space();
                    expect('>');
                    if (end_name != node.name) {
                        syntax_at(close, "end tag </" + end_name + "> does not match <" + node.name + ">");
                    }
                    break;
                }
                prolog_check();
                if (pos_ + 1 >= text_.size() || !is_name_start(text_[pos_ + 1])) syntax("stray '<'");
                node.children.push_back(element());
            } else if (c == '&') {
                entity(text);
                significant_text = true;
            } else {
                if (!is_space(c)) significant_text = true;
                text += c;
                ++pos_;
            }
        }

        if (node.children.empty()) {
            node.text = std::move(text);
        } else if (significant_text) {
            unsupported("mixed content in <" + node.name + "> is not supported");
        }
        return node;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

bool is_valid_xml_name(std::string_view name) {
    if (name.empty() || !is_name_start(name.front())) return false;
    return std::all_of(name.begin(), name.end(), is_name_char);
}

std::string escape_xml(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            case '\t': out += "&#9;"; break;
            case '\n': out += "&#10;"; break;
            case '\r': out += "&#13;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string serialize(const XmlNode& root, bool with_declaration) {
    std::string out;
    if (with_declaration) {
        out += kXmlDeclaration;
        out += '\n';
    }
    write_node(out, root, 0);
    return out;
}

XmlNode parse_xml(std::string_view text) { return Reader(text).document(); }

}  // namespace umlxml
