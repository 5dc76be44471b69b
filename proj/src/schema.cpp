#include "umlxml/schema.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace umlxml {

namespace {

constexpr std::string_view kString = "xsd:string";

class SchemaCompiler {
public:
    ContentModel compile(const XmlNode& root) {
        path_ = "/" + root.name;
        if (root.name != "xsd:schema") syntax("schema root must be <xsd:schema>");
        for (const auto& [k, v] : root.attributes) {
            if (k != "xmlns:xsd") unsupported("attribute '" + k + "' on <xsd:schema>");
        }
        if (root.text && !blank(*root.text)) syntax("<xsd:schema> must not contain text");

        std::size_t globals = 0;
        for (const auto& child : root.children) {
            enter(child, ++globals);
            if (child.name != "xsd:element") unsupported("top-level <" + child.name + ">");
            if (globals > 1) unsupported("more than one global element declaration");
            model_.root = declare(child, true).element;
            leave();
        }
        if (globals == 0) syntax("schema declares no global element");
        return std::move(model_);
    }

private:
    static bool blank(const std::string& s) {
        return s.find_first_not_of(" \t\r\n") == std::string::npos;
    }

    void enter(const XmlNode& n, std::size_t index) {
        saved_.push_back(path_);
        path_ += "/" + n.name + "[" + std::to_string(index) + "]";
    }
    void leave() {
        path_ = saved_.back();
        saved_.pop_back();
    }

    [[noreturn]] void fail(std::string_view code, std::string message) const {
        Location loc;
        loc.path = path_;
        throw Error(make_error(code, std::move(message), loc));
    }
    [[noreturn]] void syntax(std::string message) const { fail(codes::kSchemaSyntaxError, std::move(message)); }
    [[noreturn]] void unsupported(std::string message) const {
        fail(codes::kUnsupportedSchemaFeature, std::move(message) + " is not supported");
    }

    void no_text(const XmlNode& n) const {
        if (n.text && !blank(*n.text)) syntax("<" + n.name + "> must not contain text");
    }

    std::uint32_t occurs(const std::string& value, std::string_view what) const {
        std::uint32_t n = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), n);
        if (value.empty() || value.front() == '-' || ec != std::errc{} || ptr != value.data() + value.size()) {
            syntax(std::string(what) + " '" + value + "' is not a non-negative integer");
        }
        return n;
    }

    // Compiles one xsd:element, registers its declaration and returns the
    // particle that refers to it.
    Particle declare(const XmlNode& n, bool global) {
        Particle particle;
        ElementDecl decl;
        std::optional<std::string> name;
        bool typed = false;

        for (const auto& [k, v] : n.attributes) {
            if (k == "name") {
                name = v;
            } else if (k == "type") {
                if (v == kString) {
                    typed = true;
                } else if (v.starts_with("xsd:")) {
                    unsupported("built-in type '" + v + "'");
                } else {
                    syntax("type '" + v + "' refers to no declaration");
                }
            } else if (k == "minOccurs" || k == "maxOccurs") {
                if (global) syntax(k + " on a global element declaration");
                if (k == "minOccurs") {
                    particle.min_occurs = occurs(v, k);
                } else if (v == "unbounded") {
                    particle.max_occurs.reset();
                } else {
                    particle.max_occurs = occurs(v, k);
                    if (*particle.max_occurs == 0) unsupported("maxOccurs=\"0\"");
                }
            } else {
                unsupported("element attribute '" + k + "'");
            }
        }
        if (!name || name->empty()) syntax("element declaration without a name");
        if (!is_valid_xml_name(*name)) syntax("invalid element name '" + *name + "'");
        if (particle.max_occurs && particle.min_occurs > *particle.max_occurs) {
            syntax("minOccurs exceeds maxOccurs for '" + *name + "'");
        }
        particle.element = *name;
        decl.text_allowed = typed;
        no_text(n);

        std::size_t index = 0;
        for (const auto& child : n.children) {
            enter(child, ++index);
            if (child.name != "xsd:complexType") unsupported("<" + child.name + "> inside an element");
            if (typed) syntax("element '" + *name + "' has both a type and an inline complexType");
            if (index > 1) syntax("element '" + *name + "' has more than one complexType");
            complex_type(child, decl);
            leave();
        }

        auto [it, inserted] = model_.elements.emplace(*name, decl);
        if (!inserted && !(it->second == decl)) {
            syntax("element '" + *name + "' is declared twice with different content");
        }
        return particle;
    }

    void complex_type(const XmlNode& n, ElementDecl& decl) {
        if (!n.attributes.empty()) unsupported("complexType attribute '" + n.attributes.front().first + "'");
        no_text(n);
        std::size_t index = 0;
        bool seen_sequence = false;
        std::set<std::string> attribute_names;
        for (const auto& child : n.children) {
            enter(child, ++index);
            if (child.name == "xsd:sequence") {
                if (seen_sequence || !decl.attributes.empty()) {
                    syntax("<xsd:sequence> must come once, before attribute declarations");
                }
                seen_sequence = true;
                sequence(child, decl);
            } else if (child.name == "xsd:attribute") {
                auto attr = attribute(child);
                if (!attribute_names.insert(attr.name).second) syntax("attribute '" + attr.name + "' declared twice");
                decl.attributes.push_back(std::move(attr));
            } else {
                unsupported("<" + child.name + ">");
            }
            leave();
        }
    }

    void sequence(const XmlNode& n, ElementDecl& decl) {
        if (!n.attributes.empty()) unsupported("sequence attribute '" + n.attributes.front().first + "'");
        no_text(n);
        std::set<std::string> names;
        std::size_t index = 0;
        for (const auto& child : n.children) {
            enter(child, ++index);
            if (child.name != "xsd:element") unsupported("<" + child.name + "> inside a sequence");
            auto particle = declare(child, false);
            if (!names.insert(particle.element).second) {
                fail(codes::kAmbiguousParticles,
                     "sequence names '" + particle.element + "' more than once; greedy matching would be ambiguous");
            }
            decl.particles.push_back(std::move(particle));
            leave();
        }
    }

    AttributeDecl attribute(const XmlNode& n) {
        AttributeDecl attr;
        for (const auto& [k, v] : n.attributes) {
            if (k == "name") {
                attr.name = v;
            } else if (k == "type") {
                if (v != kString) unsupported("attribute type '" + v + "'");
            } else {
                unsupported("attribute declaration attribute '" + k + "'");
            }
        }
        if (attr.name.empty()) syntax("attribute declaration without a name");
        if (!is_valid_xml_name(attr.name)) syntax("invalid attribute name '" + attr.name + "'");
        if (!n.children.empty()) unsupported("content inside <xsd:attribute>");
        no_text(n);
        attr.type = std::string(kString);
        return attr;
    }

    ContentModel model_;
    std::string path_;
    std::vector<std::string> saved_;
};

class DocumentValidator {
public:
    DocumentValidator(const ContentModel& model, std::vector<Diagnostic>& out) : model_(model), out_(out) {}

    void element(const XmlNode& n, const ElementDecl& decl, const std::string& path) {
        for (const auto& a : decl.attributes) {
            if (!n.attribute(a.name)) {
                report(codes::kMissingAttribute, "<" + n.name + "> lacks required attribute '" + a.name + "'", path);
            }
        }
        for (const auto& [k, v] : n.attributes) {
            const bool declared = std::any_of(decl.attributes.begin(), decl.attributes.end(),
                                              [&](const AttributeDecl& a) { return a.name == k; });
            if (!declared) report(codes::kUnexpectedAttribute, "<" + n.name + "> has undeclared attribute '" + k + "'", path);
        }
        if (n.text && !decl.text_allowed && !n.text->empty()) {
            report(codes::kUnexpectedText, "<" + n.name + "> does not allow text content", path);
        }

        std::map<std::string, std::size_t> seen;
        auto child_path = [&](const XmlNode& c) {
            return path + "/" + c.name + "[" + std::to_string(++seen[c.name]) + "]";
        };

        std::size_t i = 0;
        for (const auto& particle : decl.particles) {
            std::uint32_t count = 0;
            while (i < n.children.size() && n.children[i].name == particle.element &&
                   (!particle.max_occurs || count < *particle.max_occurs)) {
                const auto& child = n.children[i++];
                ++count;
                element(child, *model_.find(particle.element), child_path(child));
            }
            if (i < n.children.size() && n.children[i].name == particle.element) {
                report(codes::kTooManyOccurrences,
                       "<" + particle.element + "> occurs more than " + std::to_string(*particle.max_occurs) +
                           " time(s)",
                       path);
                while (i < n.children.size() && n.children[i].name == particle.element) {
                    child_path(n.children[i++]);
                }
            }
            if (count < particle.min_occurs) {
                report(codes::kMissingElement,
                       "<" + n.name + "> needs at least " + std::to_string(particle.min_occurs) + " <" +
                           particle.element + ">",
                       path);
            }
        }
        // Matching stops at the first child that fits no remaining particle.
        if (i < n.children.size()) {
            const auto& child = n.children[i];
            report(codes::kUnexpectedElement,
                   "unexpected <" + child.name + "> in <" + n.name + ">", child_path(child));
        }
    }

    void report(std::string_view code, std::string message, const std::string& path) {
        Location loc;
        loc.path = path;
        out_.push_back(make_error(code, std::move(message), loc));
    }

private:
    const ContentModel& model_;
    std::vector<Diagnostic>& out_;
};

}  // namespace

const ElementDecl* ContentModel::find(std::string_view name) const {
    auto it = elements.find(name);
    return it == elements.end() ? nullptr : &it->second;
}

ContentModel compile_schema(std::string_view xsd_text) {
    return SchemaCompiler().compile(parse_xml(xsd_text));
}

const ContentModel& embedded_model() {
    static const ContentModel model = compile_schema(embedded_schema_text());
    return model;
}

std::vector<Diagnostic> validate_document(const XmlNode& root, const ContentModel& model) {
    std::vector<Diagnostic> out;
    DocumentValidator validator(model, out);
    const auto root_path = "/" + root.name;
    const auto* decl = model.find(model.root);
    if (root.name != model.root || !decl) {
        validator.report(codes::kWrongRoot, "root element is <" + root.name + ">, expected <" + model.root + ">",
                         root_path);
        return out;
    }
    validator.element(root, *decl, root_path);
    return out;
}

}  // namespace umlxml
