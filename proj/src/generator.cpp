#include "umlxml/generator.hpp"

#include <map>

#include "umlxml/diagnostic.hpp"

namespace umlxml {

namespace {

constexpr std::string_view kRoot = "Diagram";

std::string_view element_name(RelationKind kind) {
    switch (kind) {
        case RelationKind::Association: return "ASS";
        case RelationKind::Aggregation: return "Aggregation";
        case RelationKind::Composition: return "Composition";
        case RelationKind::Generalization: return "Generalization";
    }
    return "ASS";
}

XmlNode class_element(const UmlClass& c) {
    XmlNode e("Class");
    e.set_attribute("name-Class", c.name);

    for (const auto& a : c.attributes) {
        XmlNode attr("Attribute");
        attr.set_attribute("name", a.name);
        attr.append(XmlNode::leaf("Attr-Type", a.type_name));
        attr.append(XmlNode::leaf("Visibility", std::string(to_string(a.visibility))));
        XmlNode dvalue("Dvalue");
        if (a.default_value) dvalue.text = *a.default_value;
        attr.append(std::move(dvalue));
        e.append(std::move(attr));
    }

    for (const auto& m : c.methods) {
        XmlNode method("Method");
        method.set_attribute("name-Method", m.name);
        method.append(XmlNode::leaf("Method-type", m.return_type));
        method.append(XmlNode::leaf("Visibility", std::string(to_string(m.visibility))));
        e.append(std::move(method));
    }

    XmlNode relationships("Relationships");
    for (RelationKind kind : kAllRelationKinds) {
        for (const auto& r : c.relationships) {
            if (r.kind() != kind) continue;
            XmlNode rel{std::string(element_name(kind))};
            if (r.cardinality()) {
                rel.append(XmlNode::leaf("Cardinality", format_cardinality(*r.cardinality())));
            }
            rel.append(XmlNode::leaf("Class-Relation", r.target()));
            relationships.append(std::move(rel));
        }
    }
    e.append(std::move(relationships));
    return e;
}

// Walks a document while tracking the XPath-like location for errors.
class ShapeReader {
public:
    Diagram diagram(const XmlNode& root) {
        path_ = "/" + root.name;
        if (root.name != kRoot) fail("root element must be <Diagram>");
        no_attributes(root);
        no_text(root);
        Diagram d;
        std::size_t index = 0;
        for (const auto& child : root.children) {
            ++index;
            Scope scope(*this, child.name, index);
            if (child.name != "Class") fail("expected <Class>");
            d.classes.push_back(uml_class(child));
        }
        return d;
    }

private:
    struct Scope {
        Scope(ShapeReader& r, const std::string& name, std::size_t index) : reader(r), saved(r.path_) {
            r.path_ += "/" + name + "[" + std::to_string(index) + "]";
        }
        ~Scope() { reader.path_ = saved; }
        ShapeReader& reader;
        std::string saved;
    };

    [[noreturn]] void fail(std::string message) const {
        Location loc;
        loc.path = path_;
        throw Error(make_error(codes::kShapeError, std::move(message), loc));
    }

    void no_text(const XmlNode& n) const {
        if (n.text) fail("<" + n.name + "> must not contain text");
    }

    void no_attributes(const XmlNode& n) const {
        if (!n.attributes.empty()) fail("unexpected attribute '" + n.attributes.front().first + "'");
    }

    std::string required_attribute(const XmlNode& n, std::string_view name) const {
        if (n.attributes.size() != 1 || n.attributes.front().first != name) {
            fail("<" + n.name + "> must carry exactly the attribute '" + std::string(name) + "'");
        }
        return n.attributes.front().second;
    }

    // Children must be exactly `names`, in order, each a text leaf. Returns
    // their text (empty for an empty element).
    std::vector<std::optional<std::string>> leaves(const XmlNode& n,
                                                   std::initializer_list<std::string_view> names) {
        no_text(n);
        if (n.children.size() != names.size()) {
            fail("<" + n.name + "> must have " + std::to_string(names.size()) + " child elements");
        }
        std::vector<std::optional<std::string>> out;
        std::size_t i = 0;
        for (auto expected : names) {
            const auto& child = n.children[i++];
            Scope scope(*this, child.name, 1);
            if (child.name != expected) fail("expected <" + std::string(expected) + ">");
            if (!child.children.empty()) fail("<" + child.name + "> must be a text element");
            no_attributes(child);
            out.push_back(child.text);
        }
        return out;
    }

    std::string non_empty(const std::optional<std::string>& text, std::string_view what) const {
        if (!text || text->empty()) fail(std::string(what) + " must not be empty");
        return *text;
    }

    Visibility visibility(const std::optional<std::string>& text) const {
        try {
            return parse_visibility(text.value_or(""));
        } catch (const Error& e) {
            fail(e.diagnostic().message);
        }
    }

    UmlClass uml_class(const XmlNode& n) {
        UmlClass c;
        c.name = required_attribute(n, "name-Class");
        no_text(n);

        std::map<std::string, std::size_t> seen;
        auto scoped = [&](const XmlNode& child) { return Scope(*this, child.name, ++seen[child.name]); };

        std::size_t i = 0;
        while (i < n.children.size() && n.children[i].name == "Attribute") {
            const auto& child = n.children[i++];
            auto scope = scoped(child);
            Attribute a;
            a.name = required_attribute(child, "name");
            auto fields = leaves(child, {"Attr-Type", "Visibility", "Dvalue"});
            a.type_name = non_empty(fields[0], "Attr-Type");
            a.visibility = visibility(fields[1]);
            if (fields[2] && !fields[2]->empty()) a.default_value = *fields[2];
            c.attributes.push_back(std::move(a));
        }
        while (i < n.children.size() && n.children[i].name == "Method") {
            const auto& child = n.children[i++];
            auto scope = scoped(child);
            Method m;
            m.name = required_attribute(child, "name-Method");
            auto fields = leaves(child, {"Method-type", "Visibility"});
            m.return_type = non_empty(fields[0], "Method-type");
            m.visibility = visibility(fields[1]);
            c.methods.push_back(std::move(m));
        }
        if (i >= n.children.size()) fail("missing <Relationships>");
        const auto& rels = n.children[i++];
        {
            auto scope = scoped(rels);
            if (rels.name != "Relationships") fail("expected <Relationships>");
            relationships(rels, c);
        }
        if (i < n.children.size()) {
            const auto& extra = n.children[i];
            auto scope = scoped(extra);
            fail("unexpected element <" + extra.name + ">");
        }
        return c;
    }

    void relationships(const XmlNode& n, UmlClass& c) {
        no_attributes(n);
        no_text(n);
        std::map<std::string, std::size_t> seen;
        std::size_t i = 0;
        for (RelationKind kind : kAllRelationKinds) {
            const auto name = element_name(kind);
            while (i < n.children.size() && n.children[i].name == name) {
                const auto& child = n.children[i++];
                Scope scope(*this, child.name, ++seen[child.name]);
                no_attributes(child);
                if (kind == RelationKind::Generalization) {
                    auto fields = leaves(child, {"Class-Relation"});
                    c.relationships.push_back(
                        Relationship::generalization(non_empty(fields[0], "Class-Relation")));
                    continue;
                }
                auto fields = leaves(child, {"Cardinality", "Class-Relation"});
                Cardinality cardinality;
                try {
                    cardinality = parse_cardinality(fields[0].value_or(""));
                } catch (const Error& e) {
                    fail(e.diagnostic().message);
                }
                c.relationships.emplace_back(kind, cardinality, non_empty(fields[1], "Class-Relation"));
            }
        }
        if (i < n.children.size()) {
            const auto& extra = n.children[i];
            Scope scope(*this, extra.name, ++seen[extra.name]);
            fail("unexpected or out-of-order element <" + extra.name + ">");
        }
    }

    std::string path_;
};

}  // namespace

XmlNode generate_document(const Diagram& diagram) {
    XmlNode root{std::string(kRoot)};
    // Process-then-advance over the class list; every class gets an element.
    for (const auto& c : diagram.classes) root.append(class_element(c));
    return root;
}

Diagram document_to_diagram(const XmlNode& root) { return ShapeReader().diagram(root); }

}  // namespace umlxml
