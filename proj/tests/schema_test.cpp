#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "support/random_diagram.hpp"
#include "umlxml/generator.hpp"
#include "umlxml/schema.hpp"

using namespace umlxml;

namespace {

std::string compile_failure(std::string_view xsd) {
    try {
        compile_schema(xsd);
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

std::string wrap(std::string_view body) {
    return "<xsd:schema xmlns:xsd=\"http://www.w3.org/2000/10/XMLSchema\">" + std::string(body) + "</xsd:schema>";
}

std::vector<std::string> codes_of(const std::vector<Diagnostic>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(d.code);
    return out;
}

XmlNode sample_document() {
    UmlClass a{"A"};
    a.attributes = {{"x", "Int", Visibility::Public, {}}};
    a.methods = {{"f", "Void", Visibility::Private}};
    a.relationships = {Relationship::association(Cardinality::unbounded(1), "B"), Relationship::generalization("B")};
    return generate_document(Diagram{{a, UmlClass{"B"}}});
}

}  // namespace

TEST(EmbeddedSchema, ContainsRepeatableAssociationDeclaration) {
    const auto text = embedded_schema_text();
    const auto pos = text.find("<xsd:element name=\"ASS\" minOccurs=\"0\"");
    ASSERT_NE(pos, std::string_view::npos);
    EXPECT_NE(text.find("maxOccurs=\"unbounded\"", pos), std::string_view::npos);
    EXPECT_EQ(text.find("\" Visibility\""), std::string_view::npos);
    EXPECT_EQ(embedded_schema_text(), embedded_schema_text());
    EXPECT_EQ(embedded_schema_text().data(), embedded_schema_text().data());
}

TEST(EmbeddedSchema, IsInSerializerLayout) {
    const auto text = std::string(embedded_schema_text());
    EXPECT_EQ(serialize(parse_xml(text), true), text);
}

TEST(EmbeddedSchema, MatchesShippedFile) {
    std::ifstream in(UMLXML_SOURCE_DIR "/schema/class_diagram.xsd", std::ios::binary);
    ASSERT_TRUE(in);
    std::ostringstream s;
    s << in.rdbuf();
    EXPECT_EQ(s.str(), embedded_schema_text());
}

TEST(CompileSchema, EmbeddedModelShape) {
    const auto model = compile_schema(embedded_schema_text());
    EXPECT_EQ(model.root, "Diagram");

    const auto* attribute = model.find("Attribute");
    ASSERT_NE(attribute, nullptr);
    EXPECT_EQ(attribute->particles,
              (std::vector<Particle>{{"Attr-Type", 1, 1}, {"Visibility", 1, 1}, {"Dvalue", 1, 1}}));
    EXPECT_EQ(attribute->attributes, (std::vector<AttributeDecl>{{"name", "xsd:string"}}));
    EXPECT_FALSE(attribute->text_allowed);

    const auto* cls = model.find("Class");
    ASSERT_NE(cls, nullptr);
    EXPECT_EQ(cls->particles, (std::vector<Particle>{{"Attribute", 0, std::nullopt},
                                                      {"Method", 0, std::nullopt},
                                                      {"Relationships", 1, 1}}));
    EXPECT_EQ(cls->attributes.at(0).name, "name-Class");

    const auto* rels = model.find("Relationships");
    ASSERT_NE(rels, nullptr);
    ASSERT_EQ(rels->particles.size(), 4u);
    EXPECT_EQ(rels->particles[0], (Particle{"ASS", 0, std::nullopt}));
    EXPECT_EQ(rels->particles[3].element, "Generalization");
    EXPECT_EQ(model.find("Generalization")->particles, (std::vector<Particle>{{"Class-Relation", 1, 1}}));
    EXPECT_TRUE(model.find("Dvalue")->text_allowed);

    // Every particle refers to a declared element.
    for (const auto& [name, decl] : model.elements) {
        for (const auto& p : decl.particles) EXPECT_NE(model.find(p.element), nullptr) << p.element;
    }
    EXPECT_EQ(model.elements.size(), 15u);
}

TEST(CompileSchema, MinimalSchema) {
    const auto model = compile_schema(wrap("<xsd:element name=\"R\"><xsd:complexType><xsd:sequence/></xsd:complexType></xsd:element>"));
    EXPECT_EQ(model.root, "R");
    ASSERT_EQ(model.elements.size(), 1u);
    EXPECT_TRUE(model.find("R")->particles.empty());
}

TEST(CompileSchema, RejectsUnsupportedFeatures) {
    const std::string_view bodies[] = {
        "<xsd:element name=\"R\"><xsd:complexType><xsd:choice/></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:complexContent/></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\" type=\"xsd:int\"/>",
        "<xsd:element name=\"R\" nillable=\"true\"/>",
        "<xsd:element name=\"R\"><xsd:simpleType/></xsd:element>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:sequence><xsd:element ref=\"X\"/></xsd:sequence></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:attribute name=\"a\" use=\"optional\"/></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\"/><xsd:element name=\"S\"/>",
        "<xsd:complexType name=\"T\"/>",
    };
    for (auto body : bodies) EXPECT_EQ(compile_failure(wrap(body)), "UnsupportedSchemaFeature") << body;
}

TEST(CompileSchema, RejectsMalformedSchemas) {
    const std::string_view bodies[] = {
        "<xsd:element/>",
        "<xsd:element name=\"R\" type=\"MyType\"/>",
        "<xsd:element name=\"R\" minOccurs=\"0\"/>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:sequence><xsd:element name=\"A\" minOccurs=\"2\" maxOccurs=\"1\"/></xsd:sequence></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:sequence><xsd:element name=\"A\" minOccurs=\"x\"/></xsd:sequence></xsd:complexType></xsd:element>",
        "<xsd:element name=\"R\"><xsd:complexType><xsd:sequence><xsd:element name=\"A\" type=\"xsd:string\"/><xsd:element name=\"B\"><xsd:complexType><xsd:sequence><xsd:element name=\"A\"/></xsd:sequence></xsd:complexType></xsd:element></xsd:sequence></xsd:complexType></xsd:element>",
        "",
    };
    for (auto body : bodies) EXPECT_EQ(compile_failure(wrap(body)), "SchemaSyntaxError") << body;
    EXPECT_EQ(compile_failure("<schema/>"), "SchemaSyntaxError");
}

TEST(CompileSchema, RejectsAmbiguousSequences) {
    EXPECT_EQ(compile_failure(wrap("<xsd:element name=\"R\"><xsd:complexType><xsd:sequence>"
                                   "<xsd:element name=\"A\" minOccurs=\"0\"/><xsd:element name=\"A\"/>"
                                   "</xsd:sequence></xsd:complexType></xsd:element>")),
              "AmbiguousParticles");
}

TEST(ValidateDocument, GeneratedDocumentConforms) {
    EXPECT_TRUE(validate_document(sample_document(), embedded_model()).empty());
    EXPECT_TRUE(validate_document(XmlNode("Diagram"), embedded_model()).empty());
}

TEST(ValidateDocument, WrongRoot) {
    EXPECT_EQ(codes_of(validate_document(XmlNode("Class"), embedded_model())), std::vector<std::string>{"WrongRoot"});
}

TEST(ValidateDocument, MethodBeforeAttributeBreaksSequence) {
    auto doc = sample_document();
    auto& cls = doc.children[0].children;
    std::swap(cls[0], cls[1]);
    const auto out = validate_document(doc, embedded_model());
    EXPECT_EQ(codes_of(out), (std::vector<std::string>{"MissingElement", "UnexpectedElement"}));
    EXPECT_EQ(out[0].location.path, "/Diagram/Class[1]");
    EXPECT_EQ(out[1].location.path, "/Diagram/Class[1]/Attribute[1]");
}

TEST(ValidateDocument, MissingClassName) {
    auto doc = sample_document();
    doc.children[0].remove_attribute("name-Class");
    const auto out = validate_document(doc, embedded_model());
    ASSERT_EQ(codes_of(out), std::vector<std::string>{"MissingAttribute"});
    EXPECT_EQ(out[0].location.path, "/Diagram/Class[1]");
}

TEST(ValidateDocument, AttributeTextAndOccurrenceFindings) {
    auto doc = sample_document();
    doc.children[1].set_attribute("extra", "1");
    auto& attr = doc.children[0].children[0];
    attr.children.push_back(XmlNode::leaf("Dvalue", "again"));
    doc.children[0].children[1].children[0].append(XmlNode("Nested"));
    const auto out = validate_document(doc, embedded_model());
    EXPECT_EQ(codes_of(out), (std::vector<std::string>{"TooManyOccurrences", "UnexpectedElement",
                                                       "UnexpectedAttribute"}));

    XmlNode textual("Diagram");
    textual.text = "stray";
    EXPECT_EQ(codes_of(validate_document(textual, embedded_model())), std::vector<std::string>{"UnexpectedText"});
}

TEST(SchemaProperty, RandomDiagramsConform) {
    sample::RandomSource r(41);
    const auto model = compile_schema(embedded_schema_text());
    for (int i = 0; i < 1000; ++i) {
        const auto doc = generate_document(sample::random_diagram(r));
        const auto out = validate_document(doc, model);
        ASSERT_TRUE(out.empty()) << out.front().to_string();
    }
}

// Each mutation of a conforming document must be caught.
TEST(SchemaProperty, MutationsAreDetected) {
    sample::RandomSource r(42);
    const auto& model = embedded_model();
    int mutations = 0;
    for (int i = 0; i < 300; ++i) {
        const auto d = sample::random_diagram(r);
        const auto doc = generate_document(d);
        for (std::size_t k = 0; k < doc.children.size(); ++k) {
            {
                auto m = doc;
                m.children[k].remove_attribute("name-Class");
                ASSERT_FALSE(validate_document(m, model).empty());
                ++mutations;
            }
            {
                auto m = doc;
                m.children[k].children.pop_back();  // Relationships
                ASSERT_FALSE(validate_document(m, model).empty());
                ++mutations;
            }
            const auto& kids = doc.children[k].children;
            for (std::size_t c = 0; c + 1 < kids.size(); ++c) {
                if (!kids[c].children.empty()) {
                    auto m = doc;
                    auto& leafs = m.children[k].children[c].children;
                    leafs.erase(leafs.begin() + static_cast<std::ptrdiff_t>(r.below(leafs.size())));
                    ASSERT_FALSE(validate_document(m, model).empty());
                    ++mutations;
                }
                if (kids[c].name != kids[c + 1].name) {
                    auto m = doc;
                    std::swap(m.children[k].children[c], m.children[k].children[c + 1]);
                    ASSERT_FALSE(validate_document(m, model).empty());
                    ++mutations;
                }
            }
        }
    }
    EXPECT_GT(mutations, 1000);
}
