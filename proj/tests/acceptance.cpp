// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.
//
//   acceptance <path-to-umlxml-executable> <fixtures-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/random_diagram.hpp"
#include "umlxml/codec.hpp"
#include "umlxml/generator.hpp"
#include "umlxml/schema.hpp"
#include "umlxml/validator.hpp"

using namespace umlxml;
namespace fs = std::filesystem;

namespace {

constexpr int kRandomCases = 1000;
constexpr std::uint32_t kSeed = 0x5eed'2024;

struct Failure {
    std::string what;
};

void require(bool condition, const std::string& what) {
    if (!condition) throw Failure{what};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    require(static_cast<bool>(in), "cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Totals {
    std::size_t classes = 0, attributes = 0, methods = 0;
    std::size_t by_kind[4] = {};
};

Totals totals(const Diagram& d) {
    Totals t;
    t.classes = d.classes.size();
    for (const auto& c : d.classes) {
        t.attributes += c.attributes.size();
        t.methods += c.methods.size();
        for (const auto& r : c.relationships) ++t.by_kind[static_cast<int>(r.kind())];
    }
    return t;
}

void require_corpus_totals(const Diagram& d) {
    const auto t = totals(d);
    require(t.classes == 5, "expected 5 classes, got " + std::to_string(t.classes));
    const std::vector<std::string> names{"Person", "Company", "Department", "Director", "Project"};
    const std::vector<std::size_t> per_class{3, 2, 1, 0, 2};
    for (std::size_t i = 0; i < 5; ++i) {
        require(d.classes[i].name == names[i], "class " + std::to_string(i) + " is " + d.classes[i].name);
        require(d.classes[i].attributes.size() == per_class[i], names[i] + " attribute count");
    }
    require(t.attributes == 8, "expected 8 attributes, got " + std::to_string(t.attributes));
    require(t.methods == 3, "expected 3 methods, got " + std::to_string(t.methods));
    std::vector<std::string> methods;
    for (const auto& c : d.classes)
        for (const auto& m : c.methods) methods.push_back(m.name);
    require(methods == std::vector<std::string>{"Working", "Recruiting", "Manage"}, "method names");
    require(t.by_kind[0] == 4, "expected 4 associations, got " + std::to_string(t.by_kind[0]));
    require(t.by_kind[1] == 1, "expected 1 aggregation, got " + std::to_string(t.by_kind[1]));
    require(t.by_kind[2] == 0, "expected 0 compositions, got " + std::to_string(t.by_kind[2]));
    require(t.by_kind[3] == 1, "expected 1 generalization, got " + std::to_string(t.by_kind[3]));
    const auto& director = d.classes[3];
    require(director.relationships.back() == Relationship::generalization("Person"), "Director generalizes Person");
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return out + "'";
}

int run_cli(const std::string& exe, const std::string& args) {
    const int raw = std::system((shell_quote(exe) + " " + args + " 2>/dev/null").c_str());
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
}

std::vector<Diagram> random_corpus() {
    sample::RandomSource r(kSeed);
    std::vector<Diagram> out;
    for (int i = 0; i < kRandomCases; ++i) out.push_back(sample::random_diagram(r));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <umlxml-executable> <fixtures-dir>\n";
        return 2;
    }
    const std::string exe = argv[1];
    const fs::path fixtures = argv[2];
    const auto work = fs::temp_directory_path() / "umlxml_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    const auto corpus = random_corpus();
    int failed = 0;

    auto criterion = [&](int id, const std::string& title, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            body();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        failed += !ok;
        std::printf("[%s] %d. %s (%.1f ms)%s%s\n", ok ? "PASS" : "FAIL", id, title.c_str(), ms,
                    detail.empty() ? "" : " -- ", detail.c_str());
    };

    criterion(1, "corpus reproduction", [&] {
        const auto start = std::chrono::steady_clock::now();
        const auto r = parse_codification(slurp(fixtures / "corpus_corrected.uml"));
        require(r.ok(), "corrected corpus does not parse");
        require_corpus_totals(r.diagram);
        const auto elapsed = std::chrono::steady_clock::now() - start;
        require(elapsed < std::chrono::seconds(1), "parse took longer than 1 s");
    });

    criterion(2, "erratum handling", [&] {
        const auto raw = slurp(fixtures / "corpus_paper_raw.uml");
        const auto strict = parse_codification(raw);
        require(!strict.ok(), "strict parse of the raw corpus succeeded");
        std::vector<Diagnostic> errors;
        for (const auto& d : strict.diagnostics)
            if (d.is_error()) errors.push_back(d);
        require(errors.size() == 1, "expected exactly one strict error");
        require(errors[0].code == "MalformedRecord", "strict error is " + errors[0].code);
        require(errors[0].location.line == 3u && errors[0].location.class_name == "Department",
                "strict error does not name the Department line: " + errors[0].to_string());

        const auto lenient = parse_codification(raw, ParseOptions{.strict = false});
        require(lenient.ok(), "lenient parse failed");
        require(lenient.diagnostics.size() == 1 && lenient.diagnostics[0].code == "TrailingToken" &&
                    lenient.diagnostics[0].severity == Severity::Warning,
                "lenient parse must yield exactly one TrailingToken warning");
        require_corpus_totals(lenient.diagram);
    });

    criterion(3, "end-to-end soundness", [&] {
        const auto input = (fixtures / "corpus_corrected.uml").string();
        const auto first = (work / "first.xml").string();
        const auto second = (work / "second.xml").string();
        require(run_cli(exe, "convert " + shell_quote(input) + " -o " + shell_quote(first)) == 0, "convert #1 exit");
        require(run_cli(exe, "convert " + shell_quote(input) + " -o " + shell_quote(second)) == 0, "convert #2 exit");
        require(run_cli(exe, "check-xml " + shell_quote(first)) == 0, "check-xml rejected the output");
        const auto a = slurp(first);
        require(a == slurp(second), "two runs differ");
        require(validate_document(parse_xml(a), embedded_model()).empty(), "output has schema diagnostics");
        require(a == slurp(fixtures / "corpus_corrected.expected.xml"), "output differs from golden file");
        std::size_t classes = 0;
        for (auto pos = a.find("<Class "); pos != std::string::npos; pos = a.find("<Class ", pos + 1)) ++classes;
        require(classes == 5, "expected 5 Class elements");
    });

    criterion(4, "codification round-trip (" + std::to_string(kRandomCases) + " diagrams)", [&] {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto back = parse_codification(emit_codification(corpus[i]));
            require(back.diagnostics.empty(), "case " + std::to_string(i) + " produced diagnostics");
            require(back.diagram == corpus[i], "case " + std::to_string(i) + " differs after round-trip");
        }
    });

    criterion(5, "XML round-trip (" + std::to_string(kRandomCases) + " diagrams)", [&] {
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto doc = generate_document(corpus[i]);
            require(document_to_diagram(doc) == corpus[i], "case " + std::to_string(i) + " model round-trip");
            require(parse_xml(serialize(doc)) == doc, "case " + std::to_string(i) + " tree round-trip");
        }
    });

    criterion(6, "schema conformance and mutation detection", [&] {
        const auto model = compile_schema(embedded_schema_text());
        std::size_t mutations = 0, reorders = 0;
        for (std::size_t i = 0; i < corpus.size(); ++i) {
            const auto doc = generate_document(corpus[i]);
            require(validate_document(doc, model).empty(), "case " + std::to_string(i) + " does not conform");
            if (doc.children.empty()) continue;

            auto drop_child = doc;
            auto& attrs = drop_child.children[0].children;
            attrs.erase(attrs.end() - 1);  // required Relationships
            require(!validate_document(drop_child, model).empty(), "dropped child undetected");

            auto drop_name = doc;
            drop_name.children[0].remove_attribute("name-Class");
            require(!validate_document(drop_name, model).empty(), "dropped name-Class undetected");

            mutations += 2;

            if (doc.children[0].children.size() < 2) continue;
            auto reorder = doc;
            auto& kids = reorder.children[0].children;
            std::rotate(kids.begin(), kids.end() - 1, kids.end());  // Relationships first
            require(!validate_document(reorder, model).empty(), "reordered sequence undetected");
            ++reorders;
        }
        require(mutations > 0 && reorders > 0, "no mutations exercised");
    });

    criterion(7, "validation rule coverage", [&] {
        const std::pair<const char*, const char*> fixtures_by_rule[] = {
            {"r1_duplicate_class.uml", "DuplicateClassName"}, {"r2_unknown_target.uml", "UnknownTarget"},
            {"r3_bad_cardinality.uml", "BadCardinality"},     {"r4_generalization_cycle.uml", "GeneralizationCycle"},
            {"r5_duplicate_member.uml", "DuplicateMember"},
        };
        for (const auto& [file, code] : fixtures_by_rule) {
            const auto parsed = parse_codification(slurp(fixtures / file));
            auto diagnostics = parsed.diagnostics;
            if (parsed.ok()) {
                auto more = validate_diagram(parsed.diagram);
                diagnostics.insert(diagnostics.end(), more.begin(), more.end());
            }
            require(diagnostics.size() == 1 && diagnostics[0].code == code,
                    std::string(file) + " must yield exactly " + code);
        }
        // R3 as seen by the validator itself, for a hand-built diagram.
        UmlClass a{"A"};
        a.relationships.push_back(Relationship::association(Cardinality::bounded(3, 2), "A"));
        const auto r3 = validate_diagram(Diagram{{a}});
        require(!r3.empty() && r3[0].code == "BadCardinality", "validator R3 on a hand-built diagram");

        const auto corrected = parse_codification(slurp(fixtures / "corpus_corrected.uml"));
        require(validate_diagram(corrected.diagram).empty(), "corrected corpus has findings");
    });

    criterion(8, "cardinality domain", [&] {
        require(parse_cardinality("0..*") == Cardinality::unbounded(0), "0..*");
        require(parse_cardinality("1..*") == Cardinality::unbounded(1), "1..*");
        require(parse_cardinality("0..1") == Cardinality::bounded(0, 1), "0..1");
        const auto one = parse_cardinality("1");
        require(one.min == 1 && one.max == 1u, "1");
        int checked = 0;
        for (unsigned lo = 0; lo <= 9; ++lo) {
            for (int hi = -1; hi <= 9; ++hi) {
                const auto text = std::to_string(lo) + ".." + (hi < 0 ? "*" : std::to_string(hi));
                if (hi == 0 || (hi > 0 && static_cast<int>(lo) > hi)) {
                    bool rejected = false;
                    try {
                        parse_cardinality(text);
                    } catch (const Error&) {
                        rejected = true;
                    }
                    require(rejected, text + " should be rejected");
                    continue;
                }
                require(format_cardinality(parse_cardinality(text)) == text, text);
                const auto built = hi < 0 ? Cardinality::unbounded(lo) : Cardinality::bounded(lo, hi);
                require(parse_cardinality(format_cardinality(built)) == built, text + " structural");
                ++checked;
            }
        }
        require(format_cardinality(one) == "1", "bare 1 keeps its spelling");
        require(checked == 64, "enumeration size");
    });

    fs::remove_all(work);
    std::printf("%d of 8 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
