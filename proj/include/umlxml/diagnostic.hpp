#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace umlxml {

enum class Severity { Error, Warning };

std::string_view to_string(Severity severity);

// Stable diagnostic codes. Each stage draws from its own block; the strings
// are part of the CLI and report contract and must not change.
namespace codes {
// core-model
inline constexpr std::string_view kUnknownVisibility = "UnknownVisibility";
inline constexpr std::string_view kBadCardinality = "BadCardinality";
inline constexpr std::string_view kNonStandardCardinality = "NonStandardCardinality";
// codification
inline constexpr std::string_view kMalformedRecord = "MalformedRecord";
inline constexpr std::string_view kBadTuple = "BadTuple";
inline constexpr std::string_view kBadCount = "BadCount";
inline constexpr std::string_view kTrailingToken = "TrailingToken";
// diagram validation
inline constexpr std::string_view kDuplicateClassName = "DuplicateClassName";
inline constexpr std::string_view kUnknownTarget = "UnknownTarget";
inline constexpr std::string_view kSelfGeneralization = "SelfGeneralization";
inline constexpr std::string_view kGeneralizationCycle = "GeneralizationCycle";
inline constexpr std::string_view kDuplicateMember = "DuplicateMember";
inline constexpr std::string_view kSelfRelationWarning = "SelfRelationWarning";
// xml
inline constexpr std::string_view kXmlSyntaxError = "XmlSyntaxError";
inline constexpr std::string_view kUnsupportedXml = "UnsupportedXml";
inline constexpr std::string_view kShapeError = "ShapeError";
// schema
inline constexpr std::string_view kUnsupportedSchemaFeature = "UnsupportedSchemaFeature";
inline constexpr std::string_view kSchemaSyntaxError = "SchemaSyntaxError";
inline constexpr std::string_view kAmbiguousParticles = "AmbiguousParticles";
inline constexpr std::string_view kWrongRoot = "WrongRoot";
inline constexpr std::string_view kUnexpectedElement = "UnexpectedElement";
inline constexpr std::string_view kMissingElement = "MissingElement";
inline constexpr std::string_view kTooManyOccurrences = "TooManyOccurrences";
inline constexpr std::string_view kMissingAttribute = "MissingAttribute";
inline constexpr std::string_view kUnexpectedAttribute = "UnexpectedAttribute";
inline constexpr std::string_view kUnexpectedText = "UnexpectedText";
}  // namespace codes

// Where a diagnostic applies. Every field is optional; codification errors
// fill line/token, XML errors line/column, model checks class_name/path.
struct Location {
    std::optional<std::size_t> line;    // 1-based
    std::optional<std::size_t> column;  // 1-based
    std::optional<std::size_t> token;   // 1-based index of the ';'-separated token
    std::string class_name;
    std::string path;

    bool empty() const;
    std::string to_string() const;

    bool operator==(const Location&) const = default;
};

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;
    std::string message;
    Location location;

    bool is_error() const { return severity == Severity::Error; }

    // "error Code: message (at location)"
    std::string to_string() const;

    bool operator==(const Diagnostic&) const = default;
};

Diagnostic make_error(std::string_view code, std::string message, Location location = {});
Diagnostic make_warning(std::string_view code, std::string message, Location location = {});

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// Thrown by operations that fail as a whole (single-value parsers, the XML
// reader, the schema compiler). Carries the same record the CLI prints.
class Error : public std::runtime_error {
public:
    explicit Error(Diagnostic diagnostic);

    const Diagnostic& diagnostic() const noexcept { return diagnostic_; }
    const std::string& code() const noexcept { return diagnostic_.code; }

private:
    Diagnostic diagnostic_;
};

}  // namespace umlxml
