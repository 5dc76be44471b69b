#include "umlxml/diagnostic.hpp"

#include <algorithm>

namespace umlxml {

std::string_view to_string(Severity severity) {
    return severity == Severity::Error ? "error" : "warning";
}

bool Location::empty() const {
    return !line && !column && !token && class_name.empty() && path.empty();
}

std::string Location::to_string() const {
    std::string out;
    auto add = [&out](const std::string& part) {
        if (!out.empty()) out += ", ";
        out += part;
    };
    if (line) add("line " + std::to_string(*line));
    if (column) add("column " + std::to_string(*column));
    if (token) add("token " + std::to_string(*token));
    if (!class_name.empty()) add("class " + class_name);
    if (!path.empty()) add(path);
    return out;
}

std::string Diagnostic::to_string() const {
    std::string out{umlxml::to_string(severity)};
    out += ' ';
    out += code;
    out += ": ";
    out += message;
    if (!location.empty()) {
        out += " (at ";
        out += location.to_string();
        out += ')';
    }
    return out;
}

Diagnostic make_error(std::string_view code, std::string message, Location location) {
    return Diagnostic{Severity::Error, std::string(code), std::move(message), std::move(location)};
}

Diagnostic make_warning(std::string_view code, std::string message, Location location) {
    return Diagnostic{Severity::Warning, std::string(code), std::move(message), std::move(location)};
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [](const Diagnostic& d) { return d.is_error(); });
}

Error::Error(Diagnostic diagnostic)
    : std::runtime_error(diagnostic.to_string()), diagnostic_(std::move(diagnostic)) {}

}  // namespace umlxml
