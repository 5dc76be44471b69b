#include "umlxml/model.hpp"

#include <charconv>
#include <stdexcept>

#include "umlxml/diagnostic.hpp"

namespace umlxml {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto lower = [](char c) { return (c >= 'A' && c <= 'Z') ? char(c - 'A' + 'a') : c; };
        if (lower(a[i]) != lower(b[i])) return false;
    }
    return true;
}

// Digits only; no sign, no whitespace.
std::optional<std::uint32_t> parse_uint(std::string_view s) {
    if (s.empty()) return std::nullopt;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
    }
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

[[noreturn]] void bad_cardinality(std::string_view token, std::string_view why) {
    throw Error(make_error(codes::kBadCardinality,
                           "invalid cardinality '" + std::string(token) + "': " + std::string(why)));
}

}  // namespace

Visibility parse_visibility(std::string_view token) {
    for (Visibility v : kAllVisibilities) {
        if (iequals(token, to_string(v))) return v;
    }
    throw Error(make_error(codes::kUnknownVisibility,
                           "unknown visibility '" + std::string(token) +
                               "' (expected Public, Private or Protected)"));
}

std::string_view to_string(Visibility visibility) {
    switch (visibility) {
        case Visibility::Public: return "Public";
        case Visibility::Private: return "Private";
        case Visibility::Protected: return "Protected";
    }
    return "Public";
}

std::string_view to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::Association: return "Association";
        case RelationKind::Aggregation: return "Aggregation";
        case RelationKind::Composition: return "Composition";
        case RelationKind::Generalization: return "Generalization";
    }
    return "Association";
}

bool Cardinality::valid() const {
    if (max) {
        if (*max == 0 || min > *max) return false;
    }
    if (short_form && !(min == 1 && max == 1u)) return false;
    return true;
}

Cardinality parse_cardinality(std::string_view token) {
    const auto dots = token.find("..");
    if (dots == std::string_view::npos) {
        auto n = parse_uint(token);
        if (!n) bad_cardinality(token, "expected INT, INT..INT or INT..*");
        if (*n == 0) bad_cardinality(token, "upper bound must be positive");
        return Cardinality{*n, *n, *n == 1};
    }
    auto min = parse_uint(token.substr(0, dots));
    if (!min) bad_cardinality(token, "lower bound is not a non-negative integer");
    const auto upper = token.substr(dots + 2);
    if (upper == "*") return Cardinality::unbounded(*min);
    auto max = parse_uint(upper);
    if (!max) bad_cardinality(token, "upper bound must be an integer or '*'");
    if (*max == 0) bad_cardinality(token, "upper bound must be positive");
    if (*min > *max) bad_cardinality(token, "lower bound exceeds upper bound");
    return Cardinality::bounded(*min, *max);
}

std::string format_cardinality(const Cardinality& c) {
    if (c.short_form && c.min == 1 && c.max == 1u) return "1";
    std::string out = std::to_string(c.min) + "..";
    out += c.max ? std::to_string(*c.max) : "*";
    return out;
}

bool is_standard_cardinality(const Cardinality& c) {
    if (c.is_unbounded()) return c.min == 0 || c.min == 1;
    if (c.min == 0 && c.max == 1u) return true;
    return c.short_form && c.min == 1 && c.max == 1u;
}

Relationship::Relationship(RelationKind kind, Cardinality cardinality, std::string target)
    : kind_(kind), cardinality_(cardinality), target_(std::move(target)) {
    if (kind == RelationKind::Generalization) {
        throw std::invalid_argument("a generalization carries no cardinality");
    }
}

Relationship::Relationship(std::string target)
    : kind_(RelationKind::Generalization), target_(std::move(target)) {}

Relationship Relationship::association(Cardinality c, std::string target) {
    return {RelationKind::Association, c, std::move(target)};
}

Relationship Relationship::aggregation(Cardinality c, std::string target) {
    return {RelationKind::Aggregation, c, std::move(target)};
}

Relationship Relationship::composition(Cardinality c, std::string target) {
    return {RelationKind::Composition, c, std::move(target)};
}

Relationship Relationship::generalization(std::string target) {
    return Relationship(std::move(target));
}

const UmlClass* Diagram::find(std::string_view name) const {
    for (const auto& c : classes) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

bool is_valid_identifier(std::string_view name) {
    return !name.empty() && name.find_first_of(";:") == std::string_view::npos;
}

}  // namespace umlxml
