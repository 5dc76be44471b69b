#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umlxml {

enum class Visibility { Public, Private, Protected };

// Declaration order is the canonical category order used by the codec and
// the XML generator.
enum class RelationKind { Association, Aggregation, Composition, Generalization };

inline constexpr Visibility kAllVisibilities[] = {Visibility::Public, Visibility::Private,
                                                  Visibility::Protected};
inline constexpr RelationKind kAllRelationKinds[] = {
    RelationKind::Association, RelationKind::Aggregation, RelationKind::Composition,
    RelationKind::Generalization};

// Case-insensitive. Throws Error(UnknownVisibility).
Visibility parse_visibility(std::string_view token);
// Capitalized: "Public", "Private", "Protected".
std::string_view to_string(Visibility visibility);

std::string_view to_string(RelationKind kind);

// Multiplicity of a relationship end. `max` empty means unbounded ("*").
//
// `short_form` only matters for (1,1): it records that the value was written
// as the bare literal "1" so that it formats back the same way. Every other
// point interval (n,n) formats as "n..n".
struct Cardinality {
    std::uint32_t min = 0;
    std::optional<std::uint32_t> max;
    bool short_form = false;

    static Cardinality bounded(std::uint32_t min, std::uint32_t max) { return {min, max, false}; }
    static Cardinality unbounded(std::uint32_t min) { return {min, std::nullopt, false}; }

    bool is_unbounded() const { return !max.has_value(); }
    // max positive when bounded, min <= max, short_form only on (1,1)
    bool valid() const;

    bool operator==(const Cardinality&) const = default;
};

// Grammar: INT | INT ".." (INT | "*"). Throws Error(BadCardinality).
Cardinality parse_cardinality(std::string_view token);
std::string format_cardinality(const Cardinality& cardinality);

// True for the four multiplicities the codification format documents:
// 0..*, 1..*, 0..1 and 1.
bool is_standard_cardinality(const Cardinality& cardinality);

struct Attribute {
    std::string name;
    std::string type_name;
    Visibility visibility = Visibility::Public;
    std::optional<std::string> default_value;  // absent = undefined

    bool operator==(const Attribute&) const = default;
};

struct Method {
    std::string name;
    std::string return_type;
    Visibility visibility = Visibility::Public;

    bool operator==(const Method&) const = default;
};

// A generalization never carries a cardinality; every other kind always does.
class Relationship {
public:
    // Throws std::invalid_argument when kind is Generalization.
    Relationship(RelationKind kind, Cardinality cardinality, std::string target);

    static Relationship association(Cardinality c, std::string target);
    static Relationship aggregation(Cardinality c, std::string target);
    static Relationship composition(Cardinality c, std::string target);
    static Relationship generalization(std::string target);

    RelationKind kind() const { return kind_; }
    const std::optional<Cardinality>& cardinality() const { return cardinality_; }
    const std::string& target() const { return target_; }

    bool operator==(const Relationship&) const = default;

private:
    Relationship(std::string target);

    RelationKind kind_ = RelationKind::Generalization;
    std::optional<Cardinality> cardinality_;
    std::string target_;
};

struct UmlClass {
    std::string name;
    std::vector<Attribute> attributes{};
    std::vector<Method> methods{};
    std::vector<Relationship> relationships{};

    bool operator==(const UmlClass&) const = default;
};

struct Diagram {
    std::vector<UmlClass> classes;  // input order

    const UmlClass* find(std::string_view name) const;

    bool operator==(const Diagram&) const = default;
};

// Non-empty and free of the codification delimiters ';' and ':'.
bool is_valid_identifier(std::string_view name);

}  // namespace umlxml
