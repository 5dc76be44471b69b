#include "umlxml/codec.hpp"

#include <charconv>
#include <stdexcept>

namespace umlxml {

namespace {

constexpr std::string_view kWhitespace = " \t\r\f\v";

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(kWhitespace);
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char delimiter) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(delimiter, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

// Aborts decoding of the current record.
struct RecordFailure {
    Diagnostic diagnostic;
};

class RecordDecoder {
public:
    RecordDecoder(std::string_view line, std::size_t line_no, ParseOptions options,
                  std::vector<Diagnostic>& diagnostics)
        : line_no_(line_no), options_(options), diagnostics_(diagnostics) {
        tokens_ = split(line, ';');
    }

    UmlClass decode() {
        if (tokens_.size() < 2 || !tokens_.back().empty()) {
            fail(codes::kMalformedRecord, "record must end with ';'", tokens_.size());
        }
        tokens_.pop_back();

        UmlClass result;
        const auto name = next("class name");
        if (!is_valid_identifier(name)) {
            fail(codes::kMalformedRecord, "class name must be non-empty and free of ':'", pos_);
        }
        result.name = std::string(name);
        class_name_ = result.name;

        const auto attribute_count = count("Number-of-Attributes");
        for (std::size_t i = 0; i < attribute_count; ++i) {
            result.attributes.push_back(attribute(i, attribute_count));
        }
        const auto method_count = count("Number-of-Methods");
        for (std::size_t i = 0; i < method_count; ++i) {
            result.methods.push_back(method(i, method_count));
        }
        for (RelationKind kind : kAllRelationKinds) {
            const auto n = count(std::string("number of ") + std::string(to_string(kind)) + "s");
            for (std::size_t i = 0; i < n; ++i) {
                result.relationships.push_back(relationship(kind, i, n));
            }
        }

        if (pos_ < tokens_.size()) {
            const auto surplus = tokens_.size() - pos_;
            if (!options_.strict && surplus == 1 && all_digits(tokens_[pos_])) {
                diagnostics_.push_back(make_warning(
                    codes::kTrailingToken,
                    "skipped surplus trailing token '" + std::string(tokens_[pos_]) + "'",
                    location(pos_ + 1)));
            } else {
                fail(codes::kMalformedRecord,
                     std::to_string(surplus) + " surplus token(s) after the last relationship",
                     pos_ + 1);
            }
        }
        return result;
    }

private:
    Location location(std::size_t token) const {
        Location loc;
        loc.line = line_no_;
        loc.token = token;
        loc.class_name = class_name_;
        return loc;
    }

    [[noreturn]] void fail(std::string_view code, std::string message, std::size_t token) const {
        throw RecordFailure{make_error(code, std::move(message), location(token))};
    }

    std::string_view next(std::string_view what) {
        if (pos_ >= tokens_.size()) {
            fail(codes::kMalformedRecord,
                 "record ends early: expected " + std::string(what), tokens_.size());
        }
        return tokens_[pos_++];
    }

    std::size_t count(const std::string& what) {
        const auto token = next(what);
        if (token.find(':') != std::string_view::npos) {
            fail(codes::kMalformedRecord,
                 "expected " + what + " but found entry '" + std::string(token) +
                     "'; a preceding count does not match its entries",
                 pos_);
        }
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (!all_digits(token) || ec != std::errc{} || ptr != token.data() + token.size()) {
            fail(codes::kBadCount, what + " '" + std::string(token) + "' is not a non-negative integer",
                 pos_);
        }
        return value;
    }

    // Splits an entry into exactly `arity` non-empty ':' fields.
    std::vector<std::string_view> tuple(std::string_view what, std::size_t index,
                                        std::size_t declared, std::size_t arity) {
        const auto token = next(what);
        const auto fields = split(token, ':');
        if (fields.size() == 1) {
            fail(codes::kMalformedRecord,
                 "count declares " + std::to_string(declared) + " " + std::string(what) +
                     "(s) but entry " + std::to_string(index + 1) + " is '" + std::string(token) + "'",
                 pos_);
        }
        if (fields.size() != arity) {
            fail(codes::kBadTuple,
                 std::string(what) + " '" + std::string(token) + "' must have " +
                     std::to_string(arity) + " ':'-separated fields",
                 pos_);
        }
        for (auto field : fields) {
            if (field.empty()) {
                fail(codes::kBadTuple,
                     std::string(what) + " '" + std::string(token) + "' has an empty field", pos_);
            }
        }
        return fields;
    }

    Visibility visibility(std::string_view token) const {
        try {
            return parse_visibility(token);
        } catch (const Error& e) {
            fail(e.code(), e.diagnostic().message, pos_);
        }
    }

    Attribute attribute(std::size_t index, std::size_t declared) {
        const auto fields = tuple("attribute", index, declared, 3);
        Attribute a;
        a.name = std::string(fields[0]);
        a.type_name = std::string(fields[1]);
        a.visibility = visibility(fields[2]);
        const auto default_token = next("attribute default value");
        if (!default_token.empty()) a.default_value = std::string(default_token);
        return a;
    }

    Method method(std::size_t index, std::size_t declared) {
        const auto fields = tuple("method", index, declared, 3);
        return Method{std::string(fields[0]), std::string(fields[1]), visibility(fields[2])};
    }

    Relationship relationship(RelationKind kind, std::size_t index, std::size_t declared) {
        const auto what = to_string(kind);
        if (kind == RelationKind::Generalization) {
            const auto target = next("generalization target");
            if (!is_valid_identifier(target)) {
                fail(codes::kBadTuple,
                     "generalization target '" + std::string(target) +
                         "' must be a single class name",
                     pos_);
            }
            return Relationship::generalization(std::string(target));
        }
        const auto fields = tuple(what, index, declared, 2);
        Cardinality cardinality;
        try {
            cardinality = parse_cardinality(fields[0]);
        } catch (const Error& e) {
            fail(e.code(), e.diagnostic().message, pos_);
        }
        if (options_.strict && !is_standard_cardinality(cardinality)) {
            diagnostics_.push_back(make_warning(
                codes::kNonStandardCardinality,
                "cardinality '" + std::string(fields[0]) +
                    "' is outside the documented set {0..*, 1..*, 0..1, 1}",
                location(pos_)));
        }
        return Relationship(kind, cardinality, std::string(fields[1]));
    }

    std::vector<std::string_view> tokens_;
    std::size_t pos_ = 0;
    std::size_t line_no_;
    ParseOptions options_;
    std::string class_name_;
    std::vector<Diagnostic>& diagnostics_;
};

void check_encodable(std::string_view name, std::string_view what) {
    if (!is_valid_identifier(name)) {
        throw std::invalid_argument(std::string(what) + " '" + std::string(name) +
                                    "' cannot be codified");
    }
}

}  // namespace

ParseResult parse_codification(std::string_view text, ParseOptions options) {
    ParseResult result;
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    std::size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        const auto line = trim(raw);
        if (line.empty()) continue;

        // Warnings raised while decoding a record that later fails are dropped
        // with it.
        std::vector<Diagnostic> record_diagnostics;
        RecordDecoder decoder(line, line_no, options, record_diagnostics);
        try {
            result.diagram.classes.push_back(decoder.decode());
            for (auto& d : record_diagnostics) result.diagnostics.push_back(std::move(d));
        } catch (const RecordFailure& failure) {
            result.diagnostics.push_back(failure.diagnostic);
        }
    }
    return result;
}

std::string emit_codification(const Diagram& diagram) {
    std::string out;
    for (const auto& c : diagram.classes) {
        check_encodable(c.name, "class name");
        out += c.name;
        out += ';';
        out += std::to_string(c.attributes.size()) + ';';
        for (const auto& a : c.attributes) {
            check_encodable(a.name, "attribute name");
            check_encodable(a.type_name, "attribute type");
            out += a.name + ':' + a.type_name + ':' + std::string(to_string(a.visibility)) + ';';
            if (a.default_value) {
                if (a.default_value->empty() || a.default_value->find_first_of(";\r\n") != std::string::npos) {
                    throw std::invalid_argument("default value of '" + a.name + "' cannot be codified");
                }
                out += *a.default_value;
            }
            out += ';';
        }
        out += std::to_string(c.methods.size()) + ';';
        for (const auto& m : c.methods) {
            check_encodable(m.name, "method name");
            check_encodable(m.return_type, "method type");
            out += m.name + ':' + m.return_type + ':' + std::string(to_string(m.visibility)) + ';';
        }
        for (RelationKind kind : kAllRelationKinds) {
            std::vector<const Relationship*> group;
            for (const auto& r : c.relationships) {
                if (r.kind() == kind) group.push_back(&r);
            }
            out += std::to_string(group.size()) + ';';
            for (const auto* r : group) {
                check_encodable(r->target(), "relationship target");
                if (r->cardinality()) out += format_cardinality(*r->cardinality()) + ':';
                out += r->target() + ';';
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace umlxml
