#include "umlxml/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "umlxml/codec.hpp"
#include "umlxml/generator.hpp"
#include "umlxml/schema.hpp"
#include "umlxml/validator.hpp"
#include "umlxml/xml.hpp"

namespace umlxml::cli {

namespace {

namespace fs = std::filesystem;

std::optional<std::string> read_file(const std::string& path, std::ostream& err) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        err << "error: cannot open '" << path << "' for reading\n";
        return std::nullopt;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        err << "error: failed reading '" << path << "'\n";
        return std::nullopt;
    }
    return buffer.str();
}

// Outputs are staged next to their destination and renamed into place only
// once every output of the command has been written.
class OutputSet {
public:
    OutputSet(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}
    ~OutputSet() {
        for (const auto& s : staged_) {
            std::error_code ec;
            fs::remove(s.temp, ec);
        }
    }

    bool add(const std::string& path, const std::string& content) {
        if (path == "-") {
            stdout_.push_back(content);
            return true;
        }
        Staged s{path, path + ".tmp" + std::to_string(staged_.size())};
        std::ofstream file(s.temp, std::ios::binary | std::ios::trunc);
        file << content;
        file.close();
        staged_.push_back(s);
        if (!file) {
            err_ << "error: cannot write '" << path << "'\n";
            return false;
        }
        return true;
    }

    bool commit() {
        for (const auto& s : staged_) {
            std::error_code ec;
            fs::rename(s.temp, s.path, ec);
            if (ec) {
                err_ << "error: cannot write '" << s.path << "': " << ec.message() << '\n';
                return false;
            }
        }
        staged_.clear();
        for (const auto& text : stdout_) out_ << text;
        out_.flush();
        return true;
    }

private:
    struct Staged {
        std::string path;
        std::string temp;
    };
    std::ostream& out_;
    std::ostream& err_;
    std::vector<Staged> staged_;
    std::vector<std::string> stdout_;
};

void print(const std::vector<Diagnostic>& diagnostics, std::ostream& err) {
    for (const auto& d : diagnostics) err << d.to_string() << '\n';
}

std::string report_json(const std::vector<Diagnostic>& diagnostics) {
    auto records = nlohmann::json::array();
    for (const auto& d : diagnostics) {
        records.push_back({{"severity", std::string(to_string(d.severity))},
                           {"code", d.code},
                           {"message", d.message},
                           {"location", d.location.to_string()}});
    }
    return records.dump(2) + "\n";
}

struct Pipeline {
    std::vector<Diagnostic> diagnostics;
    std::optional<Diagram> diagram;
    ExitStatus status = ExitStatus::Success;
};

// Reads and validates a codification file: the first two pipeline stages.
Pipeline read_and_validate(const std::string& input, bool lenient, std::ostream& err) {
    Pipeline p;
    auto text = read_file(input, err);
    if (!text) {
        p.status = ExitStatus::IoError;
        return p;
    }
    auto parsed = parse_codification(*text, ParseOptions{.strict = !lenient});
    p.diagnostics = std::move(parsed.diagnostics);
    if (has_errors(p.diagnostics)) {
        p.status = ExitStatus::ParseError;
        return p;
    }
    auto findings = validate_diagram(parsed.diagram);
    p.diagnostics.insert(p.diagnostics.end(), findings.begin(), findings.end());
    if (has_errors(findings)) {
        p.status = ExitStatus::DiagramInvalid;
        return p;
    }
    p.diagram = std::move(parsed.diagram);
    return p;
}

ExitStatus finish(const Pipeline& p, const std::string& report_path, std::ostream& out, std::ostream& err) {
    print(p.diagnostics, err);
    if (report_path.empty()) return p.status;
    OutputSet report(out, err);
    if (!report.add(report_path, report_json(p.diagnostics)) || !report.commit()) {
        return p.status == ExitStatus::Success ? ExitStatus::IoError : p.status;
    }
    return p.status;
}

ExitStatus convert(const std::string& input, const std::string& output, const std::string& xsd_path,
                   bool lenient, const std::string& report_path, std::ostream& out, std::ostream& err) {
    Pipeline p = read_and_validate(input, lenient, err);
    if (p.status != ExitStatus::Success) return finish(p, report_path, out, err);

    const XmlNode document = generate_document(*p.diagram);
    auto self_check = validate_document(document, embedded_model());
    if (!self_check.empty()) {
        p.diagnostics.insert(p.diagnostics.end(), self_check.begin(), self_check.end());
        p.status = ExitStatus::OutputInvalid;
        return finish(p, report_path, out, err);
    }

    OutputSet outputs(out, err);
    bool written = outputs.add(output, serialize(document, true));
    if (written && !xsd_path.empty()) written = outputs.add(xsd_path, std::string(embedded_schema_text()));
    if (!written || !outputs.commit()) p.status = ExitStatus::IoError;
    return finish(p, report_path, out, err);
}

ExitStatus check_xml(const std::string& input, const std::string& report_path, std::ostream& out,
                     std::ostream& err) {
    Pipeline p;
    auto text = read_file(input, err);
    if (!text) return ExitStatus::IoError;
    try {
        const XmlNode root = parse_xml(*text);
        p.diagnostics = validate_document(root, embedded_model());
        if (!p.diagnostics.empty()) p.status = ExitStatus::DiagramInvalid;
    } catch (const Error& e) {
        p.diagnostics.push_back(e.diagnostic());
        p.status = ExitStatus::ParseError;
    }
    return finish(p, report_path, out, err);
}

}  // namespace

ExitStatus run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convert UML class diagram codifications into schema-validated XML", "umlxml"};
    app.require_subcommand(1);

    std::string input, output, xsd_path, report_path;
    bool lenient = false;

    auto* convert_cmd = app.add_subcommand("convert", "Parse, validate and convert a diagram to XML");
    convert_cmd->add_option("input", input, "Codification file (.uml)")->required();
    convert_cmd->add_option("-o,--output", output, "Output XML file, or - for standard output")->required();
    convert_cmd->add_option("--xsd", xsd_path, "Also write the schema to this file");
    convert_cmd->add_flag("--lenient", lenient, "Skip a surplus trailing numeric token per record");
    convert_cmd->add_option("--report", report_path, "Write diagnostics as JSON to this file");

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a diagram without converting it");
    validate_cmd->add_option("input", input, "Codification file (.uml)")->required();
    validate_cmd->add_flag("--lenient", lenient, "Skip a surplus trailing numeric token per record");
    validate_cmd->add_option("--report", report_path, "Write diagnostics as JSON to this file");

    auto* check_cmd = app.add_subcommand("check-xml", "Validate an XML document against the embedded schema");
    check_cmd->add_option("input", input, "XML file")->required();
    check_cmd->add_option("--report", report_path, "Write diagnostics as JSON to this file");

    auto* xsd_cmd = app.add_subcommand("emit-xsd", "Write the embedded schema");
    xsd_cmd->add_option("-o,--output", output, "Output file, or - for standard output")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitStatus::Success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitStatus::Success;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return ExitStatus::Usage;
    }

    if (convert_cmd->parsed()) {
        return convert(input, output, xsd_path, lenient, report_path, out, err);
    }
    if (validate_cmd->parsed()) {
        return finish(read_and_validate(input, lenient, err), report_path, out, err);
    }
    if (check_cmd->parsed()) return check_xml(input, report_path, out, err);

    OutputSet outputs(out, err);
    if (!outputs.add(output, std::string(embedded_schema_text())) || !outputs.commit()) {
        return ExitStatus::IoError;
    }
    return ExitStatus::Success;
}

}  // namespace umlxml::cli
