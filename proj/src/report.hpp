#pragma once

// Record serialization shared by the CLI commands.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace binlab::cli {

enum class Format { JsonLines, Csv, Human };

/// Throws std::invalid_argument.
Format parse_format(const std::string& text);

/// Streams records with a fixed column order. json-lines is canonical; csv and
/// human are projections of the same columns. Human output is buffered so
/// columns can be aligned.
class ReportWriter {
public:
    ReportWriter(Format format, std::vector<std::string> columns, std::ostream& out);

    void write(const nlohmann::ordered_json& record);

    /// Emits buffered rows. The summary goes to `out` for human format and to
    /// `err` otherwise so machine streams stay homogeneous.
    void finish(const std::string& summary, std::ostream& err);

private:
    std::string cell(const nlohmann::ordered_json& value) const;

    Format format_;
    std::vector<std::string> columns_;
    std::ostream& out_;
    bool header_written_ = false;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace binlab::cli
