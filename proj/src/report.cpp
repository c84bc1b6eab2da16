#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace binlab::cli {

Format parse_format(const std::string& text)
{
    if (text == "json-lines" || text == "jsonl") return Format::JsonLines;
    if (text == "csv") return Format::Csv;
    if (text == "human") return Format::Human;
    throw std::invalid_argument("unknown format '" + text + "' (expected json-lines, csv or human)");
}

ReportWriter::ReportWriter(Format format, std::vector<std::string> columns, std::ostream& out)
    : format_(format), columns_(std::move(columns)), out_(out)
{
}

std::string ReportWriter::cell(const nlohmann::ordered_json& value) const
{
    if (value.is_null()) return format_ == Format::Human ? "-" : "";
    if (value.is_string()) {
        const auto& s = value.get_ref<const std::string&>();
        if (format_ == Format::Csv && s.find_first_of(",\"\n") != std::string::npos) {
            std::string quoted = "\"";
            for (char c : s) {
                if (c == '"') quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        }
        return s;
    }
    return value.dump();
}

void ReportWriter::write(const nlohmann::ordered_json& record)
{
    switch (format_) {
    case Format::JsonLines: {
        nlohmann::ordered_json ordered;
        for (const auto& c : columns_) ordered[c] = record.contains(c) ? record.at(c) : nullptr;
        out_ << ordered.dump() << '\n';
        break;
    }
    case Format::Csv: {
        if (!header_written_) {
            for (std::size_t i = 0; i < columns_.size(); ++i) out_ << (i ? "," : "") << columns_[i];
            out_ << '\n';
            header_written_ = true;
        }
        for (std::size_t i = 0; i < columns_.size(); ++i) {
            out_ << (i ? "," : "") << (record.contains(columns_[i]) ? cell(record.at(columns_[i])) : "");
        }
        out_ << '\n';
        break;
    }
    case Format::Human: {
        std::vector<std::string> row;
        for (const auto& c : columns_) row.push_back(record.contains(c) ? cell(record.at(c)) : "-");
        rows_.push_back(std::move(row));
        break;
    }
    }
}

void ReportWriter::finish(const std::string& summary, std::ostream& err)
{
    if (format_ != Format::Human) {
        out_.flush();
        err << summary << '\n';
        return;
    }
    std::vector<std::size_t> width(columns_.size());
    for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out_ << row[i];
            if (i + 1 < row.size()) out_ << std::string(width[i] - row[i].size() + 2, ' ');
        }
        out_ << '\n';
    };
    emit(columns_);
    for (const auto& row : rows_) emit(row);
    out_ << summary << '\n';
    out_.flush();
}

}  // namespace binlab::cli
