#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cy/theta_op.hpp"

namespace cy {

struct DatasetRecord {
    std::string id;
    ThetaOperator op;
    std::optional<std::string> formula; // DSL source text
    std::vector<std::pair<long, Rat>> base_cases;
    std::vector<std::string> notes; // reflection-of:<id>, same-kq-as:<id>, ...

    bool has_note(const std::string& tag) const {
        for (const auto& n : notes)
            if (n == tag) return true;
        return false;
    }
    std::optional<std::string> note_value(const std::string& prefix) const;
};

struct CyopParsed {
    ThetaOperator op;
    std::string id;
};

CyopParsed parse_cyop(const std::string& text);

std::string serialize_cyop(const ThetaOperator& op, const std::string& id = "");

std::vector<DatasetRecord> load_dataset(const std::string& path);
std::vector<DatasetRecord> parse_dataset(const std::string& text);

const DatasetRecord& find_record(const std::vector<DatasetRecord>& db,
                                 const std::string& id);

} // namespace cy
