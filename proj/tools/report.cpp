#include "report.hpp"

#include <iomanip>
#include <sstream>

namespace sqroot::cli {

nlohmann::json PipelineReport::to_json() const
{
    nlohmann::json doc;
    doc["schema_version"] = schema_version;
    doc["command"] = command;
    doc["exit_status"] = exit_status;
    doc["stages"] = nlohmann::json::array();
    for (const auto& s : stages) {
        nlohmann::json entry{{"name", s.name}, {"ok", s.ok}, {"seconds", s.seconds}, {"details", s.details}};
        if (!s.error.empty())
            entry["error"] = s.error;
        doc["stages"].push_back(std::move(entry));
    }
    return doc;
}

std::string PipelineReport::to_text() const
{
    std::ostringstream out;
    out << command << '\n';
    for (const auto& s : stages) {
        out << "  " << std::left << std::setw(22) << s.name << (s.ok ? "ok  " : "FAIL") << "  " << std::fixed
            << std::setprecision(3) << s.seconds << "s";
        for (const auto& [key, value] : s.details.items())
            out << "  " << key << '=' << (value.is_string() ? value.get<std::string>() : value.dump());
        out << '\n';
        if (!s.error.empty())
            out << "    error: " << s.error << '\n';
    }
    out << "exit status " << exit_status << '\n';
    return out.str();
}

const StageResult* PipelineReport::find(const std::string& name) const
{
    for (const auto& s : stages)
        if (s.name == name)
            return &s;
    return nullptr;
}

} // namespace sqroot::cli
