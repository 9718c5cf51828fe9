#include "acbm/report.hpp"

#include <json.hpp>  // vendored nlohmann/json single header

namespace acbm {

using ordered_json = nlohmann::ordered_json;

std::string to_json(const Report& report) {
    ordered_json checks = ordered_json::array();
    for (const auto& e : report.entries) {
        ordered_json entry;
        entry["name"] = e.name;
        entry["verdict"] = e.pass ? "pass" : "fail";
        if (!e.detail.empty()) entry["detail"] = e.detail;
        if (e.witness) entry["witness"] = *e.witness;
        if (!e.components.empty()) {
            ordered_json comps;
            for (const auto& [k, v] : e.components) comps[k] = v;
            entry["components"] = comps;
        }
        checks.push_back(std::move(entry));
    }
    ordered_json root;
    root["checks"] = std::move(checks);
    root["passed"] = report.passed();
    root["total"] = report.entries.size();
    root["ok"] = report.all_pass();
    return root.dump(2) + "\n";
}

std::string to_text(const Report& report) {
    std::string out;
    for (const auto& e : report.entries) {
        out += e.pass ? "[PASS] " : "[FAIL] ";
        out += e.name;
        if (!e.detail.empty()) out += "  (" + e.detail + ")";
        out += '\n';
        if (e.witness) out += "       witness " + *e.witness + "\n";
        for (const auto& [k, v] : e.components) out += "       " + k + " = " + v + "\n";
    }
    out += "summary: " + std::to_string(report.passed()) + "/" +
           std::to_string(report.entries.size()) + " checks passed\n";
    return out;
}

std::string witness_string(const std::vector<int>& indices_zero_based, const std::string& residual) {
    std::string out = "(";
    for (std::size_t i = 0; i < indices_zero_based.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_zero_based[i] + 1);
    }
    out += ")";
    if (!residual.empty()) out += ": residual = " + residual;
    return out;
}

}  // namespace acbm
