#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acbm {

/// One named verdict. `witness` pinpoints a failing index tuple (rendered
/// 1-based) with its residual; `components` carries ordered key/value
/// listings such as nonzero tensor components.
struct CheckEntry {
    std::string name;
    bool pass = false;
    std::string detail;
    std::optional<std::string> witness;
    std::vector<std::pair<std::string, std::string>> components;
};

struct Report {
    std::vector<CheckEntry> entries;

    CheckEntry& add(std::string name, bool pass, std::string detail = {}) {
        entries.push_back(CheckEntry{std::move(name), pass, std::move(detail), std::nullopt, {}});
        return entries.back();
    }
    void append(const Report& other) {
        entries.insert(entries.end(), other.entries.begin(), other.entries.end());
    }
    bool all_pass() const {
        for (const auto& e : entries)
            if (!e.pass) return false;
        return true;
    }
    std::size_t passed() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.pass ? 1 : 0;
        return n;
    }
    const CheckEntry* find(const std::string& name) const {
        for (const auto& e : entries)
            if (e.name == name) return &e;
        return nullptr;
    }
};

/// Byte-deterministic JSON rendering (insertion order, two-space indent,
/// trailing newline). Identical reports produce identical bytes.
std::string to_json(const Report& report);

/// Aligned human-readable rendering.
std::string to_text(const Report& report);

/// Renders a 1-based index tuple with residual, e.g. "(5,1,1): residual = ...".
std::string witness_string(const std::vector<int>& indices_zero_based, const std::string& residual);

}  // namespace acbm
