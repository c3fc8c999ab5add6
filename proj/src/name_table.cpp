#include "vedanga/name_table.hpp"

#include <fstream>

#include "vedanga/errors.hpp"

namespace vedanga {

NameTable NameTable::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open name table: " + path.string());
    NameTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto sep = line.find_first_of(" \t", first);
        if (sep == std::string::npos)
            throw DomainError(path.string() + ":" + std::to_string(lineno) +
                              ": expected '<index> <name>'");
        std::uint32_t key = 0;
        try {
            key = static_cast<std::uint32_t>(std::stoul(line.substr(first, sep - first)));
        } catch (const std::exception&) {
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": bad index '" +
                              line.substr(first, sep - first) + "'");
        }
        const auto name_start = line.find_first_not_of(" \t", sep);
        if (name_start == std::string::npos)
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": empty name");
        auto name_end = line.find_last_not_of(" \t");
        table.set(key, line.substr(name_start, name_end - name_start + 1));
    }
    return table;
}

void NameTable::set(std::uint32_t key, std::string name) {
    reverse_[name] = key;
    names_[key] = std::move(name);
}

std::optional<std::string> NameTable::name(std::uint32_t key) const {
    const auto it = names_.find(key);
    if (it == names_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::uint32_t> NameTable::key(const std::string& name) const {
    const auto it = reverse_.find(name);
    if (it == reverse_.end()) return std::nullopt;
    return it->second;
}

}  // namespace vedanga
