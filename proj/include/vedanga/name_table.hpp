// name_table.hpp - key-value name tables shared by the calendar and codec
#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>

namespace vedanga {

/// Display names keyed by 1-based ordinal, loaded from UTF-8 text files of
/// "<index> <name...>" lines ('#' starts a comment). Lookup misses simply
/// fall back to ordinals at the rendering layer, so tables stay optional.
class NameTable {
public:
    NameTable() = default;

    static NameTable from_file(const std::filesystem::path& path);

    void set(std::uint32_t key, std::string name);

    std::optional<std::string> name(std::uint32_t key) const;
    std::optional<std::uint32_t> key(const std::string& name) const;

    bool empty() const { return names_.empty(); }
    std::size_t size() const { return names_.size(); }

private:
    std::map<std::uint32_t, std::string> names_;
    std::unordered_map<std::string, std::uint32_t> reverse_;
};

}  // namespace vedanga
