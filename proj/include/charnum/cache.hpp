#pragma once

// Memo-table persistence: a versioned key/value text file, one line per
// entry ("<canonical query> <decimal value>"), loaded at startup and written
// atomically (temp file + rename).  A file with a different version line is
// treated as a cold cache.  Cached values are exact, so hits are
// bit-identical to recomputation.

#include <filesystem>
#include <fstream>
#include <string>

#include "charnum/errors.hpp"
#include "charnum/recursion.hpp"

namespace charnum {

inline constexpr std::string_view kCacheHeader = "charnum-cache 1";

// Returns the number of entries loaded; a missing file or a version mismatch
// loads nothing.  Malformed entries raise an error (a corrupt cache should
// not be silently half-used).
inline std::size_t load_cache_file(Engine& engine, const std::string& path) {
    std::ifstream in(path);
    if (!in)
        return 0;
    std::string line;
    if (!std::getline(in, line) || line != kCacheHeader)
        return 0;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const std::size_t sep = line.find(' ');
        if (sep == std::string::npos)
            throw error("cache file " + path + ": malformed line '" + line + "'");
        auto query = Query::from_cache_key(std::string_view(line).substr(0, sep));
        if (!query)
            throw error("cache file " + path + ": bad query key in '" + line + "'");
        Int value;
        try {
            value = Int(line.substr(sep + 1));
        } catch (const std::exception&) {
            throw error("cache file " + path + ": bad value in '" + line + "'");
        }
        engine.adopt_memo_entry(*query, std::move(value));
        ++count;
    }
    return count;
}

inline void save_cache_file(const Engine& engine, const std::string& path) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw error("cannot write cache file " + tmp.string());
        out << kCacheHeader << '\n';
        for (const auto& [query, value] : engine.memo())
            out << query.cache_key() << ' ' << value.str() << '\n';
        out.flush();
        if (!out)
            throw error("failed while writing cache file " + tmp.string());
    }
    fs::rename(tmp, target);
}

} // namespace charnum
