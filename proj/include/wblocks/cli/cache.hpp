#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace wblocks::cli {

/*
 * Content-addressed result cache: <dir>/<fnv1a64(request)>.json. Entries are
 * written to a temporary file and renamed into place.
 */
class Cache {
public:
    // dir from $WBLOCKS_CACHE_DIR, else ./cache
    static std::filesystem::path default_dir();

    Cache(std::filesystem::path dir, bool enabled) : dir_(std::move(dir)), enabled_(enabled) {}
    bool enabled() const { return enabled_; }

    std::optional<std::string> get(const std::string& request) const;
    void put(const std::string& request, const std::string& payload) const;

    static std::string hash(const std::string& request);

private:
    std::filesystem::path path_for(const std::string& request) const;

    std::filesystem::path dir_;
    bool enabled_;
};

} // namespace wblocks::cli
