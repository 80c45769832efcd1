#include "wblocks/cli/cache.hpp"

#include "wblocks/error.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

namespace wblocks::cli {

namespace fs = std::filesystem;

fs::path Cache::default_dir()
{
    if (const char* env = std::getenv("WBLOCKS_CACHE_DIR"); env && *env)
        return env;
    return "cache";
}

std::string Cache::hash(const std::string& request)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : request) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

fs::path Cache::path_for(const std::string& request) const
{
    return dir_ / (hash(request) + ".json");
}

std::optional<std::string> Cache::get(const std::string& request) const
{
    if (!enabled_)
        return std::nullopt;
    std::ifstream in(path_for(request));
    if (!in)
        return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    // a hash collision or a damaged file counts as a miss
    if (j.is_discarded() || !j.is_object() || j.value("request", "") != request || !j.contains("payload"))
        return std::nullopt;
    return j["payload"].get<std::string>();
}

void Cache::put(const std::string& request, const std::string& payload) const
{
    if (!enabled_)
        return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec)
        throw ResourceError("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const fs::path final_path = path_for(request);
    std::random_device rd;
    fs::path tmp = final_path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out)
            throw ResourceError("cannot write cache file " + tmp.string());
        out << nlohmann::json{{"request", request}, {"payload", payload}}.dump();
        if (!out)
            throw ResourceError("cannot write cache file " + tmp.string());
    }
    fs::rename(tmp, final_path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw ResourceError("cannot install cache file " + final_path.string());
    }
}

} // namespace wblocks::cli
