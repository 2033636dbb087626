#include "lensurg/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "lensurg/io.hpp"

namespace lensurg {

namespace fs = std::filesystem;

EmbeddingCache::EmbeddingCache(fs::path dir, std::ostream* warnings) : dir_(std::move(dir)), warnings_(warnings) {}

std::uint64_t EmbeddingCache::fnv1a(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

namespace {

std::string hex(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << v;
    return out.str();
}

}  // namespace

std::string EmbeddingCache::key_for(std::span<const Integer> coefficients) { return "embed:" + format_terms(coefficients); }

fs::path EmbeddingCache::path_for(const std::string& key) const { return dir_ / (hex(fnv1a(key)) + ".json"); }

std::optional<fs::path> EmbeddingCache::default_dir() {
    if (const char* d = std::getenv("LENSURG_CACHE_DIR"); d && *d) return fs::path(d);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "lensurg";
    if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "lensurg";
    return std::nullopt;
}

void EmbeddingCache::warn(const std::string& message) {
    if (!warnings_) return;
    std::lock_guard lock(warn_mutex_);
    *warnings_ << "warning: " << message << '\n';
}

std::optional<std::vector<LatticeEmbedding>> EmbeddingCache::load(const std::string& key) {
    const fs::path path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        const Json record = Json::parse(in);
        if (record.at("key").get<std::string>() != key) {
            warn("cache record " + path.string() + " holds another key; recomputing");
            return std::nullopt;
        }
        const Json& payload = record.at("payload");
        if (record.at("checksum").get<std::string>() != hex(fnv1a(payload.dump()))) {
            warn("cache record " + path.string() + " fails its checksum; recomputing");
            return std::nullopt;
        }
        std::vector<LatticeEmbedding> out;
        for (const auto& m : payload) out.push_back(matrix_from_json(m));
        return out;
    } catch (const std::exception& e) {
        warn("cache record " + path.string() + " is unreadable (" + e.what() + "); recomputing");
        return std::nullopt;
    }
}

void EmbeddingCache::store(const std::string& key, const std::vector<LatticeEmbedding>& embeddings) {
    Json payload = Json::array();
    for (const auto& e : embeddings) payload.push_back(to_json(e));
    const std::string checksum = hex(fnv1a(payload.dump()));
    const Json record{{"key", key}, {"payload", std::move(payload)}, {"checksum", checksum}};

    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path path = path_for(key);
    // write then rename, so concurrent writers never leave a torn record
    std::ostringstream tag;
    tag << std::this_thread::get_id();
    const fs::path tmp = path.string() + ".tmp" + std::to_string(std::hash<std::string>{}(tag.str()));
    {
        std::ofstream out(tmp);
        if (!out) {
            warn("cannot write cache record " + tmp.string());
            return;
        }
        out << record.dump() << '\n';
    }
    fs::rename(tmp, path, ec);
    if (ec) warn("cannot move cache record into place: " + ec.message());
}

EmbeddingCache::Result EmbeddingCache::embeddings(std::span<const Integer> coefficients) {
    const std::string key = key_for(coefficients);
    if (auto found = load(key)) return {std::move(*found), true};
    Result r{find_embeddings(form_from_string(coefficients)), false};
    store(key, r.embeddings);
    return r;
}

std::vector<LatticeEmbedding> cached_embeddings(EmbeddingCache* cache, std::span<const Integer> coefficients) {
    if (!cache) return find_embeddings(form_from_string(coefficients));
    return cache->embeddings(coefficients).embeddings;
}

}  // namespace lensurg
