#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lensurg/lattice.hpp"

namespace lensurg {

/// Content-addressed store of embedding search results, one JSON file per
/// coefficient string: {key, payload, checksum}. Records that fail to parse,
/// carry another key or a wrong checksum are reported on `warnings`,
/// recomputed and overwritten.
class EmbeddingCache {
public:
    explicit EmbeddingCache(std::filesystem::path dir, std::ostream* warnings = nullptr);

    struct Result {
        std::vector<LatticeEmbedding> embeddings;
        bool hit = false;
    };

    Result embeddings(std::span<const Integer> coefficients);

    std::filesystem::path path_for(const std::string& key) const;
    static std::string key_for(std::span<const Integer> coefficients);
    static std::uint64_t fnv1a(std::string_view bytes);

    /// $LENSURG_CACHE_DIR, else $XDG_CACHE_HOME/lensurg, else ~/.cache/lensurg.
    static std::optional<std::filesystem::path> default_dir();

private:
    std::optional<std::vector<LatticeEmbedding>> load(const std::string& key);
    void store(const std::string& key, const std::vector<LatticeEmbedding>& embeddings);
    void warn(const std::string& message);

    std::filesystem::path dir_;
    std::ostream* warnings_;
    std::mutex warn_mutex_;
};

/// Search through the cache when one is given.
std::vector<LatticeEmbedding> cached_embeddings(EmbeddingCache* cache, std::span<const Integer> coefficients);

}  // namespace lensurg
