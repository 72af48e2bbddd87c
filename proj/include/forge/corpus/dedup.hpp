#pragma once

#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "forge/core/document.hpp"

namespace forge::corpus {

// Shared seen-id set; shard workers funnel through this one linearization
// point so first-occurrence wins globally.
class SeenIds {
public:
    // True when the id was not seen before (caller keeps the document).
    bool insert(std::string_view id);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_set<std::string> ids_;
};

struct DedupStats {
    std::size_t kept = 0;
    std::size_t dropped = 0;
};

// Keeps the first occurrence of every canonical id, in stream order. Later
// duplicates go to the drop log ("" skips logging) as {id, position} rows.
DedupStats dedup_exact(const std::vector<Document>& docs, std::vector<Document>& kept,
                       const std::string& drop_log_path = "");

} // namespace forge::corpus
