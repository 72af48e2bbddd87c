#include "forge/corpus/dedup.hpp"

#include <memory>

#include <nlohmann/json.hpp>

#include "forge/core/jsonl.hpp"

namespace forge::corpus {

bool SeenIds::insert(std::string_view id) {
    std::lock_guard lock(mutex_);
    return ids_.insert(std::string(id)).second;
}

std::size_t SeenIds::size() const {
    std::lock_guard lock(mutex_);
    return ids_.size();
}

DedupStats dedup_exact(const std::vector<Document>& docs, std::vector<Document>& kept,
                       const std::string& drop_log_path) {
    SeenIds seen;
    std::unique_ptr<jsonl::Writer> log;
    if (!drop_log_path.empty()) log = std::make_unique<jsonl::Writer>(drop_log_path);

    DedupStats stats;
    for (std::size_t pos = 0; pos < docs.size(); ++pos) {
        if (seen.insert(docs[pos].id)) {
            ++stats.kept;
            kept.push_back(docs[pos]);
        } else {
            ++stats.dropped;
            if (log) log->write({{"id", docs[pos].id}, {"position", pos}});
        }
    }
    return stats;
}

} // namespace forge::corpus
