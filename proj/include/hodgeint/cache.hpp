#pragma once

#include <algorithm>
#include <istream>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodgeint/errors.hpp"
#include "hodgeint/keys.hpp"
#include "hodgeint/rational.hpp"

namespace hodgeint {

/// Memo table from canonical integral keys to exact values.
///
/// Concurrency contract: reads may happen at any time, inserts are atomic and
/// write-once.  Two threads may race to compute the same key -- they must
/// arrive at the same value, and a slot never changes once written.  An
/// attempt to overwrite a slot with a different value is a fatal bug.
class IntegralCache {
public:
    std::optional<Rat> find(const HodgeKey& key) const {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const HodgeKey& key, const Rat& value) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto [it, fresh] = map_.emplace(key, value);
        if (!fresh && it->second != value)
            throw integrity_error("IntegralCache: conflicting values for key " + key.text());
    }

    size_t size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.size();
    }

    /// One "key<TAB>value" line per entry, sorted by key for determinism.
    void save(std::ostream& os) const {
        std::vector<std::string> lines;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            lines.reserve(map_.size());
            for (const auto& [key, value] : map_) lines.push_back(key.text() + "\t" + value.str());
        }
        std::sort(lines.begin(), lines.end());
        for (const auto& line : lines) os << line << '\n';
    }

    void load(std::istream& is) {
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            size_t tab = line.find('\t');
            if (tab == std::string::npos)
                throw domain_error("IntegralCache: malformed cache line \"" + line + "\"");
            HodgeKey key = parse_hodge_key(line.substr(0, tab));
            insert(key, Rat(line.substr(tab + 1)));
        }
    }

private:
    mutable std::mutex mutex_;
    std::unordered_map<HodgeKey, Rat, HodgeKeyHash> map_;
};

} // namespace hodgeint
