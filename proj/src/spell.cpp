#include "radkg/spell.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "radkg/errors.hpp"
#include "radkg/text_util.hpp"

namespace radkg {

namespace {

const std::unordered_set<std::string> kUnitTokens = {
    "mm", "cm", "cc", "ml", "hu", "mhz", "vol",
};

}  // namespace

SpellIndex::SpellIndex(const std::map<std::string, std::uint64_t>& word_frequencies,
                       int max_edit_distance)
    : max_edit_distance_(max_edit_distance) {
    if (max_edit_distance < 1 || max_edit_distance > 2)
        throw ConfigError("max_edit_distance must be 1 or 2");
    for (const auto& [term, freq] : word_frequencies) {
        if (term.empty() || freq == 0) continue;
        const std::string low = text::lower(term);
        terms_[low] = std::max(terms_[low], freq);
        longest_term_ = std::max(longest_term_, low.size());
    }
    for (const auto& [term, freq] : terms_) {
        for (const auto& variant : deletion_variants(term, max_edit_distance_))
            deletion_index_[variant].push_back(term);
    }
    // Candidate lists are kept sorted so lookups stay order-independent.
    for (auto& [variant, candidates] : deletion_index_) {
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    }
}

SpellIndex SpellIndex::from_file(const std::string& path, int max_edit_distance) {
    std::map<std::string, std::uint64_t> freqs;
    for (const auto& [line_no, cols] : text::read_tsv(path)) {
        if (cols.size() != 2) throw ParseError(line_no, "expected term<TAB>count");
        try {
            freqs[cols[0]] = std::stoull(cols[1]);
        } catch (const std::exception&) {
            throw ParseError(line_no, "count is not a number: " + cols[1]);
        }
    }
    return SpellIndex(freqs, max_edit_distance);
}

std::uint64_t SpellIndex::frequency(const std::string& term) const {
    auto it = terms_.find(term);
    return it == terms_.end() ? 0 : it->second;
}

std::unordered_set<std::string> SpellIndex::deletion_variants(const std::string& term,
                                                              int distance) {
    std::unordered_set<std::string> out;
    std::vector<std::string> frontier = {term};
    for (int d = 0; d < distance; ++d) {
        std::vector<std::string> next;
        for (const auto& word : frontier) {
            if (word.size() <= 1) continue;
            for (std::size_t i = 0; i < word.size(); ++i) {
                std::string shorter = word.substr(0, i) + word.substr(i + 1);
                if (out.insert(shorter).second) next.push_back(shorter);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

int SpellIndex::edit_distance(const std::string& a, const std::string& b, int max_dist) {
    const int cap = max_dist + 1;
    if (std::abs(static_cast<int>(a.size()) - static_cast<int>(b.size())) > max_dist) return cap;
    const std::size_t n = a.size(), m = b.size();
    std::vector<int> prev2(m + 1), prev(m + 1), cur(m + 1);
    for (std::size_t j = 0; j <= m; ++j) prev[j] = static_cast<int>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        cur[0] = static_cast<int>(i);
        int row_min = cur[0];
        for (std::size_t j = 1; j <= m; ++j) {
            int cost = a[i - 1] == b[j - 1] ? 0 : 1;
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + cost});
            if (i > 1 && j > 1 && a[i - 1] == b[j - 2] && a[i - 2] == b[j - 1])
                cur[j] = std::min(cur[j], prev2[j - 2] + 1);
            row_min = std::min(row_min, cur[j]);
        }
        if (row_min > max_dist) return cap;
        std::swap(prev2, prev);
        std::swap(prev, cur);
    }
    return std::min(prev[m], cap);
}

bool SpellIndex::exempt(const std::string& token) {
    if (token.size() <= 1) return true;
    if (text::has_digit(token)) return true;
    return kUnitTokens.count(text::lower(token)) > 0;
}

std::string SpellIndex::correct(const std::string& token) const {
    if (exempt(token)) return token;
    const std::string low = text::lower(token);
    if (terms_.count(low)) return token;

    const int d = max_edit_distance_;
    std::unordered_set<std::string> candidates;
    auto gather = [&](const std::string& key) {
        auto it = deletion_index_.find(key);
        if (it != deletion_index_.end())
            candidates.insert(it->second.begin(), it->second.end());
        if (terms_.count(key)) candidates.insert(key);
    };
    gather(low);
    for (const auto& variant : deletion_variants(low, d)) gather(variant);

    std::string best;
    int best_dist = d + 1;
    std::uint64_t best_freq = 0;
    for (const auto& cand : candidates) {
        int dist = edit_distance(low, cand, d);
        if (dist > d) continue;
        std::uint64_t freq = frequency(cand);
        if (dist < best_dist || (dist == best_dist && freq > best_freq) ||
            (dist == best_dist && freq == best_freq && cand < best)) {
            best = cand;
            best_dist = dist;
            best_freq = freq;
        }
    }
    return best.empty() ? token : best;
}

std::vector<std::string> SpellIndex::segment(const std::string& token) const {
    const std::string low = text::lower(token);
    const std::size_t n = low.size();
    if (n == 0) return {token};

    // DP over split positions maximising the log-frequency sum; fewer
    // segments win ties so known words never split spuriously.
    constexpr double kNoPath = -std::numeric_limits<double>::infinity();
    std::vector<double> score(n + 1, kNoPath);
    std::vector<int> segments(n + 1, std::numeric_limits<int>::max());
    std::vector<std::size_t> back(n + 1, 0);
    score[0] = 0.0;
    segments[0] = 0;
    for (std::size_t end = 1; end <= n; ++end) {
        std::size_t min_start = longest_term_ >= end ? 0 : end - longest_term_;
        for (std::size_t start = min_start; start < end; ++start) {
            if (score[start] == kNoPath) continue;
            auto it = terms_.find(low.substr(start, end - start));
            if (it == terms_.end()) continue;
            double cand = score[start] + std::log(static_cast<double>(it->second));
            int segs = segments[start] + 1;
            if (cand > score[end] || (cand == score[end] && segs < segments[end])) {
                score[end] = cand;
                segments[end] = segs;
                back[end] = start;
            }
        }
    }
    if (score[n] == kNoPath) return {token};

    std::vector<std::string> parts;
    for (std::size_t pos = n; pos > 0; pos = back[pos])
        parts.push_back(low.substr(back[pos], pos - back[pos]));
    std::reverse(parts.begin(), parts.end());
    return parts;
}

}  // namespace radkg
