#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace radkg {

// Symmetric-delete spelling index: every dictionary term is indexed under all
// of its deletion variants up to max_edit_distance, so lookup only has to
// generate deletions of the query and never scans the alphabet.
class SpellIndex {
public:
    SpellIndex() = default;
    SpellIndex(const std::map<std::string, std::uint64_t>& word_frequencies,
               int max_edit_distance);

    static SpellIndex from_file(const std::string& path, int max_edit_distance = 2);

    int max_edit_distance() const { return max_edit_distance_; }
    std::size_t term_count() const { return terms_.size(); }
    std::size_t deletion_key_count() const { return deletion_index_.size(); }
    bool contains(const std::string& term) const { return terms_.count(term) > 0; }
    std::uint64_t frequency(const std::string& term) const;

    // Best in-dictionary candidate within max_edit_distance, ranked by
    // (edit distance, frequency desc, lexicographic). Returns the token
    // unchanged when it is known, exempt or has no candidate.
    std::string correct(const std::string& token) const;

    // Splits a run-together token into the dictionary-word sequence that
    // maximises the product of unigram frequencies; [token] when no full
    // split exists.
    std::vector<std::string> segment(const std::string& token) const;

    // Deletion variants of a term up to `distance` (the term itself excluded).
    static std::unordered_set<std::string> deletion_variants(const std::string& term,
                                                             int distance);

    // Optimal string alignment distance (Damerau-Levenshtein without
    // substring reuse), capped at `max_dist + 1`.
    static int edit_distance(const std::string& a, const std::string& b, int max_dist);

    static bool exempt(const std::string& token);

private:
    int max_edit_distance_ = 2;
    std::size_t longest_term_ = 0;
    std::unordered_map<std::string, std::uint64_t> terms_;
    std::unordered_map<std::string, std::vector<std::string>> deletion_index_;
};

}  // namespace radkg
