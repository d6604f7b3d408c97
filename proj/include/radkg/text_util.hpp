#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace radkg::text {

std::string lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool has_digit(std::string_view s);
bool is_punct_token(std::string_view s);

// Word-level tokenizer shared by the annotator, the metrics and the
// preprocessor: keeps internal hyphens ("non-enhancing") and decimal points
// ("9.6") inside one token, emits sentence punctuation as separate tokens.
std::vector<std::string> tokenize(std::string_view sentence);

// Metric tokenization: lowercased word tokens, terminal punctuation dropped,
// measurement tokens kept whole.
std::vector<std::string> metric_tokens(std::string_view sentence);

// Reads a whole file; throws radkg::ConfigError when the file cannot be read.
std::string read_file(const std::string& path);

// TSV reader skipping blank lines and '#' comments; returns (line_no, columns).
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_tsv(const std::string& path);

}  // namespace radkg::text
