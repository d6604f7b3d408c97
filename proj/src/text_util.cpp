#include "radkg/text_util.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "radkg/errors.hpp"

namespace radkg::text {

namespace {

bool is_word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.emplace_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

bool has_digit(std::string_view s) {
    for (char c : s)
        if (std::isdigit(static_cast<unsigned char>(c))) return true;
    return false;
}

bool is_punct_token(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (is_word_char(c)) return false;
    return true;
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const std::size_t n = sentence.size();
    while (i < n) {
        char c = sentence[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (is_word_char(c)) {
            std::size_t j = i + 1;
            while (j < n) {
                char d = sentence[j];
                if (is_word_char(d)) {
                    ++j;
                } else if ((d == '-' || d == '.' || d == '\'') && j + 1 < n &&
                           is_word_char(sentence[j + 1])) {
                    // internal hyphen, decimal point or apostrophe
                    j += 2;
                } else {
                    break;
                }
            }
            tokens.emplace_back(sentence.substr(i, j - i));
            i = j;
        } else {
            tokens.emplace_back(1, c);
            ++i;
        }
    }
    return tokens;
}

std::vector<std::string> metric_tokens(std::string_view sentence) {
    std::vector<std::string> out;
    for (const auto& t : tokenize(sentence)) {
        if (is_punct_token(t)) continue;
        out.push_back(lower(t));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::pair<std::size_t, std::vector<std::string>>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') continue;
        rows.emplace_back(line_no, split(line, '\t'));
    }
    return rows;
}

}  // namespace radkg::text
