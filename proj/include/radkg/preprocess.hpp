#pragma once

#include <regex>
#include <string>
#include <vector>

#include "radkg/spell.hpp"

namespace radkg {

enum class ScanType { Ultrasound, Ct, Mri, Xray, Unknown };

struct RawReport {
    std::string report_id;
    std::string body;
    ScanType scan_type = ScanType::Unknown;
};

struct ReportSections {
    std::string header;
    std::string history;
    std::string findings;
    std::string impression;
};

// One header matcher per line of the section-pattern config, in file order.
struct SectionPattern {
    std::string section;  // header | history | findings | impression
    std::string pattern;
    std::regex regex;
};

std::vector<SectionPattern> load_section_patterns(const std::string& path);

// Partitions the body at header lines; text before the first header lands in
// `header`. Throws NoFindingsSection when neither findings nor impression
// headers match.
ReportSections segment_report(const RawReport& report,
                              const std::vector<SectionPattern>& patterns);

// Terminator split protecting decimals ("9.6 x 4.0 cm") and abbreviations.
std::vector<std::string> split_sentences(const std::string& section_text);

// Per-token cleanup of one sentence: spell correction plus compound-word
// splitting, leaving digit-bearing tokens untouched.
std::string clean_sentence(const std::string& sentence, const SpellIndex& index);

struct CleanSentence {
    std::string report_id;
    std::size_t sentence_index = 0;
    std::string text;
};

std::vector<CleanSentence> preprocess_report(const RawReport& report,
                                             const std::vector<SectionPattern>& patterns,
                                             const SpellIndex& index);

}  // namespace radkg
