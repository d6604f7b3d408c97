#pragma once

#include <stdexcept>
#include <string>

namespace radkg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

struct CyclicDependency : Error {
    explicit CyclicDependency(const std::string& sentence_id)
        : Error("cyclic dependency heads in sentence " + sentence_id) {}
};

struct MergeConflict : Error {
    explicit MergeConflict(const std::string& sentence_id)
        : Error("chunk merge produced a cycle in sentence " + sentence_id) {}
};

struct CategoryConflict : Error {
    CategoryConflict(const std::string& surface, const std::string& a, const std::string& b)
        : Error("conflicting categories for '" + surface + "': " + a + " vs " + b) {}
};

struct NoFindingsSection : Error {
    explicit NoFindingsSection(const std::string& report_id)
        : Error("report " + report_id + " has no findings or impression section") {}
};

struct OrphanNode : Error {
    explicit OrphanNode(const std::string& node_id)
        : Error("node unreachable from graph root: " + node_id) {}
};

struct CyclicPartOf : Error {
    explicit CyclicPartOf(const std::string& detail)
        : Error("PartOf hierarchy contains a cycle: " + detail) {}
};

struct NotFound : Error {
    explicit NotFound(const std::string& name) : Error("not found in graph: " + name) {}
};

struct SyntaxError : Error {
    SyntaxError(std::size_t line, const std::string& reason)
        : Error("syntax error at line " + std::to_string(line) + ": " + reason), line(line) {}
    std::size_t line;
};

struct NoTemplate : Error {
    explicit NoTemplate(const std::string& finding_type)
        : Error("no description template for finding type '" + finding_type + "'") {}
};

struct MissingRequiredSlot : Error {
    explicit MissingRequiredSlot(const std::string& slot)
        : Error("required template slot '" + slot + "' could not be filled") {}
};

struct BelowThreshold : Error {
    BelowThreshold(double score, double threshold)
        : Error("best match score " + std::to_string(score) + " below threshold " +
                std::to_string(threshold)),
          score(score) {}
    double score;
};

struct IdMismatch : Error {
    explicit IdMismatch(const std::string& sentence_id)
        : Error("system sentence has no gold counterpart: " + sentence_id) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace radkg
