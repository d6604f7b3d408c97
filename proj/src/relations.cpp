#include "radkg/relations.hpp"

#include <array>

namespace radkg {

namespace {

constexpr std::array<const char*, 9> kRelationNames = {
    "PartOf",     "TypeOf",     "ModifierOf",        "ObservationOf", "DefaultObservationOf",
    "PropertyOf", "DefaultPropertyOf", "FoundIn", "ObservedIn",
};

constexpr std::array<const char*, 5> kCategoryNames = {
    "Anatomy", "Finding", "Observation", "Property", "Modifier",
};

}  // namespace

std::string relation_name(LogicalRelation rel) {
    return kRelationNames[static_cast<std::size_t>(rel)];
}

std::optional<LogicalRelation> relation_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kRelationNames.size(); ++i) {
        if (name == kRelationNames[i]) return static_cast<LogicalRelation>(i);
    }
    return std::nullopt;
}

std::string category_name(CoarseCategory cat) {
    return kCategoryNames[static_cast<std::size_t>(cat)];
}

std::optional<CoarseCategory> category_from_name(const std::string& name) {
    for (std::size_t i = 0; i < kCategoryNames.size(); ++i) {
        if (name == kCategoryNames[i]) return static_cast<CoarseCategory>(i);
    }
    return std::nullopt;
}

}  // namespace radkg
