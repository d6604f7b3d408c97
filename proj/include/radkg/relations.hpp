#pragma once

#include <optional>
#include <string>

namespace radkg {

// Closed set of edge labels shared by extraction and the graph store.
enum class LogicalRelation {
    PartOf,
    TypeOf,
    ModifierOf,
    ObservationOf,
    DefaultObservationOf,
    PropertyOf,
    DefaultPropertyOf,
    FoundIn,
    ObservedIn,
};

std::string relation_name(LogicalRelation rel);
std::optional<LogicalRelation> relation_from_name(const std::string& name);

// Coarse ontology classes; doubles as the entity category of the lexicon.
enum class CoarseCategory {
    Anatomy,
    Finding,
    Observation,
    Property,
    Modifier,
};

std::string category_name(CoarseCategory cat);
std::optional<CoarseCategory> category_from_name(const std::string& name);

}  // namespace radkg
