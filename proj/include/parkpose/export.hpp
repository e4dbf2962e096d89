#pragma once

#include <string>

#include "parkpose/relation.hpp"

namespace parkpose {

enum class ExportFormat { Edges, Dot, Json };

// Serializes a relation on S_n.  Partial orders emit their cover edges;
// a non-transitive relation emits every non-reflexive related pair and
// is flagged in the output header.  Pairs are oriented greater-first and
// listed in lexicographic index order; output is UTF-8 with LF endings.
std::string export_relation(const PermRelation& rel, ExportFormat format);

}  // namespace parkpose
