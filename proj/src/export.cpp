#include "parkpose/export.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

namespace parkpose {

namespace {

std::vector<std::pair<std::size_t, std::size_t>> nonreflexive_pairs(const PermRelation& rel) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < rel.size(); ++i)
        for (std::size_t j = 0; j < rel.size(); ++j)
            if (i != j && rel.related(i, j)) out.emplace_back(i, j);
    return out;
}

}  // namespace

std::string export_relation(const PermRelation& rel, ExportFormat format) {
    const bool transitive = rel.is_transitive();
    const auto pairs = transitive ? rel.cover_pairs() : nonreflexive_pairs(rel);
    const auto& elems = rel.elements();
    auto label = [&](std::size_t i) { return to_string(elems[i]); };

    switch (format) {
        case ExportFormat::Edges: {
            std::ostringstream out;
            if (!transitive)
                out << "# " << rel.name()
                    << " is not transitive; listing the full non-reflexive relation\n";
            for (const auto& [i, j] : pairs)
                out << label(i) << '\t' << label(j) << '\n';
            return out.str();
        }
        case ExportFormat::Dot: {
            std::ostringstream out;
            out << "digraph \"" << rel.name() << "_S" << rel.degree() << "\" {\n";
            if (!transitive)
                out << "  // " << rel.name()
                    << " is not transitive; edges show the full non-reflexive relation\n";
            // group nodes by length so strata render as ranks
            std::map<int, std::vector<std::size_t>> by_length;
            for (std::size_t i = 0; i < elems.size(); ++i)
                by_length[length(elems[i])].push_back(i);
            for (const auto& [len, group] : by_length) {
                out << "  { rank=same;";
                for (std::size_t i : group) out << " \"" << label(i) << "\";";
                out << " }\n";
            }
            for (const auto& [i, j] : pairs)
                out << "  \"" << label(i) << "\" -> \"" << label(j) << "\";\n";
            out << "}\n";
            return out.str();
        }
        case ExportFormat::Json: {
            nlohmann::json doc;
            doc["n"] = rel.degree();
            doc["order"] = rel.name();
            nlohmann::json edges = nlohmann::json::array();
            for (const auto& [i, j] : pairs)
                edges.push_back({label(i), label(j)});
            if (transitive) {
                doc["covers"] = std::move(edges);
            } else {
                doc["transitive"] = false;
                doc["relation"] = std::move(edges);
            }
            return doc.dump(2) + "\n";
        }
    }
    throw std::logic_error("unknown export format");
}

}  // namespace parkpose
