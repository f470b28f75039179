#ifndef GRAPHFP_IO_HPP
#define GRAPHFP_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "graphfp/expr.hpp"

namespace graphfp {

/// {"vertices": ["v1", ...], "edges": [{"id": "e1", "src": "v1", "rng": "v2"}, ...]}
/// @throw Error(Parse) for a malformed document, plus the DirectedGraph
///        validation errors
DirectedGraph load_graph(const nlohmann::json& doc);
DirectedGraph load_graph_file(const std::filesystem::path& file);
nlohmann::json graph_to_json(const DirectedGraph& g);

/// {"terms": [{"path": "e1.e2", "star": false, "re": "3/2", "im": "0"}, ...]}
/// Repeated letters accumulate.
FourierExpr parse_element(const DirectedGraph& g, const nlohmann::json& doc);
FourierExpr load_element_file(const DirectedGraph& g, const std::filesystem::path& file);
nlohmann::json element_to_json(const DirectedGraph& g, const FourierExpr& a);

/// {"v1": {"re": "1", "im": "0"}, ...}
nlohmann::json diagonal_to_json(const DirectedGraph& g, const DiagonalElement& d);

/// @throw Error(Parse) if the file cannot be read or is not JSON
nlohmann::json read_json_file(const std::filesystem::path& file);

}  // namespace graphfp

#endif  // GRAPHFP_IO_HPP
