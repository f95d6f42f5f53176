#pragma once

#include <optional>
#include <string>

#include "gvm/parabolic.hpp"

namespace gvm {

// Weight literal "a1,...,ak|b1,...,bn", entries integers or reduced halves
// ("-5/2"); the bar must sit at the crossed position and the total length
// must match the rank.
Weight parse_weight_literal(const std::string& text, int rank, int cross);
std::string weight_literal(const Weight& w, int cross);

std::string emit_json(const LabeledGraph& g, const std::optional<Weight>& lambda);
std::string emit_dot(const LabeledGraph& g);
std::string emit_text(const LabeledGraph& g);

// Inverse of emit_json, exact round-trip.
struct ParsedGraph {
  LabeledGraph graph;
  std::optional<Weight> lambda;
};
ParsedGraph parse_json(const std::string& json_text);

const char* edge_kind_name(EdgeKind k);

}  // namespace gvm
