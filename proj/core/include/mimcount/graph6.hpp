#pragma once

#include <string>
#include <string_view>

#include "mimcount/graph.hpp"

namespace mimcount {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Graph6Diagnostics {
  /// Padding bits in the final byte were not zero. The graph is still
  /// decoded; canonical writers never produce this.
  bool nonzero_padding = false;
};

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are ignored. Throws ParseError on malformed input and
/// GraphError if the order exceeds kMaxVertices.
Graph from_graph6(std::string_view text, Graph6Diagnostics* diagnostics = nullptr);

/// Canonical graph6 record without header or newline.
std::string to_graph6(const Graph& g);

}  // namespace mimcount
