#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mimcount/formulas.hpp"
#include "mimcount/graph.hpp"

namespace mimcount {

enum class Family { Complete, Cycle, Path, StarJoin, F, FPrime, Q, ConjectureF };

/// `params` is {n} for every family except StarJoin, which takes {r, s1, ..., st}.
struct FamilySpec {
  Family family = Family::Complete;
  std::vector<long> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
/// Disjoint union of cliques of the given sizes, in order.
Graph clique_union(const std::vector<long>& sizes);

/// K_r with one vertex u joined to exactly one vertex of each part clique.
/// Vertex 0 is u, then the rest of K_r, then each part with its attachment
/// vertex first.
Graph star_join(long r, const std::vector<long>& parts);

Graph build(const FamilySpec& spec);

/// The closed-form count the family attains: f(n) for F and FPrime, q(n) for
/// Q, I(n) for ConjectureF. Throws DomainError for the other families.
BoundValue expected_count(const FamilySpec& spec);

/// Accepts "K:n", "C:n", "P:n", "F:n", "Fp:n", "Q:n", "conjF:n" and
/// "star:r/s1,s2,...". Throws ParseError.
FamilySpec parse_family(std::string_view text);
std::string format_family(const FamilySpec& spec);

}  // namespace mimcount
