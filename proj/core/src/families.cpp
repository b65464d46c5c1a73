#include "mimcount/families.hpp"

#include <charconv>

#include "mimcount/errors.hpp"

namespace mimcount {

namespace {

void add_clique(std::vector<Edge>& edges, Vertex first, long size) {
  for (long i = 0; i < size; ++i)
    for (long j = i + 1; j < size; ++j)
      edges.push_back({first + static_cast<Vertex>(i), first + static_cast<Vertex>(j)});
}

std::vector<long> fives(long count) { return std::vector<long>(static_cast<std::size_t>(count), 5); }

std::vector<long> concat(std::vector<long> a, const std::vector<long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long single_param(const FamilySpec& spec) {
  if (spec.params.size() != 1) throw DomainError("family " + format_family(spec) + " takes exactly one order");
  return spec.params[0];
}

[[noreturn]] void undefined(const FamilySpec& spec) {
  throw DomainError("no graph is defined for " + format_family(spec));
}

/// Either the clique K_r alone or the star-join K_r * (parts).
struct Shape {
  long r = 0;
  std::vector<long> parts;
  bool clique_only = false;  // r is the order of a single clique
};

Shape small_extremal(long n) {
  if (n <= 8) return {n, {}, true};
  return {n / 2, {n - n / 2}, false};
}

Shape shape_of(const FamilySpec& spec) {
  const long n = single_param(spec);
  if (n < 1) undefined(spec);
  switch (spec.family) {
    case Family::F:
      if (n <= 13) return small_extremal(n);
      if (n % 5 != 1) undefined(spec);
      if (n <= 30) return {6, fives((n - 6) / 5)};
      return {1, fives((n - 1) / 5)};
    case Family::FPrime:
      if (n <= 8) return {n, {}, true};
      if (n >= 31 && n % 5 == 1) return {1, fives((n - 1) / 5)};
      undefined(spec);
    case Family::ConjectureF:
      if (n <= 13) return small_extremal(n);
      switch (n % 5) {
        case 4:
          if (n <= 44) return {5, concat(fives((n - 9) / 5), {4})};
          return {1, concat(fives((n - 9) / 5), {4, 4})};
        case 0:
          if (n <= 50) return {5, fives((n - 5) / 5)};
          return {1, concat(fives((n - 5) / 5), {4})};
        case 1:
          if (n <= 30) return {6, fives((n - 6) / 5)};
          return {1, fives((n - 1) / 5)};
        case 2:
          if (n <= 32) return {6, concat(fives((n - 12) / 5), {6})};
          return {1, concat(fives((n - 7) / 5), {6})};
        default:
          if (n <= 33) return {6, concat(fives((n - 18) / 5), {6, 6})};
          return {1, concat(fives((n - 13) / 5), {6, 6})};
      }
    default:
      undefined(spec);
  }
}

std::vector<long> q_cliques(long n) {
  const long t = n / 5;
  switch (n % 5) {
    case 0: return fives(t);
    case 1: return concat({6}, fives(t - 1));
    case 2: return concat({6, 6}, fives(t - 2));
    case 3: return concat({4, 4}, fives(t - 1));
    default: return concat({4}, fives(t));
  }
}

long parse_long(std::string_view s, std::string_view whole) {
  long v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc{} || ptr != end)
    throw ParseError("malformed family spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  add_clique(edges, 0, static_cast<long>(n));
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(make_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)));
  return Graph::from_edge_list(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
  return Graph::from_edge_list(n, edges);
}

Graph clique_union(const std::vector<long>& sizes) {
  std::vector<Edge> edges;
  long n = 0;
  for (long s : sizes) {
    if (s < 1) throw DomainError("clique sizes must be positive");
    add_clique(edges, static_cast<Vertex>(n), s);
    n += s;
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph star_join(long r, const std::vector<long>& parts) {
  if (r < 1) throw DomainError("star-join needs r >= 1");
  std::vector<Edge> edges;
  add_clique(edges, 0, r);
  long n = r;
  for (long s : parts) {
    if (s < 1) throw DomainError("star-join parts must be positive");
    add_clique(edges, static_cast<Vertex>(n), s);
    edges.push_back({0, static_cast<Vertex>(n)});
    n += s;
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Complete: {
      const long n = single_param(spec);
      if (n < 0) undefined(spec);
      return complete_graph(static_cast<std::size_t>(n));
    }
    case Family::Cycle: {
      const long n = single_param(spec);
      if (n < 3) undefined(spec);
      return cycle_graph(static_cast<std::size_t>(n));
    }
    case Family::Path: {
      const long n = single_param(spec);
      if (n < 0) undefined(spec);
      return path_graph(static_cast<std::size_t>(n));
    }
    case Family::StarJoin:
      if (spec.params.empty()) undefined(spec);
      return star_join(spec.params[0], {spec.params.begin() + 1, spec.params.end()});
    case Family::Q: {
      const long n = single_param(spec);
      if (n < 8) undefined(spec);
      return clique_union(q_cliques(n));
    }
    default: {
      const Shape s = shape_of(spec);
      if (s.clique_only) return complete_graph(static_cast<std::size_t>(s.r));
      return star_join(s.r, s.parts);
    }
  }
}

BoundValue expected_count(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::F:
    case Family::FPrime:
      shape_of(spec);
      return eval_f(spec.params[0]);
    case Family::ConjectureF:
      shape_of(spec);
      return eval_conjecture_I(spec.params[0]);
    case Family::Q: {
      const long n = single_param(spec);
      if (n < 8) undefined(spec);
      const BigInt q = eval_q(n);
      return {Rational(q), Rational(q), q};
    }
    default:
      throw DomainError("no closed-form count is attached to " + format_family(spec));
  }
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("malformed family spec '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, colon);
  const std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  if (name == "star") {
    spec.family = Family::StarJoin;
    const auto slash = rest.find('/');
    spec.params.push_back(parse_long(rest.substr(0, slash), text));
    if (slash != std::string_view::npos) {
      std::string_view parts = rest.substr(slash + 1);
      while (true) {
        const auto comma = parts.find(',');
        spec.params.push_back(parse_long(parts.substr(0, comma), text));
        if (comma == std::string_view::npos) break;
        parts = parts.substr(comma + 1);
      }
    }
    return spec;
  }
  if (name == "K") spec.family = Family::Complete;
  else if (name == "C") spec.family = Family::Cycle;
  else if (name == "P") spec.family = Family::Path;
  else if (name == "F") spec.family = Family::F;
  else if (name == "Fp") spec.family = Family::FPrime;
  else if (name == "Q") spec.family = Family::Q;
  else if (name == "conjF") spec.family = Family::ConjectureF;
  else throw ParseError("unknown family '" + std::string(name) + "'");
  spec.params.push_back(parse_long(rest, text));
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  std::string name;
  switch (spec.family) {
    case Family::Complete: name = "K"; break;
    case Family::Cycle: name = "C"; break;
    case Family::Path: name = "P"; break;
    case Family::StarJoin: name = "star"; break;
    case Family::F: name = "F"; break;
    case Family::FPrime: name = "Fp"; break;
    case Family::Q: name = "Q"; break;
    case Family::ConjectureF: name = "conjF"; break;
  }
  std::string out = name + ":";
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i == 1 && spec.family == Family::StarJoin) out += '/';
    else if (i > 0) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

}  // namespace mimcount
