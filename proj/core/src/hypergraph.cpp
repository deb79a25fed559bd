#include "edgesum/hypergraph.hpp"

#include "edgesum/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace edgesum {

BigInt UniformHypergraph::edge_count() const {
  if (lazy_complete) return binomial(n, k);
  return BigInt(static_cast<long long>(edges.size()));
}

std::size_t UniformHypergraph::edge_count_small() const {
  const BigInt count = edge_count();
  const long long as_i64 = to_i64_checked(count, "edge_count_small");
  return static_cast<std::size_t>(as_i64);
}

void UniformHypergraph::for_each_edge(const std::function<void(const KEdge&)>& fn) const {
  if (!lazy_complete) {
    for (const auto& e : edges) fn(e);
    return;
  }
  // Lexicographic enumeration of k-combinations of {0, ..., n-1}.
  KEdge edge;
  edge.vertices.resize(static_cast<std::size_t>(k));
  std::iota(edge.vertices.begin(), edge.vertices.end(), 0LL);
  while (true) {
    fn(edge);
    // Rightmost coordinate that can still move (coordinate pos may reach
    // at most n - k + pos).
    long long pos = k - 1;
    while (pos >= 0 && edge.vertices[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return;
    ++edge.vertices[static_cast<std::size_t>(pos)];
    for (long long q = pos + 1; q < k; ++q) {
      edge.vertices[static_cast<std::size_t>(q)] = edge.vertices[static_cast<std::size_t>(q - 1)] + 1;
    }
  }
}

std::vector<KEdge> UniformHypergraph::materialize(std::size_t cap) const {
  const BigInt count = edge_count();
  if (count > BigInt(static_cast<long long>(cap))) {
    throw UsageError("materialize: hypergraph has " + count.str() + " edges, exceeding the cap of " +
                     std::to_string(cap));
  }
  if (!lazy_complete) return edges;
  std::vector<KEdge> out;
  out.reserve(static_cast<std::size_t>(count.convert_to<long long>()));
  for_each_edge([&](const KEdge& e) { out.push_back(e); });
  return out;
}

namespace {

void sort_edges(std::vector<KEdge>& edges) { std::sort(edges.begin(), edges.end()); }

}  // namespace

UniformHypergraph build_double_interval(long long n, long long k) {
  if (k < 2) throw UsageError("build_double_interval: k must be >= 2, got " + std::to_string(k));
  if (n < 3 * k) {
    throw UsageError("build_double_interval: n must be >= 3k (" + std::to_string(3 * k) + "), got " +
                     std::to_string(n));
  }
  UniformHypergraph h;
  h.n = n;
  h.k = k;
  h.label = "double-interval";
  h.edges.reserve(static_cast<std::size_t>(n * (k - 1) * (k - 1)));
  std::set<KEdge> seen;
  for (long long v = 0; v < n; ++v) {
    for (long long i = 1; i <= k - 1; ++i) {
      for (long long j = 1; j <= k - 1; ++j) {
        KEdge e = double_interval_edge(v, i, j, k, n);
        if (e.vertices.size() != static_cast<std::size_t>(k)) {
          throw Error("build_double_interval: edge e(" + std::to_string(v) + "," + std::to_string(i) + "," +
                      std::to_string(j) + ") collapsed to " + std::to_string(e.vertices.size()) +
                      " vertices despite n >= 3k");
        }
        if (!seen.insert(e).second) {
          throw Error("build_double_interval: representation collision at e(" + std::to_string(v) + "," +
                      std::to_string(i) + "," + std::to_string(j) + ") despite n >= 3k");
        }
        h.edges.push_back(std::move(e));
      }
    }
  }
  sort_edges(h.edges);
  return h;
}

UniformHypergraph build_complete(long long n, long long k) {
  if (k < 1 || k > n) {
    throw UsageError("build_complete: need 1 <= k <= n, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  }
  UniformHypergraph h;
  h.n = n;
  h.k = k;
  h.label = "complete";
  h.lazy_complete = true;
  return h;
}

UniformHypergraph build_tight_cycle(long long n, long long k) {
  if (k < 2) throw UsageError("build_tight_cycle: k must be >= 2, got " + std::to_string(k));
  if (n < k + 1) {
    throw UsageError("build_tight_cycle: n must be >= k+1 (" + std::to_string(k + 1) + "), got " +
                     std::to_string(n));
  }
  UniformHypergraph h;
  h.n = n;
  h.k = k;
  h.label = "tight-cycle";
  h.edges.reserve(static_cast<std::size_t>(n));
  for (long long start = 0; start < n; ++start) {
    std::vector<long long> vertices(static_cast<std::size_t>(k));
    for (long long t = 0; t < k; ++t) vertices[static_cast<std::size_t>(t)] = start + t;
    h.edges.push_back(make_kedge(std::move(vertices), n));
  }
  sort_edges(h.edges);
  return h;
}

UniformHypergraph build_matching(long long t, long long k) {
  if (t < 1 || k < 1) {
    throw UsageError("build_matching: need t >= 1 and k >= 1, got t=" + std::to_string(t) + ", k=" +
                     std::to_string(k));
  }
  UniformHypergraph h;
  h.n = t * k;
  h.k = k;
  h.label = "matching";
  h.edges.reserve(static_cast<std::size_t>(t));
  for (long long block = 0; block < t; ++block) {
    std::vector<long long> vertices(static_cast<std::size_t>(k));
    for (long long q = 0; q < k; ++q) vertices[static_cast<std::size_t>(q)] = block * k + q;
    h.edges.push_back(KEdge{std::move(vertices)});
  }
  sort_edges(h.edges);
  return h;
}

std::vector<long long> degree_profile(const UniformHypergraph& h) {
  std::vector<long long> degrees(static_cast<std::size_t>(h.n), 0);
  if (h.lazy_complete) {
    const long long d = to_i64_checked(binomial(h.n - 1, h.k - 1), "degree_profile (complete)");
    std::fill(degrees.begin(), degrees.end(), d);
    return degrees;
  }
  for (const auto& e : h.edges) {
    for (long long v : e.vertices) degrees[static_cast<std::size_t>(v)] += 1;
  }
  return degrees;
}

long long regular_degree(const UniformHypergraph& h) {
  const auto degrees = degree_profile(h);
  if (degrees.empty()) return -1;
  for (long long d : degrees) {
    if (d != degrees.front()) return -1;
  }
  return degrees.front();
}

long long min_degree(const UniformHypergraph& h) {
  const auto degrees = degree_profile(h);
  if (degrees.empty()) throw UsageError("min_degree: hypergraph has no vertices");
  return *std::min_element(degrees.begin(), degrees.end());
}

std::string degree_profile_summary(const UniformHypergraph& h) {
  const auto degrees = degree_profile(h);
  std::set<long long> distinct(degrees.begin(), degrees.end());
  std::string out = "degrees: min " + std::to_string(*distinct.begin()) + ", max " +
                    std::to_string(*distinct.rbegin()) + ", distinct {";
  bool first = true;
  for (long long d : distinct) {
    if (!first) out += ", ";
    out += std::to_string(d);
    first = false;
  }
  out += "}";
  return out;
}

nlohmann::ordered_json export_hypergraph(const UniformHypergraph& h, bool include_edges) {
  nlohmann::ordered_json out;
  out["n"] = h.n;
  out["k"] = h.k;
  out["label"] = h.label;
  out["edge_count"] = h.edge_count().str();
  if (include_edges) {
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& e : h.materialize()) edges.push_back(e.vertices);
    out["edges"] = std::move(edges);
  }
  return out;
}

}  // namespace edgesum
