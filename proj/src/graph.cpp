#include "lelat/graph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace lelat {

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw invalid_size_error("graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        if (u == v) throw invalid_size_error("graph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw invalid_size_error("graph: edge endpoint out of range: " + std::to_string(u) +
                                     " " + std::to_string(v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw invalid_size_error("graph: duplicate edge");
    degree_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degree_[u];
        ++degree_[v];
    }
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw invalid_size_error("graph: vertex out of range");
    return degree_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (int x : degree_) d = std::max(d, x);
    return d;
}

namespace {

std::vector<std::vector<int>> adjacency_lists(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n_vertices());
    for (const auto& [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

}  // namespace

int Graph::component_count() const {
    auto adj = adjacency_lists(*this);
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        ++components;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return components;
}

bool Graph::is_regular(int r) const {
    return std::all_of(degree_.begin(), degree_.end(), [r](int d) { return d == r; });
}

Graph make_path(int n) {
    if (n < 1) throw invalid_size_error("path: need at least 1 vertex");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw invalid_size_error("cycle: need at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int ng = g.n_vertices(), nh = h.n_vertices();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.n_edges()) * nh +
                  static_cast<std::size_t>(h.n_edges()) * ng);
    for (const auto& [u, v] : g.edges())
        for (int w = 0; w < nh; ++w) edges.emplace_back(u * nh + w, v * nh + w);
    for (int u = 0; u < ng; ++u)
        for (const auto& [w, x] : h.edges()) edges.emplace_back(u * nh + w, u * nh + x);
    return Graph(ng * nh, std::move(edges));
}

Graph subdivision(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<Edge> edges;
    edges.reserve(2 * g.edges().size());
    int k = 0;
    for (const auto& [u, v] : g.edges()) {
        edges.emplace_back(u, n + k);
        edges.emplace_back(v, n + k);
        ++k;
    }
    return Graph(n + g.n_edges(), std::move(edges));
}

Graph line_graph(const Graph& g) {
    // Vertex k of the output is edge k of g (sorted order).
    std::vector<std::vector<int>> incident(g.n_vertices());
    int k = 0;
    for (const auto& [u, v] : g.edges()) {
        incident[u].push_back(k);
        incident[v].push_back(k);
        ++k;
    }
    std::vector<Edge> edges;
    for (const auto& ids : incident)
        for (std::size_t i = 0; i < ids.size(); ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j) edges.emplace_back(ids[i], ids[j]);
    return Graph(g.n_edges(), std::move(edges));
}

Graph delete_edges(const Graph& g, const std::vector<Edge>& removed) {
    std::vector<Edge> gone = removed;
    for (auto& [u, v] : gone)
        if (u > v) std::swap(u, v);
    std::sort(gone.begin(), gone.end());
    gone.erase(std::unique(gone.begin(), gone.end()), gone.end());
    for (const auto& [u, v] : gone)
        if (!g.has_edge(u, v))
            throw missing_edge_error("delete_edges: edge " + std::to_string(u) + " " +
                                     std::to_string(v) + " not present");
    std::vector<Edge> kept;
    kept.reserve(g.edges().size() - gone.size());
    std::set_difference(g.edges().begin(), g.edges().end(), gone.begin(), gone.end(),
                        std::back_inserter(kept));
    return Graph(g.n_vertices(), std::move(kept));
}

int edge_delta(const Graph& g, const Graph& h) {
    const auto &a = g.edges(), &b = h.edges();
    std::size_t i = 0, j = 0, common = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
            ++common;
            ++i;
            ++j;
        } else if (a[i] < b[j]) {
            ++i;
        } else {
            ++j;
        }
    }
    return static_cast<int>(a.size() + b.size() - 2 * common);
}

double degree_agreement_fraction(const Graph& g, const Graph& h) {
    if (g.n_vertices() != h.n_vertices())
        throw shape_error("degree_agreement_fraction: vertex counts differ");
    if (!std::includes(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end()))
        throw containment_error("degree_agreement_fraction: E(h) is not contained in E(g)");
    const int n = g.n_vertices();
    if (n == 0) return 1.0;
    int same = 0;
    for (int v = 0; v < n; ++v)
        if (g.degrees()[v] == h.degrees()[v]) ++same;
    return static_cast<double>(same) / n;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    if (n < 0) throw invalid_size_error("random_graph: negative vertex count");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_size_error("random_graph: p outside [0, 1]");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_spanning_subgraph(std::mt19937_64& rng, const Graph& g, double keep_prob) {
    if (!(keep_prob >= 0.0 && keep_prob <= 1.0))
        throw invalid_size_error("random_spanning_subgraph: keep probability outside [0, 1]");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (coin(rng) < keep_prob) kept.push_back(e);
    return Graph(g.n_vertices(), std::move(kept));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n_vertices() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

Graph from_edge_list(std::istream& in) {
    std::string tag;
    int n = 0;
    if (!(in >> tag) || tag != "n" || !(in >> n))
        throw io_error("edge list: expected header \"n <count>\"");
    std::vector<Edge> edges;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw io_error("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw io_error("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof() && in.fail()) throw io_error("edge list: malformed token");
    try {
        return Graph(n, std::move(edges));
    } catch (const invalid_size_error& e) {
        throw io_error(std::string("edge list: ") + e.what());
    }
}

}  // namespace lelat
