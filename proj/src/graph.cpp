#include "girth/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace girth {

namespace {

bool parse_int(std::string_view token, int& out) {
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size() && out >= 0;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

EdgeList parse_edge_list(std::istream& in) {
    EdgeList list;
    bool have_header = false;
    int declared_n = 0;
    int max_id = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0].front() == '#') continue;
        if (tokens[0] == "p") {
            if (have_header || !list.edges.empty())
                throw Error("line " + std::to_string(line_no) + ": unexpected header");
            int m_decl = 0;
            if (tokens.size() != 3 || !parse_int(tokens[1], declared_n) || !parse_int(tokens[2], m_decl))
                throw Error("line " + std::to_string(line_no) + ": malformed header, expected 'p <n> <m>'");
            have_header = true;
            continue;
        }
        int u = 0, v = 0;
        if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw Error("line " + std::to_string(line_no) + ": expected 'u v' with nonnegative integers");
        if (have_header && (u >= declared_n || v >= declared_n))
            throw Error("line " + std::to_string(line_no) + ": vertex id exceeds declared n=" +
                        std::to_string(declared_n));
        max_id = std::max({max_id, u, v});
        list.edges.emplace_back(u, v);
    }
    list.n = std::max(declared_n, max_id + 1);
    return list;
}

EdgeList parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph build_graph(const EdgeList& list) {
    const int n = list.n;
    for (const auto& [u, v] : list.edges)
        if (u == v) throw Error("self-loop on vertex " + std::to_string(u));

    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : list.edges) {
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> offsets(n + 1, 0);
    for (int u = 0; u < n; ++u) offsets[u + 1] = offsets[u] + deg[u];
    std::vector<int> adj(offsets[n]);
    std::vector<int> cursor(offsets.begin(), offsets.end() - 1);
    for (const auto& [u, v] : list.edges) {
        adj[cursor[u]++] = v;
        adj[cursor[v]++] = u;
    }
    // sort + dedupe each list in place, then compact
    Graph g;
    g.n_ = n;
    g.offsets_.assign(n + 1, 0);
    g.adj_.reserve(adj.size());
    for (int u = 0; u < n; ++u) {
        auto first = adj.begin() + offsets[u];
        auto last = adj.begin() + offsets[u + 1];
        std::sort(first, last);
        auto end = std::unique(first, last);
        for (auto it = first; it != end; ++it) g.adj_.push_back(*it);
        g.offsets_[u + 1] = static_cast<int>(g.adj_.size());
    }
    g.m_ = static_cast<long long>(g.adj_.size()) / 2;
    return g;
}

Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    try {
        return build_graph(parse_edge_list(in));
    } catch (const Error& e) {
        throw Error(path + ": " + e.what());
    }
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::string serialize_edge_list(const Graph& g) {
    std::string out = "p " + std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u))
            if (u < v) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

void save_graph(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize_edge_list(g);
    if (!out) throw Error("write failed for '" + path + "'");
}

void validate_graph(const Graph& g) {
    const int n = g.num_vertices();
    long long half_edges = 0;
    for (int u = 0; u < n; ++u) {
        auto nb = g.neighbors(u);
        half_edges += static_cast<long long>(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            int v = nb[i];
            if (v < 0 || v >= n) throw Error("adjacency id out of range at vertex " + std::to_string(u));
            if (v == u) throw Error("self-loop on vertex " + std::to_string(u));
            if (i > 0 && nb[i - 1] >= v)
                throw Error("adjacency of vertex " + std::to_string(u) + " not strictly ascending");
            if (!g.has_edge(v, u))
                throw Error("asymmetric edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        }
    }
    if (half_edges != 2 * g.num_edges()) throw Error("edge count mismatch");
}

Components components(const Graph& g) {
    const int n = g.num_vertices();
    Components c;
    c.id.assign(n, -1);
    std::vector<int> queue;
    queue.reserve(n);
    for (int s = 0; s < n; ++s) {
        if (c.id[s] != -1) continue;
        int label = c.count++;
        c.id[s] = label;
        queue.clear();
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (c.id[v] == -1) {
                    c.id[v] = label;
                    queue.push_back(v);
                }
            }
        }
    }
    return c;
}

Connectivity connected_and_cyclic(const Graph& g) {
    const int n = g.num_vertices();
    Components c = components(g);
    std::vector<long long> verts(c.count, 0), half_edges(c.count, 0);
    for (int u = 0; u < n; ++u) {
        ++verts[c.id[u]];
        half_edges[c.id[u]] += g.degree(u);
    }
    Connectivity result;
    result.is_connected = c.count <= 1;
    for (int i = 0; i < c.count; ++i)
        if (half_edges[i] / 2 >= verts[i]) result.has_cycle = true;
    return result;
}

}  // namespace girth
