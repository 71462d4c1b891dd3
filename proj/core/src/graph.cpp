#include "ciax/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ciax/point.hpp"
#include "union_find.hpp"

namespace ciax {

BipartiteGraph::BipartiteGraph(int left_size, int right_size, std::vector<Edge> edges)
    : left_(left_size), right_(right_size), edges_(std::move(edges)) {
    if (left_ < 1 || right_ < 1) {
        throw std::invalid_argument("bipartite graph: vertex counts must be positive");
    }
    for (const Edge& e : edges_) {
        if (e.first < 1 || e.first > left_ || e.second < 1 || e.second > right_) {
            throw std::invalid_argument("bipartite graph: edge out of bounds");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool BipartiteGraph::has_edge(int j, int k) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{j, k});
}

ComponentSplit connected_components(const BipartiteGraph& g) {
    const std::size_t nl = static_cast<std::size_t>(g.left_size());
    const std::size_t nr = static_cast<std::size_t>(g.right_size());
    detail::UnionFind uf(nl + nr);
    for (const Edge& e : g.edges()) {
        uf.unite(static_cast<std::size_t>(e.first - 1),
                 nl + static_cast<std::size_t>(e.second - 1));
    }

    std::vector<bool> touched(nl + nr, false);
    for (const Edge& e : g.edges()) {
        touched[static_cast<std::size_t>(e.first - 1)] = true;
        touched[nl + static_cast<std::size_t>(e.second - 1)] = true;
    }

    ComponentSplit out;
    std::map<std::size_t, GraphComponent> by_root;
    for (std::size_t v = 0; v < nl + nr; ++v) {
        if (!touched[v]) {
            if (v < nl) {
                out.isolated_left.push_back(static_cast<int>(v + 1));
            } else {
                out.isolated_right.push_back(static_cast<int>(v - nl + 1));
            }
            continue;
        }
        GraphComponent& c = by_root[uf.find(v)];
        if (v < nl) {
            c.left.push_back(static_cast<int>(v + 1));
        } else {
            c.right.push_back(static_cast<int>(v - nl + 1));
        }
    }
    for (const Edge& e : g.edges()) {
        by_root[uf.find(static_cast<std::size_t>(e.first - 1))].edges.push_back(e);
    }

    for (auto& [root, c] : by_root) out.components.push_back(std::move(c));
    std::sort(out.components.begin(), out.components.end(),
              [](const GraphComponent& a, const GraphComponent& b) {
                  const int la = a.left.empty() ? 0 : a.left.front();
                  const int lb = b.left.empty() ? 0 : b.left.front();
                  if (la != lb) return la < lb;
                  const int ra = a.right.empty() ? 0 : a.right.front();
                  const int rb = b.right.empty() ? 0 : b.right.front();
                  return ra < rb;
              });
    return out;
}

AdmissibleGraph::AdmissibleGraph(int left_size, int right_size,
                                 std::vector<Block> blocks)
    : left_(left_size), right_(right_size), blocks_(std::move(blocks)) {
    if (left_ < 1 || right_ < 1) {
        throw std::invalid_argument("admissible graph: vertex counts must be positive");
    }
    std::vector<bool> seen_left(static_cast<std::size_t>(left_), false);
    std::vector<bool> seen_right(static_cast<std::size_t>(right_), false);
    for (Block& b : blocks_) {
        if (b.J.empty() || b.K.empty()) {
            throw std::invalid_argument("admissible graph: empty block");
        }
        std::sort(b.J.begin(), b.J.end());
        std::sort(b.K.begin(), b.K.end());
        for (int j : b.J) {
            if (j < 1 || j > left_ || seen_left[static_cast<std::size_t>(j - 1)]) {
                throw std::invalid_argument("admissible graph: J blocks must partition [r2]");
            }
            seen_left[static_cast<std::size_t>(j - 1)] = true;
        }
        for (int k : b.K) {
            if (k < 1 || k > right_ || seen_right[static_cast<std::size_t>(k - 1)]) {
                throw std::invalid_argument("admissible graph: K blocks must partition [r3]");
            }
            seen_right[static_cast<std::size_t>(k - 1)] = true;
        }
    }
    if (!std::all_of(seen_left.begin(), seen_left.end(), [](bool b) { return b; }) ||
        !std::all_of(seen_right.begin(), seen_right.end(), [](bool b) { return b; })) {
        throw std::invalid_argument("admissible graph: isolated vertex");
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.J.front() < b.J.front(); });
}

std::vector<Edge> AdmissibleGraph::edge_list() const {
    std::vector<Edge> edges;
    for (const Block& b : blocks_) {
        for (int j : b.J) {
            for (int k : b.K) edges.emplace_back(j, k);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

BipartiteGraph AdmissibleGraph::graph() const {
    return BipartiteGraph(left_, right_, edge_list());
}

bool AdmissibleGraph::has_edge(int j, int k) const {
    for (const Block& b : blocks_) {
        if (std::binary_search(b.J.begin(), b.J.end(), j)) {
            return std::binary_search(b.K.begin(), b.K.end(), k);
        }
    }
    return false;
}

std::optional<AdmissibleGraph> is_admissible(const BipartiteGraph& g) {
    const ComponentSplit split = connected_components(g);
    if (!split.isolated_left.empty() || !split.isolated_right.empty()) {
        return std::nullopt;
    }
    std::vector<AdmissibleGraph::Block> blocks;
    for (const GraphComponent& c : split.components) {
        if (c.edges.size() != c.left.size() * c.right.size()) {
            return std::nullopt;  // not a complete bipartite block
        }
        blocks.push_back({c.left, c.right});
    }
    return AdmissibleGraph(g.left_size(), g.right_size(), std::move(blocks));
}

namespace {

// Set partitions of [n] into exactly `t` blocks via restricted growth
// strings; blocks come out ordered by their minimum element.
std::vector<std::vector<std::vector<int>>> partitions_into(int n, int t) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    auto emit = [&]() {
        std::vector<std::vector<int>> blocks(static_cast<std::size_t>(t));
        for (int x = 0; x < n; ++x) {
            blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(x)])]
                .push_back(x + 1);
        }
        out.push_back(std::move(blocks));
    };
    auto rec = [&](auto&& self, int pos, int max_used) -> void {
        if (pos == n) {
            if (max_used + 1 == t) emit();
            return;
        }
        // Not enough positions left to reach t blocks: prune.
        if (t - (max_used + 1) > n - pos) return;
        for (int b = 0; b <= std::min(max_used + 1, t - 1); ++b) {
            rgs[static_cast<std::size_t>(pos)] = b;
            self(self, pos + 1, std::max(max_used, b));
        }
    };
    if (t >= 1 && t <= n) rec(rec, 0, -1);
    return out;
}

}  // namespace

std::vector<AdmissibleGraph> enumerate_admissible(int r2, int r3) {
    if (r2 < 1 || r3 < 1) {
        throw std::invalid_argument("enumerate_admissible: sizes must be positive");
    }
    std::vector<AdmissibleGraph> out;
    for (int t = 1; t <= std::min(r2, r3); ++t) {
        const auto left_parts = partitions_into(r2, t);
        const auto right_parts = partitions_into(r3, t);
        std::vector<int> perm(static_cast<std::size_t>(t));
        for (const auto& lp : left_parts) {
            for (const auto& rp : right_parts) {
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    std::vector<AdmissibleGraph::Block> blocks;
                    blocks.reserve(static_cast<std::size_t>(t));
                    for (int b = 0; b < t; ++b) {
                        blocks.push_back({lp[static_cast<std::size_t>(b)],
                                          rp[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])]});
                    }
                    out.emplace_back(r2, r3, std::move(blocks));
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
    }
    return out;
}

Int eta(unsigned long p, unsigned long q) {
    Int total = 0;
    for (unsigned long t = 0; t <= std::min(p, q); ++t) {
        total += factorial(t) * stirling2(p, t) * stirling2(q, t);
    }
    return total;
}

BipartiteGraph graph_of_multidegree(const Multidegree& d) {
    const Shape& s = d.shape();
    std::vector<Edge> edges;
    for (int j = 1; j <= s.r2; ++j) {
        for (int k = 1; k <= s.r3; ++k) {
            if (d.slice(j, k) != 0) edges.emplace_back(j, k);
        }
    }
    return BipartiteGraph(s.r2, s.r3, std::move(edges));
}

BipartiteGraph graph_of_point(const Point& p) {
    const Shape& s = p.shape;
    std::vector<Edge> edges;
    for (int j = 1; j <= s.r2; ++j) {
        for (int k = 1; k <= s.r3; ++k) {
            for (int i = 1; i <= s.r1; ++i) {
                if (p.at(i, j, k) != 0) {
                    edges.emplace_back(j, k);
                    break;
                }
            }
        }
    }
    return BipartiteGraph(s.r2, s.r3, std::move(edges));
}

std::string to_string(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const Edge& e : g.edges()) {
        if (!first) out << ", ";
        first = false;
        out << "(" << e.first << "," << e.second << ")";
    }
    out << "}";
    return out.str();
}

std::string to_string(const AdmissibleGraph& g) {
    std::ostringstream out;
    bool first_block = true;
    for (const AdmissibleGraph::Block& b : g.components()) {
        if (!first_block) out << " + ";
        first_block = false;
        auto list = [&](const std::vector<int>& xs) {
            out << "{";
            for (std::size_t t = 0; t < xs.size(); ++t) {
                if (t) out << ",";
                out << xs[t];
            }
            out << "}";
        };
        list(b.J);
        out << "x";
        list(b.K);
    }
    return out.str();
}

}  // namespace ciax
