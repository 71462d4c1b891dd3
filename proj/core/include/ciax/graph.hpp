#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ciax/numeric.hpp"
#include "ciax/tensor.hpp"

namespace ciax {

struct Point;

/// An edge (j, k) of a bipartite graph on [r2] ⊔ [r3], 1-based.
using Edge = std::pair<int, int>;

/// Bipartite graph on [r2] ⊔ [r3]; the edge list is kept sorted and
/// duplicate-free.
class BipartiteGraph {
  public:
    BipartiteGraph(int left_size, int right_size, std::vector<Edge> edges = {});

    int left_size() const { return left_; }
    int right_size() const { return right_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(int j, int k) const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

  private:
    int left_;
    int right_;
    std::vector<Edge> edges_;
};

/// One connected piece of a bipartite graph.
struct GraphComponent {
    std::vector<int> left;    // sorted
    std::vector<int> right;   // sorted
    std::vector<Edge> edges;  // sorted lex
};

struct ComponentSplit {
    std::vector<GraphComponent> components;  // ordered by smallest left vertex
    std::vector<int> isolated_left;
    std::vector<int> isolated_right;
};

ComponentSplit connected_components(const BipartiteGraph& g);

/// Bipartite graph whose every connected component is a complete bipartite
/// block J_t x K_t and which covers every vertex.
class AdmissibleGraph {
  public:
    struct Block {
        std::vector<int> J;  // sorted, nonempty
        std::vector<int> K;  // sorted, nonempty

        friend bool operator==(const Block&, const Block&) = default;
    };

    /// Validates that {J_t} partitions [r2] and {K_t} partitions [r3];
    /// stores blocks sorted by min(J_t).
    AdmissibleGraph(int left_size, int right_size, std::vector<Block> blocks);

    int left_size() const { return left_; }
    int right_size() const { return right_; }
    const std::vector<Block>& components() const { return blocks_; }

    std::vector<Edge> edge_list() const;  // union of J_t x K_t, sorted
    BipartiteGraph graph() const;
    bool has_edge(int j, int k) const;

    friend bool operator==(const AdmissibleGraph&, const AdmissibleGraph&) = default;

  private:
    int left_;
    int right_;
    std::vector<Block> blocks_;
};

/// The admissible structure of g, or nullopt if some component is not a
/// complete bipartite graph or some vertex is isolated.
std::optional<AdmissibleGraph> is_admissible(const BipartiteGraph& g);

/// All admissible graphs on [r2] ⊔ [r3], each exactly once, in a fixed
/// canonical order (block count, then left partition, right partition and
/// matching between their blocks).
std::vector<AdmissibleGraph> enumerate_admissible(int r2, int r3);

/// Number of admissible graphs on [p] ⊔ [q]: sum over t of
/// t! * S(p,t) * S(q,t).
Int eta(unsigned long p, unsigned long q);

/// Edge set {(j,k) : d_jk != 0}.
BipartiteGraph graph_of_multidegree(const Multidegree& d);

/// Edge set {(j,k) : p_ijk != 0 for some i}.
BipartiteGraph graph_of_point(const Point& p);

std::string to_string(const BipartiteGraph& g);   // "{(1,1), (2,2)}"
std::string to_string(const AdmissibleGraph& g);  // "{1}x{1} + {2}x{2}"

}  // namespace ciax
