#pragma once

#include <Eigen/Core>
#include <set>
#include <vector>

namespace coorp {

/// Weighted directed edge between followers. `from`/`to` are 0-based
/// follower indices; the stored weight is a_{to,from}.
struct Edge {
    int from = 0;
    int to = 0;
    double weight = 1.0;
};

/// Leader-follower communication graph. The follower-only part must be
/// undirected (matching reverse edges with equal weights) and connected,
/// and at least one follower must have a direct link to the leader.
class CommGraph {
public:
    CommGraph(int num_followers, std::vector<Edge> edges, std::set<int> targets);

    /// Convenience constructor: each pair is stored in both directions.
    static CommGraph undirected(int num_followers,
                                const std::vector<Edge>& edges,
                                std::set<int> targets);

    int size() const { return num_followers_; }
    bool is_target(int i) const { return targets_.count(i) > 0; }
    const std::set<int>& targets() const { return targets_; }

    /// Neighbors j of follower i with weights a_ij.
    const std::vector<std::pair<int, double>>& neighbors(int i) const
    {
        return neighbors_[i];
    }

    Eigen::MatrixXd adjacency() const;
    Eigen::MatrixXd laplacian() const;
    Eigen::MatrixXd target_matrix() const;

private:
    void validate() const;

    int num_followers_;
    std::vector<Edge> edges_;
    std::set<int> targets_;
    std::vector<std::vector<std::pair<int, double>>> neighbors_;
};

} // namespace coorp
