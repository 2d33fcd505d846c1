#include "coorp/graph.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace coorp {

CommGraph::CommGraph(int num_followers, std::vector<Edge> edges, std::set<int> targets)
    : num_followers_(num_followers), edges_(std::move(edges)), targets_(std::move(targets))
{
    validate();
    neighbors_.resize(num_followers_);
    for (const Edge& e : edges_) {
        neighbors_[e.to].emplace_back(e.from, e.weight);
    }
}

CommGraph CommGraph::undirected(int num_followers,
                                const std::vector<Edge>& edges,
                                std::set<int> targets)
{
    std::vector<Edge> both;
    both.reserve(2 * edges.size());
    for (const Edge& e : edges) {
        both.push_back(e);
        both.push_back({e.to, e.from, e.weight});
    }
    return CommGraph(num_followers, std::move(both), std::move(targets));
}

void CommGraph::validate() const
{
    if (num_followers_ <= 0) {
        throw std::invalid_argument("graph: need at least one follower");
    }
    for (const Edge& e : edges_) {
        if (e.from < 0 || e.from >= num_followers_ || e.to < 0 || e.to >= num_followers_) {
            throw std::invalid_argument("graph: edge endpoint out of range");
        }
        if (e.from == e.to) {
            throw std::invalid_argument("graph: self-loops are not allowed");
        }
        if (!(e.weight > 0.0)) {
            throw std::invalid_argument("graph: edge weights must be positive");
        }
    }
    if (targets_.empty()) {
        throw std::invalid_argument("graph: target set must be nonempty");
    }
    for (int t : targets_) {
        if (t < 0 || t >= num_followers_) {
            throw std::invalid_argument("graph: target index out of range");
        }
    }

    // Follower graph must be undirected: every edge needs a matching
    // reverse edge with equal weight.
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(num_followers_, num_followers_);
    for (const Edge& e : edges_) {
        if (w(e.to, e.from) != 0.0) {
            throw std::invalid_argument("graph: duplicate edge");
        }
        w(e.to, e.from) = e.weight;
    }
    if ((w - w.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw std::invalid_argument("graph: follower graph must be undirected "
                                    "(matching reverse edges with equal weights)");
    }

    // Connectivity by breadth-first search over the follower graph.
    if (num_followers_ > 1) {
        std::vector<bool> seen(num_followers_, false);
        std::queue<int> frontier;
        frontier.push(0);
        seen[0] = true;
        int count = 1;
        while (!frontier.empty()) {
            int i = frontier.front();
            frontier.pop();
            for (int j = 0; j < num_followers_; ++j) {
                if (!seen[j] && w(i, j) > 0.0) {
                    seen[j] = true;
                    ++count;
                    frontier.push(j);
                }
            }
        }
        if (count != num_followers_) {
            throw std::invalid_argument("graph: follower graph must be connected");
        }
    }
}

Eigen::MatrixXd CommGraph::adjacency() const
{
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(num_followers_, num_followers_);
    for (const Edge& e : edges_) {
        a(e.to, e.from) = e.weight;
    }
    return a;
}

Eigen::MatrixXd CommGraph::laplacian() const
{
    Eigen::MatrixXd a = adjacency();
    Eigen::MatrixXd l = -a;
    for (int i = 0; i < num_followers_; ++i) {
        l(i, i) = a.row(i).sum();
    }
    return l;
}

Eigen::MatrixXd CommGraph::target_matrix() const
{
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(num_followers_, num_followers_);
    for (int t : targets_) {
        m(t, t) = 1.0;
    }
    return m;
}

} // namespace coorp
