#pragma once

#include "nhr/graph.hpp"

#include <string>
#include <vector>

namespace nhr {

struct IndependenceResult {
    int alpha = 0;
    Mask witness = 0;
};

/// Exact maximum independent set (max clique on the complement with a
/// greedy-colouring bound).
IndependenceResult independence_number(const SimpleGraph& g);

/// Largest set with pairwise distance at least three.
Mask two_independent_set(const SimpleGraph& g);

/// Every maximal independent set, in increasing mask order.
std::vector<Mask> maximal_independent_sets(const SimpleGraph& g);

/// A small target graph with its parameters computed once.
class PatternGraph {
public:
    PatternGraph() = default;
    explicit PatternGraph(SimpleGraph g, std::string name = {});

    const SimpleGraph& graph() const { return graph_; }
    const std::string& name() const { return name_; }
    int k() const { return graph_.order(); }
    int max_degree() const { return delta_; }
    int alpha() const { return alpha_; }
    Mask max_ind_set() const { return max_ind_set_; }
    Mask two_ind_set() const { return two_ind_set_; }
    std::size_t edge_count() const { return edges_; }
    bool has_isolated_vertex() const;

private:
    SimpleGraph graph_;
    std::string name_;
    int delta_ = 0;
    int alpha_ = 0;
    Mask max_ind_set_ = 0;
    Mask two_ind_set_ = 0;
    std::size_t edges_ = 0;
};

/// Graphs up to isomorphism; insertion keeps the first representative.
class GraphFamily {
public:
    GraphFamily() = default;
    explicit GraphFamily(std::vector<SimpleGraph> graphs);

    bool add(const SimpleGraph& g);
    bool contains(const SimpleGraph& g) const;
    const std::vector<SimpleGraph>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    /// Sorted canonical keys joined; equal families give equal keys.
    std::string key() const;
    /// Every member of this family is isomorphic to some member of `other`.
    bool subset_of(const GraphFamily& other) const;

private:
    std::vector<SimpleGraph> members_;
    std::vector<std::string> keys_;
};

struct DerivedFamilies {
    GraphFamily d;          // G minus a maximal independent set
    GraphFamily d_prime;    // G minus a maximum independent set
    GraphFamily d_c;        // components of members of d
    GraphFamily d_c_prime;  // components of members of d_prime
};

DerivedFamilies derived_families(const SimpleGraph& g);

}  // namespace nhr
