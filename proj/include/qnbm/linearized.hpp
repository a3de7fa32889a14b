#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "json.hpp"

#include "qnbm/distributions.hpp"
#include "qnbm/network.hpp"

namespace qnbm {

//! Layered Bayesian network equivalent to the linearized model: each
//! non-input neuron has a conditional probability table over its parent
//! layer's bitstrings; the input layer carries a uniform prior.
struct BayesNet {
    NetworkTopology topology;
    //! p_one[p][j][i] = P(neuron j of active layer p+1 is 1 | parent pattern i),
    //! with i indexed as in preactivation_theta (bit k = parent neuron k).
    std::vector<std::vector<std::vector<double>>> p_one;

    //! Every row must satisfy P(0|i) + P(1|i) = 1 within 1e-12 (trivially true
    //! for the cos^2/sin^2 construction; guards hand-built tables).
    void validate() const;
};

//! Forward pass with each neuron's RUS replaced by a plain conditional
//! rotation |0> -> cos(t)|0> + sin(t)|1> per source branch; no ancilla, no
//! projection. Returns the marginal over output qubits.
DiscreteDistribution forward_linear_exact(const NetworkTopology& topology,
                                          const Parameters& params);

//! CPT rows P(1|i) = sin^2(theta_i), P(0|i) = cos^2(theta_i).
BayesNet build_bayes_net(const NetworkTopology& topology, const Parameters& params);

//! Exact layer-by-layer propagation of the full layer distribution through
//! the CPTs (neurons within a layer conditionally independent given the
//! parent layer). O(sum_k 2^{N_k} * 2^{N_{k+1}}).
DiscreteDistribution bayes_forward_exact(const BayesNet& net);

//! Ancestral sampling: input pattern from the uniform prior, then each neuron
//! from its CPT row. O(edges) per shot; deterministic per seed.
std::map<std::uint64_t, std::uint64_t> bayes_ancestral_sample(const BayesNet& net,
                                                              std::uint64_t shots,
                                                              std::uint64_t seed);

nlohmann::json bayes_net_to_json(const BayesNet& net);
BayesNet bayes_net_from_json(const nlohmann::json& doc);

}  // namespace qnbm
