#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "qnbm/distributions.hpp"
#include "qnbm/neuron.hpp"
#include "qnbm/statevector.hpp"

namespace qnbm {

//! Thrown by forward_sampled when every trajectory failed post-selection.
struct NoAcceptedShots : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Layer sizes (N_in, N_hid..., N_out). A zero hidden entry means the layer
//! is absent, e.g. (5,0,6) is a direct input-to-output net; it still counts
//! in the qubit budget as zero qubits.
struct NetworkTopology {
    std::vector<std::size_t> layer_sizes;

    NetworkTopology() = default;
    NetworkTopology(std::initializer_list<std::size_t> sizes) : layer_sizes(sizes) {}
    explicit NetworkTopology(std::vector<std::size_t> sizes) : layer_sizes(std::move(sizes)) {}

    //! At least two declared layers; input and output sizes >= 1.
    void validate() const;

    //! Indices of declared layers with size > 0, in order.
    std::vector<std::size_t> active_layers() const;

    //! Sum of layer sizes plus the shared ancilla.
    std::size_t total_qubits() const;

    std::size_t input_size() const { return layer_sizes.front(); }
    std::size_t output_size() const { return layer_sizes.back(); }
};

//! Deterministic qubit assignment: input layer first, then remaining active
//! layers in order, ancilla last.
struct QubitLayout {
    std::vector<std::vector<std::size_t>> layer_qubits;  // per declared layer; empty if absent
    std::size_t ancilla_qubit = 0;
    std::size_t num_qubits = 0;
};

QubitLayout qubit_layout(const NetworkTopology& topology);

//! Per-edge weights and per-neuron biases for each adjacent pair of active
//! layers. weights[p] is row-major (target-neuron major) with extents
//! N_{p+1} x N_p over active layers; biases[p] has one entry per target.
struct Parameters {
    std::vector<std::vector<double>> weights;
    std::vector<std::vector<double>> biases;

    static Parameters zeros(const NetworkTopology& topology);

    //! Each entry uniform in (-scale, scale), deterministic per seed.
    static Parameters random_init(const NetworkTopology& topology, std::uint64_t seed,
                                  double scale);

    void validate_shapes(const NetworkTopology& topology) const;

    //! Strict (-1, 1) check; applied where parameters enter from outside.
    void validate_range() const;

    std::size_t count() const;

    //! Flat layout: per layer pair, all weights row-major, then that pair's biases.
    std::vector<double> flatten() const;
    static Parameters unflatten(const NetworkTopology& topology, std::span<const double> flat);

    void clamp(double margin);  // into [-1+margin, 1-margin]
};

struct ForwardResult {
    DiscreteDistribution output_distribution;  // over output-layer bitstrings
    double postselect_probability = 1.0;       // product of per-neuron success probs
    StateVector final_state;
};

//! Exact forward pass: |0...0>, uniform superposition on the input layer,
//! then per layer (ascending neuron index) the neuron map with ancilla-0
//! post-selection. The shared ancilla needs no reset: projection leaves |0>.
ForwardResult forward_exact(const NetworkTopology& topology, const Parameters& params);

struct SampleResult {
    std::map<std::uint64_t, std::uint64_t> counts;  // accepted output bitstrings
    std::uint64_t shots = 0;                        // pre-post-selection
    std::uint64_t accepted = 0;
    double acceptance_rate = 0.0;
};

//! Shot-by-shot trajectories at max_rounds = 1: any ancilla failure discards
//! the shot. Equivalent draw-for-draw to running apply_neuron_sampled per
//! shot (the all-success state path is deterministic, so it is computed once;
//! each shot then consumes one uniform per neuron plus one for the output
//! measurement). Throws NoAcceptedShots when nothing survives.
SampleResult forward_sampled(const NetworkTopology& topology, const Parameters& params,
                             std::uint64_t shots, std::uint64_t seed);

}  // namespace qnbm
