#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qnbm/rng.hpp"
#include "qnbm/statevector.hpp"

namespace qnbm {

//! One quantum neuron: weighted connections from a source register to an
//! output qubit, mediated by an ancilla.
struct NeuronSpec {
    QubitSet source_qubits;
    std::vector<double> weights;  // one per source
    double bias = 0.0;
    std::size_t output_qubit = 0;
    std::size_t ancilla_qubit = 0;

    //! Structural checks: weight count matches sources, output/ancilla
    //! distinct and disjoint from sources, all indices < num_qubits.
    //! Weight magnitudes are validated at the parameter store, not here
    //! (finite-difference probes may transiently leave (-1,1)).
    void validate(std::size_t num_qubits) const;
};

//! Outcome record of a stochastic repeat-until-success application.
struct RusOutcome {
    bool succeeded = false;
    std::size_t rounds_used = 0;
    std::vector<double> success_probability_per_round;
};

//! theta = sum_k w_k * x_k + bias, with bit k of input_bits the k-th source value.
double preactivation_theta(std::uint64_t input_bits, const NeuronSpec& spec);

//! q(theta) = arctan(tan^2(theta)), in [0, pi/2). Throws std::domain_error
//! within 1e-9 of a tangent pole.
double activation_q(double theta);

//! Ancilla-0 probability of a single branch: cos^4(theta) + sin^4(theta), in [1/2, 1].
double success_probability(double theta);

//! theta for every source bit pattern (2^k entries, pattern as in
//! preactivation_theta).
std::vector<double> branch_thetas(const NeuronSpec& spec);

//! Entangles (output, ancilla) with the sources: on every branch with source
//! pattern x, |00> -> cos^2(t)|00> + sin(t)cos(t)|01> + sin(t)cos(t)|11> + sin^2(t)|10>
//! with t = theta(x), ordering the pair as |output, ancilla>. Requires output
//! and ancilla in |0>.
StateVector apply_neuron_premeasure(const StateVector& state, const NeuronSpec& spec);

//! Premeasure followed by projecting the ancilla onto |0>. Returns the state
//! and the success probability sum_i |a_i|^2 (cos^4 + sin^4).
std::pair<StateVector, double> apply_neuron_postselect(const StateVector& state,
                                                       const NeuronSpec& spec);

//! Physical RUS loop: premeasure, sample the ancilla; on |1> recover (X on
//! the ancilla, R_Y(-pi/2) on the output) and retry, up to max_rounds.
//! Exhausting max_rounds is a reported outcome, not an error; the returned
//! state is then the recovered pre-round state.
std::pair<StateVector, RusOutcome> apply_neuron_sampled(const StateVector& state,
                                                        const NeuronSpec& spec, RngStream& rng,
                                                        std::size_t max_rounds);

}  // namespace qnbm
