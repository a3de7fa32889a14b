#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qnbm/distributions.hpp"
#include "qnbm/rng.hpp"

namespace qnbm {

using Amplitude = std::complex<double>;

//! Thrown when a projection is requested onto an outcome whose Born
//! probability is below the representable floor (1e-14).
struct ImpossiblePostselection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

//! Ordered list of distinct qubit indices.
class QubitSet {
  public:
    QubitSet() = default;
    QubitSet(std::initializer_list<std::size_t> qubits);
    explicit QubitSet(std::vector<std::size_t> qubits);  // throws on duplicates

    std::size_t size() const { return qubits_.size(); }
    bool empty() const { return qubits_.empty(); }
    std::size_t operator[](std::size_t i) const { return qubits_[i]; }
    auto begin() const { return qubits_.begin(); }
    auto end() const { return qubits_.end(); }
    bool contains(std::size_t q) const;

    //! Throws if any index is >= num_qubits.
    void check_range(std::size_t num_qubits) const;

  private:
    std::vector<std::size_t> qubits_;
};

//! Dense complex statevector over an ordered qubit register. Qubit 0 is the
//! least-significant bit of the amplitude index. Value type; operations
//! return new states.
class StateVector {
  public:
    //! |0...0> on num_qubits qubits.
    explicit StateVector(std::size_t num_qubits);

    //! Arbitrary amplitudes; throws unless the squared norm is 1 within 1e-12.
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Amplitude> amplitudes() const { return amplitudes_; }
    Amplitude amplitude(std::uint64_t basis_index) const { return amplitudes_.at(basis_index); }

    double squared_norm() const;

  private:
    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;

    struct Unchecked {};
    StateVector(Unchecked, std::size_t num_qubits, std::vector<Amplitude> amplitudes)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

    friend StateVector make_state_unchecked(std::size_t, std::vector<Amplitude>);
};

//! Internal: construct without the norm check (for operations that preserve it).
StateVector make_state_unchecked(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

//! Basis state |basis_index> on num_qubits qubits.
StateVector new_basis(std::size_t num_qubits, std::uint64_t basis_index);

//! Puts each listed qubit (required to be in |0>) into (|0>+|1>)/sqrt(2).
StateVector apply_uniform_superposition(const StateVector& state, const QubitSet& qubits);

//! Projects one qubit onto `outcome` and renormalizes. Returns the
//! post-measurement state and the Born probability of the outcome.
//! Throws ImpossiblePostselection when that probability is below 1e-14.
std::pair<StateVector, double> project_qubit(const StateVector& state, std::size_t qubit,
                                             int outcome);

//! Marginal Born distribution over the listed qubits: bit j of the resulting
//! bitstring is the value of qubits[j].
DiscreteDistribution marginal_distribution(const StateVector& state, const QubitSet& qubits);

//! Multinomial sample of the marginal distribution; deterministic per seed.
std::map<std::uint64_t, std::uint64_t> sample_bitstrings(const StateVector& state,
                                                         const QubitSet& qubits,
                                                         std::uint64_t shots, std::uint64_t seed);

}  // namespace qnbm
