#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qnbm {

//! Normalized probability vector over length-N bitstrings, indexed by the
//! bitstring's integer value. Bit j of the index is the value of bit j;
//! rendered text is most-significant-first.
struct DiscreteDistribution {
    std::size_t num_bits = 0;
    std::vector<double> probabilities;  // length 2^num_bits

    DiscreteDistribution() = default;
    DiscreteDistribution(std::size_t bits, std::vector<double> probs);

    std::size_t dim() const { return probabilities.size(); }

    //! Throws std::invalid_argument unless entries are >= 0 and sum to 1 within 1e-12.
    void validate() const;

    //! Number of entries with nonzero probability.
    std::size_t support_size() const;
};

//! Uniform distribution over rows*cols-bit grids whose rows are all constant
//! or whose columns are all constant. Cell (r,c) is bit N-1-(r*cols+c) of the
//! index, i.e. the rendered string read row-major. Support is found by
//! enumeration.
DiscreteDistribution bars_and_stripes(std::size_t rows, std::size_t cols);

//! Uniform distribution over bitstrings with exactly `ones` set bits.
DiscreteDistribution cardinality(std::size_t num_bits, std::size_t ones);

struct GaussianSpec {
    std::size_t num_bits = 0;
    double mean = 0.0;    // in bitstring-integer units
    double stddev = 1.0;  // > 0

    //! Mean centered between the two middle bitstrings: (2^N - 1) / 2.
    static GaussianSpec centered(std::size_t num_bits, double stddev);
};

//! Gaussian density evaluated at integer bitstring values 0..2^N-1, renormalized.
DiscreteDistribution discrete_gaussian(const GaussianSpec& spec);

//! (1/2) * sum |p_i - q_i|
double total_variation(const DiscreteDistribution& p, const DiscreteDistribution& q);

//! Bitstring rendered most-significant-first, e.g. (5, 3 bits) -> "101".
std::string bitstring_text(std::uint64_t value, std::size_t num_bits);

//! CSV rows "bitstring,probability", header included; byte-stable formatting.
void write_distribution_csv(const DiscreteDistribution& dist, std::ostream& out);

}  // namespace qnbm
