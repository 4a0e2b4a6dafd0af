#pragma once

#include <map>
#include <memory>
#include <string>

#include "cryptomimic/bitblock.hpp"

namespace cryptomimic {

/// Abstract black-box mapping from m input bits to n output bits. Any key
/// material is fixed at construction and never exposed to the attack side.
/// Oracles are immutable after construction; evaluate may be called
/// concurrently from many threads.
class CipherOracle {
public:
    virtual ~CipherOracle() = default;

    const std::string& name() const { return name_; }
    int input_bits() const { return input_bits_; }
    int output_bits() const { return output_bits_; }

    /// Total deterministic function: same input always yields the same output.
    virtual BitBlock evaluate(const BitBlock& input) const = 0;

protected:
    CipherOracle(std::string name, int input_bits, int output_bits);

    void check_input(const BitBlock& input) const;

private:
    std::string name_;
    int input_bits_;
    int output_bits_;
};

enum class ReferenceKind { Identity, Constant, FixedPermutation, RandomFunction };

/// Trivial oracles used as test fixtures for the evaluator.
///   identity          : output = input (requires equal widths)
///   constant          : all-zero output
///   fixed-permutation : output = input with bit order reversed (equal widths)
///   random-function   : seeded deterministic hash truncated to n bits
std::unique_ptr<CipherOracle> make_reference_oracle(ReferenceKind kind, int input_bits,
                                                    int output_bits, uint64_t seed = 0);

/// Oracle selection by name + parameter map, as used by CLI/config.
/// Names: "des" (rounds, key), "hitag2" (mode), "identity" (bits),
/// "constant" (in_bits, out_bits), "permutation" (bits),
/// "random-function" (in_bits, out_bits, seed).
std::unique_ptr<CipherOracle> make_oracle(const std::string& name,
                                          const std::map<std::string, std::string>& params);

} // namespace cryptomimic
