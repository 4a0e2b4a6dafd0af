#pragma once

#include <array>
#include <cstdint>

#include "cryptomimic/oracle.hpp"

namespace cryptomimic {

/// Hitag2 stream cipher core, per the public reverse-engineered specification.
/// State bits are numbered as in the reference description: index 0 is the bit
/// that leaves the register on the next shift, the feedback bit enters at
/// index 47. BitBlock index i corresponds to state bit i.
namespace hitag2 {

/// The 20 state positions the output filter reads.
extern const std::array<int, 20> kFilterTaps;

/// uint48 packing of a state block: word bit i = block bit i.
uint64_t state_to_word(const BitBlock& state);
BitBlock word_to_state(uint64_t word);

/// One keystream bit from the two-level boolean filter over the tap bits.
int filter_word(uint64_t state);
int filter(const BitBlock& state);

/// Linear feedback shift: returns the successor state.
uint64_t step_word(uint64_t state);

struct StepResult {
    BitBlock next_state;
    int out_bit;
};

/// out_bit = filter(state); next_state = shift with the feedback polynomial.
StepResult step(const BitBlock& state);

} // namespace hitag2

enum class Hitag2Mode { Filter, KeystreamStep };

/// 48-bit LFSR state -> 1 keystream bit. The mode does not change evaluate();
/// it selects how datasets are collected (independent uniform states vs a
/// keystream walk, see PairSet generation).
class Hitag2Oracle final : public CipherOracle {
public:
    explicit Hitag2Oracle(Hitag2Mode mode = Hitag2Mode::Filter);

    Hitag2Mode mode() const { return mode_; }

    BitBlock evaluate(const BitBlock& state) const override;

private:
    Hitag2Mode mode_;
};

} // namespace cryptomimic
