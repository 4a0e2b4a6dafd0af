#include "cryptomimic/hitag2.hpp"

#include "cryptomimic/errors.hpp"

namespace cryptomimic {
namespace hitag2 {

namespace {

// Filter truth tables from the reverse-engineered specification. A table bit
// at index b3 b2 b1 b0 is the output for tap bits (t0..t3) = (b0..b3), the
// lowest-numbered tap being the least significant index bit.
constexpr uint32_t kF4a = 0x2C79u;
constexpr uint32_t kF4b = 0x6671u;
constexpr uint32_t kF5c = 0x7907287Bu;

inline uint32_t pick4(uint64_t x, int a, int b, int c, int d) {
    return static_cast<uint32_t>(((x >> a) & 1) | ((x >> b) & 1) << 1 |
                                 ((x >> c) & 1) << 2 | ((x >> d) & 1) << 3);
}

} // namespace

const std::array<int, 20> kFilterTaps = {1,  2,  4,  5,  7,  11, 13, 14, 16, 20,
                                         22, 25, 27, 28, 30, 32, 33, 42, 43, 45};

uint64_t state_to_word(const BitBlock& state) {
    if (state.size() != 48) {
        throw LengthError("Hitag2 state must be 48 bits, got " + std::to_string(state.size()));
    }
    uint64_t w = 0;
    for (int i = 0; i < 48; ++i) {
        w |= static_cast<uint64_t>(state[static_cast<size_t>(i)]) << i;
    }
    return w;
}

BitBlock word_to_state(uint64_t word) {
    std::vector<uint8_t> bits(48);
    for (int i = 0; i < 48; ++i) bits[static_cast<size_t>(i)] = (word >> i) & 1;
    return BitBlock(std::move(bits));
}

int filter_word(uint64_t x) {
    const uint32_t i5 = ((kF4a >> pick4(x, 1, 2, 4, 5)) & 1) << 0 |
                        ((kF4b >> pick4(x, 7, 11, 13, 14)) & 1) << 1 |
                        ((kF4b >> pick4(x, 16, 20, 22, 25)) & 1) << 2 |
                        ((kF4b >> pick4(x, 27, 28, 30, 32)) & 1) << 3 |
                        ((kF4a >> pick4(x, 33, 42, 43, 45)) & 1) << 4;
    return static_cast<int>((kF5c >> i5) & 1);
}

int filter(const BitBlock& state) { return filter_word(state_to_word(state)); }

uint64_t step_word(uint64_t x) {
    const uint64_t fb = ((x >> 0) ^ (x >> 2) ^ (x >> 3) ^ (x >> 6) ^ (x >> 7) ^ (x >> 8) ^
                         (x >> 16) ^ (x >> 22) ^ (x >> 23) ^ (x >> 26) ^ (x >> 30) ^
                         (x >> 41) ^ (x >> 42) ^ (x >> 43) ^ (x >> 46) ^ (x >> 47)) &
                        1;
    return (x >> 1) | (fb << 47);
}

StepResult step(const BitBlock& state) {
    const uint64_t w = state_to_word(state);
    return StepResult{word_to_state(step_word(w)), filter_word(w)};
}

} // namespace hitag2

Hitag2Oracle::Hitag2Oracle(Hitag2Mode mode)
    : CipherOracle(mode == Hitag2Mode::Filter ? "hitag2" : "hitag2(mode=keystream-step)", 48, 1),
      mode_(mode) {}

BitBlock Hitag2Oracle::evaluate(const BitBlock& state) const {
    check_input(state);
    return BitBlock::from_uint(static_cast<uint64_t>(hitag2::filter(state)), 1);
}

} // namespace cryptomimic
