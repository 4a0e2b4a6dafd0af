#pragma once

#include <array>
#include <cstdint>

#include "cryptomimic/oracle.hpp"

namespace cryptomimic {

/// Round-reduced DES. rounds = 16 is standard DES; smaller values keep the
/// initial permutation, the half swap after the last round, and the final
/// permutation, so that every variant is a plain restriction of the standard
/// pipeline. Decryption is intentionally not part of the public surface.
class DesReducedOracle final : public CipherOracle {
public:
    /// key: 64-bit block, the 8 parity bits are ignored per the standard.
    DesReducedOracle(const BitBlock& key, int rounds);

    int rounds() const { return rounds_; }

    BitBlock evaluate(const BitBlock& plaintext) const override;

    /// uint64 fast path (bit 0 of the block = MSB of the word).
    uint64_t encrypt_word(uint64_t plaintext) const;

private:
    int rounds_;
    std::array<uint64_t, 16> subkeys_{}; // 48-bit round keys, right-aligned
};

namespace des_detail {

/// Key schedule: 16 round keys (48 bits each, right-aligned) from a 64-bit key.
std::array<uint64_t, 16> key_schedule(uint64_t key);

/// One Feistel f-function evaluation: 32-bit half + 48-bit round key -> 32 bits.
uint32_t feistel(uint32_t half, uint64_t subkey);

uint64_t initial_permutation(uint64_t block);
uint64_t final_permutation(uint64_t block);

} // namespace des_detail

} // namespace cryptomimic
