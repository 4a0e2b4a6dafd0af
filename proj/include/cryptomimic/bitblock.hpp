#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cryptomimic {

/// How bits are mapped onto network input features.
enum class FeatureEncoding {
    ZeroOne,      // 0 -> 0.0, 1 -> 1.0 (default)
    PlusMinusOne, // 0 -> -1.0, 1 -> +1.0
};

/// Fixed-length ordered bit string. Bit index 0 is the most significant bit
/// of the hex/byte representation; cipher permutation tables (1-based in the
/// published standards) are shifted to this 0-based indexing.
///
/// Immutable by convention once constructed; every operation returns a new
/// value, so blocks can be shared freely across threads.
class BitBlock {
public:
    BitBlock() = default;
    explicit BitBlock(std::vector<uint8_t> bits);

    static BitBlock zeros(size_t length);
    static BitBlock ones(size_t length);

    /// First `length` bits of the big-endian bit expansion of `hex`
    /// (MSB of the first digit is bit 0). Requires 4*digits >= length.
    static BitBlock from_hex(std::string_view hex, size_t length);

    /// Inverse of to_hex(): interprets `hex` as a big-endian integer of
    /// `length` bits. The digit count must be ceil(length/4) and any pad
    /// bits above `length` must be zero. Used by the dataset file formats.
    static BitBlock from_hex_value(std::string_view hex, size_t length);

    /// First `length` bits of `bytes`, MSB-first within each byte.
    static BitBlock from_bytes(std::span<const uint8_t> bytes, size_t length);

    /// Low `length` bits of `value`, most significant first. length <= 64.
    static BitBlock from_uint(uint64_t value, size_t length);

    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    uint8_t operator[](size_t i) const { return bits_[i]; }
    const std::vector<uint8_t>& bits() const { return bits_; }

    /// Big-endian integer hex form, uppercase, ceil(size/4) digits.
    /// For sizes that are a multiple of 4 this is the exact inverse of
    /// from_hex; shorter blocks are right-aligned within the leading digit
    /// (e.g. the single-bit block [1] prints as "1").
    std::string to_hex() const;

    /// MSB-first packing, final byte zero-padded.
    std::vector<uint8_t> to_bytes() const;

    /// Big-endian integer value. Requires size <= 64.
    uint64_t to_uint() const;

    bool operator==(const BitBlock&) const = default;

private:
    std::vector<uint8_t> bits_;
};

/// Bitwise exclusive-or of two equal-length blocks.
BitBlock xor_blocks(const BitBlock& a, const BitBlock& b);

/// Numeric encoding of bits for network input (one real per bit).
std::vector<float> encode_features(const BitBlock& b,
                                   FeatureEncoding encoding = FeatureEncoding::ZeroOne);

/// Inverse of encode_features under threshold-at-midpoint decoding.
BitBlock decode_features(std::span<const float> features,
                         FeatureEncoding encoding = FeatureEncoding::ZeroOne);

} // namespace cryptomimic
