#include "cryptomimic/bitblock.hpp"

#include <algorithm>

#include "cryptomimic/errors.hpp"

namespace cryptomimic {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw FormatError(std::string("invalid hex character '") + c + "'");
}

void check_length(size_t length) {
    if (length == 0) throw LengthError("bit length must be at least 1");
    if (length > 1024) throw LengthError("bit lengths beyond 1024 are not supported");
}

} // namespace

BitBlock::BitBlock(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    check_length(bits_.size());
    for (uint8_t b : bits_) {
        if (b > 1) throw FormatError("bit values must be 0 or 1");
    }
}

BitBlock BitBlock::zeros(size_t length) {
    check_length(length);
    BitBlock b;
    b.bits_.assign(length, 0);
    return b;
}

BitBlock BitBlock::ones(size_t length) {
    check_length(length);
    BitBlock b;
    b.bits_.assign(length, 1);
    return b;
}

BitBlock BitBlock::from_hex(std::string_view hex, size_t length) {
    check_length(length);
    if (4 * hex.size() < length) {
        throw LengthError("hex string '" + std::string(hex) + "' has fewer than " +
                          std::to_string(length) + " bits");
    }
    BitBlock b;
    b.bits_.resize(length);
    for (size_t i = 0; i < length; ++i) {
        const int d = hex_digit(hex[i / 4]);
        b.bits_[i] = static_cast<uint8_t>((d >> (3 - i % 4)) & 1);
    }
    // remaining digits must still be valid hex
    for (size_t i = (length + 3) / 4; i < hex.size(); ++i) hex_digit(hex[i]);
    return b;
}

BitBlock BitBlock::from_hex_value(std::string_view hex, size_t length) {
    check_length(length);
    const size_t digits = (length + 3) / 4;
    if (hex.size() != digits) {
        throw LengthError("expected " + std::to_string(digits) + " hex digits for a " +
                          std::to_string(length) + "-bit value, got " +
                          std::to_string(hex.size()));
    }
    const size_t pad = 4 * digits - length;
    if (pad > 0 && (hex_digit(hex[0]) >> (4 - pad)) != 0) {
        throw FormatError("hex value '" + std::string(hex) + "' does not fit in " +
                          std::to_string(length) + " bits");
    }
    BitBlock b;
    b.bits_.resize(length);
    for (size_t i = 0; i < length; ++i) {
        const size_t pos = i + pad; // bit position in the padded expansion
        const int d = hex_digit(hex[pos / 4]);
        b.bits_[i] = static_cast<uint8_t>((d >> (3 - pos % 4)) & 1);
    }
    return b;
}

BitBlock BitBlock::from_bytes(std::span<const uint8_t> bytes, size_t length) {
    check_length(length);
    if (8 * bytes.size() < length) throw LengthError("byte buffer too short");
    BitBlock b;
    b.bits_.resize(length);
    for (size_t i = 0; i < length; ++i) {
        b.bits_[i] = static_cast<uint8_t>((bytes[i / 8] >> (7 - i % 8)) & 1);
    }
    return b;
}

BitBlock BitBlock::from_uint(uint64_t value, size_t length) {
    check_length(length);
    if (length > 64) throw LengthError("from_uint supports at most 64 bits");
    BitBlock b;
    b.bits_.resize(length);
    for (size_t i = 0; i < length; ++i) {
        b.bits_[i] = static_cast<uint8_t>((value >> (length - 1 - i)) & 1);
    }
    return b;
}

std::string BitBlock::to_hex() const {
    static constexpr char kDigits[] = "0123456789ABCDEF";
    const size_t digits = (size() + 3) / 4;
    const size_t pad = 4 * digits - size();
    std::vector<uint8_t> nibbles(digits, 0);
    for (size_t i = 0; i < size(); ++i) {
        const size_t pos = i + pad;
        if (bits_[i]) nibbles[pos / 4] |= static_cast<uint8_t>(1 << (3 - pos % 4));
    }
    std::string out(digits, '0');
    for (size_t i = 0; i < digits; ++i) out[i] = kDigits[nibbles[i]];
    return out;
}

std::vector<uint8_t> BitBlock::to_bytes() const {
    std::vector<uint8_t> out((size() + 7) / 8, 0);
    for (size_t i = 0; i < size(); ++i) {
        if (bits_[i]) out[i / 8] |= static_cast<uint8_t>(1 << (7 - i % 8));
    }
    return out;
}

uint64_t BitBlock::to_uint() const {
    if (size() > 64) throw LengthError("to_uint supports at most 64 bits");
    uint64_t v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

BitBlock xor_blocks(const BitBlock& a, const BitBlock& b) {
    if (a.size() != b.size()) {
        throw LengthError("xor requires equal lengths (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    }
    std::vector<uint8_t> bits(a.size());
    for (size_t i = 0; i < a.size(); ++i) bits[i] = a[i] ^ b[i];
    return BitBlock(std::move(bits));
}

std::vector<float> encode_features(const BitBlock& b, FeatureEncoding encoding) {
    std::vector<float> out(b.size());
    const float lo = encoding == FeatureEncoding::ZeroOne ? 0.0f : -1.0f;
    for (size_t i = 0; i < b.size(); ++i) out[i] = b[i] ? 1.0f : lo;
    return out;
}

BitBlock decode_features(std::span<const float> features, FeatureEncoding encoding) {
    const float threshold = encoding == FeatureEncoding::ZeroOne ? 0.5f : 0.0f;
    std::vector<uint8_t> bits(features.size());
    for (size_t i = 0; i < features.size(); ++i) bits[i] = features[i] > threshold ? 1 : 0;
    return BitBlock(std::move(bits));
}

} // namespace cryptomimic
