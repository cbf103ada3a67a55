#pragma once
// fibstream.hpp - self-delimiting Fibonacci-code stream codec. The codeword
// of n >= 1 is its Zeckendorf digit vector written smallest index (F_2)
// first, followed by an extra 1. Zeckendorf digits never contain "11", so
// the appended bit creates the first "11" of the codeword, which is where a
// decoder cuts.

#include "fibzeck/fibcore.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibzeck {

// Append-only bit sequence. Byte packing is MSB-first: the stream's first
// bit is the most significant bit of byte 0, and the final partial byte is
// zero-padded on the right.
class BitStream {
 public:
  BitStream() = default;

  void push_bit(bool bit);
  std::size_t size() const noexcept { return bit_count_; }
  bool bit(std::size_t i) const;  // requires i < size()
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  std::string to_string() const;
  // Interprets every bit of `bytes`; size() becomes 8 * bytes.size().
  static BitStream from_bytes(std::span<const std::uint8_t> bytes);
  // Parses a '0'/'1' string; throws std::invalid_argument on other chars.
  static BitStream from_string(std::string_view bits);

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t bit_count_ = 0;
};

// Malformed stream: carries the bit offset of the offending codeword.
class DecodeError : public std::runtime_error {
 public:
  DecodeError(const std::string& what_arg, std::size_t bit_pos);
  std::size_t bit_pos() const noexcept { return bit_pos_; }

 private:
  std::size_t bit_pos_;
};

// The codeword of n >= 1 as a '0'/'1' string.
std::string encode_int(const Nat& n);

// Concatenated codewords of `values`; every value must be >= 1.
BitStream encode_stream(std::span<const Nat> values);

// Splits the stream at each first "11" and decodes the codewords. After the
// last codeword at most 7 zero bits of padding may remain. Throws
// DecodeError ("unterminated codeword" / "padding too long") otherwise.
std::vector<Nat> decode_stream(const BitStream& s);

}  // namespace fibzeck
