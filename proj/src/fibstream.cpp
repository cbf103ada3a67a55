#include "fibzeck/fibstream.hpp"

#include <stdexcept>

namespace fibzeck {

void BitStream::push_bit(bool bit) {
  if (bit_count_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (bit_count_ % 8));
  ++bit_count_;
}

bool BitStream::bit(std::size_t i) const {
  if (i >= bit_count_) throw std::out_of_range("BitStream::bit: index");
  return (bytes_[i / 8] >> (7 - i % 8)) & 1u;
}

std::string BitStream::to_string() const {
  std::string out;
  out.reserve(bit_count_);
  for (std::size_t i = 0; i < bit_count_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes) {
  BitStream s;
  s.bytes_.assign(bytes.begin(), bytes.end());
  s.bit_count_ = bytes.size() * 8;
  return s;
}

BitStream BitStream::from_string(std::string_view bits) {
  BitStream s;
  for (char c : bits) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("BitStream: expected only '0' or '1'");
    s.push_bit(c == '1');
  }
  return s;
}

DecodeError::DecodeError(const std::string& what_arg, std::size_t bit_pos)
    : std::runtime_error(what_arg + " at bit " + std::to_string(bit_pos)),
      bit_pos_(bit_pos) {}

namespace {

// Zeckendorf digits of n, F_2 digit first, then the terminating 1.
void append_codeword(BitStream& s, const ZeckRepr& r) {
  const auto& idx = r.indices();  // decreasing
  auto it = idx.rbegin();
  for (std::uint64_t i = 2; i <= r.top(); ++i) {
    const bool set = it != idx.rend() && *it == i;
    if (set) ++it;
    s.push_bit(set);
  }
  s.push_bit(true);
}

}  // namespace

std::string encode_int(const Nat& n) {
  BitStream s;
  append_codeword(s, zeck_encode(n));  // rejects n < 1
  return s.to_string();
}

BitStream encode_stream(std::span<const Nat> values) {
  BitStream s;
  for (const Nat& v : values) append_codeword(s, zeck_encode(v));
  return s;
}

std::vector<Nat> decode_stream(const BitStream& s) {
  std::vector<Nat> out;
  std::size_t cw_start = 0;  // bit offset of the codeword being read
  bool prev = false;
  Nat acc = 0;
  Nat fa = 1, fb = 2;  // F value of the current digit position, successor
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool bit = s.bit(i);
    if (bit && prev) {
      // First "11": the previous bit was the top digit, this one is the
      // terminator.
      out.push_back(std::move(acc));
      acc = 0;
      fa = 1;
      fb = 2;
      prev = false;
      cw_start = i + 1;
      continue;
    }
    if (bit) acc += fa;
    Nat t = fa + fb;
    fa.swap(fb);
    fb = std::move(t);
    prev = bit;
  }
  // Whatever follows the last terminator must be all-zero padding shorter
  // than a byte.
  if (acc != 0) throw DecodeError("unterminated codeword", cw_start);
  if (s.size() - cw_start >= 8) throw DecodeError("padding too long", cw_start);
  return out;
}

}  // namespace fibzeck
