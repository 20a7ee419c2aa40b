#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "udooc/errors.hpp"

namespace udooc {

// MSB-first bit packing. Bytes are emitted as soon as eight bits are
// collected; flush() zero-pads the final partial octet.
class BitWriter {
public:
  void put_bit(int b) {
    current_ = static_cast<std::uint8_t>((current_ << 1) | (b & 1));
    if (++fill_ == 8) {
      bytes_.push_back(current_);
      current_ = 0;
      fill_ = 0;
    }
    ++bit_count_;
  }

  void put_bits(std::span<const std::uint8_t> bits) {
    for (auto b : bits) put_bit(b);
  }

  void put_byte(std::uint8_t v) {
    for (int i = 7; i >= 0; --i) put_bit((v >> i) & 1);
  }

  void put_u64_be(std::uint64_t v) {
    for (int i = 7; i >= 0; --i) put_byte(static_cast<std::uint8_t>(v >> (8 * i)));
  }

  void flush() {
    if (fill_ != 0) {
      bytes_.push_back(static_cast<std::uint8_t>(current_ << (8 - fill_)));
      current_ = 0;
      fill_ = 0;
    }
  }

  std::uint64_t bit_count() const { return bit_count_; }

  std::vector<std::uint8_t> take() {
    flush();
    return std::move(bytes_);
  }

private:
  std::vector<std::uint8_t> bytes_;
  std::uint8_t current_ = 0;
  int fill_ = 0;
  std::uint64_t bit_count_ = 0;
};

class BitReader {
public:
  explicit BitReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  int get_bit() {
    if (pos_ >= 8 * bytes_.size()) throw FramingError("container truncated");
    const std::uint8_t byte = bytes_[pos_ >> 3];
    const int bit = (byte >> (7 - (pos_ & 7))) & 1;
    ++pos_;
    return bit;
  }

  std::uint8_t get_byte() {
    std::uint8_t v = 0;
    for (int i = 0; i < 8; ++i) v = static_cast<std::uint8_t>((v << 1) | get_bit());
    return v;
  }

  std::uint64_t get_u64_be() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v = (v << 8) | get_byte();
    return v;
  }

  std::uint64_t position_bits() const { return pos_; }
  std::uint64_t remaining_bits() const { return 8 * bytes_.size() - pos_; }

private:
  std::span<const std::uint8_t> bytes_;
  std::uint64_t pos_ = 0;
};

}  // namespace udooc
