#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace surfbasis {

/// Packed bit vector over GF(2). Bits past size() are always zero.
class BitVec {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

  static BitVec unit(std::size_t nbits, std::size_t i) {
    BitVec v(nbits);
    v.set(i);
    return v;
  }
  /// Parses a string of '0'/'1' characters, bit 0 first.
  static BitVec from_string(const std::string& bits);

  std::size_t size() const { return nbits_; }
  std::size_t num_words() const { return words_.size(); }
  const std::vector<Word>& words() const { return words_; }

  bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  void flip(std::size_t i) { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }
  void assign(std::size_t i, bool value) {
    if (value) {
      set(i);
    } else {
      reset(i);
    }
  }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  void resize(std::size_t nbits);

  bool any() const;
  bool none() const { return !any(); }
  std::size_t count() const;
  /// Index of the lowest set bit, or size() if none.
  std::size_t find_first() const;
  /// Index of the lowest set bit at position >= from, or size() if none.
  std::size_t find_next(std::size_t from) const;
  /// Index of the highest set bit, or size() if none.
  std::size_t find_last() const;
  std::vector<std::size_t> ones() const;

  BitVec& operator^=(const BitVec& other);
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

  bool operator==(const BitVec& other) const = default;

  /// Compares as big binary numbers (highest bit most significant).
  /// Both operands must have the same length.
  int compare_numeric(const BitVec& other) const;

  std::string to_string() const;

  std::size_t hash() const;

 private:
  static std::size_t word_count(std::size_t nbits) { return (nbits + kWordBits - 1) / kWordBits; }
  void check_same_size(const BitVec& other) const;

  std::size_t nbits_ = 0;
  std::vector<Word> words_;
};

/// Inner product over GF(2): parity of the bitwise AND.
bool dot(const BitVec& u, const BitVec& v);

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.hash(); }
};

}  // namespace surfbasis
