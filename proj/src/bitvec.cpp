#include "surfbasis/bitvec.hpp"

#include "surfbasis/errors.hpp"

namespace surfbasis {

BitVec BitVec::from_string(const std::string& bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw InputError("bit string may contain only '0' and '1': " + bits);
    }
  }
  return v;
}

void BitVec::resize(std::size_t nbits) {
  words_.resize(word_count(nbits), 0);
  nbits_ = nbits;
  if (nbits_ % kWordBits != 0) {
    words_.back() &= (Word{1} << (nbits_ % kWordBits)) - 1;
  }
}

bool BitVec::any() const {
  for (Word w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVec::count() const {
  std::size_t c = 0;
  for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t BitVec::find_first() const { return find_next(0); }

std::size_t BitVec::find_next(std::size_t from) const {
  if (from >= nbits_) return nbits_;
  std::size_t wi = from / kWordBits;
  Word w = words_[wi] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (w != 0) return wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return nbits_;
    w = words_[wi];
  }
}

std::size_t BitVec::find_last() const {
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    if (words_[wi] != 0) {
      return wi * kWordBits + (kWordBits - 1 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
    }
  }
  return nbits_;
}

std::vector<std::size_t> BitVec::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = find_first(); i < nbits_; i = find_next(i + 1)) out.push_back(i);
  return out;
}

void BitVec::check_same_size(const BitVec& other) const {
  if (nbits_ != other.nbits_) {
    throw InputError("bit vector length mismatch: " + std::to_string(nbits_) + " vs " +
                     std::to_string(other.nbits_));
  }
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

int BitVec::compare_numeric(const BitVec& other) const {
  check_same_size(other);
  for (std::size_t wi = words_.size(); wi-- > 0;) {
    if (words_[wi] != other.words_[wi]) return words_[wi] < other.words_[wi] ? -1 : 1;
  }
  return 0;
}

std::string BitVec::to_string() const {
  std::string s(nbits_, '0');
  for (std::size_t i = 0; i < nbits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::size_t BitVec::hash() const {
  // FNV-1a over the words.
  std::size_t h = 1469598103934665603ULL ^ nbits_;
  for (Word w : words_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ULL;
  }
  return h;
}

bool dot(const BitVec& u, const BitVec& v) {
  if (u.size() != v.size()) {
    throw InputError("dot: length mismatch " + std::to_string(u.size()) + " vs " +
                     std::to_string(v.size()));
  }
  const auto& a = u.words();
  const auto& b = v.words();
  BitVec::Word acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc ^= a[i] & b[i];
  return (std::popcount(acc) & 1) != 0;
}

}  // namespace surfbasis
