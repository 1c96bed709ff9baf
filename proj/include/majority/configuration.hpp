#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace majority {

// One opinion bit per node, packed 64 to a word. Unused high bits of the last
// word are kept zero so that equality and hashing can work word-wise.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t n, bool value = false)
      : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
    trim();
  }

  static Configuration from_string(std::string_view bits) {
    Configuration x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1')
        x.set(i, true);
      else if (bits[i] != '0')
        throw std::invalid_argument("configuration must consist of '0' and '1'");
    }
    return x;
  }

  // Bit i of `mask` becomes node i.
  static Configuration from_mask(std::uint64_t mask, std::size_t n) {
    Configuration x(n);
    if (n > 0) x.words_[0] = n >= 64 ? mask : mask & ((std::uint64_t{1} << n) - 1);
    return x;
  }

  std::size_t size() const { return n_; }
  bool operator[](std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value) {
    std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= bit;
    else
      words_[i / 64] &= ~bit;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count_ones() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  Configuration complement() const {
    Configuration out = *this;
    for (auto& w : out.words_) w = ~w;
    out.trim();
    return out;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if ((*this)[i]) s[i] = '1';
    return s;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  void trim() {
    if (n_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ConfigurationHash {
  std::size_t operator()(const Configuration& x) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ x.size();
    for (auto w : x.words()) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace majority
