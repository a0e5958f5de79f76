#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace tlab {

using Node = std::size_t;

enum class Action : bool { W = false, B = true };

inline constexpr Action flip(Action c) noexcept {
  return c == Action::B ? Action::W : Action::B;
}
inline constexpr char to_char(Action c) noexcept {
  return c == Action::B ? 'B' : 'W';
}

/// Length-n bit vector, bit i = node i, set bit = B.
///
/// Profiles order by the integer value of the bit vector with node 0 as the
/// least significant bit; that order is used wherever output is canonical.
class ActionProfile {
 public:
  ActionProfile() = default;
  /// All-W profile of length n.
  explicit ActionProfile(std::size_t n);

  static ActionProfile uniform(std::size_t n, Action c);
  /// Parses a 'B'/'W' string indexed by node id.
  static ActionProfile parse(std::string_view text);
  /// Low n bits of `code`; requires n <= 64.
  static ActionProfile from_code(std::size_t n, std::uint64_t code);

  std::size_t size() const noexcept { return size_; }
  bool operator[](Node i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  Action action(Node i) const noexcept { return Action{(*this)[i]}; }
  void set(Node i, bool black) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (black)
      words_[i >> 6] |= bit;
    else
      words_[i >> 6] &= ~bit;
  }
  void set(Node i, Action c) noexcept { set(i, c == Action::B); }

  std::size_t count() const noexcept;
  /// Integer value; requires size() <= 64.
  std::uint64_t code() const;
  std::string str() const;
  ActionProfile inverted() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ActionProfile&, const ActionProfile&) = default;
  friend std::strong_ordering operator<=>(const ActionProfile& a,
                                          const ActionProfile& b) noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ActionProfileHash {
  std::size_t operator()(const ActionProfile& a) const noexcept;
};

/// All 2^n profiles of length n in increasing order (n <= 24).
std::vector<ActionProfile> all_profiles(std::size_t n);

}  // namespace tlab
