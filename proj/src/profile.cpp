#include "tlab/profile.hpp"

#include <bit>

#include "tlab/error.hpp"

namespace tlab {

ActionProfile::ActionProfile(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

ActionProfile ActionProfile::uniform(std::size_t n, Action c) {
  ActionProfile a(n);
  if (c == Action::B)
    for (Node i = 0; i < n; ++i) a.set(i, true);
  return a;
}

ActionProfile ActionProfile::parse(std::string_view text) {
  ActionProfile a(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'B': a.set(i, true); break;
      case 'W': break;
      default:
        throw Error(ErrorKind::InvalidInput,
                    "profile literal must contain only 'B' and 'W', got '" +
                        std::string(text) + "'",
                    {i});
    }
  }
  return a;
}

ActionProfile ActionProfile::from_code(std::size_t n, std::uint64_t code) {
  if (n > 64) throw Error(ErrorKind::BadParameter, "from_code needs n <= 64");
  ActionProfile a(n);
  if (n > 0) a.words_[0] = n == 64 ? code : code & ((std::uint64_t{1} << n) - 1);
  return a;
}

std::size_t ActionProfile::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::uint64_t ActionProfile::code() const {
  if (size_ > 64) throw Error(ErrorKind::BadParameter, "code() needs n <= 64");
  return words_.empty() ? 0 : words_[0];
}

std::string ActionProfile::str() const {
  std::string s(size_, 'W');
  for (Node i = 0; i < size_; ++i)
    if ((*this)[i]) s[i] = 'B';
  return s;
}

ActionProfile ActionProfile::inverted() const {
  ActionProfile a(size_);
  for (Node i = 0; i < size_; ++i) a.set(i, !(*this)[i]);
  return a;
}

std::strong_ordering operator<=>(const ActionProfile& a,
                                 const ActionProfile& b) noexcept {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t w = a.words_.size(); w-- > 0;)
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t ActionProfileHash::operator()(const ActionProfile& a) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ a.size();
  for (auto w : a.words()) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::vector<ActionProfile> all_profiles(std::size_t n) {
  if (n > 24) throw Error(ErrorKind::GuardExceeded, "all_profiles needs n <= 24");
  std::vector<ActionProfile> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
    out.push_back(ActionProfile::from_code(n, c));
  return out;
}

}  // namespace tlab
