#include "element_set.hpp"

#include <stdexcept>

namespace artinx {

std::string ElementSet::to_hex(std::size_t order) const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t width = order == 0 ? 1 : (order + 3) / 4;
  std::string out(width, '0');
  for (std::size_t d = 0; d < width; ++d) {
    unsigned nibble = 0;
    for (std::size_t b = 0; b < 4; ++b) {
      const std::size_t bit = d * 4 + b;
      if (bit < kMaxOrder && contains(static_cast<Element>(bit))) nibble |= 1U << b;
    }
    out[width - 1 - d] = kDigits[nibble];
  }
  return out;
}

ElementSet ElementSet::from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() > kMaxOrder / 4)
    throw std::invalid_argument("bad subgroup bit string length");
  ElementSet s;
  const std::size_t width = hex.size();
  for (std::size_t d = 0; d < width; ++d) {
    const char c = hex[width - 1 - d];
    unsigned nibble;
    if (c >= '0' && c <= '9') nibble = static_cast<unsigned>(c - '0');
    else if (c >= 'a' && c <= 'f') nibble = static_cast<unsigned>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') nibble = static_cast<unsigned>(c - 'A' + 10);
    else throw std::invalid_argument("bad hex digit in subgroup bit string");
    for (std::size_t b = 0; b < 4; ++b)
      if (nibble & (1U << b)) s.insert(static_cast<Element>(d * 4 + b));
  }
  return s;
}

}  // namespace artinx
