#include "stabminor/bitvec.hpp"

#include <stdexcept>

namespace stabminor::f2 {

BitVector BitVector::from_string(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i, true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitVector::from_string: expected 0/1");
    }
  }
  return v;
}

std::string BitVector::to_string() const {
  std::string s(n_bits_, '0');
  for (std::size_t i = 0; i < n_bits_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

}  // namespace stabminor::f2
