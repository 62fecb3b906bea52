#include "picard/exponent.hpp"

#include <sstream>

namespace picard {

std::string Exponent::to_string() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < e_.size(); ++i) {
    if (i) os << ", ";
    os << e_[i];
  }
  os << ')';
  return os.str();
}

}  // namespace picard
