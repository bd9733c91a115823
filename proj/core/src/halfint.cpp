#include "lspace/halfint.hpp"

#include <stdexcept>

namespace lspace {

std::int64_t HalfInt::to_int() const {
  if (!is_integral()) throw std::domain_error("half-integer " + str() + " is not an integer");
  return d_ / 2;
}

std::string HalfInt::str() const {
  if (is_integral()) return std::to_string(d_ / 2);
  return std::to_string(d_) + "/2";
}

}  // namespace lspace
