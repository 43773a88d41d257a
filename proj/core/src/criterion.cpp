#include "absirr/criterion.hpp"

namespace absirr {

std::string CriterionShape::row_label(std::size_t row) const {
  const int width = 2 * n_ - 1;
  const int k = static_cast<int>(row) / width;
  const int l = static_cast<int>(row) % width;
  return "g(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

std::string CriterionShape::col_label(std::size_t col) const {
  if (col < u_count()) {
    const int c = static_cast<int>(col);
    return "u(" + std::to_string(c / (n_ + 1)) + "," + std::to_string(c % (n_ + 1)) + ")";
  }
  const int c = static_cast<int>(col - u_count());
  return "v(" + std::to_string(c / (n_ - 1)) + "," + std::to_string(c % (n_ - 1)) + ")";
}

}  // namespace absirr
