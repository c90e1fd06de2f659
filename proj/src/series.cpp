#include "polydecomp/series.hpp"

namespace polydecomp {

std::vector<std::size_t> newton_schedule(std::size_t k) {
  std::vector<std::size_t> lengths;
  for (std::size_t m = k; m > 1; m = (m + 1) / 2) lengths.push_back(m);
  lengths.push_back(1);
  return {lengths.rbegin(), lengths.rend()};
}

}  // namespace polydecomp
