#include "tvcat/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace tvcat {

std::vector<Map> permutations(std::size_t n) {
  Map p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Map> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace tvcat
