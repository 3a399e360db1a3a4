#include "frechet/random_curves.hpp"

#include <vector>

#include "frechet/errors.hpp"

namespace frechet {

PolyCurve random_walk(std::size_t n, std::size_t dim, std::mt19937_64& rng) {
  if (n == 0 || dim == 0) throw ContractViolation("random walk needs n >= 1 and dim >= 1");
  // Drawn by hand from 53 random bits so the sequence does not depend on the
  // standard library's distribution implementation.
  const auto step = [&rng] {
    const double unit = static_cast<double>(rng() >> 11) * 0x1p-53;
    return 2.0 * unit - 1.0;
  };
  std::vector<double> coords(n * dim, 0.0);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t k = 0; k < dim; ++k) {
      coords[i * dim + k] = coords[(i - 1) * dim + k] + step();
    }
  }
  return PolyCurve(dim, std::move(coords));
}

PolyCurve random_walk(std::size_t n, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_walk(n, dim, rng);
}

}  // namespace frechet
