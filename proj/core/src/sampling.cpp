#include "bqc/sampling.hpp"

#include <cmath>

#include "bqc/error.hpp"

namespace bqc {

Vector random_qubit(std::mt19937_64& rng, double min_magnitude) {
  if (!(min_magnitude >= 0.0) || min_magnitude > std::sqrt(0.5)) {
    throw Error(ErrorCode::InvalidArgument, "min_magnitude must lie in [0, 1/sqrt(2)]");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    Vector v(2);
    v << Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng));
    const double n = v.norm();
    if (n == 0.0) continue;
    v /= n;
    if (std::abs(v(0)) >= min_magnitude && std::abs(v(1)) >= min_magnitude) return v;
  }
}

}  // namespace bqc
