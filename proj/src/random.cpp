#include <random>

#include "ipseg/model.hpp"

namespace ipseg {

// Only raw engine output is used; std distributions are implementation-defined
// and would make fixtures compiler-dependent.
Model random_model(std::size_t n, double perm_fraction, std::int64_t coord_range,
                   std::uint64_t seed) {
  if (!(perm_fraction >= 0.0 && perm_fraction <= 1.0))
    throw std::invalid_argument("perm_fraction must lie in [0, 1]");
  if (coord_range < 1) throw std::invalid_argument("coord_range must be at least 1");

  std::mt19937_64 rng(seed);
  const auto range = static_cast<std::uint64_t>(coord_range);
  auto coord = [&] { return Coord(static_cast<std::int64_t>(rng() % range) + 1); };
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  Model model;
  model.segments.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::string id = "s" + std::to_string(i + 1);
    if (unit() < perm_fraction) {
      const Coord top = coord();
      model.segments.push_back(Segment::permutation(std::move(id), top, coord()));
    } else {
      const LineId line = (rng() & 1U) ? LineId::L2 : LineId::L1;
      Coord a = coord();
      Coord b = coord();
      if (b < a) std::swap(a, b);
      model.segments.push_back(Segment::interval(std::move(id), line, a, b));
    }
  }
  return model;
}

}  // namespace ipseg
