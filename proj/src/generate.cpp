#include <algorithm>
#include <random>
#include <string>

#include "ddist/errors.hpp"
#include "ddist/geom.hpp"

namespace ddist {

namespace {

// Uniform double in [0,1) built from the top 53 bits, so instances are
// identical across standard libraries.
class UnitRng {
 public:
  explicit UnitRng(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 engine_;
};

AxisBox corner_pair_box(UnitRng& rng, std::size_t d) {
  std::vector<double> lo(d);
  std::vector<double> hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double a = rng.next();
    const double b = rng.next();
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  return AxisBox(std::move(lo), std::move(hi));
}

AxisBox slab_box(UnitRng& rng, std::size_t d) {
  const std::size_t axis = rng.below(d);
  std::vector<double> lo(d, 0.0);
  std::vector<double> hi(d, 1.0);
  const double a = rng.next();
  const double b = rng.next();
  lo[axis] = std::min(a, b);
  hi[axis] = std::max(a, b);
  return AxisBox(std::move(lo), std::move(hi));
}

AxisBox cube_box(UnitRng& rng, std::size_t d) {
  const double side = 0.05 + 0.45 * rng.next();
  std::vector<double> lo(d);
  std::vector<double> hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = (1.0 - side) * rng.next();
    hi[i] = lo[i] + side;
  }
  return AxisBox(std::move(lo), std::move(hi));
}

std::vector<AxisBox> containing_chain(UnitRng& rng, std::size_t n,
                                      std::size_t d) {
  std::vector<AxisBox> boxes;
  boxes.reserve(n);
  std::vector<double> lo(d);
  std::vector<double> hi(d);
  // The outermost box may already cover the domain.
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = -0.25 + 0.5 * rng.next();
    hi[i] = 0.75 + 0.5 * rng.next();
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      for (std::size_t i = 0; i < d; ++i) {
        const double w = hi[i] - lo[i];
        lo[i] += 0.3 * w * rng.next();
        hi[i] -= 0.3 * w * rng.next();
      }
    }
    boxes.emplace_back(lo, hi);
  }
  return boxes;
}

}  // namespace

GeneratorKind parse_generator_kind(std::string_view name) {
  if (name == "uniform") return GeneratorKind::uniform;
  if (name == "slabs") return GeneratorKind::slabs;
  if (name == "cubes") return GeneratorKind::cubes;
  if (name == "containing-chain") return GeneratorKind::containing_chain;
  throw InputError("unknown generator kind '" + std::string(name) +
                   "' (expected uniform, slabs, cubes or containing-chain)");
}

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::uniform: return "uniform";
    case GeneratorKind::slabs: return "slabs";
    case GeneratorKind::cubes: return "cubes";
    case GeneratorKind::containing_chain: return "containing-chain";
  }
  return "?";
}

Instance generate(GeneratorKind kind, std::size_t n, std::size_t d,
                  std::uint64_t seed) {
  if (d == 0) throw InputError("generate: dimension must be at least 1");
  UnitRng rng(seed);
  std::vector<AxisBox> boxes;
  boxes.reserve(n);
  switch (kind) {
    case GeneratorKind::uniform:
      for (std::size_t k = 0; k < n; ++k) boxes.push_back(corner_pair_box(rng, d));
      break;
    case GeneratorKind::slabs:
      for (std::size_t k = 0; k < n; ++k) boxes.push_back(slab_box(rng, d));
      break;
    case GeneratorKind::cubes:
      for (std::size_t k = 0; k < n; ++k) boxes.push_back(cube_box(rng, d));
      break;
    case GeneratorKind::containing_chain:
      boxes = containing_chain(rng, n, d);
      break;
  }
  return Instance(DomainBox::unit(d), std::move(boxes));
}

Instance generate_with_profile(std::size_t n, std::size_t d,
                               std::size_t profile, std::uint64_t seed) {
  if (d == 0) throw InputError("generate: dimension must be at least 1");
  if (profile == 0) throw InputError("generate: profile must be at least 1");
  UnitRng rng(seed);
  const std::size_t groups = std::max<std::size_t>(1, (n + profile - 1) / profile);
  const double half = 0.5 / static_cast<double>(groups);
  std::vector<AxisBox> boxes;
  boxes.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    AxisBox base = corner_pair_box(rng, d);
    std::vector<double> lo(base.lo().begin(), base.lo().end());
    std::vector<double> hi(base.hi().begin(), base.hi().end());
    const double centre = (static_cast<double>(k / profile) + 0.5) * 2.0 * half;
    lo[0] = centre - half * (0.02 + 0.96 * rng.next());
    hi[0] = centre + half * (0.02 + 0.96 * rng.next());
    boxes.emplace_back(std::move(lo), std::move(hi));
  }
  return Instance(DomainBox::unit(d), std::move(boxes));
}

}  // namespace ddist
