#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>

#include "ddist/errors.hpp"
#include "ddist/measures.hpp"

namespace ddist {

namespace {

using Complex = std::complex<double>;

// In-place iterative radix-2 FFT; `invert` computes the unnormalised
// inverse. Twiddles come straight from cos/sin rather than repeated
// multiplication, which keeps the error near machine precision.
void fft(std::vector<Complex>& a, bool invert) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<Complex> roots(n / 2);
  const double sign = invert ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = sign * 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(n);
    roots[k] = Complex(std::cos(angle), std::sin(angle));
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t step = n / len;
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex u = a[i + j];
        const Complex v = a[i + j + half] * roots[j * step];
        a[i + j] = u + v;
        a[i + j + half] = u - v;
      }
    }
  }
}

double coefficient_sum(const RealPolynomial& p) {
  return std::accumulate(p.coeffs.begin(), p.coeffs.end(), 0.0);
}

RealPolynomial multiply_pair(const RealPolynomial& a, const RealPolynomial& b) {
  if (std::min(a.size(), b.size()) < kConvolutionCutoff) {
    return poly_multiply_direct(a, b);
  }
  return poly_multiply_transform(a, b);
}

}  // namespace

RealPolynomial poly_multiply_direct(const RealPolynomial& a,
                                    const RealPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  RealPolynomial out{std::vector<double>(a.size() + b.size() - 1, 0.0)};
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a.coeffs[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out.coeffs[i + j] += ai * b.coeffs[j];
    }
  }
  return out;
}

RealPolynomial poly_multiply_transform(const RealPolynomial& a,
                                       const RealPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  const std::size_t result_size = a.size() + b.size() - 1;
  const std::size_t n = std::bit_ceil(result_size);
  std::vector<Complex> fa(n);
  std::vector<Complex> fb(n);
  std::copy(a.coeffs.begin(), a.coeffs.end(), fa.begin());
  std::copy(b.coeffs.begin(), b.coeffs.end(), fb.begin());
  fft(fa, false);
  fft(fb, false);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft(fa, true);
  RealPolynomial out{std::vector<double>(result_size)};
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < result_size; ++i) {
    out.coeffs[i] = fa[i].real() * scale;
  }
  return out;
}

RealPolynomial poly_multiply(std::span<const RealPolynomial> ps) {
  if (ps.empty()) throw ContractError("poly_multiply: no factors");
  std::vector<const RealPolynomial*> order;
  order.reserve(ps.size());
  double mass = 1.0;
  for (const auto& p : ps) {
    order.push_back(&p);
    mass *= coefficient_sum(p);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const RealPolynomial* x, const RealPolynomial* y) {
                     return x->size() < y->size();
                   });
  RealPolynomial product = *order.front();
  for (std::size_t k = 1; k < order.size(); ++k) {
    product = multiply_pair(product, *order[k]);
  }
  const double negligible = 1e-12 * std::abs(mass);
  for (double& c : product.coeffs) {
    if (c < 0.0 && -c <= negligible) c = 0.0;
  }
  return product;
}

}  // namespace ddist
