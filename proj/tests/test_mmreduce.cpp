#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "ddist/errors.hpp"
#include "ddist/mmreduce.hpp"
#include "ddist/oracle.hpp"
#include "ddist/sdc.hpp"

using namespace ddist;

namespace {

NonnegativeMatrix random_matrix(std::mt19937_64& rng, std::size_t n, double zero_rate = 0.0) {
  std::uniform_real_distribution<double> u(0.0, 10.0);
  std::bernoulli_distribution zero(zero_rate);
  std::vector<double> e(n * n);
  for (double& x : e) x = zero(rng) ? 0.0 : u(rng);
  return NonnegativeMatrix(n, e);
}

}  // namespace

TEST_CASE("matrices validate their entries") {
  CHECK_THROWS_AS(NonnegativeMatrix(2, {1, 2, 3}), InputError);
  CHECK_THROWS_AS(NonnegativeMatrix(2, {1, -2, 3, 4}), InputError);
  CHECK_THROWS_AS(NonnegativeMatrix(1, {NAN}), InputError);
  CHECK(NonnegativeMatrix::identity(2) == NonnegativeMatrix(2, {1, 0, 0, 1}));
}

TEST_CASE("matrix CSV") {
  const auto m = read_matrix_csv("1, 2.5\n3,4e-3\n\n");
  CHECK(m == NonnegativeMatrix(2, {1, 2.5, 3, 4e-3}));
  CHECK(write_matrix_csv(m) == "1,2.5\n3,0.004\n");
  CHECK(read_matrix_csv(write_matrix_csv(m)) == m);
  const NonnegativeMatrix odd(1, {1.0 / 3.0});
  CHECK(read_matrix_csv(write_matrix_csv(odd)) == odd);

  CHECK_THROWS_AS(read_matrix_csv("1,2\n3\n"), InputError);
  CHECK_THROWS_AS(read_matrix_csv("1,x\n3,4\n"), InputError);
  CHECK_THROWS_AS(read_matrix_csv("1,-2\n3,4\n"), InputError);
  CHECK_THROWS_AS(read_matrix_csv(""), InputError);
  CHECK_THROWS_AS(read_matrix_csv("1,2,3\n4,5,6\n"), InputError);
}

TEST_CASE("direct product") {
  std::mt19937_64 rng(1);
  const auto b = random_matrix(rng, 3);
  CHECK(direct_product(NonnegativeMatrix::identity(3), b) == b);
  CHECK_THROWS_AS(direct_product(NonnegativeMatrix::identity(2), b), InputError);

  // The product is the sum of the rank-1 terms column(a, i) * row(b, i).
  const auto a = random_matrix(rng, 3);
  const auto ab = direct_product(a, b);
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      double sum = 0.0;
      for (std::size_t i = 0; i < 3; ++i) sum += a(r, i) * b(i, c);
      CHECK(ab(r, c) == doctest::Approx(sum).epsilon(1e-15));
    }
  }

  const auto x = random_matrix(rng, 4), y = random_matrix(rng, 4), z = random_matrix(rng, 4);
  CHECK(max_relative_error(direct_product(direct_product(x, y), z),
                           direct_product(x, direct_product(y, z))) <= 1e-9);
}

TEST_CASE("gadget layout") {
  const auto g = build_gadget(NonnegativeMatrix(1, {2}), NonnegativeMatrix(1, {3}));
  CHECK(g.size() == 5);
  CHECK(g.dim() == 2);
  CHECK(g.domain().extent(0) == 3.0);
  CHECK(g.domain().extent(1) == 2.0);

  const auto zeros = build_gadget(NonnegativeMatrix(2), NonnegativeMatrix(2));
  CHECK(zeros.size() == 20);
  std::size_t empty = 0;
  for (const auto& b : zeros.boxes()) empty += volume(b) == 0.0;
  CHECK(empty >= 4);
  CHECK(oracle_dd(zeros).total() == doctest::Approx(volume(zeros.domain())));

  std::mt19937_64 rng(4);
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(build_gadget(random_matrix(rng, n), random_matrix(rng, n)).size() == 5 * n * n);
  }
  CHECK_THROWS_AS(build_gadget(NonnegativeMatrix(2), NonnegativeMatrix(3)), InputError);
}

TEST_CASE("gadget volume sits only at predicted depths") {
  // A point of gadget i in the band of row r, above the first c+1 doubled
  // B-slabs, is covered by the A-box, 2(c+1) slabs and 2n separators per
  // band below, so product entry (r, c) lands at depth 2nr + 2c + 3.
  std::mt19937_64 rng(12);
  const std::size_t n = 2;
  const auto a = random_matrix(rng, n), b = random_matrix(rng, n);
  const auto dd = oracle_dd(build_gadget(a, b));
  const auto ab = direct_product(a, b);
  std::set<std::size_t> predicted;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const std::size_t k = 2 * n * r + 2 * c + 3;
      predicted.insert(k);
      CHECK(dd[k] == doctest::Approx(ab(r, c)).epsilon(1e-12));
    }
  }
  for (std::size_t k = 1; k < dd.size(); k += 2) {
    if (!predicted.contains(k)) CHECK(dd[k] == doctest::Approx(0.0));
  }
}

TEST_CASE("calibration finds the affine depth map") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = calibrated_depth_map(n);
    CHECK(m.offset == 3);
    if (n > 1) {
      CHECK(m.row_stride == 2 * n);
      CHECK(m.col_stride == 2);
    }
    CHECK(calibrated_depth_map(n) == m);
  }
}

TEST_CASE("product via the depth distribution") {
  const auto one = product_via_dd(NonnegativeMatrix(1, {2}), NonnegativeMatrix(1, {3}),
                                  ReductionEngine::sdc);
  CHECK(one.product == NonnegativeMatrix(1, {6}));

  const NonnegativeMatrix b(2, {5, 7, 11, 13});
  for (auto engine : {ReductionEngine::sdc, ReductionEngine::oracle}) {
    const auto r = product_via_dd(NonnegativeMatrix::identity(2), b, engine);
    CHECK(max_relative_error(r.product, b) <= 1e-12);
  }

  std::mt19937_64 rng(33);
  for (int t = 0; t < 10; ++t) {
    const auto x = random_matrix(rng, 3, t % 2 ? 0.3 : 0.0);
    const auto y = random_matrix(rng, 3, t % 3 ? 0.0 : 0.3);
    const auto want = direct_product(x, y);
    CHECK(max_relative_error(product_via_dd(x, y, ReductionEngine::oracle).product, want) <= 1e-6);
    CHECK(max_relative_error(product_via_dd(x, y, ReductionEngine::sdc).product, want) <= 1e-6);
  }

  const auto zero = product_via_dd(NonnegativeMatrix(3), NonnegativeMatrix(3), ReductionEngine::sdc);
  CHECK(zero.product == NonnegativeMatrix(3));
}

TEST_CASE("larger orders through sdc") {
  std::mt19937_64 rng(90);
  for (std::size_t n : {7u, 10u, 12u}) {
    const auto x = random_matrix(rng, n), y = random_matrix(rng, n);
    CHECK(max_relative_error(product_via_dd(x, y, ReductionEngine::sdc).product,
                             direct_product(x, y)) <= 1e-6);
  }
}

TEST_CASE("slab starts never pass their gadget edge under rounding") {
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 12;
    const auto x = random_matrix(rng, n, 0.1), y = random_matrix(rng, n, 0.1);
    CHECK_NOTHROW(build_gadget(x, y));
  }
}
