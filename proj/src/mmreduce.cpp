#include "ddist/mmreduce.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "ddist/errors.hpp"
#include "ddist/measures.hpp"
#include "ddist/oracle.hpp"
#include "ddist/sdc.hpp"

namespace ddist {

NonnegativeMatrix::NonnegativeMatrix(std::size_t order, std::vector<double> row_major)
    : order_(order), entries_(std::move(row_major)) {
  if (entries_.size() != order_ * order_) {
    throw InputError("matrix: expected " + std::to_string(order_ * order_) +
                     " entries, got " + std::to_string(entries_.size()));
  }
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    if (!std::isfinite(entries_[k]) || entries_[k] < 0.0) {
      throw InputError("matrix entry (" + std::to_string(k / order_) + "," +
                       std::to_string(k % order_) + "): must be finite and non-negative");
    }
  }
}

NonnegativeMatrix NonnegativeMatrix::identity(std::size_t order) {
  std::vector<double> e(order * order, 0.0);
  for (std::size_t i = 0; i < order; ++i) e[i * order + i] = 1.0;
  return NonnegativeMatrix(order, std::move(e));
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

void require_same_order(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
  if (a.order() != b.order()) {
    throw InputError("matrix order mismatch: " + std::to_string(a.order()) + " vs " +
                     std::to_string(b.order()));
  }
}

std::vector<double> first_primes(std::size_t count) {
  std::vector<double> primes;
  for (std::size_t p = 2; primes.size() < count; ++p) {
    bool prime = true;
    for (double q : primes) {
      const auto qi = static_cast<std::size_t>(q);
      if (qi * qi > p) break;
      if (p % qi == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(static_cast<double>(p));
  }
  return primes;
}

bool close(double got, double want) {
  return std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want));
}

std::vector<std::size_t> locate(const DepthDistribution& dd, double value) {
  std::vector<std::size_t> hits;
  for (std::size_t k = 0; k < dd.size(); ++k) {
    if (close(dd[k], value)) hits.push_back(k);
  }
  return hits;
}

DepthIndexMap calibrate(std::size_t n) {
  const auto primes = first_primes(2 * n * n);
  const NonnegativeMatrix a(n, {primes.begin(), primes.begin() + n * n});
  const NonnegativeMatrix b(n, {primes.begin() + n * n, primes.end()});
  const auto want = direct_product(a, b);
  const auto dd = oracle_dd(build_gadget(a, b));

  const auto origin = locate(dd, want(0, 0));
  const auto down = n > 1 ? locate(dd, want(1, 0)) : origin;
  const auto right = n > 1 ? locate(dd, want(0, 1)) : origin;

  std::vector<DepthIndexMap> found;
  for (std::size_t o : origin) {
    for (std::size_t r : down) {
      for (std::size_t c : right) {
        if (n > 1 && (r <= o || c <= o)) continue;
        const DepthIndexMap m{n > 1 ? r - o : 0, n > 1 ? c - o : 0, o};
        if (m.depth(n - 1, n - 1) >= dd.size()) continue;
        bool ok = true;
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < n && ok; ++i) {
          for (std::size_t j = 0; j < n && ok; ++j) {
            ok = close(dd[m.depth(i, j)], want(i, j)) && seen.insert(m.depth(i, j)).second;
          }
        }
        if (ok) found.push_back(m);
      }
    }
  }
  if (found.size() != 1) {
    throw ReductionIntegrityError("calibration for order " + std::to_string(n) + ": " +
                                  std::to_string(found.size()) +
                                  " affine depth maps fit the canary");
  }
  return found.front();
}

}  // namespace

NonnegativeMatrix read_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    auto& row = rows.emplace_back();
    std::string_view rest = line;
    for (std::size_t col = 1;; ++col) {
      const auto comma = rest.find(',');
      const auto cell = trim(rest.substr(0, comma));
      double x = 0.0;
      const auto [end, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), x);
      if (cell.empty() || ec != std::errc{} || end != cell.data() + cell.size()) {
        throw InputError("line " + std::to_string(line_no) + ", column " +
                         std::to_string(col) + ": not a number: '" + std::string(cell) + "'");
      }
      row.push_back(x);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  const std::size_t n = rows.size();
  if (n == 0) throw InputError("matrix: no rows");
  std::vector<double> entries;
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw InputError("matrix row " + std::to_string(r + 1) + ": expected " +
                       std::to_string(n) + " columns, got " + std::to_string(rows[r].size()));
    }
    entries.insert(entries.end(), rows[r].begin(), rows[r].end());
  }
  return NonnegativeMatrix(n, std::move(entries));
}

std::string write_matrix_csv(const NonnegativeMatrix& m) {
  std::string out;
  char buf[32];
  for (std::size_t r = 0; r < m.order(); ++r) {
    for (std::size_t c = 0; c < m.order(); ++c) {
      if (c > 0) out += ',';
      const auto res = std::to_chars(buf, buf + sizeof buf, m(r, c));
      out.append(buf, res.ptr);
    }
    out += '\n';
  }
  return out;
}

NonnegativeMatrix direct_product(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t j = 0; j < n; ++j) e[i * n + j] += a(i, k) * b(k, j);
    }
  }
  return NonnegativeMatrix(n, std::move(e));
}

Instance build_gadget(const NonnegativeMatrix& a, const NonnegativeMatrix& b) {
  require_same_order(a, b);
  const std::size_t n = a.order();
  if (n == 0) throw InputError("matrix: order must be at least 1");

  // starts[j]: bottom of the band holding row j of a; starts[n] is the height.
  std::vector<double> starts(n + 1, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double top = 0.0;
    for (std::size_t l = 0; l < n; ++l) top = std::max(top, a(j, l));
    starts[j + 1] = starts[j] + top;
  }
  // Gadget i occupies x in [left[i], left[i+1]], wide as row i of b. The
  // edges are running sums in the same order as the slab starts below, so
  // rounding never puts a start past its gadget's edge.
  std::vector<double> left(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double x = left[i];
    for (std::size_t k = 0; k < n; ++k) x += b(i, k);
    left[i + 1] = x;
  }
  const double width = left[n] > 0.0 ? left[n] : 1.0;
  const double height = starts[n] > 0.0 ? starts[n] : 1.0;

  std::vector<AxisBox> boxes;
  boxes.reserve(5 * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      boxes.emplace_back(std::vector{left[i], starts[j]},
                         std::vector{left[i + 1], starts[j] + a(j, i)});
    }
    double x = left[i];
    for (std::size_t k = 0; k < n; ++k) {
      for (int copy = 0; copy < 2; ++copy) {
        boxes.emplace_back(std::vector{x, 0.0}, std::vector{left[i + 1], height});
      }
      x += b(i, k);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t copy = 0; copy < 2 * n; ++copy) {
      boxes.emplace_back(std::vector{0.0, starts[j + 1]}, std::vector{width, height});
    }
  }
  return Instance(DomainBox({0.0, 0.0}, {width, height}), std::move(boxes));
}

DepthIndexMap calibrated_depth_map(std::size_t order) {
  static std::mutex mu;
  static std::map<std::size_t, DepthIndexMap> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  const DepthIndexMap m = calibrate(order);
  std::lock_guard lock(mu);
  return cache.emplace(order, m).first->second;
}

ReductionResult product_via_dd(const NonnegativeMatrix& a, const NonnegativeMatrix& b,
                               ReductionEngine engine) {
  const Instance gadget = build_gadget(a, b);
  const std::size_t n = a.order();
  const DepthIndexMap map = calibrated_depth_map(n);
  const DepthDistribution dd = engine == ReductionEngine::oracle
                                   ? oracle_dd(gadget)
                                   : sdc_depth_distribution(gadget);
  const double tol = 1e-9 * volume(gadget.domain());

  std::set<std::size_t> mapped;
  std::vector<double> entries(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = map.depth(i, j);
      const double x = dd[k];
      if (x < -tol) {
        throw ReductionIntegrityError("depth " + std::to_string(k) + " has negative volume");
      }
      entries[i * n + j] = std::max(0.0, x);
      mapped.insert(k);
    }
  }
  for (std::size_t k = map.offset % 2; k < dd.size(); k += 2) {
    if (!mapped.contains(k) && std::abs(dd[k]) > tol) {
      throw ReductionIntegrityError("depth " + std::to_string(k) +
                                    " carries volume but maps to no product entry");
    }
  }
  return {NonnegativeMatrix(n, std::move(entries)), map};
}

double max_relative_error(const NonnegativeMatrix& got, const NonnegativeMatrix& want) {
  require_same_order(got, want);
  double worst = 0.0;
  for (std::size_t k = 0; k < want.entries().size(); ++k) {
    const double w = want.entries()[k];
    const double diff = std::abs(got.entries()[k] - w);
    worst = std::max(worst, w >= 1e-9 ? diff / w : diff);
  }
  return worst;
}

}  // namespace ddist
