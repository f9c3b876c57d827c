#include "apkit/formulas.hpp"

#include <numeric>
#include <stdexcept>

#include "apkit/enumerate.hpp"
#include "apkit/numeric.hpp"

namespace apkit {

const char* to_string(DeltaRegime regime) {
  switch (regime) {
    case DeltaRegime::positive: return "positive";
    case DeltaRegime::zero: return "zero";
    case DeltaRegime::minus_d: return "minus-d";
    case DeltaRegime::other: return "other";
  }
  return "?";
}

const char* to_string(CountMethod method) {
  switch (method) {
    case CountMethod::positive_delta: return "positive-delta";
    case CountMethod::boundary_delta: return "boundary-delta";
    case CountMethod::enumeration: return "enumeration";
  }
  return "?";
}

DeltaClass delta_classify(long long n, long long m, const PartitionType& t) {
  if (n < 1 || m < 1) throw std::domain_error("delta_classify: n, m must be >= 1");
  if (!t.binds(n)) throw std::domain_error("delta_classify: type does not bind n");
  DeltaClass dc;
  dc.d = std::gcd(m, n);
  dc.delta = n - dc.d * (n - t.block_count());
  if (dc.delta > 0)
    dc.regime = DeltaRegime::positive;
  else if (dc.delta == 0)
    dc.regime = DeltaRegime::zero;
  else if (dc.delta == -dc.d)
    dc.regime = DeltaRegime::minus_d;
  else
    dc.regime = DeltaRegime::other;
  return dc;
}

ExactInt count_positive_delta(long long n, long long m, const PartitionType& t) {
  const DeltaClass dc = delta_classify(n, m, t);
  if (dc.regime != DeltaRegime::positive)
    throw std::domain_error("count_positive_delta: margin is not positive (delta = " +
                            std::to_string(dc.delta) + ")");
  return cyclic_multinomial(n, t.counts()).to_integer();
}

ExactRat boundary_minus_d_coeff(long long n, long long d, const PartitionType& t) {
  const long long k2 = t.k(2);
  if (k2 == 0) return ExactRat(ExactInt(n));
  const long long kp = t.tail_sum();
  if (kp <= 1)
    throw std::logic_error("boundary_minus_d_coeff: k_2 > 0 forces K' >= 2 at delta = -d");
  // n * (1 - n(1 - 1/d) k_2 / (K'(K'-1)))
  const ExactRat inner(ExactInt(n) * (d - 1) * k2, ExactInt(d) * kp * (kp - 1));
  return ExactRat(ExactInt(n)) * (ExactRat(1) - inner);
}

ExactInt count_boundary_delta(long long n, long long m, const PartitionType& t) {
  const DeltaClass dc = delta_classify(n, m, t);
  if (dc.regime != DeltaRegime::zero && dc.regime != DeltaRegime::minus_d)
    throw std::domain_error("count_boundary_delta: margin is not 0 or -d (delta = " +
                            std::to_string(dc.delta) + ")");
  const std::vector<long long> tail = t.tail();
  const long long kp = t.tail_sum();
  if (kp < 1) throw std::logic_error("count_boundary_delta: boundary regime forces K' >= 1");
  const long long sign = kp % 2 == 0 ? 1 : -1;
  const ExactRat cyc = cyclic_multinomial(n, t.counts());
  ExactRat v;
  if (dc.regime == DeltaRegime::zero) {
    v = cyc + ExactRat(ExactInt(n) * sign, ExactInt(kp)) * ExactRat(gen_multinomial(kp, tail));
  } else {
    v = cyc + ExactRat(ExactInt(n) * sign) * ExactRat(gen_multinomial(kp, tail));
    const long long k2 = t.k(2);
    if (k2 > 0 && kp <= 1)
      throw std::logic_error("count_boundary_delta: k_2 > 0 forces K' >= 2 at delta = -d");
    if (k2 > 0) {
      // Excluded two-column matrices: one class keeps k_2 - 1 of the 2-blocks
      // and everything longer, another gets the remaining 2-block. There are
      // d(d-1) ordered class pairs, except that when both column patterns
      // coincide (k_2 = 2, K' = 2, so n1 = 1) each matrix is reached twice
      // and must be counted once.
      const long long n1 = n / dc.d;
      ExactRat coeff(ExactInt(dc.d) * (dc.d - 1));
      if (k2 == 2 && kp == 2) coeff /= 2;
      std::vector<long long> tail2 = tail;
      tail2[0] -= 1;
      v -= coeff * ExactRat(ExactInt(n1) * n1) * limit0_multinomial(tail2);
    }
  }
  return v.to_integer();
}

ExactInt count_mansour_sun(long long n, long long k, long long m, long long p) {
  if (n < 1 || k < 0 || m < 1 || p < 1)
    throw std::domain_error("count_mansour_sun: need n, m, p >= 1 and k >= 0");
  if (n < m * p * k + 1)
    throw std::domain_error(
        "count_mansour_sun: hypothesis n >= mpk+1 violated; use the boundary counts "
        "or the subset dispatcher");
  return (ExactRat(ExactInt(n), ExactInt(n - p * k)) * ExactRat(gen_multinomial(n - p * k, {k})))
      .to_integer();
}

ExactInt count_separated_at_mpk(long long m, long long p, long long k) {
  if (m < 1 || p < 1) throw std::domain_error("count_separated_at_mpk: need m, p >= 1");
  if (k < 2) throw std::domain_error("count_separated_at_mpk: need k >= 2");
  const long long n = m * p * k;
  // First term through the guard: at m = 1 the upper argument n - pk is 0 and
  // the limit convention applies, making the whole expression vanish.
  const ExactRat first = guarded_cyclic_term(n, p * k, {k});
  const long long sign = k % 2 == 0 ? 1 : -1;
  return (first + ExactRat(ExactInt(n) * sign, ExactInt(k))).to_integer();
}

ExactInt count_separated_at_mpk_minus_m(long long m, long long p, long long k) {
  if (m < 1 || p < 1 || k < 1)
    throw std::domain_error("count_separated_at_mpk_minus_m: need m, p, k >= 1");
  if (p * k <= p + 1) throw std::domain_error("count_separated_at_mpk_minus_m: need pk > p+1");
  const long long n = m * p * k - m;
  if (p == 1) {
    const long long sign = k % 2 == 0 ? -1 : 1;
    return (guarded_cyclic_term(n, k, {k}) + ExactRat(ExactInt(n) * sign * (m - 2)))
        .to_integer();
  }
  const long long sign = k % 2 == 0 ? 1 : -1;
  return (guarded_cyclic_term(n, p * k, {k}) + ExactRat(ExactInt(n) * sign)).to_integer();
}

ExactInt hwang_count(long long n, long long k, long long m) {
  if (m <= 0 || m >= n) throw std::domain_error("hwang_count: need 0 < m < n");
  if (k < 0) throw std::domain_error("hwang_count: need k >= 0");
  const long long d = std::gcd(m, n);
  ExactRat total;
  for (long long j = 0; j <= d / 2; ++j) {
    const long long c = n * j / d;  // integral since d | n
    const long long B = k - c;
    if (B < 0) continue;  // binom with negative lower index
    ExactRat t;
    if (B == 0) {
      // (n-2c)/(n-k-c) * binom(n-k-c; 0) with n-2c = n-k-c: the function
      // x/x is identically 1, including at the removable point x = 0.
      t = ExactRat(1);
    } else if (n - k - c == 0) {
      // denominator vanishes with nonzero numerator: limit convention
      t = ExactRat(ExactInt(n - 2 * c)) * limit0_multinomial({B});
    } else {
      t = ExactRat(ExactInt(n - 2 * c), ExactInt(n - k - c)) *
          ExactRat(gen_multinomial(n - k - c, {B}));
    }
    const long long sign = c % 2 == 0 ? 1 : -1;
    total += ExactRat(ExactInt(sign) * gen_multinomial(d, {j})) * t;
  }
  return total.to_integer();
}

std::vector<long long> ResidueMatrix::column(long long j) const {
  std::vector<long long> col;
  col.reserve(rows.size());
  for (const auto& row : rows) col.push_back(row[static_cast<std::size_t>(j)]);
  return col;
}

long long ResidueMatrix::column_weight(long long j) const {
  long long w = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    w += static_cast<long long>(i + 1) * rows[i][static_cast<std::size_t>(j)];
  return w;
}

void for_each_residue_matrix(const PartitionType& t, long long m,
                             const std::function<void(const ResidueMatrix&)>& fn) {
  if (m < 1) throw std::domain_error("for_each_residue_matrix: m must be >= 1");
  const long long r = t.max_part();
  ResidueMatrix mat;
  mat.r = r < 1 ? 1 : r;
  mat.columns = m;
  const long long nrows = r >= 2 ? r - 1 : 0;
  mat.rows.assign(static_cast<std::size_t>(nrows),
                  std::vector<long long>(static_cast<std::size_t>(m), 0));

  // Fill row i (compositions of k_i into m parts), then recurse to row i+1.
  auto fill_row = [&](auto&& self, long long row) -> void {
    if (row == nrows) {
      fn(mat);
      return;
    }
    auto& cells = mat.rows[static_cast<std::size_t>(row)];
    const long long total = t.k(row + 2);
    auto place = [&](auto&& self2, long long col, long long rem) -> void {
      if (col == m - 1) {
        cells[static_cast<std::size_t>(col)] = rem;
        self(self, row + 1);
        cells[static_cast<std::size_t>(col)] = 0;
        return;
      }
      for (long long v = 0; v <= rem; ++v) {
        cells[static_cast<std::size_t>(col)] = v;
        self2(self2, col + 1, rem - v);
      }
      cells[static_cast<std::size_t>(col)] = 0;
    };
    place(place, 0, total);
  };
  fill_row(fill_row, 0);
}

ExactInt residue_multi_sum_count(long long n, long long m, const PartitionType& t) {
  if (n < 1 || m < 1) throw std::domain_error("residue_multi_sum_count: n, m must be >= 1");
  if (n % m != 0) throw std::domain_error("residue_multi_sum_count: m does not divide n");
  if (!t.binds(n)) throw std::domain_error("residue_multi_sum_count: type does not bind n");
  const long long n1 = n / m;
  ExactRat total;
  for_each_residue_matrix(t, m, [&](const ResidueMatrix& mat) {
    ExactRat prod(1);
    for (long long j = 0; j < m; ++j) {
      const long long w = mat.column_weight(j);
      if (n1 - w <= 0) return;  // excluded by the positivity conditions
      prod *= guarded_cyclic_term(n1, w, mat.column(j));
    }
    total += prod;
  });
  return total.to_integer();
}

ExactRat boundary_series_at(long long x, long long m, const PartitionType& t,
                            DeltaRegime regime) {
  if (m < 1) throw std::domain_error("boundary_series_at: m must be >= 1");
  if (regime != DeltaRegime::zero && regime != DeltaRegime::minus_d)
    throw std::domain_error("boundary_series_at: regime must be zero or minus-d");
  const std::vector<long long> tail = t.tail();
  const long long kp = t.tail_sum();
  if (kp < 1) throw std::domain_error("boundary_series_at: type needs blocks longer than 1");
  const long long w = t.weighted_sum() - t.block_count();  // k_2 + 2k_3 + ... + (r-1)k_r
  const long long n1 = regime == DeltaRegime::zero ? w : w - 1;
  if (n1 < 1) throw std::domain_error("boundary_series_at: regime inconsistent with type");

  const ExactRat first = guarded_cyclic_term(m * x, w, tail);
  if (regime == DeltaRegime::zero)
    return first - ExactRat(ExactInt(m)) * guarded_cyclic_term(x, n1, tail);

  ExactRat v = first - ExactRat(ExactInt(m)) * guarded_cyclic_term(x, n1 + 1, tail);
  const long long k2 = t.k(2);
  if (k2 > 0) {
    ExactRat coeff(ExactInt(m) * (m - 1));
    if (k2 == 2 && kp == 2) coeff /= 2;  // identical excluded columns, count pairs once
    std::vector<long long> tail2 = tail;
    tail2[0] -= 1;
    v -= coeff * ExactRat(ExactInt(x)) * guarded_cyclic_term(x, n1, tail2);
  }
  return v;
}

CountResult count_auto(long long n, long long m, const PartitionType& t, long long node_budget) {
  const DeltaClass dc = delta_classify(n, m, t);
  switch (dc.regime) {
    case DeltaRegime::positive:
      return {count_positive_delta(n, m, t), CountMethod::positive_delta};
    case DeltaRegime::zero:
    case DeltaRegime::minus_d:
      return {count_boundary_delta(n, m, t), CountMethod::boundary_delta};
    case DeltaRegime::other:
      break;
  }
  try {
    return {ExactInt(count_ap_partitions(n, m, t, node_budget)), CountMethod::enumeration};
  } catch (const std::runtime_error&) {
    throw std::domain_error(
        "count_auto: no closed form for margin class delta = " + std::to_string(dc.delta) +
        " (delta = -2d or beyond) and the enumeration budget was exceeded");
  }
}

bool cwz_condition(long long m, const PartitionType& t) {
  if (m < 1) throw std::domain_error("cwz_condition: m must be >= 1");
  const long long k1 = t.k(1);
  if (k1 == 0) return false;  // the condition presupposes length-1 blocks
  const std::vector<long long> support = t.support();
  const long long ir = support.back();
  if (ir == 1) return true;
  return k1 > t.tail_sum() * ((m - 1) * (ir - 1) - 1);
}

}  // namespace apkit
