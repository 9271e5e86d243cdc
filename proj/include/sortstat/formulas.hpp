#pragma once

// Closed-form right-hand sides of the product identities.  Each builder
// returns the exact polynomial the corresponding distribution must equal;
// the verification checks compare them term by term.
//
// Throughout, h_1..h_n is the height sequence of a Dyck path (height reached
// by each rise) and [m]_q = 1 + q + ... + q^(m-1).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sortstat/dyck.hpp"
#include "sortstat/polynomial.hpp"

namespace sortstat {

namespace detail {

inline SparsePolynomial q_power(int e) {
  return SparsePolynomial::var(Variable::q(), e);
}

}  // namespace detail

// prod_k (t_k + q + q^2 + ... + q^(h_k - 1))
inline SparsePolynomial eqhm_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int k = 1; k <= d.semilength(); ++k) {
    const int hk = h[static_cast<std::size_t>(k) - 1];
    out *= SparsePolynomial::var(Variable::t_i(k)) +
           detail::q_power(1) * q_integer(hk - 1);
  }
  return out;
}

// Scalar form of the same product over a restriction sequence:
// prod_k (t + q + ... + q^(r_k - k)).
inline SparsePolynomial rlminr_rhs(const RestrictionSequence& r) {
  SparsePolynomial out{1};
  for (int k = 1; k <= r.size(); ++k)
    out *= SparsePolynomial::var(Variable::t()) +
           detail::q_power(1) * q_integer(r.at(k) - k);
  return out;
}

// prod_k sum_{w=1}^{h_k} t_k^[w=1] s_k^[w=h_k] p^(h_k-w) q^(w-1).
// For h_k = 1 the factor collapses to the single term t_k s_k.
inline SparsePolynomial thm1_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int k = 1; k <= d.semilength(); ++k) {
    const int hk = h[static_cast<std::size_t>(k) - 1];
    SparsePolynomial factor{0};
    for (int w = 1; w <= hk; ++w) {
      Monomial m;
      if (w == 1) m.times(Variable::t_i(k), 1);
      if (w == hk) m.times(Variable::s_i(k), 1);
      m.times(Variable::p(), hk - w);
      m.times(Variable::q(), w - 1);
      factor += SparsePolynomial::term(m, 1);
    }
    out *= factor;
  }
  return out;
}

// prod_{k=1}^{n} (t + q [k-1]_q): the classical factorization over the full
// symmetric group.
inline SparsePolynomial sn_rhs(int n) {
  SparsePolynomial out{1};
  for (int k = 1; k <= n; ++k)
    out *= SparsePolynomial::var(Variable::t()) + detail::q_power(1) * q_integer(k - 1);
  return out;
}

// Indexed refinement: prod_{k=1}^{n} (t_k + q [k-1]_q).
inline SparsePolynomial bw_rhs(int n) {
  SparsePolynomial out{1};
  for (int k = 1; k <= n; ++k)
    out *= SparsePolynomial::var(Variable::t_i(k)) + detail::q_power(1) * q_integer(k - 1);
  return out;
}

// prod_k (t + r_k - k): the cycle generating function over a restricted
// family, independent of the base window.
inline SparsePolynomial lasthm_rhs(const RestrictionSequence& r) {
  SparsePolynomial out{1};
  for (int k = 1; k <= r.size(); ++k)
    out *= SparsePolynomial::var(Variable::t()) + SparsePolynomial(r.at(k) - k);
  return out;
}

// Non-attacking rook placements on the Ferrers board whose row i holds
// columns 1..r_i: counts[j] placements of j rooks, by direct enumeration.
inline std::vector<long long> rook_counts(const RestrictionSequence& r) {
  const int n = r.size();
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int row, int placed) -> void {
    if (row > n) {
      ++counts[static_cast<std::size_t>(placed)];
      return;
    }
    self(self, row + 1, placed);  // leave this row empty
    for (int col = 1; col <= r.at(row); ++col) {
      if (used[static_cast<std::size_t>(col)]) continue;
      used[static_cast<std::size_t>(col)] = true;
      self(self, row + 1, placed + 1);
      used[static_cast<std::size_t>(col)] = false;
    }
  };
  rec(rec, 1, 0);
  return counts;
}

// sum_{k=0}^{n} counts[n-k] (t-1)(t-2)...(t-k), the rook expansion of
// lasthm_rhs.
inline SparsePolynomial lasthm_rook_rhs(const RestrictionSequence& r) {
  const int n = r.size();
  const auto counts = rook_counts(r);
  SparsePolynomial out{0};
  SparsePolynomial falling{1};
  for (int k = 0; k <= n; ++k) {
    if (k > 0) falling *= SparsePolynomial::var(Variable::t()) - SparsePolynomial(k);
    out += SparsePolynomial(counts[static_cast<std::size_t>(n - k)]) * falling;
  }
  return out;
}

// prod_i sum_{k=1}^{h_i} (q1^(k-1) q3^(h_i-k) q5^(i-h_i) t_i^[k=1]
//                         + q2^(h_i-k) q4^(k-1) q6^(i-h_i) p).
inline SparsePolynomial thmsigned_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int i = 1; i <= d.semilength(); ++i) {
    const int hi = h[static_cast<std::size_t>(i) - 1];
    SparsePolynomial factor{0};
    for (int k = 1; k <= hi; ++k) {
      Monomial red;
      red.times(Variable::qnum(1), k - 1);
      red.times(Variable::qnum(3), hi - k);
      red.times(Variable::qnum(5), i - hi);
      if (k == 1) red.times(Variable::t_i(i), 1);
      factor += SparsePolynomial::term(red, 1);
      Monomial blue;
      blue.times(Variable::qnum(2), hi - k);
      blue.times(Variable::qnum(4), k - 1);
      blue.times(Variable::qnum(6), i - hi);
      blue.times(Variable::p(), 1);
      factor += SparsePolynomial::term(blue, 1);
    }
    out *= factor;
  }
  return out;
}

// prod_i (t_i + q [h_i - 1]_q + q^(2i - h_i) [h_i]_q): the q1..q6
// specialization carrying sor and the cycle minima.
inline SparsePolynomial corb_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int i = 1; i <= d.semilength(); ++i) {
    const int hi = h[static_cast<std::size_t>(i) - 1];
    out *= SparsePolynomial::var(Variable::t_i(i)) +
           detail::q_power(1) * q_integer(hi - 1) +
           detail::q_power(2 * i - hi) * q_integer(hi);
  }
  return out;
}

// prod_k (t_k + (q + q^(2k - h_k)) [h_k - 1]_q + s_k q^(2k-1)): splits the
// cycle minima by the parity of their blue letters.
inline SparsePolynomial oddeven_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int k = 1; k <= d.semilength(); ++k) {
    const int hk = h[static_cast<std::size_t>(k) - 1];
    out *= SparsePolynomial::var(Variable::t_i(k)) +
           (detail::q_power(1) + detail::q_power(2 * k - hk)) * q_integer(hk - 1) +
           SparsePolynomial::var(Variable::s_i(k)) * detail::q_power(2 * k - 1);
  }
  return out;
}

// prod_k (1 + q [h_k - 1]_q t + q^(2k - h_k) [h_k]_q t).
inline SparsePolynomial nmin_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  const SparsePolynomial t = SparsePolynomial::var(Variable::t());
  for (int k = 1; k <= d.semilength(); ++k) {
    const int hk = h[static_cast<std::size_t>(k) - 1];
    out *= SparsePolynomial{1} + detail::q_power(1) * q_integer(hk - 1) * t +
           detail::q_power(2 * k - hk) * q_integer(hk) * t;
  }
  return out;
}

// prod_{i=1}^{n} (1 + t [2i]_q - t).
inline SparsePolynomial petb_rhs(int n) {
  SparsePolynomial out{1};
  const SparsePolynomial t = SparsePolynomial::var(Variable::t());
  for (int i = 1; i <= n; ++i) out *= SparsePolynomial{1} + t * q_integer(2 * i) - t;
  return out;
}

// prod_{i=2}^{n} (t_i + q [h_i - 1]_q + q^(2i - h_i - 1) [h_i]_q).
inline SparsePolynomial dmix_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int i = 2; i <= d.semilength(); ++i) {
    const int hi = h[static_cast<std::size_t>(i) - 1];
    out *= SparsePolynomial::var(Variable::t_i(i)) +
           detail::q_power(1) * q_integer(hi - 1) +
           detail::q_power(2 * i - hi - 1) * q_integer(hi);
  }
  return out;
}

// prod_{i=2}^{n} (t_i + (q + q^(2i - h_i - 1)) [h_i - 1]_q + q^(2i-2) s_i).
inline SparsePolynomial dcyc_rhs(const DyckPath& d) {
  SparsePolynomial out{1};
  const auto h = d.height_sequence();
  for (int i = 2; i <= d.semilength(); ++i) {
    const int hi = h[static_cast<std::size_t>(i) - 1];
    out *= SparsePolynomial::var(Variable::t_i(i)) +
           (detail::q_power(1) + detail::q_power(2 * i - hi - 1)) * q_integer(hi - 1) +
           detail::q_power(2 * i - 2) * SparsePolynomial::var(Variable::s_i(i));
  }
  return out;
}

// prod_{i=2}^{n} (t_i + q [i-1]_q + q^(i-1) [i]_q): the unrestricted type D
// factorization.
inline SparsePolynomial dfull_rhs(int n) {
  SparsePolynomial out{1};
  for (int i = 2; i <= n; ++i)
    out *= SparsePolynomial::var(Variable::t_i(i)) + detail::q_power(1) * q_integer(i - 1) +
           detail::q_power(i - 1) * q_integer(i);
  return out;
}

// prod_{k=2}^{n} (1 + q^(k-1)) [k]_q.
inline SparsePolynomial petd_product_rhs(int n) {
  SparsePolynomial out{1};
  for (int k = 2; k <= n; ++k)
    out *= (SparsePolynomial{1} + detail::q_power(k - 1)) * q_integer(k);
  return out;
}

// [n]_q prod_{i=1}^{n-1} [2i]_q; equals petd_product_rhs for n >= 1.
inline SparsePolynomial petd_factored_rhs(int n) {
  if (n < 1) throw std::invalid_argument("factored form needs n >= 1");
  SparsePolynomial out = q_integer(n);
  for (int i = 1; i < n; ++i) out *= q_integer(2 * i);
  return out;
}

}  // namespace sortstat
