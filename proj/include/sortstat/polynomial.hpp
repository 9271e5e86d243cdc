#pragma once

// Exact sparse polynomials over the integers in the variables used by the
// verification checks: the plain q, p, t, s, the numbered q1..q6, and the
// indexed families t_1, t_2, ... and s_1, s_2, ...  Coefficients are signed
// 64-bit; all comparisons made by the checks are exact term-by-term equality.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sortstat {

struct Variable {
  enum class Kind : std::uint8_t { Q, P, T, S, QNum, TIdx, SIdx };

  Kind kind{Kind::Q};
  int index{0};  // 0 for the unindexed kinds

  friend auto operator<=>(const Variable&, const Variable&) = default;

  static Variable q() { return {Kind::Q, 0}; }
  static Variable p() { return {Kind::P, 0}; }
  static Variable t() { return {Kind::T, 0}; }
  static Variable s() { return {Kind::S, 0}; }
  static Variable qnum(int i) {
    if (i < 1 || i > 6) throw std::invalid_argument("qnum index out of range");
    return {Kind::QNum, i};
  }
  static Variable t_i(int i) {
    if (i < 1) throw std::invalid_argument("t_i index must be positive");
    return {Kind::TIdx, i};
  }
  static Variable s_i(int i) {
    if (i < 1) throw std::invalid_argument("s_i index must be positive");
    return {Kind::SIdx, i};
  }

  std::string name() const {
    switch (kind) {
      case Kind::Q: return "q";
      case Kind::P: return "p";
      case Kind::T: return "t";
      case Kind::S: return "s";
      case Kind::QNum: return "q" + std::to_string(index);
      case Kind::TIdx: return "t" + std::to_string(index);
      case Kind::SIdx: return "s" + std::to_string(index);
    }
    return "?";
  }

  // Accepts the same spellings name() produces: q, p, t, s, q1..q6, tN, sN.
  static Variable parse(const std::string& text) {
    if (text == "q") return q();
    if (text == "p") return p();
    if (text == "t") return t();
    if (text == "s") return s();
    if (text.size() >= 2 && (text[0] == 'q' || text[0] == 't' || text[0] == 's')) {
      int idx = 0;
      for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
          throw std::invalid_argument("bad variable name: " + text);
        idx = idx * 10 + (text[i] - '0');
      }
      if (text[0] == 'q') return qnum(idx);
      if (text[0] == 't') return t_i(idx);
      return s_i(idx);
    }
    throw std::invalid_argument("bad variable name: " + text);
  }
};

// Product of variable powers, kept sorted by variable with positive exponents.
class Monomial {
 public:
  Monomial() = default;

  const std::vector<std::pair<Variable, int>>& factors() const { return factors_; }

  Monomial& times(Variable v, int exp) {
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp == 0) return *this;
    auto it = factors_.begin();
    while (it != factors_.end() && it->first < v) ++it;
    if (it != factors_.end() && it->first == v)
      it->second += exp;
    else
      factors_.insert(it, {v, exp});
    return *this;
  }

  template <class IntSet>
  Monomial& times_indexed(Variable::Kind kind, const IntSet& indices) {
    for (int i : indices)
      times(kind == Variable::Kind::TIdx ? Variable::t_i(i) : Variable::s_i(i), 1);
    return *this;
  }

  Monomial times(const Monomial& other) const {
    Monomial out = *this;
    for (const auto& [v, e] : other.factors_) out.times(v, e);
    return out;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : factors_) {
      if (!out.empty()) out += "*";
      out += v.name();
      if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

 private:
  std::vector<std::pair<Variable, int>> factors_;
};

class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  SparsePolynomial(long long c) {  // NOLINT: implicit constants are convenient
    if (c != 0) terms_[Monomial{}] = c;
  }

  static SparsePolynomial var(Variable v, int exp = 1) {
    SparsePolynomial out;
    Monomial m;
    m.times(v, exp);
    out.terms_[m] = 1;
    return out;
  }

  static SparsePolynomial term(Monomial m, long long c = 1) {
    SparsePolynomial out;
    if (c != 0) out.terms_[std::move(m)] = c;
    return out;
  }

  const std::map<Monomial, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  SparsePolynomial& operator+=(const SparsePolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  SparsePolynomial& operator*=(const SparsePolynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a, const SparsePolynomial& b) {
    a += b;
    return a;
  }
  friend SparsePolynomial operator-(SparsePolynomial a, const SparsePolynomial& b) {
    a -= b;
    return a;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
    SparsePolynomial out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
  }

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  SparsePolynomial pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    SparsePolynomial out{1};
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
  }

  // Replaces each listed variable by the given polynomial; unlisted variables stay.
  SparsePolynomial substitute(const std::map<Variable, SparsePolynomial>& images) const {
    SparsePolynomial out;
    for (const auto& [m, c] : terms_) {
      SparsePolynomial term_poly{c};
      Monomial untouched;
      for (const auto& [v, e] : m.factors()) {
        auto it = images.find(v);
        if (it == images.end())
          untouched.times(v, e);
        else
          term_poly = term_poly * it->second.pow(e);
      }
      out += term_poly * SparsePolynomial::term(untouched);
    }
    return out;
  }

  void add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Canonical human-readable form; terms in the monomial order of the map.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      long long coef = c;
      if (first) {
        if (coef < 0) {
          out << "-";
          coef = -coef;
        }
      } else {
        out << (coef < 0 ? " - " : " + ");
        if (coef < 0) coef = -coef;
      }
      if (m.factors().empty())
        out << coef;
      else if (coef == 1)
        out << m.to_string();
      else
        out << coef << "*" << m.to_string();
      first = false;
    }
    return out.str();
  }

 private:
  std::map<Monomial, long long> terms_;
};

// [m]_q = 1 + q + ... + q^{m-1}; [0]_q = 0.
inline SparsePolynomial q_integer(int m) {
  if (m < 0) throw std::invalid_argument("q_integer of negative argument");
  SparsePolynomial out;
  for (int i = 0; i < m; ++i) out += SparsePolynomial::var(Variable::q(), i);
  return out;
}

// Sum of monomial_of(x) over a range of combinatorial objects.
template <class Range, class F>
SparsePolynomial distribution(const Range& objects, F&& monomial_of) {
  SparsePolynomial out;
  for (const auto& x : objects) out.add_term(monomial_of(x), 1);
  return out;
}

// Named statistics of a single object, for reports and replay.
struct StatProfile {
  std::map<std::string, long long> scalars;
  std::map<std::string, std::set<int>> sets;

  friend bool operator==(const StatProfile&, const StatProfile&) = default;
  friend auto operator<=>(const StatProfile&, const StatProfile&) = default;
};

}  // namespace sortstat
