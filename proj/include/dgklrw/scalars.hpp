// Exact scalar arithmetic for the diagram algebra workbench: polynomials in the
// deformation parameter, Laurent polynomials and rational functions in (q, l),
// truncated ascending q-series, and the additive tri-grading.
//
// All coefficient arithmetic uses arbitrary-precision integers (GMP).

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dgklrw {

using Int = mpz_class;

// Additive tri-grading (h, q, l): homological degree, q-exponent, l-exponent.
struct GradingVector {
  int h = 0;
  int q = 0;
  int l = 0;

  friend GradingVector operator+(const GradingVector& a, const GradingVector& b) {
    return {a.h + b.h, a.q + b.q, a.l + b.l};
  }
  GradingVector& operator+=(const GradingVector& o) {
    h += o.h; q += o.q; l += o.l;
    return *this;
  }
  friend bool operator==(const GradingVector& a, const GradingVector& b) {
    return a.h == b.h && a.q == b.q && a.l == b.l;
  }
  friend bool operator!=(const GradingVector& a, const GradingVector& b) { return !(a == b); }
  friend bool operator<(const GradingVector& a, const GradingVector& b) {
    if (a.q != b.q) return a.q < b.q;
    if (a.h != b.h) return a.h < b.h;
    return a.l < b.l;
  }
  std::string str() const {
    std::ostringstream os;
    os << "q^" << q << " l^" << l << " h^" << h;
    return os.str();
  }
};

// Polynomials in one variable (the deformation parameter), sparse with no
// stored zero coefficients.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(long n) { if (n != 0) c_[0] = Int(n); }
  DeltaPoly(const Int& n) { if (n != 0) c_[0] = n; }

  static DeltaPoly monomial(int exp, Int coeff = Int(1)) {
    DeltaPoly p;
    if (coeff != 0) {
      if (exp < 0) throw std::invalid_argument("DeltaPoly: negative exponent");
      p.c_[exp] = std::move(coeff);
    }
    return p;
  }
  static DeltaPoly delta() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Int>& terms() const { return c_; }

  int degree() const { return c_.empty() ? -1 : c_.rbegin()->first; }
  const Int& leading() const {
    static const Int zero(0);
    return c_.empty() ? zero : c_.rbegin()->second;
  }
  Int constant_term() const {
    auto it = c_.find(0);
    return it == c_.end() ? Int(0) : it->second;
  }

  DeltaPoly& operator+=(const DeltaPoly& o) {
    for (auto& [e, v] : o.c_) add_term(e, v);
    return *this;
  }
  DeltaPoly& operator-=(const DeltaPoly& o) {
    for (auto& [e, v] : o.c_) add_term(e, -v);
    return *this;
  }
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator-(const DeltaPoly& a) {
    DeltaPoly r;
    for (auto& [e, v] : a.c_) r.c_[e] = -v;
    return r;
  }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
    DeltaPoly r;
    for (auto& [ea, va] : a.c_)
      for (auto& [eb, vb] : b.c_) r.add_term(ea + eb, va * vb);
    return r;
  }
  DeltaPoly& operator*=(const DeltaPoly& o) { return *this = *this * o; }
  friend DeltaPoly operator*(const Int& s, const DeltaPoly& a) {
    DeltaPoly r;
    if (s != 0)
      for (auto& [e, v] : a.c_) r.c_[e] = s * v;
    return r;
  }

  friend bool operator==(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const DeltaPoly& a, const DeltaPoly& b) { return !(a == b); }
  friend bool operator<(const DeltaPoly& a, const DeltaPoly& b) { return a.c_ < b.c_; }

  // Specialization at parameter value zero.
  DeltaPoly at_zero() const { return DeltaPoly(constant_term()); }

  Int content() const {
    Int g(0);
    for (auto& [e, v] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  // Exact division; throws if the division leaves a remainder.
  DeltaPoly exact_div(const DeltaPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("DeltaPoly: division by zero");
    DeltaPoly rem = *this, quot;
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
      Int q, r;
      mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.leading().get_mpz_t(),
                  d.leading().get_mpz_t());
      if (r != 0) throw std::runtime_error("inexact division");
      int e = rem.degree() - d.degree();
      DeltaPoly t = monomial(e, q);
      quot += t;
      rem -= t * d;
    }
    if (!rem.is_zero()) throw std::runtime_error("inexact division");
    return quot;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c_) {
      if (!first && v > 0) os << "+";
      first = false;
      if (e == 0) {
        os << v.get_str();
      } else {
        if (v == -1) os << "-";
        else if (v != 1) os << v.get_str() << "*";
        os << "d";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

 private:
  void add_term(int e, const Int& v) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      if (v != 0) c_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  std::map<int, Int> c_;
};

// Integer Laurent polynomials in q and l, sparse over (q-exponent, l-exponent).
class LaurentQL {
 public:
  using Key = std::pair<int, int>;

  LaurentQL() = default;
  LaurentQL(long n) { if (n != 0) c_[{0, 0}] = Int(n); }
  LaurentQL(const Int& n) { if (n != 0) c_[{0, 0}] = n; }

  static LaurentQL monomial(int qe, int le, Int coeff = Int(1)) {
    LaurentQL p;
    if (coeff != 0) p.c_[{qe, le}] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  const std::map<Key, Int>& terms() const { return c_; }
  std::size_t term_count() const { return c_.size(); }

  // Lowest key in (q, l)-lexicographic order.
  Key lowest_key() const {
    if (c_.empty()) throw std::logic_error("LaurentQL: lowest of zero");
    return c_.begin()->first;
  }

  LaurentQL& operator+=(const LaurentQL& o) {
    for (auto& [k, v] : o.c_) add_term(k, v);
    return *this;
  }
  LaurentQL& operator-=(const LaurentQL& o) {
    for (auto& [k, v] : o.c_) add_term(k, -v);
    return *this;
  }
  friend LaurentQL operator+(LaurentQL a, const LaurentQL& b) { return a += b; }
  friend LaurentQL operator-(LaurentQL a, const LaurentQL& b) { return a -= b; }
  friend LaurentQL operator-(const LaurentQL& a) {
    LaurentQL r;
    for (auto& [k, v] : a.c_) r.c_[k] = -v;
    return r;
  }
  friend LaurentQL operator*(const LaurentQL& a, const LaurentQL& b) {
    LaurentQL r;
    for (auto& [ka, va] : a.c_)
      for (auto& [kb, vb] : b.c_)
        r.add_term({ka.first + kb.first, ka.second + kb.second}, va * vb);
    return r;
  }
  LaurentQL& operator*=(const LaurentQL& o) { return *this = *this * o; }

  LaurentQL shifted(int dq, int dl) const {
    LaurentQL r;
    for (auto& [k, v] : c_) r.c_[{k.first + dq, k.second + dl}] = v;
    return r;
  }

  // Exchange q <-> q^{-1} and l <-> l^{-1}.
  LaurentQL bar() const {
    LaurentQL r;
    for (auto& [k, v] : c_) r.c_[{-k.first, -k.second}] = v;
    return r;
  }

  Int content() const {
    Int g(0);
    for (auto& [k, v] : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
  }

  LaurentQL divided_by_int(const Int& d) const {
    LaurentQL r;
    for (auto& [k, v] : c_) {
      Int q, rem;
      mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
      if (rem != 0) throw std::runtime_error("inexact division");
      r.c_[k] = q;
    }
    return r;
  }

  friend bool operator==(const LaurentQL& a, const LaurentQL& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentQL& a, const LaurentQL& b) { return !(a == b); }
  friend bool operator<(const LaurentQL& a, const LaurentQL& b) { return a.c_ < b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, v] : c_) {
      if (!first && v > 0) os << "+";
      first = false;
      bool unit = (k.first == 0 && k.second == 0);
      if (v == -1 && !unit) os << "-";
      else if (v != 1 || unit) os << v.get_str() << (unit ? "" : "*");
      if (k.first != 0) { os << "q^" << k.first; if (k.second != 0) os << "*"; }
      if (k.second != 0) os << "l^" << k.second;
    }
    return os.str();
  }

 private:
  void add_term(const Key& k, const Int& v) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      if (v != 0) c_.emplace(k, v);
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  std::map<Key, Int> c_;
};

// Fractions of integer Laurent polynomials in (q, l).  Kept in a cheap
// canonical form: numerator and denominator divided by their common integer
// content, shifted so the denominator's lowest term sits at q^0 l^0 with a
// positive coefficient.  Equality is decided by cross-multiplication.
class RationalQL {
 public:
  RationalQL() : num_(), den_(1) {}
  RationalQL(long n) : num_(n), den_(1) {}
  RationalQL(const Int& n) : num_(n), den_(1) {}
  RationalQL(LaurentQL n) : num_(std::move(n)), den_(1) {}
  RationalQL(LaurentQL n, LaurentQL d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalQL: zero denominator");
    normalize();
  }

  const LaurentQL& num() const { return num_; }
  const LaurentQL& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Exact Laurent quotient num/den when the fraction reduces to a Laurent
  // polynomial; ascending division in q with exact division of l-slices.
  bool try_to_laurent(LaurentQL& out) const {
    LaurentQL rem = num_, quot;
    if (rem.is_zero()) { out = quot; return true; }
    auto [dq, dl] = den_.lowest_key();
    std::map<int, Int> d0;  // lowest q-slice of den, as an l-polynomial
    for (auto& [k, v] : den_.terms())
      if (k.first == dq) d0[k.second] = v;
    int qmax = num_.terms().rbegin()->first.first;  // map order: q major
    while (!rem.is_zero()) {
      auto [rq, rl] = rem.lowest_key();
      if (rq - dq > qmax + 1) return false;
      std::map<int, Int> r0;
      for (auto& [k, v] : rem.terms())
        if (k.first == rq) r0[k.second] = v;
      // Divide r0 by d0 as univariate Laurent polynomials in l.
      LaurentQL q0;
      while (!r0.empty()) {
        auto [le, lv] = *r0.begin();
        Int qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), lv.get_mpz_t(),
                    d0.begin()->second.get_mpz_t());
        if (rr != 0) return false;
        int shift = le - d0.begin()->first;
        q0 += LaurentQL::monomial(0, shift, qq);
        for (auto& [de, dv] : d0) {
          auto it = r0.find(de + shift);
          Int nv = (it == r0.end() ? Int(0) : it->second) - qq * dv;
          if (nv == 0) { if (it != r0.end()) r0.erase(it); }
          else r0[de + shift] = nv;
        }
      }
      LaurentQL step = q0.shifted(rq - dq, -dl);
      quot += step;
      rem -= step * den_;
    }
    out = quot;
    return true;
  }
  bool is_laurent() const {
    LaurentQL tmp;
    return try_to_laurent(tmp);
  }
  LaurentQL to_laurent() const {
    LaurentQL tmp;
    if (!try_to_laurent(tmp)) throw std::runtime_error("RationalQL: not a Laurent polynomial");
    return tmp;
  }

  friend RationalQL operator+(const RationalQL& a, const RationalQL& b) {
    return RationalQL(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalQL operator-(const RationalQL& a, const RationalQL& b) {
    return RationalQL(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalQL operator-(const RationalQL& a) { RationalQL r = a; r.num_ = -r.num_; return r; }
  friend RationalQL operator*(const RationalQL& a, const RationalQL& b) {
    return RationalQL(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalQL operator/(const RationalQL& a, const RationalQL& b) {
    if (b.is_zero()) throw std::invalid_argument("RationalQL: division by zero");
    return RationalQL(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalQL& operator+=(const RationalQL& o) { return *this = *this + o; }
  RationalQL& operator-=(const RationalQL& o) { return *this = *this - o; }
  RationalQL& operator*=(const RationalQL& o) { return *this = *this * o; }

  friend bool operator==(const RationalQL& a, const RationalQL& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalQL& a, const RationalQL& b) { return !(a == b); }

  std::string str() const {
    if (den_ == LaurentQL(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) { den_ = LaurentQL(1); return; }
    auto [dq, dl] = den_.lowest_key();
    num_ = num_.shifted(-dq, -dl);
    den_ = den_.shifted(-dq, -dl);
    if (den_.terms().begin()->second < 0) { num_ = -num_; den_ = -den_; }
    Int g(0);
    mpz_gcd(g.get_mpz_t(), num_.content().get_mpz_t(), den_.content().get_mpz_t());
    if (g > 1) { num_ = num_.divided_by_int(g); den_ = den_.divided_by_int(g); }
  }

  LaurentQL num_, den_;
};

// Truncated ascending power series in q with integer-Laurent coefficients in l.
// All stored q-exponents are strictly below the truncation order.
class QLSeries {
 public:
  explicit QLSeries(int order) : order_(order) {}

  int order() const { return order_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, std::map<int, Int>>& terms() const { return c_; }

  void add(int qe, int le, const Int& v) {
    if (qe >= order_ || v == 0) return;
    auto& slice = c_[qe];
    auto it = slice.find(le);
    if (it == slice.end()) {
      slice.emplace(le, v);
    } else {
      it->second += v;
      if (it->second == 0) slice.erase(it);
    }
    if (slice.empty()) c_.erase(qe);
  }

  static QLSeries from_laurent(const LaurentQL& p, int order) {
    QLSeries s(order);
    for (auto& [k, v] : p.terms()) s.add(k.first, k.second, v);
    return s;
  }

  QLSeries truncated(int order) const {
    QLSeries s(std::min(order, order_));
    for (auto& [qe, slice] : c_)
      for (auto& [le, v] : slice) s.add(qe, le, v);
    return s;
  }

  friend QLSeries operator+(const QLSeries& a, const QLSeries& b) {
    QLSeries s(std::min(a.order_, b.order_));
    for (auto& [qe, slice] : a.c_)
      for (auto& [le, v] : slice) s.add(qe, le, v);
    for (auto& [qe, slice] : b.c_)
      for (auto& [le, v] : slice) s.add(qe, le, v);
    return s;
  }
  friend QLSeries operator-(const QLSeries& a, const QLSeries& b) {
    QLSeries s(std::min(a.order_, b.order_));
    for (auto& [qe, slice] : a.c_)
      for (auto& [le, v] : slice) s.add(qe, le, v);
    for (auto& [qe, slice] : b.c_)
      for (auto& [le, v] : slice) s.add(qe, le, -v);
    return s;
  }
  friend QLSeries operator*(const QLSeries& a, const QLSeries& b) {
    QLSeries s(std::min(a.order_, b.order_));
    for (auto& [qa, sa] : a.c_)
      for (auto& [qb, sb] : b.c_) {
        if (qa + qb >= s.order_) continue;
        for (auto& [la, va] : sa)
          for (auto& [lb, vb] : sb) s.add(qa + qb, la + lb, va * vb);
      }
    return s;
  }

  // Equality of stored terms up to the smaller truncation order.
  friend bool agree(const QLSeries& a, const QLSeries& b) {
    int o = std::min(a.order_, b.order_);
    return a.truncated(o).c_ == b.truncated(o).c_;
  }
  friend bool operator==(const QLSeries& a, const QLSeries& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [qe, slice] : c_) {
      for (auto& [le, v] : slice) {
        if (!first && v > 0) os << "+";
        first = false;
        bool unit = (qe == 0 && le == 0);
        if (v == -1 && !unit) os << "-";
        else if (v != 1 || unit) os << v.get_str() << (unit ? "" : "*");
        if (qe != 0) { os << "q^" << qe; if (le != 0) os << "*"; }
        if (le != 0) os << "l^" << le;
      }
    }
    os << " + O(q^" << order_ << ")";
    return os.str();
  }

 private:
  int order_;
  std::map<int, std::map<int, Int>> c_;
};

// Lowest q-exponent of the ascending expansion of f (numerator minus
// denominator q-order).  Undefined on zero.
inline int series_low(const RationalQL& f) {
  if (f.is_zero()) throw std::logic_error("series_low of zero");
  return f.num().lowest_key().first - f.den().lowest_key().first;
}

// Quantum integer [k b + z]_q = (l^k q^z - l^{-k} q^{-z}) / (q - q^{-1}),
// where l stands for q^b with b the formal weight direction.
inline RationalQL quantum_integer(int k, int z) {
  LaurentQL num = LaurentQL::monomial(z, k) - LaurentQL::monomial(-z, -k);
  LaurentQL den = LaurentQL::monomial(1, 0) - LaurentQL::monomial(-1, 0);
  return RationalQL(std::move(num), std::move(den));
}

inline RationalQL qint(int n) { return quantum_integer(0, n); }

inline RationalQL qfactorial(int n) {
  RationalQL r(1);
  for (int i = 2; i <= n; ++i) r *= qint(i);
  return r;
}

// Ascending expansion of a rational function as a power series in q, exact in
// l, truncated strictly below `order`.  Requires the denominator's q-lowest
// slice to be a single l-monomial with coefficient +-1.
inline QLSeries series_expand(const RationalQL& f, int order) {
  if (f.is_zero()) return QLSeries(order);
  const LaurentQL& den = f.den();
  auto [q0, l0] = den.lowest_key();
  Int lead = den.terms().begin()->second;
  for (auto& [k, v] : den.terms())
    if (k.first == q0 && k != std::make_pair(q0, l0))
      throw std::runtime_error("non-invertible leading term");
  if (lead != 1 && lead != -1) throw std::runtime_error("non-invertible leading term");

  // Divide out the invertible leading monomial, then run ascending long
  // division against 1 - r where r has strictly positive q-order.
  LaurentQL num = f.num().shifted(-q0, -l0);
  if (lead == -1) num = -num;
  LaurentQL rest;  // den/lead - leading monomial, shifted to q-order > 0
  for (auto& [k, v] : den.terms()) {
    if (k == std::make_pair(q0, l0)) continue;
    rest += LaurentQL::monomial(k.first - q0, k.second - l0, lead == -1 ? -v : v);
  }

  int base = num.is_zero() ? 0 : num.lowest_key().first;
  QLSeries out(order);
  // rem holds the part of the numerator not yet emitted; process q-slices in
  // ascending order, emitting each slice and propagating -slice*rest.
  std::map<int, std::map<int, Int>> rem;
  for (auto& [k, v] : num.terms()) rem[k.first][k.second] = v;
  while (!rem.empty()) {
    auto it = rem.begin();
    int qe = it->first;
    if (qe >= order) break;
    auto slice = it->second;
    rem.erase(it);
    for (auto& [le, v] : slice) {
      if (v == 0) continue;
      out.add(qe, le, v);
      for (auto& [kr, vr] : rest.terms()) {
        auto& cell = rem[qe + kr.first][le + kr.second];
        cell -= v * vr;
      }
    }
    (void)base;
  }
  return out;
}

}  // namespace dgklrw
