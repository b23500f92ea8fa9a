// The polynomial representation: each idempotent label carries a copy of
// R[x_1..x_b] tensored with an exterior algebra on w_1..w_b, R the polynomial
// ring in the deformation parameter.  Crossings act by twisted divided
// differences, dots by multiplication, colored crossings by 1, x_i^N or the
// parameter, and the nail by the first exterior generator.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "rewrite.hpp"

namespace dgklrw {

// Exterior mask and x-exponent vector; the exterior factor is kept in
// ascending index order with signs absorbed into coefficients.
struct PolKey {
  std::uint32_t omega = 0;
  std::vector<int> x;

  friend bool operator<(const PolKey& a, const PolKey& b) {
    if (a.omega != b.omega) return a.omega < b.omega;
    return a.x < b.x;
  }
  friend bool operator==(const PolKey& a, const PolKey& b) {
    return a.omega == b.omega && a.x == b.x;
  }
};

class PolElement {
 public:
  PolElement() = default;
  PolElement(Composition label, int b) : label_(std::move(label)), b_(b) {}

  static PolElement unit(const Composition& label) {
    PolElement p(label, comp_size(label));
    p.terms_[PolKey{0, std::vector<int>(p.b_, 0)}] = DeltaPoly(1);
    return p;
  }

  const Composition& label() const { return label_; }
  int vars() const { return b_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<PolKey, DeltaPoly>& terms() const { return terms_; }

  void add(const PolKey& k, const DeltaPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  PolElement& operator+=(const PolElement& o) {
    for (auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  PolElement& operator-=(const PolElement& o) {
    for (auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  friend PolElement operator+(PolElement a, const PolElement& b) { return a += b; }
  friend PolElement operator-(PolElement a, const PolElement& b) { return a -= b; }
  friend bool operator==(const PolElement& a, const PolElement& b) {
    return a.label_ == b.label_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const PolElement& a, const PolElement& b) { return !(a == b); }

  PolElement scaled(const DeltaPoly& s) const {
    PolElement r(label_, b_);
    for (auto& [k, c] : terms_) r.add(k, s * c);
    return r;
  }

  // Multiplication by x_i (1-based).
  PolElement times_x(int i) const {
    PolElement r(label_, b_);
    for (auto& [k, c] : terms_) {
      PolKey nk = k;
      nk.x[i - 1] += 1;
      r.add(nk, c);
    }
    return r;
  }

  // Left exterior multiplication by w_1.
  PolElement times_omega1() const {
    PolElement r(label_, b_);
    for (auto& [k, c] : terms_) {
      if (k.omega & 1u) continue;
      PolKey nk = k;
      nk.omega |= 1u;
      r.add(nk, c);
    }
    return r;
  }

  PolElement with_label(Composition l) const {
    PolElement r = *this;
    r.label_ = std::move(l);
    return r;
  }

  PolElement at_zero() const {
    PolElement r(label_, b_);
    for (auto& [k, c] : terms_) r.add(k, c.at_zero());
    return r;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (std::size_t i = 0; i < k.x.size(); ++i)
        if (k.x[i]) os << "*x" << (i + 1) << "^" << k.x[i];
      for (int i = 0; i < b_; ++i)
        if (k.omega >> i & 1u) os << "*w" << (i + 1);
    }
    return os.str();
  }

 private:
  Composition label_;
  int b_ = 0;
  std::map<PolKey, DeltaPoly> terms_;
};

// Twisted symmetric-group action of the simple transposition s_i (1-based,
// 1 <= i < b): x_j -> x_{s_i(j)}, w_i -> w_i + (x_i - x_{i+1}) w_{i+1},
// all other w_j fixed.
inline PolElement sigma(int i, const PolElement& p) {
  if (i < 1 || i >= p.vars()) throw std::invalid_argument("sigma: index out of range");
  PolElement r(p.label(), p.vars());
  std::uint32_t bi = 1u << (i - 1), bj = 1u << i;
  for (auto& [k, c] : p.terms()) {
    PolKey base = k;
    std::swap(base.x[i - 1], base.x[i]);
    r.add(base, c);
    if ((k.omega & bi) && !(k.omega & bj)) {
      // Replace the w_i factor by (x_i - x_{i+1}) w_{i+1}; the slot order is
      // unchanged, so no extra sign.
      PolKey k1 = base;
      k1.omega = (base.omega & ~bi) | bj;
      k1.x[i - 1] += 1;
      r.add(k1, c);
      PolKey k2 = k1;
      k2.x[i - 1] -= 1;
      k2.x[i] += 1;
      r.add(k2, -c);
    } else if ((k.omega & bi) && (k.omega & bj)) {
      // The replacement term vanishes against the existing w_{i+1}.
    }
  }
  return r;
}

// Divided difference (f - s_i f) / (x_i - x_{i+1}); the quotient is exact.
inline PolElement demazure(int i, const PolElement& p) {
  PolElement num = p - sigma(i, p);
  PolElement r(p.label(), p.vars());
  // Long division by x_i - x_{i+1}, eliminating the highest x_i-exponent.
  std::map<PolKey, DeltaPoly> rem(num.terms().begin(), num.terms().end());
  auto pick = [&]() {
    auto best = rem.end();
    for (auto it = rem.begin(); it != rem.end(); ++it) {
      if (best == rem.end()) { best = it; continue; }
      const auto &a = it->first, &b = best->first;
      if (a.x[i - 1] != b.x[i - 1] ? a.x[i - 1] > b.x[i - 1] : a < b) best = it;
    }
    return best;
  };
  while (!rem.empty()) {
    auto it = pick();
    PolKey k = it->first;
    DeltaPoly c = it->second;
    if (k.x[i - 1] == 0) throw std::runtime_error("inexact division");
    PolKey q = k;
    q.x[i - 1] -= 1;
    r.add(q, c);
    // Subtract c * x^q * (x_i - x_{i+1}).
    rem.erase(it);
    PolKey t2 = q;
    t2.x[i] += 1;
    auto jt = rem.find(t2);
    if (jt == rem.end()) {
      if (!c.is_zero()) rem.emplace(t2, c);
    } else {
      jt->second += c;
      if (jt->second.is_zero()) rem.erase(jt);
    }
  }
  return r;
}

// Black-strand index (1-based) of the strand at `pos` in `seq`.
inline int black_index(const StrandSeq& seq, int pos) {
  int i = 0;
  for (int p = 0; p <= pos; ++p)
    if (seq[p] == 0) ++i;
  return i;
}

// Action of a single generator site on a polynomial vector whose label
// matches the sequence below the site.
inline PolElement act_site(const std::vector<Weight>& mu, const StrandSeq& below,
                           const GeneratorSite& s, const PolElement& p) {
  StrandSeq above = below;
  apply_site(above, s, 0);
  Composition top = comp_of(above);
  switch (s.kind) {
    case SiteKind::Dot:
      return p.times_x(black_index(below, s.pos)).with_label(top);
    case SiteKind::BlackCrossing:
      return demazure(black_index(below, s.pos), p).with_label(top);
    case SiteKind::MixedCrossing: {
      bool black_left = below[s.pos] == 0;
      int i = black_left ? black_index(below, s.pos) : black_index(below, s.pos + 1);
      if (black_left) return p.with_label(top);  // black strand heads right
      Weight w = mu[below[s.pos] - 1];
      if (w.generic) return p.scaled(DeltaPoly::delta()).with_label(top);
      PolElement r = p;
      for (int t = 0; t < w.value; ++t) r = r.times_x(i);
      return r.with_label(top);
    }
    case SiteKind::Nail:
      return p.times_omega1().with_label(top);
  }
  return PolElement(top, p.vars());
}

inline PolElement act(const Monomial& m, const PolElement& p) {
  if (p.label() != m.bottom()) return PolElement(m.top(), p.vars());
  PolElement cur = p;
  StrandSeq seq = m.bottom_seq();
  for (std::size_t h = 0; h < m.stack().size(); ++h) {
    cur = act_site(m.mu(), seq, m.stack()[h], cur);
    apply_site(seq, m.stack()[h], static_cast<int>(h));
    if (cur.is_zero()) break;
  }
  return cur.with_label(comp_of(seq));
}

inline PolElement act(const Element& e, const PolElement& p) {
  PolElement out;
  bool first = true;
  for (auto& [m, c] : e.terms()) {
    PolElement im = act(m, p).scaled(c);
    if (first) { out = im; first = false; }
    else out += im;
  }
  return out;
}

// All test vectors x^a w_S eps_label with |a| <= cap.
inline std::vector<PolElement> test_vectors(const Composition& label, int cap) {
  int b = comp_size(label);
  std::vector<std::vector<int>> exps;
  std::vector<int> cur(b, 0);
  auto rec = [&](auto&& self, int i, int rest) -> void {
    if (i == b) { exps.push_back(cur); return; }
    for (int v = 0; v <= rest; ++v) {
      cur[i] = v;
      self(self, i + 1, rest - v);
    }
  };
  if (b == 0) exps.push_back({});
  else rec(rec, 0, cap);
  std::vector<PolElement> out;
  for (std::uint32_t mask = 0; mask < (1u << b); ++mask)
    for (auto& e : exps) {
      PolElement p(label, b);
      p.add(PolKey{mask, e}, DeltaPoly(1));
      out.push_back(p);
    }
  return out;
}

struct RelationReport {
  long instances = 0;
  long failures = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return failures == 0; }
};

namespace detail {

// Explicit left-hand-side instances of every rule family over one bottom
// sequence; paired with nothing, they are fed back through the redex finder.
inline std::vector<Monomial> rule_instances(const std::vector<Weight>& mu,
                                            const Composition& rho, int max_loop_width) {
  std::vector<Monomial> out;
  StrandSeq seq = seq_of(rho);
  int n = static_cast<int>(seq.size());
  auto push = [&](std::vector<GeneratorSite> stack) {
    if (!validate_sequence(mu, seq, stack))
      out.emplace_back(mu, rho, std::move(stack), /*canonicalize=*/true);
  };
  for (int p = 1; p + 1 < n; ++p) {
    bool bb = seq[p] == 0 && seq[p + 1] == 0;
    bool mix = (seq[p] == 0) != (seq[p + 1] == 0);
    if (bb) {
      push({black_site(p), black_site(p)});
      push({dot_site(p), black_site(p)});
      push({dot_site(p + 1), black_site(p)});
    }
    if (mix) {
      push({mixed_site(p), mixed_site(p)});
      int pb = seq[p] == 0 ? p : p + 1;
      push({dot_site(pb), mixed_site(p)});
    }
  }
  for (int p = 1; p + 2 < n; ++p) {
    if (seq[p] == 0 && seq[p + 1] == 0 && seq[p + 2] == 0)
      push({black_site(p + 1), black_site(p), black_site(p + 1)});
    if (seq[p] == 0 && seq[p + 1] != 0 && seq[p + 2] == 0)
      push({mixed_site(p + 1), black_site(p), mixed_site(p + 1)});
    if (seq[p] == 0 && seq[p + 1] == 0 && seq[p + 2] != 0)
      push({mixed_site(p + 1), mixed_site(p), black_site(p + 1)});
    if (seq[p] != 0 && seq[p + 1] == 0 && seq[p + 2] == 0)
      push({black_site(p + 1), mixed_site(p), mixed_site(p + 1)});
  }
  if (n >= 2 && seq[1] == 0) {
    push({dot_site(1), nail_site()});
    push({nail_site(), nail_site()});
    if (n >= 3 && seq[2] == 0)
      push({nail_site(), black_site(1), nail_site(), black_site(1)});
  }
  // Nail-loop instances: a crossing trapped under a full loop of width k.
  for (int k = 2; k <= max_loop_width; ++k) {
    if (k + 1 >= n || seq[k + 1] != 0) continue;
    bool ok_pair = seq[k - 1] == 0 || seq[k] == 0;
    if (!ok_pair) continue;
    std::vector<GeneratorSite> stack;
    detail::StackBuilder b(seq);
    b.cross(k - 1);
    for (int j = k; j >= 1; --j) b.cross(j);
    b.nail();
    for (int j = 1; j <= k; ++j) b.cross(j);
    push(b.sites);
  }
  return out;
}

}  // namespace detail

// For every rule instance over the given weights and strand count, check that
// the two sides of each applicable rewrite act identically on all test
// vectors of degree at most `cap`.
inline RelationReport verify_relations(const std::vector<Weight>& mu, int b, int cap,
                                       const RewriteOptions& opt = {}) {
  RelationReport rep;
  int loop_width = b + static_cast<int>(mu.size()) - 2;
  for (const auto& rho : all_compositions(b, static_cast<int>(mu.size()))) {
    auto vectors = test_vectors(rho, cap);
    for (const auto& inst : detail::rule_instances(mu, rho, loop_width)) {
      for (const auto& r : find_redexes(inst, opt.loop_rules)) {
        Element lhs(inst);
        Element rhs = apply_redex(inst, r, opt);
        ++rep.instances;
        for (const auto& v : vectors) {
          if (act(lhs, v) != act(rhs, v)) {
            ++rep.failures;
            rep.witnesses.push_back(std::string(family_name(r.family)) + " on " + inst.str());
            break;
          }
        }
      }
    }
  }
  return rep;
}

// Rank of a family of algebra elements acting on a shared test set, computed
// by fraction-free elimination over the polynomial ring in the parameter.
inline int independence_rank(const std::vector<Element>& elements,
                             const std::vector<PolElement>& vectors) {
  struct ColKey {
    int vec;
    PolKey k;
    bool operator<(const ColKey& o) const {
      if (vec != o.vec) return vec < o.vec;
      return k < o.k;
    }
  };
  using Row = std::map<ColKey, DeltaPoly>;
  std::vector<std::pair<ColKey, Row>> pivots;  // (pivot column, row)
  int rank = 0;
  for (const auto& e : elements) {
    Row row;
    for (int vi = 0; vi < static_cast<int>(vectors.size()); ++vi) {
      PolElement im = act(e, vectors[vi]);
      for (auto& [k, c] : im.terms()) row[ColKey{vi, k}] = c;
    }
    // Eliminate against existing pivots (fraction-free, Bareiss-style):
    // after step i the entries are i+1 minors, and dividing by the previous
    // pivot is exact.
    DeltaPoly prev(1);
    for (auto& [pc, prow] : pivots) {
      const DeltaPoly& pivot = prow.at(pc);
      auto it = row.find(pc);
      DeltaPoly factor = it == row.end() ? DeltaPoly() : it->second;
      Row next;
      for (auto& [k, c] : row) {
        DeltaPoly v = pivot * c;
        if (!factor.is_zero()) {
          auto jt = prow.find(k);
          if (jt != prow.end()) v -= factor * jt->second;
        }
        if (!v.is_zero()) next[k] = v.exact_div(prev);
      }
      if (!factor.is_zero())
        for (auto& [k, c] : prow) {
          if (row.count(k)) continue;
          DeltaPoly v = -(factor * c);
          if (!v.is_zero()) next[k] = v.exact_div(prev);
        }
      row = std::move(next);
      prev = pivot;
    }
    if (row.empty()) continue;
    pivots.emplace_back(row.begin()->first, std::move(row));
    ++rank;
  }
  return rank;
}

}  // namespace dgklrw
