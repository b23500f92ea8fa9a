// Diagram model for the nail-decorated KLRW-type algebra: boundary strand
// sequences, generator stacks, validation, grading, composition, and the
// canonical form modulo braid-like isotopy.
//
// A monomial is a stack of generator sites over a bottom strand sequence.
// Two sites at adjacent heights commute exactly when their strand supports
// are disjoint; the canonical form is the greedy linearization of the induced
// dependency order (least position first, then a fixed kind order).

#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "scalars.hpp"

namespace dgklrw {

// A colored-strand label: a dominant integral weight n, or the generic weight
// direction plus an integer offset.
struct Weight {
  bool generic = false;
  int value = 0;

  static Weight integral(int n) {
    if (n < 0) throw std::invalid_argument("integral weight must be nonnegative");
    return Weight{false, n};
  }
  static Weight shifted_generic(int z) { return Weight{true, z}; }

  // Grading contribution of q^{weight}.
  GradingVector q_power() const { return generic ? GradingVector{0, value, 1} : GradingVector{0, value, 0}; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.generic == b.generic && a.value == b.value;
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  std::string str() const { return (generic ? "g" : "i") + std::to_string(value); }
};

// Weak composition of b into r parts: the number of black strands in each
// colored block.
using Composition = std::vector<int>;

inline int comp_size(const Composition& c) {
  int b = 0;
  for (int x : c) b += x;
  return b;
}

// All weak compositions of b into r parts.
inline std::vector<Composition> all_compositions(int b, int r) {
  std::vector<Composition> out;
  Composition cur(r, 0);
  auto rec = [&](auto&& self, int i, int rest) -> void {
    if (i == r - 1) {
      cur[i] = rest;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= rest; ++x) {
      cur[i] = x;
      self(self, i + 1, rest - x);
    }
  };
  if (r >= 1) rec(rec, 0, b);
  return out;
}

// Compositions respecting the integral caps (parts at integral weights are
// bounded by the weight).
inline bool respects_caps(const Composition& c, const std::vector<Weight>& mu) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!mu[i].generic && c[i] > mu[i].value) return false;
  return true;
}

// A strand sequence: entry 0 is a black strand, entry c >= 1 the c-th colored
// strand.  Valid sequences start with colored strand 1 and list colored
// strands in increasing order.
using StrandSeq = std::vector<int>;

inline StrandSeq seq_of(const Composition& rho) {
  StrandSeq s;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    s.push_back(static_cast<int>(i) + 1);
    for (int j = 0; j < rho[i]; ++j) s.push_back(0);
  }
  return s;
}

inline Composition comp_of(const StrandSeq& s) {
  Composition c;
  for (int x : s) {
    if (x >= 1) c.push_back(0);
    else if (!c.empty()) c.back()++;
  }
  return c;
}

enum class SiteKind : std::uint8_t { Dot = 0, Nail = 1, BlackCrossing = 2, MixedCrossing = 3 };

inline const char* kind_name(SiteKind k) {
  switch (k) {
    case SiteKind::Dot: return "dot";
    case SiteKind::Nail: return "nail";
    case SiteKind::BlackCrossing: return "black_crossing";
    case SiteKind::MixedCrossing: return "mixed_crossing";
  }
  return "?";
}

// One generator at one height.  `pos` is the 0-based index of the leftmost
// strand of the site's support; a nail always has support {0, 1}.
struct GeneratorSite {
  SiteKind kind;
  int pos;

  int support_lo() const { return kind == SiteKind::Nail ? 0 : pos; }
  int support_hi() const { return kind == SiteKind::Dot ? pos : support_lo() + 1; }
  bool overlaps(const GeneratorSite& o) const {
    return support_lo() <= o.support_hi() && o.support_lo() <= support_hi();
  }

  friend bool operator==(const GeneratorSite& a, const GeneratorSite& b) {
    return a.kind == b.kind && a.pos == b.pos;
  }
  friend bool operator<(const GeneratorSite& a, const GeneratorSite& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  }
};

inline GeneratorSite dot_site(int pos) { return {SiteKind::Dot, pos}; }
inline GeneratorSite nail_site() { return {SiteKind::Nail, 0}; }
inline GeneratorSite black_site(int pos) { return {SiteKind::BlackCrossing, pos}; }
inline GeneratorSite mixed_site(int pos) { return {SiteKind::MixedCrossing, pos}; }

struct Diagnostic {
  std::string message;
  int height = -1;  // -1: the bottom sequence itself
  std::string str() const {
    return height < 0 ? message : message + " at height " + std::to_string(height);
  }
};

// Apply one site to a running sequence; returns a diagnostic on the first
// violated invariant.
inline std::optional<Diagnostic> apply_site(StrandSeq& seq, const GeneratorSite& s, int height) {
  int n = static_cast<int>(seq.size());
  switch (s.kind) {
    case SiteKind::Dot:
      if (s.pos < 0 || s.pos >= n) return Diagnostic{"site out of range", height};
      if (seq[s.pos] != 0) return Diagnostic{"dot on colored strand", height};
      return std::nullopt;
    case SiteKind::Nail:
      if (n < 2) return Diagnostic{"site out of range", height};
      if (seq[0] == 0) return Diagnostic{"leftmost strand not colored", height};
      if (seq[1] != 0) return Diagnostic{"nail without adjacent black strand", height};
      return std::nullopt;
    case SiteKind::BlackCrossing:
    case SiteKind::MixedCrossing: {
      if (s.pos < 0 || s.pos + 1 >= n) return Diagnostic{"site out of range", height};
      int a = seq[s.pos], b = seq[s.pos + 1];
      if (a != 0 && b != 0) return Diagnostic{"colored strands cannot cross", height};
      if (s.kind == SiteKind::BlackCrossing && (a != 0 || b != 0))
        return Diagnostic{"black crossing touching a colored strand", height};
      if (s.kind == SiteKind::MixedCrossing && a == 0 && b == 0)
        return Diagnostic{"mixed crossing on two black strands", height};
      std::swap(seq[s.pos], seq[s.pos + 1]);
      if (seq[0] == 0) return Diagnostic{"leftmost strand not colored", height};
      return std::nullopt;
    }
  }
  return Diagnostic{"unknown site kind", height};
}

class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<Weight> mu, Composition bottom, std::vector<GeneratorSite> stack,
           bool canonicalize = true)
      : mu_(std::move(mu)), bottom_(std::move(bottom)), stack_(std::move(stack)) {
    if (canonicalize) to_canonical();
  }

  const std::vector<Weight>& mu() const { return mu_; }
  const Composition& bottom() const { return bottom_; }
  const std::vector<GeneratorSite>& stack() const { return stack_; }
  int strands() const { return static_cast<int>(mu_.size()) + comp_size(bottom_); }
  int black_count() const { return comp_size(bottom_); }

  StrandSeq bottom_seq() const { return seq_of(bottom_); }
  StrandSeq top_seq() const {
    StrandSeq s = bottom_seq();
    for (std::size_t h = 0; h < stack_.size(); ++h) {
      auto d = apply_site(s, stack_[h], static_cast<int>(h));
      if (d) throw std::logic_error("invalid monomial: " + d->str());
    }
    return s;
  }
  Composition top() const { return comp_of(top_seq()); }

  bool is_idempotent() const { return stack_.empty(); }

  // Sequences at every height: entry h is the sequence below site h.
  std::vector<StrandSeq> levels() const {
    std::vector<StrandSeq> out;
    StrandSeq s = bottom_seq();
    out.push_back(s);
    for (std::size_t h = 0; h < stack_.size(); ++h) {
      auto d = apply_site(s, stack_[h], static_cast<int>(h));
      if (d) throw std::logic_error("invalid monomial: " + d->str());
      out.push_back(s);
    }
    return out;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.bottom_ == b.bottom_ && a.stack_ == b.stack_ && a.mu_ == b.mu_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.bottom_ != b.bottom_) return a.bottom_ < b.bottom_;
    if (a.stack_.size() != b.stack_.size()) return a.stack_.size() < b.stack_.size();
    for (std::size_t i = 0; i < a.stack_.size(); ++i) {
      if (!(a.stack_[i] == b.stack_[i])) {
        if (a.stack_[i].pos != b.stack_[i].pos) return a.stack_[i].pos < b.stack_[i].pos;
        return static_cast<int>(a.stack_[i].kind) < static_cast<int>(b.stack_[i].kind);
      }
    }
    for (std::size_t i = 0; i < a.mu_.size(); ++i) {
      if (a.mu_[i] != b.mu_[i]) {
        if (a.mu_[i].generic != b.mu_[i].generic) return b.mu_[i].generic;
        return a.mu_[i].value < b.mu_[i].value;
      }
    }
    return false;
  }

  // Canonical byte encoding (bottom sequence, then site list); used as cache
  // key.
  std::string encode() const {
    std::ostringstream os;
    for (const auto& w : mu_) os << w.str() << ",";
    os << "|";
    for (int x : bottom_) os << x << ",";
    os << "|";
    for (const auto& s : stack_) os << static_cast<int>(s.kind) << ":" << s.pos << ";";
    return os.str();
  }

  std::string str() const {
    std::ostringstream os;
    os << "1_(";
    for (std::size_t i = 0; i < bottom_.size(); ++i) os << (i ? "," : "") << bottom_[i];
    os << ")";
    for (const auto& s : stack_) {
      switch (s.kind) {
        case SiteKind::Dot: os << " x" << s.pos; break;
        case SiteKind::Nail: os << " N"; break;
        case SiteKind::BlackCrossing: os << " t" << s.pos; break;
        case SiteKind::MixedCrossing: os << " m" << s.pos; break;
      }
    }
    return os.str();
  }

  void to_canonical() {
    int n = static_cast<int>(stack_.size());
    if (n <= 1) return;
    std::vector<bool> emitted(n, false);
    std::vector<GeneratorSite> out;
    out.reserve(n);
    for (int step = 0; step < n; ++step) {
      int best = -1;
      for (int i = 0; i < n; ++i) {
        if (emitted[i]) continue;
        bool ready = true;
        for (int j = 0; j < i && ready; ++j)
          if (!emitted[j] && stack_[j].overlaps(stack_[i])) ready = false;
        if (!ready) continue;
        if (best < 0 || stack_[i] < stack_[best]) best = i;
      }
      assert(best >= 0);
      emitted[best] = true;
      out.push_back(stack_[best]);
    }
    stack_ = std::move(out);
  }

 private:
  std::vector<Weight> mu_;
  Composition bottom_;
  std::vector<GeneratorSite> stack_;
};

inline Monomial idempotent(std::vector<Weight> mu, Composition rho) {
  return Monomial(std::move(mu), std::move(rho), {});
}

// Full validation: every site invariant along the running sequence, plus the
// colored-leftmost condition on the bottom sequence itself.
inline std::optional<Diagnostic> validate_sequence(const std::vector<Weight>& mu,
                                                   const StrandSeq& bottom,
                                                   const std::vector<GeneratorSite>& stack) {
  if (bottom.empty() || bottom[0] == 0) return Diagnostic{"leftmost strand not colored", -1};
  int expected = 1;
  int blacks = 0;
  for (int x : bottom) {
    if (x == 0) { ++blacks; continue; }
    if (x != expected) return Diagnostic{"colored strands out of order", -1};
    ++expected;
  }
  if (expected != static_cast<int>(mu.size()) + 1)
    return Diagnostic{"colored strand count does not match weight string", -1};
  StrandSeq s = bottom;
  for (std::size_t h = 0; h < stack.size(); ++h) {
    auto d = apply_site(s, stack[h], static_cast<int>(h));
    if (d) return d;
  }
  return std::nullopt;
}

inline std::optional<Diagnostic> validate_monomial(const Monomial& m) {
  return validate_sequence(m.mu(), m.bottom_seq(), m.stack());
}

// Degree of a single site against the sequence below it.
inline GradingVector site_degree(const std::vector<Weight>& mu, const StrandSeq& below,
                                 const GeneratorSite& s) {
  switch (s.kind) {
    case SiteKind::Dot: return {0, 2, 0};
    case SiteKind::BlackCrossing: return {0, -2, 0};
    case SiteKind::MixedCrossing: {
      int c = below[s.pos] != 0 ? below[s.pos] : below[s.pos + 1];
      return mu[c - 1].q_power();
    }
    case SiteKind::Nail: {
      GradingVector g = mu[0].q_power();
      return {1, 2 * g.q, 2 * g.l};
    }
  }
  return {};
}

inline GradingVector degree(const Monomial& m) {
  GradingVector g{};
  StrandSeq s = m.bottom_seq();
  for (std::size_t h = 0; h < m.stack().size(); ++h) {
    g += site_degree(m.mu(), s, m.stack()[h]);
    auto d = apply_site(s, m.stack()[h], static_cast<int>(h));
    if (d) throw std::logic_error("invalid monomial: " + d->str());
  }
  return g;
}

// Product by stacking `upper` on top of `lower`; empty optional encodes the
// zero product (mismatched boundary sequences).
inline std::optional<Monomial> compose(const Monomial& upper, const Monomial& lower) {
  if (upper.mu() != lower.mu()) return std::nullopt;
  if (upper.bottom_seq() != lower.top_seq()) return std::nullopt;
  std::vector<GeneratorSite> stack = lower.stack();
  stack.insert(stack.end(), upper.stack().begin(), upper.stack().end());
  return Monomial(lower.mu(), lower.bottom(), std::move(stack));
}

// Vertical mirror: reversed stack over the old top sequence.
inline Monomial flip(const Monomial& m) {
  std::vector<GeneratorSite> stack(m.stack().rbegin(), m.stack().rend());
  return Monomial(m.mu(), m.top(), std::move(stack));
}

// Tightened nail on the k-th black strand (1-based) with p extra dots,
// in canonical form.
inline Monomial theta(int k, const Composition& rho, const std::vector<Weight>& mu, int p = 0) {
  StrandSeq seq = seq_of(rho);
  int pos0 = -1, seen = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i] == 0 && ++seen == k) { pos0 = static_cast<int>(i); break; }
  if (pos0 < 0) throw std::invalid_argument("theta: black strand index out of range");
  std::vector<GeneratorSite> stack;
  for (int j = pos0; j > 1; --j)
    stack.push_back(seq[j - 1] == 0 ? black_site(j - 1) : mixed_site(j - 1));
  stack.push_back(nail_site());
  for (int j = 1; j < pos0; ++j)
    stack.push_back(seq[j] == 0 ? black_site(j) : mixed_site(j));
  for (int i = 0; i < p; ++i) stack.push_back(dot_site(pos0));
  return Monomial(mu, rho, std::move(stack));
}

// Finite formal sums of monomials with polynomial coefficients in the
// deformation parameter.
class Element {
 public:
  Element() = default;
  explicit Element(const Monomial& m, DeltaPoly c = DeltaPoly(1)) {
    if (!c.is_zero()) terms_[m] = std::move(c);
  }

  static Element zero() { return Element(); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, DeltaPoly>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  void add(const Monomial& m, const DeltaPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    for (auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  Element& operator-=(const Element& o) {
    for (auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) {
    Element r;
    for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }
  friend Element operator*(const DeltaPoly& s, const Element& a) {
    Element r;
    for (auto& [m, c] : a.terms_) r.add(m, s * c);
    return r;
  }

  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  // Bilinear extension of monomial stacking; boundary-mismatched pairs vanish.
  friend Element compose(const Element& a, const Element& b) {
    Element r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_)
        if (auto m = compose(ma, mb)) r.add(*m, ca * cb);
    return r;
  }

  Element specialized_at_zero() const {
    Element r;
    for (auto& [m, c] : terms_) r.add(m, c.at_zero());
    return r;
  }

  // Homogeneous degree; empty when terms disagree or the element is zero.
  std::optional<GradingVector> homogeneous_degree() const {
    std::optional<GradingVector> g;
    for (auto& [m, c] : terms_) {
      GradingVector d = degree(m);
      if (!g) g = d;
      else if (!(*g == d)) return std::nullopt;
    }
    return g;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
  }

 private:
  std::map<Monomial, DeltaPoly> terms_;
};

inline Element flip(const Element& e) {
  Element r;
  for (auto& [m, c] : e.terms()) r.add(flip(m), c);
  return r;
}

}  // namespace dgklrw
