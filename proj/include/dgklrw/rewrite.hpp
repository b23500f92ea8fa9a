// Oriented rewriting for the parametrized diagram algebra, applied modulo
// braid-like isotopy: redex search on canonical forms, single-step and full
// reduction, and the lexicographic termination statistic.
//
// A redex is an embedding of a rule's left-hand side as a dependency-convex
// set of sites: no external site lies dependency-between two matched sites.
// The indexed nail-loop families are matched structurally on demand.

#pragma once

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"

namespace dgklrw {

// Lexicographic termination statistic.  The first three entries are the
// isotopy-invariant triple (crossing positions, dots-below-activity,
// crossings trapped under nails); the fourth orders nail reorderings, which
// preserve the triple.
struct TerminationWeight {
  std::array<long, 4> v{0, 0, 0, 0};

  friend bool operator<(const TerminationWeight& a, const TerminationWeight& b) { return a.v < b.v; }
  friend bool operator==(const TerminationWeight& a, const TerminationWeight& b) { return a.v == b.v; }
  std::array<long, 3> triple() const { return {v[0], v[1], v[2]}; }
  std::string str() const {
    return "(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
           ";" + std::to_string(v[3]) + ")";
  }
};

namespace detail {

// Per-monomial geometry: sequences below every height and strand identities.
struct Geometry {
  std::vector<StrandSeq> level;          // level[h] = sequence below site h
  std::vector<std::vector<int>> ids;     // ids[h][p] = bottom index of strand at (h, p)
  std::vector<std::vector<char>> reach;  // dependency reachability, h < h'

  explicit Geometry(const Monomial& m) {
    int n = static_cast<int>(m.stack().size());
    level = m.levels();
    ids.resize(n + 1);
    int width = static_cast<int>(level[0].size());
    ids[0].resize(width);
    for (int p = 0; p < width; ++p) ids[0][p] = p;
    for (int h = 0; h < n; ++h) {
      ids[h + 1] = ids[h];
      const GeneratorSite& s = m.stack()[h];
      if (s.kind == SiteKind::BlackCrossing || s.kind == SiteKind::MixedCrossing)
        std::swap(ids[h + 1][s.pos], ids[h + 1][s.pos + 1]);
    }
    reach.assign(n, std::vector<char>(n, 0));
    for (int j = 0; j < n; ++j)
      for (int i = j - 1; i >= 0; --i) {
        if (m.stack()[i].overlaps(m.stack()[j])) { reach[i][j] = 1; continue; }
        for (int k = i + 1; k < j; ++k)
          if (reach[i][k] && reach[k][j]) { reach[i][j] = 1; break; }
      }
  }

  int strand_pos(int h, int id) const {
    for (int p = 0; p < static_cast<int>(ids[h].size()); ++p)
      if (ids[h][p] == id) return p;
    return -1;
  }

  bool convex(const std::vector<int>& sites) const {
    int n = static_cast<int>(reach.size());
    std::vector<char> in(n, 0);
    for (int s : sites) in[s] = 1;
    for (int x = 0; x < n; ++x) {
      if (in[x]) continue;
      bool above = false, below = false;
      for (int s : sites) {
        if (s < x && reach[s][x]) above = true;
        if (x < s && reach[x][s]) below = true;
      }
      if (above && below) return false;
    }
    return true;
  }
};

}  // namespace detail

inline TerminationWeight termination_weight(const Monomial& m) {
  detail::Geometry g(m);
  const auto& stack = m.stack();
  int n = static_cast<int>(stack.size());
  TerminationWeight w;
  for (int h = 0; h < n; ++h) {
    const GeneratorSite& s = stack[h];
    switch (s.kind) {
      case SiteKind::BlackCrossing:
      case SiteKind::MixedCrossing:
        w.v[0] += s.pos;
        break;
      case SiteKind::Dot: {
        int id = g.ids[h][s.pos];
        long k = 0;
        for (int h2 = h + 1; h2 < n; ++h2) {
          const GeneratorSite& t = stack[h2];
          if (t.kind == SiteKind::Dot) continue;
          int p = g.strand_pos(h2, id);
          if (p >= t.support_lo() && p <= t.support_hi()) ++k;
        }
        w.v[1] += k;
        break;
      }
      case SiteKind::Nail: {
        int id = g.ids[h][1];
        long trapped = 0, above = 0;
        for (int h2 = 0; h2 < h; ++h2) {
          const GeneratorSite& t = stack[h2];
          if (t.kind != SiteKind::BlackCrossing && t.kind != SiteKind::MixedCrossing) continue;
          int p = g.strand_pos(h2, id);
          if (t.pos + 1 < p) ++trapped;
        }
        for (int h2 = h + 1; h2 < n; ++h2) {
          const GeneratorSite& t = stack[h2];
          if (t.kind == SiteKind::BlackCrossing || t.kind == SiteKind::MixedCrossing) ++above;
        }
        w.v[2] += trapped;
        w.v[3] += above;
        break;
      }
    }
  }
  return w;
}

enum class DeltaMode { Keep, Zero };

enum class RuleFamily : int {
  BlackR2 = 0,
  BlackR3,
  DotSlide,
  ColoredSlide,
  MixedDotSlide,
  ColoredR2,
  ColoredR3,
  NailDotSlide,
  NailSwap,
  DoubleNail,
  NailLoopBlack,
  NailLoopMixed,
};

inline const char* family_name(RuleFamily f) {
  switch (f) {
    case RuleFamily::BlackR2: return "black_r2";
    case RuleFamily::BlackR3: return "black_r3";
    case RuleFamily::DotSlide: return "dot_slide";
    case RuleFamily::ColoredSlide: return "colored_slide";
    case RuleFamily::MixedDotSlide: return "mixed_dot_slide";
    case RuleFamily::ColoredR2: return "colored_r2";
    case RuleFamily::ColoredR3: return "colored_r3";
    case RuleFamily::NailDotSlide: return "nail_dot_slide";
    case RuleFamily::NailSwap: return "nail_swap";
    case RuleFamily::DoubleNail: return "double_nail";
    case RuleFamily::NailLoopBlack: return "nail_loop_black";
    case RuleFamily::NailLoopMixed: return "nail_loop_mixed";
  }
  return "?";
}

struct Redex {
  RuleFamily family;
  std::vector<int> sites;  // matched heights, ascending
  int variant = 0;         // family-specific detail (direction, loop width)

  int top_height() const { return sites.back(); }
  std::array<int, 3> scan_key(const Monomial& m) const {
    int lo = m.stack()[sites.front()].pos;
    for (int s : sites) lo = std::min(lo, m.stack()[s].pos);
    return {top_height(), lo, static_cast<int>(family)};
  }
};

struct RewriteOptions {
  DeltaMode mode = DeltaMode::Keep;
  bool loop_rules = true;
  bool reversed_scan = false;
  long step_budget = 4'000'000;
};

namespace detail {

// Incremental site construction against a running sequence; kinds of
// crossings are inferred from the strand colors.
struct StackBuilder {
  StrandSeq seq;
  std::vector<GeneratorSite> sites;

  explicit StackBuilder(StrandSeq s) : seq(std::move(s)) {}
  void cross(int p) {
    bool black = seq[p] == 0 && seq[p + 1] == 0;
    sites.push_back(black ? black_site(p) : mixed_site(p));
    std::swap(seq[p], seq[p + 1]);
  }
  void dots(int p, int count) {
    for (int i = 0; i < count; ++i) sites.push_back(dot_site(p));
  }
  void nail() { sites.push_back(nail_site()); }
};

inline int colored_weight_index(const StrandSeq& seq, int p) {
  return seq[p] != 0 ? seq[p] : seq[p + 1];
}

}  // namespace detail

// All redexes of the oriented rule set in `m`, which must be in canonical
// form.
inline std::vector<Redex> find_redexes(const Monomial& m, bool loop_rules = true) {
  const auto& stack = m.stack();
  int n = static_cast<int>(stack.size());
  if (n == 0) return {};
  detail::Geometry g(m);
  std::vector<Redex> out;

  auto is_cross = [&](int h) {
    return stack[h].kind == SiteKind::BlackCrossing || stack[h].kind == SiteKind::MixedCrossing;
  };

  // Pair and triple patterns.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      // Double black crossing.
      if (stack[i].kind == SiteKind::BlackCrossing && stack[j].kind == SiteKind::BlackCrossing &&
          stack[i].pos == stack[j].pos && g.convex({i, j}))
        out.push_back({RuleFamily::BlackR2, {i, j}, 0});
      // Double mixed crossing around one colored strand.
      if (stack[i].kind == SiteKind::MixedCrossing && stack[j].kind == SiteKind::MixedCrossing &&
          stack[i].pos == stack[j].pos && g.convex({i, j}))
        out.push_back({RuleFamily::ColoredR2, {i, j}, 0});
      // Dot below a black crossing, on either strand.
      if (stack[i].kind == SiteKind::Dot && stack[j].kind == SiteKind::BlackCrossing &&
          (stack[i].pos == stack[j].pos || stack[i].pos == stack[j].pos + 1) &&
          g.convex({i, j}))
        out.push_back({RuleFamily::DotSlide, {i, j}, stack[i].pos == stack[j].pos ? 0 : 1});
      // Dot below a mixed crossing, on the black strand.
      if (stack[i].kind == SiteKind::Dot && stack[j].kind == SiteKind::MixedCrossing &&
          (stack[i].pos == stack[j].pos || stack[i].pos == stack[j].pos + 1) &&
          g.level[j][stack[i].pos] == 0 && g.convex({i, j}))
        out.push_back({RuleFamily::MixedDotSlide, {i, j}, 0});
      // Dot below a nail on the nailed strand.
      if (stack[i].kind == SiteKind::Dot && stack[j].kind == SiteKind::Nail &&
          stack[i].pos == 1 && g.convex({i, j}))
        out.push_back({RuleFamily::NailDotSlide, {i, j}, 0});
      // Two adjacent nails.
      if (stack[i].kind == SiteKind::Nail && stack[j].kind == SiteKind::Nail && g.convex({i, j}))
        out.push_back({RuleFamily::DoubleNail, {i, j}, 0});
    }
  }

  for (int i = 0; i < n; ++i) {
    if (!is_cross(i)) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!is_cross(j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!is_cross(k)) continue;
        int p = stack[j].pos;
        // Braid move pushed left: crossings at (p+1, p, p+1).
        if (stack[i].pos == p + 1 && stack[k].pos == p + 1) {
          if (stack[i].kind == SiteKind::BlackCrossing &&
              stack[j].kind == SiteKind::BlackCrossing &&
              stack[k].kind == SiteKind::BlackCrossing && g.convex({i, j, k})) {
            out.push_back({RuleFamily::BlackR3, {i, j, k}, 0});
          }
          // Colored strand dipping left around a black crossing: mixed,
          // black, mixed with the colored strand in the middle below.
          if (stack[i].kind == SiteKind::MixedCrossing &&
              stack[j].kind == SiteKind::BlackCrossing &&
              stack[k].kind == SiteKind::MixedCrossing && g.level[i][p + 1] != 0 &&
              g.convex({i, j, k})) {
            out.push_back({RuleFamily::ColoredR3, {i, j, k}, 0});
          }
          // Colored strand transiting leftward behind a late black crossing.
          if (stack[i].kind == SiteKind::MixedCrossing &&
              stack[j].kind == SiteKind::MixedCrossing &&
              stack[k].kind == SiteKind::BlackCrossing && g.level[i][p + 2] != 0 &&
              g.convex({i, j, k})) {
            out.push_back({RuleFamily::ColoredSlide, {i, j, k}, 0});
          }
        }
        // Colored strand transiting rightward above an early black crossing:
        // crossings at (p+1), (p), (p+1) with the black pair crossing first.
        if (stack[i].pos == p + 1 && stack[k].pos == p + 1 &&
            stack[i].kind == SiteKind::BlackCrossing &&
            stack[j].kind == SiteKind::MixedCrossing &&
            stack[k].kind == SiteKind::MixedCrossing && g.level[i][p] != 0 &&
            g.convex({i, j, k})) {
          out.push_back({RuleFamily::ColoredSlide, {i, j, k}, 1});
        }
      }
    }
  }

  // Nail anticommutation: nail, crossing at 1, nail, crossing at 1.
  for (int i = 0; i < n; ++i) {
    if (stack[i].kind != SiteKind::Nail) continue;
    for (int j = i + 1; j < n; ++j) {
      if (!(stack[j].kind == SiteKind::BlackCrossing && stack[j].pos == 1)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (stack[k].kind != SiteKind::Nail) continue;
        for (int l = k + 1; l < n; ++l) {
          if (!(stack[l].kind == SiteKind::BlackCrossing && stack[l].pos == 1)) continue;
          if (g.convex({i, j, k, l})) out.push_back({RuleFamily::NailSwap, {i, j, k, l}, 0});
        }
      }
    }
  }

  // Indexed nail-loop families: a crossing trapped below a full nail loop.
  if (loop_rules) {
    for (int hN = 0; hN < n; ++hN) {
      if (stack[hN].kind != SiteKind::Nail) continue;
      int t = g.ids[hN][1];
      // Descent chain below the nail: crossings on t at positions 1, 2, ...
      std::vector<int> desc;  // desc[j] sits at positions (j+1, j+2)
      {
        int want = 1;
        for (int h = hN - 1; h >= 0; --h) {
          int p = g.strand_pos(h, t);
          const GeneratorSite& s = stack[h];
          if (s.kind == SiteKind::Nail && p == 1) break;
          if (p < s.support_lo() || p > s.support_hi()) continue;
          if (!(is_cross(h) && s.pos == want && p == want + 1)) break;
          desc.push_back(h);
          ++want;
        }
      }
      // Ascent chain above the nail.
      std::vector<int> asc;
      {
        int want = 1;
        for (int h = hN + 1; h < n; ++h) {
          int p = g.strand_pos(h, t);
          const GeneratorSite& s = stack[h];
          if (s.kind == SiteKind::Nail && p == 1) break;
          if (p < s.support_lo() || p > s.support_hi()) continue;
          if (!(is_cross(h) && s.pos == want && p == want)) break;
          asc.push_back(h);
          ++want;
        }
      }
      int kmax = static_cast<int>(std::min(desc.size(), asc.size()));
      for (int k = 2; k <= kmax; ++k) {
        // Candidate trapped crossings at positions (k-1, k) below the kept
        // descent.
        for (int hs = 0; hs < desc[k - 1]; ++hs) {
          if (!is_cross(hs) || stack[hs].pos != k - 1) continue;
          std::vector<int> sites{hs};
          for (int j = k - 1; j >= 0; --j) sites.push_back(desc[j]);
          std::sort(sites.begin() + 1, sites.end());
          sites.push_back(hN);
          for (int j = 0; j < k; ++j) sites.push_back(asc[j]);
          std::sort(sites.begin(), sites.end());
          if (!g.convex(sites)) continue;
          if (stack[hs].kind == SiteKind::BlackCrossing)
            out.push_back({RuleFamily::NailLoopBlack, sites, k});
          else
            out.push_back({RuleFamily::NailLoopMixed, sites, k});
        }
      }
    }
  }
  return out;
}

namespace detail {

// Splice `replacement` stacks in place of the convex site set `sites`.
// External sites reachable from the redex go above, all others below.
inline std::vector<std::pair<DeltaPoly, Monomial>> splice(
    const Monomial& m, const Geometry& g, const std::vector<int>& sites,
    const std::vector<std::pair<DeltaPoly, std::vector<GeneratorSite>>>& replacement) {
  int n = static_cast<int>(m.stack().size());
  std::vector<char> in(n, 0);
  for (int s : sites) in[s] = 1;
  std::vector<int> before, after;
  for (int x = 0; x < n; ++x) {
    if (in[x]) continue;
    bool above = false;
    for (int s : sites)
      if (s < x && g.reach[s][x]) { above = true; break; }
    (above ? after : before).push_back(x);
  }
  std::vector<std::pair<DeltaPoly, Monomial>> out;
  for (const auto& [coeff, mid] : replacement) {
    std::vector<GeneratorSite> stack;
    stack.reserve(before.size() + mid.size() + after.size());
    for (int x : before) stack.push_back(m.stack()[x]);
    stack.insert(stack.end(), mid.begin(), mid.end());
    for (int x : after) stack.push_back(m.stack()[x]);
    out.emplace_back(coeff, Monomial(m.mu(), m.bottom(), std::move(stack)));
  }
  return out;
}

// Sequence just below the spliced block: the bottom advanced through the
// sites placed before it.
inline StrandSeq seq_below_block(const Monomial& m, const Geometry& g,
                                 const std::vector<int>& sites) {
  int n = static_cast<int>(m.stack().size());
  std::vector<char> in(n, 0);
  for (int s : sites) in[s] = 1;
  StrandSeq seq = m.bottom_seq();
  for (int x = 0; x < n; ++x) {
    if (in[x]) continue;
    bool above = false;
    for (int s : sites)
      if (s < x && g.reach[s][x]) { above = true; break; }
    if (!above) apply_site(seq, m.stack()[x], x);
  }
  return seq;
}

}  // namespace detail

// Apply one redex; the result is canonicalized but not further reduced.
inline Element apply_redex(const Monomial& m, const Redex& r, const RewriteOptions& opt) {
  detail::Geometry g(m);
  const auto& stack = m.stack();
  StrandSeq base = detail::seq_below_block(m, g, r.sites);
  std::vector<std::pair<DeltaPoly, std::vector<GeneratorSite>>> rhs;

  auto weight_of_colored = [&](int c) { return m.mu()[c - 1]; };

  switch (r.family) {
    case RuleFamily::BlackR2:
    case RuleFamily::DoubleNail:
      break;  // zero
    case RuleFamily::BlackR3: {
      int p = stack[r.sites[1]].pos;
      detail::StackBuilder b(base);
      b.cross(p);
      b.cross(p + 1);
      b.cross(p);
      rhs.emplace_back(DeltaPoly(1), b.sites);
      break;
    }
    case RuleFamily::DotSlide: {
      int p = stack[r.sites[1]].pos;
      detail::StackBuilder b(base);
      b.cross(p);
      b.dots(r.variant == 0 ? p + 1 : p, 1);
      rhs.emplace_back(DeltaPoly(1), b.sites);
      rhs.emplace_back(DeltaPoly(r.variant == 0 ? 1 : -1), std::vector<GeneratorSite>{});
      break;
    }
    case RuleFamily::MixedDotSlide: {
      int p = stack[r.sites[1]].pos;
      int pd = stack[r.sites[0]].pos;
      detail::StackBuilder b(base);
      b.cross(p);
      b.dots(p + (p + 1) - pd, 1);
      rhs.emplace_back(DeltaPoly(1), b.sites);
      break;
    }
    case RuleFamily::ColoredR2: {
      int p = stack[r.sites[0]].pos;
      int c = detail::colored_weight_index(g.level[r.sites[0]], p);
      Weight w = weight_of_colored(c);
      int pb = g.level[r.sites[0]][p] == 0 ? p : p + 1;
      if (!w.generic) {
        detail::StackBuilder b(base);
        b.dots(pb, w.value);
        rhs.emplace_back(DeltaPoly(1), b.sites);
      } else if (opt.mode == DeltaMode::Keep) {
        rhs.emplace_back(DeltaPoly::delta(), std::vector<GeneratorSite>{});
      }
      break;
    }
    case RuleFamily::ColoredR3: {
      int p = stack[r.sites[1]].pos;
      int c = g.level[r.sites[0]][p + 1];
      Weight w = weight_of_colored(c);
      {
        detail::StackBuilder b(base);
        b.cross(p);
        b.cross(p + 1);
        b.cross(p);
        rhs.emplace_back(DeltaPoly(1), b.sites);
      }
      if (!w.generic) {
        for (int u = 0; u + 1 <= w.value; ++u) {
          int v = w.value - 1 - u;
          detail::StackBuilder b(base);
          b.dots(p, u);
          b.dots(p + 2, v);
          rhs.emplace_back(DeltaPoly(-1), b.sites);
        }
      }
      break;
    }
    case RuleFamily::ColoredSlide: {
      int p = stack[r.sites[1]].pos;
      detail::StackBuilder b(base);
      if (r.variant == 0) {
        // Colored entering from the right; black crossing moves below-left.
        b.cross(p);
        b.cross(p + 1);
        b.cross(p);
      } else {
        // Colored entering from the left; black crossing moves above-left.
        b.cross(p);
        b.cross(p + 1);
        b.cross(p);
      }
      rhs.emplace_back(DeltaPoly(1), b.sites);
      break;
    }
    case RuleFamily::NailDotSlide: {
      detail::StackBuilder b(base);
      b.nail();
      b.dots(1, 1);
      rhs.emplace_back(DeltaPoly(1), b.sites);
      break;
    }
    case RuleFamily::NailSwap: {
      detail::StackBuilder b(base);
      b.cross(1);
      b.nail();
      b.cross(1);
      b.nail();
      rhs.emplace_back(DeltaPoly(-1), b.sites);
      break;
    }
    case RuleFamily::NailLoopBlack: {
      int k = r.variant;
      detail::StackBuilder b(base);
      for (int j = k; j >= 1; --j) b.cross(j);
      b.nail();
      for (int j = 1; j <= k; ++j) b.cross(j);
      b.cross(k - 1);
      rhs.emplace_back(DeltaPoly(1), b.sites);
      break;
    }
    case RuleFamily::NailLoopMixed: {
      int k = r.variant;
      int hs = r.sites.front();
      bool black_left = g.level[hs][k - 1] == 0;
      int c = detail::colored_weight_index(g.level[hs], k - 1);
      Weight w = weight_of_colored(c);
      {
        detail::StackBuilder b(base);
        for (int j = k; j >= 1; --j) b.cross(j);
        b.nail();
        for (int j = 1; j <= k; ++j) b.cross(j);
        b.cross(k - 1);
        rhs.emplace_back(DeltaPoly(1), b.sites);
      }
      if (!w.generic) {
        for (int u = 0; u + 1 <= w.value; ++u) {
          int v = w.value - 1 - u;
          if (black_left) {
            // The trapped black strand takes over the nail.
            detail::StackBuilder b(base);
            b.dots(k - 1, u);
            b.dots(k + 1, v);
            for (int j = k - 2; j >= 1; --j) b.cross(j);
            b.nail();
            for (int j = 1; j <= k - 2; ++j) b.cross(j);
            b.cross(k - 1);
            b.cross(k);
            rhs.emplace_back(DeltaPoly(1), b.sites);
          } else {
            // The loop strand exits left of the colored strand.
            detail::StackBuilder b(base);
            for (int j = k; j >= 1; --j) b.cross(j);
            b.nail();
            for (int j = 1; j <= k - 2; ++j) b.cross(j);
            b.dots(k - 1, u);
            b.dots(k + 1, v);
            rhs.emplace_back(DeltaPoly(-1), b.sites);
          }
        }
      }
      break;
    }
  }

  Element out;
  for (auto& [coeff, mono] : detail::splice(m, g, r.sites, rhs))
    out.add(mono, coeff);
  return out;
}

// Deterministic single-step reduction; empty optional when irreducible.
inline std::optional<Element> reduce_once(const Monomial& m, const RewriteOptions& opt,
                                          Redex* which = nullptr) {
  auto redexes = find_redexes(m, opt.loop_rules);
  if (redexes.empty()) return std::nullopt;
  const Redex* best = &redexes[0];
  auto best_key = best->scan_key(m);
  for (const auto& r : redexes) {
    auto key = r.scan_key(m);
    bool better = opt.reversed_scan ? key > best_key : key < best_key;
    if (better) { best = &r; best_key = key; }
  }
  if (which) *which = *best;
  return apply_redex(m, *best, opt);
}

// Descent law for one executed step.  Outside the nail rules every output
// monomial strictly decreases the triple.  Nail reordering preserves it, and
// a nail-loop step keeps (crossings, dots) fixed on its plain summand while
// the dotted summands strictly decrease; the trapped-crossing count may move
// either way when an outer nail overhangs the loop.
inline bool step_descends(const Monomial& from, const Monomial& to, RuleFamily family) {
  TerminationWeight w0 = termination_weight(from), w1 = termination_weight(to);
  switch (family) {
    case RuleFamily::NailSwap:
      return w1.triple() == w0.triple();
    case RuleFamily::NailLoopBlack:
    case RuleFamily::NailLoopMixed:
      return w1.v[0] < w0.v[0] || (w1.v[0] == w0.v[0] && w1.v[1] == w0.v[1]);
    default:
      return w1.triple() < w0.triple();
  }
}

inline bool is_irreducible(const Monomial& m, bool loop_rules = true) {
  return find_redexes(m, loop_rules).empty();
}

// Full reduction with memoization keyed on canonical encoding and mode.
class Rewriter {
 public:
  explicit Rewriter(RewriteOptions opt = {}) : opt_(opt) {}

  const RewriteOptions& options() const { return opt_; }
  long steps_taken() const { return steps_; }

  Element normal_form(const Element& e) {
    Element out;
    for (auto& [m, c] : e.terms()) out += c * normal_form(m);
    return out;
  }

  Element normal_form(const Monomial& m) {
    std::string key = m.encode();
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Element result;
    auto step = reduce_once(m, opt_);
    if (!step) {
      result = Element(m);
    } else {
      if (++steps_ > opt_.step_budget) throw std::runtime_error("step budget exceeded");
      for (auto& [mono, c] : step->terms()) result += c * normal_form(mono);
    }
    cache_.emplace(std::move(key), result);
    return result;
  }

 private:
  RewriteOptions opt_;
  long steps_ = 0;
  std::map<std::string, Element> cache_;
};

inline Element normal_form(const Element& e, const RewriteOptions& opt = {}) {
  Rewriter rw(opt);
  return rw.normal_form(e);
}

inline Element normal_form(const Monomial& m, const RewriteOptions& opt = {}) {
  Rewriter rw(opt);
  return rw.normal_form(m);
}

}  // namespace dgklrw
