#ifndef LPSPACE_TREEINDEX_HPP
#define LPSPACE_TREEINDEX_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lpspace/core.hpp"

namespace lpspace {

// ---------------------------------------------------------------------------
// Dyadic strings and the prefix order on N
// ---------------------------------------------------------------------------

struct DyadicString {
  std::vector<int> bits;

  bool empty() const { return bits.empty(); }
  std::size_t length() const { return bits.size(); }

  static DyadicString from_string(const std::string& s) {
    DyadicString d;
    for (char ch : s) {
      if (ch != '0' && ch != '1') throw DomainError("DyadicString: bits must be 0/1");
      d.bits.push_back(ch - '0');
    }
    return d;
  }

  std::string to_string() const {
    std::string s;
    for (int b : bits) s.push_back(char('0' + b));
    return s;
  }

  /// Index under the bijection with N: the string is the binary expansion,
  /// leading bit 1 required.
  std::uint64_t index() const {
    if (bits.empty() || bits[0] != 1) throw DomainError("DyadicString: not a D' element");
    std::uint64_t n = 0;
    for (int b : bits) n = 2 * n + std::uint64_t(b);
    return n;
  }

  static DyadicString from_index(std::uint64_t n) {
    if (n < 1) throw DomainError("DyadicString: index must be >= 1");
    DyadicString d;
    while (n > 0) {
      d.bits.push_back(int(n & 1));
      n >>= 1;
    }
    std::reverse(d.bits.begin(), d.bits.end());
    return d;
  }

  bool operator==(const DyadicString& o) const { return bits == o.bits; }
  bool operator<(const DyadicString& o) const { return bits < o.bits; }
};

inline DyadicString concat(const DyadicString& t, const DyadicString& s) {
  DyadicString out = t;
  out.bits.insert(out.bits.end(), s.bits.begin(), s.bits.end());
  return out;
}

/// Strict prefix on dyadic strings.
inline bool strict_prefix(const DyadicString& a, const DyadicString& b) {
  if (a.length() >= b.length()) return false;
  return std::equal(a.bits.begin(), a.bits.end(), b.bits.begin());
}

/// Level: lambda(n) = k where n = 2^k + r, 0 <= r < 2^k.
inline std::uint64_t lambda_of(std::uint64_t n) {
  if (n < 1) throw DomainError("lambda_of: requires n >= 1");
  std::uint64_t k = 0;
  while ((std::uint64_t(1) << (k + 1)) <= n) ++k;
  return k;
}

/// Strict prefix order on N via binary expansions: m's expansion is a
/// strict prefix of n's.
inline bool dotprec(std::uint64_t m, std::uint64_t n) {
  if (m < 1 || n < 1) throw DomainError("dotprec: requires m, n >= 1");
  if (m >= n) return false;
  const std::uint64_t d = lambda_of(n) - lambda_of(m);
  if (d == 0) return false;
  return (n >> d) == m;
}

inline bool dotpreceq(std::uint64_t m, std::uint64_t n) { return m == n || dotprec(m, n); }

/// B_n: all m with m dotpreceq n, i.e. the binary prefixes of n.
inline std::set<std::uint64_t> branch(std::uint64_t n) {
  if (n < 1) throw DomainError("branch: requires n >= 1");
  std::set<std::uint64_t> out;
  for (std::uint64_t m = n; m >= 1; m >>= 1) out.insert(m);
  return out;
}

/// T_n = {1, ..., n}.
inline std::set<std::uint64_t> tree_upto(std::uint64_t n) {
  if (n < 1) throw DomainError("tree_upto: requires n >= 1");
  std::set<std::uint64_t> out;
  for (std::uint64_t m = 1; m <= n; ++m) out.insert(m);
  return out;
}

/// Lambda(n) = {m : lambda(m) = lambda(n)} = [2^k, 2^{k+1}).
inline std::set<std::uint64_t> level_set(std::uint64_t n) {
  const std::uint64_t k = lambda_of(n);
  std::set<std::uint64_t> out;
  for (std::uint64_t m = (std::uint64_t(1) << k); m < (std::uint64_t(1) << (k + 1)); ++m)
    out.insert(m);
  return out;
}

/// L_n: union of branches B_{n'} over level mates n' <= n.
inline std::set<std::uint64_t> left_set(std::uint64_t n) {
  const std::uint64_t k = lambda_of(n);
  std::set<std::uint64_t> out;
  for (std::uint64_t m = (std::uint64_t(1) << k); m <= n; ++m) {
    std::set<std::uint64_t> b = branch(m);
    out.insert(b.begin(), b.end());
  }
  return out;
}

/// R_n: union of branches B_{n'} over level mates n' >= n.
inline std::set<std::uint64_t> right_set(std::uint64_t n) {
  const std::uint64_t k = lambda_of(n);
  std::set<std::uint64_t> out;
  for (std::uint64_t m = n; m < (std::uint64_t(1) << (k + 1)); ++m) {
    std::set<std::uint64_t> b = branch(m);
    out.insert(b.begin(), b.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Finite relations and the ordinal index h
// ---------------------------------------------------------------------------

struct FiniteRelation {
  std::set<std::uint64_t> vertices;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // (x, y) means x <| y

  void validate() const {
    for (const auto& [x, y] : edges)
      if (!vertices.count(x) || !vertices.count(y))
        throw DomainError("FiniteRelation: edge endpoint outside vertex set");
  }
};

struct HIndexResult {
  std::size_t h;
  std::set<std::uint64_t> stable;
  std::vector<std::set<std::uint64_t>> history;  // H_0, H_1, ..., fixed point

  bool well_founded() const { return stable.empty(); }
};

/// Iterate H_{a+1} = {x in H_a : x <| y for some y in H_a} to the fixed
/// point; h is the least step with H_h = H_{h+1}, stable is that set.
inline HIndexResult h_index(const FiniteRelation& r) {
  r.validate();
  HIndexResult res;
  std::set<std::uint64_t> cur = r.vertices;
  res.history.push_back(cur);
  std::size_t step = 0;
  while (true) {
    std::set<std::uint64_t> next;
    for (std::uint64_t x : cur) {
      for (const auto& [a, b] : r.edges) {
        if (a == x && cur.count(b)) {
          next.insert(x);
          break;
        }
      }
    }
    if (next == cur) break;
    cur = std::move(next);
    res.history.push_back(cur);
    ++step;
  }
  res.h = step;
  res.stable = cur;
  return res;
}

struct RelationMapReport {
  bool preserves;           // x <| y implies f(x) <|' f(y)
  bool levels_nested;       // H_a(r) maps into H_a(r') at every computed stage
  std::size_t h_source;
  std::size_t h_target;
};

/// Monotonicity check: a relation-preserving map forces the H_a stages
/// to nest, so h(source) <= h(target) when the target is well-founded.
inline RelationMapReport relation_map_check(const FiniteRelation& r, const FiniteRelation& rp,
                                            const std::map<std::uint64_t, std::uint64_t>& f) {
  r.validate();
  rp.validate();
  for (std::uint64_t x : r.vertices)
    if (!f.count(x)) throw DomainError("relation_map_check: map not total on source vertices");
  RelationMapReport rep{true, true, 0, 0};
  for (const auto& [x, y] : r.edges)
    if (!rp.edges.count({f.at(x), f.at(y)})) rep.preserves = false;
  const HIndexResult hs = h_index(r);
  const HIndexResult ht = h_index(rp);
  rep.h_source = hs.h;
  rep.h_target = ht.h;
  if (rep.preserves) {
    for (std::size_t a = 0; a < hs.history.size(); ++a) {
      const std::set<std::uint64_t>& target =
          a < ht.history.size() ? ht.history[a] : ht.history.back();
      for (std::uint64_t x : hs.history[a])
        if (!target.count(f.at(x))) rep.levels_nested = false;
    }
  } else {
    rep.levels_nested = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// CFRE trees, the dyadic embedding, and T_alpha
// ---------------------------------------------------------------------------

struct CfreTree {
  std::set<std::uint64_t> nodes;
  std::map<std::uint64_t, std::uint64_t> parent;  // absent key = root
  // Present when the tree came from a truncated limit construction.
  std::size_t trunc_depth = 0;
  std::size_t trunc_width = 0;
  bool truncated = false;

  void validate() const {
    for (const auto& [c, p] : parent) {
      if (!nodes.count(c) || !nodes.count(p))
        throw DomainError("CfreTree: parent link outside node set");
    }
    for (std::uint64_t n : nodes) {
      std::set<std::uint64_t> seen;
      std::uint64_t cur = n;
      while (parent.count(cur)) {
        if (!seen.insert(cur).second) throw DomainError("CfreTree: parent links cyclic");
        cur = parent.at(cur);
      }
    }
  }

  std::vector<std::uint64_t> roots() const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t n : nodes)
      if (!parent.count(n)) out.push_back(n);
    return out;
  }

  std::vector<std::uint64_t> children(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for (const auto& [c, p] : parent)
      if (p == n) out.push_back(c);
    return out;
  }

  bool strict_ancestor(std::uint64_t a, std::uint64_t d) const {
    std::uint64_t cur = d;
    while (parent.count(cur)) {
      cur = parent.at(cur);
      if (cur == a) return true;
    }
    return false;
  }
};

/// Order embedding into dyadic strings: the i-th child (ascending id) of a
/// node coded c receives c . 0^{i} 1; roots hang off the virtual code "1".
inline std::map<std::uint64_t, DyadicString> embed_cfre(const CfreTree& t) {
  t.validate();
  std::map<std::uint64_t, DyadicString> code;
  struct Frame {
    std::uint64_t node;
    DyadicString base;
  };
  std::vector<Frame> stack;
  const DyadicString virtual_root = DyadicString::from_string("1");
  std::vector<std::uint64_t> roots = t.roots();
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < roots.size(); ++i) {
    DyadicString c = virtual_root;
    for (std::size_t z = 0; z < i; ++z) c.bits.push_back(0);
    c.bits.push_back(1);
    stack.push_back({roots[i], c});
  }
  while (!stack.empty()) {
    Frame fr = stack.back();
    stack.pop_back();
    code[fr.node] = fr.base;
    std::vector<std::uint64_t> kids = t.children(fr.node);
    std::sort(kids.begin(), kids.end());
    for (std::size_t i = 0; i < kids.size(); ++i) {
      DyadicString c = fr.base;
      for (std::size_t z = 0; z < i; ++z) c.bits.push_back(0);
      c.bits.push_back(1);
      stack.push_back({kids[i], c});
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// Ordinals below omega^omega in Cantor normal form
// ---------------------------------------------------------------------------

struct OrdinalCNF {
  // Terms omega^e * c with strictly decreasing exponents, positive coeffs.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> terms;

  void validate() const {
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (terms[i].second == 0) throw DomainError("OrdinalCNF: zero coefficient");
      if (i > 0 && terms[i - 1].first <= terms[i].first)
        throw DomainError("OrdinalCNF: exponents must strictly decrease");
    }
  }

  bool is_zero() const { return terms.empty(); }
  bool is_successor() const { return !terms.empty() && terms.back().first == 0; }
  bool is_limit() const { return !terms.empty() && terms.back().first > 0; }

  static OrdinalCNF finite(std::uint64_t n) {
    OrdinalCNF a;
    if (n > 0) a.terms.push_back({0, n});
    return a;
  }

  /// Predecessor of a successor ordinal.
  OrdinalCNF predecessor() const {
    if (!is_successor()) throw DomainError("OrdinalCNF: predecessor of non-successor");
    OrdinalCNF a = *this;
    if (a.terms.back().second == 1)
      a.terms.pop_back();
    else
      --a.terms.back().second;
    return a;
  }

  /// m-th element of the standard fundamental sequence of a limit ordinal
  /// (m >= 1): replace the tail term omega^e (peel one copy) by
  /// (previous terms) + omega^e*(c-1) + omega^{e-1} * m.
  OrdinalCNF fundamental(std::uint64_t m) const {
    if (!is_limit()) throw DomainError("OrdinalCNF: fundamental sequence of non-limit");
    if (m < 1) throw DomainError("OrdinalCNF: fundamental index must be >= 1");
    OrdinalCNF a = *this;
    auto [e, c] = a.terms.back();
    a.terms.pop_back();
    if (c > 1) a.terms.push_back({e, c - 1});
    a.terms.push_back({e - 1, m});
    return a;
  }

  std::string to_string() const {
    if (terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) s += " + ";
      const auto [e, c] = terms[i];
      if (e == 0) {
        s += std::to_string(c);
      } else {
        s += e == 1 ? "w" : "w^" + std::to_string(e);
        if (c > 1) s += "*" + std::to_string(c);
      }
    }
    return s;
  }
};

namespace detail {

inline std::uint64_t fresh_node(const CfreTree& t) {
  std::uint64_t id = 0;
  if (!t.nodes.empty()) id = *t.nodes.rbegin() + 1;
  return id;
}

inline void build_T_alpha_into(const OrdinalCNF& alpha, std::size_t depth, std::size_t width,
                               CfreTree& out) {
  alpha.validate();
  if (alpha.is_zero()) return;
  if (depth == 0) {
    out.truncated = true;
    return;
  }
  if (alpha.is_successor()) {
    // New root above the previous stage's forest.
    CfreTree sub;
    build_T_alpha_into(alpha.predecessor(), depth, width, sub);
    const std::uint64_t shift = detail::fresh_node(out);
    std::map<std::uint64_t, std::uint64_t> relab;
    for (std::uint64_t n : sub.nodes) relab[n] = shift + 1 + n;
    const std::uint64_t root = shift;
    out.nodes.insert(root);
    for (std::uint64_t n : sub.nodes) out.nodes.insert(relab[n]);
    for (const auto& [c, p] : sub.parent) out.parent[relab[c]] = relab[p];
    for (std::uint64_t r : sub.roots()) out.parent[relab[r]] = root;
    out.truncated = out.truncated || sub.truncated;
    return;
  }
  // Limit: disjoint union over the fundamental sequence, truncated.
  out.truncated = true;
  for (std::uint64_t m = 1; m <= width; ++m) {
    CfreTree sub;
    build_T_alpha_into(alpha.fundamental(m), depth - 1, width, sub);
    const std::uint64_t shift = detail::fresh_node(out);
    for (std::uint64_t n : sub.nodes) out.nodes.insert(shift + n);
    for (const auto& [c, p] : sub.parent) out.parent[shift + c] = shift + p;
  }
}

}  // namespace detail

/// Finite approximant of T_alpha: successors stack a new root, limit stages
/// take `width` summands of the fundamental sequence, recursion through
/// limit stages is capped at `depth`.
inline CfreTree build_T_alpha(const OrdinalCNF& alpha, std::size_t depth, std::size_t width) {
  if (depth == 0 || width == 0) throw DomainError("build_T_alpha: truncation must be positive");
  CfreTree out;
  out.trunc_depth = depth;
  out.trunc_width = width;
  detail::build_T_alpha_into(alpha, depth, width, out);
  out.validate();
  return out;
}

/// Height rank via the ordinal index of the child relation (x <| y iff y is
/// a child of x): equals the longest root-to-leaf chain length.
inline std::size_t tree_rank(const CfreTree& t) {
  t.validate();
  FiniteRelation r;
  r.vertices = t.nodes;
  for (const auto& [c, p] : t.parent) r.edges.insert({p, c});
  return h_index(r).h;
}

}  // namespace lpspace

#endif  // LPSPACE_TREEINDEX_HPP
