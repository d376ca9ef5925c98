#ifndef MAGMAKIT_MAGMA_HPP
#define MAGMAKIT_MAGMA_HPP

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace magmakit {

// Structured validation failure: a short code such as "UnitLawViolation"
// plus the first witness tuple in the fixed scan order.
struct validation_error : std::runtime_error {
  std::string code;
  std::vector<int> witness;

  validation_error(std::string c, std::vector<int> w, const std::string& msg)
      : std::runtime_error(msg), code(std::move(c)), witness(std::move(w)) {}
};

[[noreturn]] inline void fail(std::string code, std::vector<int> witness,
                              const std::string& msg) {
  throw validation_error(std::move(code), std::move(witness), msg);
}

// Finite unitary magma on carrier {0,...,order-1}, unit pinned at index 0.
// The table is stored flat, row-major: add(i,j) = table[i*order + j].
struct Magma {
  int order = 1;
  std::vector<int> table{0};
  std::string name;

  int add(int i, int j) const { return table[static_cast<size_t>(i) * order + j]; }

  friend bool operator==(const Magma& lhs, const Magma& rhs) {
    return lhs.order == rhs.order && lhs.table == rhs.table;
  }
};

// Checks the unit law 0+x = x = x+0 and entry ranges; everything else about
// the table is unconstrained.
inline Magma validate_magma(int order, const std::vector<std::vector<int>>& rows,
                            std::string name = "") {
  if (order < 1) fail("BadOrder", {order}, "magma order must be >= 1");
  if (static_cast<int>(rows.size()) != order)
    fail("BadShape", {static_cast<int>(rows.size())}, "table must have `order` rows");
  Magma m;
  m.order = order;
  m.name = std::move(name);
  m.table.assign(static_cast<size_t>(order) * order, 0);
  for (int i = 0; i < order; ++i) {
    if (static_cast<int>(rows[i].size()) != order)
      fail("BadShape", {i}, "table row has wrong length");
    for (int j = 0; j < order; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= order)
        fail("EntryOutOfRange", {i, j},
             "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
      m.table[static_cast<size_t>(i) * order + j] = v;
    }
  }
  for (int j = 0; j < order; ++j)
    if (m.add(0, j) != j)
      fail("UnitLawViolation", {0, j}, "0+" + std::to_string(j) + " != " + std::to_string(j));
  for (int i = 0; i < order; ++i)
    if (m.add(i, 0) != i)
      fail("UnitLawViolation", {i, 0}, std::to_string(i) + "+0 != " + std::to_string(i));
  return m;
}

inline Magma validate_magma_flat(int order, std::vector<int> flat, std::string name = "") {
  std::vector<std::vector<int>> rows(order);
  for (int i = 0; i < order; ++i)
    rows[i].assign(flat.begin() + static_cast<long>(i) * order,
                   flat.begin() + static_cast<long>(i + 1) * order);
  return validate_magma(order, rows, std::move(name));
}

// Zero-preserving map between magma carriers; addition is not assumed.
struct ZeroMap {
  Magma dom;
  Magma cod;
  std::vector<int> values;

  int operator()(int v) const { return values[static_cast<size_t>(v)]; }

  friend bool operator==(const ZeroMap& lhs, const ZeroMap& rhs) {
    return lhs.dom == rhs.dom && lhs.cod == rhs.cod && lhs.values == rhs.values;
  }
};

inline ZeroMap validate_zero_map(Magma dom, Magma cod, std::vector<int> values) {
  if (static_cast<int>(values.size()) != dom.order)
    fail("BadShape", {static_cast<int>(values.size())}, "map values length != dom order");
  for (int v : values)
    if (v < 0 || v >= cod.order) fail("EntryOutOfRange", {v}, "map value out of range");
  if (values[0] != 0) fail("ZeroNotPreserved", {values[0]}, "map does not send 0 to 0");
  return ZeroMap{std::move(dom), std::move(cod), std::move(values)};
}

inline bool is_hom(const ZeroMap& m) {
  for (int a = 0; a < m.dom.order; ++a)
    for (int b = 0; b < m.dom.order; ++b)
      if (m(m.dom.add(a, b)) != m.cod.add(m(a), m(b))) return false;
  return true;
}

// A ZeroMap that additionally preserves addition. Constructed only through
// make_hom (or trusted factories below), so holders can rely on additivity.
struct Hom : ZeroMap {};

inline Hom make_hom(ZeroMap m) {
  if (!is_hom(m)) {
    for (int a = 0; a < m.dom.order; ++a)
      for (int b = 0; b < m.dom.order; ++b)
        if (m(m.dom.add(a, b)) != m.cod.add(m(a), m(b)))
          fail("HomViolation", {a, b}, "map is not additive at (" + std::to_string(a) +
                                           "," + std::to_string(b) + ")");
  }
  return Hom{std::move(m)};
}

inline Hom make_hom(Magma dom, Magma cod, std::vector<int> values) {
  return make_hom(validate_zero_map(std::move(dom), std::move(cod), std::move(values)));
}

inline Hom identity_hom(const Magma& m) {
  std::vector<int> v(static_cast<size_t>(m.order));
  std::iota(v.begin(), v.end(), 0);
  return Hom{ZeroMap{m, m, std::move(v)}};
}

inline Hom zero_hom(const Magma& dom, const Magma& cod) {
  return Hom{ZeroMap{dom, cod, std::vector<int>(static_cast<size_t>(dom.order), 0)}};
}

inline ZeroMap compose(const ZeroMap& g, const ZeroMap& f) {
  std::vector<int> v(f.values.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = g.values[static_cast<size_t>(f.values[i])];
  return ZeroMap{f.dom, g.cod, std::move(v)};
}

inline Hom compose(const Hom& g, const Hom& f) {
  return Hom{compose(static_cast<const ZeroMap&>(g), static_cast<const ZeroMap&>(f))};
}

inline std::optional<std::array<int, 3>> associativity_witness(const Magma& m) {
  for (int a = 0; a < m.order; ++a)
    for (int b = 0; b < m.order; ++b)
      for (int c = 0; c < m.order; ++c)
        if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

inline bool is_associative(const Magma& m) { return !associativity_witness(m); }

inline bool is_commutative(const Magma& m) {
  for (int a = 0; a < m.order; ++a)
    for (int b = 0; b < m.order; ++b)
      if (m.add(a, b) != m.add(b, a)) return false;
  return true;
}

// Induced magma on a closed subset, re-indexed order-preservingly (0 first),
// together with the inclusion hom and the ambient index of each new element.
struct Submagma {
  Magma sub;
  Hom inclusion;
  std::vector<int> ambient_index;
};

inline Submagma submagma(const Magma& m, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty() || subset[0] != 0) fail("ZeroMissing", {}, "submagma must contain 0");
  std::vector<int> pos(static_cast<size_t>(m.order), -1);
  for (size_t k = 0; k < subset.size(); ++k) pos[static_cast<size_t>(subset[k])] = static_cast<int>(k);
  int n = static_cast<int>(subset.size());
  Magma sub;
  sub.order = n;
  sub.table.assign(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int s = m.add(subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)]);
      if (pos[static_cast<size_t>(s)] < 0)
        fail("NotClosed", {subset[static_cast<size_t>(i)], subset[static_cast<size_t>(j)]},
             "subset not closed: " + std::to_string(subset[static_cast<size_t>(i)]) + "+" +
                 std::to_string(subset[static_cast<size_t>(j)]) + " = " + std::to_string(s));
      sub.table[static_cast<size_t>(i) * n + j] = pos[static_cast<size_t>(s)];
    }
  Hom inc = make_hom(sub, m, subset);
  return Submagma{std::move(sub), std::move(inc), std::move(subset)};
}

// Row-major pairing used for every pair carrier (x,b): index = x*|B| + b.
inline int pair_index(int x, int b, int order_b) { return x * order_b + b; }
inline int pair_first(int idx, int order_b) { return idx / order_b; }
inline int pair_second(int idx, int order_b) { return idx % order_b; }

// Componentwise product X x B on the row-major pair carrier.
inline Magma direct_product(const Magma& x, const Magma& b) {
  Magma p;
  p.order = x.order * b.order;
  p.table.assign(static_cast<size_t>(p.order) * p.order, 0);
  for (int i = 0; i < p.order; ++i)
    for (int j = 0; j < p.order; ++j) {
      int xi = pair_first(i, b.order), bi = pair_second(i, b.order);
      int xj = pair_first(j, b.order), bj = pair_second(j, b.order);
      p.table[static_cast<size_t>(i) * p.order + j] =
          pair_index(x.add(xi, xj), b.add(bi, bj), b.order);
    }
  return p;
}

namespace detail {
// Backtracking over 0-fixing bijections, lexicographic in image values.
inline bool iso_search(const Magma& m, const Magma& n, std::vector<int>& perm,
                       std::vector<bool>& used, int next) {
  if (next == m.order) {
    for (int a = 0; a < m.order; ++a)
      for (int b = 0; b < m.order; ++b)
        if (perm[static_cast<size_t>(m.add(a, b))] !=
            n.add(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]))
          return false;
    return true;
  }
  for (int v = 1; v < n.order; ++v) {
    if (used[static_cast<size_t>(v)]) continue;
    perm[static_cast<size_t>(next)] = v;
    // prune on pairs fully assigned so far
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int s = m.add(a, b);
        if (s <= next &&
            perm[static_cast<size_t>(s)] !=
                n.add(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)]))
          ok = false;
      }
    if (ok) {
      used[static_cast<size_t>(v)] = true;
      if (iso_search(m, n, perm, used, next + 1)) return true;
      used[static_cast<size_t>(v)] = false;
    }
  }
  return false;
}
}  // namespace detail

// First (lexicographic) 0-fixing isomorphism m -> n, if any. Supported
// envelope is order <= 8; plain backtracking, no canonical forms.
inline std::optional<Hom> are_isomorphic(const Magma& m, const Magma& n) {
  if (m.order != n.order) return std::nullopt;
  std::vector<int> perm(static_cast<size_t>(m.order), 0);
  std::vector<bool> used(static_cast<size_t>(m.order), false);
  used[0] = true;
  if (!detail::iso_search(m, n, perm, used, 1)) return std::nullopt;
  return Hom{ZeroMap{m, n, std::move(perm)}};
}

}  // namespace magmakit

#endif  // MAGMAKIT_MAGMA_HPP
