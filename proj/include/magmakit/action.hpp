#ifndef MAGMAKIT_ACTION_HPP
#define MAGMAKIT_ACTION_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>

#include "magmakit/magma.hpp"

namespace magmakit {

// Action of B on X: a table b x with 0x = x and b0 = 0. Note the asymmetry
// (the unit acts as the identity, every actor kills 0); it is deliberate and
// must not be "corrected" to 0x = 0.
struct Action {
  Magma actor;  // B
  Magma space;  // X
  std::vector<int> table;  // flat, act(b,x) = table[b*|X| + x]

  int act(int b, int x) const { return table[static_cast<size_t>(b) * space.order + x]; }

  friend bool operator==(const Action& lhs, const Action& rhs) {
    return lhs.actor == rhs.actor && lhs.space == rhs.space && lhs.table == rhs.table;
  }
};

inline Action validate_action(Magma b, Magma x, const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != b.order)
    fail("BadShape", {static_cast<int>(rows.size())}, "action table must have |B| rows");
  Action a;
  a.table.assign(static_cast<size_t>(b.order) * x.order, 0);
  for (int i = 0; i < b.order; ++i) {
    if (static_cast<int>(rows[i].size()) != x.order)
      fail("BadShape", {i}, "action row has wrong length");
    for (int j = 0; j < x.order; ++j) {
      int v = rows[i][j];
      if (v < 0 || v >= x.order) fail("EntryOutOfRange", {i, j}, "action entry out of range");
      a.table[static_cast<size_t>(i) * x.order + j] = v;
    }
  }
  for (int j = 0; j < x.order; ++j)
    if (a.table[static_cast<size_t>(j)] != j)
      fail("UnitActsNontrivially", {j}, "0*" + std::to_string(j) + " != " + std::to_string(j));
  for (int i = 0; i < b.order; ++i)
    if (a.table[static_cast<size_t>(i) * x.order] != 0)
      fail("ZeroNotFixed", {i}, std::to_string(i) + "*0 != 0");
  a.actor = std::move(b);
  a.space = std::move(x);
  return a;
}

inline Action validate_action_flat(Magma b, Magma x, const std::vector<int>& flat) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(b.order));
  for (int i = 0; i < b.order; ++i)
    rows[static_cast<size_t>(i)].assign(flat.begin() + static_cast<long>(i) * x.order,
                                        flat.begin() + static_cast<long>(i + 1) * x.order);
  return validate_action(std::move(b), std::move(x), rows);
}

// bx = x for every b.
inline Action trivial_action(const Magma& b, const Magma& x) {
  Action a;
  a.actor = b;
  a.space = x;
  a.table.resize(static_cast<size_t>(b.order) * x.order);
  for (int i = 0; i < b.order; ++i)
    for (int j = 0; j < x.order; ++j) a.table[static_cast<size_t>(i) * x.order + j] = j;
  a.table[0] = 0;
  for (int i = 0; i < b.order; ++i) a.table[static_cast<size_t>(i) * x.order] = 0;
  return a;
}

// The semidirect product diagram: total magma X⋊B on the row-major pair
// carrier with (x,b)+(x',b') = (x + bx', b+b'), plus its four canonical maps.
struct SemidirectDiagram {
  Action action;
  Magma total;    // X⋊B
  Hom inj1;       // ι1 : X -> total, x -> (x,0)
  Hom inj2;       // ι2 : B -> total, b -> (0,b)
  ZeroMap proj1;  // π1 : total -> X
  Hom proj2;      // π2 : total -> B
};

inline SemidirectDiagram semidirect(const Action& a) {
  const Magma& b = a.actor;
  const Magma& x = a.space;
  Magma total;
  total.order = x.order * b.order;
  total.table.assign(static_cast<size_t>(total.order) * total.order, 0);
  for (int i = 0; i < total.order; ++i)
    for (int j = 0; j < total.order; ++j) {
      int xi = pair_first(i, b.order), bi = pair_second(i, b.order);
      int xj = pair_first(j, b.order), bj = pair_second(j, b.order);
      total.table[static_cast<size_t>(i) * total.order + j] =
          pair_index(x.add(xi, a.act(bi, xj)), b.add(bi, bj), b.order);
    }

  std::vector<int> i1(static_cast<size_t>(x.order)), i2(static_cast<size_t>(b.order));
  std::vector<int> p1(static_cast<size_t>(total.order)), p2(static_cast<size_t>(total.order));
  for (int xi = 0; xi < x.order; ++xi) i1[static_cast<size_t>(xi)] = pair_index(xi, 0, b.order);
  for (int bi = 0; bi < b.order; ++bi) i2[static_cast<size_t>(bi)] = pair_index(0, bi, b.order);
  for (int i = 0; i < total.order; ++i) {
    p1[static_cast<size_t>(i)] = pair_first(i, b.order);
    p2[static_cast<size_t>(i)] = pair_second(i, b.order);
  }

  SemidirectDiagram d;
  d.action = a;
  d.inj1 = make_hom(x, total, std::move(i1));
  d.inj2 = make_hom(b, total, std::move(i2));
  d.proj1 = validate_zero_map(total, x, std::move(p1));
  d.proj2 = make_hom(total, b, std::move(p2));
  d.total = std::move(total);
  d.inj1.cod = d.total;
  d.inj2.cod = d.total;
  d.proj1.dom = d.total;
  d.proj2.dom = d.total;

  // The construction theorem guarantees the canonical identities; a failure
  // here is an internal defect, not bad input.
  auto must = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("semidirect internal defect: ") + what);
  };
  for (int xi = 0; xi < x.order; ++xi) must(d.proj1(d.inj1(xi)) == xi, "pi1 i1 = 1");
  for (int bi = 0; bi < b.order; ++bi) must(d.proj2(d.inj2(bi)) == bi, "pi2 i2 = 1");
  for (int bi = 0; bi < b.order; ++bi) must(d.proj1(d.inj2(bi)) == 0, "pi1 i2 = 0");
  for (int xi = 0; xi < x.order; ++xi) must(d.proj2(d.inj1(xi)) == 0, "pi2 i1 = 0");
  for (int i = 0; i < d.total.order; ++i)
    must(d.total.add(d.inj1(d.proj1(i)), d.inj2(d.proj2(i))) == i, "i1 pi1 + i2 pi2 = 1");
  for (int xi = 0; xi < x.order; ++xi)
    for (int bi = 0; bi < b.order; ++bi)
      must(d.proj1(d.total.add(d.inj1(xi), d.inj2(bi))) == xi, "pi1(i1 x + i2 b) = x");
  for (int xi = 0; xi < x.order; ++xi)
    for (int bi = 0; bi < b.order; ++bi)
      for (int j = 0; j < d.total.order; ++j) {
        int kx = d.inj1(xi), bb = d.inj2(bi);
        must(d.total.add(kx, d.total.add(bb, j)) == d.total.add(d.total.add(kx, bb), j),
             "left partial associativity");
        must(d.total.add(kx, d.total.add(j, bb)) == d.total.add(d.total.add(kx, j), bb),
             "middle partial associativity");
        must(d.total.add(j, d.total.add(kx, bb)) == d.total.add(d.total.add(j, kx), bb),
             "right partial associativity");
      }
  return d;
}

// First triple (b',b,x) with b'(bx) != (b'+b)x, scanned lexicographically.
inline std::optional<std::array<int, 3>> firmness_witness(const Action& a) {
  for (int b2 = 0; b2 < a.actor.order; ++b2)
    for (int b = 0; b < a.actor.order; ++b)
      for (int x = 0; x < a.space.order; ++x)
        if (a.act(b2, a.act(b, x)) != a.act(a.actor.add(b2, b), x))
          return std::array<int, 3>{b2, b, x};
  return std::nullopt;
}

inline bool is_firm(const Action& a) { return !firmness_witness(a); }

// First triple (b,x,x') with b(x+x') != bx + bx'.
inline std::optional<std::array<int, 3>> distributivity_witness(const Action& a) {
  for (int b = 0; b < a.actor.order; ++b)
    for (int x = 0; x < a.space.order; ++x)
      for (int x2 = 0; x2 < a.space.order; ++x2)
        if (a.act(b, a.space.add(x, x2)) != a.space.add(a.act(b, x), a.act(b, x2)))
          return std::array<int, 3>{b, x, x2};
  return std::nullopt;
}

inline bool is_distributive(const Action& a) { return !distributivity_witness(a); }

// b'x = f(b')x; the action laws survive because f(0) = 0.
inline Action restrict_action(const Action& a, const Hom& f) {
  if (!(f.cod == a.actor)) fail("DomainMismatch", {}, "restrict_action: f must land in the actor");
  Action r;
  r.actor = f.dom;
  r.space = a.space;
  r.table.resize(static_cast<size_t>(f.dom.order) * a.space.order);
  for (int b2 = 0; b2 < f.dom.order; ++b2)
    for (int x = 0; x < a.space.order; ++x)
      r.table[static_cast<size_t>(b2) * a.space.order + x] = a.act(f(b2), x);
  return r;
}

// Streams every action of b on x, lexicographic in the flattened free cells
// (those with b != 0 and x != 0). The callback returns false to stop early;
// the overall return is false iff a callback stopped the stream.
inline bool enumerate_actions(const Magma& b, const Magma& x,
                              const std::function<bool(const Action&)>& fn) {
  Action a = trivial_action(b, x);
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 1; i < b.order; ++i)
    for (int j = 1; j < x.order; ++j) free_cells.emplace_back(i, j);
  // odometer over the free cells
  std::vector<int> digits(free_cells.size(), 0);
  for (;;) {
    for (size_t k = 0; k < free_cells.size(); ++k)
      a.table[static_cast<size_t>(free_cells[k].first) * x.order + free_cells[k].second] =
          digits[k];
    if (!fn(a)) return false;
    size_t k = free_cells.size();
    while (k > 0) {
      --k;
      if (++digits[k] < x.order) break;
      digits[k] = 0;
      if (k == 0) return true;
    }
    if (free_cells.empty()) return true;
  }
}

inline std::uint64_t count_actions(const Magma& b, const Magma& x) {
  std::uint64_t n = 1;
  for (int i = 0; i < (b.order - 1) * (x.order - 1); ++i) n *= static_cast<std::uint64_t>(x.order);
  return n;
}

}  // namespace magmakit

#endif  // MAGMAKIT_ACTION_HPP
