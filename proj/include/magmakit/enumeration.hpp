#ifndef MAGMAKIT_ENUMERATION_HPP
#define MAGMAKIT_ENUMERATION_HPP

#include <cstdint>
#include <functional>
#include <future>
#include <thread>

#include "magmakit/composition.hpp"
#include "magmakit/split_extension.hpp"

namespace magmakit {

struct SearchBudget {
  int max_order = 2;
  std::optional<std::uint64_t> max_candidates;
  int workers = 1;
  std::uint64_t seed = 0;
};

// Unitary magmas of order n have (n-1)^2 free cells; the count is
// n^((n-1)^2). Enumeration is lexicographic over the flattened free cells,
// so index <-> table decoding is mixed-radix arithmetic.
inline std::uint64_t magma_count(int n) {
  std::uint64_t c = 1;
  for (int i = 0; i < (n - 1) * (n - 1); ++i) c *= static_cast<std::uint64_t>(n);
  return c;
}

inline Magma magma_at(int n, std::uint64_t index) {
  Magma m;
  m.order = n;
  m.table.assign(static_cast<size_t>(n) * n, 0);
  for (int j = 0; j < n; ++j) m.table[static_cast<size_t>(j)] = j;
  for (int i = 1; i < n; ++i) m.table[static_cast<size_t>(i) * n] = i;
  // last free cell is the least-significant digit
  for (int i = n - 1; i >= 1; --i)
    for (int j = n - 1; j >= 1; --j) {
      m.table[static_cast<size_t>(i) * n + j] = static_cast<int>(index % n);
      index /= static_cast<std::uint64_t>(n);
    }
  return m;
}

inline Action action_at(const Magma& b, const Magma& x, std::uint64_t index) {
  Action a = trivial_action(b, x);
  for (int i = b.order - 1; i >= 1; --i)
    for (int j = x.order - 1; j >= 1; --j) {
      a.table[static_cast<size_t>(i) * x.order + j] = static_cast<int>(index % x.order);
      index /= static_cast<std::uint64_t>(x.order);
    }
  return a;
}

// Streams magmas of order n in lexicographic table order; callback returns
// false to stop. Returns false iff stopped early.
inline bool enumerate_magmas(int n, bool associative_only,
                             const std::function<bool(const Magma&)>& fn) {
  std::uint64_t total = magma_count(n);
  for (std::uint64_t i = 0; i < total; ++i) {
    Magma m = magma_at(n, i);
    if (associative_only && !is_associative(m)) continue;
    if (!fn(m)) return false;
  }
  return true;
}

inline std::vector<Magma> all_magmas(int n, bool associative_only = false) {
  std::vector<Magma> out;
  enumerate_magmas(n, associative_only, [&](const Magma& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

// All magmas of orders 1..max_order, in (order, index) order.
inline std::vector<Magma> magmas_up_to(int max_order, bool associative_only = false) {
  std::vector<Magma> out;
  for (int n = 1; n <= max_order; ++n)
    for (Magma& m : all_magmas(n, associative_only)) out.push_back(std::move(m));
  return out;
}

namespace detail {
// Backtracking hom enumerator, lexicographic in value arrays. `fixed[i] >= 0`
// pins values; additivity is pruned as soon as both summands and their sum
// are assigned.
inline bool hom_search(const Magma& m, const Magma& n, std::vector<int>& values, int next,
                       const std::function<bool(const Hom&)>& fn) {
  if (next == m.order) {
    ZeroMap z{m, n, values};
    if (!is_hom(z)) return true;  // fixed cells may break additivity globally
    return fn(Hom{std::move(z)});
  }
  int lo = values[static_cast<size_t>(next)] >= 0 ? values[static_cast<size_t>(next)] : 0;
  int hi = values[static_cast<size_t>(next)] >= 0 ? values[static_cast<size_t>(next)] + 1 : n.order;
  int saved = values[static_cast<size_t>(next)];
  for (int v = lo; v < hi; ++v) {
    values[static_cast<size_t>(next)] = v;
    bool ok = true;
    for (int a = 0; a <= next && ok; ++a)
      for (int b = 0; b <= next && ok; ++b) {
        int s = m.add(a, b);
        if (s <= next && values[static_cast<size_t>(s)] >= 0 &&
            values[static_cast<size_t>(s)] !=
                n.add(values[static_cast<size_t>(a)], values[static_cast<size_t>(b)]))
          ok = false;
      }
    if (ok && !hom_search(m, n, values, next + 1, fn)) {
      values[static_cast<size_t>(next)] = saved;
      return false;
    }
  }
  values[static_cast<size_t>(next)] = saved;
  return true;
}
}  // namespace detail

// Streams all homomorphisms m -> n, lexicographic on value arrays.
inline bool enumerate_homs(const Magma& m, const Magma& n,
                           const std::function<bool(const Hom&)>& fn) {
  std::vector<int> values(static_cast<size_t>(m.order), -1);
  values[0] = 0;
  return detail::hom_search(m, n, values, 1, fn);
}

// Same, but with some values pinned (fixed[i] = -1 means free; fixed[0] must
// be 0).
inline bool enumerate_homs_fixed(const Magma& m, const Magma& n, std::vector<int> fixed,
                                 const std::function<bool(const Hom&)>& fn) {
  fixed[0] = 0;
  return detail::hom_search(m, n, fixed, 1, fn);
}

inline std::vector<Hom> all_homs(const Magma& m, const Magma& n) {
  std::vector<Hom> out;
  enumerate_homs(m, n, [&](const Hom& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

// Partitions a finite stream into isomorphism classes. Representatives are
// the first (lexicographically least, given lexicographic input) member of
// each class.
struct IsoClass {
  Magma representative;
  int size = 0;
};

inline std::vector<IsoClass> iso_classes(const std::vector<Magma>& magmas) {
  std::vector<IsoClass> classes;
  for (const Magma& m : magmas) {
    bool placed = false;
    for (IsoClass& c : classes) {
      if (are_isomorphic(c.representative, m)) {
        ++c.size;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back(IsoClass{m, 1});
  }
  return classes;
}

namespace detail {
// A firm action is a row assignment b -> r_b in the transformations of X
// fixing 0, with r_0 = id and r_{b'+b} = r_{b'} . r_b. Backtracks over rows
// in element order; rows forced by already-assigned sums are not branched.
inline bool firm_search(const Magma& b, const Magma& x, std::vector<std::vector<int>>& rows,
                        int next, const std::function<bool(const Action&)>& fn) {
  int n = b.order, xn = x.order;
  if (next == n) {
    Action a;
    a.actor = b;
    a.space = x;
    a.table.resize(static_cast<size_t>(n) * xn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < xn; ++j) a.table[static_cast<size_t>(i) * xn + j] = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return fn(a);
  }
  auto consistent = [&](int upto) {
    for (int b1 = 0; b1 <= upto; ++b1)
      for (int b2 = 0; b2 <= upto; ++b2) {
        int s = b.add(b1, b2);
        if (s > upto) continue;
        for (int xi = 0; xi < xn; ++xi)
          if (rows[static_cast<size_t>(b1)][static_cast<size_t>(
                  rows[static_cast<size_t>(b2)][static_cast<size_t>(xi)])] !=
              rows[static_cast<size_t>(s)][static_cast<size_t>(xi)])
            return false;
      }
    return true;
  };
  // forced by some assigned pair summing to `next`?
  std::optional<std::vector<int>> forced;
  for (int b1 = 0; b1 < next && !forced; ++b1)
    for (int b2 = 0; b2 < next && !forced; ++b2)
      if (b.add(b1, b2) == next) {
        std::vector<int> row(static_cast<size_t>(xn));
        for (int xi = 0; xi < xn; ++xi)
          row[static_cast<size_t>(xi)] = rows[static_cast<size_t>(b1)][static_cast<size_t>(
              rows[static_cast<size_t>(b2)][static_cast<size_t>(xi)])];
        forced = std::move(row);
      }
  if (forced) {
    if ((*forced)[0] != 0) return true;  // would not fix 0: dead branch
    rows[static_cast<size_t>(next)] = *forced;
    if (!consistent(next)) return true;
    return firm_search(b, x, rows, next + 1, fn);
  }
  // free row: odometer over values for x = 1..xn-1, lexicographic
  std::vector<int>& row = rows[static_cast<size_t>(next)];
  std::vector<int> digits(static_cast<size_t>(xn > 0 ? xn - 1 : 0), 0);
  for (;;) {
    row[0] = 0;
    for (int xi = 1; xi < xn; ++xi) row[static_cast<size_t>(xi)] = digits[static_cast<size_t>(xi - 1)];
    if (consistent(next) && !firm_search(b, x, rows, next + 1, fn)) return false;
    size_t k = digits.size();
    bool done = true;
    while (k > 0) {
      --k;
      if (++digits[k] < xn) {
        done = false;
        break;
      }
      digits[k] = 0;
    }
    if (done) return true;
  }
}
}  // namespace detail

// Streams exactly the firm actions of b on x, deterministically.
inline bool enumerate_firm_actions(const Magma& b, const Magma& x,
                                   const std::function<bool(const Action&)>& fn) {
  std::vector<std::vector<int>> rows(static_cast<size_t>(b.order),
                                     std::vector<int>(static_cast<size_t>(x.order)));
  for (int xi = 0; xi < x.order; ++xi) rows[0][static_cast<size_t>(xi)] = xi;
  return detail::firm_search(b, x, rows, 1, fn);
}

inline std::vector<Action> all_firm_actions(const Magma& b, const Magma& x) {
  std::vector<Action> out;
  enumerate_firm_actions(b, x, [&](const Action& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

// First non-composable pair of semidirect extensions in the fixed nested
// enumeration order over component orders (|D|,|Y|,|X|), magma indices, and
// action indices. `firm_inner_only` restricts the sweep to firm inner
// extensions (and then no witness exists at any budget).
struct NoncomposableWitness {
  SplitExtension outer;
  SplitExtension inner;
  std::array<int, 3> action_witness;  // failing (y,d,x)
};

inline std::optional<NoncomposableWitness> search_noncomposable_pair(
    const SearchBudget& budget, bool firm_inner_only = false) {
  std::uint64_t examined = 0;
  for (int nd = 1; nd <= budget.max_order; ++nd)
    for (int ny = 1; ny <= budget.max_order; ++ny)
      for (int nx = 1; nx <= budget.max_order; ++nx)
        for (std::uint64_t di = 0; di < magma_count(nd); ++di)
          for (std::uint64_t yi = 0; yi < magma_count(ny); ++yi) {
            Magma d = magma_at(nd, di), y = magma_at(ny, yi);
            for (std::uint64_t oa = 0; oa < count_actions(d, y); ++oa) {
              SplitExtension outer = semidirect_extension(action_at(d, y, oa));
              for (std::uint64_t xi = 0; xi < magma_count(nx); ++xi) {
                Magma x = magma_at(nx, xi);
                for (std::uint64_t ia = 0; ia < count_actions(outer.a, x); ++ia) {
                  Action inner_act = action_at(outer.a, x, ia);
                  if (firm_inner_only && !is_firm(inner_act)) continue;
                  if (budget.max_candidates && examined >= *budget.max_candidates)
                    return std::nullopt;
                  ++examined;
                  SplitExtension inner = semidirect_extension(inner_act);
                  ComposabilityReport r = is_composable(outer, inner);
                  if (!r.composable)
                    return NoncomposableWitness{std::move(outer), std::move(inner), *r.witness};
                }
              }
            }
          }
  return std::nullopt;
}

// First commutative monoid X, magma B, and hom s: B -> X whose middle map
// p(x,b) = (x + s(b), b) is a non-injective counterexample to the naive
// Short Five Lemma statement.
struct SflCWitness {
  Magma x;
  Magma b;
  Hom s;
  ShortFiveReport report;
};

inline std::optional<SflCWitness> search_sfl_c_counterexample(const SearchBudget& budget) {
  std::uint64_t examined = 0;
  for (int nx = 1; nx <= budget.max_order; ++nx)
    for (std::uint64_t xi = 0; xi < magma_count(nx); ++xi) {
      Magma x = magma_at(nx, xi);
      if (!is_associative(x) || !is_commutative(x)) continue;
      for (int nb = 1; nb <= budget.max_order; ++nb)
        for (std::uint64_t bi = 0; bi < magma_count(nb); ++bi) {
          Magma b = magma_at(nb, bi);
          std::optional<SflCWitness> found;
          enumerate_homs(b, x, [&](const Hom& s) {
            if (budget.max_candidates && examined >= *budget.max_candidates) return false;
            ++examined;
            ShortFiveReport r = short_five_case_c(x, b, s);
            if (!r.is_isomorphism) {
              found = SflCWitness{x, b, s, r};
              return false;
            }
            return true;
          });
          if (found) return found;
        }
    }
  return std::nullopt;
}

// First action that is firm but not distributive, i.e. a split epimorphism
// in E' but not E''. The smallest ones live at |X| = 3.
inline std::optional<Action> search_firm_not_distributive(const SearchBudget& budget) {
  std::uint64_t examined = 0;
  for (int nb = 1; nb <= budget.max_order; ++nb)
    for (int nx = 1; nx <= budget.max_order; ++nx)
      for (std::uint64_t bi = 0; bi < magma_count(nb); ++bi)
        for (std::uint64_t xi = 0; xi < magma_count(nx); ++xi) {
          std::optional<Action> found;
          enumerate_firm_actions(magma_at(nb, bi), magma_at(nx, xi), [&](const Action& a) {
            if (budget.max_candidates && examined >= *budget.max_candidates) return false;
            ++examined;
            if (!is_distributive(a)) {
              found = a;
              return false;
            }
            return true;
          });
          if (found) return found;
        }
  return std::nullopt;
}

// Search mode for split-epi classification: tries every splitting beta with
// alpha beta = 1 and returns the best class reachable, with its witness.
inline Classification classify_split_epi_search(const Magma& a, const Magma& b,
                                                const Hom& alpha) {
  Classification best;
  enumerate_homs(b, a, [&](const Hom& beta) {
    bool splits = true;
    for (int bi = 0; bi < b.order && splits; ++bi)
      if (alpha(beta(bi)) != bi) splits = false;
    if (!splits) return true;
    Classification c = classify_split_epi(a, b, alpha, beta);
    if (static_cast<int>(c.cls) > static_cast<int>(best.cls)) best = std::move(c);
    return best.cls != SplitEpiClass::EPrimePrime;  // cannot improve further
  });
  return best;
}

// Deterministic worker partitioning: splits [0, total) into `workers`
// contiguous chunks, runs them on separate threads, and folds the partial
// results in chunk order.
template <class Partial>
Partial parallel_chunks(std::uint64_t total, int workers,
                        const std::function<Partial(std::uint64_t, std::uint64_t)>& run,
                        const std::function<Partial(Partial, Partial)>& merge) {
  if (workers <= 1 || total < 2) return run(0, total);
  std::uint64_t w = static_cast<std::uint64_t>(workers);
  if (w > total) w = total;
  std::vector<std::future<Partial>> futures;
  std::uint64_t chunk = total / w, rem = total % w, begin = 0;
  for (std::uint64_t i = 0; i < w; ++i) {
    std::uint64_t end = begin + chunk + (i < rem ? 1 : 0);
    futures.push_back(std::async(std::launch::async, run, begin, end));
    begin = end;
  }
  Partial acc = futures[0].get();
  for (size_t i = 1; i < futures.size(); ++i) acc = merge(std::move(acc), futures[i].get());
  return acc;
}

}  // namespace magmakit

#endif  // MAGMAKIT_ENUMERATION_HPP
