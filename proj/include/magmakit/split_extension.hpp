#ifndef MAGMAKIT_SPLIT_EXTENSION_HPP
#define MAGMAKIT_SPLIT_EXTENSION_HPP

#include "magmakit/action.hpp"
#include "magmakit/magma.hpp"

namespace magmakit {

// Split extension seven-tuple E = (B, X, A, alpha, beta, kappa, lambda):
// alpha : A->B, beta : B->A, kappa : X->A homomorphisms, lambda : A->X
// zero-preserving only, subject to the seven defining equalities. lambda is
// deliberately kept a ZeroMap even when it happens to be additive.
struct SplitExtension {
  Magma b;  // B (base)
  Magma x;  // X (kernel)
  Magma a;  // A (total)
  Hom alpha;
  Hom beta;
  Hom kappa;
  ZeroMap lambda;
};

struct EquationFailure {
  int equation;  // 11..17
  std::vector<int> witness;
};

// Scans the defining equalities in ascending order (11)..(17) and reports the
// first instance that fails, or nothing if the tuple is a split extension.
// The component maps are assumed well-typed homs / zero map already.
inline std::optional<EquationFailure> split_extension_failure(
    const Magma& b, const Magma& x, const Magma& a, const ZeroMap& alpha, const ZeroMap& beta,
    const ZeroMap& kappa, const ZeroMap& lambda) {
  for (int xi = 0; xi < x.order; ++xi)  // (11) lambda kappa = 1
    if (lambda(kappa(xi)) != xi) return EquationFailure{11, {xi}};
  for (int bi = 0; bi < b.order; ++bi)  // (11) alpha beta = 1
    if (alpha(beta(bi)) != bi) return EquationFailure{11, {bi}};
  for (int bi = 0; bi < b.order; ++bi)  // (12) lambda beta = 0
    if (lambda(beta(bi)) != 0) return EquationFailure{12, {bi}};
  for (int xi = 0; xi < x.order; ++xi)  // (12) alpha kappa = 0
    if (alpha(kappa(xi)) != 0) return EquationFailure{12, {xi}};
  for (int ai = 0; ai < a.order; ++ai)  // (13) kappa lambda + beta alpha = 1
    if (a.add(kappa(lambda(ai)), beta(alpha(ai))) != ai) return EquationFailure{13, {ai}};
  for (int xi = 0; xi < x.order; ++xi)  // (14)
    for (int bi = 0; bi < b.order; ++bi)
      if (lambda(a.add(kappa(xi), beta(bi))) != xi) return EquationFailure{14, {xi, bi}};
  for (int xi = 0; xi < x.order; ++xi)  // (15) kappa(x) + (beta(b) + a)
    for (int bi = 0; bi < b.order; ++bi)
      for (int ai = 0; ai < a.order; ++ai)
        if (a.add(kappa(xi), a.add(beta(bi), ai)) != a.add(a.add(kappa(xi), beta(bi)), ai))
          return EquationFailure{15, {xi, bi, ai}};
  for (int xi = 0; xi < x.order; ++xi)  // (16) kappa(x) + (a + beta(b))
    for (int bi = 0; bi < b.order; ++bi)
      for (int ai = 0; ai < a.order; ++ai)
        if (a.add(kappa(xi), a.add(ai, beta(bi))) != a.add(a.add(kappa(xi), ai), beta(bi)))
          return EquationFailure{16, {xi, bi, ai}};
  for (int xi = 0; xi < x.order; ++xi)  // (17) a + (kappa(x) + beta(b))
    for (int bi = 0; bi < b.order; ++bi)
      for (int ai = 0; ai < a.order; ++ai)
        if (a.add(ai, a.add(kappa(xi), beta(bi))) != a.add(a.add(ai, kappa(xi)), beta(bi)))
          return EquationFailure{17, {xi, bi, ai}};
  return std::nullopt;
}

inline SplitExtension validate_split_extension(Magma b, Magma x, Magma a, ZeroMap alpha,
                                               ZeroMap beta, ZeroMap kappa, ZeroMap lambda) {
  auto check_shape = [](const ZeroMap& m, const Magma& dom, const Magma& cod, const char* name) {
    if (!(m.dom == dom) || !(m.cod == cod))
      fail("DomainMismatch", {}, std::string("map ") + name + " has wrong domain or codomain");
  };
  check_shape(alpha, a, b, "alpha");
  check_shape(beta, b, a, "beta");
  check_shape(kappa, x, a, "kappa");
  check_shape(lambda, a, x, "lambda");
  if (!is_hom(alpha)) fail("HomViolation", {}, "alpha is not a homomorphism");
  if (!is_hom(beta)) fail("HomViolation", {}, "beta is not a homomorphism");
  if (!is_hom(kappa)) fail("HomViolation", {}, "kappa is not a homomorphism");
  if (lambda.values.empty() || lambda.values[0] != 0)
    fail("ZeroNotPreserved", {}, "lambda must preserve zero");
  if (auto f = split_extension_failure(b, x, a, alpha, beta, kappa, lambda))
    fail("EquationViolation", f->witness,
         "equation (" + std::to_string(f->equation) + ") fails");
  SplitExtension e;
  e.b = std::move(b);
  e.x = std::move(x);
  e.a = std::move(a);
  e.alpha = Hom{std::move(alpha)};
  e.beta = Hom{std::move(beta)};
  e.kappa = Hom{std::move(kappa)};
  e.lambda = std::move(lambda);
  return e;
}

// Reads a semidirect diagram as the split extension (B, X, X⋊B, pi2, i2, i1, pi1).
inline SplitExtension as_split_extension(const SemidirectDiagram& d) {
  SplitExtension e;
  e.b = d.action.actor;
  e.x = d.action.space;
  e.a = d.total;
  e.alpha = d.proj2;
  e.beta = d.inj2;
  e.kappa = d.inj1;
  e.lambda = d.proj1;
  return e;
}

inline SplitExtension semidirect_extension(const Action& a) {
  return as_split_extension(semidirect(a));
}

// bx = lambda(beta(b) + kappa(x)).
inline Action associated_action(const SplitExtension& e) {
  Action h;
  h.actor = e.b;
  h.space = e.x;
  h.table.resize(static_cast<size_t>(e.b.order) * e.x.order);
  for (int bi = 0; bi < e.b.order; ++bi)
    for (int xi = 0; xi < e.x.order; ++xi)
      h.table[static_cast<size_t>(bi) * e.x.order + xi] =
          e.lambda(e.a.add(e.beta(bi), e.kappa(xi)));
  return h;
}

// beta(b) + kappa(x) = kappa(bx) + beta(b) for every valid extension.
inline bool check_exchange_identity(const SplitExtension& e) {
  Action h = associated_action(e);
  for (int bi = 0; bi < e.b.order; ++bi)
    for (int xi = 0; xi < e.x.order; ++xi)
      if (e.a.add(e.beta(bi), e.kappa(xi)) != e.a.add(e.kappa(h.act(bi, xi)), e.beta(bi)))
        return false;
  return true;
}

// phi(a) = (lambda(a), alpha(a)) and psi(x,b) = kappa(x) + beta(b), the
// mutually inverse comparison isomorphisms between A and the semidirect
// product over the associated action.
struct CanonicalIso {
  SemidirectDiagram semi;
  Hom phi;  // A -> X⋊B
  Hom psi;  // X⋊B -> A
};

inline CanonicalIso canonical_iso(const SplitExtension& e) {
  SemidirectDiagram d = semidirect(associated_action(e));
  auto defect = [](const char* what) {
    throw std::logic_error(std::string("canonical_iso internal defect: ") + what);
  };

  std::vector<int> phi_v(static_cast<size_t>(e.a.order));
  for (int ai = 0; ai < e.a.order; ++ai)
    phi_v[static_cast<size_t>(ai)] = pair_index(e.lambda(ai), e.alpha(ai), e.b.order);
  std::vector<int> psi_v(static_cast<size_t>(d.total.order));
  for (int i = 0; i < d.total.order; ++i)
    psi_v[static_cast<size_t>(i)] =
        e.a.add(e.kappa(pair_first(i, e.b.order)), e.beta(pair_second(i, e.b.order)));

  ZeroMap phi_raw{e.a, d.total, phi_v};
  ZeroMap psi_raw{d.total, e.a, psi_v};
  for (int ai = 0; ai < e.a.order; ++ai)
    if (psi_raw(phi_raw(ai)) != ai) defect("psi phi != 1");
  for (int i = 0; i < d.total.order; ++i)
    if (phi_raw(psi_raw(i)) != i) defect("phi psi != 1");
  if (!is_hom(psi_raw)) defect("psi is not a homomorphism");
  if (!is_hom(phi_raw)) defect("phi is not a homomorphism");

  // commutation of the canonical maps with both extension structures
  for (int xi = 0; xi < e.x.order; ++xi)
    if (phi_raw(e.kappa(xi)) != d.inj1(xi) || psi_raw(d.inj1(xi)) != e.kappa(xi))
      defect("kappa leg does not commute");
  for (int bi = 0; bi < e.b.order; ++bi)
    if (phi_raw(e.beta(bi)) != d.inj2(bi) || psi_raw(d.inj2(bi)) != e.beta(bi))
      defect("beta leg does not commute");
  for (int ai = 0; ai < e.a.order; ++ai)
    if (d.proj1(phi_raw(ai)) != e.lambda(ai) || d.proj2(phi_raw(ai)) != e.alpha(ai))
      defect("projection legs do not commute");
  for (int i = 0; i < d.total.order; ++i)
    if (e.lambda(psi_raw(i)) != d.proj1(i) || e.alpha(psi_raw(i)) != d.proj2(i))
      defect("psi projection legs do not commute");

  CanonicalIso c;
  c.phi = Hom{std::move(phi_raw)};
  c.psi = Hom{std::move(psi_raw)};
  c.semi = std::move(d);
  return c;
}

// Transports an extension along a 0-fixing permutation of A (values[i] = image
// of i). Used as the standard scrambled-extension fuzz source.
inline SplitExtension transport_extension(const SplitExtension& e, const std::vector<int>& perm) {
  int n = e.a.order;
  std::vector<int> inv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) inv[static_cast<size_t>(perm[static_cast<size_t>(i)])] = i;
  Magma a2;
  a2.order = n;
  a2.table.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a2.table[static_cast<size_t>(i) * n + j] = perm[static_cast<size_t>(
          e.a.add(inv[static_cast<size_t>(i)], inv[static_cast<size_t>(j)]))];
  std::vector<int> alpha_v(static_cast<size_t>(n)), lambda_v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    alpha_v[static_cast<size_t>(i)] = e.alpha(inv[static_cast<size_t>(i)]);
    lambda_v[static_cast<size_t>(i)] = e.lambda(inv[static_cast<size_t>(i)]);
  }
  std::vector<int> beta_v(e.beta.values), kappa_v(e.kappa.values);
  for (int& v : beta_v) v = perm[static_cast<size_t>(v)];
  for (int& v : kappa_v) v = perm[static_cast<size_t>(v)];
  return validate_split_extension(e.b, e.x, a2, ZeroMap{a2, e.b, std::move(alpha_v)},
                                  ZeroMap{e.b, a2, std::move(beta_v)},
                                  ZeroMap{e.x, a2, std::move(kappa_v)},
                                  ZeroMap{a2, e.x, std::move(lambda_v)});
}

// ---------------------------------------------------------------------------
// Morphisms and the SplExt <-> Act equivalence

struct SplitExtMorphism {
  SplitExtension source;
  SplitExtension target;
  Hom f;  // B -> B'
  Hom u;  // X -> X'
  Hom p;  // A -> A'
};

struct ActionMorphism {
  Action source;
  Action target;
  Hom f;
  Hom u;
};

// First (b,x) with u(bx) != f(b)u(x), if any.
inline std::optional<std::array<int, 2>> equivariance_witness(const Action& h, const Action& h2,
                                                              const ZeroMap& f, const ZeroMap& u) {
  for (int bi = 0; bi < h.actor.order; ++bi)
    for (int xi = 0; xi < h.space.order; ++xi)
      if (u(h.act(bi, xi)) != h2.act(f(bi), u(xi))) return std::array<int, 2>{bi, xi};
  return std::nullopt;
}

inline ActionMorphism validate_action_morphism(Action source, Action target, Hom f, Hom u) {
  if (auto w = equivariance_witness(source, target, f, u))
    fail("EquationViolation", {(*w)[0], (*w)[1]}, "u(bx) != f(b)u(x)");
  return ActionMorphism{std::move(source), std::move(target), std::move(f), std::move(u)};
}

inline SplitExtMorphism validate_morphism(SplitExtension source, SplitExtension target, Hom f,
                                          Hom u, Hom p) {
  const SplitExtension& e = source;
  const SplitExtension& e2 = target;
  if (!(f.dom == e.b) || !(f.cod == e2.b) || !(u.dom == e.x) || !(u.cod == e2.x) ||
      !(p.dom == e.a) || !(p.cod == e2.a))
    fail("DomainMismatch", {}, "morphism components have wrong domains or codomains");
  bool first_pair = true, last_pair = true;
  std::optional<std::pair<int, int>> failure;  // (which of the four, witness)
  for (int xi = 0; xi < e.x.order && first_pair; ++xi)
    if (p(e.kappa(xi)) != e2.kappa(u(xi))) {
      first_pair = false;
      if (!failure) failure = {1, xi};
    }
  for (int bi = 0; bi < e.b.order && first_pair; ++bi)
    if (p(e.beta(bi)) != e2.beta(f(bi))) {
      first_pair = false;
      if (!failure) failure = {2, bi};
    }
  for (int ai = 0; ai < e.a.order && last_pair; ++ai)
    if (e2.lambda(p(ai)) != u(e.lambda(ai))) {
      last_pair = false;
      if (!failure) failure = {3, ai};
    }
  for (int ai = 0; ai < e.a.order && last_pair; ++ai)
    if (e2.alpha(p(ai)) != f(e.alpha(ai))) {
      last_pair = false;
      if (!failure) failure = {4, ai};
    }
  // Redundancy cross-check: for valid extensions the first two equalities of
  // morphism squares hold iff the last two do. A mismatch is an internal defect.
  if (first_pair != last_pair)
    throw std::logic_error("morphism redundancy violated: square pairs disagree");
  if (failure)
    fail("EquationViolation", {failure->second},
         "morphism square " + std::to_string(failure->first) + " fails");
  return SplitExtMorphism{std::move(source), std::move(target), std::move(f), std::move(u),
                          std::move(p)};
}

inline SplitExtMorphism identity_morphism(const SplitExtension& e) {
  return SplitExtMorphism{e, e, identity_hom(e.b), identity_hom(e.x), identity_hom(e.a)};
}

// Completes (f,u) to the unique morphism with p = kappa' u lambda + beta' f alpha
// when u is equivariant for the associated actions; otherwise nothing.
inline std::optional<SplitExtMorphism> complete_morphism(const SplitExtension& source,
                                                         const SplitExtension& target,
                                                         const Hom& f, const Hom& u) {
  Action h = associated_action(source), h2 = associated_action(target);
  if (equivariance_witness(h, h2, f, u)) return std::nullopt;
  std::vector<int> p_v(static_cast<size_t>(source.a.order));
  for (int ai = 0; ai < source.a.order; ++ai)
    p_v[static_cast<size_t>(ai)] = target.a.add(target.kappa(u(source.lambda(ai))),
                                                target.beta(f(source.alpha(ai))));
  Hom p = make_hom(source.a, target.a, std::move(p_v));
  return validate_morphism(source, target, f, u, std::move(p));
}

// Object/morphism parts of the two equivalence functors.
inline ActionMorphism splext_to_act(const SplitExtMorphism& m) {
  return validate_action_morphism(associated_action(m.source), associated_action(m.target), m.f,
                                  m.u);
}

inline SplitExtMorphism act_to_splext(const ActionMorphism& m) {
  SplitExtension src = semidirect_extension(m.source);
  SplitExtension tgt = semidirect_extension(m.target);
  std::vector<int> p_v(static_cast<size_t>(src.a.order));
  for (int i = 0; i < src.a.order; ++i)
    p_v[static_cast<size_t>(i)] =
        pair_index(m.u(pair_first(i, m.source.actor.order)),
                   m.f(pair_second(i, m.source.actor.order)), m.target.actor.order);
  Hom p = make_hom(src.a, tgt.a, std::move(p_v));
  return validate_morphism(std::move(src), std::move(tgt), m.f, m.u, std::move(p));
}

// ---------------------------------------------------------------------------
// Pullback (cotranslation) of an extension along f : B' -> B

struct PullbackResult {
  SplitExtension ext;          // E_f, in semidirect form over the restricted action
  SplitExtMorphism morphism;   // (f, 1_X, p) : E_f -> E
};

inline PullbackResult pullback(const SplitExtension& e, const Hom& f) {
  if (!(f.cod == e.b)) fail("DomainMismatch", {}, "pullback: f must land in the base B");
  Action h = restrict_action(associated_action(e), f);
  SplitExtension ef = semidirect_extension(h);
  // p(x, b') = kappa(x) + beta(f(b'))
  std::vector<int> p_v(static_cast<size_t>(ef.a.order));
  for (int i = 0; i < ef.a.order; ++i)
    p_v[static_cast<size_t>(i)] = e.a.add(e.kappa(pair_first(i, f.dom.order)),
                                          e.beta(f(pair_second(i, f.dom.order))));
  Hom p = make_hom(ef.a, e.a, std::move(p_v));
  SplitExtMorphism m = validate_morphism(ef, e, f, identity_hom(e.x), std::move(p));

  // The square (alpha', p, f, alpha) must be a set pullback: a' -> (p(a'), b')
  // hits each {(a,b') : alpha(a) = f(b')} exactly once.
  std::vector<int> hits(static_cast<size_t>(e.a.order) * f.dom.order, 0);
  for (int i = 0; i < ef.a.order; ++i) {
    int ai = m.p(i), bi = pair_second(i, f.dom.order);
    if (e.alpha(ai) != f(bi)) throw std::logic_error("pullback: square does not commute");
    ++hits[static_cast<size_t>(ai) * f.dom.order + bi];
  }
  for (int ai = 0; ai < e.a.order; ++ai)
    for (int bi = 0; bi < f.dom.order; ++bi) {
      int expected = (e.alpha(ai) == f(bi)) ? 1 : 0;
      if (hits[static_cast<size_t>(ai) * f.dom.order + bi] != expected)
        throw std::logic_error("pullback: carrier square is not a set pullback");
    }
  return PullbackResult{std::move(ef), std::move(m)};
}

// ---------------------------------------------------------------------------
// Split-epimorphism classes E <= E' <= E''

enum class SplitEpiClass { NotInE = 0, E = 1, EPrime = 2, EPrimePrime = 3 };

inline const char* to_string(SplitEpiClass c) {
  switch (c) {
    case SplitEpiClass::NotInE: return "NotInE";
    case SplitEpiClass::E: return "E";
    case SplitEpiClass::EPrime: return "E'";
    case SplitEpiClass::EPrimePrime: return "E''";
  }
  return "?";
}

struct Classification {
  SplitEpiClass cls = SplitEpiClass::NotInE;
  std::optional<SplitExtension> witness;  // present iff cls >= E
};

// Reconstructs the extension from (alpha, beta) alone: X is the kernel
// submagma alpha^{-1}(0), kappa its inclusion, and lambda comes from the
// unique decomposition a = kappa(x) + beta(alpha(a)) when it exists.
inline Classification classify_split_epi(const Magma& a, const Magma& b, const Hom& alpha,
                                         const Hom& beta) {
  for (int bi = 0; bi < b.order; ++bi)
    if (alpha(beta(bi)) != bi) fail("NotSplit", {bi}, "alpha beta != 1");
  std::vector<int> kernel;
  for (int ai = 0; ai < a.order; ++ai)
    if (alpha(ai) == 0) kernel.push_back(ai);
  Submagma sub = submagma(a, kernel);  // closed since alpha is a hom
  const Magma& x = sub.sub;

  std::vector<int> lambda_v(static_cast<size_t>(a.order), -1);
  for (int ai = 0; ai < a.order; ++ai) {
    int found = -1;
    for (int xi = 0; xi < x.order; ++xi)
      if (a.add(sub.inclusion(xi), beta(alpha(ai))) == ai) {
        if (found >= 0) return Classification{};  // not unique
        found = xi;
      }
    if (found < 0) return Classification{};  // no decomposition
    lambda_v[static_cast<size_t>(ai)] = found;
  }
  ZeroMap lambda{a, x, std::move(lambda_v)};
  if (split_extension_failure(b, x, a, alpha, beta, sub.inclusion, lambda))
    return Classification{};
  SplitExtension e;
  e.b = b;
  e.x = x;
  e.a = a;
  e.alpha = alpha;
  e.beta = beta;
  e.kappa = sub.inclusion;
  e.lambda = std::move(lambda);
  Action h = associated_action(e);
  SplitEpiClass cls = SplitEpiClass::E;
  if (is_firm(h)) {
    cls = SplitEpiClass::EPrime;
    if (is_distributive(h)) cls = SplitEpiClass::EPrimePrime;
  }
  return Classification{cls, std::move(e)};
}

inline SplitEpiClass classify_extension(const SplitExtension& e) {
  Action h = associated_action(e);
  if (!is_firm(h)) return SplitEpiClass::E;
  return is_distributive(h) ? SplitEpiClass::EPrimePrime : SplitEpiClass::EPrime;
}

// ---------------------------------------------------------------------------
// Split Short Five Lemma cases (diagram with identity end maps, two
// semidirect rows over possibly different actions of B on X)

struct ShortFiveReport {
  char case_id = '?';
  bool is_isomorphism = false;
  std::optional<std::array<int, 2>> collision;  // two total indices with equal image
};

namespace detail {
inline std::optional<std::array<int, 2>> injectivity_collision(const ZeroMap& p) {
  std::vector<int> seen(static_cast<size_t>(p.cod.order), -1);
  for (int i = 0; i < p.dom.order; ++i) {
    int v = p(i);
    if (seen[static_cast<size_t>(v)] >= 0)
      return std::array<int, 2>{seen[static_cast<size_t>(v)], i};
    seen[static_cast<size_t>(v)] = i;
  }
  return std::nullopt;
}
}  // namespace detail

// Case (a): pi1 p = pi1 and pi2 p = pi2 force p to be the identity map of the
// underlying set, hence an isomorphism.
inline ShortFiveReport short_five_case_a(const SemidirectDiagram& top,
                                         const SemidirectDiagram& bottom, const Hom& p) {
  for (int i = 0; i < top.total.order; ++i)
    if (bottom.proj1(p(i)) != top.proj1(i) || bottom.proj2(p(i)) != top.proj2(i))
      fail("PreconditionViolation", {i}, "case (a): projection equalities fail");
  if (detail::injectivity_collision(p))
    throw std::logic_error("short five (a): p not bijective despite hypotheses");
  return ShortFiveReport{'a', true, std::nullopt};
}

// Case (b): p i1 = i1 and p i2 = i2 force p(x,b) = (x,b) because p is additive.
inline ShortFiveReport short_five_case_b(const SemidirectDiagram& top,
                                         const SemidirectDiagram& bottom, const Hom& p) {
  for (int xi = 0; xi < top.action.space.order; ++xi)
    if (p(top.inj1(xi)) != bottom.inj1(xi))
      fail("PreconditionViolation", {xi}, "case (b): p i1 != i1");
  for (int bi = 0; bi < top.action.actor.order; ++bi)
    if (p(top.inj2(bi)) != bottom.inj2(bi))
      fail("PreconditionViolation", {bi}, "case (b): p i2 != i2");
  if (detail::injectivity_collision(p))
    throw std::logic_error("short five (b): p not bijective despite hypotheses");
  return ShortFiveReport{'b', true, std::nullopt};
}

// Case (c): X a commutative monoid, both actions trivial, s : B -> X a hom;
// p(x,b) = (x + s(b), b) satisfies p i1 = i1 and pi2 p = pi2 but need not be
// injective.
inline ShortFiveReport short_five_case_c(const Magma& x, const Magma& b, const Hom& s) {
  if (!is_associative(x) || !is_commutative(x))
    fail("PreconditionViolation", {}, "case (c) needs X to be a commutative monoid");
  if (!(s.dom == b) || !(s.cod == x))
    fail("DomainMismatch", {}, "case (c): s must be a hom B -> X");
  SemidirectDiagram d = semidirect(trivial_action(b, x));
  std::vector<int> p_v(static_cast<size_t>(d.total.order));
  for (int i = 0; i < d.total.order; ++i)
    p_v[static_cast<size_t>(i)] = pair_index(x.add(pair_first(i, b.order), s(pair_second(i, b.order))),
                                             pair_second(i, b.order), b.order);
  Hom p = make_hom(d.total, d.total, std::move(p_v));
  for (int xi = 0; xi < x.order; ++xi)
    if (p(d.inj1(xi)) != d.inj1(xi))
      throw std::logic_error("short five (c): p i1 != i1");
  for (int i = 0; i < d.total.order; ++i)
    if (d.proj2(p(i)) != d.proj2(i))
      throw std::logic_error("short five (c): pi2 p != pi2");
  auto collision = detail::injectivity_collision(p);
  return ShortFiveReport{'c', !collision, collision};
}

}  // namespace magmakit

#endif  // MAGMAKIT_SPLIT_EXTENSION_HPP
