#ifndef MAGMAKIT_COMPOSITION_HPP
#define MAGMAKIT_COMPOSITION_HPP

#include "magmakit/split_extension.hpp"

namespace magmakit {

// Data of the composition diagram for an inner extension E = (B,X,A,...) and
// an outer extension F = (D,Y,B,...) sharing the middle magma B:
// Z = alpha^{-1}(mu(Y)) as a submagma of A, and the candidate composite
// seven-tuple G = (D, Z, A, gamma alpha, beta delta, mu', nu').
struct CompositionDiagram {
  SplitExtension inner;  // E, base B, kernel X, total A
  SplitExtension outer;  // F, base D, kernel Y, total B
  Submagma z;            // Z inside A; z.inclusion is mu'
  Hom alpha_prime;       // Z -> Y
  Hom beta_prime;        // Y -> Z
  ZeroMap nu_prime;      // A -> Z
  Hom g_alpha;           // gamma alpha : A -> D
  Hom g_beta;            // beta delta : D -> A
};

inline CompositionDiagram build_composition_diagram(const SplitExtension& outer,
                                                    const SplitExtension& inner) {
  if (!(inner.b == outer.a))
    fail("MiddleMismatch", {}, "inner base and outer total must be the same magma");
  const Magma& a = inner.a;
  const Magma& b = inner.b;
  const Magma& y = outer.x;
  const Magma& d = outer.b;

  // mu is injective (nu mu = 1); invert it on its image.
  std::vector<int> mu_inv(static_cast<size_t>(b.order), -1);
  for (int yi = 0; yi < y.order; ++yi) mu_inv[static_cast<size_t>(outer.kappa(yi))] = yi;

  std::vector<int> carrier;
  for (int ai = 0; ai < a.order; ++ai)
    if (mu_inv[static_cast<size_t>(inner.alpha(ai))] >= 0) carrier.push_back(ai);
  Submagma z = submagma(a, std::move(carrier));  // closed; a throw here is a defect

  std::vector<int> pos(static_cast<size_t>(a.order), -1);
  for (size_t k = 0; k < z.ambient_index.size(); ++k)
    pos[static_cast<size_t>(z.ambient_index[k])] = static_cast<int>(k);

  std::vector<int> ap_v(static_cast<size_t>(z.sub.order));
  for (int zi = 0; zi < z.sub.order; ++zi)
    ap_v[static_cast<size_t>(zi)] = mu_inv[static_cast<size_t>(inner.alpha(z.inclusion(zi)))];
  std::vector<int> bp_v(static_cast<size_t>(y.order));
  for (int yi = 0; yi < y.order; ++yi) {
    int av = inner.beta(outer.kappa(yi));
    if (pos[static_cast<size_t>(av)] < 0)
      throw std::logic_error("composition: beta mu does not land in Z");
    bp_v[static_cast<size_t>(yi)] = pos[static_cast<size_t>(av)];
  }
  // nu'(a) = kappa lambda(a) + beta mu nu alpha(a)
  std::vector<int> np_v(static_cast<size_t>(a.order));
  for (int ai = 0; ai < a.order; ++ai) {
    int v = a.add(inner.kappa(inner.lambda(ai)),
                  inner.beta(outer.kappa(outer.lambda(inner.alpha(ai)))));
    if (pos[static_cast<size_t>(v)] < 0)
      throw std::logic_error("composition: nu' does not land in Z");
    np_v[static_cast<size_t>(ai)] = pos[static_cast<size_t>(v)];
  }

  CompositionDiagram cd;
  cd.alpha_prime = make_hom(z.sub, y, std::move(ap_v));
  cd.beta_prime = make_hom(y, z.sub, std::move(bp_v));
  cd.nu_prime = validate_zero_map(a, z.sub, std::move(np_v));
  cd.g_alpha = compose(outer.alpha, inner.alpha);
  cd.g_beta = compose(inner.beta, outer.beta);
  cd.inner = inner;
  cd.outer = outer;
  cd.z = std::move(z);

  // The candidate always satisfies the counterparts of (11)-(14), (16), (17);
  // only the (15)-counterpart can fail.
  auto f = split_extension_failure(d, cd.z.sub, a, cd.g_alpha, cd.g_beta, cd.z.inclusion,
                                   cd.nu_prime);
  if (f && f->equation != 15)
    throw std::logic_error("composition: candidate violates equation (" +
                           std::to_string(f->equation) + ")"); // only the partial-associativity counterpart may fail
  return cd;
}

struct ComposabilityReport {
  bool composable = false;
  // first failing (y, d, x) of the action criterion, when not composable
  std::optional<std::array<int, 3>> witness;
};

// Decides composability three independent ways and insists they agree:
// (a) the candidate is a split extension, (b) the partial-associativity
// instances mu'(z) + (beta delta(d) + a), (c) mu(y)(delta(d)x) = (mu(y)+delta(d))x
// over the associated action of the inner extension.
inline ComposabilityReport is_composable(const SplitExtension& outer,
                                         const SplitExtension& inner) {
  CompositionDiagram cd = build_composition_diagram(outer, inner);
  const Magma& a = inner.a;

  bool crit_a = !split_extension_failure(outer.b, cd.z.sub, a, cd.g_alpha, cd.g_beta,
                                         cd.z.inclusion, cd.nu_prime);

  bool crit_b = true;
  for (int zi = 0; zi < cd.z.sub.order && crit_b; ++zi)
    for (int di = 0; di < outer.b.order && crit_b; ++di)
      for (int ai = 0; ai < a.order && crit_b; ++ai) {
        int mz = cd.z.inclusion(zi), bd = cd.g_beta(di);
        if (a.add(mz, a.add(bd, ai)) != a.add(a.add(mz, bd), ai)) crit_b = false;
      }

  Action h = associated_action(inner);
  bool crit_c = true;
  std::optional<std::array<int, 3>> witness;
  for (int yi = 0; yi < outer.x.order; ++yi)
    for (int di = 0; di < outer.b.order; ++di)
      for (int xi = 0; xi < inner.x.order; ++xi) {
        int my = outer.kappa(yi), dd = outer.beta(di);
        if (h.act(my, h.act(dd, xi)) != h.act(inner.b.add(my, dd), xi)) {
          crit_c = false;
          if (!witness) witness = std::array<int, 3>{yi, di, xi};
        }
      }

  if (crit_a != crit_b || crit_b != crit_c)
    throw std::logic_error("composability criteria disagree");
  return ComposabilityReport{crit_a, witness};
}

inline SplitExtension compose(const SplitExtension& outer, const SplitExtension& inner) {
  ComposabilityReport r = is_composable(outer, inner);
  if (!r.composable) {
    const auto& w = *r.witness;
    fail("NotComposable", {w[0], w[1], w[2]},
         "pair is not composable; action criterion fails at (y,d,x) = (" +
             std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]) +
             ")");
  }
  CompositionDiagram cd = build_composition_diagram(outer, inner);
  return validate_split_extension(outer.b, cd.z.sub, inner.a, cd.g_alpha, cd.g_beta,
                                  cd.z.inclusion, cd.nu_prime);
}

struct FirmClosureReport {
  bool inner_firm = false;
  bool outer_firm = false;
  bool composable = false;
  bool composite_firm = false;  // meaningful only when composable
};

// Checks the firmness closure facts: firm inner forces composability, and a
// firm pair has a firm composite. Violations abort as theorem failures.
inline FirmClosureReport check_firm_closure(const SplitExtension& outer,
                                            const SplitExtension& inner) {
  FirmClosureReport r;
  r.inner_firm = is_firm(associated_action(inner));
  r.outer_firm = is_firm(associated_action(outer));
  r.composable = is_composable(outer, inner).composable;
  if (r.inner_firm && !r.composable)
    throw std::logic_error("firm inner extension not composable");
  if (r.composable) {
    SplitExtension g = compose(outer, inner);
    r.composite_firm = is_firm(associated_action(g));
    if (r.inner_firm && r.outer_firm && !r.composite_firm)
      throw std::logic_error("firm pair with non-firm composite");
  }
  return r;
}

struct EppClosureReport {
  SplitEpiClass composite_class = SplitEpiClass::NotInE;
};

// E'' is closed under composition: both extensions firm and distributive
// forces the composite to be firm and distributive too.
inline EppClosureReport check_epp_closure(const SplitExtension& outer,
                                          const SplitExtension& inner) {
  if (classify_extension(outer) != SplitEpiClass::EPrimePrime ||
      classify_extension(inner) != SplitEpiClass::EPrimePrime)
    fail("PreconditionViolation", {}, "both extensions must classify as E''");
  SplitExtension g = compose(outer, inner);  // firm inner, so composable
  SplitEpiClass cls = classify_extension(g);
  if (cls != SplitEpiClass::EPrimePrime)
    throw std::logic_error("E'' pair with composite outside E'', contradicting 4.3(c)");
  return EppClosureReport{cls};
}

// Normal-form composability criterion: given an action of D on Y
// and an action of Y⋊D on X, composability is the equality
// (y,0)((0,d)x) = (y,d)x for all (y,d,x).
inline bool normal_form_composable(const Action& d_on_y, const Action& ydo_on_x) {
  const Magma& d = d_on_y.actor;
  const Magma& y = d_on_y.space;
  if (ydo_on_x.actor.order != y.order * d.order)
    fail("MiddleMismatch", {}, "actor of the inner action must be the pair carrier Y⋊D");
  for (int yi = 0; yi < y.order; ++yi)
    for (int di = 0; di < d.order; ++di)
      for (int xi = 0; xi < ydo_on_x.space.order; ++xi) {
        int y0 = pair_index(yi, 0, d.order);
        int zd = pair_index(0, di, d.order);
        int yd = pair_index(yi, di, d.order);
        if (ydo_on_x.act(y0, ydo_on_x.act(zd, xi)) != ydo_on_x.act(yd, xi)) return false;
      }
  return true;
}

}  // namespace magmakit

#endif  // MAGMAKIT_COMPOSITION_HPP
