#include "wb/adjlift.hpp"

#include "wb/sampling.hpp"

#include <string>
#include <utility>

namespace wb {

namespace {

LinMap id(int n) { return LinMap::identity(n); }

bool same_coalgebra(const FinCoalgebra& a, const FinCoalgebra& b) {
  return a.space.dim == b.space.dim && a.comult == b.comult && a.counit == b.counit;
}

void require_valid(const Report& r, const std::string& what) {
  if (!r.ok()) throw MathError(what + ": " + r.summary());
}

}  // namespace

Report validate_adjunction(const AdjunctionData& a) {
  const int w = a.left.dim;
  if (a.right.dim != w) throw ShapeError("dual pair must have equal dimensions");
  if (a.unit.rows() != w * w || a.unit.cols() != 1 || a.counit.rows() != 1 ||
      a.counit.cols() != w * w)
    throw ShapeError("adjunction unit/counit have the wrong shape");
  Report report;
  report.require("triangle on the left adjoint",
                 compose(kron(id(w), a.counit), kron(a.unit, id(w))) - id(w));
  report.require("triangle on the right adjoint",
                 compose(kron(a.counit, id(w)), kron(id(w), a.unit)) - id(w));
  return report;
}

AdjunctionData standard_adjunction(int dim) {
  LinMap unit(dim * dim, 1);
  LinMap counit(1, dim * dim);
  for (int i = 0; i < dim; ++i) {
    unit.at(flat_index(i, i, dim), 0) = 1;
    counit.at(0, flat_index(i, i, dim)) = 1;
  }
  return {Space{dim}, Space{dim}, std::move(unit), std::move(counit)};
}

AdjunctionData deformed_adjunction(int dim, const LinMap& g) {
  const auto g_inv = inverse(g);
  if (!g_inv) throw MathError("deformed_adjunction needs an invertible twist");
  AdjunctionData base = standard_adjunction(dim);
  LinMap unit = compose(kron(g, id(dim)), base.unit);
  LinMap counit = compose(base.counit, kron(id(dim), *g_inv));
  return {Space{dim}, Space{dim}, std::move(unit), std::move(counit)};
}

Report validate_lax(const LaxStructure& s) {
  const int c = s.source.space.dim;
  const int d = s.target.space.dim;
  const int w = s.carrier.dim;
  if (s.bhat.rows() != d * w || s.bhat.cols() != w * c)
    throw ShapeError("lax component must map W^(x)C to D(x)W^");
  Report report;
  report.require("lax counit square",
                 compose(kron(s.target.counit, id(w)), s.bhat) - kron(id(w), s.source.counit));
  const LinMap lhs = compose(kron(s.target.comult, id(w)), s.bhat);
  const LinMap rhs =
      compose(kron(id(d), s.bhat), kron(s.bhat, id(c)), kron(id(w), s.source.comult));
  report.require("lax comultiplication square", lhs - rhs);
  return report;
}

LaxStructure kelly_oplax_to_lax(const AdjunctionData& adj, const OplaxStructure& s) {
  require_valid(validate_adjunction(adj), "kelly_oplax_to_lax: bad adjunction");
  require_valid(validate_oplax(s), "kelly_oplax_to_lax: bad oplax structure");
  if (adj.left.dim != s.carrier.dim)
    throw ShapeError("kelly_oplax_to_lax: adjunction and carrier dimensions differ");
  const int c = s.source.space.dim;
  const int d = s.target.space.dim;
  const int w = adj.left.dim;
  // Insert the unit on the right, push b through the middle, close the pair
  // on the left: W^(x)C -> W^(x)C(x)W(x)W^ -> W^(x)W(x)D(x)W^ -> D(x)W^.
  LinMap bhat = compose(kron(adj.counit, id(d * w)), kron(id(w), s.b, id(w)),
                        kron(id(w * c), adj.unit));
  return {s.source, s.target, Space{w}, std::move(bhat)};
}

OplaxStructure kelly_lax_to_oplax(const AdjunctionData& adj, const LaxStructure& s) {
  require_valid(validate_adjunction(adj), "kelly_lax_to_oplax: bad adjunction");
  require_valid(validate_lax(s), "kelly_lax_to_oplax: bad lax structure");
  if (adj.right.dim != s.carrier.dim)
    throw ShapeError("kelly_lax_to_oplax: adjunction and carrier dimensions differ");
  const int c = s.source.space.dim;
  const int d = s.target.space.dim;
  const int w = adj.left.dim;
  LinMap b = compose(kron(id(w * d), adj.counit), kron(id(w), s.bhat, id(w)),
                     kron(adj.unit, id(c * w)));
  return {s.source, s.target, Space{w}, std::move(b)};
}

RightAdjointResult lifted_right_adjoint(const AdjunctionData& adj, const OplaxStructure& s,
                                        const Comodule& z) {
  if (!same_coalgebra(z.over, s.target))
    throw ShapeError("lifted_right_adjoint: comodule must be over the target comonad");
  const LaxStructure lax = kelly_oplax_to_lax(adj, s);  // also validates inputs
  const int c = s.source.space.dim;
  const int zd = z.space.dim;
  const int w = adj.left.dim;

  // Coreflexive pair on the cofree comodule over Z(x)W^: the coaction leg
  // and the lax-structure leg, both into the cofree comodule over
  // Z(x)D(x)W^. Their common retraction is id_Z(x)counit_D(x)id.
  const Comodule dom = cofree(s.source, Space{zd * w});
  const Comodule cod = cofree(s.source, Space{zd * z.over.space.dim * w});
  const LinMap leg_coaction = kron(z.coaction, id(w * c));
  const LinMap leg_lax =
      compose(kron(id(zd), lax.bhat, id(c)), kron(id(zd * w), s.source.comult));
  auto [object, inclusion] =
      comodule_equalizer({dom, cod, leg_coaction}, {dom, cod, leg_lax});
  return {std::move(object), inclusion.map};
}

LinMap right_adjoint_transpose(const AdjunctionData& adj, const OplaxStructure& s,
                               const RightAdjointResult& r, const Comodule& v,
                               const Comodule& z, const LinMap& phi) {
  const int c = s.source.space.dim;
  const int w = adj.left.dim;
  const int vd = v.space.dim;
  if (phi.rows() != z.space.dim || phi.cols() != vd * w)
    throw ShapeError("right_adjoint_transpose: morphism must map V(x)W to Z");
  // V -> V(x)W(x)W^ -> Z(x)W^, then the cofree transpose into the ambient,
  // then factor through the equalizer inclusion.
  const LinMap alpha = compose(kron(phi, id(w)), kron(id(vd), adj.unit));
  const LinMap chi = compose(kron(alpha, id(c)), v.coaction);
  auto psi = solve_factor(r.inclusion, chi);
  if (!psi)
    throw MathError("right_adjoint_transpose: image does not land in the equalizer; "
                    "an input structure is invalid");
  return *psi;
}

LinMap right_adjoint_untranspose(const AdjunctionData& adj, const OplaxStructure& s,
                                 const RightAdjointResult& r, const Comodule& v,
                                 const Comodule& z, const LinMap& psi) {
  const int c = s.source.space.dim;
  const int w = adj.left.dim;
  const int zd = z.space.dim;
  if (psi.rows() != r.object.space.dim || psi.cols() != v.space.dim)
    throw ShapeError("right_adjoint_untranspose: morphism must map V to the adjoint object");
  const LinMap chi = compose(r.inclusion, psi);
  const LinMap alpha_bar = compose(kron(id(zd * w), s.source.counit), chi);
  return compose(kron(id(zd), adj.counit), kron(alpha_bar, id(w)));
}

Report certify_right_adjoint(const AdjunctionData& adj, const OplaxStructure& s,
                             const Comodule& z, const RightAdjointResult& r, Rng& rng,
                             int cases) {
  Report report;
  for (int i = 0; i < cases; ++i) {
    const std::string tag = "case " + std::to_string(i) + ": ";
    const Comodule v = sample_comodule(s.source, rng);
    const Comodule fv = lift_comodule(s, v);
    const HomSpace upstairs = comodule_hom_space(fv, z);
    const HomSpace downstairs = comodule_hom_space(v, r.object);
    if (upstairs.space.dim != downstairs.space.dim) {
      report.require(tag + "hom dimensions differ", LinMap::scalar(1));
      continue;
    }
    for (const LinMap& phi : upstairs.basis) {
      const LinMap psi = right_adjoint_transpose(adj, s, r, v, z, phi);
      report.merge(validate_comodule_morphism({v, r.object, psi}), tag + "transpose: ");
      report.require(tag + "round trip through the adjoint",
                     right_adjoint_untranspose(adj, s, r, v, z, psi) - phi);
    }
    for (const LinMap& psi : downstairs.basis) {
      const LinMap phi = right_adjoint_untranspose(adj, s, r, v, z, psi);
      report.merge(validate_comodule_morphism({fv, z, phi}), tag + "untranspose: ");
      report.require(tag + "round trip through the lift",
                     right_adjoint_transpose(adj, s, r, v, z, phi) - psi);
    }
    // Naturality in V along a sampled morphism v' -> v.
    const Comodule vp = sample_comodule(s.source, rng);
    const HomSpace maps = comodule_hom_space(vp, v);
    if (!maps.basis.empty() && !upstairs.basis.empty()) {
      LinMap f = LinMap::zero(v.space.dim, vp.space.dim);
      for (const LinMap& basis_map : maps.basis) f = f + basis_map * rng.small_scalar();
      const LinMap& phi = upstairs.basis.front();
      const LinMap lhs = right_adjoint_transpose(
          adj, s, r, vp, z, compose(phi, kron(f, id(adj.left.dim))));
      const LinMap rhs = compose(right_adjoint_transpose(adj, s, r, v, z, phi), f);
      report.require(tag + "naturality in the comodule variable", lhs - rhs);
    }
  }
  return report;
}

MappingComodule mapping_comodule(const FinBialgebra& h, const Comodule& z, const Comodule& v) {
  if (!same_coalgebra(z.over, h.coalgebra) || !same_coalgebra(v.over, h.coalgebra))
    throw ShapeError("mapping_comodule: comodules must live over the given bialgebra");
  const int dh = h.dim();
  const int zd = z.space.dim;
  const int vd = v.space.dim;

  // The mate B: Z(x)V^(x)H -> Z(x)H(x)V^ of the H-action on V(x)- built
  // from the coaction of v, through the plain dual pair on V. No
  // commutativity of H is used anywhere.
  const AdjunctionData dual = standard_adjunction(vd);
  // eta at Z(x)V^(x)H: insert the pair and rotate V to the front.
  const int mid = zd * vd * dh;  // dim of Z(x)V^(x)H
  const LinMap eta =
      compose(kron(symmetry(mid, vd), id(vd)), kron(id(mid), dual.unit));
  // The action leg V(x)(Z(x)V^)(x)H -> V(x)(Z(x)V^)(x)H, tensored with V^.
  const LinMap action =
      compose(kron(id(vd * zd * vd), h.mult()), kron(id(vd), symmetry(dh, zd * vd), id(dh)),
              kron(v.coaction, id(zd * vd * dh)));
  const LinMap action_leg = kron(action, id(vd));
  // Evaluation leg: collapse V against the dual copy sitting after Z.
  const LinMap eval_pairing = compose(dual.counit, symmetry(vd, vd));  // V(x)V^ -> K
  const LinMap eps =
      compose(kron(id(zd), eval_pairing), kron(symmetry(vd, zd), id(vd)));  // V(x)Z(x)V^ -> Z
  const LinMap collapse = kron(eps, id(dh * vd));
  const LinMap mate = compose(collapse, action_leg, eta);  // Z(x)V^(x)H -> Z(x)H(x)V^

  const Comodule dom = cofree(h.coalgebra, Space{zd * vd});
  const Comodule cod = cofree(h.coalgebra, Space{zd * dh * vd});
  const LinMap leg_coaction = kron(z.coaction, id(vd * dh));
  const LinMap leg_mate = compose(kron(mate, id(dh)), kron(id(zd * vd), h.comult()));
  auto [object, inclusion] =
      comodule_equalizer({dom, cod, leg_coaction}, {dom, cod, leg_mate});
  return {std::move(object), inclusion.map};
}

LinMap mapping_transpose(const FinBialgebra& h, const MappingComodule& m, const Comodule& v,
                         const Comodule& w, const Comodule& z, const LinMap& phi) {
  const int vd = v.space.dim;
  const int wd = w.space.dim;
  if (phi.rows() != z.space.dim || phi.cols() != vd * wd)
    throw ShapeError("mapping_transpose: morphism must map V(x)W to Z");
  const AdjunctionData dual = standard_adjunction(vd);
  // W -> V(x)W(x)V^ by inserting the pair and moving W inside, then apply
  // phi, then the cofree transpose and the equalizer factorization.
  const LinMap insert =
      compose(kron(id(vd), symmetry(vd, wd)), kron(dual.unit, id(wd)));
  const LinMap phi_tilde = compose(kron(phi, id(vd)), insert);  // W -> Z(x)V^
  const LinMap chi = compose(kron(phi_tilde, id(h.dim())), w.coaction);
  auto psi = solve_factor(m.inclusion, chi);
  if (!psi)
    throw MathError("mapping_transpose: image does not land in the equalizer; "
                    "an input structure is invalid");
  return *psi;
}

LinMap mapping_untranspose(const FinBialgebra& h, const MappingComodule& m, const Comodule& v,
                           const Comodule& w, const Comodule& z, const LinMap& psi) {
  const int vd = v.space.dim;
  const int zd = z.space.dim;
  if (psi.rows() != m.object.space.dim || psi.cols() != w.space.dim)
    throw ShapeError("mapping_untranspose: morphism must map W to the mapping comodule");
  const AdjunctionData dual = standard_adjunction(vd);
  const LinMap chi = compose(m.inclusion, psi);
  const LinMap phi_tilde = compose(kron(id(zd * vd), h.counit()), chi);  // W -> Z(x)V^
  const LinMap eval_pairing = compose(dual.counit, symmetry(vd, vd));
  const LinMap eps =
      compose(kron(id(zd), eval_pairing), kron(symmetry(vd, zd), id(vd)));  // V(x)Z(x)V^ -> Z
  return compose(eps, kron(id(vd), phi_tilde));
}

Report certify_mapping_adjunction(const FinBialgebra& h, const Comodule& z, const Comodule& v,
                                  const MappingComodule& m, Rng& rng, int cases) {
  Report report;
  for (int i = 0; i < cases; ++i) {
    const std::string tag = "case " + std::to_string(i) + ": ";
    const Comodule w = sample_comodule(h.coalgebra, rng);
    const Comodule vw = comodule_tensor(h, v, w);
    const HomSpace upstairs = comodule_hom_space(vw, z);
    const HomSpace downstairs = comodule_hom_space(w, m.object);
    if (upstairs.space.dim != downstairs.space.dim) {
      report.require(tag + "hom dimensions differ", LinMap::scalar(1));
      continue;
    }
    for (const LinMap& phi : upstairs.basis) {
      const LinMap psi = mapping_transpose(h, m, v, w, z, phi);
      report.merge(validate_comodule_morphism({w, m.object, psi}), tag + "transpose: ");
      report.require(tag + "round trip through the mapping comodule",
                     mapping_untranspose(h, m, v, w, z, psi) - phi);
    }
    for (const LinMap& psi : downstairs.basis) {
      const LinMap phi = mapping_untranspose(h, m, v, w, z, psi);
      report.merge(validate_comodule_morphism({vw, z, phi}), tag + "untranspose: ");
      report.require(tag + "round trip through the tensor",
                     mapping_transpose(h, m, v, w, z, phi) - psi);
    }
  }
  return report;
}

MappingComodule enriched_hom(const FinBialgebra& h, const Comodule& w, const Comodule& z) {
  const RightAdjointResult r =
      lifted_right_adjoint(standard_adjunction(w.space.dim), comodule_tensor_oplax(h, w), z);
  return {r.object, r.inclusion};
}

LinMap enriched_transpose(const FinBialgebra& h, const MappingComodule& e, const Comodule& v,
                          const Comodule& w, const Comodule& z, const LinMap& phi) {
  const RightAdjointResult r{e.object, e.inclusion};
  return right_adjoint_transpose(standard_adjunction(w.space.dim), comodule_tensor_oplax(h, w),
                                 r, v, z, phi);
}

LinMap enriched_untranspose(const FinBialgebra& h, const MappingComodule& e, const Comodule& v,
                            const Comodule& w, const Comodule& z, const LinMap& psi) {
  const RightAdjointResult r{e.object, e.inclusion};
  return right_adjoint_untranspose(standard_adjunction(w.space.dim), comodule_tensor_oplax(h, w),
                                   r, v, z, psi);
}

Report verify_tce(const FinBialgebra& h, int triples, Rng& rng) {
  Report report;
  for (int i = 0; i < triples; ++i) {
    const std::string tag = "triple " + std::to_string(i) + ": ";
    const Comodule v = sample_comodule(h.coalgebra, rng);
    const Comodule w = sample_comodule(h.coalgebra, rng);
    const Comodule z = sample_comodule(h.coalgebra, rng);
    const Comodule vw = comodule_tensor(h, v, w);

    const MappingComodule cot = mapping_comodule(h, z, v);
    const MappingComodule enr = enriched_hom(h, w, z);

    const HomSpace hom_tensor = comodule_hom_space(vw, z);
    const HomSpace hom_cot = comodule_hom_space(w, cot.object);
    const HomSpace hom_enr = comodule_hom_space(v, enr.object);
    if (hom_tensor.space.dim != hom_cot.space.dim || hom_tensor.space.dim != hom_enr.space.dim) {
      report.require(tag + "hom dimensions differ", LinMap::scalar(1));
      continue;
    }

    // Both adjunction bijections, mutually inverse on the whole basis.
    for (const LinMap& phi : hom_tensor.basis) {
      const LinMap psi = mapping_transpose(h, cot, v, w, z, phi);
      report.require(tag + "cotensor round trip", mapping_untranspose(h, cot, v, w, z, psi) - phi);
      const LinMap theta = enriched_transpose(h, enr, v, w, z, phi);
      report.require(tag + "enriched round trip",
                     enriched_untranspose(h, enr, v, w, z, theta) - phi);
    }
    for (const LinMap& psi : hom_cot.basis)
      report.require(tag + "cotensor reverse round trip",
                     mapping_transpose(h, cot, v, w, z, mapping_untranspose(h, cot, v, w, z, psi)) -
                         psi);
    for (const LinMap& theta : hom_enr.basis)
      report.require(
          tag + "enriched reverse round trip",
          enriched_transpose(h, enr, v, w, z, enriched_untranspose(h, enr, v, w, z, theta)) -
              theta);

    if (hom_tensor.basis.empty()) continue;
    const LinMap& phi = hom_tensor.basis.front();

    // One naturality square per variable. In w and v the morphism is a
    // random element of a hom space; in z a direct-sum inclusion, which
    // always exists.
    const Comodule wp = sample_comodule(h.coalgebra, rng);
    const HomSpace w_maps = comodule_hom_space(wp, w);
    if (!w_maps.basis.empty()) {
      LinMap f = LinMap::zero(w.space.dim, wp.space.dim);
      for (const LinMap& b : w_maps.basis) f = f + b * rng.small_scalar();
      const LinMap lhs =
          mapping_transpose(h, cot, v, wp, z, compose(phi, kron(id(v.space.dim), f)));
      const LinMap rhs = compose(mapping_transpose(h, cot, v, w, z, phi), f);
      report.require(tag + "naturality in w", lhs - rhs);
    }
    const Comodule vp = sample_comodule(h.coalgebra, rng);
    const HomSpace v_maps = comodule_hom_space(vp, v);
    if (!v_maps.basis.empty()) {
      LinMap g = LinMap::zero(v.space.dim, vp.space.dim);
      for (const LinMap& b : v_maps.basis) g = g + b * rng.small_scalar();
      const LinMap lhs =
          enriched_transpose(h, enr, vp, w, z, compose(phi, kron(g, id(w.space.dim))));
      const LinMap rhs = compose(enriched_transpose(h, enr, v, w, z, phi), g);
      report.require(tag + "naturality in v", lhs - rhs);
    }
    {
      const Comodule zp = sample_comodule(h.coalgebra, rng);
      const Comodule zz = comodule_direct_sum(z, zp);
      LinMap incl = LinMap::zero(zz.space.dim, z.space.dim);
      for (int k = 0; k < z.space.dim; ++k) incl.at(k, k) = 1;
      const MappingComodule cot2 = mapping_comodule(h, zz, v);
      const LinMap lhs = mapping_transpose(h, cot2, v, w, zz, compose(incl, phi));
      // The functorial action <incl, v> on the mapping comodules.
      const LinMap ev = mapping_untranspose(h, cot, v, cot.object, z, id(cot.object.space.dim));
      const LinMap induced =
          mapping_transpose(h, cot2, v, cot.object, zz, compose(incl, ev));
      const LinMap rhs = compose(induced, mapping_transpose(h, cot, v, w, z, phi));
      report.require(tag + "naturality in z", lhs - rhs);
    }
  }
  return report;
}

FactorComonad factor_comonad(const AdjunctionData& adj, const OplaxStructure& s) {
  require_valid(validate_adjunction(adj), "factor_comonad: bad adjunction");
  require_valid(validate_oplax(s), "factor_comonad: bad oplax structure");
  if (adj.left.dim != s.carrier.dim)
    throw ShapeError("factor_comonad: adjunction and carrier dimensions differ");
  const int c = s.source.space.dim;
  const int d = s.target.space.dim;
  const int w = adj.left.dim;
  const int g = w * c * w;  // dim of G = W^(x)C(x)W

  // Comonad structure on G: comultiply the middle and insert the pair
  // between the two copies; the counit collapses everything.
  LinMap comult = compose(kron(id(w * c), adj.unit, id(c * w)),
                          kron(id(w), s.source.comult, id(w)));
  LinMap counit = compose(adj.counit, kron(id(w), s.source.counit, id(w)));
  FinCoalgebra middle{Space{g}, std::move(comult), std::move(counit)};

  FactorComonad out{middle,
                    {s.source, middle, Space{w}, kron(adj.unit, id(c * w))},
                    {middle, s.target, Space{1},
                     compose(kron(adj.counit, id(d)), kron(id(w), s.b))},
                    {}};
  out.report.merge(validate_coalgebra(out.middle), "middle comonad: ");
  out.report.merge(validate_oplax(out.through), "first factor: ");
  out.report.merge(validate_oplax(out.collapse), "second factor: ");
  out.report.require("factorization equality",
                     compose_oplax(out.through, out.collapse).b - s.b);
  return out;
}

Report check_strength(const ModuleStrength& s) {
  const int a = s.acting.space.dim;
  const int w = s.carrier.dim;
  if (s.action.rows() != w || s.action.cols() != a * w)
    throw ShapeError("strength must map A(x)W to W");
  Report report;
  report.require("strength multiplication square",
                 compose(s.action, kron(s.acting.mult, id(w))) -
                     compose(s.action, kron(id(a), s.action)));
  report.require("strength unit square", compose(s.action, kron(s.acting.unit, id(w))) - id(w));
  return report;
}

Report check_strength_adjunction(const FinBialgebra& h, const ModuleStrength& left,
                                 const ModuleStrength& right, const AdjunctionData& adj) {
  const int dh = h.dim();
  const int w = adj.left.dim;
  if (left.acting.space.dim != dh || right.acting.space.dim != dh)
    throw ShapeError("both strengths must act through the given bialgebra");
  if (left.carrier.dim != w || right.carrier.dim != adj.right.dim)
    throw ShapeError("strength carriers must match the adjunction");

  Report report;
  report.merge(check_strength(left), "left strength: ");
  report.merge(check_strength(right), "right strength: ");

  // Composite actions on W(x)W^ and W^(x)W: share the bialgebra element
  // through comult, then act on both factors.
  const LinMap t_rl =
      compose(kron(left.action, right.action), kron(id(dh), symmetry(dh, w), id(w)));
  const LinMap t_lr =
      compose(kron(right.action, left.action), kron(id(dh), symmetry(dh, w), id(w)));

  // The identity functor carries the counit character, so a strong unit
  // means acting after the unit map equals forgetting the element first.
  const LinMap unit_lhs = compose(t_rl, kron(id(dh * dh), adj.unit), h.comult());
  const LinMap unit_rhs = compose(adj.unit, h.counit());
  report.require("strong unit square", unit_lhs - unit_rhs);

  const LinMap counit_lhs = compose(adj.counit, t_lr, kron(h.comult(), id(w * w)));
  const LinMap counit_rhs = kron(h.counit(), adj.counit);
  report.require("strong counit square", counit_lhs - counit_rhs);
  return report;
}

StrongAdjunctionResult check_tensor_cotensor_strong(const FinBialgebra& h, const Comodule& w,
                                                    const Comodule& v, const Comodule& x,
                                                    const Comodule& y,
                                                    const Scalar& strength_scale) {
  StrongAdjunctionResult out;
  const int wd = w.space.dim;

  // Building blocks: L = -(x)w, R = {w,-}, with evaluation and unit maps
  // pulled out of the enriched-hom adjunction.
  const auto L = [&](const Comodule& t) { return comodule_tensor(h, t, w); };
  const auto R = [&](const Comodule& t) { return enriched_hom(h, w, t); };
  const auto evaluation = [&](const MappingComodule& rt, const Comodule& t) {
    return enriched_untranspose(h, rt, rt.object, w, t, id(rt.object.space.dim));
  };

  // The canonical strength sigma_{S,T}: S(x){w,T} -> {w, S(x)T} as the
  // transpose of id_S (x) ev_T, optionally rescaled to force a failure.
  const auto sigma = [&](const Comodule& s_mod, const Comodule& t, const MappingComodule& rt,
                         const MappingComodule& rst) {
    const LinMap ev = evaluation(rt, t);
    const LinMap body = kron(id(s_mod.space.dim), ev);
    const Comodule source = comodule_tensor(h, s_mod, rt.object);
    const Comodule target = comodule_tensor(h, s_mod, t);
    return enriched_transpose(h, rst, source, w, target, body) * strength_scale;
  };

  const Comodule lx = L(x);
  const Comodule vx = comodule_tensor(h, v, x);

  // Strong unit square at (v, x): the unit of v(x)x equals the strength
  // after the unit of x.
  {
    const MappingComodule rl_vx = R(L(vx));
    const LinMap eta_vx =
        enriched_transpose(h, rl_vx, vx, w, L(vx), id(vx.space.dim * wd));
    const MappingComodule rlx = R(lx);
    const LinMap eta_x = enriched_transpose(h, rlx, x, w, lx, id(x.space.dim * wd));
    const LinMap sig = sigma(v, lx, rlx, rl_vx);
    const LinMap rhs = compose(sig, kron(id(v.space.dim), eta_x));
    const LinMap residual = eta_vx - rhs;
    out.unit_square = residual.is_zero();
    out.report.require("strong unit square", residual);
  }

  // Strong counit square at (v, y): evaluating after the strength equals
  // evaluating the second factor alone.
  {
    const MappingComodule ry = R(y);
    const Comodule vy = comodule_tensor(h, v, y);
    const MappingComodule r_vy = R(vy);
    const LinMap sig = sigma(v, y, ry, r_vy);
    const LinMap lhs = compose(evaluation(r_vy, vy), kron(sig, id(wd)));
    const LinMap rhs = kron(id(v.space.dim), evaluation(ry, y));
    const LinMap residual = lhs - rhs;
    out.counit_square = residual.is_zero();
    out.report.require("strong counit square", residual);
  }

  // The two composite hom-object maps {Lx,y} -> {x,Ry} and back.
  {
    const MappingComodule ry = R(y);
    const MappingComodule rlx = R(lx);
    const MappingComodule e_left = enriched_hom(h, lx, y);       // {Lx, y}
    const MappingComodule e_right = enriched_hom(h, x, ry.object);  // {x, Ry}

    const LinMap ev_left = enriched_untranspose(h, e_left, e_left.object, lx, y,
                                                id(e_left.object.space.dim));
    const LinMap eta_x = enriched_transpose(h, rlx, x, w, lx, id(x.space.dim * wd));

    // alpha: apply R through the strength, then precompose with the unit.
    const MappingComodule e_mid = enriched_hom(h, rlx.object, ry.object);  // {RLx, Ry}
    const LinMap r_hat = [&] {
      // S(x)RLx -> {w, S(x)Lx} -> {w, y} = Ry, transposed into {RLx, Ry}.
      const Comodule s_mod = e_left.object;
      const Comodule s_lx = comodule_tensor(h, s_mod, lx);
      const MappingComodule r_slx = R(s_lx);
      const LinMap sig = sigma(s_mod, lx, rlx, r_slx);
      const LinMap r_of_ev = enriched_transpose(
          h, ry, r_slx.object, w, y, compose(ev_left, evaluation(r_slx, s_lx)));
      return enriched_transpose(h, e_mid, s_mod, rlx.object, ry.object,
                                compose(r_of_ev, sig));
    }();
    const LinMap ev_mid = enriched_untranspose(h, e_mid, e_mid.object, rlx.object, ry.object,
                                               id(e_mid.object.space.dim));
    const LinMap precompose_eta = enriched_transpose(
        h, e_right, e_mid.object, x, ry.object,
        compose(ev_mid, kron(id(e_mid.object.space.dim), eta_x)));
    const LinMap alpha = compose(precompose_eta, r_hat);

    // beta: apply L strictly, then postcompose with the counit.
    const Comodule lry = L(ry.object);
    const MappingComodule e_llx = enriched_hom(h, lx, lry);  // {Lx, LRy}
    const LinMap ev_right = enriched_untranspose(h, e_right, e_right.object, x, ry.object,
                                                 id(e_right.object.space.dim));
    const LinMap l_hat = enriched_transpose(h, e_llx, e_right.object, lx, lry,
                                            kron(ev_right, id(wd)));
    const LinMap ev_llx = enriched_untranspose(h, e_llx, e_llx.object, lx, lry,
                                               id(e_llx.object.space.dim));
    const LinMap postcompose_eps = enriched_transpose(
        h, e_left, e_llx.object, lx, y, compose(evaluation(ry, y), ev_llx));
    const LinMap beta = compose(postcompose_eps, l_hat);

    const LinMap round_left = compose(beta, alpha) - id(e_left.object.space.dim);
    const LinMap round_right = compose(alpha, beta) - id(e_right.object.space.dim);
    out.mutually_inverse = round_left.is_zero() && round_right.is_zero();
    out.report.require("composite {Lx,y} -> {x,Ry} -> {Lx,y}", round_left);
    out.report.require("composite {x,Ry} -> {Lx,y} -> {x,Ry}", round_right);
  }

  // The criterion itself: squares pass exactly when the composites are
  // mutually inverse.
  if ((out.unit_square && out.counit_square) != out.mutually_inverse)
    out.report.require("strong-adjunction criterion disagreement", LinMap::scalar(1));
  return out;
}

}  // namespace wb
