#include "wb/comodcat.hpp"

namespace wb {

Report validate_comodule(const Comodule& v) {
  const int dv = v.space.dim;
  const int dc = v.over.space.dim;
  if (v.coaction.rows() != dv * dc || v.coaction.cols() != dv)
    throw ShapeError("coaction must be (dimV*dimC) x dimV, got " + v.coaction.str());
  Report report;
  report.require("coaction coassociativity",
                 compose(kron(v.coaction, LinMap::identity(dc)), v.coaction) -
                     compose(kron(LinMap::identity(dv), v.over.comult), v.coaction));
  report.require("coaction counit law",
                 compose(kron(LinMap::identity(dv), v.over.counit), v.coaction) - LinMap::identity(dv));
  return report;
}

Report validate_module(const ModuleOverAlgebra& m) {
  const int dv = m.space.dim;
  const int da = m.over.space.dim;
  if (m.action.rows() != dv || m.action.cols() != dv * da)
    throw ShapeError("action must be dimV x (dimV*dimA), got " + m.action.str());
  Report report;
  report.require("action associativity",
                 compose(m.action, kron(m.action, LinMap::identity(da))) -
                     compose(m.action, kron(LinMap::identity(dv), m.over.mult)));
  report.require("action unit law",
                 compose(m.action, kron(LinMap::identity(dv), m.over.unit)) - LinMap::identity(dv));
  return report;
}

Report validate_comodule_morphism(const ComoduleMorphism& f) {
  Report report;
  report.require("comodule intertwining",
                 compose(f.target.coaction, f.map) -
                     compose(kron(f.map, LinMap::identity(f.source.over.space.dim)), f.source.coaction));
  return report;
}

Report validate_module_morphism(const ModuleMorphism& f) {
  Report report;
  report.require("module intertwining",
                 compose(f.map, f.source.action) -
                     compose(f.target.action, kron(f.map, LinMap::identity(f.source.over.space.dim))));
  return report;
}

Comodule cofree(const FinCoalgebra& c, Space x) {
  return Comodule{c, Space{x.dim * c.space.dim}, kron(LinMap::identity(x.dim), c.comult)};
}

LinMap cofree_transpose(const Comodule& v, const LinMap& phi) {
  return compose(kron(phi, LinMap::identity(v.over.space.dim)), v.coaction);
}

LinMap cofree_untranspose(const FinCoalgebra& c, int x_dim, const LinMap& psi) {
  return compose(kron(LinMap::identity(x_dim), c.counit), psi);
}

HomSpace comodule_hom_space(const Comodule& v, const Comodule& w) {
  if (v.over.space.dim != w.over.space.dim || !(v.over.comult == w.over.comult))
    throw ShapeError("comodule_hom_space needs comodules over the same coalgebra");
  const int dc = v.over.space.dim;
  const LinMap system = matrix_of(
      [&](const LinMap& t) {
        return compose(w.coaction, t) - compose(kron(t, LinMap::identity(dc)), v.coaction);
      },
      w.space.dim, v.space.dim);
  const LinMap kernel = kernel_basis(system);
  HomSpace result;
  result.space = Space{kernel.cols()};
  for (int k = 0; k < kernel.cols(); ++k)
    result.basis.push_back(unflatten(kernel, k, w.space.dim, v.space.dim));
  return result;
}

std::pair<Comodule, ComoduleMorphism> comodule_equalizer(const ComoduleMorphism& f, const ComoduleMorphism& g) {
  if (f.source.space.dim != g.source.space.dim || f.target.space.dim != g.target.space.dim)
    throw ShapeError("comodule_equalizer needs a parallel pair");
  SubObject sub = equalizer(f.map, g.map);
  const LinMap& incl = sub.inclusion;
  const FinCoalgebra& c = f.source.over;
  // The kernel of a pair of comodule morphisms is a subcomodule, so the
  // coaction restricted to it factors through incl(x)id_C; the solver both
  // computes the restriction and certifies well-definedness.
  std::optional<LinMap> restricted =
      solve_factor(kron(incl, LinMap::identity(c.space.dim)), compose(f.source.coaction, incl));
  if (!restricted) throw MathError("comodule_equalizer: coaction does not restrict; inputs are not comodule morphisms");
  Comodule object{c, sub.space, *restricted};
  return {object, ComoduleMorphism{object, f.source, incl}};
}

ComoduleProduct comodule_product(const std::vector<Comodule>& vs, const FinCoalgebra& over) {
  const int dc = over.space.dim;
  int total = 0;
  for (const Comodule& v : vs) {
    if (v.over.space.dim != dc || !(v.over.comult == over.comult))
      throw ShapeError("comodule_product needs comodules over the same coalgebra");
    total += v.space.dim;
  }
  LinMap coaction(total * dc, total);
  std::vector<LinMap> inclusions, projections;
  int offset = 0;
  for (const Comodule& v : vs) {
    LinMap incl(total, v.space.dim), proj(v.space.dim, total);
    for (int i = 0; i < v.space.dim; ++i) {
      incl.at(offset + i, i) = 1;
      proj.at(i, offset + i) = 1;
    }
    coaction = coaction + compose(kron(incl, LinMap::identity(dc)), v.coaction, proj);
    inclusions.push_back(incl);
    projections.push_back(proj);
    offset += v.space.dim;
  }
  ComoduleProduct result;
  result.object = Comodule{over, Space{total}, coaction};
  for (size_t k = 0; k < vs.size(); ++k)
    result.projections.push_back(ComoduleMorphism{result.object, vs[k], projections[k]});
  return result;
}

std::pair<ModuleOverAlgebra, ModuleMorphism> module_coequalizer(const ModuleMorphism& f, const ModuleMorphism& g) {
  if (f.source.space.dim != g.source.space.dim || f.target.space.dim != g.target.space.dim)
    throw ShapeError("module_coequalizer needs a parallel pair");
  QuotientObject quot = coequalizer(f.map, g.map);
  const LinMap& proj = quot.projection;
  const FinAlgebra& a = f.target.over;
  // im(f - g) is a submodule, so the action descends to the quotient; the
  // cofactor solve certifies that.
  std::optional<LinMap> descended =
      solve_cofactor(kron(proj, LinMap::identity(a.space.dim)), compose(proj, f.target.action));
  if (!descended) throw MathError("module_coequalizer: action does not descend; inputs are not module morphisms");
  ModuleOverAlgebra object{a, quot.space, *descended};
  return {object, ModuleMorphism{f.target, object, proj}};
}

Comodule transport_comodule(const Comodule& v, const LinMap& p) {
  std::optional<LinMap> p_inv = inverse(p);
  if (!p_inv) throw MathError("transport_comodule needs an invertible map");
  return Comodule{v.over, Space{p.cols()},
                  compose(kron(*p_inv, LinMap::identity(v.over.space.dim)), v.coaction, p)};
}

Comodule regular_comodule(const FinCoalgebra& c) { return Comodule{c, c.space, c.comult}; }

}  // namespace wb
