#include "wb/comodcat.hpp"

#include "wb/rng.hpp"
#include "wb/sampling.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

using namespace wb;

namespace {

// The one-dimensional comodule sitting in a single group degree.
Comodule group_line(const FinBialgebra& h, int degree) {
  return graded_comodule(h, {degree});
}

// Expresses whether a map lies in the span of a hom-space basis.
bool in_span(const HomSpace& hom, const LinMap& f) {
  LinMap joint(f.rows() * f.cols(), hom.space.dim + 1);
  for (int k = 0; k < hom.space.dim; ++k) {
    const LinMap flat = flatten(hom.basis[k]);
    for (int i = 0; i < flat.rows(); ++i) joint.at(i, k) = flat.at(i, 0);
  }
  const LinMap flat_f = flatten(f);
  for (int i = 0; i < flat_f.rows(); ++i) joint.at(i, hom.space.dim) = flat_f.at(i, 0);
  LinMap span_only(f.rows() * f.cols(), hom.space.dim);
  for (int k = 0; k < hom.space.dim; ++k)
    for (int i = 0; i < span_only.rows(); ++i) span_only.at(i, k) = joint.at(i, k);
  return rank(joint) == rank(span_only);
}

}  // namespace

TEST_CASE("comodule validator accepts trivial and regular coactions") {
  const FinBialgebra h = group_bialgebra_zn(2);
  // Trivial coaction: every vector sits in the unit degree.
  const Comodule trivial = graded_comodule(h, {0, 0, 0});
  CHECK(validate_comodule(trivial).ok());
  CHECK(validate_comodule(regular_comodule(h.coalgebra)).ok());

  const Comodule broken{h.coalgebra, Space{2}, LinMap::zero(4, 2)};
  const Report r = validate_comodule(broken);
  CHECK_FALSE(r.ok());
  CHECK(r.failures.front().law.find("counit") != std::string::npos);
}

TEST_CASE("cofree on the unit space is the regular comodule") {
  const FinCoalgebra c = truncated_power_coalgebra(3);
  const Comodule unit_cofree = cofree(c, Space{1});
  CHECK(unit_cofree.coaction == c.comult);
  CHECK(unit_cofree.space.dim == c.space.dim);

  const Comodule over_ground = cofree(ground_coalgebra(), Space{4});
  CHECK(over_ground.coaction == LinMap::identity(4));
}

TEST_CASE("cofree adjunction dimensions at a pure-degree line") {
  const FinBialgebra h = group_bialgebra_zn(2);
  for (int degree = 0; degree < 2; ++degree) {
    const Comodule line = group_line(h, degree);
    for (int x = 1; x <= 3; ++x) {
      const HomSpace hom = comodule_hom_space(line, cofree(h.coalgebra, Space{x}));
      CHECK(hom.space.dim == x * line.space.dim);
    }
  }
}

TEST_CASE("cofree transpose and untranspose are mutually inverse") {
  Rng rng(47);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;
  const Comodule v = sample_comodule(c, rng);
  const int x = 3;
  const LinMap phi = rng.matrix(x, v.space.dim);
  const LinMap psi = cofree_transpose(v, phi);
  CHECK(validate_comodule_morphism({v, cofree(c, Space{x}), psi}).ok());
  CHECK(cofree_untranspose(c, x, psi) == phi);

  // And in the other order, starting from a comodule morphism.
  const HomSpace hom = comodule_hom_space(v, cofree(c, Space{x}));
  for (const LinMap& m : hom.basis)
    CHECK(cofree_transpose(v, cofree_untranspose(c, x, m)) == m);
}

TEST_CASE("hom spaces detect grading obstructions") {
  const FinBialgebra h = group_bialgebra_zn(2);
  const Comodule line0 = group_line(h, 0);
  const Comodule line1 = group_line(h, 1);
  CHECK(comodule_hom_space(line0, line1).space.dim == 0);
  CHECK(comodule_hom_space(line0, line0).space.dim == 1);

  const Comodule reg = regular_comodule(h.coalgebra);
  const HomSpace endos = comodule_hom_space(reg, reg);
  CHECK(in_span(endos, LinMap::identity(2)));
  // Hom(K_triv, cofree(X)) recovers X.
  CHECK(comodule_hom_space(line0, cofree(h.coalgebra, Space{3})).space.dim == 3);
}

TEST_CASE("every hom basis element is an actual morphism") {
  Rng rng(53);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;
  const Comodule v = sample_comodule(c, rng);
  const Comodule w = sample_comodule(c, rng);
  const HomSpace hom = comodule_hom_space(v, w);
  for (const LinMap& m : hom.basis) CHECK(validate_comodule_morphism({v, w, m}).ok());
}

TEST_CASE("comodule equalizer of a trivial pair returns the source") {
  Rng rng(59);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;
  const Comodule v = sample_comodule(c, rng);
  const ComoduleMorphism f{v, v, LinMap::identity(v.space.dim)};
  const auto [e, incl] = comodule_equalizer(f, f);
  CHECK(e.space.dim == v.space.dim);
  CHECK(incl.map == LinMap::identity(v.space.dim));
  CHECK(e.coaction == v.coaction);
}

TEST_CASE("equalizer of identity and copy swap is the fixed group-like line") {
  const FinBialgebra h = group_bialgebra_zn(2);
  const Comodule two_lines = comodule_direct_sum(group_line(h, 0), group_line(h, 0));
  const LinMap swap{{0, 1}, {1, 0}};
  const ComoduleMorphism f{two_lines, two_lines, LinMap::identity(2)};
  const ComoduleMorphism g{two_lines, two_lines, swap};
  CHECK(validate_comodule_morphism(g).ok());
  const auto [e, incl] = comodule_equalizer(f, g);
  CHECK(e.space.dim == 1);
  CHECK(incl.map == LinMap{{1}, {1}});
  // The fixed line is group-like: it sits entirely in the unit degree.
  CHECK(e.coaction == LinMap{{1}, {0}});
  CHECK(validate_comodule_morphism(incl).ok());
}

TEST_CASE("equalizing a non-morphism pair is rejected, not silently computed") {
  // The literal degree swap on the regular comodule fixes the line through
  // the sum of the group-likes, but that line is not a subcomodule, so the
  // induced coaction cannot exist.
  const FinBialgebra h = group_bialgebra_zn(2);
  const Comodule reg = regular_comodule(h.coalgebra);
  const LinMap swap{{0, 1}, {1, 0}};
  CHECK_FALSE(validate_comodule_morphism({reg, reg, swap}).ok());
  const ComoduleMorphism f{reg, reg, LinMap::identity(2)};
  const ComoduleMorphism g{reg, reg, swap};
  CHECK_THROWS_AS(comodule_equalizer(f, g), MathError);
}

TEST_CASE("comodule products have block projections and additive hom spaces") {
  Rng rng(61);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;

  const ComoduleProduct empty = comodule_product({}, c);
  CHECK(empty.object.space.dim == 0);
  CHECK(validate_comodule(empty.object).ok());

  const Comodule v1 = sample_comodule(c, rng);
  const ComoduleProduct single = comodule_product({v1}, c);
  CHECK(single.object.coaction == v1.coaction);
  CHECK(single.projections.at(0).map == LinMap::identity(v1.space.dim));

  const Comodule v2 = sample_comodule(c, rng);
  const Comodule w = sample_comodule(c, rng);
  const ComoduleProduct prod = comodule_product({v1, v2}, c);
  CHECK(validate_comodule(prod.object).ok());
  for (const ComoduleMorphism& p : prod.projections) CHECK(validate_comodule_morphism(p).ok());
  const int into_product = comodule_hom_space(w, prod.object).space.dim;
  const int into_parts =
      comodule_hom_space(w, v1).space.dim + comodule_hom_space(w, v2).space.dim;
  CHECK(into_product == into_parts);
}

TEST_CASE("the action presentation coequalizes to the module itself") {
  Rng rng(67);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;
  const ModuleOverAlgebra m = wbtest::module_from_comodule(sample_comodule(c, rng));
  CHECK(validate_module(m).ok());
  const FinAlgebra& a = m.over;
  const int vd = m.space.dim;
  const int ad = a.space.dim;

  // Free modules on V(x)A and V, and the standard presentation pair.
  const ModuleOverAlgebra free_v{a, Space{vd * ad}, kron(LinMap::identity(vd), a.mult)};
  const ModuleOverAlgebra free_vaa{
      a, Space{vd * ad * ad}, kron(LinMap::identity(vd * ad), a.mult)};
  const ModuleMorphism mu{free_vaa, free_v, kron(LinMap::identity(vd), a.mult)};
  const ModuleMorphism act{free_vaa, free_v, kron(m.action, LinMap::identity(ad))};
  CHECK(validate_module_morphism(mu).ok());
  CHECK(validate_module_morphism(act).ok());

  const auto [q, proj] = module_coequalizer(mu, act);
  CHECK(q.space.dim == vd);
  CHECK(validate_module_morphism(proj).ok());
  // The canonical comparison V -> Q (insert the unit, project) is an
  // invertible module morphism, exhibiting the split coequalizer.
  const LinMap section = kron(LinMap::identity(vd), a.unit);
  const LinMap comparison = compose(proj.map, section);
  CHECK(inverse(comparison).has_value());
  CHECK(validate_module_morphism({m, q, comparison}).ok());
}

TEST_CASE("transported comodules remain comodules") {
  Rng rng(71);
  const FinCoalgebra c = sample_coalgebra(rng).coalgebra;
  const Comodule v = sample_comodule(c, rng);
  const Comodule moved = transport_comodule(v, rng.invertible(v.space.dim));
  CHECK(validate_comodule(moved).ok());
}
