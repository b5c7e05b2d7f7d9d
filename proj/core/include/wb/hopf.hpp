#pragma once

// Hopf comonads in the representable setting, where they are exactly
// bialgebras: the lax monoidal structure on -(x)H, the induced tensor
// product of comodules, convolution algebras, and validators for module
// monad strength data and for monoidality of lifted functors.

#include "wb/comodcat.hpp"
#include "wb/oplaxfun.hpp"
#include "wb/rng.hpp"
#include "wb/structures.hpp"

namespace wb {

// Lax monoidal data for Q = -(x)H derived from a bialgebra: the component
// of the lax pair at (K, K) is mult_H, the lax unit is unit_H, and the
// general component X(x)H(x)Y(x)H -> X(x)Y(x)H is the middle swap followed
// by mult_H (see lax_component).
struct HopfComonadData {
  FinBialgebra bialgebra;
  LinMap laxPair;  // H(x)H -> H, equal to mult_H
  LinMap laxUnit;  // K -> H, equal to unit_H
};

// The lax structure component Q(X)(x)Q(Y) -> Q(X(x)Y) for spaces of the
// given dimensions: (id_X (x) symmetry (x) id_H) ; (id_{X(x)Y} (x) mult_H).
LinMap lax_component(const FinBialgebra& h, int x_dim, int y_dim);

// Certifies that the bialgebra really is a Hopf comonad: validates the
// bialgebra axioms and then checks, on sampled space dimensions, that
// comultiplication and counit are monoidal with respect to lax_component.
// Invalid bialgebras are rejected with the failing axiom in the exception.
HopfComonadData hopf_from_bialgebra(const FinBialgebra& h, Rng& rng);

// Tensor product of comodules over a bialgebra:
// coaction = (rho_V (x) rho_W) ; (id_V (x) symmetry (x) id_H) ; (id (x) mult_H).
// The underlying space is exactly V(x)W, so the forgetful functor is strict
// monoidal by construction.
Comodule comodule_tensor(const FinBialgebra& h, const Comodule& v, const Comodule& w);

// The monoidal unit: K with coaction unit_H.
Comodule unit_comodule(const FinBialgebra& h);

// True iff mult_H ∘ symmetry = mult_H, i.e. the lax structure is symmetric.
bool check_symmetric_hopf(const FinBialgebra& h);

// Tensoring with a fixed comodule w is an oplax (in fact strict) comonad
// functor -(x)H-comodules to itself; its structure map H(x)W -> W(x)H is
// (id_W (x) mult) ∘ (symmetry (x) id_H) ∘ (id_H (x) coaction_w). Lifting a
// comodule along it recovers comodule_tensor(v, w) on the nose.
OplaxStructure comodule_tensor_oplax(const FinBialgebra& h, const Comodule& w);

// Hom(C, A) with the convolution product f*g = mult_A ∘ (f(x)g) ∘ comult_C
// and unit unit_A ∘ counit_C. Basis e_{ij} = (c_j |-> a_i) at flat index
// i*dim(C)+j, so the structure constants are deterministic.
struct ConvolutionAlgebra {
  FinCoalgebra coalg;
  FinAlgebra alg;
  FinAlgebra result;  // on a space of dimension dim(A)*dim(C)
};

ConvolutionAlgebra convolution_algebra(const FinCoalgebra& c, const FinAlgebra& a);

// Strength data for a Hopf Q-module monad in the representable setting
// M = -(x)A, Q = -(x)H, cotensor <X,Y> = X(x)Y*. The natural family
// t_{X,Y}: <X,Y>(x)A -> <MX,QY> is determined by its component at (K,K),
// a single map t0: A -> A(x)H*; check materializes the family from t0 on
// sampled dimensions and reports the residuals of the multiplication and
// unit coherence squares.
LinMap trivial_module_strength(const FinAlgebra& a, const FinBialgebra& h);
Report check_module_monad_strength(const LinMap& t0, const FinAlgebra& a,
                                   const FinBialgebra& h, Rng& rng);

// Monoidality of a lifted functor. W carries an algebra structure making
// F = -(x)W lax monoidal; b is an oplax structure for F between the comonads
// of two bialgebras. The operation evaluates both sides of the equivalence:
// (1) the monoidality equations for b as a transformation FQ -> OF,
//     b ∘ (unit_C (x) unit_W) = unit_W (x) unit_D and
//     b ∘ (mult_C (x) mult_W) ∘ swap = (mult_W (x) mult_D) ∘ swap ∘ (b (x) b);
// (2) on sampled comodule pairs, the comparison F(V)(x)F(V') -> F(V(x)V')
//     built from mult_W is a comodule morphism between the lifted tensors.
// Returns true iff (1) holds; the report records any disagreement with (2).
struct LaxMonoidalLiftResult {
  bool monoidal = false;
  Report report;
};
LaxMonoidalLiftResult check_lax_monoidal_lift(const FinBialgebra& source_h,
                                              const FinBialgebra& target_h,
                                              const FinAlgebra& w_alg, const LinMap& b,
                                              Rng& rng);

}  // namespace wb
