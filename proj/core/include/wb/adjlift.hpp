#pragma once

// Doctrinal adjunction and the adjoint lifting theorem, representably. The
// left adjoint is -(x)W, its right adjoint -(x)W^ for a chosen dual pairing;
// Kelly's bijection swaps oplax structures on the left for lax structures on
// the right, and the right adjoint of a lifted functor between comodule
// categories is computed as the equalizer of an explicit coreflexive pair.
// Mapping comodules, enriched homs, the LQR factorization, and strength
// validators all build on the same machinery.

#include "wb/comodcat.hpp"
#include "wb/hopf.hpp"
#include "wb/oplaxfun.hpp"
#include "wb/rng.hpp"
#include "wb/structures.hpp"

namespace wb {

// A dual pair: unit K -> W(x)W^ and counit W^(x)W -> K subject to the two
// triangle identities. The right space always has the same dimension.
struct AdjunctionData {
  Space left;     // W
  Space right;    // W^
  LinMap unit;    // K -> W(x)W^
  LinMap counit;  // W^(x)W -> K
};

Report validate_adjunction(const AdjunctionData& a);

// The coordinate dual pair: unit sum e_i(x)e_i^, counit the matching pairing.
AdjunctionData standard_adjunction(int dim);
// The standard pair twisted by an invertible g: unit' = (g(x)id)∘unit,
// counit' = counit∘(id(x)g^{-1}). Triangles survive the twist exactly.
AdjunctionData deformed_adjunction(int dim, const LinMap& g);

// Lax comonad functor structure on the right adjoint -(x)W^: the component
// bhat: W^(x)C -> D(x)W^ with the lax counit and comultiplication squares
//   (counit_D (x) id) ∘ bhat = id (x) counit_C
//   (comult_D (x) id) ∘ bhat = (id_D (x) bhat) ∘ (bhat (x) id_C) ∘ (id (x) comult_C).
struct LaxStructure {
  FinCoalgebra source;  // C, the comonad upstairs
  FinCoalgebra target;  // D
  Space carrier;        // W^
  LinMap bhat;          // W^(x)C -> D(x)W^
};

Report validate_lax(const LaxStructure& s);

// Kelly's bijection: wrap b in the dual pair (insert the unit, apply b,
// collapse with the counit) to get bhat, and back. The two directions are
// mutually inverse exactly, by the triangle identities.
LaxStructure kelly_oplax_to_lax(const AdjunctionData& adj, const OplaxStructure& s);
OplaxStructure kelly_lax_to_oplax(const AdjunctionData& adj, const LaxStructure& s);

// Right adjoint of the lifted functor at a comodule z over D: the equalizer
// inside the cofree comodule on Z(x)W^ of the pair (coaction-induced map,
// lax-structure map). The pair is coreflexive; the common retraction is
// id_Z (x) counit_D (x) id.
struct RightAdjointResult {
  Comodule object;   // comodule over the source comonad C
  LinMap inclusion;  // its space into the ambient Z(x)W^(x)C
};

RightAdjointResult lifted_right_adjoint(const AdjunctionData& adj, const OplaxStructure& s,
                                        const Comodule& z);

// The adjunction bijection, explicitly: a comodule morphism phi: lift(v) -> z
// corresponds to psi: v -> R(z) and back. Both directions are total on
// morphisms of the right shape; they are mutually inverse and natural, which
// certify_right_adjoint spot-checks on sampled comodules.
LinMap right_adjoint_transpose(const AdjunctionData& adj, const OplaxStructure& s,
                               const RightAdjointResult& r, const Comodule& v,
                               const Comodule& z, const LinMap& phi);
LinMap right_adjoint_untranspose(const AdjunctionData& adj, const OplaxStructure& s,
                                 const RightAdjointResult& r, const Comodule& v,
                                 const Comodule& z, const LinMap& psi);
Report certify_right_adjoint(const AdjunctionData& adj, const OplaxStructure& s,
                             const Comodule& z, const RightAdjointResult& r, Rng& rng,
                             int cases = 10);

// The mapping comodule <z, v>: right adjoint to v (x)_cog -, computed as an
// equalizer inside the cofree comodule on Z(x)V^(x)H. Works over any
// bialgebra; no commutativity is assumed anywhere.
struct MappingComodule {
  Comodule object;
  LinMap inclusion;  // into the ambient Z(x)V^(x)H
};

MappingComodule mapping_comodule(const FinBialgebra& h, const Comodule& z, const Comodule& v);

// Bijection Hom(v(x)w, z) = Hom(w, <z,v>), explicitly in both directions.
LinMap mapping_transpose(const FinBialgebra& h, const MappingComodule& m, const Comodule& v,
                         const Comodule& w, const Comodule& z, const LinMap& phi);
LinMap mapping_untranspose(const FinBialgebra& h, const MappingComodule& m, const Comodule& v,
                           const Comodule& w, const Comodule& z, const LinMap& psi);
Report certify_mapping_adjunction(const FinBialgebra& h, const Comodule& z, const Comodule& v,
                                  const MappingComodule& m, Rng& rng, int cases = 10);

// The enriched hom {w, z}: right adjoint to -(x)_cog w, obtained from the
// adjoint lifting machinery applied to the tensor-with-w oplax structure.
MappingComodule enriched_hom(const FinBialgebra& h, const Comodule& w, const Comodule& z);

LinMap enriched_transpose(const FinBialgebra& h, const MappingComodule& e, const Comodule& v,
                          const Comodule& w, const Comodule& z, const LinMap& phi);
LinMap enriched_untranspose(const FinBialgebra& h, const MappingComodule& e, const Comodule& v,
                            const Comodule& w, const Comodule& z, const LinMap& psi);

// Certifies the tensored-cotensored-enriched structure on sampled triples:
// equal hom dimensions, explicit mutually inverse bijections through both
// adjunctions, and one naturality square per variable.
Report verify_tce(const FinBialgebra& h, int triples, Rng& rng);

// The comonad LQR on the target category: carrier G = W^(x)C(x)W with
// comultiplication inserting the unit between the two legs of comult_C and
// counit collapsing counit_C with the pairing. The factorization runs
// through it: an oplax structure with carrier W into G, then one with
// trivial carrier from G to D, whose pasting returns b exactly.
struct FactorComonad {
  FinCoalgebra middle;     // G = W^(x)C(x)W
  OplaxStructure through;  // source comonad -> G, carrier W
  OplaxStructure collapse; // G -> target comonad, carrier K
  Report report;           // comonad axioms and the factorization equality
};

FactorComonad factor_comonad(const AdjunctionData& adj, const OplaxStructure& s);

// Strength data in module form: for the lax monoidal functor -(x)A, a
// strength on -(x)W is exactly a left action A(x)W -> W; the two coherence
// squares are the action axioms.
struct ModuleStrength {
  FinAlgebra acting;  // A
  Space carrier;      // W
  LinMap action;      // A(x)W -> W
};

Report check_strength(const ModuleStrength& s);

// Strong-adjunction squares for the dual pair (-(x)W, -(x)W^) when both
// carriers are strengthened over the same bialgebra H: the identity functor
// carries the counit character, duplication goes through comult_H, and the
// unit/counit of the adjunction must intertwine the composite actions.
Report check_strength_adjunction(const FinBialgebra& h, const ModuleStrength& left,
                                 const ModuleStrength& right, const AdjunctionData& adj);

// The strong-adjunction criterion for the tensor-cotensor adjunction
// -(x)_cog w -| {w,-} over comodules: the left strength is the strict one,
// the right strength is the canonical transpose of evaluation, optionally
// rescaled to produce a controlled failure. Reports whether the strong
// unit/counit squares hold and whether the two composite hom-object maps
// {v(x)w, y} -> {v, {w,y}} and back are mutually inverse; the two answers
// must agree (that is the criterion).
struct StrongAdjunctionResult {
  bool unit_square = false;
  bool counit_square = false;
  bool mutually_inverse = false;
  Report report;
};

StrongAdjunctionResult check_tensor_cotensor_strong(const FinBialgebra& h, const Comodule& w,
                                                    const Comodule& v, const Comodule& x,
                                                    const Comodule& y,
                                                    const Scalar& strength_scale = Scalar(1));

}  // namespace wb
