#pragma once

// Oplax comonad functors in the representable class F = -(x)W between the
// comonads -(x)C and -(x)D, the bijection between such structures and
// liftings of F to comodule categories, and the lifting criterion for
// natural transformations. Everything here is a finite matrix computation.

#include "wb/comodcat.hpp"
#include "wb/rng.hpp"
#include "wb/structures.hpp"

#include <optional>

namespace wb {

// The single component b: C(x)W -> W(x)D of an oplax comonad functor
// structure on -(x)W. By naturality the component at a general X is
// id_X (x) b (up to the flat reindexing), so this matrix is the whole datum.
struct OplaxStructure {
  FinCoalgebra source;  // C
  FinCoalgebra target;  // D
  Space carrier;        // W
  LinMap b;             // C(x)W -> W(x)D
};

// A natural transformation -(x)W -> -(x)W' between two oplax functors that
// share source and target comonads; again one matrix carries everything.
struct NatTransData {
  OplaxStructure from;
  OplaxStructure to;
  LinMap a;  // W -> W'
};

// The two coherence squares: counit compatibility
//   (id_W (x) counit_D) ∘ b = symmetry ∘ (counit_C (x) id_W)
// and comultiplication compatibility
//   (b (x) id_D) ∘ (id_C (x) b) ∘ (comult_C (x) id_W) = (id_W (x) comult_D) ∘ b.
Report validate_oplax(const OplaxStructure& s);

// The identity oplax structure on -(x)K over C.
OplaxStructure identity_oplax(const FinCoalgebra& c);
// The forgetful-to-Vect structure: D = ground field, b = counit_C (x) id_W.
OplaxStructure forgetful_oplax(const FinCoalgebra& c, Space w);
// Pasting: first C -> E with carrier W1, then E -> D with carrier W2 gives
// C -> D with carrier W1(x)W2 and b = (id_W1 (x) b2) ∘ (b1 (x) id_W2).
OplaxStructure compose_oplax(const OplaxStructure& first, const OplaxStructure& second);
// Same comonads, carrier W(+)W', block-diagonal b under the distributivity
// permutations.
OplaxStructure direct_sum_oplax(const OplaxStructure& s1, const OplaxStructure& s2);
// Transport the carrier along an invertible p: W -> W'; p itself is then a
// lifting-compatible natural isomorphism between the two structures.
OplaxStructure conjugate_oplax(const OplaxStructure& s, const LinMap& p);

// The lifted functor on objects: (V(x)W, (coaction_V (x) id_W);(id_V (x) b)).
Comodule lift_comodule(const OplaxStructure& s, const Comodule& v);

// Inverse direction of the bijection: recover b from the coaction that a
// lifting assigns to cofree(K)(x)W. The coaction c: C(x)W -> C(x)W(x)D
// determines b = (counit_C (x) id_{W(x)D}) ∘ c, and lift-then-extract /
// extract-then-lift are exact identities.
OplaxStructure extract_oplax(const FinCoalgebra& source, const FinCoalgebra& target,
                             Space carrier, const LinMap& lifted_coaction);

struct ComonadFunctorResult {
  bool strong = false;                  // true iff b is invertible
  std::optional<LinMap> inverse;        // witness when strong
  std::optional<LinMap> kernel_vector;  // witness when not (a kernel column of b)
  // On a handful of random spaces X, the comparison morphism
  // lift(cofree(X)) -> cofree(F X), which is id_X (x) b, must be invertible
  // exactly when b is; any disagreement lands here.
  Report comparison;
};

// Decides whether the oplax structure is a strict comonad functor, i.e.
// whether its structure map is invertible, and cross-checks the equivalent
// comparison-morphism criterion on sampled spaces.
ComonadFunctorResult is_comonad_functor(const OplaxStructure& s, Rng& rng);

struct NtLiftResult {
  bool lifts = false;
  Report report;  // residual of the component equation, then spot checks
};

// Criterion for a natural transformation to lift to comodules:
// (a (x) id_D) ∘ b = b' ∘ (id_C (x) a). When it holds, id_V (x) a is a
// comodule morphism lift(V) -> lift'(V) for every V; the operation verifies
// the equivalence both ways on sampled comodules.
NtLiftResult nt_lifts(const NatTransData& n, Rng& rng);

}  // namespace wb
