#pragma once

// The category of right comodules over a coalgebra C (equivalently coalgebras
// for the comonad X -> X(x)C) and, dually, modules over an algebra: objects,
// morphism spaces, cofree/free constructions, and the small (co)limits the
// forgetful functors create.

#include "wb/exactlin.hpp"
#include "wb/structures.hpp"

#include <utility>
#include <vector>

namespace wb {

struct Comodule {
  FinCoalgebra over;
  Space space;
  LinMap coaction;  // V -> V(x)C
};

struct ModuleOverAlgebra {
  FinAlgebra over;
  Space space;
  LinMap action;  // V(x)A -> V
};

struct ComoduleMorphism {
  Comodule source, target;
  LinMap map;
};

struct ModuleMorphism {
  ModuleOverAlgebra source, target;
  LinMap map;
};

// Coaction coassociativity and the counit law, as residuals.
Report validate_comodule(const Comodule& v);
Report validate_module(const ModuleOverAlgebra& m);
// The intertwining square of a claimed (co)module morphism.
Report validate_comodule_morphism(const ComoduleMorphism& f);
Report validate_module_morphism(const ModuleMorphism& f);

// Cofree comodule on a space X: (X(x)C, id(x)comult). Right adjoint to the
// forgetful functor; the adjunction maps are cofree_transpose / cofree_untranspose.
Comodule cofree(const FinCoalgebra& c, Space x);

// Adjunction bijection Hom_Vect(V, X) = Hom_Cog(V, cofree(X)): a plain map
// phi: V -> X corresponds to the comodule morphism (phi(x)id_C)∘coaction_V,
// and back via postcomposing id_X(x)counit.
LinMap cofree_transpose(const Comodule& v, const LinMap& phi);
LinMap cofree_untranspose(const FinCoalgebra& c, int x_dim, const LinMap& psi);

// Basis (echelon-canonical) of the space of comodule morphisms v -> w.
struct HomSpace {
  Space space;
  std::vector<LinMap> basis;
};
HomSpace comodule_hom_space(const Comodule& v, const Comodule& w);

// Equalizer of a parallel pair of comodule morphisms: the underlying-space
// equalizer with the induced coaction. The coaction is obtained by factoring
// through inclusion(x)id_C, which certifies it is well defined.
std::pair<Comodule, ComoduleMorphism> comodule_equalizer(const ComoduleMorphism& f, const ComoduleMorphism& g);

// Finite product of comodules, realized as the direct sum with block-diagonal
// coaction; the projections are comodule morphisms.
struct ComoduleProduct {
  Comodule object;
  std::vector<ComoduleMorphism> projections;
};
ComoduleProduct comodule_product(const std::vector<Comodule>& vs, const FinCoalgebra& over);

// Coequalizer of a parallel pair of module morphisms: underlying quotient
// with the induced action (again certified by factoring).
std::pair<ModuleOverAlgebra, ModuleMorphism> module_coequalizer(const ModuleMorphism& f, const ModuleMorphism& g);

// Comodule transported along an invertible map p: V' -> V.
Comodule transport_comodule(const Comodule& v, const LinMap& p);

// The coalgebra as a right comodule over itself via its comultiplication.
Comodule regular_comodule(const FinCoalgebra& c);

}  // namespace wb
