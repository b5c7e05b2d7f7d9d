#pragma once

// Bounded chain complexes over the rationals with homological (lowering)
// differentials and the Koszul sign rule, dg comodules over a bialgebra
// concentrated in degree 0, and the transfer comparison between dg and
// graded mapping comodules.

#include "wb/adjlift.hpp"
#include "wb/comodcat.hpp"
#include "wb/hopf.hpp"
#include "wb/rng.hpp"
#include "wb/structures.hpp"

#include <vector>

namespace wb {

// Degrees run over [min_deg, max_deg]; dims[k] is the dimension in degree
// min_deg + k and diffs[k] is d: X_{min_deg+k} -> X_{min_deg+k-1}, so
// diffs[0] has zero rows. Accessors pad with zero maps outside the window,
// which keeps boundary cases uniform.
struct ChainComplex {
  int min_deg = 0;
  int max_deg = -1;  // empty complex by default
  std::vector<int> dims;
  std::vector<LinMap> diffs;

  int length() const { return max_deg - min_deg + 1; }
  int dim_at(int n) const;
  LinMap d_at(int n) const;  // zero map of the right shape outside the range
  int total_dim() const;
};

struct GradedModule {
  int min_deg = 0;
  int max_deg = -1;
  std::vector<int> dims;

  int dim_at(int n) const;
};

// All dims zero in [lo, hi]; the empty complex when hi < lo.
ChainComplex zero_complex(int lo, int hi);
// K concentrated in degree n ("sphere") and the contractible complex
// K -> K in degrees n, n-1 ("disk").
ChainComplex sphere_complex(int n);
ChainComplex disk_complex(int n);

Report validate_complex(const ChainComplex& x);

// (X(x)Y)_n = sum over p of X_p (x) Y_{n-p}, blocks in ascending p, with
// d(x(x)y) = dx(x)y + (-1)^p x(x)dy.
ChainComplex tensor_complex(const ChainComplex& x, const ChainComplex& y);

// [X,Y]_n = sum over p of Hom(X_p, Y_{p+n}) with blocks in ascending p,
// each Hom space flattened row-major; d(f) = d_Y∘f - (-1)^n f∘d_X.
ChainComplex hom_complex(const ChainComplex& x, const ChainComplex& y);

GradedModule forget_to_graded(const ChainComplex& x);

// Basis of degree-0 chain maps x -> y, each given as the per-degree list of
// blocks f_n: X_n -> Y_n. Used as the independent oracle against the
// degree-0 cycles of hom_complex.
std::vector<std::vector<LinMap>> chain_maps_basis(const ChainComplex& x, const ChainComplex& y);

// The signed symmetry X(x)Y -> Y(x)X, componentwise (-1)^{pq} times the
// block swap; a chain map and an involution.
LinMap signed_symmetry_at(const ChainComplex& x, const ChainComplex& y, int n);

// A comodule in chain complexes over a bialgebra concentrated in degree 0:
// per-degree coactions forming a chain map V -> V(x)H.
struct DgComodule {
  FinBialgebra over;
  ChainComplex complex;
  std::vector<LinMap> coactions;  // coactions[k]: V_{min+k} -> V_{min+k}(x)H

  Comodule component(int n) const;  // plain comodule in degree n
};

Report validate_dg_comodule(const DgComodule& v);

DgComodule dg_unit_comodule(const FinBialgebra& h);
// Blockwise comodule_tensor with the Koszul-signed differential.
DgComodule dg_comodule_tensor(const FinBialgebra& h, const DgComodule& v, const DgComodule& w);

// Degree-0 chain maps that are comodule morphisms in every degree, as an
// echelon-canonical basis of flattened block lists.
struct DgHomSpace {
  Space space;
  std::vector<std::vector<LinMap>> basis;  // per element, blocks by degree
};
DgHomSpace dg_hom_space(const DgComodule& v, const DgComodule& w);

// A graded comodule is just a bounded family of plain comodules.
struct GradedComodule {
  FinBialgebra over;
  int min_deg = 0;
  int max_deg = -1;
  std::vector<Comodule> components;

  Comodule component(int n) const;  // zero comodule outside the window
};

GradedComodule forget_dg(const DgComodule& v);
int graded_hom_dim(const GradedComodule& v, const GradedComodule& w);

// Checks that the comonad -(x)Hc commutes with the differential-forgetting
// functor on the nose at x: equal graded dimensions on both sides, and when
// Hc sits entirely in degree 0, equal per-degree matrices for the cofree
// structure maps. The internal differential of Hc never enters, so a
// nonzero one still passes; that is definitional, not a gap.
Report check_computed_on_graded(const FinBialgebra& h, const ChainComplex& hc,
                                const ChainComplex& x);

// The dg mapping comodule <z, v>: per-degree ambient blocks
// sum_p Z_{p+n}(x)V_p^(x)H cut by the blockwise equalizer pair, carrying
// the hom-complex differential, which is certified to restrict.
struct DgMappingComodule {
  DgComodule object;
  std::vector<LinMap> inclusions;  // degree k: object space -> ambient block sum
};

DgMappingComodule dg_mapping_comodule(const FinBialgebra& h, const DgComodule& z,
                                      const DgComodule& v);

// Graded counterpart: plain mapping_comodule blockwise.
struct GradedMappingComodule {
  GradedComodule object;
  std::vector<LinMap> inclusions;
};

GradedMappingComodule graded_mapping_comodule(const FinBialgebra& h, const GradedComodule& z,
                                              const GradedComodule& v);

// The transfer comparison: hypothesis checks (the comonad is computed on
// graded modules, the forgetful functor preserves the lifting equalizers,
// and the hom-commutation dimensions match), then the canonical map
// U_d<z,v> -> <U_d z, U_d v> is constructed and must be an isomorphism of
// graded comodules. Hypothesis failures and conclusion failures are
// reported under distinct labels.
Report transfer_iso_check(const FinBialgebra& h, const DgComodule& z, const DgComodule& v);

}  // namespace wb
