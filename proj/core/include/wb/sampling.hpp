#pragma once

// Random generators for the property suites. Validity constraints here are
// quadratic (coassociativity, oplax squares), so nothing is sampled
// entrywise; instead small certified building blocks are combined and
// transported along random invertible maps, which preserves every axiom
// exactly while still exploring generic-looking structure constants.

#include "wb/adjlift.hpp"
#include "wb/comodcat.hpp"
#include "wb/dgchain.hpp"
#include "wb/oplaxfun.hpp"
#include "wb/rng.hpp"
#include "wb/structures.hpp"

#include <optional>
#include <vector>

namespace wb {

// A coalgebra together with a group-like element when the construction
// provides one (transports move group-likes along, matrix coalgebras have
// none). The split oplax family below needs a group-like in its target.
struct SampledCoalgebra {
  FinCoalgebra coalgebra;
  std::optional<LinMap> grouplike;  // column g with comult g = g(x)g, counit g = 1
};

SampledCoalgebra sample_coalgebra(Rng& rng, int max_dim = 3);
FinBialgebra sample_bialgebra(Rng& rng, int max_dim = 4);

// Comodule over an arbitrary coalgebra: the coefficient space of a few
// random vectors of a cofree comodule, which is always a subcomodule; mixed
// with trivial, regular, sum, and transported variants.
Comodule sample_comodule(const FinCoalgebra& c, Rng& rng, int max_ambient = 2);

// Comodule over a group bialgebra with prescribed degrees: basis vector i
// goes to itself tensor the degrees[i]-th group element.
Comodule graded_comodule(const FinBialgebra& h, const std::vector<int>& degrees);

Comodule comodule_direct_sum(const Comodule& v, const Comodule& w);

// Oplax structure between two given comonads. Families: the split structure
// through a group-like of the target, the tensor-with-a-comodule structure
// when both ends are one bialgebra, pastings, carrier direct sums; each
// finished with a random carrier conjugation.
OplaxStructure sample_oplax(const SampledCoalgebra& c, const SampledCoalgebra& d, Rng& rng,
                            int max_carrier = 3);
// Convenience: sample the two comonads as well.
OplaxStructure sample_oplax(Rng& rng, int max_dim = 3, int max_carrier = 3);

// A pair of oplax structures sharing comonads plus a transformation that
// provably lifts (conjugation witness, sum inclusion, or zero).
NatTransData sample_lifting_nt(Rng& rng, int max_dim = 3);

AdjunctionData sample_adjunction(Rng& rng, int max_dim = 3);

// Bounded complex from spheres and disks, transported degreewise.
ChainComplex sample_complex(Rng& rng, int min_deg, int max_deg, int max_total_dim = 8);

// Dg comodule over a group bialgebra from graded spheres and disks (the two
// ends of a disk share their group degree, so the differential is a
// comodule map), transported by degree-preserving automorphisms.
DgComodule sample_dg_comodule(const FinBialgebra& h, Rng& rng, int min_deg, int max_deg,
                              int max_total_dim = 4);

}  // namespace wb
