#pragma once

// Finite-dimensional coalgebras, algebras, and bialgebras given by structure
// constants, plus axiom validators. A coalgebra C is the data behind the
// comonad X -> X(x)C; an algebra A the data behind the monad X -> X(x)A; a
// bialgebra supports both at once with compatible structures.

#include "wb/exactlin.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wb {

// One failed law with its exact residual matrix (difference of the two legs
// of the offending square). Validators return matrices, not booleans, so a
// failure is always diagnosable.
struct ReportEntry {
  std::string law;
  LinMap residual;
};

struct Report {
  std::vector<ReportEntry> failures;
  std::vector<std::string> notes;  // informational, never affect ok()

  bool ok() const { return failures.empty(); }
  void require(const std::string& law, const LinMap& residual) {
    if (!residual.is_zero()) failures.push_back({law, residual});
  }
  void note(const std::string& text) { notes.push_back(text); }
  void merge(const Report& other, const std::string& prefix = "");
  std::string summary() const;
};

struct FinCoalgebra {
  Space space;
  LinMap comult;  // C -> C(x)C, written in the flat right-handed convention
  LinMap counit;  // C -> K, a 1 x dim row
};

struct FinAlgebra {
  Space space;
  LinMap mult;  // A(x)A -> A
  LinMap unit;  // K -> A, a dim x 1 column
};

struct FinBialgebra {
  FinCoalgebra coalgebra;
  FinAlgebra algebra;  // on the same space

  int dim() const { return coalgebra.space.dim; }
  const LinMap& comult() const { return coalgebra.comult; }
  const LinMap& counit() const { return coalgebra.counit; }
  const LinMap& mult() const { return algebra.mult; }
  const LinMap& unit() const { return algebra.unit; }
};

enum class MorphismKind { Coalgebra, Algebra, Bialgebra };

// A linear map claimed to respect structure; check_morphism verifies the
// defining squares for the claimed kind.
struct StructMorphism {
  MorphismKind kind;
  LinMap map;
  std::optional<FinCoalgebra> source_coalgebra, target_coalgebra;
  std::optional<FinAlgebra> source_algebra, target_algebra;
};

StructMorphism coalgebra_morphism(const FinCoalgebra& source, const FinCoalgebra& target, const LinMap& map);
StructMorphism algebra_morphism(const FinAlgebra& source, const FinAlgebra& target, const LinMap& map);
StructMorphism bialgebra_morphism(const FinBialgebra& source, const FinBialgebra& target, const LinMap& map);

// Coassociativity and the two counit laws.
Report validate_coalgebra(const FinCoalgebra& c);
// Associativity and the two unit laws.
Report validate_algebra(const FinAlgebra& a);
// Component validity plus the four compatibility squares (comult and counit
// are algebra morphisms, with the tensor-swap in the middle-four interchange).
Report validate_bialgebra(const FinBialgebra& h);
Report check_morphism(const StructMorphism& m);

// Finite duality: transpose the structure constants. dual_coalgebra(a) has
// comult = mult^T and counit = unit^T; dual_algebra(c) is the inverse
// construction, so the two are mutually inverse on structure constants.
FinCoalgebra dual_coalgebra(const FinAlgebra& a);
FinAlgebra dual_algebra(const FinCoalgebra& c);

// Stock structures used all over the tests and fixtures.
FinCoalgebra ground_coalgebra();
FinAlgebra ground_algebra();
FinBialgebra ground_bialgebra();
// Group algebra of Z/n: basis = group elements, grouplike comultiplication.
FinBialgebra group_bialgebra_zn(int n);
// Group algebra of Z/2 x Z/2 (flat index convention on pairs).
FinBialgebra group_bialgebra_z2z2();
// Dual of K[x]/x^n: divided-power style coalgebra, comult(e_k) = sum e_i(x)e_j
// over i+j=k. Not a bialgebra here; used as a non-grouplike coalgebra.
FinCoalgebra truncated_power_coalgebra(int n);
// Dual of the n x n matrix algebra: comult(e_ij) = sum_k e_ik(x)e_kj.
FinCoalgebra matrix_coalgebra(int n);

// Transport along an invertible map p: V -> C: the coalgebra on V making p an
// isomorphism of coalgebras. Used by the random-structure generators.
FinCoalgebra transport_coalgebra(const FinCoalgebra& c, const LinMap& p);
FinAlgebra transport_algebra(const FinAlgebra& a, const LinMap& p);
FinBialgebra transport_bialgebra(const FinBialgebra& h, const LinMap& p);

// Direct sum of coalgebras (coproduct of the underlying coalgebras: block
// comultiplication, concatenated counits).
FinCoalgebra coalgebra_direct_sum(const FinCoalgebra& c1, const FinCoalgebra& c2);

}  // namespace wb
