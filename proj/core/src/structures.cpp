#include "wb/structures.hpp"

#include <sstream>

namespace wb {

void Report::merge(const Report& other, const std::string& prefix) {
  for (const ReportEntry& e : other.failures) failures.push_back({prefix + e.law, e.residual});
  for (const std::string& n : other.notes) notes.push_back(prefix + n);
}

std::string Report::summary() const {
  std::ostringstream out;
  if (ok()) {
    out << "ok";
  } else {
    for (size_t i = 0; i < failures.size(); ++i) {
      if (i) out << "\n";
      out << failures[i].law << " residual_norm=" << failures[i].residual.abs_sum();
    }
  }
  for (const std::string& n : notes) out << "\nnote: " << n;
  return out.str();
}

StructMorphism coalgebra_morphism(const FinCoalgebra& source, const FinCoalgebra& target, const LinMap& map) {
  StructMorphism m;
  m.kind = MorphismKind::Coalgebra;
  m.map = map;
  m.source_coalgebra = source;
  m.target_coalgebra = target;
  return m;
}

StructMorphism algebra_morphism(const FinAlgebra& source, const FinAlgebra& target, const LinMap& map) {
  StructMorphism m;
  m.kind = MorphismKind::Algebra;
  m.map = map;
  m.source_algebra = source;
  m.target_algebra = target;
  return m;
}

StructMorphism bialgebra_morphism(const FinBialgebra& source, const FinBialgebra& target, const LinMap& map) {
  StructMorphism m;
  m.kind = MorphismKind::Bialgebra;
  m.map = map;
  m.source_coalgebra = source.coalgebra;
  m.target_coalgebra = target.coalgebra;
  m.source_algebra = source.algebra;
  m.target_algebra = target.algebra;
  return m;
}

Report validate_coalgebra(const FinCoalgebra& c) {
  const int d = c.space.dim;
  if (c.comult.rows() != d * d || c.comult.cols() != d)
    throw ShapeError("coalgebra comult must be dim^2 x dim, got " + c.comult.str());
  if (c.counit.rows() != 1 || c.counit.cols() != d)
    throw ShapeError("coalgebra counit must be 1 x dim, got " + c.counit.str());
  const LinMap id = LinMap::identity(d);
  Report report;
  report.require("coassociativity",
                 compose(kron(c.comult, id), c.comult) - compose(kron(id, c.comult), c.comult));
  report.require("left counit law", compose(kron(c.counit, id), c.comult) - id);
  report.require("right counit law", compose(kron(id, c.counit), c.comult) - id);
  return report;
}

Report validate_algebra(const FinAlgebra& a) {
  const int d = a.space.dim;
  if (a.mult.rows() != d || a.mult.cols() != d * d)
    throw ShapeError("algebra mult must be dim x dim^2, got " + a.mult.str());
  if (a.unit.rows() != d || a.unit.cols() != 1)
    throw ShapeError("algebra unit must be dim x 1, got " + a.unit.str());
  const LinMap id = LinMap::identity(d);
  Report report;
  report.require("associativity", compose(a.mult, kron(a.mult, id)) - compose(a.mult, kron(id, a.mult)));
  report.require("left unit law", compose(a.mult, kron(a.unit, id)) - id);
  report.require("right unit law", compose(a.mult, kron(id, a.unit)) - id);
  return report;
}

Report validate_bialgebra(const FinBialgebra& h) {
  if (h.coalgebra.space.dim != h.algebra.space.dim)
    throw ShapeError("bialgebra components live on different spaces");
  const int d = h.dim();
  const LinMap id = LinMap::identity(d);
  Report report;
  report.merge(validate_coalgebra(h.coalgebra), "coalgebra ");
  report.merge(validate_algebra(h.algebra), "algebra ");
  // The four squares saying comult and counit are algebra morphisms; the
  // middle-four interchange threads the tensor swap between the two comults.
  const LinMap interchange = kron(kron(id, symmetry(d, d)), id);
  report.require("comult is multiplicative",
                 compose(h.comult(), h.mult()) -
                     compose(kron(h.mult(), h.mult()), interchange, kron(h.comult(), h.comult())));
  report.require("comult preserves unit", compose(h.comult(), h.unit()) - kron(h.unit(), h.unit()));
  report.require("counit is multiplicative", compose(h.counit(), h.mult()) - kron(h.counit(), h.counit()));
  report.require("counit preserves unit", compose(h.counit(), h.unit()) - LinMap::identity(1));
  return report;
}

Report check_morphism(const StructMorphism& m) {
  Report report;
  const LinMap& f = m.map;
  if (m.kind == MorphismKind::Coalgebra || m.kind == MorphismKind::Bialgebra) {
    const FinCoalgebra& s = *m.source_coalgebra;
    const FinCoalgebra& t = *m.target_coalgebra;
    if (f.cols() != s.space.dim || f.rows() != t.space.dim)
      throw ShapeError("morphism map is " + f.str() + ", expected " + std::to_string(t.space.dim) +
                       "x" + std::to_string(s.space.dim));
    report.require("comult square", compose(t.comult, f) - compose(kron(f, f), s.comult));
    report.require("counit square", compose(t.counit, f) - s.counit);
  }
  if (m.kind == MorphismKind::Algebra || m.kind == MorphismKind::Bialgebra) {
    const FinAlgebra& s = *m.source_algebra;
    const FinAlgebra& t = *m.target_algebra;
    if (f.cols() != s.space.dim || f.rows() != t.space.dim)
      throw ShapeError("morphism map is " + f.str() + ", expected " + std::to_string(t.space.dim) +
                       "x" + std::to_string(s.space.dim));
    report.require("mult square", compose(f, s.mult) - compose(t.mult, kron(f, f)));
    report.require("unit square", compose(f, s.unit) - t.unit);
  }
  return report;
}

FinCoalgebra dual_coalgebra(const FinAlgebra& a) {
  return FinCoalgebra{a.space, a.mult.transpose(), a.unit.transpose()};
}

FinAlgebra dual_algebra(const FinCoalgebra& c) {
  return FinAlgebra{c.space, c.comult.transpose(), c.counit.transpose()};
}

FinCoalgebra ground_coalgebra() {
  return FinCoalgebra{Space{1}, LinMap::identity(1), LinMap::identity(1)};
}

FinAlgebra ground_algebra() {
  return FinAlgebra{Space{1}, LinMap::identity(1), LinMap::identity(1)};
}

FinBialgebra ground_bialgebra() { return FinBialgebra{ground_coalgebra(), ground_algebra()}; }

namespace {

// Grouplike bialgebra on an explicit finite multiplication table.
FinBialgebra grouplike_bialgebra(int n, const std::function<int(int, int)>& product, int identity) {
  LinMap comult(n * n, n);
  LinMap counit(1, n);
  LinMap mult(n, n * n);
  LinMap unit(n, 1);
  for (int i = 0; i < n; ++i) {
    comult.at(flat_index(i, i, n), i) = 1;
    counit.at(0, i) = 1;
    for (int j = 0; j < n; ++j) mult.at(product(i, j), flat_index(i, j, n)) = 1;
  }
  unit.at(identity, 0) = 1;
  return FinBialgebra{FinCoalgebra{Space{n}, comult, counit}, FinAlgebra{Space{n}, mult, unit}};
}

}  // namespace

FinBialgebra group_bialgebra_zn(int n) {
  return grouplike_bialgebra(n, [n](int i, int j) { return (i + j) % n; }, 0);
}

FinBialgebra group_bialgebra_z2z2() {
  // Flat index (a, b) -> 2a + b; the group operation is componentwise XOR.
  return grouplike_bialgebra(4, [](int i, int j) { return i ^ j; }, 0);
}

FinCoalgebra truncated_power_coalgebra(int n) {
  LinMap comult(n * n, n);
  LinMap counit(1, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i <= k; ++i) comult.at(flat_index(i, k - i, n), k) = 1;
  counit.at(0, 0) = 1;
  return FinCoalgebra{Space{n}, comult, counit};
}

FinCoalgebra matrix_coalgebra(int n) {
  const int d = n * n;
  LinMap comult(d * d, d);
  LinMap counit(1, d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int src = flat_index(i, j, n);
      for (int k = 0; k < n; ++k)
        comult.at(flat_index(flat_index(i, k, n), flat_index(k, j, n), d), src) = 1;
      if (i == j) counit.at(0, src) = 1;
    }
  return FinCoalgebra{Space{d}, comult, counit};
}

FinCoalgebra transport_coalgebra(const FinCoalgebra& c, const LinMap& p) {
  std::optional<LinMap> p_inv = inverse(p);
  if (!p_inv) throw MathError("transport_coalgebra needs an invertible map");
  return FinCoalgebra{Space{p.cols()}, compose(kron(*p_inv, *p_inv), c.comult, p), compose(c.counit, p)};
}

FinAlgebra transport_algebra(const FinAlgebra& a, const LinMap& p) {
  std::optional<LinMap> p_inv = inverse(p);
  if (!p_inv) throw MathError("transport_algebra needs an invertible map");
  return FinAlgebra{Space{p.cols()}, compose(*p_inv, a.mult, kron(p, p)), compose(*p_inv, a.unit)};
}

FinBialgebra transport_bialgebra(const FinBialgebra& h, const LinMap& p) {
  return FinBialgebra{transport_coalgebra(h.coalgebra, p), transport_algebra(h.algebra, p)};
}

FinCoalgebra coalgebra_direct_sum(const FinCoalgebra& c1, const FinCoalgebra& c2) {
  const int d1 = c1.space.dim;
  const int d2 = c2.space.dim;
  const int d = d1 + d2;
  LinMap incl1(d, d1), incl2(d, d2), proj1(d1, d), proj2(d2, d);
  for (int i = 0; i < d1; ++i) {
    incl1.at(i, i) = 1;
    proj1.at(i, i) = 1;
  }
  for (int i = 0; i < d2; ++i) {
    incl2.at(d1 + i, i) = 1;
    proj2.at(i, d1 + i) = 1;
  }
  LinMap comult = compose(kron(incl1, incl1), c1.comult, proj1) + compose(kron(incl2, incl2), c2.comult, proj2);
  LinMap counit = compose(c1.counit, proj1) + compose(c2.counit, proj2);
  return FinCoalgebra{Space{d}, comult, counit};
}

}  // namespace wb
