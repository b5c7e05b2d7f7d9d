#include "wb/sampling.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace wb {

int Rng::uniform(int lo, int hi) {
  if (hi <= lo) return lo;
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % range);
}

Scalar Rng::small_scalar() {
  const int num = uniform(-3, 3);
  const int den = uniform(1, 2);
  return Scalar(num) / den;
}

LinMap Rng::matrix(int rows, int cols) {
  LinMap m = LinMap::zero(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (uniform(0, 2) != 0) m.at(r, c) = small_scalar();
  return m;
}

LinMap Rng::invertible(int dim) {
  LinMap m = LinMap::identity(dim);
  if (dim <= 0) return m;
  const int ops = 2 * dim + 2;
  for (int k = 0; k < ops; ++k) {
    const int i = uniform(0, dim - 1);
    const int j = uniform(0, dim - 1);
    switch (uniform(0, 2)) {
      case 0:
        if (i != j)
          for (int c = 0; c < dim; ++c) std::swap(m.at(i, c), m.at(j, c));
        break;
      case 1: {
        const int pick = uniform(0, 2);
        const Scalar s = pick == 0 ? Scalar(-1) : pick == 1 ? Scalar(2) : Scalar(1) / 2;
        for (int c = 0; c < dim; ++c) m.at(i, c) = m.at(i, c) * s;
        break;
      }
      default:
        if (i != j) {
          const Scalar s = small_scalar();
          for (int c = 0; c < dim; ++c) {
            const Scalar t = m.at(i, c) + s * m.at(j, c);
            m.at(i, c) = t;
          }
        }
    }
  }
  return m;
}

std::uint64_t seed_from_env() {
  const char* s = std::getenv("WB_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0') return 0;
  return v;
}

namespace {

LinMap id(int n) { return LinMap::identity(n); }

void put_block(LinMap& m, int row_off, int col_off, const LinMap& b) {
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c)
      if (b.at(r, c) != 0) m.at(row_off + r, col_off + c) = b.at(r, c);
}

bool same_coalgebra(const FinCoalgebra& a, const FinCoalgebra& b) {
  return a.space.dim == b.space.dim && a.comult == b.comult && a.counit == b.counit;
}

// The coefficient space of a few random vectors in a cofree comodule: close
// the span under the coaction components, then read the coaction off the
// inclusion. The result is a subcomodule for any starting vectors.
Comodule coefficient_comodule(const FinCoalgebra& c, Rng& rng, int max_ambient) {
  const int dc = c.space.dim;
  const Comodule ambient = cofree(c, Space{rng.uniform(1, std::max(1, max_ambient))});
  const int n = ambient.space.dim;
  LinMap span = column_echelon(rng.matrix(n, rng.uniform(1, 2)));
  for (;;) {
    const LinMap image = compose(ambient.coaction, span);
    LinMap bigger = LinMap::zero(n, span.cols() + span.cols() * dc);
    put_block(bigger, 0, 0, span);
    for (int k = 0; k < span.cols(); ++k)
      for (int a = 0; a < dc; ++a)
        for (int i = 0; i < n; ++i)
          bigger.at(i, span.cols() + k * dc + a) = image.at(i * dc + a, k);
    LinMap closed = column_echelon(bigger);
    if (closed.cols() == span.cols()) break;
    span = std::move(closed);
  }
  if (span.cols() == 0) return regular_comodule(c);
  auto rho = solve_factor(kron(span, id(dc)), compose(ambient.coaction, span));
  if (!rho) throw MathError("coefficient space failed to close");
  return {c, Space{span.cols()}, *rho};
}

// Always-valid oplax structure: route through the counit of the source and
// the coaction of any comodule over the target.
OplaxStructure counit_split(const FinCoalgebra& c, const FinCoalgebra& d, const Comodule& u) {
  return {c, d, u.space, compose(u.coaction, kron(c.counit, id(u.space.dim)))};
}

Comodule small_comodule(const FinCoalgebra& d, Rng& rng) {
  Comodule u = coefficient_comodule(d, rng, 1);
  if (u.space.dim == 0) u = regular_comodule(d);
  return u;
}

ChainComplex complex_direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.length() <= 0) return b;
  if (b.length() <= 0) return a;
  ChainComplex out;
  out.min_deg = std::min(a.min_deg, b.min_deg);
  out.max_deg = std::max(a.max_deg, b.max_deg);
  for (int n = out.min_deg; n <= out.max_deg; ++n) out.dims.push_back(a.dim_at(n) + b.dim_at(n));
  for (int n = out.min_deg; n <= out.max_deg; ++n) {
    LinMap d = LinMap::zero(out.dim_at(n - 1), out.dim_at(n));
    put_block(d, 0, 0, a.d_at(n));
    put_block(d, a.dim_at(n - 1), a.dim_at(n), b.d_at(n));
    out.diffs.push_back(std::move(d));
  }
  return out;
}

DgComodule dg_direct_sum(const FinBialgebra& h, const DgComodule& a, const DgComodule& b) {
  if (a.complex.length() <= 0) return b;
  if (b.complex.length() <= 0) return a;
  const int dh = h.dim();
  DgComodule out;
  out.over = h;
  out.complex = complex_direct_sum(a.complex, b.complex);
  for (int n = out.complex.min_deg; n <= out.complex.max_deg; ++n) {
    const int da = a.complex.dim_at(n);
    const int db = b.complex.dim_at(n);
    LinMap rho = LinMap::zero((da + db) * dh, da + db);
    put_block(rho, 0, 0, a.component(n).coaction);
    put_block(rho, da * dh, da, b.component(n).coaction);
    out.coactions.push_back(std::move(rho));
  }
  return out;
}

}  // namespace

SampledCoalgebra sample_coalgebra(Rng& rng, int max_dim) {
  SampledCoalgebra out;
  switch (rng.uniform(0, 3)) {
    case 0:
      out.coalgebra = ground_coalgebra();
      out.grouplike = LinMap::identity(1);
      break;
    case 1: {
      const int n = rng.uniform(1, max_dim);
      out.coalgebra = group_bialgebra_zn(n).coalgebra;
      LinMap g = LinMap::zero(n, 1);
      g.at(rng.uniform(0, n - 1), 0) = 1;
      out.grouplike = g;
      break;
    }
    case 2: {
      const int n = rng.uniform(1, max_dim);
      out.coalgebra = truncated_power_coalgebra(n);
      LinMap g = LinMap::zero(n, 1);
      g.at(0, 0) = 1;
      out.grouplike = g;
      break;
    }
    default:
      if (max_dim >= 4 && rng.uniform(0, 1) == 0) {
        out.coalgebra = matrix_coalgebra(2);
        out.grouplike = std::nullopt;
      } else {
        const int n = rng.uniform(1, std::max(1, max_dim - 1));
        out.coalgebra = coalgebra_direct_sum(group_bialgebra_zn(n).coalgebra, ground_coalgebra());
        LinMap g = LinMap::zero(n + 1, 1);
        g.at(n, 0) = 1;
        out.grouplike = g;
      }
      break;
  }
  if (rng.uniform(0, 1) == 0) {
    const LinMap p = rng.invertible(out.coalgebra.space.dim);
    out.coalgebra = transport_coalgebra(out.coalgebra, p);
    if (out.grouplike) out.grouplike = compose(p, *out.grouplike);
  }
  return out;
}

FinBialgebra sample_bialgebra(Rng& rng, int max_dim) {
  FinBialgebra h;
  switch (rng.uniform(0, 2)) {
    case 0:
      h = ground_bialgebra();
      break;
    case 1:
      h = group_bialgebra_zn(rng.uniform(1, std::min(max_dim, 4)));
      break;
    default:
      h = max_dim >= 4 ? group_bialgebra_z2z2()
                       : group_bialgebra_zn(rng.uniform(1, std::max(1, max_dim)));
  }
  if (rng.uniform(0, 1) == 0) h = transport_bialgebra(h, rng.invertible(h.dim()));
  return h;
}

Comodule sample_comodule(const FinCoalgebra& c, Rng& rng, int max_ambient) {
  switch (rng.uniform(0, 4)) {
    case 0:
      return regular_comodule(c);
    case 1:
      return transport_comodule(regular_comodule(c), rng.invertible(c.space.dim));
    case 2:
      return coefficient_comodule(c, rng, max_ambient);
    case 3: {
      const Comodule a = coefficient_comodule(c, rng, 1);
      const Comodule b = coefficient_comodule(c, rng, 1);
      return comodule_direct_sum(a, b);
    }
    default: {
      const Comodule a = coefficient_comodule(c, rng, max_ambient);
      return transport_comodule(a, rng.invertible(a.space.dim));
    }
  }
}

Comodule graded_comodule(const FinBialgebra& h, const std::vector<int>& degrees) {
  const int dh = h.dim();
  const int n = static_cast<int>(degrees.size());
  LinMap rho = LinMap::zero(n * dh, n);
  for (int i = 0; i < n; ++i) {
    const int k = ((degrees[static_cast<size_t>(i)] % dh) + dh) % dh;
    rho.at(i * dh + k, i) = 1;
  }
  return {h.coalgebra, Space{n}, std::move(rho)};
}

Comodule comodule_direct_sum(const Comodule& v, const Comodule& w) {
  const int dc = v.over.space.dim;
  const int dv = v.space.dim;
  const int dw = w.space.dim;
  LinMap rho = LinMap::zero((dv + dw) * dc, dv + dw);
  put_block(rho, 0, 0, v.coaction);
  put_block(rho, dv * dc, dv, w.coaction);
  return {v.over, Space{dv + dw}, std::move(rho)};
}

OplaxStructure sample_oplax(const SampledCoalgebra& c, const SampledCoalgebra& d, Rng& rng,
                            int max_carrier) {
  const auto draw = [&] {
    switch (rng.uniform(0, 4)) {
      case 0:
      case 1:
        return counit_split(c.coalgebra, d.coalgebra, small_comodule(d.coalgebra, rng));
      case 2:
        return same_coalgebra(c.coalgebra, d.coalgebra)
                   ? forgetful_oplax(c.coalgebra, Space{rng.uniform(1, max_carrier)})
                   : counit_split(c.coalgebra, d.coalgebra, small_comodule(d.coalgebra, rng));
      case 3:
        return direct_sum_oplax(
            counit_split(c.coalgebra, d.coalgebra, small_comodule(d.coalgebra, rng)),
            counit_split(c.coalgebra, d.coalgebra, small_comodule(d.coalgebra, rng)));
      default: {
        const SampledCoalgebra m = sample_coalgebra(rng, 2);
        return compose_oplax(
            counit_split(c.coalgebra, m.coalgebra, small_comodule(m.coalgebra, rng)),
            counit_split(m.coalgebra, d.coalgebra, small_comodule(d.coalgebra, rng)));
      }
    }
  };
  // Direct sums and composites can overshoot the carrier bound; redraw a
  // few times, then fall back to a one-dimensional (or empty) carrier.
  OplaxStructure s = draw();
  for (int tries = 0; s.carrier.dim > max_carrier && tries < 20; ++tries) s = draw();
  if (s.carrier.dim > max_carrier) {
    const Comodule u = d.grouplike ? Comodule{d.coalgebra, Space{1}, *d.grouplike}
                                   : Comodule{d.coalgebra, Space{0}, LinMap::zero(0, 0)};
    s = counit_split(c.coalgebra, d.coalgebra, u);
  }
  if (rng.uniform(0, 1) == 0 && s.carrier.dim > 0)
    s = conjugate_oplax(s, rng.invertible(s.carrier.dim));
  return s;
}

OplaxStructure sample_oplax(Rng& rng, int max_dim, int max_carrier) {
  if (rng.uniform(0, 3) == 0) {
    const FinBialgebra h = sample_bialgebra(rng, std::min(max_dim, 3));
    const Comodule w = small_comodule(h.coalgebra, rng);
    // The regular-comodule fallback can outgrow the requested carrier
    // bound; when it does, use the generic sampler below instead.
    if (w.space.dim <= max_carrier) {
      OplaxStructure s = comodule_tensor_oplax(h, w);
      if (rng.uniform(0, 1) == 0) s = conjugate_oplax(s, rng.invertible(s.carrier.dim));
      return s;
    }
  }
  const SampledCoalgebra c = sample_coalgebra(rng, max_dim);
  const SampledCoalgebra d = rng.uniform(0, 1) == 0 ? c : sample_coalgebra(rng, max_dim);
  return sample_oplax(c, d, rng, max_carrier);
}

NatTransData sample_lifting_nt(Rng& rng, int max_dim) {
  const OplaxStructure s = sample_oplax(rng, max_dim, 2);
  switch (rng.uniform(0, 2)) {
    case 0: {
      const LinMap p = rng.invertible(s.carrier.dim);
      return {s, conjugate_oplax(s, p), p};
    }
    case 1: {
      const OplaxStructure other =
          counit_split(s.source, s.target, small_comodule(s.target, rng));
      const OplaxStructure sum = direct_sum_oplax(s, other);
      LinMap incl = LinMap::zero(sum.carrier.dim, s.carrier.dim);
      for (int k = 0; k < s.carrier.dim; ++k) incl.at(k, k) = 1;
      return {s, sum, std::move(incl)};
    }
    default: {
      const OplaxStructure other =
          counit_split(s.source, s.target, small_comodule(s.target, rng));
      return {s, other, LinMap::zero(other.carrier.dim, s.carrier.dim)};
    }
  }
}

AdjunctionData sample_adjunction(Rng& rng, int max_dim) {
  const int dim = rng.uniform(1, max_dim);
  if (rng.uniform(0, 1) == 0) return standard_adjunction(dim);
  return deformed_adjunction(dim, rng.invertible(dim));
}

ChainComplex sample_complex(Rng& rng, int min_deg, int max_deg, int max_total_dim) {
  ChainComplex out;
  int total = 0;
  const int pieces = rng.uniform(1, 3);
  for (int i = 0; i < pieces && total < max_total_dim; ++i) {
    const int n = rng.uniform(min_deg, max_deg);
    if (n - 1 >= min_deg && total + 2 <= max_total_dim && rng.uniform(0, 1) == 0) {
      out = complex_direct_sum(out, disk_complex(n));
      total += 2;
    } else {
      out = complex_direct_sum(out, sphere_complex(n));
      total += 1;
    }
  }
  if (out.length() <= 0) return zero_complex(min_deg, min_deg);
  if (rng.uniform(0, 1) == 0) {
    std::vector<LinMap> p;
    for (int n = out.min_deg; n <= out.max_deg; ++n) p.push_back(rng.invertible(out.dim_at(n)));
    const auto p_at = [&](int n) {
      if (n < out.min_deg || n > out.max_deg) return id(out.dim_at(n));
      return p[static_cast<size_t>(n - out.min_deg)];
    };
    std::vector<LinMap> diffs;
    for (int n = out.min_deg; n <= out.max_deg; ++n) {
      const auto inv = inverse(p_at(n));
      diffs.push_back(compose(p_at(n - 1), out.d_at(n), *inv));
    }
    out.diffs = std::move(diffs);
  }
  return out;
}

DgComodule sample_dg_comodule(const FinBialgebra& h, Rng& rng, int min_deg, int max_deg,
                              int max_total_dim) {
  const int dh = h.dim();
  DgComodule out;
  out.over = h;
  int total = 0;
  const int pieces = rng.uniform(1, 3);
  for (int i = 0; i < pieces && total < max_total_dim; ++i) {
    const int n = rng.uniform(min_deg, max_deg);
    const int grp = rng.uniform(0, dh - 1);
    DgComodule piece;
    piece.over = h;
    if (n - 1 >= min_deg && total + 2 <= max_total_dim && rng.uniform(0, 1) == 0) {
      piece.complex = disk_complex(n);
      piece.coactions = {graded_comodule(h, {grp}).coaction, graded_comodule(h, {grp}).coaction};
      total += 2;
    } else {
      piece.complex = sphere_complex(n);
      piece.coactions = {graded_comodule(h, {grp}).coaction};
      total += 1;
    }
    out = dg_direct_sum(h, out, piece);
  }
  if (out.complex.length() <= 0) {
    out.complex = zero_complex(min_deg, min_deg);
    out.coactions = {LinMap::zero(0, 0)};
    return out;
  }
  if (rng.uniform(0, 1) == 0) {
    std::vector<LinMap> p;
    for (int n = out.complex.min_deg; n <= out.complex.max_deg; ++n)
      p.push_back(rng.invertible(out.complex.dim_at(n)));
    const auto p_at = [&](int n) {
      if (n < out.complex.min_deg || n > out.complex.max_deg)
        return id(out.complex.dim_at(n));
      return p[static_cast<size_t>(n - out.complex.min_deg)];
    };
    std::vector<LinMap> diffs;
    std::vector<LinMap> coactions;
    for (int n = out.complex.min_deg; n <= out.complex.max_deg; ++n) {
      const auto inv = inverse(p_at(n));
      diffs.push_back(compose(p_at(n - 1), out.complex.d_at(n), *inv));
      coactions.push_back(compose(kron(p_at(n), id(dh)), out.component(n).coaction, *inv));
    }
    out.complex.diffs = std::move(diffs);
    out.coactions = std::move(coactions);
  }
  return out;
}

}  // namespace wb
