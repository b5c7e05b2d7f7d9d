#include "wb/dgchain.hpp"

#include "wb/sampling.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace wb {

namespace {

LinMap id(int n) { return LinMap::identity(n); }

bool odd(int k) { return ((k % 2) + 2) % 2 == 1; }

// Writes scale * b into m at the given offsets. Zero-sized blocks are no-ops.
void put_block(LinMap& m, int row_off, int col_off, const LinMap& b, const Scalar& scale) {
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) {
      const Scalar v = b.at(r, c) * scale;
      if (v != 0) m.at(row_off + r, col_off + c) = v;
    }
}

Comodule zero_comodule(const FinCoalgebra& over) {
  return {over, Space{0}, LinMap::zero(0, 0)};
}

}  // namespace

int ChainComplex::dim_at(int n) const {
  if (n < min_deg || n > max_deg) return 0;
  return dims[static_cast<size_t>(n - min_deg)];
}

LinMap ChainComplex::d_at(int n) const {
  if (n < min_deg || n > max_deg) return LinMap::zero(dim_at(n - 1), dim_at(n));
  return diffs[static_cast<size_t>(n - min_deg)];
}

int ChainComplex::total_dim() const {
  int total = 0;
  for (int d : dims) total += d;
  return total;
}

int GradedModule::dim_at(int n) const {
  if (n < min_deg || n > max_deg) return 0;
  return dims[static_cast<size_t>(n - min_deg)];
}

ChainComplex zero_complex(int lo, int hi) {
  if (hi < lo) return {};
  ChainComplex x;
  x.min_deg = lo;
  x.max_deg = hi;
  for (int n = lo; n <= hi; ++n) {
    x.dims.push_back(0);
    x.diffs.push_back(LinMap::zero(0, 0));
  }
  return x;
}

ChainComplex sphere_complex(int n) {
  ChainComplex x;
  x.min_deg = n;
  x.max_deg = n;
  x.dims = {1};
  x.diffs = {LinMap::zero(0, 1)};
  return x;
}

ChainComplex disk_complex(int n) {
  ChainComplex x;
  x.min_deg = n - 1;
  x.max_deg = n;
  x.dims = {1, 1};
  x.diffs = {LinMap::zero(0, 1), LinMap::identity(1)};
  return x;
}

Report validate_complex(const ChainComplex& x) {
  Report report;
  if (x.length() <= 0) return report;
  if (static_cast<int>(x.dims.size()) != x.length() ||
      static_cast<int>(x.diffs.size()) != x.length())
    throw ShapeError("complex must carry one dimension and one differential per degree");
  for (int n = x.min_deg; n <= x.max_deg; ++n) {
    if (x.dim_at(n) < 0) throw ShapeError("negative dimension in complex");
    const LinMap& d = x.diffs[static_cast<size_t>(n - x.min_deg)];
    if (d.rows() != x.dim_at(n - 1) || d.cols() != x.dim_at(n))
      throw ShapeError("differential shape mismatch at degree " + std::to_string(n));
  }
  for (int n = x.min_deg; n <= x.max_deg; ++n)
    report.require("d squared vanishes at degree " + std::to_string(n),
                   compose(x.d_at(n - 1), x.d_at(n)));
  return report;
}

ChainComplex tensor_complex(const ChainComplex& x, const ChainComplex& y) {
  if (x.length() <= 0 || y.length() <= 0) return {};
  ChainComplex t;
  t.min_deg = x.min_deg + y.min_deg;
  t.max_deg = x.max_deg + y.max_deg;
  for (int n = t.min_deg; n <= t.max_deg; ++n) {
    int dim = 0;
    for (int p = x.min_deg; p <= x.max_deg; ++p) dim += x.dim_at(p) * y.dim_at(n - p);
    t.dims.push_back(dim);
  }
  for (int n = t.min_deg; n <= t.max_deg; ++n) {
    LinMap d = LinMap::zero(t.dim_at(n - 1), t.dim_at(n));
    const auto target_off = [&](int q) {
      int off = 0;
      for (int r = x.min_deg; r < q; ++r) off += x.dim_at(r) * y.dim_at(n - 1 - r);
      return off;
    };
    int src_off = 0;
    for (int p = x.min_deg; p <= x.max_deg; ++p) {
      const int xs = x.dim_at(p);
      const int ys = y.dim_at(n - p);
      if (xs * ys > 0) {
        put_block(d, target_off(p - 1), src_off, kron(x.d_at(p), id(ys)), Scalar(1));
        put_block(d, target_off(p), src_off, kron(id(xs), y.d_at(n - p)),
                  odd(p) ? Scalar(-1) : Scalar(1));
      }
      src_off += xs * ys;
    }
    t.diffs.push_back(std::move(d));
  }
  return t;
}

ChainComplex hom_complex(const ChainComplex& x, const ChainComplex& y) {
  if (x.length() <= 0 || y.length() <= 0) return {};
  ChainComplex t;
  t.min_deg = y.min_deg - x.max_deg;
  t.max_deg = y.max_deg - x.min_deg;
  for (int n = t.min_deg; n <= t.max_deg; ++n) {
    int dim = 0;
    for (int p = x.min_deg; p <= x.max_deg; ++p) dim += x.dim_at(p) * y.dim_at(p + n);
    t.dims.push_back(dim);
  }
  for (int n = t.min_deg; n <= t.max_deg; ++n) {
    LinMap d = LinMap::zero(t.dim_at(n - 1), t.dim_at(n));
    const auto target_off = [&](int q) {
      int off = 0;
      for (int r = x.min_deg; r < q; ++r) off += x.dim_at(r) * y.dim_at(r + n - 1);
      return off;
    };
    const Scalar post_sign = odd(n) ? Scalar(1) : Scalar(-1);  // -(-1)^n
    int src_off = 0;
    for (int p = x.min_deg; p <= x.max_deg; ++p) {
      const int xs = x.dim_at(p);
      const int ys = y.dim_at(p + n);
      if (xs * ys > 0) {
        put_block(d, target_off(p), src_off, kron(y.d_at(p + n), id(xs)), Scalar(1));
        put_block(d, target_off(p + 1), src_off, kron(id(ys), x.d_at(p + 1).transpose()),
                  post_sign);
      }
      src_off += xs * ys;
    }
    t.diffs.push_back(std::move(d));
  }
  return t;
}

GradedModule forget_to_graded(const ChainComplex& x) {
  return {x.min_deg, x.max_deg, x.dims};
}

std::vector<std::vector<LinMap>> chain_maps_basis(const ChainComplex& x, const ChainComplex& y) {
  const int lo = std::max(x.min_deg, y.min_deg);
  const int hi = std::min(x.max_deg, y.max_deg);
  if (hi < lo) return {};

  // One variable group per degree, constraints d∘f = f∘d linking adjacent
  // groups, then one exact kernel computation.
  std::vector<int> var_off;
  int vars = 0;
  for (int n = lo; n <= hi; ++n) {
    var_off.push_back(vars);
    vars += y.dim_at(n) * x.dim_at(n);
  }
  int rows = 0;
  for (int n = lo; n <= hi + 1; ++n) rows += y.dim_at(n - 1) * x.dim_at(n);

  LinMap system = LinMap::zero(rows, vars);
  int row_off = 0;
  for (int n = lo; n <= hi + 1; ++n) {
    const int block_rows = y.dim_at(n - 1) * x.dim_at(n);
    if (block_rows > 0) {
      if (n <= hi && y.dim_at(n) * x.dim_at(n) > 0) {
        const LinMap post = matrix_of([&](const LinMap& f) { return compose(y.d_at(n), f); },
                                      y.dim_at(n), x.dim_at(n));
        put_block(system, row_off, var_off[static_cast<size_t>(n - lo)], post, Scalar(1));
      }
      if (n - 1 >= lo && y.dim_at(n - 1) * x.dim_at(n - 1) > 0) {
        const LinMap pre = matrix_of([&](const LinMap& f) { return compose(f, x.d_at(n)); },
                                     y.dim_at(n - 1), x.dim_at(n - 1));
        put_block(system, row_off, var_off[static_cast<size_t>(n - 1 - lo)], pre, Scalar(-1));
      }
    }
    row_off += block_rows;
  }

  const LinMap basis = kernel_basis(system);
  std::vector<std::vector<LinMap>> out;
  for (int k = 0; k < basis.cols(); ++k) {
    std::vector<LinMap> blocks;
    for (int n = lo; n <= hi; ++n) {
      LinMap f = LinMap::zero(y.dim_at(n), x.dim_at(n));
      const int off = var_off[static_cast<size_t>(n - lo)];
      for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c) f.at(r, c) = basis.at(off + r * f.cols() + c, k);
      blocks.push_back(std::move(f));
    }
    out.push_back(std::move(blocks));
  }
  return out;
}

LinMap signed_symmetry_at(const ChainComplex& x, const ChainComplex& y, int n) {
  int src_dim = 0;
  for (int p = x.min_deg; p <= x.max_deg; ++p) src_dim += x.dim_at(p) * y.dim_at(n - p);
  int dst_dim = 0;
  for (int q = y.min_deg; q <= y.max_deg; ++q) dst_dim += y.dim_at(q) * x.dim_at(n - q);
  LinMap out = LinMap::zero(dst_dim, src_dim);
  const auto target_off = [&](int q) {
    int off = 0;
    for (int r = y.min_deg; r < q; ++r) off += y.dim_at(r) * x.dim_at(n - r);
    return off;
  };
  int src_off = 0;
  for (int p = x.min_deg; p <= x.max_deg; ++p) {
    const int xs = x.dim_at(p);
    const int ys = y.dim_at(n - p);
    if (xs * ys > 0) {
      const Scalar sign = (odd(p) && odd(n - p)) ? Scalar(-1) : Scalar(1);
      put_block(out, target_off(n - p), src_off, symmetry(xs, ys), sign);
    }
    src_off += xs * ys;
  }
  return out;
}

Comodule DgComodule::component(int n) const {
  if (n < complex.min_deg || n > complex.max_deg) return zero_comodule(over.coalgebra);
  return {over.coalgebra, Space{complex.dim_at(n)},
          coactions[static_cast<size_t>(n - complex.min_deg)]};
}

Report validate_dg_comodule(const DgComodule& v) {
  Report report;
  report.merge(validate_complex(v.complex), "underlying complex: ");
  if (v.complex.length() <= 0) return report;
  if (static_cast<int>(v.coactions.size()) != v.complex.length())
    throw ShapeError("dg comodule must carry one coaction per degree");
  const int dh = v.over.dim();
  for (int n = v.complex.min_deg; n <= v.complex.max_deg; ++n) {
    const LinMap& rho = v.coactions[static_cast<size_t>(n - v.complex.min_deg)];
    if (rho.rows() != v.complex.dim_at(n) * dh || rho.cols() != v.complex.dim_at(n))
      throw ShapeError("coaction shape mismatch at degree " + std::to_string(n));
    report.merge(validate_comodule(v.component(n)), "degree " + std::to_string(n) + ": ");
  }
  for (int n = v.complex.min_deg; n <= v.complex.max_deg; ++n) {
    const LinMap lhs = compose(v.component(n - 1).coaction, v.complex.d_at(n));
    const LinMap rhs = compose(kron(v.complex.d_at(n), id(dh)), v.component(n).coaction);
    report.require("coaction is a chain map at degree " + std::to_string(n), lhs - rhs);
  }
  return report;
}

DgComodule dg_unit_comodule(const FinBialgebra& h) {
  return {h, sphere_complex(0), {h.unit()}};
}

DgComodule dg_comodule_tensor(const FinBialgebra& h, const DgComodule& v, const DgComodule& w) {
  DgComodule out;
  out.over = h;
  out.complex = tensor_complex(v.complex, w.complex);
  const int dh = h.dim();
  for (int n = out.complex.min_deg; n <= out.complex.max_deg; ++n) {
    const int dim = out.complex.dim_at(n);
    LinMap rho = LinMap::zero(dim * dh, dim);
    int off = 0;
    for (int p = v.complex.min_deg; p <= v.complex.max_deg; ++p) {
      const int block = v.complex.dim_at(p) * w.complex.dim_at(n - p);
      if (block > 0) {
        const Comodule piece = comodule_tensor(h, v.component(p), w.component(n - p));
        put_block(rho, off * dh, off, piece.coaction, Scalar(1));
      }
      off += block;
    }
    out.coactions.push_back(std::move(rho));
  }
  return out;
}

DgHomSpace dg_hom_space(const DgComodule& v, const DgComodule& w) {
  const ChainComplex& xc = v.complex;
  const ChainComplex& yc = w.complex;
  const int lo = std::max(xc.min_deg, yc.min_deg);
  const int hi = std::min(xc.max_deg, yc.max_deg);
  if (hi < lo) return {Space{0}, {}};
  const int dh = v.over.dim();

  std::vector<int> var_off;
  int vars = 0;
  for (int n = lo; n <= hi; ++n) {
    var_off.push_back(vars);
    vars += yc.dim_at(n) * xc.dim_at(n);
  }
  int rows = 0;
  for (int n = lo; n <= hi + 1; ++n) rows += yc.dim_at(n - 1) * xc.dim_at(n);
  for (int n = lo; n <= hi; ++n) rows += yc.dim_at(n) * dh * xc.dim_at(n);

  LinMap system = LinMap::zero(rows, vars);
  int row_off = 0;
  for (int n = lo; n <= hi + 1; ++n) {
    const int block_rows = yc.dim_at(n - 1) * xc.dim_at(n);
    if (block_rows > 0) {
      if (n <= hi && yc.dim_at(n) * xc.dim_at(n) > 0) {
        const LinMap post = matrix_of([&](const LinMap& f) { return compose(yc.d_at(n), f); },
                                      yc.dim_at(n), xc.dim_at(n));
        put_block(system, row_off, var_off[static_cast<size_t>(n - lo)], post, Scalar(1));
      }
      if (n - 1 >= lo && yc.dim_at(n - 1) * xc.dim_at(n - 1) > 0) {
        const LinMap pre = matrix_of([&](const LinMap& f) { return compose(f, xc.d_at(n)); },
                                     yc.dim_at(n - 1), xc.dim_at(n - 1));
        put_block(system, row_off, var_off[static_cast<size_t>(n - 1 - lo)], pre, Scalar(-1));
      }
    }
    row_off += block_rows;
  }
  for (int n = lo; n <= hi; ++n) {
    const int block_rows = yc.dim_at(n) * dh * xc.dim_at(n);
    if (block_rows > 0) {
      const LinMap rho_v = v.component(n).coaction;
      const LinMap rho_w = w.component(n).coaction;
      const LinMap intertwine = matrix_of(
          [&](const LinMap& f) { return compose(rho_w, f) - compose(kron(f, id(dh)), rho_v); },
          yc.dim_at(n), xc.dim_at(n));
      put_block(system, row_off, var_off[static_cast<size_t>(n - lo)], intertwine, Scalar(1));
    }
    row_off += block_rows;
  }

  const LinMap basis = kernel_basis(system);
  DgHomSpace out{Space{basis.cols()}, {}};
  for (int k = 0; k < basis.cols(); ++k) {
    std::vector<LinMap> blocks;
    for (int n = lo; n <= hi; ++n) {
      LinMap f = LinMap::zero(yc.dim_at(n), xc.dim_at(n));
      const int off = var_off[static_cast<size_t>(n - lo)];
      for (int r = 0; r < f.rows(); ++r)
        for (int c = 0; c < f.cols(); ++c) f.at(r, c) = basis.at(off + r * f.cols() + c, k);
      blocks.push_back(std::move(f));
    }
    out.basis.push_back(std::move(blocks));
  }
  return out;
}

Comodule GradedComodule::component(int n) const {
  if (n < min_deg || n > max_deg) return zero_comodule(over.coalgebra);
  return components[static_cast<size_t>(n - min_deg)];
}

GradedComodule forget_dg(const DgComodule& v) {
  GradedComodule out;
  out.over = v.over;
  out.min_deg = v.complex.min_deg;
  out.max_deg = v.complex.max_deg;
  for (int n = out.min_deg; n <= out.max_deg; ++n) out.components.push_back(v.component(n));
  return out;
}

int graded_hom_dim(const GradedComodule& v, const GradedComodule& w) {
  const int lo = std::max(v.min_deg, w.min_deg);
  const int hi = std::min(v.max_deg, w.max_deg);
  int total = 0;
  for (int n = lo; n <= hi; ++n) {
    if (v.component(n).space.dim == 0 || w.component(n).space.dim == 0) continue;
    total += comodule_hom_space(v.component(n), w.component(n)).space.dim;
  }
  return total;
}

Report check_computed_on_graded(const FinBialgebra& h, const ChainComplex& hc,
                                const ChainComplex& x) {
  if (hc.total_dim() != h.dim())
    throw ShapeError("carrier complex must have total dimension equal to dim H");
  Report report;
  report.merge(validate_complex(hc), "carrier complex: ");
  report.merge(validate_complex(x), "argument complex: ");

  // Forgetting after tensoring must give the convolution of the forgotten
  // dimension sequences, degree by degree.
  const ChainComplex t = tensor_complex(x, hc);
  const GradedModule after = forget_to_graded(t);
  const int lo = std::min(t.min_deg, x.min_deg + hc.min_deg);
  const int hi = std::max(t.max_deg, x.max_deg + hc.max_deg);
  for (int n = lo; n <= hi; ++n) {
    int conv = 0;
    for (int p = x.min_deg; p <= x.max_deg; ++p) conv += x.dim_at(p) * hc.dim_at(n - p);
    report.require("graded dimensions commute at degree " + std::to_string(n),
                   LinMap::scalar(Scalar(after.dim_at(n) - conv)));
  }

  const bool concentrated = hc.min_deg == 0 && hc.max_deg == 0;
  if (concentrated) {
    // With H in degree 0 the cofree structure maps can be compared as
    // matrices: the dg layout in each degree has a single block X_n(x)H,
    // which must equal the graded cofree picture on the nose.
    for (int n = x.min_deg; n <= x.max_deg; ++n) {
      const int xn = x.dim_at(n);
      if (xn == 0) continue;
      report.require("cofree counit component commutes at degree " + std::to_string(n),
                     LinMap::scalar(Scalar(t.dim_at(n) - xn * h.dim())));
      LinMap dg_counit = LinMap::zero(xn, t.dim_at(n));
      put_block(dg_counit, 0, 0, kron(id(xn), h.counit()), Scalar(1));
      report.require("cofree counit matrix commutes at degree " + std::to_string(n),
                     dg_counit - kron(id(xn), h.counit()));
      LinMap dg_comult = LinMap::zero(xn * h.dim() * h.dim(), t.dim_at(n));
      put_block(dg_comult, 0, 0, kron(id(xn), h.comult()), Scalar(1));
      report.require("cofree comultiplication matrix commutes at degree " + std::to_string(n),
                     dg_comult - kron(id(xn), h.comult()));
    }
  } else {
    report.note("carrier is not concentrated in degree 0; only dimension data is compared");
  }
  bool has_diff = false;
  for (const LinMap& d : hc.diffs)
    if (!d.is_zero()) has_diff = true;
  if (has_diff)
    report.note("the carrier's internal differential is forgotten by the graded functor; "
                "passing here is definitional, not a negative result");
  return report;
}

namespace {

// Shared ambient layout for the mapping comodule in one degree: blocks
// Z_{p+n}(x)V_p^(x)H in ascending p.
int mapping_ambient_dim(const ChainComplex& z, const ChainComplex& v, int dh, int n) {
  int total = 0;
  for (int p = v.min_deg; p <= v.max_deg; ++p) total += z.dim_at(p + n) * v.dim_at(p) * dh;
  return total;
}

int mapping_ambient_off(const ChainComplex& z, const ChainComplex& v, int dh, int n, int q) {
  int off = 0;
  for (int p = v.min_deg; p < q; ++p) off += z.dim_at(p + n) * v.dim_at(p) * dh;
  return off;
}

}  // namespace

DgMappingComodule dg_mapping_comodule(const FinBialgebra& h, const DgComodule& z,
                                      const DgComodule& v) {
  DgMappingComodule out;
  out.object.over = h;
  if (z.complex.length() <= 0 || v.complex.length() <= 0) return out;
  const int dh = h.dim();
  const int n_min = z.complex.min_deg - v.complex.max_deg;
  const int n_max = z.complex.max_deg - v.complex.min_deg;

  // Degreewise equalizers, block by block: the defining pair is block
  // diagonal, so each degree splits into plain mapping comodules.
  std::vector<Comodule> objects;
  std::vector<LinMap> inclusions;
  for (int n = n_min; n <= n_max; ++n) {
    Comodule obj = zero_comodule(h.coalgebra);
    LinMap incl = LinMap::zero(0, 0);
    for (int p = v.complex.min_deg; p <= v.complex.max_deg; ++p) {
      const Comodule zp = z.component(p + n);
      const Comodule vp = v.component(p);
      if (zp.space.dim == 0 || vp.space.dim == 0) continue;
      const MappingComodule mc = mapping_comodule(h, zp, vp);
      obj = obj.space.dim == 0 ? mc.object : comodule_direct_sum(obj, mc.object);
      incl = direct_sum(incl, mc.inclusion);
    }
    // Pad missing zero-sized ambient rows so the inclusion matches the
    // full block layout even when leading or trailing blocks vanish.
    const int ambient = mapping_ambient_dim(z.complex, v.complex, dh, n);
    if (incl.rows() != ambient) {
      LinMap fixed = LinMap::zero(ambient, incl.cols());
      put_block(fixed, 0, 0, incl, Scalar(1));
      incl = std::move(fixed);
    }
    objects.push_back(std::move(obj));
    inclusions.push_back(std::move(incl));
  }

  // The hom-complex differential on the ambients restricts along the
  // inclusions; the restriction is solved for, which certifies it.
  out.object.complex.min_deg = n_min;
  out.object.complex.max_deg = n_max;
  for (const Comodule& obj : objects) out.object.complex.dims.push_back(obj.space.dim);
  for (int n = n_min; n <= n_max; ++n) {
    const int rows_amb = mapping_ambient_dim(z.complex, v.complex, dh, n - 1);
    const int cols_amb = mapping_ambient_dim(z.complex, v.complex, dh, n);
    LinMap ambient_d = LinMap::zero(rows_amb, cols_amb);
    const Scalar post_sign = odd(n) ? Scalar(1) : Scalar(-1);  // -(-1)^n
    for (int p = v.complex.min_deg; p <= v.complex.max_deg; ++p) {
      const int zs = z.complex.dim_at(p + n);
      const int vs = v.complex.dim_at(p);
      const int src = mapping_ambient_off(z.complex, v.complex, dh, n, p);
      if (zs * vs > 0) {
        put_block(ambient_d, mapping_ambient_off(z.complex, v.complex, dh, n - 1, p), src,
                  kron(z.complex.d_at(p + n), id(vs * dh)), Scalar(1));
        put_block(ambient_d, mapping_ambient_off(z.complex, v.complex, dh, n - 1, p + 1), src,
                  kron(id(z.complex.dim_at(p + n)), v.complex.d_at(p + 1).transpose(), id(dh)),
                  post_sign);
      }
    }
    const LinMap prev_incl = n == n_min
                                 ? LinMap::zero(rows_amb, 0)
                                 : inclusions[static_cast<size_t>(n - 1 - n_min)];
    auto restricted =
        solve_factor(prev_incl, compose(ambient_d, inclusions[static_cast<size_t>(n - n_min)]));
    if (!restricted)
      throw MathError("mapping differential does not restrict; inputs are not valid "
                      "dg comodules");
    out.object.complex.diffs.push_back(std::move(*restricted));
  }
  for (const Comodule& obj : objects) out.object.coactions.push_back(obj.coaction);
  out.inclusions = std::move(inclusions);
  return out;
}

GradedMappingComodule graded_mapping_comodule(const FinBialgebra& h, const GradedComodule& z,
                                              const GradedComodule& v) {
  GradedMappingComodule out;
  out.object.over = h;
  if (z.max_deg < z.min_deg || v.max_deg < v.min_deg) {
    out.object.min_deg = 0;
    out.object.max_deg = -1;
    return out;
  }
  const int dh = h.dim();
  out.object.min_deg = z.min_deg - v.max_deg;
  out.object.max_deg = z.max_deg - v.min_deg;
  for (int n = out.object.min_deg; n <= out.object.max_deg; ++n) {
    Comodule obj = zero_comodule(h.coalgebra);
    LinMap incl = LinMap::zero(0, 0);
    int ambient = 0;
    for (int p = v.min_deg; p <= v.max_deg; ++p) {
      const Comodule zp = z.component(p + n);
      const Comodule vp = v.component(p);
      ambient += zp.space.dim * vp.space.dim * dh;
      if (zp.space.dim == 0 || vp.space.dim == 0) continue;
      const MappingComodule mc = mapping_comodule(h, zp, vp);
      obj = obj.space.dim == 0 ? mc.object : comodule_direct_sum(obj, mc.object);
      incl = direct_sum(incl, mc.inclusion);
    }
    if (incl.rows() != ambient) {
      LinMap fixed = LinMap::zero(ambient, incl.cols());
      put_block(fixed, 0, 0, incl, Scalar(1));
      incl = std::move(fixed);
    }
    out.object.components.push_back(std::move(obj));
    out.inclusions.push_back(std::move(incl));
  }
  return out;
}

Report transfer_iso_check(const FinBialgebra& h, const DgComodule& z, const DgComodule& v) {
  Report report;
  report.merge(validate_dg_comodule(z), "hypothesis (z is a dg comodule): ");
  report.merge(validate_dg_comodule(v), "hypothesis (v is a dg comodule): ");

  ChainComplex hc0;
  hc0.min_deg = 0;
  hc0.max_deg = 0;
  hc0.dims = {h.dim()};
  hc0.diffs = {LinMap::zero(0, h.dim())};
  report.merge(check_computed_on_graded(h, hc0, z.complex),
               "hypothesis (comonad computed on graded, z): ");
  report.merge(check_computed_on_graded(h, hc0, v.complex),
               "hypothesis (comonad computed on graded, v): ");

  const DgMappingComodule dg = dg_mapping_comodule(h, z, v);
  const GradedMappingComodule graded = graded_mapping_comodule(h, forget_dg(z), forget_dg(v));

  const int lo = std::min(dg.object.complex.min_deg, graded.object.min_deg);
  const int hi = std::max(dg.object.complex.max_deg, graded.object.max_deg);
  report.require("hypothesis: comparison window lower bounds agree",
                 LinMap::scalar(Scalar(dg.object.complex.min_deg - graded.object.min_deg)));
  report.require("hypothesis: comparison window upper bounds agree",
                 LinMap::scalar(Scalar(dg.object.complex.max_deg - graded.object.max_deg)));
  for (int n = lo; n <= hi; ++n) {
    const std::string deg = " at degree " + std::to_string(n);
    const bool dg_in = n >= dg.object.complex.min_deg && n <= dg.object.complex.max_deg;
    const bool gr_in = n >= graded.object.min_deg && n <= graded.object.max_deg;
    if (!dg_in || !gr_in) continue;
    const LinMap& di = dg.inclusions[static_cast<size_t>(n - dg.object.complex.min_deg)];
    const LinMap& gi = graded.inclusions[static_cast<size_t>(n - graded.object.min_deg)];
    // Equalizer preservation: the two subspaces of the shared ambient agree.
    report.require("hypothesis: ambient dimensions agree" + deg,
                   LinMap::scalar(Scalar(di.rows() - gi.rows())));
    if (di.rows() != gi.rows()) continue;
    LinMap joint = LinMap::zero(di.rows(), di.cols() + gi.cols());
    put_block(joint, 0, 0, di, Scalar(1));
    put_block(joint, 0, di.cols(), gi, Scalar(1));
    const int r_dg = rank(di);
    const int r_gr = rank(gi);
    const int r_joint = rank(joint);
    report.require("hypothesis: forgetting preserves the defining equalizer" + deg,
                   LinMap::scalar(Scalar((r_joint - r_dg) + (r_joint - r_gr))));

    // Conclusion: the canonical comparison is an isomorphism of graded
    // comodules, degree by degree.
    auto comparison = solve_factor(gi, di);
    if (!comparison) {
      report.require("conclusion: comparison map exists" + deg, LinMap::scalar(1));
      continue;
    }
    if (!inverse(*comparison)) {
      report.require("conclusion: comparison map is invertible" + deg, LinMap::scalar(1));
      continue;
    }
    report.merge(validate_comodule_morphism(
                     {dg.object.component(n), graded.object.component(n), *comparison}),
                 "conclusion: comparison is a comodule morphism" + deg + ": ");
  }
  return report;
}

}  // namespace wb
