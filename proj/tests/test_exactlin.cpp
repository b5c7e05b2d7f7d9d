#include "wb/exactlin.hpp"
#include "wb/rng.hpp"

#include <doctest.h>

using namespace wb;

TEST_CASE("compose multiplies exactly") {
  const LinMap f{{1, 0}, {1, 1}};
  const LinMap g{{1, 1}, {0, 1}};
  CHECK(compose(g, f) == LinMap{{2, 1}, {1, 1}});
  CHECK(compose(LinMap::identity(3), LinMap{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) ==
        LinMap{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
  CHECK(compose(LinMap::scalar(2), LinMap::scalar(3)) == LinMap::scalar(6));
  CHECK_THROWS_AS(compose(LinMap::zero(2, 3), LinMap::zero(2, 3)), ShapeError);
}

TEST_CASE("rational entries never round") {
  const LinMap half = LinMap::scalar(Scalar(1) / 3);
  LinMap product = LinMap::identity(1);
  for (int i = 0; i < 10; ++i) product = compose(product, half);
  const Scalar expected = Scalar(1) / 59049;
  CHECK(product.at(0, 0) == expected);
}

TEST_CASE("kron follows the flat index convention") {
  CHECK(kron(LinMap::identity(2), LinMap::identity(3)) == LinMap::identity(6));
  CHECK(kron(LinMap::scalar(2), LinMap::scalar(3)) == LinMap::scalar(6));
  const LinMap swap{{0, 1}, {1, 0}};
  CHECK(kron(swap, LinMap::identity(2)) ==
        LinMap{{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

TEST_CASE("kron is functorial") {
  Rng rng(11);
  const LinMap f1 = rng.matrix(2, 3), f2 = rng.matrix(3, 2);
  const LinMap g1 = rng.matrix(3, 2), g2 = rng.matrix(2, 3);
  CHECK(kron(compose(f1, f2), compose(g1, g2)) == compose(kron(f1, g1), kron(f2, g2)));
}

TEST_CASE("symmetry swaps tensor factors") {
  CHECK(symmetry(1, 4) == LinMap::identity(4));
  CHECK(symmetry(4, 1) == LinMap::identity(4));
  CHECK(symmetry(2, 2) ==
        LinMap{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
  CHECK(compose(symmetry(2, 3), symmetry(3, 2)) == LinMap::identity(6));
  // Naturality: the swap intertwines kron(f, g) with kron(g, f).
  Rng rng(5);
  const LinMap f = rng.matrix(2, 3), g = rng.matrix(4, 2);
  CHECK(compose(symmetry(2, 4), kron(f, g)) == compose(kron(g, f), symmetry(3, 2)));
}

TEST_CASE("row-major flattening interacts with composition") {
  Rng rng(7);
  const LinMap f = rng.matrix(3, 2);
  const LinMap d = rng.matrix(2, 3);
  const LinMap e = rng.matrix(2, 2);
  // Postcomposition acts as kron(d, id) on flattened matrices and
  // precomposition as kron(id, e^T); matrix_of relies on both.
  CHECK(flatten(compose(d, f)) == compose(kron(d, LinMap::identity(2)), flatten(f)));
  CHECK(flatten(compose(f, e)) == compose(kron(LinMap::identity(3), e.transpose()), flatten(f)));
}

TEST_CASE("equalizer computes the kernel of the difference") {
  Rng rng(3);
  const LinMap f = rng.matrix(3, 4);
  const SubObject trivial = equalizer(f, f);
  CHECK(trivial.space.dim == 4);
  CHECK(trivial.inclusion == LinMap::identity(4));

  const SubObject diag = equalizer(LinMap{{1, 0}}, LinMap{{0, 1}});
  CHECK(diag.space.dim == 1);
  CHECK(diag.inclusion == LinMap{{1}, {1}});

  const SubObject line = equalizer(LinMap{{1, 0}, {0, 2}}, LinMap::identity(2));
  CHECK(line.space.dim == 1);
  CHECK(line.inclusion == LinMap{{1}, {0}});
}

TEST_CASE("equalizer inclusion satisfies the universal property") {
  Rng rng(13);
  const LinMap f = rng.matrix(3, 5), g = rng.matrix(3, 5);
  const SubObject e = equalizer(f, g);
  CHECK(compose(f, e.inclusion) == compose(g, e.inclusion));
  const LinMap u = rng.matrix(e.space.dim, 2);
  const LinMap cone = compose(e.inclusion, u);
  const auto factored = solve_factor(e.inclusion, cone);
  REQUIRE(factored.has_value());
  CHECK(*factored == u);
}

TEST_CASE("coequalizer quotients by the difference image") {
  const QuotientObject fold = coequalizer(LinMap{{1}, {0}}, LinMap{{0}, {1}});
  CHECK(fold.space.dim == 1);
  CHECK(fold.projection == LinMap{{1, 1}});

  const QuotientObject zero = coequalizer(LinMap::zero(2, 2), LinMap::identity(2));
  CHECK(zero.space.dim == 0);

  Rng rng(17);
  const LinMap f = rng.matrix(4, 2);
  const QuotientObject trivial = coequalizer(f, f);
  CHECK(trivial.space.dim == 4);
  CHECK(trivial.projection == LinMap::identity(4));
}

TEST_CASE("coequalizer projection satisfies the universal property") {
  Rng rng(19);
  const LinMap f = rng.matrix(4, 3), g = rng.matrix(4, 3);
  const QuotientObject q = coequalizer(f, g);
  CHECK(compose(q.projection, f) == compose(q.projection, g));
  const LinMap u = rng.matrix(2, q.space.dim);
  const LinMap cocone = compose(u, q.projection);
  const auto factored = solve_cofactor(q.projection, cocone);
  REQUIRE(factored.has_value());
  CHECK(*factored == u);
}

TEST_CASE("solve_factor is a deterministic least solver") {
  const LinMap h{{1, 2}, {3, 4}};
  const auto through_id = solve_factor(LinMap::identity(2), h);
  REQUIRE(through_id.has_value());
  CHECK(*through_id == h);

  const auto scaled = solve_factor(LinMap{{1}, {1}}, LinMap{{2}, {2}});
  REQUIRE(scaled.has_value());
  CHECK(*scaled == LinMap{{2}});

  CHECK_FALSE(solve_factor(LinMap{{1}, {0}}, LinMap{{0}, {1}}).has_value());
}

TEST_CASE("column echelon form is a canonical span representative") {
  Rng rng(23);
  const LinMap span = rng.matrix(4, 3);
  // Mixing the generators by an invertible change of coordinates must not
  // change the canonical form.
  const LinMap mixed = compose(span, rng.invertible(3));
  CHECK(column_echelon(span) == column_echelon(mixed));
  CHECK(rank(span) == column_echelon(span).cols());
}

TEST_CASE("kernel and image bases obey rank-nullity") {
  Rng rng(29);
  const LinMap f = rng.matrix(3, 5);
  const LinMap ker = kernel_basis(f);
  const LinMap img = image_basis(f);
  CHECK(ker.cols() == 5 - rank(f));
  CHECK(img.cols() == rank(f));
  CHECK(compose(f, ker).is_zero());
}

TEST_CASE("inverse is exact and total on invertible input") {
  Rng rng(31);
  const LinMap p = rng.invertible(4);
  const auto p_inv = inverse(p);
  REQUIRE(p_inv.has_value());
  CHECK(compose(p, *p_inv) == LinMap::identity(4));
  CHECK(compose(*p_inv, p) == LinMap::identity(4));
  CHECK_FALSE(inverse(LinMap::zero(2, 2)).has_value());
  CHECK_FALSE(inverse(LinMap::zero(2, 3)).has_value());
}

TEST_CASE("matrix_of flattens an operator on matrix spaces") {
  Rng rng(37);
  const LinMap a = rng.matrix(2, 2), b = rng.matrix(3, 3);
  const auto op = [&](const LinMap& t) { return compose(a, t, b); };
  const LinMap m = matrix_of(op, 2, 3);
  const LinMap t = rng.matrix(2, 3);
  CHECK(compose(m, flatten(t)) == flatten(op(t)));
  // unflatten recovers the matrix from its flattened image.
  CHECK(unflatten(flatten(t), 0, 2, 3) == t);
}

TEST_CASE("direct_sum stacks blocks diagonally") {
  const LinMap s = direct_sum(LinMap::identity(1), LinMap::scalar(5));
  CHECK(s == LinMap{{1, 0}, {0, 5}});
  CHECK(direct_sum(LinMap::zero(0, 0), LinMap::identity(2)) == LinMap::identity(2));
}
