#include <catch2/catch_amalgamated.hpp>

#include "terracini/catalog.hpp"
#include "terracini/engine.hpp"
#include "terracini/variety.hpp"

using namespace terracini;

namespace {

FpField test_field(std::uint64_t salt = 0) {
  Rng rng(0xfeedULL + salt);
  return FpField(random_prime62(rng));
}

} // namespace

TEST_CASE("veronese charts have binomial coordinate counts", "[variety]") {
  FpField f = test_field();
  ParamVariety<Fp> v22 = veronese(f, 2, 2);
  REQUIRE(v22.coords.size() == 6); // C(4,2)
  REQUIRE(v22.r == 5);
  ParamVariety<Fp> v42 = veronese(f, 4, 2);
  REQUIRE(v42.coords.size() == 15); // C(6,2)
  REQUIRE(v42.r == 14);
  ParamVariety<Fp> twisted = veronese(f, 1, 3);
  REQUIRE(twisted.coords.size() == 4);
  REQUIRE_THROWS_AS(veronese(f, 0, 2), Error);
}

TEST_CASE("segre charts multiply the factors", "[variety]") {
  FpField f = test_field();
  ParamVariety<Fp> s22 = segre(f, 2, 2);
  REQUIRE(s22.n == 4);
  REQUIRE(s22.r == 8);
  ParamVariety<Fp> s11 = segre(f, 1, 1);
  REQUIRE(s11.coords.size() == 4);
  ParamVariety<Fp> s23 = segre(f, 2, 3);
  REQUIRE(s23.n == 5);
  REQUIRE(s23.r == 11);
}

TEST_CASE("cones append vertex directions", "[variety]") {
  FpField f = test_field();
  Rng rng(3);
  ParamVariety<Fp> base = veronese(f, 2, 2);
  ParamVariety<Fp> cone = cone_over(base, 1);
  REQUIRE(cone.n == 3);
  REQUIRE(cone.r == 6);
  REQUIRE(cone.tags.count("cone") == 1);
  REQUIRE(cone.claimed_vertex_dim == 0);
  REQUIRE_THROWS_AS(cone_over(base, 0), Error);

  // every sampled tangent frame contains the fresh coordinate axes
  ParamVariety<Fp> cone2 = cone_over(segre(f, 2, 2), 2);
  REQUIRE(cone2.claimed_vertex_dim == 1);
  for (int round = 0; round < 3; ++round) {
    TangentFrame<Fp> fr = full_rank_frame(f, cone2, rng);
    for (std::size_t axis = cone2.r - 1; axis <= cone2.r; ++axis) {
      std::vector<Fp> e(cone2.r + 1, f.zero());
      e[axis] = f.one();
      REQUIRE(fr.rows.contains_in_row_space(e));
    }
  }

  // iterated cones pick fresh parameter names
  ParamVariety<Fp> cc = cone_over(cone, 1);
  REQUIRE(cc.vars().size() == 4);
  REQUIRE(cc.claimed_vertex_dim == 1);
}

TEST_CASE("projection recombines coordinates", "[variety]") {
  FpField f = test_field();
  ParamVariety<Fp> v42 = veronese(f, 4, 2);

  Matrix<Fp> empty(0, v42.r + 1, f.zero());
  REQUIRE(project(v42, empty).r == v42.r);

  // internal projection from a point of the variety
  std::vector<Fp> pt = v42.eval({f.one(), f.one(), f.one(), f.one()});
  ParamVariety<Fp> internal =
      project(v42, Matrix<Fp>::from_rows({pt}, f.zero()));
  REQUIRE(internal.r == 13);
  REQUIRE(internal.n == 4);

  // projection from the plane of a conic on the variety
  std::vector<std::vector<Fp>> rows;
  for (long long t : {0, 1, 2})
    rows.push_back(v42.eval({f.from_int(t), f.zero(), f.zero(), f.zero()}));
  ParamVariety<Fp> conic_proj =
      project(v42, Matrix<Fp>::from_rows(rows, f.zero()));
  REQUIRE(conic_proj.r == 11);

  // a rank-deficient center is rejected
  rows.push_back(rows[0]);
  REQUIRE_THROWS_AS(project(v42, Matrix<Fp>::from_rows(rows, f.zero())),
                    Error);
}

TEST_CASE("join charts carry the abstract dimension", "[variety]") {
  FpField f = test_field();
  Rng rng(5);
  ParamVariety<Fp> v22 = veronese(f, 2, 2);
  ParamVariety<Fp> j = join(v22, v22);
  REQUIRE(j.n == 5);
  REQUIRE(j.r == v22.r);
  // the image of the join chart is the secant variety: dimension 4, not 5
  PointSample<Fp> p = random_point(f, j, rng);
  REQUIRE(tangent_frame(j, p.params).rank == 5);

  REQUIRE_THROWS_AS(join(v22, veronese(f, 2, 3)), Error);
}

TEST_CASE("catalog charts are non-degenerate and immersive", "[variety]") {
  FpField f = test_field();
  Rng rng(7);
  for (const CatalogEntry &e : catalog()) {
    ParamVariety<Fp> X = e.recipe.build_fp(f);
    REQUIRE(coords_independent(X));
    REQUIRE(full_rank_frame(f, X, rng).rank == X.n + 1);
  }
  // a padded linear chart is degenerate in its ambient space
  REQUIRE_FALSE(coords_independent(linear_chart(f, 2, 4)));
}

TEST_CASE("random points are reproducible and on the variety", "[variety]") {
  FpField f = test_field();
  ParamVariety<Fp> v22 = veronese(f, 2, 2);
  Rng r1(11), r2(11);
  PointSample<Fp> a = random_point(f, v22, r1);
  PointSample<Fp> b = random_point(f, v22, r2);
  REQUIRE(a.params == b.params);
  REQUIRE(a.ambient == b.ambient);

  // the ambient vector of a Veronese point fills a rank-1 symmetric matrix:
  // with coordinates (1, u1, u2, u1^2, u1 u2, u2^2) the 2x2 minors vanish
  const auto &c = a.ambient;
  Fp one = c[0], u1 = c[1], u2 = c[2], u11 = c[3], u12 = c[4], u22 = c[5];
  REQUIRE((one * u11 - u1 * u1).is_zero());
  REQUIRE((one * u12 - u1 * u2).is_zero());
  REQUIRE((one * u22 - u2 * u2).is_zero());
  REQUIRE((u11 * u22 - u12 * u12).is_zero());

  // a zero polynomial map never yields a point
  ParamVariety<Fp> broken = v22;
  for (auto &coord : broken.coords)
    coord = MPoly<Fp>(broken.vars(), f.zero());
  Rng r3(13);
  REQUIRE_THROWS_AS(random_point(f, broken, r3), SampleError);
}

TEST_CASE("hyperplane points satisfy the section equation", "[variety]") {
  FpField f = test_field();
  Rng rng(17);

  // conic chart, hyperplane = the middle coordinate
  ParamVariety<Fp> conic = veronese(f, 1, 2);
  std::vector<Fp> h(conic.r + 1, f.zero());
  h[1] = f.one();
  PointSample<Fp> p = hyperplane_point(f, conic, h, rng);
  Fp value = f.zero();
  for (std::size_t i = 0; i <= conic.r; ++i)
    value += h[i] * p.ambient[i];
  REQUIRE(value.is_zero());

  // random hyperplane on a fourfold, found within the default budget
  ParamVariety<Fp> s22 = segre(f, 2, 2);
  for (int round = 0; round < 5; ++round) {
    std::vector<Fp> hr;
    for (std::size_t i = 0; i <= s22.r; ++i)
      hr.push_back(f.random(rng));
    PointSample<Fp> q = hyperplane_point(f, s22, hr, rng);
    Fp acc = f.zero();
    for (std::size_t i = 0; i <= s22.r; ++i)
      acc += hr[i] * q.ambient[i];
    REQUIRE(acc.is_zero());
  }

  // a hyperplane vanishing identically on the variety is rejected
  ParamVariety<Fp> degenerate = linear_chart(f, 2, 4);
  std::vector<Fp> bad(degenerate.r + 1, f.zero());
  bad[4] = f.one(); // the padded zero coordinate
  REQUIRE_THROWS_AS(hyperplane_point(f, degenerate, bad, rng), Error);
}

TEST_CASE("pinned scroll constructions", "[variety]") {
  FpField f = test_field();
  Rng rng(19);
  ParamVariety<Fp> e1 = scroll_ex1(f), e2 = scroll_ex2(f), e3 = scroll_ex3(f);
  for (const ParamVariety<Fp> *X : {&e1, &e2, &e3}) {
    REQUIRE(X->n == 4);
    REQUIRE(X->r == 9);
    REQUIRE(X->tags.count("scroll") == 1);
    REQUIRE(coords_independent(*X));
  }

  // the moving planes of the second scroll span only a 5-space: stack the
  // plane directions at several parameters and check the rank stays 6
  Matrix<Fp> planes(0, e2.r + 1, f.zero());
  for (int round = 0; round < 4; ++round) {
    Fp t = f.random(rng);
    TangentFrame<Fp> fr =
        tangent_frame(e2, {t, f.random(rng), f.random(rng), f.random(rng)});
    // rows 2..4 of the Jacobian are the plane directions a, b, m
    std::vector<std::vector<Fp>> dirs = {fr.rows.row(2), fr.rows.row(3),
                                         fr.rows.row(4)};
    planes = Matrix<Fp>::stacked(planes, Matrix<Fp>::from_rows(dirs, f.zero()));
  }
  REQUIRE(planes.rank() == 6);
}

TEST_CASE("builtin names resolve recursively", "[variety]") {
  FpField f = test_field();
  ParamVariety<Fp> X = builtin_recipe("cone:2:segre:1:2").build_fp(f);
  REQUIRE(X.n == 5);
  REQUIRE(X.r == 7);
  REQUIRE(X.tags.count("cone") == 1);
  REQUIRE(builtin_recipe("rnc:6").build_fp(f).r == 6);
  REQUIRE_THROWS_AS(builtin_recipe("veronese:2"), Error);
  REQUIRE_THROWS_AS(builtin_recipe("mystery:1:2"), Error);
}
