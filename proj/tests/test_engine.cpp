#include <catch2/catch_amalgamated.hpp>

#include "terracini/catalog.hpp"
#include "terracini/engine.hpp"
#include "terracini/report.hpp"

using namespace terracini;

namespace {

FpField test_field(std::uint64_t salt = 0) {
  Rng rng(0xabcdULL + salt);
  return FpField(random_prime62(rng));
}

// chart (1, u1, u2, u3, u1^2 + u2^2 + ... ) of a quadric hypersurface in P^4
ParamVariety<Fp> quadric_threefold(const FpField &f, int rank) {
  std::vector<std::string> vars = {"u1", "u2", "u3"};
  ParamVariety<Fp> X;
  X.name = "quadric";
  X.n = 3;
  X.r = 4;
  X.coords.push_back(MPoly<Fp>::constant(vars, f.one()));
  for (int i = 0; i < 3; ++i)
    X.coords.push_back(MPoly<Fp>::variable(vars, i, f.one()));
  MPoly<Fp> q(vars, f.zero());
  for (int i = 0; i < rank - 2; ++i) {
    Exponents e(3, 0);
    e[i] = 2;
    q.add_term(e, f.one());
  }
  X.coords.push_back(q);
  return X;
}

} // namespace

TEST_CASE("tangent frames are full rank off the singular locus", "[engine]") {
  FpField f = test_field();
  Rng rng(1);

  // the tangent space of a linear chart is the chart itself at every point
  ParamVariety<Fp> lin = linear_chart(f, 3, 3);
  TangentFrame<Fp> fr1 = full_rank_frame(f, lin, rng);
  TangentFrame<Fp> fr2 = full_rank_frame(f, lin, rng);
  REQUIRE(fr1.rank == 4);
  for (std::size_t i = 0; i < fr2.rows.rows(); ++i)
    REQUIRE(fr1.rows.contains_in_row_space(fr2.rows.row(i)));

  REQUIRE(full_rank_frame(f, veronese(f, 2, 2), rng).rank == 3);

  // a cuspidal curve chart (1, u^2, u^3): the frame drops rank at u = 0 and
  // the sampler walks away from the pinch point
  std::vector<std::string> vars = {"u"};
  ParamVariety<Fp> cusp;
  cusp.name = "cusp";
  cusp.n = 1;
  cusp.r = 2;
  cusp.coords.push_back(MPoly<Fp>::constant(vars, f.one()));
  MPoly<Fp> u2(vars, f.zero()), u3(vars, f.zero());
  u2.add_term({2}, f.one());
  u3.add_term({3}, f.one());
  cusp.coords.push_back(u2);
  cusp.coords.push_back(u3);
  REQUIRE(tangent_frame(cusp, {f.zero()}).rank == 1);
  REQUIRE(full_rank_frame(f, cusp, rng).rank == 2);
}

TEST_CASE("secant dimension by Terracini and by the join chart", "[engine]") {
  FpField f = test_field();
  Rng rng(2);
  struct Row {
    const char *name;
    std::size_t s;
  };
  // frozen values, each certified twice below by independent routes
  for (const Row &row : {Row{"veronese:2:2", 4}, Row{"segre:2:2", 7},
                         Row{"veronese:1:3", 3}, Row{"veronese:3:2", 6},
                         Row{"segre:2:3", 9}}) {
    ParamVariety<Fp> X = catalog_find(row.name)->recipe.build_fp(f);
    std::size_t via_terracini = secant_dim(f, X, rng);
    std::size_t via_join = secant_dim_join_oracle(f, X, rng);
    REQUIRE(via_terracini == row.s);
    REQUIRE(via_join == row.s);
  }

  // the secant variety of a linear space is the space itself
  ParamVariety<Fp> lin = linear_chart(f, 3, 3);
  REQUIRE(secant_dim_join_oracle(f, lin, rng) == 3);
}

TEST_CASE("fibre defect and the tangent-cone meet", "[engine]") {
  FpField f = test_field();
  Rng rng(3);
  FibreDefect fd = fibre_defect(f, catalog_find("segre:2:2")->recipe.build_fp(f), rng);
  REQUIRE(fd.f == 2);
  REQUIRE(fd.meet_rank == 2);
  REQUIRE(fd.consistent);

  fd = fibre_defect(f, catalog_find("veronese:4:2")->recipe.build_fp(f), rng);
  REQUIRE(fd.s == 8);
  REQUIRE(fd.f == 1);
  REQUIRE(fd.consistent);

  // a random degree-2 fourfold in P^9 is non-defective: s = 9 = r gives f = 0
  ParamVariety<Fp> generic = random_chart(f, 4, 9, 2, rng);
  fd = fibre_defect(f, generic, rng);
  REQUIRE(fd.s == 9);
  REQUIRE(fd.f == 0);
  REQUIRE(fd.meet_rank == 0);
}

TEST_CASE("second fundamental form shapes", "[engine]") {
  FpField f = test_field();
  Rng rng(4);

  // all Hessians of a linear chart vanish
  ParamVariety<Fp> lin = linear_chart(f, 3, 3);
  QuadricSystem<Fp> qs =
      second_fundamental_form(lin, full_rank_frame(f, lin, rng));
  REQUIRE(qs.quadrics.empty());

  // the Veronese surface carries the complete system of quadrics in two
  // directions: affine dimension 3 = dim Sym^2
  ParamVariety<Fp> v22 = veronese(f, 2, 2);
  qs = second_fundamental_form(v22, full_rank_frame(f, v22, rng));
  REQUIRE(qs.dim() == 3);
  REQUIRE(qs.conormal_count == 3);
  for (const Matrix<Fp> &m : qs.quadrics) {
    REQUIRE(m.rows() == 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        REQUIRE(m(i, j) == m(j, i));
  }

  // a smooth quadric hypersurface chart has a single full-rank quadric
  ParamVariety<Fp> smooth = quadric_threefold(f, 5);
  qs = second_fundamental_form(smooth, full_rank_frame(f, smooth, rng));
  REQUIRE(qs.dim() == 1);
  REQUIRE(qs.quadrics[0].rank() == 3);
}

TEST_CASE("tangential defect counts cone directions", "[engine]") {
  FpField f = test_field();
  Rng rng(5);
  REQUIRE(tangential_defect(f, veronese(f, 2, 2), rng) == 0);
  REQUIRE(tangential_defect(f, veronese(f, 3, 2), rng) == 0);
  REQUIRE(tangential_defect(f, cone_over(veronese(f, 2, 2), 1), rng) == 1);
  REQUIRE(tangential_defect(f, cone_over(veronese(f, 2, 2), 2), rng) == 2);
}

TEST_CASE("dual defect from a general tangent hyperplane", "[engine]") {
  FpField f = test_field();
  Rng rng(6);
  REQUIRE(dual_defect(f, quadric_threefold(f, 5), rng) == 0);
  // rank-4 quadric: a cone over a quadric surface, dual defect 1
  REQUIRE(dual_defect(f, quadric_threefold(f, 4), rng) == 1);
  // odd-dimensional Segre scroll: classically dual defective
  REQUIRE(dual_defect(f, segre(f, 1, 2), rng) == 1);
}

TEST_CASE("tangential projection lands in the expected space", "[engine]") {
  FpField f = test_field();
  Rng rng(7);

  ParamVariety<Fp> s22 = segre(f, 2, 2);
  ParamVariety<Fp> X1 = tangential_projection(f, s22, rng);
  REQUIRE(X1.r == 3); // P^(8-4-1)
  REQUIRE(image_dim(f, X1, rng) == 2); // a quadric surface

  ParamVariety<Fp> v32 = veronese(f, 3, 2);
  ParamVariety<Fp> Y1 = tangential_projection(f, v32, rng);
  REQUIRE(Y1.r == 5);
  REQUIRE(image_dim(f, Y1, rng) == 2);

  // non-defective fourfold with r = 2n + 1 projects onto all of P^4
  ParamVariety<Fp> generic = random_chart(f, 4, 9, 2, rng);
  ParamVariety<Fp> Z1 = tangential_projection(f, generic, rng);
  REQUIRE(Z1.r == 4);
  REQUIRE(image_dim(f, Z1, rng) == 4);
}

TEST_CASE("cone vertex detection stabilizes", "[engine]") {
  FpField f = test_field();
  Rng rng(8);
  REQUIRE(cone_vertex(f, cone_over(veronese(f, 2, 2), 1), rng) == 0);
  REQUIRE(cone_vertex(f, veronese(f, 3, 2), rng) == -1);
  REQUIRE(cone_vertex(f, cone_over(segre(f, 2, 2), 2), rng) == 1);
}

TEST_CASE("contact invariants through the tangential projection", "[engine]") {
  // gamma = t(X1) + f and epsilon = d(X1) + f, with theta checked both ways
  EngineOptions opt;
  opt.seed = 31;
  opt.primes = 2;
  opt.trials = 2;
  struct Row {
    const char *name;
    int gamma, epsilon, theta;
  };
  for (const Row &row :
       {Row{"segre:2:2", 2, 2, 3}, Row{"veronese:4:2", 1, 1, 2},
        Row{"cone:1:veronese:2:2", 2, 2, 3}, Row{"veronese:2:2", 1, 1, 2}}) {
    InvariantReport rep =
        full_report(row.name, catalog_find(row.name)->recipe, opt);
    REQUIRE(rep.gamma == row.gamma);
    REQUIRE(rep.epsilon == row.epsilon);
    REQUIRE(rep.theta_formula == row.theta);
    REQUIRE(rep.theta_direct == row.theta);
    REQUIRE(rep.consistent);
  }
}

TEST_CASE("hyperplane sections lower f and t by one", "[engine]") {
  FpField f = test_field();
  Rng rng(9);
  struct Row {
    const char *name;
    std::size_t fX, tX;
  };
  for (const Row &row : {Row{"segre:2:2", 2, 0}, Row{"veronese:3:2", 1, 0},
                         Row{"cone:2:veronese:2:2", 3, 2}}) {
    ParamVariety<Fp> X = catalog_find(row.name)->recipe.build_fp(f);
    for (int round = 0; round < 2; ++round) {
      std::vector<Fp> h;
      for (std::size_t i = 0; i <= X.r; ++i)
        h.push_back(f.random(rng));
      std::size_t expect_f = row.fX > 0 ? row.fX - 1 : 0;
      std::size_t expect_t = row.tX > 0 ? row.tX - 1 : 0;
      REQUIRE(section_fibre_defect(f, X, h, rng, 2) == expect_f);
      REQUIRE(section_tangential_defect(f, X, h, rng, 2) == expect_t);
    }
  }
}

TEST_CASE("reports are deterministic in the seed", "[engine]") {
  EngineOptions opt;
  opt.seed = 99;
  opt.primes = 2;
  opt.trials = 2;
  const CatalogEntry *e = catalog_find("segre:2:2");
  InvariantReport a = full_report(e->name, e->recipe, opt);
  InvariantReport b = full_report(e->name, e->recipe, opt);
  REQUIRE(a.s == b.s);
  REQUIRE(a.primes_used == b.primes_used);
  REQUIRE(a.checks == b.checks);
  REQUIRE(a.flags == b.flags);
}
