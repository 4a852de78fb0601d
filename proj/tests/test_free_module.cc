#include <catch2/catch_amalgamated.hpp>

#include <pbwgb/free_module.hh>
#include <pbwgb/io.hh>

#include "support/properties.hh"

using namespace pbwgb;

TEST_CASE("vector arithmetic and the two-sided action") {
  Presentation p = make_preset("weyl", "1");
  testsupport::Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    Vec u = testsupport::random_vec(rng, p, 2, 3, 2);
    Vec v = testsupport::random_vec(rng, p, 2, 3, 2);
    Poly a = testsupport::random_poly(rng, p, 2, 2);
    Poly b = testsupport::random_poly(rng, p, 2, 2);
    CHECK(add(p, u, v) == add(p, v, u));
    CHECK(sub(p, add(p, u, v), v) == u);
    // action distributes over vector addition
    CHECK(act(p, a, add(p, u, v), b) == add(p, act(p, a, u, b), act(p, a, v, b)));
    // and composes: a(a'ub')b = (aa')u(b'b)
    CHECK(act(p, a, act(p, b, u, b), a) == act(p, p.mul(a, b), u, p.mul(b, a)));
    CHECK(lmul(p, a, u) == act(p, a, u, p.one()));
  }
}

TEST_CASE("leading data under both module orders") {
  Presentation p = make_preset("qplane", "3/5");
  Vec v = parse_vec("(x^2, 2*y^3)", p);
  ModOrder top{ModKind::top, p.order()};
  ModOrder pot{ModKind::pot, p.order()};
  ModExp lt = leading_exp(top, v);
  CHECK(lt.comp == 1);
  CHECK(lt.exp == Exponent{0, 3});
  CHECK(leading_coeff(top, v) == Scalar(2));
  ModExp lp = leading_exp(pot, v);
  CHECK(lp.comp == 0);
  CHECK(lp.exp == Exponent{2, 0});
  CHECK(leading_coeff(pot, v) == Scalar(1));
  CHECK_THROWS_AS(leading_exp(top, Vec(2)), math_error);
}

TEST_CASE("split and join are inverse on enveloping exponents") {
  Presentation r = make_preset("mq2", "3/5");
  Presentation env = enveloping(r, EnvKind::comp_up);
  testsupport::Rng rng(11);
  for (int i = 0; i < 30; ++i) {
    Exponent l = testsupport::random_exponent(rng, 4, 4);
    Exponent rr = testsupport::random_exponent(rng, 4, 4);
    Exponent e = join_env_exponent(env, l, rr);
    auto [l2, r2] = split_env_exponent(env, e);
    CHECK(l2 == l);
    CHECK(r2 == rr);
  }
  CHECK_THROWS_AS(join_env_exponent(env, Exponent{1, 0}, Exponent{0, 0, 0, 1}), math_error);
  CHECK_THROWS_AS(detail::env_info(r), math_error);
}

TEST_CASE("embeddings respect the two multiplications") {
  Presentation r = make_preset("qplane", "I*sqrt2");
  Presentation env = enveloping(r, EnvKind::comp_up);
  testsupport::Rng rng(5);
  for (int i = 0; i < 15; ++i) {
    Poly a = testsupport::random_poly(rng, r, 3, 2);
    Poly b = testsupport::random_poly(rng, r, 3, 2);
    CHECK(embed_left(env, r.mul(a, b)) == env.mul(embed_left(env, a), embed_left(env, b)));
    // the right copy carries the opposite product
    CHECK(embed_right(env, r.mul(a, b)) == env.mul(embed_right(env, b), embed_right(env, a)));
    // tensor splits as a product of the two embeddings
    CHECK(tensor_poly(env, a, b) == env.mul(embed_left(env, a), embed_right(env, b)));
  }
}

TEST_CASE("multiplication map collapses tensors") {
  Presentation r = make_preset("weyl", "1");
  Presentation env = enveloping(r, EnvKind::elim_up);
  testsupport::Rng rng(17);
  for (int i = 0; i < 15; ++i) {
    Poly a = testsupport::random_poly(rng, r, 3, 2);
    Poly b = testsupport::random_poly(rng, r, 3, 2);
    CHECK(mult_map(r, env, tensor_poly(env, a, b)) == r.mul(a, b));
  }
  // kernel elements die: x (x) 1 - 1 (x) x
  Poly x = r.variable(0);
  Poly d = env.sub(embed_left(env, x), embed_right(env, x));
  CHECK(mult_map(r, env, d).is_zero());
}

TEST_CASE("environment action matches the sandwich product") {
  Presentation r = make_preset("qplane", "3/5");
  Presentation env = enveloping(r, EnvKind::comp_up);
  testsupport::Rng rng(23);
  for (int i = 0; i < 15; ++i) {
    Poly a = testsupport::random_poly(rng, r, 2, 2);
    Poly b = testsupport::random_poly(rng, r, 2, 2);
    Vec f = testsupport::random_vec(rng, r, 2, 2, 2);
    CHECK(env_act(r, env, tensor_poly(env, a, b), f) == act(r, a, f, b));
  }
}

TEST_CASE("lifting a family adds one kernel row per variable and slot") {
  Presentation r = make_preset("qplane", "3/5");
  Presentation env = enveloping(r, EnvKind::comp_up);
  std::vector<Vec> f = parse_vectors("(x, y)\n(y^2, 0)", r);
  auto lifted = lift_generators(r, env, f, 2);
  REQUIRE(lifted.size() == f.size() + 2 * r.n());
  CHECK(lifted[0] == embed_left(env, f[0]));
  CHECK(lifted[1] == embed_left(env, f[1]));
  for (std::size_t k = 0; k < lifted.size(); ++k) {
    // every lifted row multiplies back into the bimodule generated by f
    Vec img = mult_map(r, env, lifted[k]);
    if (k < 2)
      CHECK(img == f[k]);
    else
      CHECK(img.is_zero());
  }
  CHECK_THROWS_AS(lift_generators(r, env, f, 3), math_error);

  Vec head = project_head(lifted[0], 1);
  CHECK(head.size() == 1);
  CHECK(head.c[0] == lifted[0].c[0]);
  CHECK_THROWS_AS(project_head(head, 5), math_error);
}

TEST_CASE("left and right copies commute inside the envelope") {
  auto rep = testsupport::env_centrality();
  INFO(rep.note);
  CHECK(rep.cases >= 100);
  CHECK(rep.failures == 0);
}

TEST_CASE("multiplication map law suite") {
  auto rep = testsupport::mult_map_law();
  INFO(rep.note);
  CHECK(rep.cases >= 100);
  CHECK(rep.failures == 0);
}

TEST_CASE("leading exponent shape suite") {
  auto rep = testsupport::exponent_lemma_shape();
  INFO(rep.note);
  CHECK(rep.cases >= 100);
  CHECK(rep.failures == 0);
}
