#include <doctest.h>

#include <thread>

#include "kappa/error.hpp"
#include "kappa/oracles.hpp"
#include "kappa/superpose.hpp"
#include "kappa/theta.hpp"
#include "kappa/truncation.hpp"

using namespace kappa;

namespace {
  oracles::Fixture fixture(std::string const& name) {
    for (auto& f : oracles::fixtures()) {
      if (f.name == name) {
        return f;
      }
    }
    FAIL("no fixture " << name);
    return oracles::fixtures()[0];
  }
}  // namespace

TEST_CASE("k must exceed |S|") {
  auto f = fixture("Z2");
  CHECK_THROWS_AS(ThetaContext(f.semigroup, f.generators, 2), PreconditionError);
  CHECK_NOTHROW(ThetaContext(f.semigroup, f.generators, 3));
}

TEST_CASE("index pairs") {
  auto         t = fixture("trivial");
  ThetaContext trivial(t.semigroup, t.generators, 2);
  CHECK(trivial.fix_ij("ab") == IndexPair{2, 2, "b"});

  auto         z = fixture("Z2");  // a -> 1
  ThetaContext z2(z.semigroup, z.generators, 3);
  CHECK(z2.fix_ij("aaa") == IndexPair{2, 3, "aa"});

  auto         r = fixture("right_zero");  // a -> r1, b -> r2
  ThetaContext rz(r.semigroup, r.generators, 3);
  CHECK(rz.fix_ij("aba") == IndexPair{2, 3, "ba"});
  CHECK_THROWS(rz.fix_ij("ab"));
}

TEST_CASE("lambda and rho") {
  auto         t = fixture("trivial");
  ThetaContext ctx(t.semigroup, t.generators, 2);
  CHECK(ctx.lambda_k(parse_term("a")) == parse_term("a"));
  CHECK(ctx.lambda_k(parse_term("abab")) == parse_term("ab b^w-1b"));
  CHECK(ctx.rho_k(parse_term("a")).is_empty());
  CHECK(ctx.rho_k(parse_term("abab")) == parse_term("b^w-1b"));

  oracles::Rng rng(8);
  for (int n = 0; n < 100; ++n) {
    Term u = oracles::random_term(rng);
    CHECK(ctx.lambda_k(u) == ctx.lambda_k(Term::word(prefix_k(u, 2))));
    CHECK(ctx.rho_k(u) == ctx.rho_k(Term::word(suffix_k(u, 2))));
  }
}

TEST_CASE("psi and theta") {
  auto         t = fixture("trivial");
  ThetaContext ctx(t.semigroup, t.generators, 2);
  CHECK(ctx.psi_k(parse_term("[abc]")) == parse_term("b^w c c^w"));
  CHECK(ctx.psi_k(Term()).is_empty());
  CHECK(ctx.psi_k(parse_term("[abc][bca]"))
        == ctx.psi_k(parse_term("[abc]")) * ctx.psi_k(parse_term("[bca]")));
  CHECK(ctx.theta_k(parse_term("ab")).is_empty());
  CHECK(ctx.theta_k(parse_term("abc")) == parse_term("b^w c c^w"));
  CHECK(ctx.theta_prime(parse_term("a")) == parse_term("a"));
}

TEST_CASE("theta' keeps the value") {
  oracles::Rng rng(12);
  for (auto const& f : oracles::fixtures()) {
    ThetaContext ctx(f.semigroup, f.generators, f.semigroup.order() + 1);
    for (int n = 0; n < 60; ++n) {
      Term u = oracles::random_term(rng);
      CHECK(eval(ctx.theta_prime(u), f.semigroup, f.generators)
            == eval(u, f.semigroup, f.generators));
    }
    // long words: the telescoped product keeps the value too
    for (int n = 0; n < 20; ++n) {
      Term w = Term::word(oracles::random_word(rng, "abc", 1, 40));
      CHECK(eval(ctx.theta_k(w), f.semigroup, f.generators).has_value()
            == (w.finite_length() > ctx.k()));
      CHECK(eval(ctx.theta_prime(w), f.semigroup, f.generators)
            == eval(w, f.semigroup, f.generators));
    }
  }
}

TEST_CASE("theta' is D-stable") {
  // Two sides agreeing in Sl*D_k map to sides agreeing in LI.
  auto         z = fixture("Z2");
  ThetaContext ctx(z.semigroup, z.generators, 3);
  Term         x = ctx.theta_prime(parse_term("a^w-1a aa"));
  Term         y = ctx.theta_prime(parse_term("aa a^w-1a"));
  CHECK(check_identity({TruncVariety::Kind::LI}, x, y).is_holds());
}

TEST_CASE("theta' from several threads") {
  auto         f = fixture("T2");
  ThetaContext ctx(f.semigroup, f.generators, 5);
  oracles::Rng rng(2);
  std::vector<Term> terms;
  for (int n = 0; n < 40; ++n) {
    terms.push_back(oracles::random_term(rng));
  }
  std::vector<Term>        out(terms.size());
  std::vector<std::thread> pool;
  for (int p = 0; p < 4; ++p) {
    pool.emplace_back([&, p] {
      for (std::size_t i = p; i < terms.size(); i += 4) {
        out[i] = ctx.theta_prime(terms[i]);
      }
    });
  }
  for (auto& th : pool) {
    th.join();
  }
  ThetaContext serial(f.semigroup, f.generators, 5);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    CHECK(out[i] == serial.theta_prime(terms[i]));
  }
}
