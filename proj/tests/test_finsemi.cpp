#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/finsemi.hpp"
#include "kappa/oracles.hpp"

using namespace kappa;

namespace {
  FiniteSemigroup z3() {
    return FiniteSemigroup("Z3", {"0", "1", "2"}, {0, 1, 2, 1, 2, 0, 2, 0, 1});
  }

  // x, x^2, x^3 = x^2
  FiniteSemigroup threshold() {
    return FiniteSemigroup("N", {"x", "xx"}, {1, 1, 1, 1});
  }

  // Brute force: the idempotent among s, s^2, ..., s^(n+1).
  Element idempotent_power(FiniteSemigroup const& S, Element s) {
    Element p = s;
    for (std::size_t i = 0; i <= S.order(); ++i) {
      if (S.product(p, p) == p) {
        return p;
      }
      p = S.product(p, s);
    }
    FAIL("no idempotent power");
    return p;
  }
}  // namespace

TEST_CASE("tables are validated") {
  FiniteSemigroup trivial("trivial", {"e"}, {0});
  CHECK(trivial.order() == 1);
  CHECK(z3().order() == 3);
  // (0 0) 0 = 1 0 = 1 but 0 (0 0) = 0 1 = 0
  CHECK_THROWS_AS(FiniteSemigroup("bad", {"p", "q"}, {1, 0, 0, 0}), AlgebraError);
  CHECK_THROWS_AS(FiniteSemigroup("bad", {"p", "p"}, {0, 0, 0, 0}), AlgebraError);
  CHECK_THROWS_AS(FiniteSemigroup("bad", {"p"}, {1}), AlgebraError);
  CHECK_THROWS_AS(FiniteSemigroup("bad", {"p", "q"}, {0, 0, 0}), AlgebraError);
}

TEST_CASE("monogenic profiles") {
  auto S = z3();
  CHECK(monogenic_profile(S, 0) == MonogenicProfile{1, 1});
  CHECK(monogenic_profile(S, 1) == MonogenicProfile{1, 3});
  CHECK(monogenic_profile(threshold(), 0) == MonogenicProfile{2, 1});
  for (auto const& f : oracles::fixtures()) {
    for (Element s = 0; s < f.semigroup.order(); ++s) {
      auto p = monogenic_profile(f.semigroup, s);
      CHECK(f.semigroup.power(s, p.index)
            == f.semigroup.power(s, p.index + p.period));
      if (p.index > 1) {
        // minimality of the index
        CHECK(f.semigroup.power(s, p.index - 1)
              != f.semigroup.power(s, p.index - 1 + p.period));
      }
    }
  }
}

TEST_CASE("omega powers") {
  CHECK(omega_power(z3(), 1) == 0);
  FiniteSemigroup left_zero("L", {"l1", "l2"}, {0, 0, 1, 1});
  CHECK(omega_power(left_zero, 0) == 0);
  CHECK(omega_power(left_zero, 1) == 1);
  CHECK(omega_power(threshold(), 0) == 1);
  for (auto const& f : oracles::fixtures()) {
    for (Element s = 0; s < f.semigroup.order(); ++s) {
      CHECK(omega_power(f.semigroup, s) == idempotent_power(f.semigroup, s));
    }
  }
}

TEST_CASE("omega minus q") {
  auto S = z3();
  CHECK(omega_minus_q(S, 1, 1) == 2);
  CHECK(omega_minus_q(S, 0, 4) == 0);
  CHECK_THROWS_AS(omega_minus_q(S, 1, 0), PreconditionError);

  // profile (2, 3): x^5 = x^2; the least m >= 2 with m = -1 mod 3 is 2
  auto const& fx = oracles::fixtures();
  auto it = std::find_if(fx.begin(), fx.end(),
                         [](auto const& f) { return f.name == "C2_3"; });
  REQUIRE(it != fx.end());
  auto const& C = it->semigroup;
  CHECK(monogenic_profile(C, 0) == MonogenicProfile{2, 3});
  Element x2 = omega_minus_q(C, 0, 1);
  CHECK(x2 == C.power(0, 2));
  // x^(omega-1) x = x^omega
  CHECK(C.product(x2, 0) == omega_power(C, 0));

  for (auto const& f : oracles::fixtures()) {
    auto const& T = f.semigroup;
    for (Element s = 0; s < T.order(); ++s) {
      Element e = omega_power(T, s);
      for (std::size_t q = 1; q <= 5; ++q) {
        Element y = omega_minus_q(T, s, q);
        // s^(omega-q) s^q = s^omega, and it lies in the group at s^omega
        CHECK(T.product(y, T.power(s, q)) == e);
        CHECK(T.product(y, e) == y);
        CHECK(T.product(e, y) == y);
      }
    }
  }
}

TEST_CASE("identity adjoined") {
  auto S1 = z3().adjoin_identity();
  CHECK(S1.order() == 4);
  CHECK(S1.has_adjoined_identity());
  for (Element s = 0; s < 4; ++s) {
    CHECK(S1.product(0, s) == s);
    CHECK(S1.product(s, 0) == s);
  }
  CHECK(S1.product(2, 3) == 1);  // 1 + 2 = 0 in Z3, shifted by one
}

TEST_CASE("evaluating words") {
  FiniteSemigroup Z2("Z2", {"0", "1"}, {0, 1, 1, 0});
  GeneratorMap    g;
  g.set(Symbol::base('a'), 1);
  CHECK(delta_eval(Z2, g, "a") == 1);
  CHECK(delta_eval(Z2, g, "aa") == 0);
  CHECK_THROWS_AS(delta_eval(Z2, g, "ab"), AlgebraError);

  FiniteSemigroup R("R", {"r1", "r2"}, {0, 1, 0, 1});
  GeneratorMap    h;
  h.set(Symbol::base('a'), 0);
  h.set(Symbol::base('b'), 1);
  CHECK(delta_eval(R, h, "aba") == 0);
  CHECK(delta_eval(R, h, "ab") == 1);
}

TEST_CASE("semigroup files") {
  auto loaded = load_semigroup(R"(# right zero
semigroup R 2
elements r1 r2
r1 r2
r1 r2
generators a=r1 b=r2
)");
  CHECK(loaded.semigroup.order() == 2);
  REQUIRE(loaded.generators);
  CHECK((*loaded.generators)(Symbol::base('b')) == 1);
  auto again = load_semigroup(to_text(loaded.semigroup, loaded.generators));
  CHECK(again.semigroup == loaded.semigroup);

  CHECK_THROWS_AS(load_semigroup("semigroup R 2\nelements r1\n"), ParseError);
  CHECK_THROWS_AS(load_semigroup("semigroup R 1\nelements e\nf\n"), ParseError);
  CHECK_THROWS_AS(load_semigroup("semigroup R 2\nelements r1 r2\nr1 r2\nr1 r2\n"
                                 "generators a=r1\n"),
                  AlgebraError);
  CHECK_THROWS_AS(load_semigroup_file("/nonexistent.sg"), ParseError);
}
