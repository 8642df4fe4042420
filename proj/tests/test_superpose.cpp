#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/oracles.hpp"
#include "kappa/superpose.hpp"
#include "kappa/truncation.hpp"

using namespace kappa;

namespace {
  std::string str(Term const& t) {
    return to_string(t);
  }

  // Phi_k of a word, written out letter by letter.
  std::string windows(std::string const& w, std::size_t k) {
    std::string out;
    for (std::size_t p = 0; p + k < w.size(); ++p) {
      out += "[" + w.substr(p, k + 1) + "]";
    }
    return out.empty() ? "1" : out;
  }

  // t = i_k(t) tau, checked by evaluation in every fixture.
  bool factors_prefix(Term const& t, Term const& tau, std::size_t k) {
    Term rebuilt = Term::word(prefix_k(t, k)) * tau;
    for (auto const& f : oracles::fixtures()) {
      if (eval(rebuilt, f.semigroup, f.generators)
          != eval(t, f.semigroup, f.generators)) {
        return false;
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("idempotent terms") {
  CHECK(e_term("a") == parse_term("a^w-1a"));
  auto fx = oracles::fixtures();
  for (auto const& f : fx) {
    Element s = delta_eval(f.semigroup, f.generators, "ab");
    CHECK(eval(e_term("ab"), f.semigroup, f.generators)
          == omega_power(f.semigroup, s));
  }
  CHECK(eval(e_term("a"), fx[2].semigroup, fx[2].generators) == Element(0));
}

TEST_CASE("peeling off a prefix") {
  CHECK(factor_prefix(parse_term("abc"), 2) == parse_term("c"));
  CHECK(factor_prefix(parse_term("a^w-1"), 2) == parse_term("a^w-3"));
  CHECK(factor_prefix(parse_term("(ab)^w-1c"), 1)
        == parse_term("b(ab)^w-2c"));
  CHECK_THROWS_AS(factor_prefix(parse_term("ab"), 3), PreconditionError);

  oracles::Rng rng(9);
  for (int n = 0; n < 200; ++n) {
    Term        t = oracles::random_term(rng);
    std::size_t k = 1 + rng() % 5;
    if (t.is_finite() && t.finite_length() < k) {
      continue;
    }
    CHECK(factors_prefix(t, factor_prefix(t, k), k));
    Term tau = factor_suffix(t, k);
    Term rebuilt = tau * Term::word(suffix_k(t, k));
    for (auto const& f : oracles::fixtures()) {
      CHECK(eval(rebuilt, f.semigroup, f.generators)
            == eval(t, f.semigroup, f.generators));
    }
  }
}

TEST_CASE("superposition of words") {
  CHECK(str(phi(parse_term("abc"), 1)) == "[ab][bc]");
  CHECK(phi(parse_term("ab"), 2).is_empty());
  CHECK(phi(Term(), 1).is_empty());
  oracles::Rng rng(1);
  for (int n = 0; n < 300; ++n) {
    std::string w = oracles::random_word(rng, "abc", 1, 40);
    std::size_t k = 1 + rng() % 4;
    CHECK(str(phi(Term::word(w), k)) == windows(w, k));
  }
}

TEST_CASE("superposition of powers") {
  Term t = parse_term("(ab)^w-1");
  CHECK(str(phi(t, 1)) == "[ab]([ba][ab])^w-1([ba][ab])^w-1");
  CHECK(str(phi(Term::word(expand_base(t, 5)), 1)) == "[ab][ba][ab][ba][ab][ba][ab][ba][ab]");
  // a^(w-1) has w-3 windows [aaa]: twice (w-2), plus one
  CHECK(str(phi(parse_term("a^w-1"), 2)) == "([aaa][aaa])^w-1([aaa][aaa])^w-1[aaa]");
  // Phi_k is multiplicative across a boundary only with the right context
  Superposer sp(2);
  CHECK(str(sp.phi_after("ab", parse_term("c"))) == "[abc]");
  CHECK(sp.suffix_after("ab", parse_term("cd")) == "cd");
}

TEST_CASE("the action on pairs") {
  CHECK(bk_action("", parse_term("<,b>"), 1) == parse_term("<,b>"));
  CHECK(bk_action("a", parse_term("<,b>"), 1) == parse_term("<a,b>"));
  CHECK(bk_action("ab", parse_term("<c,d>"), 2) == parse_term("<bc,d>"));
}

TEST_CASE("beta' and nu") {
  CHECK(beta_prime(parse_term("a"), 3) == parse_term("<,a>"));
  CHECK(beta_prime(parse_term("ab"), 1) == parse_term("<,a><a,b>"));
  CHECK(str(beta_prime(parse_term("abc"), 1)) == "<,a><a,b><b,c>");
  CHECK_THROWS_AS(beta_prime(Term(), 1), PreconditionError);

  CHECK(nu(parse_term("<,a>"), 1).is_empty());
  CHECK(nu(parse_term("<a,b>"), 1) == parse_term("[ab]"));
  CHECK(nu(parse_term("<,a><a,b>"), 1) == parse_term("[ab]"));
  CHECK(nu(beta_prime(parse_term("abc"), 1), 1) == phi(parse_term("abc"), 1));

  oracles::Rng rng(4);
  for (int n = 0; n < 100; ++n) {
    Term        t = oracles::random_term(rng, {"ab", 3, 3, 0.4});
    std::size_t k = 1 + rng() % 3;
    Term        x = phi(t, k);
    Term        y = nu(beta_prime(t, k), k);
    Term        z = phi_via_factorization(t, k);
    for (int m = 0; m < 5; ++m) {
      auto T    = oracles::random_semigroup(rng);
      auto wmap = oracles::random_window_map(rng, T, "ab", k);
      CHECK(eval(x, T, wmap) == eval(y, T, wmap));
      CHECK(eval(x, T, wmap) == eval(z, T, wmap));
    }
  }
}
