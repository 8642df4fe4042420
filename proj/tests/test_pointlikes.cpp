#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/oracles.hpp"
#include "kappa/pointlikes.hpp"
#include "kappa/superpose.hpp"

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

  struct Instance {
    PointlikeSystem sys;
    SolutionMap     eta;
  };

  Instance instance(oracles::Fixture const& f, std::vector<std::string> const& terms) {
    std::vector<std::string>             vars;
    std::map<std::string, MonoidElement> phis;
    SolutionMap                          eta;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string x = "x" + std::to_string(i + 1);
      vars.push_back(x);
      eta[x]  = parse_term(terms[i]);
      phis[x] = eval(eta[x], f.semigroup, f.generators);
    }
    return {PointlikeSystem(vars, phis), eta};
  }

  // Sl |= Phi_l lhs = Phi_l rhs, from the factor sets of the expansions.
  // Exponent e = 2l + 2 keeps every factor of the pseudowords visible.
  bool same_factors(Term const& x, Term const& y, std::size_t l) {
    auto set = [&](Term const& t) {
      std::string      w = expand_base(t, 2 * l + 2);
      std::set<std::string> out;
      for (std::size_t p = 0; p + l < w.size(); ++p) {
        out.insert(w.substr(p, l + 1));
      }
      return out;
    };
    return set(x) == set(y);
  }
}  // namespace

TEST_CASE("systems") {
  CHECK_THROWS_AS(PointlikeSystem({"x"}, {{"x", 0}}), PreconditionError);
  CHECK_THROWS_AS(PointlikeSystem({"x", "y"}, {{"x", 0}}), PreconditionError);
  CHECK_THROWS_AS(PointlikeSystem({"x", "x"}, {{"x", 0}}), PreconditionError);
  PointlikeSystem s({"x", "y"}, {{"x", 0}, {"y", std::nullopt}});
  CHECK(s.constraint("y") == std::nullopt);
}

TEST_CASE("semilattice checker") {
  SlChecker Sl;
  CHECK(Sl.check(parse_term("ab"), parse_term("ba^w")).is_holds());
  CHECK(Sl.check(parse_term("ab"), parse_term("a")).is_fails());
  CHECK_FALSE(Sl.locally_trivial());
}

TEST_CASE("falsifier") {
  auto             fx = oracles::fixtures();
  FalsifierChecker F({fx[1].semigroup, fx[8].semigroup});  // Z2 and T2
  CHECK(F.check(parse_term("ab"), parse_term("ba")).is_fails());
  CHECK(F.check(parse_term("a^w-1a"), parse_term("a^w-1a^w-1aa")).is_unknown());
  CHECK(F.check(parse_term("ab"), parse_term("ab")).is_holds());
  CHECK_THROWS_AS(FalsifierChecker({}), PreconditionError);
}

TEST_CASE("solutions in each mode") {
  auto      f = fixture("Z2");
  SlChecker Sl;
  auto      same = instance(f, {"ab", "ab"});
  for (auto mode : {CheckMode::plain(), CheckMode::with_dk(2), CheckMode::with_d(4)}) {
    CHECK(check_solution(same.sys, f.semigroup, f.generators, same.eta, Sl, mode)
              .is_holds());
  }

  // a wrong constraint is a hard failure
  PointlikeSystem wrong({"x1", "x2"}, {{"x1", 1}, {"x2", 0}});
  auto v = check_solution(wrong, f.semigroup, f.generators, same.eta, Sl,
                          CheckMode::plain());
  REQUIRE(v.is_fails());
  CHECK(v.variables == std::pair<std::string, std::string>{"x1", "x1"});

  // t_2 of the two sides: "ab" vs "ba"
  auto suffixes = instance(f, {"ab(ab)^w", "abba"});
  auto w = check_solution(suffixes.sys, f.semigroup, f.generators, suffixes.eta,
                          Sl, CheckMode::with_dk(2));
  REQUIRE(w.is_fails());
  CHECK(w.witness.find("t_2") != std::string::npos);

  CHECK_THROWS_AS(check_semidirect_dk(TruncChecker({TruncVariety::Kind::K}),
                                      parse_term("a"), parse_term("b"), 1),
                  PreconditionError);
}

TEST_CASE("bounded checks in D mode") {
  SlChecker   Sl;
  Term        x = parse_term("(ab)^w");
  Term        y = parse_term("(ab)^w ab");
  std::size_t L = 6;
  for (std::size_t l = 1; l <= L; ++l) {
    REQUIRE(same_factors(x, y, l));
  }
  auto v = check_semidirect_d(Sl, x, y, L);
  CHECK(v.is_unknown());
  CHECK(v.bound == L);

  // one more a^w b block changes no factor set; bb is new at level 1
  Term p = parse_term("a^w b a^w");
  Term q = parse_term("a^w b a^w b a^w");
  CHECK(check_semidirect_d(Sl, p, q, 1).is_unknown());
  auto fails = check_semidirect_d(Sl, p, parse_term("a^w b b a^w"), 5);
  REQUIRE(fails.is_fails());
  CHECK(fails.level == std::size_t(1));
}

TEST_CASE("bounds are monotone") {
  // Fails at L never turns into unknown at a larger bound, and a pair that
  // passes D mode up to L passes D_k mode for k <= L.
  SlChecker    Sl;
  oracles::Rng rng(21);
  for (int n = 0; n < 150; ++n) {
    Term x = oracles::random_term(rng, {"ab", 3, 2, 0.5});
    Term y = rng() % 2 ? x * oracles::random_term(rng, {"ab", 2, 2, 0.5}) : x;
    bool failed = false;
    for (std::size_t L = 1; L <= 5; ++L) {
      auto v = check_semidirect_d(Sl, x, y, L);
      CHECK_FALSE((failed && !v.is_fails()));
      failed = v.is_fails();
      if (!v.is_fails()) {
        for (std::size_t k = 1; k <= L; ++k) {
          CHECK_FALSE(check_semidirect_dk(Sl, x, y, k).is_fails());
        }
      }
    }
  }
}

TEST_CASE("D_k-pointlikes") {
  auto z     = fixture("Z2");
  auto gens  = oracles::restrict_to(z.generators, "a");
  auto whole = compute_pointlikes(z.semigroup, gens, Side::suffix, 1);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].elements == std::set<Element>{0, 1});
  CHECK(whole[0].witness == "a");

  auto r  = fixture("right_zero");
  auto rg = oracles::restrict_to(r.generators, "ab");
  auto singles = compute_pointlikes(r.semigroup, rg, Side::suffix, 1);
  REQUIRE(singles.size() == 2);
  CHECK(singles[0].elements == std::set<Element>{0});
  CHECK(singles[1].elements == std::set<Element>{1});

  // every delta u lies in some class
  for (auto const& f : oracles::fixtures()) {
    auto g = oracles::restrict_to(f.generators, "ab");
    for (std::size_t k = 1; k <= 3; ++k) {
      for (auto side : {Side::prefix, Side::suffix}) {
        auto classes = compute_pointlikes(f.semigroup, g, side, k);
        for (auto const& u : oracles::all_words("ab", 1, 5)) {
          Element s = delta_eval(f.semigroup, g, u);
          CHECK(std::any_of(classes.begin(), classes.end(),
                            [&](auto const& c) { return c.elements.count(s); }));
        }
      }
    }
  }
}

TEST_CASE("K_k-pointlikes against enumeration") {
  for (auto const& f : oracles::fixtures()) {
    auto g = oracles::restrict_to(f.generators, "ab");
    for (std::size_t k = 1; k <= 3; ++k) {
      std::map<std::string, std::set<Element>> brute;
      for (auto const& u : oracles::all_words("ab", 1, k + 5)) {
        brute[u.substr(0, k)].insert(delta_eval(f.semigroup, g, u));
      }
      CHECK(projection_classes(f.semigroup, g, Side::prefix, k) == brute);
    }
  }
}

TEST_CASE("transforming solutions") {
  auto      t = fixture("trivial");
  SlChecker Sl;
  auto      same = instance(t, {"abc", "abc"});
  auto r = transform_solution(same.sys, t.semigroup, t.generators, same.eta, 2,
                              Sl, 4);
  CHECK_FALSE(r.refused);
  CHECK(r.value.is_holds());
  CHECK(r.solution.is_holds());
  CHECK(r.eta.at("x1") == r.eta.at("x2"));
  for (auto const& row : r.levels) {
    for (auto v : row.levels) {
      CHECK(v == Verdict::Kind::holds);
    }
  }

  auto z  = fixture("Z2");
  auto zi = instance(z, {"a^w-1a aa", "aa a^w-1a"});
  auto zr = transform_solution(zi.sys, z.semigroup, z.generators, zi.eta, 3, Sl, 6);
  CHECK_FALSE(zr.refused);
  CHECK(zr.value.is_holds());
  CHECK(zr.solution.is_unknown());
  CHECK(check_identity({TruncVariety::Kind::LI}, zr.eta.at("x1"), zr.eta.at("x2"))
            .is_holds());
  for (std::size_t l = 1; l <= 6; ++l) {
    CHECK(same_factors(zr.eta.at("x1"), zr.eta.at("x2"), l));
  }

  CHECK_THROWS_AS(transform_solution(zi.sys, z.semigroup, z.generators, zi.eta,
                                     2, Sl, 4),
                  PreconditionError);
  auto bad = instance(z, {"(ab)^w-1", "(ab)^w-1a"});
  auto br  = transform_solution(bad.sys, z.semigroup, z.generators, bad.eta, 3, Sl, 6);
  CHECK(br.refused);
  CHECK(br.input.is_fails());
}

TEST_CASE("system files") {
  auto f   = fixture("Z2");
  auto sys = parse_system("vars x y\nphi x=0 y=1   # constraints\n"
                          "eta x=(ab)^w-1 ab y=a\n",
                          f.semigroup);
  CHECK(sys.system.variables() == std::vector<std::string>{"x", "y"});
  CHECK(sys.system.constraint("y") == Element(1));
  CHECK(sys.eta.at("x") == parse_term("(ab)^w-1ab"));
  CHECK_THROWS_AS(parse_system("vars x y\nphi x=0\n", f.semigroup), ParseError);
  CHECK_THROWS_AS(parse_system("vars x y\nphi x=0 y=q\n", f.semigroup), ParseError);
  CHECK_THROWS_AS(parse_system("vars x y\nphi x=0 y=0\neta x=(a\n", f.semigroup),
                  ParseError);
  CHECK_THROWS_AS(parse_system("bogus\n", f.semigroup), ParseError);
}
