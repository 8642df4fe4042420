#include <doctest.h>

#include "kappa/error.hpp"
#include "kappa/oracles.hpp"
#include "kappa/terms.hpp"

using namespace kappa;

namespace {
  Term a = Term::letter(Symbol::base('a'));
  Term b = Term::letter(Symbol::base('b'));
  Term c = Term::letter(Symbol::base('c'));

  Term w1(Term const& x) {
    return Term::omega_minus_one(x);
  }
}  // namespace

TEST_CASE("parsing and sugar") {
  Term t = parse_term("a b a");
  REQUIRE(t.kind() == Term::Kind::concat);
  CHECK(t.children().size() == 3);
  CHECK(t == Term::concat({a, b, a}));

  CHECK(parse_term("(a b)^w") == Term::concat({w1(a * b), a, b}));
  CHECK(parse_term("a^w-2") == w1(a) * w1(a));
  CHECK(parse_term("a^{w-2}") == parse_term("a^w-2"));
  CHECK(parse_term("a^w+2") == w1(a) * parse_term("aaa"));
  CHECK(parse_term("(ab)^3") == parse_term("ababab"));
  CHECK(parse_term("1").is_empty());
  CHECK(parse_term("[abc][bcd]").children().size() == 2);
  CHECK(parse_term("<,a><a,b>").children()[1].symbol() == Symbol::pair("a", 'b'));

  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("(ab"), ParseError);
  CHECK_THROWS_AS(parse_term("a^0"), ParseError);
  CHECK_THROWS_AS(parse_term("a^x"), ParseError);
  CHECK_THROWS_AS(parse_term("A"), ParseError);
  CHECK_THROWS_AS(parse_term("a1"), ParseError);
  CHECK_THROWS_AS(parse_term("a^20000"), ParseError);
}

TEST_CASE("printing round-trips") {
  oracles::Rng rng(7);
  for (int n = 0; n < 300; ++n) {
    Term t = oracles::random_term(rng);
    CHECK(parse_term(to_string(t)) == t);
  }
  CHECK(to_string(Term()) == "1");
  CHECK(to_string(parse_term("(ab)^w-1c")) == "(ab)^w-1c");
}

TEST_CASE("concatenation is flattened") {
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * Term() == a);
  CHECK(Term::concat({}).is_empty());
  CHECK(Term::concat({a}) == a);
  CHECK(w1(Term()).is_empty());
  CHECK(Term::repeat(a * b, 2) == parse_term("abab"));
  CHECK(Term::repeat(a, 0).is_empty());
}

TEST_CASE("evaluation") {
  auto fx = oracles::fixtures();
  auto find = [&](std::string const& name) {
    return *std::find_if(fx.begin(), fx.end(),
                         [&](auto const& f) { return f.name == name; });
  };
  auto Z3 = find("Z3");
  CHECK(eval(parse_term("a^w-1"), Z3.semigroup, Z3.generators) == Element(2));
  auto T = find("trivial");
  CHECK(eval(parse_term("(ab)^w-1ab"), T.semigroup, T.generators) == Element(0));
  CHECK(eval(Term(), T.semigroup, T.generators) == std::nullopt);

  // e_u evaluates to the idempotent power, found here by brute force
  for (auto const& f : fx) {
    auto const& S = f.semigroup;
    for (std::string u : {"a", "ab", "cab"}) {
      Element s = delta_eval(S, f.generators, u);
      Element e = s;
      while (S.product(e, e) != e) {
        e = S.product(e, s);
      }
      CHECK(eval(parse_term("(" + u + ")^w"), S, f.generators) == e);
    }
  }
  GeneratorMap only_a;
  only_a.set(Symbol::base('a'), 0);
  CHECK_THROWS_AS(eval(parse_term("ab"), T.semigroup, only_a), AlgebraError);
}

TEST_CASE("finite or infinite") {
  auto w = finite_base_word(parse_term("aba"));
  REQUIRE(w);
  CHECK(*w == "aba");
  CHECK_FALSE(word_or_infinite(parse_term("a^w-1")));
  CHECK_FALSE(word_or_infinite(parse_term("a(b)^w-1c")));
  CHECK(parse_term("aba").finite_length() == 3);
}

TEST_CASE("expansion") {
  CHECK(expand_base(parse_term("(ab)^w-1"), 3) == "ababab");
  CHECK(expand_base(a, 9) == "a");
  CHECK(expand_base(parse_term("(a^w-1b)^w-1"), 2) == "aabaab");
  CHECK(expanded_length(parse_term("(a^w-1b)^w-1"), 2) == 6);
  CHECK_THROWS_AS(expand_base(parse_term("((a^w-1)^w-1)^w-1"), 1000, 10'000),
                  CapacityError);

  oracles::Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    Term        t = oracles::random_term(rng, {"abc", 3, 3, 0.4});
    std::size_t e = 1 + rng() % 4;
    std::string w = expand_base(t, e);
    CHECK(expanded_length(t, e) == w.size());
    std::size_t m = rng() % 30;
    CHECK(expand_prefix(t, e, m) == w.substr(0, m));
    CHECK(expand_suffix(t, e, m) == w.substr(w.size() - std::min(m, w.size())));
  }
}

TEST_CASE("content") {
  CHECK(content(parse_term("aba")) == std::set{Symbol::base('a'), Symbol::base('b')});
  CHECK(content(parse_term("a^w-1")) == std::set{Symbol::base('a')});
  CHECK(content(Term()).empty());
}

TEST_CASE("substitution is a homomorphism") {
  Term t = parse_term("(ab)^w-1c");
  Term u = substitute(t, [](Symbol const& x) {
    return x.letter() == 'b' ? Term() : Term::letter(x);
  });
  CHECK(u == parse_term("a^w-1c"));
}
