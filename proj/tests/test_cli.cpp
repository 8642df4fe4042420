#include <doctest.h>

#include <fstream>
#include <sstream>

#include "kappa/cli.hpp"
#include "kappa/finsemi.hpp"
#include "kappa/terms.hpp"

#ifndef KAPPA_TEST_DATA
#error "KAPPA_TEST_DATA must point at tests/data"
#endif

namespace {
  struct Outcome {
    int         code;
    std::string out;
    std::string err;
  };

  Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "kappa");
    std::ostringstream out, err;
    int                code = kappa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(KAPPA_TEST_DATA) + "/" + name;
  }

  // The value of key in a machine block.
  std::string field(std::string const& text, std::string const& key) {
    std::istringstream in(text);
    std::string        line;
    while (std::getline(in, line)) {
      if (line.rfind(key + ": ", 0) == 0) {
        return line.substr(key.size() + 2);
      }
    }
    return "";
  }
}  // namespace

TEST_CASE("truncations and superposition") {
  auto p = run({"prefix", "-k", "2", "abab"});
  CHECK(p.code == 0);
  CHECK(p.out == "ab\n");
  CHECK(run({"suffix", "-k", "3", "(ab)^w-1"}).out == "bab\n");
  CHECK(run({"phi", "-k", "1", "abc"}).out == "[ab][bc]\n");
  CHECK(run({"phi", "-k", "3", "abc"}).out == "1\n");
  CHECK(run({"beta", "-k", "1", "abc"}).out == "<,a><a,b><b,c>\n");
}

TEST_CASE("terms from files") {
  std::string path = "cli_term_file.txt";
  std::ofstream(path) << "(ab)^w-1\n";
  CHECK(run({"prefix", "-k", "3", "@" + path}).out == "aba\n");
  CHECK(run({"prefix", "-k", "3", "@does_not_exist"}).code == 2);
}

TEST_CASE("eval and theta agree") {
  auto sg = data("trivial.sg");
  auto e  = run({"eval", "-S", sg, "abc"});
  CHECK(e.code == 0);
  CHECK(e.out == "e\n");
  for (auto const& [file, k] :
       std::vector<std::pair<std::string, std::string>>{{"trivial.sg", "2"},
                                                        {"t2.sg", "5"}}) {
    for (std::string term : {"abc", "(ab)^w-1c", "c(a^wb)^w-2a", "a"}) {
      auto t = run({"theta", "-S", data(file), "-k", k, term});
      REQUIRE(t.code == 0);
      std::string out = t.out.substr(0, t.out.size() - 1);
      CHECK(run({"eval", "-S", data(file), term}).out
            == run({"eval", "-S", data(file), out}).out);
    }
  }
  auto refused = run({"theta", "-S", data("z2.sg"), "-k", "2", "ab"});
  CHECK(refused.code == 4);
  CHECK_FALSE(refused.err.empty());
}

TEST_CASE("printed terms evaluate like their source") {
  auto loaded = kappa::load_semigroup_file(data("t2.sg"));
  for (std::string term : {"(ab)^w-1c", "a^w+2b", "(c(ab)^w)^w-3"}) {
    for (std::string cmd : {"theta"}) {
      auto        t   = run({cmd, "-S", data("t2.sg"), "-k", "5", term});
      std::string out = t.out.substr(0, t.out.size() - 1);
      CHECK(kappa::eval(kappa::parse_term(out), loaded.semigroup,
                        *loaded.generators)
            == kappa::eval(kappa::parse_term(term), loaded.semigroup,
                           *loaded.generators));
    }
  }
}

TEST_CASE("check") {
  auto d = run({"check", "-V", "D", "a^w-1a", "ba^w-1a"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("holds\n", 0) == 0);
  CHECK(field(d.out, "verdict") == "holds");

  auto k = run({"check", "-V", "K", "(ab)^w-1", "(ba)^w-1"});
  CHECK(k.code == 1);
  CHECK(field(k.out, "level") == "1");

  CHECK(run({"check", "-V", "Dk", "-k", "2", "cab", "dab"}).code == 0);
  CHECK(run({"check", "-V", "Dk", "cab", "dab"}).code == 2);
  CHECK(run({"check", "-V", "K", "-k", "2", "a", "a"}).code == 2);
  CHECK(run({"check", "-V", "Sl", "ab", "ba"}).code == 0);
  CHECK(run({"check", "-V", "Sl", "-k", "2", "ab", "ba"}).code == 1);
  auto u = run({"check", "-V", "Sl", "-L", "4", "(ab)^w", "(ab)^w ab"});
  CHECK(u.code == 3);
  CHECK(field(u.out, "verdict") == "unknown");
  CHECK(field(u.out, "bound") == "4");
  CHECK(run({"check", "-V", "Sl", "-k", "1", "-L", "4", "a", "a"}).code == 2);
}

TEST_CASE("pointlikes") {
  auto r = run({"pointlikes", "-S", data("right_zero.sg"), "-V", "Dk", "-k", "1"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "classes") == "2");
  auto z = run({"pointlikes", "-S", data("z2.sg"), "-V", "Kk", "-k", "2"});
  CHECK(z.code == 0);
  CHECK(run({"pointlikes", "-S", data("z2.sg"), "-V", "Sl", "-k", "2"}).code == 2);
}

TEST_CASE("transform") {
  auto args = std::vector<std::string>{"transform", "-S", data("z2.sg"), "-k", "3",
                                       "--system", data("z2_system.txt")};
  auto t = run(args);
  CHECK(t.code == 3);
  CHECK(field(t.out, "verdict") == "unknown");
  CHECK(field(t.out, "bound") == "6");
  CHECK(field(t.out, "values") == "preserved");
  CHECK(run(args).out == t.out);  // deterministic

  auto bad = run({"transform", "-S", data("z2.sg"), "-k", "3", "--system",
                  data("bad_system.txt")});
  CHECK(bad.code == 1);
  CHECK(field(bad.out, "input") == "fails");
  CHECK(run({"transform", "-S", data("z2.sg"), "-k", "2", "--system",
             data("z2_system.txt")})
            .code
        == 4);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"prefix", "abab"}).code == 2);
  CHECK(run({"prefix", "-k", "0", "abab"}).code == 2);
  CHECK(run({"prefix", "-k", "2", "(ab"}).code == 2);
  CHECK(run({"eval", "-S", "/nonexistent.sg", "a"}).code == 2);
  CHECK(run({"eval", "-S", data("z2.sg"), "c"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("selftest") {
  auto s = run({"selftest", "--scale", "0.05"});
  CHECK(s.code == 0);
  CHECK(s.out.find("FAIL") == std::string::npos);
}
