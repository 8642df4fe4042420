#include "kappa/oracles.hpp"

namespace kappa::oracles {

  namespace {
    Fixture make(FiniteSemigroup S, std::string_view images) {
      GeneratorMap gens;
      std::string  letters = "abc";
      for (std::size_t i = 0; i < letters.size(); ++i) {
        gens.set(Symbol::base(letters[i]), static_cast<Element>(images[i] - '0'));
      }
      std::string name = S.name();
      return {name, std::move(S), std::move(gens)};
    }

    FiniteSemigroup cyclic(std::size_t n) {
      std::vector<std::string> names;
      std::vector<Element>     table;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back(std::to_string(i));
        for (std::size_t j = 0; j < n; ++j) {
          table.push_back(static_cast<Element>((i + j) % n));
        }
      }
      return FiniteSemigroup("Z" + std::to_string(n), names, table);
    }

    // x^i x^j = x^(i+j), with x^(index + period) = x^index.
    FiniteSemigroup monogenic(std::size_t index, std::size_t period) {
      std::size_t const        n = index + period - 1;
      std::vector<std::string> names;
      std::vector<Element>     table;
      auto reduce = [&](std::size_t m) {
        while (m > n) {
          m -= period;
        }
        return m;
      };
      for (std::size_t i = 1; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        for (std::size_t j = 1; j <= n; ++j) {
          table.push_back(static_cast<Element>(reduce(i + j) - 1));
        }
      }
      return FiniteSemigroup("C" + std::to_string(index) + "_"
                                 + std::to_string(period),
                             names, table);
    }
  }  // namespace

  std::vector<Fixture> fixtures() {
    std::vector<Fixture> out;
    out.push_back(make(FiniteSemigroup("trivial", {"e"}, {0}), "000"));
    out.push_back(make(cyclic(2), "110"));
    out.push_back(make(cyclic(3), "120"));
    out.push_back(make(FiniteSemigroup("left_zero", {"l1", "l2"}, {0, 0, 1, 1}),
                       "010"));
    out.push_back(make(
        FiniteSemigroup("right_zero", {"r1", "r2"}, {0, 1, 0, 1}), "011"));
    out.push_back(make(
        FiniteSemigroup("semilattice", {"e", "z"}, {0, 1, 1, 1}), "010"));
    out.push_back(make(monogenic(3, 1), "012"));
    out.push_back(make(monogenic(2, 3), "010"));
    // Full transformation monoid on two points: t00, t01, t10, t11.
    out.push_back(make(transformation_semigroup("T2", {{1, 0}, {0, 0}}), "203"));
    // Brandt semigroup B2: 0, e11, e12, e21, e22 with eij ejl = eil.
    {
      std::vector<Element> table(25, 0);
      auto idx = [](int i, int j) { return static_cast<Element>(1 + 2 * i + j); };
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          for (int l = 0; l < 2; ++l) {
            for (int m = 0; m < 2; ++m) {
              table[idx(i, j) * 5 + idx(l, m)] = j == l ? idx(i, m) : 0;
            }
          }
        }
      }
      out.push_back(make(FiniteSemigroup("B2", {"0", "e11", "e12", "e21", "e22"},
                                         table),
                         "231"));
    }
    return out;
  }

}  // namespace kappa::oracles
