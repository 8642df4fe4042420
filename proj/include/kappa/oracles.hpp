// Reference implementations used by the test suites, the acceptance runner
// and `kappa selftest`. They favour directness over speed and share as
// little code as possible with the algorithms they check.

#ifndef KAPPA_ORACLES_HPP_
#define KAPPA_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/finsemi.hpp"
#include "kappa/symbol.hpp"
#include "kappa/terms.hpp"

namespace kappa::oracles {

  using Rng = std::mt19937_64;

  struct Fixture {
    std::string     name;
    FiniteSemigroup semigroup;
    GeneratorMap    generators;  // images of a, b, c
  };

  //! Small semigroups (order <= 5) with images for the letters a, b, c.
  std::vector<Fixture> fixtures();

  //! The same map, keeping only the letters of \p alphabet.
  GeneratorMap restrict_to(GeneratorMap const& gens, std::string_view alphabet);

  //! The semigroup generated by transformations of {0, ..., n-1}, acting on
  //! the right (x then y).
  FiniteSemigroup
  transformation_semigroup(std::string                              name,
                           std::vector<std::vector<std::uint8_t>> const& gens);

  //! A random transformation semigroup on at most three points, of order at
  //! most \p max_order.
  FiniteSemigroup random_semigroup(Rng& rng, std::size_t max_order = 5);

  std::string random_word(Rng& rng, std::string_view alphabet,
                          std::size_t min_length, std::size_t max_length);

  struct TermShape {
    std::string alphabet  = "abc";
    std::size_t max_depth = 4;
    // Leaves are words of length 1..max_leaf.
    std::size_t max_leaf = 3;
    double      power     = 0.4;
  };

  //! A random non-empty kappa-term. Depth counts nested nodes.
  Term random_term(Rng& rng, TermShape const& shape = {});

  //! Phi_k of a word by listing its factors of length k + 1.
  SymbolWord factors(std::string_view w, std::size_t k);

  //! Every word over \p alphabet of length min..max, shortest first.
  std::vector<std::string> all_words(std::string_view alphabet,
                                     std::size_t min_length,
                                     std::size_t max_length);

  //! s^n by n - 1 multiplications.
  Element slow_power(FiniteSemigroup const& S, Element s, std::size_t n);
  //! s^(omega - q) as s^(120 m - q), for semigroups of order at most 5 (every
  //! period divides 60 and every index is at most 5).
  Element slow_omega_minus(FiniteSemigroup const& S, Element s, std::size_t q);

  //! Random images in \p T of every window of length k + 1 over \p alphabet.
  GeneratorMap random_window_map(Rng& rng, FiniteSemigroup const& T,
                                 std::string_view alphabet, std::size_t k);

  //! Evaluates Phi_k(t) in T^1 without building Phi_k(t): a left-to-right
  //! scan that carries the last k letters read. The scan of a subterm is a
  //! finite map (context -> value, next context), so powers are powers of
  //! that map. With \p exponent = 0 each x^(omega-1) is the (omega-1)-power
  //! of the map; otherwise it is the exponent-th power, matching
  //! expand(t, exponent).
  class Transducer {
   public:
    Transducer(FiniteSemigroup T, GeneratorMap windows, std::string alphabet,
               std::size_t k);

    MonoidElement value(Term const& t, std::size_t exponent = 0) const;

   private:
    struct Step {
      MonoidElement value;
      std::uint32_t next;
      friend bool operator==(Step const&, Step const&) = default;
    };
    using Scan = std::vector<Step>;

    Scan identity() const;
    Scan compose(Scan const& f, Scan const& g) const;
    Scan letter(char a) const;
    Scan scan(Term const& t, std::size_t exponent) const;

    FiniteSemigroup                    T_;
    GeneratorMap                       windows_;
    std::size_t                        k_;
    std::vector<std::string>           contexts_;
    std::map<std::string, std::uint32_t> index_;
  };

  //! {delta u : t_k(u) = w} over all words u of length 1..max_length.
  std::map<std::string, std::set<Element>>
  brute_suffix_classes(FiniteSemigroup const& S, GeneratorMap const& gens,
                       std::size_t k, std::size_t max_length);

}  // namespace kappa::oracles

#endif  // KAPPA_ORACLES_HPP_
