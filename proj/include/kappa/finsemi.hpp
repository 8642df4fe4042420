// Finite semigroups given by Cayley tables, powers of elements and the
// evaluation of words under a generator map.

#ifndef KAPPA_FINSEMI_HPP_
#define KAPPA_FINSEMI_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/error.hpp"
#include "kappa/symbol.hpp"

namespace kappa {

  //! Elements are dense indices into the Cayley table.
  using Element = std::uint32_t;

  //! An element of S^1: either an element of S or the adjoined identity,
  //! represented by std::nullopt. Evaluating the empty term yields 1.
  using MonoidElement = std::optional<Element>;

  class FiniteSemigroup {
   public:
    //! Validates the table: entries in range, names pairwise distinct,
    //! associativity (O(n^3)) and, when \p has_adjoined_identity is set,
    //! that index 0 is a two-sided identity. Throws AlgebraError.
    FiniteSemigroup(std::string              name,
                    std::vector<std::string> element_names,
                    std::vector<Element>     table,
                    bool                     has_adjoined_identity = false);

    std::size_t order() const noexcept {
      return names_.size();
    }

    Element product(Element s, Element t) const noexcept {
      return table_[s * order() + t];
    }

    //! Product in S^1.
    MonoidElement product(MonoidElement s, MonoidElement t) const noexcept {
      if (!s) {
        return t;
      }
      if (!t) {
        return s;
      }
      return product(*s, *t);
    }

    //! s^m for m >= 1.
    Element power(Element s, std::size_t m) const;

    std::string const& name() const noexcept {
      return name_;
    }
    std::string const& element_name(Element s) const {
      return names_.at(s);
    }
    std::vector<std::string> const& element_names() const noexcept {
      return names_;
    }
    std::optional<Element> find(std::string_view element_name) const;

    bool has_adjoined_identity() const noexcept {
      return adjoined_identity_;
    }

    //! S^1: a new table with a fresh identity at index 0 named "1" (or "1'"
    //! if "1" is taken); element s of S becomes s + 1. Always adjoins, even
    //! when S is already a monoid.
    FiniteSemigroup adjoin_identity() const;

    //! Name of an element of S^1, "1" for the adjoined identity.
    std::string monoid_element_name(MonoidElement s) const;

    friend bool operator==(FiniteSemigroup const&,
                           FiniteSemigroup const&) = default;

   private:
    std::string              name_;
    std::vector<std::string> names_;
    std::vector<Element>     table_;
    bool                     adjoined_identity_;
  };

  //! s^index = s^(index + period), both minimal.
  struct MonogenicProfile {
    std::size_t index;
    std::size_t period;

    friend bool operator==(MonogenicProfile const&,
                           MonogenicProfile const&) = default;
  };

  namespace detail {
    // Powers s, s^2, ... of an element of any finite semigroup whose product
    // is given by \p mul, until the first repetition.
    template <typename T, typename Mul>
    MonogenicProfile monogenic_profile(T const& s, Mul&& mul) {
      std::vector<T> powers{s};
      while (true) {
        T next = mul(powers.back(), s);
        auto it = std::find(powers.begin(), powers.end(), next);
        if (it != powers.end()) {
          std::size_t index = static_cast<std::size_t>(it - powers.begin()) + 1;
          return {index, powers.size() + 1 - index};
        }
        powers.push_back(std::move(next));
      }
    }

    template <typename T, typename Mul>
    T power(T const& s, std::size_t m, Mul&& mul) {
      T result = s;
      for (std::size_t i = 1; i < m; ++i) {
        result = mul(result, s);
      }
      return result;
    }

    // Least m >= index with m congruent to -q modulo period: the exponent
    // realizing s^(omega - q). q = 0 gives s^omega.
    inline std::size_t omega_exponent(MonogenicProfile p, std::size_t q) {
      std::size_t m = p.index;
      std::size_t r = (p.period - (q % p.period)) % p.period;
      while (m % p.period != r) {
        ++m;
      }
      return m;
    }

    template <typename T, typename Mul>
    T omega_minus_q(T const& s, std::size_t q, Mul&& mul) {
      auto p = monogenic_profile(s, mul);
      return power(s, omega_exponent(p, q), mul);
    }
  }  // namespace detail

  MonogenicProfile monogenic_profile(FiniteSemigroup const& S, Element s);

  //! The unique idempotent power of \p s.
  Element omega_power(FiniteSemigroup const& S, Element s);

  //! s^(omega - q): the inverse of s^(omega + q) in the maximal subgroup at
  //! s^omega. Requires q >= 1.
  Element omega_minus_q(FiniteSemigroup const& S, Element s, std::size_t q);

  //! The restriction to letters of the homomorphism delta onto S.
  class GeneratorMap {
   public:
    GeneratorMap() = default;
    explicit GeneratorMap(std::map<Symbol, Element> images)
        : images_(std::move(images)) {}

    void set(Symbol const& a, Element s) {
      images_[a] = s;
    }

    //! Throws AlgebraError for letters outside the alphabet.
    Element operator()(Symbol const& a) const;

    bool contains(Symbol const& a) const {
      return images_.count(a) != 0;
    }

    std::vector<Symbol> alphabet() const;

    //! Base letters of the alphabet, in order (non-base symbols skipped).
    std::string base_alphabet() const;

    std::map<Symbol, Element> const& images() const noexcept {
      return images_;
    }

    //! True iff every element of \p S is a product of generator images.
    bool is_generating(FiniteSemigroup const& S) const;

   private:
    std::map<Symbol, Element> images_;
  };

  //! Left-to-right fold of the table over the images of the letters of a
  //! non-empty word.
  Element delta_eval(FiniteSemigroup const& S,
                     GeneratorMap const&    gens,
                     SymbolWord const&      w);
  Element delta_eval(FiniteSemigroup const& S,
                     GeneratorMap const&    gens,
                     std::string_view       base_word);

  //! A semigroup file: the table plus its optional `generators` line.
  struct LoadedSemigroup {
    FiniteSemigroup             semigroup;
    std::optional<GeneratorMap> generators;
  };

  //! Parses the line-oriented semigroup format:
  //!
  //!     semigroup <name> <n>
  //!     elements <n names>
  //!     <n rows of n names>
  //!     generators a=<name> b=<name> ...      (optional)
  //!
  //! `#` starts a comment. Throws ParseError or AlgebraError. A generators
  //! line must generate the semigroup.
  LoadedSemigroup load_semigroup(std::string_view text);
  LoadedSemigroup load_semigroup_file(std::string const& path);

  //! Inverse of load_semigroup.
  std::string to_text(FiniteSemigroup const&             S,
                      std::optional<GeneratorMap> const& gens = std::nullopt);

}  // namespace kappa

#endif  // KAPPA_FINSEMI_HPP_
