// The finite semigroups of words of length at most k under truncated
// product, the prefix/suffix operators on kappa-terms, ultimately periodic
// words, and identity checkers for K_k, D_k, K, D and LI.

#ifndef KAPPA_TRUNCATION_HPP_
#define KAPPA_TRUNCATION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/finsemi.hpp"
#include "kappa/terms.hpp"
#include "kappa/verdict.hpp"

namespace kappa {

  //! Longest prefix of length at most k.
  std::string truncate_prefix(std::string_view w, std::size_t k);
  //! Longest suffix of length at most k.
  std::string truncate_suffix(std::string_view w, std::size_t k);

  //! Which end of a word a truncation keeps: the prefix side realizes the
  //! free K_k-semigroup, the suffix side the free D_k-semigroup.
  enum class Side { prefix, suffix };

  //! The semigroup A_k of non-empty words of length at most k with product
  //! u.v = i_k(uv) (prefix side) or t_k(uv) (suffix side). Products are
  //! computed from the words; no table is stored.
  class TruncSemigroup {
   public:
    //! Throws PreconditionError for k = 0 or an empty alphabet and
    //! CapacityError when the order exceeds \p cap.
    TruncSemigroup(Side side, std::string alphabet, std::size_t k,
                   std::size_t cap = 1'000'000);

    Side side() const noexcept {
      return side_;
    }
    std::size_t k() const noexcept {
      return k_;
    }
    std::string const& alphabet() const noexcept {
      return alphabet_;
    }
    //! |A| + |A|^2 + ... + |A|^k.
    std::size_t order() const noexcept {
      return order_;
    }

    std::string product(std::string_view u, std::string_view v) const;

    //! The image of a word under the natural projection.
    std::string project(std::string_view w) const;

    //! All elements, ordered by length and then lexicographically by
    //! alphabet position.
    std::vector<std::string> elements() const;

    //! Position of \p w in elements().
    std::size_t index_of(std::string_view w) const;

    //! Materializes the Cayley table; throws CapacityError above
    //! \p cap elements.
    FiniteSemigroup to_finite_semigroup(std::size_t cap = 400) const;
    //! Letter a maps to the element index_of(a).
    GeneratorMap generators() const;

   private:
    Side        side_;
    std::string alphabet_;
    std::size_t k_;
    std::size_t order_;
  };

  TruncSemigroup build_trunc(Side side, std::string alphabet, std::size_t k);

  //! i_k(t): the shortest word equal to \p t in K_k, computed by evaluating
  //! \p t in the prefix-side TruncSemigroup. Requires base letters.
  std::string prefix_k(Term const& t, std::size_t k);
  //! t_k(t), the suffix-side counterpart.
  std::string suffix_k(Term const& t, std::size_t k);

  //! The projection of \p t onto the K_k (prefix side) or D_k (suffix side)
  //! semigroup: an element of the TruncSemigroup of that side.
  std::string natural_projection(Term const& t, Side side, std::size_t k);

  //! An ultimately periodic one-sided infinite word. A rightward word is
  //! u v v v ..., a leftward word is ... v v v u. The constructor
  //! canonicalizes: v is made primitive and the preperiod is shortened while
  //! its letter next to the periodic part can be absorbed by rotating v, so
  //! two UPWords denote the same infinite word iff they compare equal.
  class UPWord {
   public:
    enum class Direction { rightward, leftward };

    UPWord(std::string preperiod, std::string period, Direction direction);

    std::string const& preperiod() const noexcept {
      return u_;
    }
    std::string const& period() const noexcept {
      return v_;
    }
    Direction direction() const noexcept {
      return dir_;
    }

    //! Rightward: the first n letters. Leftward: the last n letters, in
    //! reading order.
    std::string letters(std::size_t n) const;

    friend bool operator==(UPWord const&, UPWord const&) = default;

   private:
    std::string u_;
    std::string v_;
    Direction   dir_;
  };

  //! |u1| + |u2| + 2 lcm(|v1|, |v2|): two UPWords of the same direction
  //! that agree on this many letters are equal.
  std::size_t comparison_bound(UPWord const& x, UPWord const& y);

  //! The infinite word whose length-l prefixes are prefix_k(t, l) for all l.
  //! Throws PreconditionError if \p t denotes a finite word.
  UPWord infinite_prefix(Term const& t);
  //! The infinite word whose length-l suffixes are suffix_k(t, l).
  UPWord infinite_suffix(Term const& t);

  //! The locally trivial pseudovarieties with decidable kappa-word problem
  //! provided here.
  struct TruncVariety {
    enum class Kind { Kk, Dk, K, D, LI };
    Kind        kind;
    std::size_t k = 0;  // used by Kk and Dk

    std::string name() const;
  };

  //! Decides V |= lhs = rhs for terms over base letters. Fails carries the
  //! least level l at which i_l (or t_l) of the two sides differ.
  Verdict check_identity(TruncVariety const& V, Term const& lhs,
                         Term const& rhs);

}  // namespace kappa

#endif  // KAPPA_TRUNCATION_HPP_
