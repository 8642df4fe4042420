// The k-superposition map Phi_k on kappa-terms, the map beta' into terms
// over B_k = A_k^1 x A, the B_k action and the letter-to-letter map nu.
//
// Phi_k sends a word to the sequence of its factors of length k + 1, read as
// letters of the alphabet A^(k+1) (window symbols). It satisfies
//
//     Phi_k(w) = 1                       for |w| <= k,
//     Phi_k(x y) = Phi_k(x) Phi_k(t_k(x) y),
//
// and it is this second rule, threaded through the term with the suffix of
// what has been read so far, that drives the recursion on terms. A power
// x^(w-1) is first saturated to y = x^p with |y| >= k, so that t_k(y y) =
// t_k(y); then Phi_k(c y^(w-1)) = Phi_k(c y) (Phi_k(t_k(y) y))^(w-2) and
// x^(w-1) = y^(w-1) x^(p-1).

#ifndef KAPPA_SUPERPOSE_HPP_
#define KAPPA_SUPERPOSE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "kappa/terms.hpp"

namespace kappa {

  //! u^(w-1) u, a kappa-term for u^omega. \p u must be a non-empty base word.
  Term e_term(std::string_view u);

  //! A term tau with t = i_k(t) tau as pseudowords. Requires \p t infinite or
  //! of length at least k; throws PreconditionError otherwise.
  Term factor_prefix(Term const& t, std::size_t k);

  //! A term tau with t = tau t_k(t); the mirror of factor_prefix.
  Term factor_suffix(Term const& t, std::size_t k);

  //! Computes Phi_k and beta'_A for a fixed k, memoizing on (subterm,
  //! incoming suffix). An instance is not shared between threads; the free
  //! functions below create one per call.
  class Superposer {
   public:
    explicit Superposer(std::size_t k);

    std::size_t k() const noexcept {
      return k_;
    }

    //! Phi_k(t): a term over window symbols [a1...a(k+1)], empty iff \p t
    //! is a word of length at most k.
    Term phi(Term const& t);

    //! beta'_A(t): a term over pair symbols <w,a> with |w| <= k.
    Term beta_prime(Term const& t);

    //! Phi_k(c t) - the windows contributed by t after a word whose length-k
    //! suffix is \p c (|c| <= k).
    Term phi_after(std::string const& c, Term const& t);
    //! alpha_c(beta'_A t) for |c| <= k.
    Term beta_after(std::string const& c, Term const& t);

    //! t_k(c t) for |c| <= k.
    std::string suffix_after(std::string const& c, Term const& t) const;

   private:
    struct Key {
      Term        term;
      std::string context;
      bool        operator==(Key const&) const = default;
    };
    struct KeyHash {
      std::size_t operator()(Key const& key) const noexcept {
        return key.term.hash() * 31 + std::hash<std::string>{}(key.context);
      }
    };

    template <typename Leaf>
    Term thread(std::string const&                          c,
                Term const&                                 t,
                std::unordered_map<Key, Term, KeyHash>&     memo,
                Leaf&&                                      leaf);

    std::size_t                            k_;
    std::unordered_map<Key, Term, KeyHash> phi_memo_;
    std::unordered_map<Key, Term, KeyHash> beta_memo_;
  };

  Term phi(Term const& t, std::size_t k);
  Term beta_prime(Term const& t, std::size_t k);

  //! The endomorphism alpha_w: every letter <w',a> of \p s becomes
  //! <t_k(w w'), a>. Requires |w| <= k and pair symbols with |w'| <= k.
  Term bk_action(std::string_view w, Term const& s, std::size_t k);

  //! nu: <w,a> becomes the window [wa] when |w| = k and is deleted when
  //! |w| < k. Throws AlgebraError on any other symbol.
  Term nu(Term const& t, std::size_t k);

  //! Phi_k computed through a factorization t = i_k(t) tau as
  //! nu(alpha_(i_k t) beta'(tau)); an independent route to phi().
  Term phi_via_factorization(Term const& t, std::size_t k);

}  // namespace kappa

#endif  // KAPPA_SUPERPOSE_HPP_
