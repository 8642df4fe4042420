// The value-preserving transformation theta'_k on kappa-terms, relative to a
// finite A-generated semigroup S and k > |S|.
//
// Every length-k word a1...ak has a least j in {2..k}, and for it a least
// i in {2..j}, with delta(a1...a(i-1)) = delta(a1...aj). Writing u for
// ai...aj, delta(a1...aj) = delta(a1...aj u^omega). From these pairs:
//
//     lambda_k(t) = a1...aj e_u          (from i_k t; t itself if shorter)
//     rho_k(t)    = e_u a(j+1)...ak      (from t_k t; empty if shorter)
//     psi_k([a1...a(k+1)]) = e_u1 a(j1+1)...a(j2) e_u2
//     theta_k     = psi_k . Phi_k
//     theta'_k(t) = lambda_k(t) theta_k(t) rho_k(t)
//
// where e_u = u^(w-1) u, (i1, j1) belongs to the window a1...ak and (i2, j2)
// to a2...a(k+1), counted in positions of the (k+1)-letter word.

#ifndef KAPPA_THETA_HPP_
#define KAPPA_THETA_HPP_

#include <cstddef>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kappa/finsemi.hpp"
#include "kappa/terms.hpp"

namespace kappa {

  //! Positions 1 < i <= j <= k (1-based, relative to the window) and the
  //! factor u = ai...aj.
  struct IndexPair {
    std::size_t i;
    std::size_t j;
    std::string u;

    friend bool operator==(IndexPair const&, IndexPair const&) = default;
  };

  class ThetaContext {
   public:
    //! Throws PreconditionError unless k > |S|.
    ThetaContext(FiniteSemigroup S, GeneratorMap gens, std::size_t k);

    ThetaContext(ThetaContext const&)            = delete;
    ThetaContext& operator=(ThetaContext const&) = delete;

    FiniteSemigroup const& semigroup() const noexcept {
      return S_;
    }
    GeneratorMap const& generators() const noexcept {
      return gens_;
    }
    std::size_t k() const noexcept {
      return k_;
    }

    //! The pair of a word of length exactly k. Memoized; each new pair is
    //! checked against delta(a1...aj) = delta(a1...aj) delta(u)^omega before
    //! it is cached (std::logic_error if the check fails).
    IndexPair fix_ij(std::string_view window) const;

    Term lambda_k(Term const& t) const;
    Term rho_k(Term const& t) const;
    //! Homomorphic image of a term over window symbols of length k + 1.
    Term psi_k(Term const& t) const;
    Term theta_k(Term const& t) const;
    Term theta_prime(Term const& t) const;

    //! Snapshot of every pair computed so far.
    std::vector<std::pair<std::string, IndexPair>> cached_pairs() const;

   private:
    FiniteSemigroup                                    S_;
    GeneratorMap                                       gens_;
    std::size_t                                        k_;
    mutable std::mutex                                 mutex_;
    mutable std::unordered_map<std::string, IndexPair> memo_;
  };

}  // namespace kappa

#endif  // KAPPA_THETA_HPP_
