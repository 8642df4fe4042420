#include "kappa/theta.hpp"

#include <stdexcept>

#include "kappa/error.hpp"
#include "kappa/superpose.hpp"
#include "kappa/truncation.hpp"

namespace kappa {

  ThetaContext::ThetaContext(FiniteSemigroup S, GeneratorMap gens,
                             std::size_t k)
      : S_(std::move(S)), gens_(std::move(gens)), k_(k) {
    if (k_ <= S_.order()) {
      throw PreconditionError("theta needs k > |S| (k = " + std::to_string(k_)
                              + ", |S| = " + std::to_string(S_.order()) + ")");
    }
  }

  IndexPair ThetaContext::fix_ij(std::string_view window) const {
    if (window.size() != k_) {
      throw PreconditionError("fix_ij needs a word of length k = "
                              + std::to_string(k_));
    }
    std::string key(window);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) {
        return it->second;
      }
    }
    // prefix[m] = delta(a1...am), 1 <= m <= k
    std::vector<Element> prefix(k_ + 1);
    prefix[1] = gens_(Symbol::base(window[0]));
    for (std::size_t m = 2; m <= k_; ++m) {
      prefix[m] = S_.product(prefix[m - 1], gens_(Symbol::base(window[m - 1])));
    }
    for (std::size_t j = 2; j <= k_; ++j) {
      for (std::size_t i = 2; i <= j; ++i) {
        if (prefix[i - 1] != prefix[j]) {
          continue;
        }
        IndexPair pair{i, j, key.substr(i - 1, j - i + 1)};
        Element   e = omega_power(S_, delta_eval(S_, gens_, pair.u));
        if (S_.product(prefix[j], e) != prefix[j]) {
          throw std::logic_error("index pair of " + key
                                 + " violates delta(a1..aj) = "
                                   "delta(a1..aj u^omega)");
        }
        std::lock_guard<std::mutex> lock(mutex_);
        return memo_.emplace(std::move(key), std::move(pair)).first->second;
      }
    }
    // Unreachable: k > |S| forces a repetition among k prefix values.
    throw std::logic_error("no index pair for " + key);
  }

  Term ThetaContext::lambda_k(Term const& t) const {
    std::string p = prefix_k(t, k_);
    if (p.size() < k_) {
      return Term::word(p);
    }
    IndexPair pair = fix_ij(p);
    return Term::word(p.substr(0, pair.j)) * e_term(pair.u);
  }

  Term ThetaContext::rho_k(Term const& t) const {
    std::string s = suffix_k(t, k_);
    if (s.size() < k_) {
      return Term();
    }
    IndexPair pair = fix_ij(s);
    return e_term(pair.u) * Term::word(s.substr(pair.j));
  }

  Term ThetaContext::psi_k(Term const& t) const {
    return substitute(t, [this](Symbol const& a) {
      if (a.kind() != Symbol::Kind::window || a.word().size() != k_ + 1) {
        throw AlgebraError("psi_k: " + a.to_string()
                           + " is not a window of length "
                           + std::to_string(k_ + 1));
      }
      std::string const& w      = a.word();
      IndexPair          first  = fix_ij(std::string_view(w).substr(0, k_));
      IndexPair          second = fix_ij(std::string_view(w).substr(1, k_));
      std::size_t        j2     = second.j + 1;
      return Term::concat({e_term(first.u),
                           Term::word(w.substr(first.j, j2 - first.j)),
                           e_term(second.u)});
    });
  }

  Term ThetaContext::theta_k(Term const& t) const {
    return psi_k(phi(t, k_));
  }

  Term ThetaContext::theta_prime(Term const& t) const {
    if (t.is_empty()) {
      throw PreconditionError("theta' of the empty term");
    }
    return Term::concat({lambda_k(t), theta_k(t), rho_k(t)});
  }

  std::vector<std::pair<std::string, IndexPair>>
  ThetaContext::cached_pairs() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return {memo_.begin(), memo_.end()};
  }

}  // namespace kappa
