#include "kappa/superpose.hpp"

#include "kappa/error.hpp"
#include "kappa/truncation.hpp"

namespace kappa {

  Term e_term(std::string_view u) {
    if (u.empty()) {
      throw PreconditionError("e_term needs a non-empty word");
    }
    Term w = Term::word(u);
    return Term::omega_minus_one(w) * w;
  }

  namespace {
    std::size_t ceil_div(std::size_t n, std::size_t d) {
      return (n + d - 1) / d;
    }

    // t = i_need(t) tau, returns tau.
    Term peel_prefix(Term const& t, std::size_t need) {
      if (need == 0) {
        return t;
      }
      if (t.is_finite()) {
        std::string w = *finite_base_word(t);
        if (w.size() < need) {
          throw PreconditionError("factor_prefix: term shorter than k");
        }
        return Term::word(w.substr(need));
      }
      if (t.kind() == Term::Kind::concat) {
        auto ch = t.children();
        for (std::size_t i = 0; i < ch.size(); ++i) {
          std::vector<Term> rest(ch.begin() + i + 1, ch.end());
          if (ch[i].is_finite() && ch[i].finite_length() <= need) {
            need -= ch[i].finite_length();
            if (need == 0) {
              return Term::concat(std::move(rest));
            }
            continue;
          }
          rest.insert(rest.begin(), peel_prefix(ch[i], need));
          return Term::concat(std::move(rest));
        }
        throw PreconditionError("factor_prefix: term shorter than k");
      }
      // x^(w-1) = x^p (x^(w-1))^(p+1)
      Term const& x = t.base();
      if (!x.is_finite()) {
        return peel_prefix(x, need) * Term::omega_minus(x, 2);
      }
      std::string xs = *finite_base_word(x);
      std::size_t p  = ceil_div(need, xs.size());
      std::string xp;
      for (std::size_t i = 0; i < p; ++i) {
        xp += xs;
      }
      return Term::word(xp.substr(need)) * Term::omega_minus(x, p + 1);
    }

    // t = tau t_need(t), returns tau.
    Term peel_suffix(Term const& t, std::size_t need) {
      if (need == 0) {
        return t;
      }
      if (t.is_finite()) {
        std::string w = *finite_base_word(t);
        if (w.size() < need) {
          throw PreconditionError("factor_suffix: term shorter than k");
        }
        return Term::word(w.substr(0, w.size() - need));
      }
      if (t.kind() == Term::Kind::concat) {
        auto ch = t.children();
        for (std::size_t i = ch.size(); i-- > 0;) {
          std::vector<Term> rest(ch.begin(), ch.begin() + i);
          if (ch[i].is_finite() && ch[i].finite_length() <= need) {
            need -= ch[i].finite_length();
            if (need == 0) {
              return Term::concat(std::move(rest));
            }
            continue;
          }
          rest.push_back(peel_suffix(ch[i], need));
          return Term::concat(std::move(rest));
        }
        throw PreconditionError("factor_suffix: term shorter than k");
      }
      // x^(w-1) = (x^(w-1))^(p+1) x^p
      Term const& x = t.base();
      if (!x.is_finite()) {
        return Term::omega_minus(x, 2) * peel_suffix(x, need);
      }
      std::string xs = *finite_base_word(x);
      std::size_t p  = ceil_div(need, xs.size());
      std::string xp;
      for (std::size_t i = 0; i < p; ++i) {
        xp += xs;
      }
      return Term::omega_minus(x, p + 1)
             * Term::word(xp.substr(0, xp.size() - need));
    }
  }  // namespace

  Term factor_prefix(Term const& t, std::size_t k) {
    if (t.is_finite() && t.finite_length() < k) {
      throw PreconditionError("factor_prefix: term shorter than k");
    }
    return peel_prefix(t, k);
  }

  Term factor_suffix(Term const& t, std::size_t k) {
    if (t.is_finite() && t.finite_length() < k) {
      throw PreconditionError("factor_suffix: term shorter than k");
    }
    return peel_suffix(t, k);
  }

  ////////////////////////////////////////////////////////////////////////
  // Superposer
  ////////////////////////////////////////////////////////////////////////

  Superposer::Superposer(std::size_t k) : k_(k) {
    if (k_ == 0) {
      throw PreconditionError("superposition requires k >= 1");
    }
  }

  std::string Superposer::suffix_after(std::string const& c,
                                       Term const&        t) const {
    if (!t.is_finite() || t.finite_length() >= k_) {
      return suffix_k(t, k_);
    }
    return truncate_suffix(c + *finite_base_word(t), k_);
  }

  // Shared recursion of phi and beta': \p leaf maps (context, letter) to the
  // image of that letter occurrence.
  template <typename Leaf>
  Term Superposer::thread(std::string const&                      c,
                          Term const&                             t,
                          std::unordered_map<Key, Term, KeyHash>& memo,
                          Leaf&&                                  leaf) {
    switch (t.kind()) {
      case Term::Kind::empty:
        return t;
      case Term::Kind::letter:
        if (!t.symbol().is_base()) {
          throw AlgebraError("superposition needs base letters, found "
                             + t.symbol().to_string());
        }
        return leaf(c, t.symbol().letter());
      default:
        break;
    }
    Key key{t, c};
    if (auto it = memo.find(key); it != memo.end()) {
      return it->second;
    }
    Term result;
    if (t.kind() == Term::Kind::concat) {
      std::vector<Term> parts;
      std::string       context = c;
      for (auto const& child : t.children()) {
        parts.push_back(thread(context, child, memo, leaf));
        context = suffix_after(context, child);
      }
      result = Term::concat(std::move(parts));
    } else {
      Term const& x = t.base();
      std::size_t p = x.is_finite() ? (k_ + x.finite_length() - 1)
                                          / x.finite_length()
                                    : 1;
      Term        y      = Term::repeat(x, p);
      std::string stable = suffix_k(y, k_);
      Term        first  = thread(c, y, memo, leaf);
      Term        cycle  = thread(stable, y, memo, leaf);
      Term        tail   = thread(stable, Term::repeat(x, p - 1), memo, leaf);
      result = Term::concat({first, Term::omega_minus(cycle, 2), tail});
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  Term Superposer::phi_after(std::string const& c, Term const& t) {
    return thread(c, t, phi_memo_, [this](std::string const& ctx, char a) {
      if (ctx.size() < k_) {
        return Term();
      }
      return Term::letter(Symbol::window(ctx + a));
    });
  }

  Term Superposer::beta_after(std::string const& c, Term const& t) {
    return thread(c, t, beta_memo_, [](std::string const& ctx, char a) {
      return Term::letter(Symbol::pair(ctx, a));
    });
  }

  Term Superposer::phi(Term const& t) {
    return phi_after(std::string(), t);
  }

  Term Superposer::beta_prime(Term const& t) {
    if (t.is_empty()) {
      throw PreconditionError("beta' of the empty term");
    }
    return beta_after(std::string(), t);
  }

  Term phi(Term const& t, std::size_t k) {
    return Superposer(k).phi(t);
  }

  Term beta_prime(Term const& t, std::size_t k) {
    return Superposer(k).beta_prime(t);
  }

  Term bk_action(std::string_view w, Term const& s, std::size_t k) {
    if (w.size() > k) {
      throw PreconditionError("bk_action: |w| > k");
    }
    return substitute(s, [&](Symbol const& a) {
      if (a.kind() != Symbol::Kind::pair || a.word().size() > k) {
        throw AlgebraError("bk_action: " + a.to_string()
                           + " is not a letter of B_" + std::to_string(k));
      }
      return Term::letter(
          Symbol::pair(truncate_suffix(std::string(w) + a.word(), k),
                       a.letter()));
    });
  }

  Term nu(Term const& t, std::size_t k) {
    return substitute(t, [k](Symbol const& a) {
      if (a.kind() != Symbol::Kind::pair || a.word().size() > k) {
        throw AlgebraError("nu: " + a.to_string() + " is not a letter of B_"
                           + std::to_string(k));
      }
      if (a.word().size() < k) {
        return Term();
      }
      return Term::letter(Symbol::window(a.word() + a.letter()));
    });
  }

  Term phi_via_factorization(Term const& t, std::size_t k) {
    if (t.is_finite() && t.finite_length() <= k) {
      return Term();
    }
    std::string head = prefix_k(t, k);
    Term        tau  = factor_prefix(t, k);
    if (tau.is_empty()) {
      return Term();
    }
    return nu(bk_action(head, beta_prime(tau, k), k), k);
  }

}  // namespace kappa
