#include "kappa/pointlikes.hpp"

#include <algorithm>
#include <random>

#include "kappa/error.hpp"
#include "kappa/superpose.hpp"
#include "kappa/theta.hpp"

namespace kappa {

  namespace {
    std::string describe(std::set<Symbol> const& symbols) {
      std::string out = "{";
      for (auto const& a : symbols) {
        out += (out.size() > 1 ? "," : "") + a.to_string();
      }
      return out + "}";
    }
  }  // namespace

  Verdict SlChecker::check(Term const& lhs, Term const& rhs) const {
    auto x = content(lhs);
    auto y = content(rhs);
    if (x == y) {
      return Verdict::holds();
    }
    return Verdict::fails("contents differ: " + describe(x) + " vs "
                          + describe(y));
  }

  ////////////////////////////////////////////////////////////////////////
  // FalsifierChecker
  ////////////////////////////////////////////////////////////////////////

  FalsifierChecker::FalsifierChecker(std::vector<FiniteSemigroup> pool,
                                     std::size_t                  max_assignments,
                                     std::uint64_t                seed)
      : pool_(std::move(pool)), max_assignments_(max_assignments), seed_(seed) {
    if (pool_.empty()) {
      throw PreconditionError("falsifier needs at least one semigroup");
    }
  }

  Verdict FalsifierChecker::check(Term const& lhs, Term const& rhs) const {
    if (lhs == rhs) {
      return Verdict::holds();
    }
    std::set<Symbol> symbols = content(lhs);
    for (auto const& a : content(rhs)) {
      symbols.insert(a);
    }
    std::vector<Symbol> letters(symbols.begin(), symbols.end());

    for (std::size_t p = 0; p < pool_.size(); ++p) {
      FiniteSemigroup const& T = pool_[p];
      std::size_t const      n = T.order();
      // n^|letters|, saturating at max_assignments_ + 1
      std::size_t total = 1;
      for (std::size_t i = 0; i < letters.size() && total <= max_assignments_;
           ++i) {
        total *= n;
      }
      bool const          exhaustive = total <= max_assignments_;
      std::size_t const   rounds     = exhaustive ? total : max_assignments_;
      std::mt19937_64     rng(seed_ + p);
      std::vector<Element> digits(letters.size(), 0);

      for (std::size_t r = 0; r < rounds; ++r) {
        if (exhaustive) {
          std::size_t code = r;
          for (auto& d : digits) {
            d = static_cast<Element>(code % n);
            code /= n;
          }
        } else {
          for (auto& d : digits) {
            d = static_cast<Element>(rng() % n);
          }
        }
        GeneratorMap gens;
        for (std::size_t i = 0; i < letters.size(); ++i) {
          gens.set(letters[i], digits[i]);
        }
        MonoidElement x = eval(lhs, T, gens);
        MonoidElement y = eval(rhs, T, gens);
        if (x != y) {
          std::string assignment;
          for (std::size_t i = 0; i < letters.size(); ++i) {
            assignment += (i ? " " : "") + letters[i].to_string() + "="
                          + T.element_name(digits[i]);
          }
          return Verdict::fails("in " + T.name() + " under " + assignment
                                + ": " + T.monoid_element_name(x) + " vs "
                                + T.monoid_element_name(y));
        }
      }
    }
    return Verdict::unknown_at_bound(pool_.size());
  }

  ////////////////////////////////////////////////////////////////////////
  // Systems and solution checks
  ////////////////////////////////////////////////////////////////////////

  PointlikeSystem::PointlikeSystem(
      std::vector<std::string>             variables,
      std::map<std::string, MonoidElement> constraints)
      : variables_(std::move(variables)), constraints_(std::move(constraints)) {
    if (variables_.size() < 2) {
      throw PreconditionError("a pointlike system has at least two variables");
    }
    std::set<std::string> seen;
    for (auto const& x : variables_) {
      if (!seen.insert(x).second) {
        throw PreconditionError("variable " + x + " listed twice");
      }
      if (constraints_.count(x) == 0) {
        throw PreconditionError("variable " + x + " has no constraint");
      }
    }
  }

  Verdict check_semidirect_dk(VChecker const& V, Term const& lhs,
                              Term const& rhs, std::size_t k) {
    if (V.locally_trivial()) {
      throw PreconditionError(V.name()
                              + " is locally trivial; V*D_k checks need V "
                                "not contained in LI");
    }
    if (lhs == rhs) {
      return Verdict::holds();
    }
    for (bool prefix : {true, false}) {
      std::string x = prefix ? prefix_k(lhs, k) : suffix_k(lhs, k);
      std::string y = prefix ? prefix_k(rhs, k) : suffix_k(rhs, k);
      if (x != y) {
        return Verdict::fails(std::string(prefix ? "i_" : "t_")
                                  + std::to_string(k) + " differ: '" + x
                                  + "' vs '" + y + "'",
                              k);
      }
    }
    Verdict v = V.check(phi(lhs, k), phi(rhs, k));
    if (v.is_fails()) {
      v.level   = k;
      v.witness = V.name() + " separates the Phi_" + std::to_string(k)
                  + " images: " + v.witness;
    }
    return v;
  }

  Verdict check_semidirect_d(VChecker const& V, Term const& lhs,
                             Term const& rhs, std::size_t bound) {
    if (V.locally_trivial()) {
      throw PreconditionError(V.name()
                              + " is locally trivial; V*D checks need V not "
                                "contained in LI");
    }
    if (bound == 0) {
      throw PreconditionError("the level bound must be at least 1");
    }
    if (lhs == rhs) {
      return Verdict::holds();
    }
    Verdict li = check_identity({TruncVariety::Kind::LI}, lhs, rhs);
    if (li.is_fails()) {
      li.witness = "LI: " + li.witness;
      return li;
    }
    for (std::size_t l = 1; l <= bound; ++l) {
      Verdict v = V.check(phi(lhs, l), phi(rhs, l));
      if (v.is_fails()) {
        v.level   = l;
        v.witness = V.name() + " separates the Phi_" + std::to_string(l)
                    + " images: " + v.witness;
        return v;
      }
    }
    return Verdict::unknown_at_bound(bound);
  }

  Verdict check_solution(PointlikeSystem const& sys, FiniteSemigroup const& S,
                         GeneratorMap const& gens, SolutionMap const& eta,
                         VChecker const& V, CheckMode mode) {
    auto const& xs = sys.variables();
    for (auto const& x : xs) {
      auto it = eta.find(x);
      if (it == eta.end()) {
        throw PreconditionError("no term assigned to variable " + x);
      }
      MonoidElement value = eval(it->second, S, gens);
      if (value != sys.constraint(x)) {
        Verdict v   = Verdict::fails("delta(eta(" + x + ")) = "
                                   + S.monoid_element_name(value)
                                   + " but phi(" + x + ") = "
                                   + S.monoid_element_name(sys.constraint(x)));
        v.variables = {x, x};
        return v;
      }
    }
    bool unknown = false;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      Term const& lhs = eta.at(xs[i]);
      Term const& rhs = eta.at(xs[i + 1]);
      Verdict     v;
      switch (mode.kind) {
        case CheckMode::Kind::plain:
          v = V.check(lhs, rhs);
          break;
        case CheckMode::Kind::semidirect_dk:
          v = check_semidirect_dk(V, lhs, rhs, mode.k);
          break;
        case CheckMode::Kind::semidirect_d:
          v = check_semidirect_d(V, lhs, rhs, mode.bound);
          break;
      }
      if (v.is_fails()) {
        v.variables = {xs[i], xs[i + 1]};
        return v;
      }
      unknown = unknown || v.is_unknown();
    }
    if (unknown) {
      return Verdict::unknown_at_bound(
          mode.kind == CheckMode::Kind::semidirect_d ? mode.bound : 0);
    }
    return Verdict::holds();
  }

  ////////////////////////////////////////////////////////////////////////
  // Pointlike sets
  ////////////////////////////////////////////////////////////////////////

  std::map<std::string, std::set<Element>> projection_classes(
      FiniteSemigroup const& S, GeneratorMap const& gens, Side side,
      std::size_t k, std::size_t cap) {
    TruncSemigroup T(side, gens.base_alphabet(), k, cap);
    auto           words = T.elements();
    std::size_t const n  = S.order();
    std::vector<bool> member(T.order() * n, false);
    std::vector<std::pair<std::size_t, Element>> work;

    auto add = [&](std::size_t w, Element s) {
      if (!member[w * n + s]) {
        member[w * n + s] = true;
        work.emplace_back(w, s);
      }
    };
    for (char a : T.alphabet()) {
      add(T.index_of(std::string(1, a)), gens(Symbol::base(a)));
    }
    while (!work.empty()) {
      auto [w, s] = work.back();
      work.pop_back();
      for (char a : T.alphabet()) {
        add(T.index_of(T.product(words[w], std::string(1, a))),
            S.product(s, gens(Symbol::base(a))));
      }
    }
    std::map<std::string, std::set<Element>> result;
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::set<Element> cls;
      for (Element s = 0; s < n; ++s) {
        if (member[w * n + s]) {
          cls.insert(s);
        }
      }
      result.emplace(words[w], std::move(cls));
    }
    return result;
  }

  std::vector<PointlikeClass> compute_pointlikes(FiniteSemigroup const& S,
                                                 GeneratorMap const&    gens,
                                                 Side side, std::size_t k,
                                                 std::size_t cap) {
    auto classes = projection_classes(S, gens, side, k, cap);
    TruncSemigroup T(side, gens.base_alphabet(), k, cap);
    std::vector<PointlikeClass> ordered;
    for (auto const& w : T.elements()) {
      if (!classes.at(w).empty()) {
        ordered.push_back({w, classes.at(w)});
      }
    }
    std::vector<PointlikeClass> result;
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      auto const& cls     = ordered[i].elements;
      bool        maximal = true;
      for (std::size_t j = 0; j < ordered.size() && maximal; ++j) {
        if (i == j) {
          continue;
        }
        auto const& other = ordered[j].elements;
        bool        inside
            = std::includes(other.begin(), other.end(), cls.begin(), cls.end());
        // strictly smaller, or equal and listed earlier
        if (inside && (other.size() > cls.size() || j < i)) {
          maximal = false;
        }
      }
      if (maximal) {
        result.push_back(ordered[i]);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  TransformReport transform_solution(PointlikeSystem const& sys,
                                     FiniteSemigroup const& S,
                                     GeneratorMap const&    gens,
                                     SolutionMap const& eta_k, std::size_t k,
                                     VChecker const& V, std::size_t bound) {
    if (k <= S.order()) {
      throw PreconditionError("transform needs k > |S| (k = "
                              + std::to_string(k) + ", |S| = "
                              + std::to_string(S.order()) + ")");
    }
    TransformReport report;
    report.bound = bound;
    report.input = check_solution(sys, S, gens, eta_k, V, CheckMode::with_dk(k));
    if (report.input.is_fails()) {
      report.refused = true;
      return report;
    }
    ThetaContext ctx(S, gens, k);
    for (auto const& x : sys.variables()) {
      Term const& t = eta_k.at(x);
      report.eta.emplace(x, t.is_empty() ? t : ctx.theta_prime(t));
    }
    report.value = Verdict::holds();
    for (auto const& x : sys.variables()) {
      if (eval(report.eta.at(x), S, gens) != sys.constraint(x)) {
        report.value = Verdict::fails("internal error: theta' changed the "
                                      "value of "
                                      + x);
        report.value.variables = {x, x};
        break;
      }
    }
    report.solution = check_solution(sys, S, gens, report.eta, V,
                                     CheckMode::with_d(bound));
    auto const& xs = sys.variables();
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      LevelRow row{xs[i], xs[i + 1], {}};
      Term const& lhs = report.eta.at(xs[i]);
      Term const& rhs = report.eta.at(xs[i + 1]);
      for (std::size_t l = 1; l <= bound; ++l) {
        row.levels.push_back(V.check(phi(lhs, l), phi(rhs, l)).kind);
      }
      report.levels.push_back(std::move(row));
    }
    return report;
  }

}  // namespace kappa
