// Pointlike systems x1 = x2 = ... = xm, checking candidate solutions against
// concrete pseudovarieties, D_k / K_k pointlike sets, and the transformation
// of V*D_k-solutions into V*D-solutions.

#ifndef KAPPA_POINTLIKES_HPP_
#define KAPPA_POINTLIKES_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kappa/finsemi.hpp"
#include "kappa/terms.hpp"
#include "kappa/truncation.hpp"
#include "kappa/verdict.hpp"

namespace kappa {

  //! An identity oracle for a pseudovariety V: decides (or tries to refute)
  //! V |= lhs = rhs. Holds answers are sound; Fails answers carry a witness.
  class VChecker {
   public:
    virtual ~VChecker() = default;

    virtual std::string name() const = 0;
    virtual Verdict     check(Term const& lhs, Term const& rhs) const = 0;

    //! True when V is contained in LI; such V are not admissible as the
    //! left factor of V*D_k in the semidirect check modes.
    virtual bool locally_trivial() const {
      return false;
    }
  };

  //! Semilattices: equality of content. Works over any alphabet.
  class SlChecker final : public VChecker {
   public:
    std::string name() const override {
      return "Sl";
    }
    Verdict check(Term const& lhs, Term const& rhs) const override;
  };

  //! K_k, D_k, K, D or LI, over base letters.
  class TruncChecker final : public VChecker {
   public:
    explicit TruncChecker(TruncVariety variety) : variety_(variety) {}

    std::string name() const override {
      return variety_.name();
    }
    Verdict check(Term const& lhs, Term const& rhs) const override {
      return check_identity(variety_, lhs, rhs);
    }
    bool locally_trivial() const override {
      return true;
    }

   private:
    TruncVariety variety_;
  };

  //! Evaluates both sides in every semigroup of a finite list, under every
  //! assignment of the occurring letters (or, above \p max_assignments per
  //! semigroup, under that many pseudo-random ones). Sound for Fails;
  //! otherwise answers UnknownAtBound with the number of semigroups tried.
  class FalsifierChecker final : public VChecker {
   public:
    explicit FalsifierChecker(std::vector<FiniteSemigroup> pool,
                              std::size_t max_assignments = 4096,
                              std::uint64_t seed = 0x5eed);

    std::string name() const override {
      return "falsifier";
    }
    Verdict check(Term const& lhs, Term const& rhs) const override;

   private:
    std::vector<FiniteSemigroup> pool_;
    std::size_t                  max_assignments_;
    std::uint64_t                seed_;
  };

  //! The system x1 = x2 = ... = xm with a constraint phi(x) in S^1 for every
  //! variable. Throws PreconditionError for m < 2 or a missing constraint.
  class PointlikeSystem {
   public:
    PointlikeSystem(std::vector<std::string>             variables,
                    std::map<std::string, MonoidElement> constraints);

    std::vector<std::string> const& variables() const noexcept {
      return variables_;
    }
    MonoidElement constraint(std::string const& x) const {
      return constraints_.at(x);
    }

   private:
    std::vector<std::string>             variables_;
    std::map<std::string, MonoidElement> constraints_;
  };

  //! eta: X -> terms over A (the empty term stands for the identity).
  using SolutionMap = std::map<std::string, Term>;

  struct CheckMode {
    enum class Kind { plain, semidirect_dk, semidirect_d };
    Kind        kind  = Kind::plain;
    std::size_t k     = 0;  // semidirect_dk
    std::size_t bound = 0;  // semidirect_d: levels 1..bound of Phi_l

    static CheckMode plain() {
      return {};
    }
    static CheckMode with_dk(std::size_t k) {
      return {Kind::semidirect_dk, k, 0};
    }
    static CheckMode with_d(std::size_t bound) {
      return {Kind::semidirect_d, 0, bound};
    }
  };

  //! V*D_k |= lhs = rhs iff i_k and t_k agree and V |= Phi_k lhs = Phi_k rhs.
  Verdict check_semidirect_dk(VChecker const& V, Term const& lhs,
                              Term const& rhs, std::size_t k);

  //! V*D |= lhs = rhs iff LI |= lhs = rhs and V |= Phi_l lhs = Phi_l rhs for
  //! every l >= 1. Levels 1..bound are checked; if all pass the answer is
  //! UnknownAtBound(bound) unless the sides are syntactically equal (Holds).
  Verdict check_semidirect_d(VChecker const& V, Term const& lhs,
                             Term const& rhs, std::size_t bound);

  //! Checks delta eta = phi first, then the chain x1 = x2, ..., in \p mode.
  //! Fails carries the offending pair of variables. Throws
  //! PreconditionError if eta is not total or, in a semidirect mode, V is
  //! locally trivial; AlgebraError on letters outside \p gens.
  Verdict check_solution(PointlikeSystem const& sys, FiniteSemigroup const& S,
                         GeneratorMap const& gens, SolutionMap const& eta,
                         VChecker const& V, CheckMode mode);

  //! For every w in A_k, the set M(w) = { delta(u) : p(u) = w } where p is the
  //! projection onto the K_k (prefix side) or D_k (suffix side) semigroup,
  //! computed by fixpoint relaxation over (w, s) pairs.
  std::map<std::string, std::set<Element>> projection_classes(
      FiniteSemigroup const& S, GeneratorMap const& gens, Side side,
      std::size_t k, std::size_t cap = 100'000);

  struct PointlikeClass {
    std::string       witness;  // w in A_k with elements = M(w)
    std::set<Element> elements;

    friend bool operator==(PointlikeClass const&,
                           PointlikeClass const&) = default;
  };

  //! The maximal D_k- (suffix side) or K_k- (prefix side) pointlike subsets
  //! of S, each with a witness word, ordered by witness.
  std::vector<PointlikeClass> compute_pointlikes(FiniteSemigroup const& S,
                                                 GeneratorMap const&    gens,
                                                 Side side, std::size_t k,
                                                 std::size_t cap = 100'000);

  //! Per chain pair (x_i, x_(i+1)), whether V |= Phi_l eta(x_i) =
  //! Phi_l eta(x_(i+1)) for l = 1..bound.
  struct LevelRow {
    std::string              lhs;
    std::string              rhs;
    std::vector<Verdict::Kind> levels;
  };

  struct TransformReport {
    //! D_k-mode verdict on the input; transformation is refused on Fails.
    Verdict input;
    bool    refused = false;
    //! theta'_k applied to every input term.
    SolutionMap eta;
    //! delta eta = phi. A failure here is an internal error.
    Verdict value;
    //! D-mode verdict at the bound.
    Verdict solution;
    std::vector<LevelRow> levels;
    std::size_t           bound = 0;
  };

  //! theta'_k . eta_k together with its verification. Throws
  //! PreconditionError unless k > |S|.
  TransformReport transform_solution(PointlikeSystem const& sys,
                                     FiniteSemigroup const& S,
                                     GeneratorMap const&    gens,
                                     SolutionMap const& eta_k, std::size_t k,
                                     VChecker const& V, std::size_t bound);

  //! A system file:
  //!
  //!     vars x1 x2 ...
  //!     phi x1=<element> x2=<element> ...
  //!     eta x1=<term> x2=<term> ...
  //!
  //! Element names refer to \p S; `1` is the adjoined identity (when it is
  //! not the name of an element). A term extends up to the next `<var>=`.
  struct SystemFile {
    PointlikeSystem system;
    SolutionMap     eta;
  };
  SystemFile parse_system(std::string_view text, FiniteSemigroup const& S);
  SystemFile load_system_file(std::string const& path,
                              FiniteSemigroup const& S);

}  // namespace kappa

#endif  // KAPPA_POINTLIKES_HPP_
