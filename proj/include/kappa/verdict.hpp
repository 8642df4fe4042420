#ifndef KAPPA_VERDICT_HPP_
#define KAPPA_VERDICT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace kappa {

  //! Outcome of a pseudoidentity or solution check.
  //!
  //! Fails always carries a witness: a level (a truncation length or the
  //! superposition level at which the sides differ) and/or a description
  //! that can be checked independently. UnknownAtBound is returned when every
  //! check up to a finite bound passed but the property quantifies over all
  //! levels.
  struct Verdict {
    enum class Kind { holds, fails, unknown };

    Kind                                             kind = Kind::holds;
    std::optional<std::size_t>                       level;
    std::optional<std::size_t>                       bound;
    std::optional<std::pair<std::string, std::string>> variables;
    std::string                                      witness;

    static Verdict holds() {
      return {};
    }
    static Verdict fails(std::string witness,
                         std::optional<std::size_t> level = std::nullopt) {
      Verdict v;
      v.kind    = Kind::fails;
      v.level   = level;
      v.witness = std::move(witness);
      return v;
    }
    static Verdict unknown_at_bound(std::size_t bound) {
      Verdict v;
      v.kind  = Kind::unknown;
      v.bound = bound;
      return v;
    }

    bool is_holds() const noexcept {
      return kind == Kind::holds;
    }
    bool is_fails() const noexcept {
      return kind == Kind::fails;
    }
    bool is_unknown() const noexcept {
      return kind == Kind::unknown;
    }
  };

  inline char const* to_string(Verdict::Kind k) {
    switch (k) {
      case Verdict::Kind::holds:
        return "holds";
      case Verdict::Kind::fails:
        return "fails";
      case Verdict::Kind::unknown:
        return "unknown";
    }
    return "";
  }

}  // namespace kappa

#endif  // KAPPA_VERDICT_HPP_
