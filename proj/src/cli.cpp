#include "kappa/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

#include "kappa/criteria.hpp"
#include "kappa/error.hpp"
#include "kappa/pointlikes.hpp"
#include "kappa/superpose.hpp"
#include "kappa/theta.hpp"
#include "kappa/truncation.hpp"

namespace kappa::cli {

  namespace {
    // `@path` reads the term from a file.
    Term read_term(std::string const& arg) {
      if (arg.empty() || arg[0] != '@') {
        return parse_term(arg);
      }
      std::ifstream in(arg.substr(1));
      if (!in) {
        throw ParseError("cannot open " + arg.substr(1));
      }
      std::stringstream buf;
      buf << in.rdbuf();
      return parse_term(buf.str());
    }

    struct Semigroup {
      FiniteSemigroup S;
      GeneratorMap    gens;
    };

    Semigroup read_semigroup(std::string const& path) {
      auto loaded = load_semigroup_file(path);
      if (!loaded.generators) {
        throw ParseError(path + ": no generators line");
      }
      return {std::move(loaded.semigroup), std::move(*loaded.generators)};
    }

    // Machine-readable block: one `key: value` per line, in insertion order.
    class Block {
     public:
      Block& add(std::string key, std::string value) {
        for (auto& c : value) {
          if (c == '\n') {
            c = ' ';
          }
        }
        lines_.emplace_back(std::move(key), std::move(value));
        return *this;
      }
      void print(std::ostream& out) const {
        for (auto const& [k, v] : lines_) {
          out << k << ": " << v << '\n';
        }
      }

     private:
      std::vector<std::pair<std::string, std::string>> lines_;
    };

    int exit_code(Verdict const& v) {
      switch (v.kind) {
        case Verdict::Kind::holds:
          return success;
        case Verdict::Kind::fails:
          return fails;
        case Verdict::Kind::unknown:
          return unknown;
      }
      return fails;
    }

    void add_verdict(Block& block, Verdict const& v) {
      block.add("verdict", to_string(v.kind));
      if (v.level) {
        block.add("level", std::to_string(*v.level));
      }
      if (v.bound) {
        block.add("bound", std::to_string(*v.bound));
      }
      if (v.variables) {
        block.add("variables", v.variables->first + " " + v.variables->second);
      }
      if (!v.witness.empty()) {
        block.add("witness", v.witness);
      }
    }

    std::string human(Verdict const& v) {
      switch (v.kind) {
        case Verdict::Kind::holds:
          return "holds";
        case Verdict::Kind::fails:
          return "fails: " + v.witness;
        case Verdict::Kind::unknown:
          return "unknown: every level up to " + std::to_string(v.bound.value_or(0))
                 + " agrees";
      }
      return "";
    }

    std::string show_set(FiniteSemigroup const& S, std::set<Element> const& xs) {
      std::string out = "{";
      for (auto x : xs) {
        out += (out.size() > 1 ? "," : "") + S.element_name(x);
      }
      return out + "}";
    }
  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Kappa-terms, superposition and pointlike systems over D"};
    app.require_subcommand(1);

    std::string semigroup_path, system_path, variety, term, rhs;
    std::size_t k = 0, bound = 0;
    double      scale = 1.0;
    std::uint64_t seed = criteria::Options{}.seed;

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term in S^1");
    eval_cmd->add_option("-S", semigroup_path, "Semigroup file")->required();
    eval_cmd->add_option("term", term)->required();

    auto* prefix_cmd = app.add_subcommand("prefix", "i_k of a term");
    auto* suffix_cmd = app.add_subcommand("suffix", "t_k of a term");
    auto* phi_cmd    = app.add_subcommand("phi", "Phi_k of a term");
    auto* beta_cmd   = app.add_subcommand("beta", "beta'_k of a term");
    for (auto* cmd : {prefix_cmd, suffix_cmd, phi_cmd, beta_cmd}) {
      cmd->add_option("-k", k)->required()->check(CLI::PositiveNumber);
      cmd->add_option("term", term)->required();
    }

    auto* theta_cmd = app.add_subcommand("theta", "theta'_k of a term");
    theta_cmd->add_option("-S", semigroup_path)->required();
    theta_cmd->add_option("-k", k)->required()->check(CLI::PositiveNumber);
    theta_cmd->add_option("term", term)->required();

    auto* check_cmd = app.add_subcommand("check", "Decide or test lhs = rhs");
    check_cmd->add_option("-V", variety)
        ->required()
        ->check(CLI::IsMember({"Kk", "Dk", "K", "D", "LI", "Sl"}));
    auto* k_opt = check_cmd->add_option("-k", k, "Kk, Dk; with Sl: Sl*D_k")
                      ->check(CLI::PositiveNumber);
    auto* l_opt = check_cmd->add_option("-L", bound, "with Sl: Sl*D up to level L")
                      ->check(CLI::PositiveNumber);
    check_cmd->add_option("lhs", term)->required();
    check_cmd->add_option("rhs", rhs)->required();

    auto* pl_cmd = app.add_subcommand("pointlikes", "Maximal pointlike sets");
    pl_cmd->add_option("-S", semigroup_path)->required();
    pl_cmd->add_option("-V", variety)->required()->check(
        CLI::IsMember({"Dk", "Kk"}));
    pl_cmd->add_option("-k", k)->required()->check(CLI::PositiveNumber);

    auto* tr_cmd = app.add_subcommand("transform",
                                      "Turn a Sl*D_k-solution into a Sl*D one");
    tr_cmd->add_option("-S", semigroup_path)->required();
    tr_cmd->add_option("-k", k)->required()->check(CLI::PositiveNumber);
    tr_cmd->add_option("--system", system_path)->required();
    tr_cmd->add_option("-L", bound, "Level bound (default 2k)")
        ->check(CLI::PositiveNumber);

    auto* self_cmd = app.add_subcommand("selftest", "Run the oracle suites");
    self_cmd->add_option("--scale", scale, "Fraction of the instance counts")
        ->check(CLI::Range(0.001, 10.0));
    self_cmd->add_option("--seed", seed);

    std::vector<char*> argv;
    std::vector<std::string> copy = args;
    for (auto& a : copy) {
      argv.push_back(a.data());
    }
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return success;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return success;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    try {
      if (eval_cmd->parsed()) {
        auto [S, gens] = read_semigroup(semigroup_path);
        out << S.monoid_element_name(eval(read_term(term), S, gens)) << '\n';
        return success;
      }
      if (prefix_cmd->parsed() || suffix_cmd->parsed()) {
        Term        t = read_term(term);
        std::string w = prefix_cmd->parsed() ? prefix_k(t, k) : suffix_k(t, k);
        out << (w.empty() ? "1" : w) << '\n';
        return success;
      }
      if (phi_cmd->parsed()) {
        out << to_string(phi(read_term(term), k)) << '\n';
        return success;
      }
      if (beta_cmd->parsed()) {
        out << to_string(beta_prime(read_term(term), k)) << '\n';
        return success;
      }
      if (theta_cmd->parsed()) {
        auto [S, gens] = read_semigroup(semigroup_path);
        ThetaContext ctx(S, gens, k);
        out << to_string(ctx.theta_prime(read_term(term))) << '\n';
        return success;
      }
      if (check_cmd->parsed()) {
        Term    lhs = read_term(term);
        Term    r   = read_term(rhs);
        Verdict v;
        Block   block;
        block.add("variety", variety);
        if (variety == "Sl") {
          if (k_opt->count() && l_opt->count()) {
            err << "check: give at most one of -k and -L with Sl\n";
            return usage;
          }
          SlChecker Sl;
          if (k_opt->count()) {
            block.add("mode", "Sl*D_k").add("k", std::to_string(k));
            v = check_semidirect_dk(Sl, lhs, r, k);
          } else if (l_opt->count()) {
            block.add("mode", "Sl*D");
            v = check_semidirect_d(Sl, lhs, r, bound);
          } else {
            v = Sl.check(lhs, r);
          }
        } else {
          TruncVariety V{TruncVariety::Kind::K, 0};
          if (variety == "Kk" || variety == "Dk") {
            if (!k_opt->count()) {
              err << "check: -V " << variety << " needs -k\n";
              return usage;
            }
            V = {variety == "Kk" ? TruncVariety::Kind::Kk : TruncVariety::Kind::Dk,
                 k};
            block.add("k", std::to_string(k));
          } else if (k_opt->count() || l_opt->count()) {
            err << "check: -V " << variety << " takes neither -k nor -L\n";
            return usage;
          } else {
            V.kind = variety == "K"   ? TruncVariety::Kind::K
                     : variety == "D" ? TruncVariety::Kind::D
                                      : TruncVariety::Kind::LI;
          }
          v = check_identity(V, lhs, r);
        }
        out << human(v) << '\n';
        add_verdict(block, v);
        block.print(out);
        return exit_code(v);
      }
      if (pl_cmd->parsed()) {
        auto [S, gens] = read_semigroup(semigroup_path);
        Side side      = variety == "Dk" ? Side::suffix : Side::prefix;
        auto classes   = compute_pointlikes(S, gens, side, k);
        Block block;
        block.add("variety", variety).add("k", std::to_string(k));
        block.add("classes", std::to_string(classes.size()));
        for (auto const& c : classes) {
          out << show_set(S, c.elements) << "  witness " << c.witness << '\n';
          block.add("class", c.witness + " " + show_set(S, c.elements));
        }
        block.print(out);
        return success;
      }
      if (tr_cmd->parsed()) {
        auto [S, gens] = read_semigroup(semigroup_path);
        auto file      = load_system_file(system_path, S);
        if (bound == 0) {
          bound = 2 * k;
        }
        auto report = transform_solution(file.system, S, gens, file.eta, k,
                                         SlChecker{}, bound);
        Block block;
        block.add("k", std::to_string(k));
        if (report.refused) {
          out << "input is not a Sl*D_k-solution: " << report.input.witness
              << '\n';
          block.add("input", "fails");
          add_verdict(block, report.input);
          block.print(out);
          return fails;
        }
        for (auto const& x : file.system.variables()) {
          out << x << " = " << to_string(report.eta.at(x)) << '\n';
        }
        out << "levels 1.." << bound << " (+ holds, - fails, ? unknown):\n";
        for (auto const& row : report.levels) {
          out << "  " << row.lhs << "=" << row.rhs << "  ";
          for (auto v : row.levels) {
            out << (v == Verdict::Kind::holds   ? '+'
                    : v == Verdict::Kind::fails ? '-'
                                                : '?');
          }
          out << '\n';
        }
        out << human(report.solution) << '\n';
        block.add("input", to_string(report.input.kind));
        block.add("values", report.value.is_holds() ? "preserved" : "changed");
        add_verdict(block, report.solution);
        if (!report.solution.bound) {
          block.add("bound", std::to_string(bound));
        }
        block.print(out);
        if (!report.value.is_holds()) {
          err << report.value.witness << '\n';
          return fails;
        }
        return exit_code(report.solution);
      }
      if (self_cmd->parsed()) {
        bool all = true;
        for (auto const& r : criteria::run_all({seed, scale})) {
          out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name
              << ": " << r.detail << '\n';
          all = all && r.passed;
        }
        return all ? success : fails;
      }
    } catch (ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (AlgebraError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (PreconditionError const& e) {
      err << "precondition violated: " << e.what() << '\n';
      return precondition;
    } catch (CapacityError const& e) {
      err << "capacity exceeded: " << e.what() << '\n';
      return precondition;
    } catch (std::exception const& e) {
      err << "internal error: " << e.what() << '\n';
      return fails;
    }
    return usage;
  }

}  // namespace kappa::cli
