//
// epigen - idempotent factorizations in finite transformation semigroups
// Copyright (C) 2026 The epigen authors
//
// This program is free software: you can redistribute it and/or modify
// it under the terms of the GNU General Public License as published by
// the Free Software Foundation, either version 3 of the License, or
// (at your option) any later version.
//
// This program is distributed in the hope that it will be useful,
// but WITHOUT ANY WARRANTY; without even the implied warranty of
// MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
// GNU General Public License for more details.
//
// You should have received a copy of the GNU General Public License
// along with this program.  If not, see <http://www.gnu.org/licenses/>.
//

// The epigen command line. run() takes the arguments after the program name
// and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success or verified, 1 refuted, 2 invalid input, 3 not a
// member, 4 failed self-check.

#ifndef EPIGEN_CLI_HPP_
#define EPIGEN_CLI_HPP_

#include <algorithm>  // for all_of
#include <charconv>   // for from_chars
#include <cstdlib>    // for getenv
#include <iomanip>    // for setw
#include <optional>   // for optional
#include <ostream>    // for ostream
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"

#include "conjugacy.hpp"
#include "factor.hpp"
#include "oracle.hpp"
#include "serialize.hpp"
#include "text.hpp"
#include "transf.hpp"

namespace epigen::cli {

  enum exit_code : int {
    success      = 0,
    refuted      = 1,
    invalid      = 2,
    not_a_member = 3,
    self_check   = 4
  };

  namespace detail {

    struct Common {
      std::size_t              n = 0;
      bool                     json = false;
      std::optional<std::size_t> max_n;
      std::vector<std::string> image;  // positional tokens, joined by spaces
    };

    inline void add_common(CLI::App* sub, Common& c, bool with_image) {
      sub->add_option("--n", c.n, "degree of the transformations")
          ->required()
          ->check(CLI::PositiveNumber);
      sub->add_flag("--json", c.json, "emit JSON");
      sub->add_option("--max-n", c.max_n, "largest degree the oracle accepts");
      if (with_image) {
        sub->add_option("image", c.image, "images, e.g. \"2 1 1\"")
            ->required();
      }
    }

    inline std::string joined(std::vector<std::string> const& tokens) {
      std::string out;
      for (auto const& t : tokens) {
        if (!out.empty()) {
          out += ' ';
        }
        out += t;
      }
      return out;
    }

    inline std::size_t resolve_max_n(std::optional<std::size_t> flag) {
      if (flag) {
        return *flag;
      }
      if (char const* env = std::getenv("EPIGEN_MAX_N")) {
        std::string_view s(env);
        std::size_t      v = 0;
        auto [ptr, ec]     = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size()) {
          epigen::detail::fail("EPIGEN_MAX_N must be a non-negative integer");
        }
        return v;
      }
      return default_max_n;
    }

    inline void self_check(bool ok, std::string const& what) {
      if (!ok) {
        throw SelfCheckFailure("self-check failed: " + what);
      }
    }

    inline void print_factors(std::ostream& out, Factorization const& f) {
      std::size_t i = 1;
      for (auto const& r : f.factors) {
        out << std::setw(3) << i++ << "  " << to_string(r.value) << "  "
            << kind_name(r.kind);
        if (r.conjugator) {
          out << "  by " << to_cycle_string(*r.conjugator);
        }
        out << '\n';
      }
    }

    inline void print_conjugates(std::ostream&                       out,
                                 std::vector<ConjugateFactor> const& fs) {
      std::size_t i = 1;
      for (auto const& cf : fs) {
        out << std::setw(3) << i++ << "  " << to_string(cf.value) << "  = ("
            << to_string(cf.base) << ")^" << to_cycle_string(cf.conjugator)
            << '\n';
      }
    }

    inline bool factors_valid(std::vector<ConjugateFactor> const& fs) {
      return std::all_of(
          fs.cbegin(), fs.cend(), [](auto const& cf) { return cf.valid(); });
    }

    inline void emit_factorization(std::ostream&        out,
                                   Factorization const& f,
                                   bool                 as_json) {
      self_check(verify_factorization(f), "factorization does not verify");
      if (as_json) {
        out << to_json(f, true).dump() << '\n';
        return;
      }
      out << "input " << to_string(f.input) << " (n = " << f.input.degree()
          << ", rank " << f.input.rank() << ")\n";
      if (f.base) {
        out << "base  " << to_string(*f.base) << '\n';
      }
      print_factors(out, f);
      out << "product verified\n";
    }

    inline int emit_verdict(std::ostream&      out,
                            std::string const& check,
                            std::size_t        n,
                            bool               ok,
                            bool               as_json) {
      if (as_json) {
        out << json{{"check", check}, {"n", n}, {"verified", ok}}.dump()
            << '\n';
      } else {
        out << (ok ? "OK" : "FAILED") << '\n';
      }
      return ok ? success : refuted;
    }

  }  // namespace detail

  inline int run(std::vector<std::string> const& args,
                 std::ostream&                   out,
                 std::ostream&                   err) {
    using detail::Common;

    CLI::App app{"Idempotent and conjugate factorizations of singular "
                 "transformations",
                 "epigen"};
    app.require_subcommand(1);

    Common f_opts;
    auto*  factor = app.add_subcommand(
        "factor", "factor a singular transformation into idempotents of its rank");
    detail::add_common(factor, f_opts, true);

    Common      fc_opts;
    std::string fc_base;
    auto*       factor_conj = app.add_subcommand(
        "factor-conj", "factor a as e * (conjugates of an idempotent f)");
    detail::add_common(factor_conj, fc_opts, true);
    factor_conj->add_option("--base", fc_base, "the idempotent f")->required();

    Common                   rw_opts;
    std::vector<std::size_t> rw_swap;
    std::string              rw_base;
    auto*                    rewrite = app.add_subcommand(
        "rewrite", "rewrite a * (x y) as a * (idempotent factors)");
    detail::add_common(rewrite, rw_opts, true);
    rewrite->add_option("--swap", rw_swap, "the transposition (x y)")
        ->expected(2)
        ->required();
    rewrite->add_option("--base", rw_base, "use conjugates of this idempotent");

    Common      cj_opts;
    std::string cj_by;
    auto*       conj = app.add_subcommand("conjugate", "compute t^g = g^-1 t g");
    detail::add_common(conj, cj_opts, true);
    conj->add_option("--by", cj_by, "the permutation g")->required();

    Common t5_opts;
    auto*  theorem5 = app.add_subcommand(
        "theorem5", "write e as a product of conjugates of a = e * g");
    detail::add_common(theorem5, t5_opts, true);

    Common      wf_opts;
    std::string wf_word, wf_base;
    auto*       word_factor = app.add_subcommand(
        "word-factor", "factor the value of a word into conjugates of its base");
    detail::add_common(word_factor, wf_opts, false);
    word_factor->add_option("--word", wf_word, "\"g0 | a | g1 | ... | gr\"")
        ->required();
    word_factor->add_option("--base", wf_base, "the base, when written as a");

    Common      fw_opts;
    std::string fw_base;
    auto*       find_word_cmd = app.add_subcommand(
        "find-word", "search for a word over a base evaluating to a target");
    detail::add_common(find_word_cmd, fw_opts, true);
    find_word_cmd->add_option("--base", fw_base, "the base a")->required();

    auto* verify = app.add_subcommand("verify", "exhaustive checks");
    verify->require_subcommand(1);
    Common v2_opts;
    auto*  v_thm2 = verify->add_subcommand(
        "theorem2", "idempotents generate every rank-filtration ideal");
    detail::add_common(v_thm2, v2_opts, false);
    Common v5_opts;
    auto*  v_thm5
        = verify->add_subcommand("theorem5",
                                 "<C_a> = <C_e> = a^{S_n}, for one a or for "
                                 "every singular a");
    detail::add_common(v_thm5, v5_opts, false);
    v_thm5->add_option("image", v5_opts.image, "the element a");
    Common      vi_opts;
    std::string vi_by;
    std::size_t vi_power = 0;
    auto*       v_ident  = verify->add_subcommand(
        "identity", "(a g^-1)^j = a a^g ... a^(g^(j-1)) g^-j");
    detail::add_common(v_ident, vi_opts, true);
    v_ident->add_option("--by", vi_by, "the permutation g")->required();
    v_ident->add_option("--power", vi_power, "the exponent j")
        ->required()
        ->check(CLI::PositiveNumber);

    auto* enumerate = app.add_subcommand("enumerate", "list element sets");
    enumerate->require_subcommand(1);
    Common      ei_opts;
    std::size_t ei_rank = 0;
    auto*       e_idem
        = enumerate->add_subcommand("idempotents", "idempotents of one rank");
    detail::add_common(e_idem, ei_opts, false);
    e_idem->add_option("--rank", ei_rank, "the rank")->required();
    Common      ej_opts;
    std::size_t ej_rank = 0;
    auto*       e_ideal
        = enumerate->add_subcommand("ideal", "elements of rank at most K");
    detail::add_common(e_ideal, ej_opts, false);
    e_ideal->add_option("--rank", ej_rank, "the rank bound")->required();
    Common ec_opts;
    auto*  e_class = enumerate->add_subcommand("class", "a conjugacy class");
    detail::add_common(e_class, ec_opts, true);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      err << "epigen: error: " << e.what() << '\n';
      return invalid;
    }

    try {
      if (*factor) {
        auto const n = f_opts.n;
        auto const a = parse_transformation(n, detail::joined(f_opts.image));
        detail::emit_factorization(out, factor_idempotents(a), f_opts.json);
        return success;
      }

      if (*factor_conj) {
        auto const n = fc_opts.n;
        auto const a = parse_transformation(n, detail::joined(fc_opts.image));
        Idempotent const f(parse_transformation(n, fc_base));
        auto const [seed, fs] = corollary3_factor(a, f);
        detail::emit_factorization(
            out, to_factorization(a, f, fs, &seed), fc_opts.json);
        return success;
      }

      if (*rewrite) {
        auto const n = rw_opts.n;
        auto const a = parse_transformation(n, detail::joined(rw_opts.image));
        if (rw_swap[0] < 1 || rw_swap[0] > n || rw_swap[1] < 1
            || rw_swap[1] > n) {
          epigen::detail::fail("--swap points must lie in [1, n]");
        }
        Transposition const tau{static_cast<point_type>(rw_swap[0] - 1),
                                static_cast<point_type>(rw_swap[1] - 1)};
        auto const target = a * tau.as_permutation(n);
        json       j;
        j["n"]     = n;
        j["input"] = to_string(a);
        j["swap"]  = json::array({rw_swap[0], rw_swap[1]});
        j["value"] = to_string(target);
        if (rw_base.empty()) {
          auto const        patterns = rewrite_patterns(a, tau);
          auto const        factors  = lemma1_rewrite(a, tau);
          std::vector<Transformation> prod{a};
          for (auto const& e : factors) {
            prod.push_back(e.transf());
          }
          detail::self_check(product(prod) == target,
                             "rewrite does not reproduce a(x y)");
          if (rw_opts.json) {
            auto arr = json::array();
            for (std::size_t i = 0; i < factors.size(); ++i) {
              arr.push_back({{"images", to_string(factors[i])},
                             {"kind", kind_name(patterns[i].first)},
                             {"pattern", to_string(patterns[i].second)}});
            }
            j["factors"]  = std::move(arr);
            j["verified"] = true;
            out << j.dump() << '\n';
          } else {
            out << "a(x y) = " << to_string(target) << '\n';
            for (std::size_t i = 0; i < factors.size(); ++i) {
              out << std::setw(3) << i + 1 << "  " << to_string(factors[i])
                  << "  " << kind_name(patterns[i].first) << "  "
                  << to_string(patterns[i].second) << '\n';
            }
            out << (factors.empty() ? "no factors needed\n"
                                    : "product verified\n");
          }
        } else {
          Idempotent const f(parse_transformation(n, rw_base));
          auto const       fs = lemma3_rewrite(a, tau, f);
          std::vector<Transformation> prod{a};
          for (auto const& cf : fs) {
            prod.push_back(cf.value);
          }
          detail::self_check(product(prod) == target
                                 && detail::factors_valid(fs),
                             "rewrite does not reproduce a(x y)");
          if (rw_opts.json) {
            j["base"]     = to_string(f);
            j["factors"]  = to_json(fs);
            j["verified"] = true;
            out << j.dump() << '\n';
          } else {
            out << "a(x y) = " << to_string(target) << '\n';
            detail::print_conjugates(out, fs);
            out << (fs.empty() ? "no factors needed\n" : "product verified\n");
          }
        }
        return success;
      }

      if (*conj) {
        auto const n  = cj_opts.n;
        auto const t  = parse_transformation(n, detail::joined(cj_opts.image));
        auto const g  = parse_permutation(n, cj_by);
        auto const cf = ConjugateFactor::make(t, g);
        if (cj_opts.json) {
          out << to_json(cf).dump() << '\n';
        } else {
          out << to_string(cf.value) << '\n';
        }
        return success;
      }

      if (*theorem5) {
        auto const n = t5_opts.n;
        auto const a = parse_transformation(n, detail::joined(t5_opts.image));
        auto const [fs, e] = theorem5_leading_idempotent(a);
        auto const g       = eg_decompose(a).second;
        detail::self_check(product(values_of(fs)) == e.transf()
                               && detail::factors_valid(fs),
                           "product of conjugates is not e");
        if (t5_opts.json) {
          json j;
          j["n"]           = n;
          j["input"]       = to_string(a);
          j["idempotent"]  = to_string(e);
          j["permutation"] = to_cycle_string(g);
          j["order"]       = g.order();
          j["factors"]     = to_json(fs);
          j["verified"]    = true;
          out << j.dump() << '\n';
        } else {
          out << "a = " << to_string(a) << " = e g with e = " << to_string(e)
              << ", g = " << to_cycle_string(g) << " of order " << g.order()
              << '\n';
          detail::print_conjugates(out, fs);
          out << "product = e verified\n";
        }
        return success;
      }

      if (*word_factor) {
        auto const n = wf_opts.n;
        std::optional<Transformation> base;
        if (!wf_base.empty()) {
          base = parse_transformation(n, wf_base);
        }
        auto const w  = parse_word(n, wf_word, base);
        auto const fs = factor_word_into_conjugates(w);
        detail::emit_factorization(
            out, to_factorization(w.value(), w.base(), fs), wf_opts.json);
        return success;
      }

      if (*find_word_cmd) {
        auto const n = fw_opts.n;
        auto const target
            = parse_transformation(n, detail::joined(fw_opts.image));
        auto const a = parse_transformation(n, fw_base);
        auto const w
            = find_word(target, a, detail::resolve_max_n(fw_opts.max_n));
        detail::self_check(w.value() == target, "word does not evaluate to "
                                                "the target");
        if (fw_opts.json) {
          out << json{{"n", n},
                      {"target", to_string(target)},
                      {"base", to_string(a)},
                      {"word", to_string(w)}}
                     .dump()
              << '\n';
        } else {
          out << to_string(w) << '\n';
        }
        return success;
      }

      if (*v_thm2) {
        auto const max_n = detail::resolve_max_n(v2_opts.max_n);
        return detail::emit_verdict(
            out, "theorem2", v2_opts.n, verify_theorem2(v2_opts.n, max_n),
            v2_opts.json);
      }

      if (*v_thm5) {
        auto const n     = v5_opts.n;
        auto const max_n = detail::resolve_max_n(v5_opts.max_n);
        bool       ok    = true;
        if (v5_opts.image.empty()) {
          for (auto const& a : singular_transformations(n, max_n)) {
            ok = ok && verify_theorem5(a, max_n);
          }
        } else {
          ok = verify_theorem5(
              parse_transformation(n, detail::joined(v5_opts.image)), max_n);
        }
        return detail::emit_verdict(out, "theorem5", n, ok, v5_opts.json);
      }

      if (*v_ident) {
        auto const n = vi_opts.n;
        auto const a = parse_transformation(n, detail::joined(vi_opts.image));
        auto const g = parse_permutation(n, vi_by);
        return detail::emit_verdict(out,
                                    "identity",
                                    n,
                                    power_identity_check(a, g, vi_power),
                                    vi_opts.json);
      }

      std::optional<ElementSet> set;
      bool                      as_json = false;
      if (*e_idem) {
        set     = enumerate_idempotents(ei_opts.n,
                                    ei_rank,
                                    detail::resolve_max_n(ei_opts.max_n));
        as_json = ei_opts.json;
      } else if (*e_ideal) {
        set     = ideal_elements(
            ej_opts.n, ej_rank, detail::resolve_max_n(ej_opts.max_n));
        as_json = ej_opts.json;
      } else if (*e_class) {
        set     = conjugacy_class(
            parse_transformation(ec_opts.n, detail::joined(ec_opts.image)),
            detail::resolve_max_n(ec_opts.max_n));
        as_json = ec_opts.json;
      }
      if (set) {
        if (as_json) {
          out << to_json(*set).dump() << '\n';
        } else {
          out << "size " << set->size() << '\n';
          for (auto const& t : set->members()) {
            out << to_string(t) << '\n';
          }
        }
        return success;
      }
      err << "epigen: error: no subcommand given\n";
      return invalid;
    } catch (SelfCheckFailure const& e) {
      err << "epigen: error: " << e.what() << '\n';
      return self_check;
    } catch (NotAMember const& e) {
      err << "epigen: error: " << e.what() << '\n';
      return not_a_member;
    } catch (EpigenException const& e) {
      err << "epigen: error: " << e.what() << '\n';
      return invalid;
    }
  }

}  // namespace epigen::cli

#endif  // EPIGEN_CLI_HPP_
