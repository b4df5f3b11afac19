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

// Factorizations whose factors all lie in one conjugacy class
//
//   C_t = { t^g : g a permutation },   t^g = g^-1 * t * g.
//
// The rewrites of factor.hpp are realized here by conjugates of a fixed
// idempotent f instead of canonical pattern members, which gives
// factorizations over C_f, then over C_e, and finally over C_a for an
// arbitrary singular a.

#ifndef EPIGEN_CONJUGACY_HPP_
#define EPIGEN_CONJUGACY_HPP_

#include <algorithm>  // for sort, find_if
#include <cstddef>    // for size_t
#include <utility>    // for move
#include <vector>     // for vector

#include "factor.hpp"
#include "transf.hpp"

namespace epigen {

  //! A conjugate base^conjugator together with its value.
  struct ConjugateFactor {
    Transformation base;
    Permutation    conjugator;
    Transformation value;

    static ConjugateFactor make(Transformation const& base,
                                Permutation const&    conjugator) {
      return {base, conjugator, conjugate(base, conjugator)};
    }

    //! The witness reproduces the value and the kernel shapes agree.
    [[nodiscard]] bool valid() const {
      return base.degree() == value.degree()
             && conjugator.degree() == value.degree()
             && kernel_class_sizes(base) == kernel_class_sizes(value)
             && conjugate(base, conjugator) == value;
    }

    friend bool operator==(ConjugateFactor const&, ConjugateFactor const&)
        = default;
  };

  //! Membership in C_base certified by a witness.
  inline bool is_conjugate_via(Transformation const& value,
                               Transformation const& base,
                               Permutation const&    witness) {
    return ConjugateFactor{base, witness, value}.valid();
  }

  inline std::vector<Transformation>
  values_of(std::vector<ConjugateFactor> const& fs) {
    std::vector<Transformation> out;
    out.reserve(fs.size());
    for (auto const& f : fs) {
      out.push_back(f.value);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugating an idempotent into a pattern
  ////////////////////////////////////////////////////////////////////////

  //! Returns g such that f^g matches \p target.
  //!
  //! \p target must have exactly one entry with extras, and that entry must
  //! have a single extra point. In f, let w be the least representative of a
  //! class with at least two points, and x1 the least other point of that
  //! class. Then g sends w to the target's marked representative, x1 to its
  //! extra point, the other representatives of f to the other target
  //! representatives (increasing order on both sides), and the leftover
  //! points to the leftover points in increasing order.
  inline Permutation conjugator_into_pattern(Idempotent const&        f,
                                             IdempotentPattern const& target) {
    auto const n = f.degree();
    detail::check_same_degree(n, target.degree());
    if (f.rank() == n) {
      detail::fail("the base idempotent must be singular");
    }
    if (f.rank() != target.rank()) {
      detail::fail("rank mismatch between base idempotent and target pattern");
    }
    auto const& entries = target.entries();
    auto        marked  = std::find_if(entries.cbegin(),
                               entries.cend(),
                               [](auto const& e) { return !e.extras.empty(); });
    if (marked == entries.cend()
        || std::count_if(entries.cbegin(),
                         entries.cend(),
                         [](auto const& e) { return !e.extras.empty(); })
               != 1
        || marked->extras.size() != 1) {
      detail::fail("target pattern must have exactly one entry with exactly "
                   "one extra point");
    }

    // the class with >= 2 points and least representative
    auto const partition = f.partition();
    point_type w = 0, x1 = 0;
    bool       found = false;
    for (auto const& c : partition.classes()) {
      if (c.size() < 2) {
        continue;
      }
      auto rep = f[c.front()];
      if (!found || rep < w) {
        w     = rep;
        x1    = c.front() == rep ? c[1] : c.front();
        found = true;
      }
    }

    std::vector<point_type> from_reps, to_reps;
    for (auto p : f.transf().image_set()) {
      if (p != w) {
        from_reps.push_back(p);
      }
    }
    for (auto const& e : entries) {
      if (&e != &*marked) {
        to_reps.push_back(e.rep);
      }
    }
    std::sort(to_reps.begin(), to_reps.end());

    std::vector<point_type> img(n);
    std::vector<bool>       dom_used(n, false), cod_used(n, false);
    auto                    assign = [&](point_type x, point_type y) {
      img[x]      = y;
      dom_used[x] = true;
      cod_used[y] = true;
    };
    assign(w, marked->rep);
    assign(x1, marked->extras.front());
    for (std::size_t i = 0; i < from_reps.size(); ++i) {
      assign(from_reps[i], to_reps[i]);
    }
    point_type y = 0;
    for (point_type x = 0; x < n; ++x) {
      if (dom_used[x]) {
        continue;
      }
      while (cod_used[y]) {
        ++y;
      }
      img[x] = y++;
    }
    return Permutation(std::move(img));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewrites and factorizations over C_f
  ////////////////////////////////////////////////////////////////////////

  //! As lemma1_rewrite, but every factor is a conjugate of \p f.
  inline std::vector<ConjugateFactor>
  lemma3_rewrite(Transformation const& a, Transposition tau, Idempotent const& f) {
    detail::check_same_degree(a.degree(), f.degree());
    if (f.rank() != a.rank()) {
      detail::fail("rank mismatch: base has rank " + std::to_string(f.rank())
                   + ", input has rank " + std::to_string(a.rank()));
    }
    std::vector<ConjugateFactor> out;
    for (auto const& [kind, pattern] : rewrite_patterns(a, tau)) {
      out.push_back(
          ConjugateFactor::make(f.transf(), conjugator_into_pattern(f, pattern)));
    }
    return out;
  }

  struct SeededConjugates {
    Idempotent                   seed;
    std::vector<ConjugateFactor> factors;
  };

  //! Factors e * g as e * (conjugates of f), processing the transpositions
  //! of g in order. rank(f) must equal rank(e).
  inline SeededConjugates corollary3_factor(Idempotent const&  e,
                                            Permutation const& g,
                                            Idempotent const&  f) {
    detail::check_same_degree(e.degree(), g.degree());
    SeededConjugates out{e, {}};
    Transformation   prefix = e.transf();
    for (auto tau : transpositions(g)) {
      auto fs = lemma3_rewrite(prefix, tau, f);
      out.factors.insert(out.factors.end(), fs.cbegin(), fs.cend());
      prefix = prefix * tau.as_permutation(e.degree());
    }
    return out;
  }

  //! Returns (e, factors) with e * (product of factors) = a, where (e, g) is
  //! eg_decompose(a) and every factor lies in C_f.
  inline SeededConjugates corollary3_factor(Transformation const& a,
                                            Idempotent const&     f) {
    if (a.is_permutation()) {
      detail::fail("input must be singular");
    }
    detail::check_same_degree(a.degree(), f.degree());
    if (f.rank() != a.rank()) {
      detail::fail("rank mismatch: base has rank " + std::to_string(f.rank())
                   + ", input has rank " + std::to_string(a.rank()));
    }
    auto [e, g] = eg_decompose(a);
    return corollary3_factor(e, g, f);
  }

  //! Factors h * e * g into conjugates of e via h * e * g = (h * e)(e * g).
  //! The first part is e' = e^(h^-1) followed by the C_e' factors of
  //! e' * h; those are rebased to e by composing conjugators. When h is the
  //! identity the first part is omitted since h * e * e = e * e = e.
  inline std::vector<ConjugateFactor>
  corollary4_segment_factor(Permutation const& h,
                            Idempotent const&  e,
                            Permutation const& g) {
    detail::check_same_degree(h.degree(), e.degree());
    detail::check_same_degree(g.degree(), e.degree());
    if (e.rank() == e.degree()) {
      detail::fail("the idempotent must be singular");
    }
    std::vector<ConjugateFactor> out;
    if (!h.is_identity()) {
      auto const h_inv = h.inverse();
      Idempotent e_prime(conjugate(e, h_inv));
      out.push_back(ConjugateFactor::make(e, h_inv));
      for (auto const& cf : corollary3_factor(e_prime, h, e_prime).factors) {
        out.push_back(ConjugateFactor::make(e, h_inv * cf.conjugator));
      }
    }
    out.push_back(ConjugateFactor::make(e, Permutation::identity(e.degree())));
    for (auto const& cf : corollary3_factor(e, g, e).factors) {
      out.push_back(cf);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorizations over C_a
  ////////////////////////////////////////////////////////////////////////

  struct LeadingIdempotent {
    std::vector<ConjugateFactor> factors;
    Idempotent                   idempotent;
  };

  //! With (e, g) = eg_decompose(a) and m the order of g, returns the factors
  //! a^(g^0), a^(g^1), ..., a^(g^(m-1)) whose product is e.
  inline LeadingIdempotent theorem5_leading_idempotent(Transformation const& a) {
    if (a.is_permutation()) {
      detail::fail("input must be singular");
    }
    auto [e, g]  = eg_decompose(a);
    auto const m = g.order();
    LeadingIdempotent out{{}, e};
    Permutation       gj = Permutation::identity(a.degree());
    for (std::size_t j = 0; j < m; ++j) {
      out.factors.push_back(ConjugateFactor::make(a, gj));
      gj = gj * g;
    }
    return out;
  }

  //! Checks (a * g^-1)^j = a * a^g * ... * a^(g^(j-1)) * g^-j.
  inline bool power_identity_check(Transformation const& a,
                                   Permutation const&    g,
                                   std::size_t           j) {
    detail::check_same_degree(a.degree(), g.degree());
    if (j == 0) {
      detail::fail("the exponent must be positive");
    }
    auto const     ag_inv = a * g.inverse();
    Transformation lhs    = ag_inv;
    for (std::size_t i = 1; i < j; ++i) {
      lhs = lhs * ag_inv;
    }
    Transformation rhs = a;
    Permutation    gi  = g;
    for (std::size_t i = 1; i < j; ++i) {
      rhs = rhs * conjugate(a, gi);
      gi  = gi * g;
    }
    rhs = rhs * g.pow(-static_cast<long long>(j));
    return lhs == rhs;
  }

  //! g0 * t * g1 * t * ... * t * gr for a fixed t and r >= 1.
  class Word {
   public:
    Word(Transformation base, std::vector<Permutation> perms)
        : _base(std::move(base)), _perms(std::move(perms)) {
      if (_perms.size() < 2) {
        detail::fail("a word needs at least one occurrence of its base");
      }
      for (auto const& g : _perms) {
        detail::check_same_degree(g.degree(), _base.degree());
      }
    }

    [[nodiscard]] Transformation const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] std::vector<Permutation> const& perms() const noexcept {
      return _perms;
    }

    [[nodiscard]] std::size_t occurrences() const noexcept {
      return _perms.size() - 1;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _base.degree();
    }

    [[nodiscard]] Transformation value() const {
      Transformation v = _perms.front().transf();
      for (std::size_t i = 1; i < _perms.size(); ++i) {
        v = v * _base * _perms[i];
      }
      return v;
    }

    friend bool operator==(Word const&, Word const&) = default;

   private:
    Transformation           _base;
    std::vector<Permutation> _perms;
  };

  //! Factors the value of \p w into conjugates of its base a.
  //!
  //! Writing a = e * ga, the word becomes a product of segments h * e * g:
  //! the permutation before each occurrence (times ga for all but the first)
  //! is that segment's h, the last segment's g is ga times the trailing
  //! permutation, and every other g is the identity. Each segment is factored
  //! over C_e by corollary4_segment_factor and every e^c is then expanded as
  //! (a^(ga^0))^c ... (a^(ga^(m-1)))^c.
  inline std::vector<ConjugateFactor>
  factor_word_into_conjugates(Word const& w) {
    auto const& a = w.base();
    if (a.is_permutation()) {
      detail::fail("the base must be singular");
    }
    auto const n         = a.degree();
    auto [e, ga]         = eg_decompose(a);
    auto const m         = ga.order();
    auto const& perms    = w.perms();
    auto const  segments = w.occurrences();

    std::vector<Permutation> ga_powers;
    Permutation              gj = Permutation::identity(n);
    for (std::size_t j = 0; j < m; ++j) {
      ga_powers.push_back(gj);
      gj = gj * ga;
    }

    std::vector<ConjugateFactor> out;
    for (std::size_t i = 0; i < segments; ++i) {
      Permutation h = i == 0 ? perms[0] : ga * perms[i];
      Permutation g
          = i + 1 == segments ? ga * perms.back() : Permutation::identity(n);
      for (auto const& cf : corollary4_segment_factor(h, e, g)) {
        for (auto const& p : ga_powers) {
          out.push_back(ConjugateFactor::make(a, p * cf.conjugator));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // As Factorization records
  ////////////////////////////////////////////////////////////////////////

  //! \p input is the expected product; \p seed, if any, is prepended as a
  //! SEED_IDEMPOTENT factor.
  inline Factorization
  to_factorization(Transformation const&               input,
                   Transformation const&               base,
                   std::vector<ConjugateFactor> const& fs,
                   Idempotent const*                   seed = nullptr) {
    Factorization out{input, {}, base.rank(), base};
    if (seed != nullptr) {
      out.factors.push_back({seed->transf(), FactorKind::seed_idempotent});
    }
    for (auto const& cf : fs) {
      out.factors.push_back({cf.value, FactorKind::conjugate, cf.conjugator});
    }
    return out;
  }

}  // namespace epigen

#endif  // EPIGEN_CONJUGACY_HPP_
