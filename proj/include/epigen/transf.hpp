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

// This file contains the value types for transformations of the set
// {0, ..., n - 1}: Transformation, Permutation, KernelPartition, Idempotent
// and IdempotentPattern.
//
// All points are 0-based inside the library. The text forms in text.hpp are
// 1-based.
//
// Products are read left to right: (a * b)[x] = b[a[x]], i.e. maps act on the
// right of their arguments.

#ifndef EPIGEN_TRANSF_HPP_
#define EPIGEN_TRANSF_HPP_

#include <algorithm>   // for sort, unique, all_of
#include <compare>     // for strong_ordering
#include <cstddef>     // for size_t
#include <cstdint>     // for uint32_t
#include <functional>  // for hash
#include <numeric>     // for lcm, iota
#include <stdexcept>   // for runtime_error
#include <string>      // for string, to_string
#include <utility>     // for move, pair
#include <vector>      // for vector

namespace epigen {

  //! The type of points in the domain of a transformation.
  using point_type = std::uint32_t;

  //! Thrown when an argument violates the precondition of an operation.
  class EpigenException : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when an exhaustive search proves that an element does not lie in
  //! a generated set. Distinct from invalid input.
  class NotAMember : public EpigenException {
   public:
    using EpigenException::EpigenException;
  };

  //! Thrown when a constructed factorization fails its own re-verification.
  class SelfCheckFailure : public EpigenException {
   public:
    using EpigenException::EpigenException;
  };

  namespace detail {
    [[noreturn]] inline void fail(std::string const& msg) {
      throw EpigenException(msg);
    }

    inline void check_same_degree(std::size_t m, std::size_t n) {
      if (m != n) {
        fail("degree mismatch: " + std::to_string(m) + " vs "
             + std::to_string(n));
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  //! A total map from {0, ..., n - 1} to itself, stored as its image list.
  class Transformation {
   public:
    explicit Transformation(std::vector<point_type> images)
        : _images(std::move(images)) {
      if (_images.empty()) {
        detail::fail("a transformation must have degree at least 1");
      }
      for (auto y : _images) {
        if (y >= _images.size()) {
          detail::fail("image point " + std::to_string(y + 1)
                       + " out of range for degree "
                       + std::to_string(_images.size()));
        }
      }
    }

    static Transformation identity(std::size_t n) {
      std::vector<point_type> img(n);
      std::iota(img.begin(), img.end(), 0);
      return Transformation(std::move(img));
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _images.size();
    }

    point_type operator[](std::size_t x) const noexcept {
      return _images[x];
    }

    [[nodiscard]] point_type at(std::size_t x) const {
      if (x >= _images.size()) {
        detail::fail("point " + std::to_string(x + 1) + " out of range");
      }
      return _images[x];
    }

    [[nodiscard]] std::vector<point_type> const& images() const noexcept {
      return _images;
    }

    //! The image of the transformation as a sorted list of distinct points.
    [[nodiscard]] std::vector<point_type> image_set() const {
      std::vector<bool> seen(degree(), false);
      for (auto y : _images) {
        seen[y] = true;
      }
      std::vector<point_type> out;
      for (point_type y = 0; y < degree(); ++y) {
        if (seen[y]) {
          out.push_back(y);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t rank() const {
      std::vector<bool> seen(degree(), false);
      std::size_t       r = 0;
      for (auto y : _images) {
        if (!seen[y]) {
          seen[y] = true;
          ++r;
        }
      }
      return r;
    }

    //! Idempotent iff every image point is fixed.
    [[nodiscard]] bool is_idempotent() const noexcept {
      return std::all_of(_images.cbegin(), _images.cend(), [this](auto y) {
        return _images[y] == y;
      });
    }

    [[nodiscard]] bool is_permutation() const {
      return rank() == degree();
    }

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t x = 0; x < degree(); ++x) {
        if (_images[x] != x) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<point_type> _images;
  };

  //! Left-to-right product: apply \p a first, then \p b.
  inline Transformation compose(Transformation const& a,
                                Transformation const& b) {
    detail::check_same_degree(a.degree(), b.degree());
    std::vector<point_type> img(a.degree());
    for (std::size_t x = 0; x < a.degree(); ++x) {
      img[x] = b[a[x]];
    }
    return Transformation(std::move(img));
  }

  inline Transformation operator*(Transformation const& a,
                                  Transformation const& b) {
    return compose(a, b);
  }

  //! Returns the image of \p t and its size.
  inline std::pair<std::vector<point_type>, std::size_t>
  image_and_rank(Transformation const& t) {
    auto img = t.image_set();
    auto r   = img.size();
    return {std::move(img), r};
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  //! A bijective transformation.
  class Permutation {
   public:
    explicit Permutation(Transformation t) : _t(std::move(t)) {
      if (!_t.is_permutation()) {
        detail::fail("not a permutation");
      }
    }

    explicit Permutation(std::vector<point_type> images)
        : Permutation(Transformation(std::move(images))) {}

    static Permutation identity(std::size_t n) {
      return Permutation(Transformation::identity(n));
    }

    //! The transposition swapping \p x and \p y; \p x and \p y must differ.
    static Permutation transposition(std::size_t n, point_type x, point_type y) {
      if (x == y) {
        detail::fail("a transposition needs two distinct points");
      }
      if (x >= n || y >= n) {
        detail::fail("transposition point out of range");
      }
      auto img = Transformation::identity(n).images();
      std::swap(img[x], img[y]);
      return Permutation(std::move(img));
    }

    //! Builds a permutation from disjoint cycles; fixed points may be
    //! omitted. Throws if a point repeats or is out of range.
    static Permutation
    from_cycles(std::size_t n, std::vector<std::vector<point_type>> const& cs) {
      if (n == 0) {
        detail::fail("a permutation must have degree at least 1");
      }
      std::vector<point_type> img(n);
      std::iota(img.begin(), img.end(), 0);
      std::vector<bool> used(n, false);
      for (auto const& c : cs) {
        for (std::size_t i = 0; i < c.size(); ++i) {
          auto x = c[i];
          if (x >= n) {
            detail::fail("cycle point " + std::to_string(x + 1)
                         + " out of range");
          }
          if (used[x]) {
            detail::fail("cycle point " + std::to_string(x + 1)
                         + " repeated");
          }
          used[x] = true;
          img[x]  = c[(i + 1) % c.size()];
        }
      }
      return Permutation(std::move(img));
    }

    [[nodiscard]] Transformation const& transf() const noexcept {
      return _t;
    }

    // NOLINTNEXTLINE(google-explicit-constructor)
    operator Transformation const&() const noexcept {
      return _t;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _t.degree();
    }

    point_type operator[](std::size_t x) const noexcept {
      return _t[x];
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _t.is_identity();
    }

    [[nodiscard]] Permutation inverse() const {
      std::vector<point_type> img(degree());
      for (point_type x = 0; x < degree(); ++x) {
        img[_t[x]] = x;
      }
      return Permutation(std::move(img));
    }

    //! Disjoint cycles, each starting at its least point, ordered by that
    //! point. Fixed points are included only if \p with_fixed is true.
    [[nodiscard]] std::vector<std::vector<point_type>>
    cycles(bool with_fixed = false) const {
      std::vector<std::vector<point_type>> out;
      std::vector<bool>                    seen(degree(), false);
      for (point_type x = 0; x < degree(); ++x) {
        if (seen[x]) {
          continue;
        }
        std::vector<point_type> c;
        for (point_type y = x; !seen[y]; y = _t[y]) {
          seen[y] = true;
          c.push_back(y);
        }
        if (c.size() > 1 || with_fixed) {
          out.push_back(std::move(c));
        }
      }
      return out;
    }

    //! Least m >= 1 with g^m = 1, computed as the lcm of the cycle lengths.
    [[nodiscard]] std::size_t order() const {
      std::size_t m = 1;
      for (auto const& c : cycles()) {
        m = std::lcm(m, c.size());
      }
      return m;
    }

    [[nodiscard]] Permutation pow(long long e) const;

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    Transformation _t;
  };

  inline Permutation operator*(Permutation const& g, Permutation const& h) {
    return Permutation(compose(g.transf(), h.transf()));
  }

  inline Permutation Permutation::pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    // unsigned negation avoids overflow on LLONG_MIN
    auto        k    = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                             : static_cast<unsigned long long>(e);
    k %= order();
    Permutation result = identity(degree());
    while (k > 0) {
      if (k & 1ULL) {
        result = result * base;
      }
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  //! The conjugate t^g = g^-1 * t * g. This is a right action:
  //! t^(g * h) = (t^g)^h.
  inline Transformation conjugate(Transformation const& t, Permutation const& g) {
    detail::check_same_degree(t.degree(), g.degree());
    std::vector<point_type> img(t.degree());
    for (point_type x = 0; x < t.degree(); ++x) {
      img[g[x]] = g[t[x]];
    }
    return Transformation(std::move(img));
  }

  //! Returns the inverse of \p g and its order.
  inline std::pair<Permutation, std::size_t>
  perm_inverse_and_order(Permutation const& g) {
    return {g.inverse(), g.order()};
  }

  ////////////////////////////////////////////////////////////////////////
  // KernelPartition
  ////////////////////////////////////////////////////////////////////////

  //! A partition of {0, ..., n - 1}. Each class is sorted and the classes are
  //! ordered by their least element.
  class KernelPartition {
   public:
    KernelPartition(std::size_t n, std::vector<std::vector<point_type>> classes)
        : _n(n), _classes(std::move(classes)), _class_of(n, 0) {
      std::vector<bool> seen(n, false);
      for (auto& c : _classes) {
        if (c.empty()) {
          detail::fail("a partition class must be nonempty");
        }
        std::sort(c.begin(), c.end());
        for (auto x : c) {
          if (x >= n || seen[x]) {
            detail::fail("partition classes must be disjoint subsets of [n]");
          }
          seen[x] = true;
        }
      }
      if (std::find(seen.cbegin(), seen.cend(), false) != seen.cend()) {
        detail::fail("partition classes must cover [n]");
      }
      std::sort(_classes.begin(), _classes.end());
      for (std::size_t i = 0; i < _classes.size(); ++i) {
        for (auto x : _classes[i]) {
          _class_of[x] = i;
        }
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _classes.size();
    }

    [[nodiscard]] std::vector<std::vector<point_type>> const&
    classes() const noexcept {
      return _classes;
    }

    //! Index into classes() of the class containing \p x.
    [[nodiscard]] std::size_t class_of(point_type x) const {
      return _class_of.at(x);
    }

    friend bool operator==(KernelPartition const& p, KernelPartition const& q) {
      return p._n == q._n && p._classes == q._classes;
    }

   private:
    std::size_t                          _n;
    std::vector<std::vector<point_type>> _classes;
    std::vector<std::size_t>             _class_of;
  };

  //! The fibers of \p t.
  inline KernelPartition kernel(Transformation const& t) {
    std::vector<std::vector<point_type>> fibers(t.degree());
    for (point_type x = 0; x < t.degree(); ++x) {
      fibers[t[x]].push_back(x);
    }
    std::erase_if(fibers, [](auto const& c) { return c.empty(); });
    return KernelPartition(t.degree(), std::move(fibers));
  }

  //! Sorted multiset of kernel class sizes; invariant under conjugation.
  inline std::vector<std::size_t> kernel_class_sizes(Transformation const& t) {
    std::vector<std::size_t> sizes(t.degree(), 0);
    for (auto y : t.images()) {
      ++sizes[y];
    }
    std::erase(sizes, 0);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotent
  ////////////////////////////////////////////////////////////////////////

  //! A transformation e with e * e = e, equivalently the map induced by a
  //! partition P together with a cross-section C of P: every class of P is
  //! sent to its point in C.
  class Idempotent {
   public:
    explicit Idempotent(Transformation t) : _t(std::move(t)) {
      if (!_t.is_idempotent()) {
        detail::fail("not an idempotent");
      }
    }

    //! \p cross_section[i] must lie in partition.classes()[i].
    Idempotent(KernelPartition const&         partition,
               std::vector<point_type> const& cross_section)
        : _t(from_partition(partition, cross_section)) {}

    [[nodiscard]] Transformation const& transf() const noexcept {
      return _t;
    }

    // NOLINTNEXTLINE(google-explicit-constructor)
    operator Transformation const&() const noexcept {
      return _t;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _t.degree();
    }

    [[nodiscard]] std::size_t rank() const {
      return _t.rank();
    }

    point_type operator[](std::size_t x) const noexcept {
      return _t[x];
    }

    [[nodiscard]] KernelPartition partition() const {
      return kernel(_t);
    }

    //! The representative of each class of partition(), in class order.
    [[nodiscard]] std::vector<point_type> cross_section() const {
      std::vector<point_type> out;
      auto const p = partition();
      for (auto const& c : p.classes()) {
        out.push_back(_t[c.front()]);
      }
      return out;
    }

    friend bool operator==(Idempotent const&, Idempotent const&) = default;
    friend auto operator<=>(Idempotent const&, Idempotent const&) = default;

   private:
    static Transformation from_partition(KernelPartition const&         p,
                                         std::vector<point_type> const& cs) {
      if (cs.size() != p.size()) {
        detail::fail("cross-section must pick one point per class");
      }
      std::vector<point_type> img(p.degree());
      for (std::size_t i = 0; i < p.size(); ++i) {
        auto const& c = p.classes()[i];
        if (!std::binary_search(c.cbegin(), c.cend(), cs[i])) {
          detail::fail("cross-section point " + std::to_string(cs[i] + 1)
                       + " is not in its class");
        }
        for (auto x : c) {
          img[x] = cs[i];
        }
      }
      return Transformation(std::move(img));
    }

    Transformation _t;
  };

  ////////////////////////////////////////////////////////////////////////
  // IdempotentPattern
  ////////////////////////////////////////////////////////////////////////

  //! A set of idempotents described by required image points and required
  //! class members: the entry {rep, extras} asks that rep is an image point
  //! and that every point of extras lies in the class of rep. An idempotent
  //! matches when its image is exactly the set of reps and all the class
  //! requirements hold. Points not mentioned anywhere are unconstrained.
  class IdempotentPattern {
   public:
    struct Entry {
      point_type              rep;
      std::vector<point_type> extras;

      friend bool operator==(Entry const&, Entry const&) = default;
    };

    IdempotentPattern(std::size_t n, std::vector<Entry> entries)
        : _n(n), _entries(std::move(entries)) {
      if (_entries.empty()) {
        detail::fail("a pattern needs at least one entry");
      }
      if (_entries.size() > n) {
        detail::fail("a pattern has at most n entries");
      }
      std::vector<bool> seen(n, false);
      auto              mention = [&](point_type x) {
        if (x >= n) {
          detail::fail("pattern point " + std::to_string(x + 1)
                       + " out of range");
        }
        if (seen[x]) {
          detail::fail("pattern point " + std::to_string(x + 1)
                       + " mentioned twice");
        }
        seen[x] = true;
      };
      for (auto& e : _entries) {
        mention(e.rep);
        std::sort(e.extras.begin(), e.extras.end());
        for (auto x : e.extras) {
          mention(x);
        }
      }
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return _n;
    }

    [[nodiscard]] std::size_t rank() const noexcept {
      return _entries.size();
    }

    [[nodiscard]] std::vector<Entry> const& entries() const noexcept {
      return _entries;
    }

    [[nodiscard]] bool matches(Transformation const& t) const {
      if (t.degree() != _n || !t.is_idempotent()) {
        return false;
      }
      std::vector<point_type> reps;
      for (auto const& e : _entries) {
        reps.push_back(e.rep);
        for (auto x : e.extras) {
          if (t[x] != e.rep) {
            return false;
          }
        }
      }
      std::sort(reps.begin(), reps.end());
      return reps == t.image_set();
    }

    //! The canonical member: mentioned points join their entry's class and
    //! every unmentioned point joins the class of the least representative.
    [[nodiscard]] Idempotent canonical() const {
      point_type least = _entries.front().rep;
      for (auto const& e : _entries) {
        least = std::min(least, e.rep);
      }
      std::vector<point_type> img(_n, least);
      for (auto const& e : _entries) {
        img[e.rep] = e.rep;
        for (auto x : e.extras) {
          img[x] = e.rep;
        }
      }
      return Idempotent(Transformation(std::move(img)));
    }

    friend bool operator==(IdempotentPattern const&, IdempotentPattern const&)
        = default;

   private:
    std::size_t        _n;
    std::vector<Entry> _entries;
  };

  inline Idempotent idempotent_from_pattern(IdempotentPattern const& p) {
    return p.canonical();
  }

}  // namespace epigen

template <>
struct std::hash<epigen::Transformation> {
  std::size_t operator()(epigen::Transformation const& t) const noexcept {
    // FNV-1a over the image list
    std::size_t h = 14695981039346656037ULL;
    for (auto y : t.images()) {
      h ^= y;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

#endif  // EPIGEN_TRANSF_HPP_
