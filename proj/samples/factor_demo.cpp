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

// Factors every singular transformation of degree 3 into idempotents and
// prints the factor counts.

#include <iostream>  // for cout

#include "epigen/epigen.hpp"

int main() {
  using namespace epigen;
  for (auto const& a : singular_transformations(3)) {
    auto const f = factor_idempotents(a);
    std::cout << to_string(a) << "  ->";
    for (auto const& r : f.factors) {
      std::cout << "  [" << to_string(r.value) << "]";
    }
    std::cout << (verify_factorization(f) ? "  ok" : "  FAILED") << '\n';
  }
}
