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

// Umbrella header.

#ifndef EPIGEN_EPIGEN_HPP_
#define EPIGEN_EPIGEN_HPP_

#include "conjugacy.hpp"  // IWYU pragma: export
#include "factor.hpp"     // IWYU pragma: export
#include "oracle.hpp"     // IWYU pragma: export
#include "serialize.hpp"  // IWYU pragma: export
#include "text.hpp"       // IWYU pragma: export
#include "transf.hpp"     // IWYU pragma: export

#endif  // EPIGEN_EPIGEN_HPP_
