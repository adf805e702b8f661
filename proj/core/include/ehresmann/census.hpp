/*
 *   Copyright 2026 The ehresmann-lab developers
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "ehresmann/boolean_monoid.hpp"
#include "ehresmann/common.hpp"

namespace ehresmann {

/// All Boolean Ehresmann monoids with a fixed number of atoms, one per
/// isomorphism class. The enumeration backtracks over identity atoms,
/// supports of the remaining atoms and atom products, prunes with necessary
/// conditions derived from the axioms, and keeps exactly the candidates that
/// pass the full checkers. Practical up to 4 atoms.
std::vector<BooleanEhresmannMonoid> enumerate_boolean_monoids(int atom_count);

}  // namespace ehresmann
