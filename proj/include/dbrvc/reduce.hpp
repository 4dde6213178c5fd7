// Copyright 2026 The dbrvc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dbrvc/decompose.hpp"

namespace dbrvc {

struct ReductionOutcome {
    Subproblem reduced;
    std::size_t removed_vertices = 0;
    std::size_t cover_contribution = 0;  ///< vertices newly committed
};

/// Degree-0 removal, pendant (degree-1) rule and the triangle rule, applied
/// in that priority until none fires.
///
/// The triangle rule fires on a triangle {a, b, c} where a and b have degree
/// two: c and a are committed and all three removed. Committing c (which
/// dominates a) rather than two arbitrary triangle vertices keeps the rule
/// size-preserving when c has neighbours outside the triangle.
ReductionOutcome reduce_neighbor(const Subproblem& s);

/// Dominance rule: while an edge (u, v) has N[u] ⊆ N[v], commit v.
ReductionOutcome reduce_dominance(const Subproblem& s);

using ReductionFn = std::function<ReductionOutcome(const Subproblem&)>;

/// Name -> reduction lookup. Built-ins are "neighbor" and "dominance";
/// further rules (persistency analysis, folding, ...) can be registered.
class ReductionRegistry {
 public:
    static ReductionRegistry with_builtins();
    static const ReductionRegistry& builtin();

    void add(std::string name, ReductionFn fn);
    const ReductionFn& find(std::string_view name) const;
    bool contains(std::string_view name) const;
    std::vector<std::string> names() const;

 private:
    std::map<std::string, ReductionFn, std::less<>> rules_;
};

/// Applies the named reductions in order, cycling until a full cycle changes
/// nothing. Unknown names raise ConfigError.
ReductionOutcome reduce_chain(const Subproblem& s, const std::vector<std::string>& enabled,
                              const ReductionRegistry& registry = ReductionRegistry::builtin());

/// CLI vocabulary: none | neighbor | dominance | all, or a comma list.
std::vector<std::string> parse_reduction_list(std::string_view spec);

}  // namespace dbrvc
