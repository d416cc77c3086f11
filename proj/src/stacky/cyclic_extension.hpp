#pragma once

#include "fga/homomorphism.hpp"

#include <string>
#include <utility>
#include <vector>

// Shared construction behind both Picard stages: extend a base group by one
// new generator per cyclic datum (n_i, t_i), modulo n_i * e_i = t_i. The new
// generators come first, the base generators after them.

namespace stacky::detail {

struct CyclicExtension {
    fga::PresentedGroup group;
    fga::Homomorphism pullback;  // base -> group
    std::vector<fga::GroupElement> new_generators;
    fga::PresentedGroup residue_group;  // prod Z/n_i
    fga::Homomorphism residue_map;      // group -> residue_group
};

/// Relation rows of (Z^r + base) / <(n_i e_i, -t_i)>; targets are base
/// coordinate vectors.
fga::IntegerMatrix extension_relations(const fga::PresentedGroup& base,
                                       const std::vector<fga::Int>& orders,
                                       const std::vector<std::vector<fga::Int>>& targets);

/// Group-only fast path (used by the extension enumerator's inner loop).
fga::PresentedGroup extend_group_only(const fga::PresentedGroup& base,
                                      const std::vector<fga::Int>& orders,
                                      const std::vector<std::vector<fga::Int>>& targets);

CyclicExtension extend_by_cyclic_lifts(const fga::PresentedGroup& base,
                                       const std::vector<fga::Int>& orders,
                                       const std::vector<std::vector<fga::Int>>& targets,
                                       const std::vector<std::string>& new_labels);

/// The four exactness checks for 0 -> base -> group -> residues -> 0,
/// with report nodes named after the supplied map/group names.
std::vector<std::pair<std::string, bool>> sequence_checks(const CyclicExtension& ext,
                                                          const std::string& base_name,
                                                          const std::string& group_name,
                                                          const std::string& right_name,
                                                          const std::string& pullback_name,
                                                          const std::string& residue_name);

}  // namespace stacky::detail
