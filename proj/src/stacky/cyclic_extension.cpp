#include "stacky/cyclic_extension.hpp"

namespace stacky::detail {

using fga::GroupElement;
using fga::Homomorphism;
using fga::Int;
using fga::IntegerMatrix;
using fga::PresentedGroup;

IntegerMatrix extension_relations(const PresentedGroup& base, const std::vector<Int>& orders,
                                  const std::vector<std::vector<Int>>& targets) {
    const std::size_t r = orders.size();
    const std::size_t k = base.generator_count();
    IntegerMatrix rel(0, r + k);
    const IntegerMatrix& brel = base.relations();
    for (std::size_t i = 0; i < brel.rows(); ++i) {
        std::vector<Int> row(r + k);
        for (std::size_t j = 0; j < k; ++j) row[r + j] = brel.at(i, j);
        rel.append_row(row);
    }
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Int> row(r + k);
        row[i] = orders[i];
        for (std::size_t j = 0; j < k; ++j) row[r + j] = -targets[i][j];
        rel.append_row(row);
    }
    return rel;
}

PresentedGroup extend_group_only(const PresentedGroup& base, const std::vector<Int>& orders,
                                 const std::vector<std::vector<Int>>& targets) {
    return PresentedGroup(orders.size() + base.generator_count(),
                          extension_relations(base, orders, targets));
}

CyclicExtension extend_by_cyclic_lifts(const PresentedGroup& base, const std::vector<Int>& orders,
                                       const std::vector<std::vector<Int>>& targets,
                                       const std::vector<std::string>& new_labels) {
    const std::size_t r = orders.size();
    const std::size_t k = base.generator_count();

    std::vector<std::string> labels = new_labels;
    for (std::size_t j = 0; j < k; ++j) {
        if (j < base.labels().size())
            labels.push_back(base.labels()[j]);
        else
            labels.push_back("g" + std::to_string(j + 1));
    }

    PresentedGroup group(r + k, extension_relations(base, orders, targets), std::move(labels));

    IntegerMatrix pull(k, r + k);
    for (std::size_t j = 0; j < k; ++j) pull.at(j, r + j) = 1;
    Homomorphism pullback(base, group, std::move(pull));

    std::vector<GroupElement> new_gens;
    new_gens.reserve(r);
    for (std::size_t i = 0; i < r; ++i) new_gens.push_back(group.generator(i));

    PresentedGroup residues = PresentedGroup::cyclic_product(orders);
    IntegerMatrix res(r + k, r);
    for (std::size_t i = 0; i < r; ++i) res.at(i, i) = 1;  // base generators map to zero
    Homomorphism residue_map(group, residues, std::move(res));

    return {std::move(group), std::move(pullback), std::move(new_gens), std::move(residues),
            std::move(residue_map)};
}

std::vector<std::pair<std::string, bool>> sequence_checks(const CyclicExtension& ext,
                                                          const std::string& base_name,
                                                          const std::string& group_name,
                                                          const std::string& right_name,
                                                          const std::string& pullback_name,
                                                          const std::string& residue_name) {
    std::vector<std::pair<std::string, bool>> checks;
    checks.emplace_back(pullback_name + " injective (exact at " + base_name + ")",
                        fga::is_injective(ext.pullback));
    checks.emplace_back("image(" + pullback_name + ") = kernel(" + residue_name + ") (exact at " +
                            group_name + ")",
                        fga::is_exact_at(ext.pullback, ext.residue_map));
    checks.emplace_back(residue_name + " surjective (exact at " + right_name + ")",
                        fga::is_surjective(ext.residue_map));
    bool composite_zero = true;
    for (std::size_t i = 0; i < ext.pullback.source().generator_count(); ++i)
        if (!ext.residue_map.apply(ext.pullback.apply_generator(i)).is_zero())
            composite_zero = false;
    checks.emplace_back(residue_name + " o " + pullback_name + " = 0", composite_zero);
    return checks;
}

}  // namespace stacky::detail
