#include "stacky/gerbe_picard.hpp"

#include "stacky/cyclic_extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace stacky {

using fga::GroupElement;
using fga::Homomorphism;
using fga::Int;
using fga::IntegerMatrix;
using fga::PresentedGroup;

PresentedGroup character_group(const BandData& band) {
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < band.ab_invariants.size(); ++j) {
        if (band.ab_invariants[j] < 2)
            throw std::invalid_argument("band invariant " + std::to_string(j + 1) +
                                        " must be >= 2");
        labels.push_back("chi" + std::to_string(j + 1));
    }
    return PresentedGroup::cyclic_product(band.ab_invariants, std::move(labels));
}

fga::SubgroupPair obstruction_kernel(const ObstructionData& obs) {
    if (!obs.map.target().same_presentation(obs.h2_group))
        throw fga::GroupMismatchError("obstruction map does not land in the supplied H^2 group");
    return fga::kernel(obs.map);
}

GerbePicard build_pic_gerbe(const PresentedGroup& pic_y,
                            const std::vector<LiftRelation>& kernel_gens) {
    std::vector<Int> orders;
    std::vector<std::vector<Int>> targets;
    std::vector<std::string> labels;
    for (std::size_t j = 0; j < kernel_gens.size(); ++j) {
        const LiftRelation& rel = kernel_gens[j];
        if (rel.character_order < 1)
            throw std::invalid_argument("lift relation " + std::to_string(j + 1) +
                                        " has order < 1");
        if (!rel.target.group().same_presentation(pic_y))
            throw fga::GroupMismatchError("lift target " + std::to_string(j + 1) +
                                          " is not an element of Pic(Y)");
        orders.push_back(rel.character_order);
        targets.push_back(rel.target.coeffs());
        labels.push_back("lift" + std::to_string(j + 1));
    }
    // Keep auto lift labels clear of the base group's labels.
    for (auto& label : labels)
        while (std::find(pic_y.labels().begin(), pic_y.labels().end(), label) !=
               pic_y.labels().end())
            label += "_";

    detail::CyclicExtension ext = detail::extend_by_cyclic_lifts(pic_y, orders, targets, labels);

    GerbePicard out{std::move(ext.group),
                    std::move(ext.pullback),
                    std::move(ext.new_generators),
                    std::move(ext.residue_group),
                    std::move(ext.residue_map),
                    {}};

    detail::CyclicExtension view{out.pic, out.pullback, out.lifts, out.kernel_group, out.chi};
    for (auto& [node, pass] : detail::sequence_checks(view, "Pic(Y)", "Pic(X)", "character kernel", "p*", "chi"))
        out.verification.checks.push_back({node, pass});

    bool lift_relations_hold = true;
    for (std::size_t j = 0; j < kernel_gens.size(); ++j) {
        GroupElement lhs = kernel_gens[j].character_order * out.lifts[j];
        GroupElement rhs = out.pullback.apply(kernel_gens[j].target);
        if (!fga::element_eq(lhs, rhs)) lift_relations_hold = false;
    }
    out.verification.checks.push_back(
        {"m_j * lift_j = p*(t_j) for every lift relation", lift_relations_hold});

    return out;
}

FullPicard compose_full(const CoarsePicard& coarse, const std::vector<StackyPointSpec>& points,
                        const GerbeLayer& gerbe) {
    RigidifiedPicard stage_one = build_pic_rigidified(coarse, points);

    PresentedGroup characters = character_group(gerbe.band);

    std::vector<CheckResult> claim_checks;
    std::vector<Int> claimed;
    if (gerbe.kernel_orders) claimed = *gerbe.kernel_orders;

    if (gerbe.obstruction) {
        if (!gerbe.obstruction->map.source().same_presentation(characters))
            throw fga::GroupMismatchError(
                "obstruction map source does not match the band's character group");
        fga::SubgroupPair k = obstruction_kernel(*gerbe.obstruction);
        const fga::InvariantFactorDecomposition& kd = fga::decompose(k.group);
        if (gerbe.kernel_orders) {
            claim_checks.push_back(
                {"claimed kernel orders present the obstruction kernel",
                 fga::decompose(PresentedGroup::cyclic_product(claimed)) == kd});
        } else {
            claimed = kd.torsion;  // kernel of a finite group map is finite
        }
    } else if (!gerbe.kernel_orders) {
        throw std::invalid_argument(
            "gerbe layer needs either claimed kernel orders or an obstruction map");
    }

    if (gerbe.lifts.size() != claimed.size())
        throw std::invalid_argument("expected one lift relation per kernel generator (" +
                                    std::to_string(claimed.size()) + " needed, " +
                                    std::to_string(gerbe.lifts.size()) + " given)");
    bool orders_match = true;
    for (std::size_t j = 0; j < claimed.size(); ++j)
        if (gerbe.lifts[j].character_order != claimed[j]) orders_match = false;
    if (!claimed.empty())
        claim_checks.push_back({"lift orders match the kernel orders", orders_match});

    GerbePicard stage_two = build_pic_gerbe(stage_one.pic, gerbe.lifts);
    stage_two.verification.checks.insert(stage_two.verification.checks.begin(),
                                         claim_checks.begin(), claim_checks.end());
    return {std::move(stage_one), std::move(stage_two)};
}

namespace {

// Representatives of pic_y / m * pic_y, one per coset, in the deterministic
// element order of the cokernel presentation.
std::vector<std::vector<Int>> coset_representatives(const PresentedGroup& pic_y, const Int& m) {
    IntegerMatrix mult(pic_y.generator_count(), pic_y.generator_count());
    for (std::size_t i = 0; i < pic_y.generator_count(); ++i) mult.at(i, i) = m;
    Homomorphism by_m(pic_y, pic_y, std::move(mult));
    PresentedGroup quotient = fga::cokernel(by_m).group;
    std::vector<std::vector<Int>> reps;
    for (const GroupElement& e : quotient.elements()) reps.push_back(e.coeffs());
    return reps;
}

bool tuple_less(const std::vector<std::vector<Int>>& a, const std::vector<std::vector<Int>>& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != b[j])
            return std::lexicographical_compare(a[j].begin(), a[j].end(), b[j].begin(),
                                                b[j].end());
    }
    return false;
}

std::vector<ExtensionType> enumerate_impl(const PresentedGroup& pic_y,
                                          const std::vector<Int>& kernel_orders, bool parallel) {
    std::optional<Int> base_order = pic_y.order();
    Int bound = base_order.value_or(Int(-1));
    for (const Int& m : kernel_orders) {
        if (m < 1) throw std::invalid_argument("kernel order < 1 in enumeration");
        if (bound >= 0) bound *= m;
    }
    if (bound < 0 || bound > 100000)
        throw EnumerationTooLargeError("extension enumeration bound |Pic(Y)| * prod(m_j) exceeds 100000");

    const std::size_t s = kernel_orders.size();
    std::vector<std::vector<std::vector<Int>>> reps(s);
    std::size_t total = 1;
    for (std::size_t j = 0; j < s; ++j) {
        reps[j] = coset_representatives(pic_y, kernel_orders[j]);
        total *= reps[j].size();
    }

    auto tuple_at = [&](std::size_t flat) {
        std::vector<std::vector<Int>> tuple(s);
        for (std::size_t j = 0; j < s; ++j) {
            tuple[j] = reps[j][flat % reps[j].size()];
            flat /= reps[j].size();
        }
        return tuple;
    };

    std::vector<fga::InvariantFactorDecomposition> found(total);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
        std::vector<std::vector<Int>> tuple = tuple_at(static_cast<std::size_t>(idx));
        found[static_cast<std::size_t>(idx)] =
            fga::decompose(detail::extend_group_only(pic_y, kernel_orders, tuple));
    }

    // Deterministic merge: group by isomorphism type, keep the smallest
    // witness of each, and order the output by witness.
    std::map<std::string, ExtensionType> by_type;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::vector<std::vector<Int>> tuple = tuple_at(idx);
        std::string key = found[idx].to_string();
        auto it = by_type.find(key);
        if (it == by_type.end())
            by_type.emplace(std::move(key), ExtensionType{found[idx], std::move(tuple)});
        else if (tuple_less(tuple, it->second.witness))
            it->second.witness = std::move(tuple);
    }
    std::vector<ExtensionType> out;
    out.reserve(by_type.size());
    for (auto& [key, type] : by_type) out.push_back(std::move(type));
    std::sort(out.begin(), out.end(), [](const ExtensionType& a, const ExtensionType& b) {
        return tuple_less(a.witness, b.witness);
    });
    return out;
}

}  // namespace

std::vector<ExtensionType> enumerate_extensions(const PresentedGroup& pic_y,
                                                const std::vector<Int>& kernel_orders) {
    return enumerate_impl(pic_y, kernel_orders, true);
}

std::vector<ExtensionType> enumerate_extensions_serial(const PresentedGroup& pic_y,
                                                       const std::vector<Int>& kernel_orders) {
    return enumerate_impl(pic_y, kernel_orders, false);
}

}  // namespace stacky
