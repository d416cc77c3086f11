#include "stacky/stacky_picard.hpp"

#include "stacky/cyclic_extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace stacky {

using fga::GroupElement;
using fga::Int;

bool VerificationReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

namespace {

Int floor_mod(const Int& a, const Int& n) {
    Int r = a % n;
    if (r < 0) r += n;
    return r;
}

}  // namespace

RigidifiedPicard build_pic_rigidified(const CoarsePicard& coarse,
                                      const std::vector<StackyPointSpec>& points) {
    std::vector<Int> orders;
    std::vector<std::vector<Int>> targets;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const StackyPointSpec& p = points[i];
        if (p.order < 1)
            throw std::invalid_argument("stacky point '" + p.label + "' has order < 1");
        if (!p.ideal_class.group().same_presentation(coarse.group))
            throw fga::GroupMismatchError("ideal class of point '" + p.label +
                                          "' is not an element of the coarse Picard group");
        orders.push_back(p.order);
        targets.push_back(p.ideal_class.coeffs());
        labels.push_back(p.label.empty() ? "I" + std::to_string(i + 1) : p.label);
    }

    detail::CyclicExtension ext =
        detail::extend_by_cyclic_lifts(coarse.group, orders, targets, labels);

    RigidifiedPicard out{std::move(ext.group),
                         std::move(ext.pullback),
                         std::move(ext.new_generators),
                         std::move(ext.residue_group),
                         std::move(ext.residue_map),
                         orders,
                         {}};

    detail::CyclicExtension view{out.pic, out.pullback, out.ideal_sheaf_classes,
                                 out.residue_group, out.residue_map};
    for (auto& [node, pass] :
         detail::sequence_checks(view, "Pic(X)", "Pic(Y)", "residue group", "pullback", "residue map"))
        out.verification.checks.push_back({node, pass});

    // Defining invariants of the construction, re-checked rather than assumed.
    bool relations_hold = true;
    bool residues_standard = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        GroupElement lhs = orders[i] * out.ideal_sheaf_classes[i];
        GroupElement rhs = out.pullback.apply(points[i].ideal_class);
        if (!fga::element_eq(lhs, rhs)) relations_hold = false;
        std::vector<Int> res = chi_residues(out, out.ideal_sheaf_classes[i]);
        for (std::size_t j = 0; j < res.size(); ++j) {
            Int expect = (i == j) ? floor_mod(1, orders[i]) : 0;
            if (res[j] != expect) residues_standard = false;
        }
    }
    out.verification.checks.push_back(
        {"n_i * ideal sheaf class = pullback(ideal class) for every point", relations_hold});
    out.verification.checks.push_back(
        {"residues of ideal sheaf classes are the standard vectors", residues_standard});

    return out;
}

std::vector<Int> chi_residues(const RigidifiedPicard& y, const GroupElement& cls) {
    if (!cls.group().same_presentation(y.pic))
        throw fga::GroupMismatchError("chi_residues: class is not an element of pic");
    GroupElement raw = y.residue_map.apply(cls);
    std::vector<Int> out(raw.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = floor_mod(raw.coeffs()[i], y.point_orders[i]);
    return out;
}

NormalFormResult normal_form(const RigidifiedPicard& y, const std::vector<Int>& exponents,
                             const GroupElement& coarse_class) {
    const std::size_t r = y.point_orders.size();
    if (exponents.size() != r)
        throw std::invalid_argument("normal_form: one exponent per stacky point required");
    if (!coarse_class.group().same_presentation(y.pullback.source()))
        throw fga::GroupMismatchError("normal_form: class is not an element of the coarse group");

    std::vector<Int> residues(r);
    GroupElement reduced = coarse_class;
    for (std::size_t i = 0; i < r; ++i) {
        residues[i] = floor_mod(exponents[i], y.point_orders[i]);
        Int b = (exponents[i] - residues[i]) / y.point_orders[i];
        if (b != 0) {
            // Fold the quotient into the coarse class through the ideal class.
            const fga::IntegerMatrix& rel = y.pic.relations();
            std::size_t row = rel.rows() - r + i;  // relation (n_i e_i, -ideal_i)
            std::vector<Int> ideal(coarse_class.coeffs().size());
            for (std::size_t j = 0; j < ideal.size(); ++j) ideal[j] = -rel.at(row, r + j);
            reduced = reduced + b * y.pullback.source().element(std::move(ideal));
        }
    }

    // The represented class in pic must be unchanged by the reduction.
    auto embed = [&](const std::vector<Int>& exps, const GroupElement& coarse_part) {
        std::vector<Int> c(y.pic.generator_count());
        for (std::size_t i = 0; i < r; ++i) c[i] = exps[i];
        GroupElement e = y.pic.element(std::move(c));
        return e + y.pullback.apply(coarse_part);
    };
    if (!fga::element_eq(embed(exponents, coarse_class), embed(residues, reduced)))
        throw std::logic_error("normal_form: reduction changed the class");

    return {std::move(residues), std::move(reduced)};
}

}  // namespace stacky
