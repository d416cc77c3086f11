#pragma once

#include "fga/homomorphism.hpp"

#include <map>
#include <string>
#include <vector>

namespace stacky {

/// Picard group of the coarse space, with user-named distinguished classes.
struct CoarsePicard {
    fga::PresentedGroup group;
    std::map<std::string, fga::GroupElement> named_classes;
};

/// One stacky point: cyclic stabilizer of the given order and the class of
/// the ideal sheaf of its image point in the coarse Picard group. Order 1 is
/// permitted and contributes nothing.
struct StackyPointSpec {
    std::string label;
    fga::Int order;
    fga::GroupElement ideal_class;
};

struct CheckResult {
    std::string node;
    bool pass;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Picard group of a tame stacky curve with trivial generic stabilizer,
/// presented on the ideal-sheaf generators followed by the coarse
/// generators, together with the pullback and residue maps and the recorded
/// exactness checks for 0 -> Pic(X) -> Pic(Y) -> prod Z/n_i -> 0.
struct RigidifiedPicard {
    fga::PresentedGroup pic;
    fga::Homomorphism pullback;                        // Pic(X) -> pic
    std::vector<fga::GroupElement> ideal_sheaf_classes;  // one per stacky point
    fga::PresentedGroup residue_group;                 // prod Z/n_i
    fga::Homomorphism residue_map;                     // pic -> residue_group
    std::vector<fga::Int> point_orders;
    VerificationReport verification;
};

/// Builds the presentation
///   (Z^r + Pic(X)) / <(n_i e_i, -ideal_class_i)>
/// and verifies the short exact sequence it sits in. Throws
/// fga::GroupMismatchError if an ideal class lives in a foreign group.
RigidifiedPicard build_pic_rigidified(const CoarsePicard& coarse,
                                      const std::vector<StackyPointSpec>& points);

/// Residues of a class at the stacky points, canonical representatives
/// 0 <= c_i < n_i.
std::vector<fga::Int> chi_residues(const RigidifiedPicard& y, const fga::GroupElement& cls);

/// Normal form of the pair (exponent vector, coarse class): exponents are
/// reduced into [0, n_i) by floor division and the quotients are folded into
/// the coarse class through the ideal classes. The represented class in pic
/// is unchanged (asserted exactly).
struct NormalFormResult {
    std::vector<fga::Int> residues;
    fga::GroupElement coarse_class;
};

NormalFormResult normal_form(const RigidifiedPicard& y, const std::vector<fga::Int>& exponents,
                             const fga::GroupElement& coarse_class);

}  // namespace stacky
