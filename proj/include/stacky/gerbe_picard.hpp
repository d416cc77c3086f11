#pragma once

#include "stacky/stacky_picard.hpp"

#include <optional>

namespace stacky {

/// Thrown when an extension enumeration would exceed the candidate bound.
struct EnumerationTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Abelianized band: invariants n_j >= 2 presenting H^ab = sum Z/n_j.
struct BandData {
    std::vector<fga::Int> ab_invariants;
};

/// User-supplied presentation of (the relevant part of) H^2 together with
/// the pushforward of the gerbe class, a map from the character group.
struct ObstructionData {
    fga::PresentedGroup h2_group;
    fga::Homomorphism map;  // character group -> h2_group
};

/// One generator of the obstruction kernel: a chosen generator of order m_j
/// whose m_j-th lift power is the pullback of target t_j. This is the
/// extension datum the exact sequence leaves open.
struct LiftRelation {
    fga::Int character_order;   // m_j >= 1
    fga::GroupElement target;   // t_j in Pic(Y)
};

struct GerbePicard {
    fga::PresentedGroup pic;
    fga::Homomorphism pullback;             // Pic(Y) -> pic
    std::vector<fga::GroupElement> lifts;   // chosen lift per kernel generator
    fga::PresentedGroup kernel_group;       // sum Z/m_j
    fga::Homomorphism chi;                  // pic -> kernel_group
    VerificationReport verification;
};

/// Characters of the band: sum Z/n_j (finite abelian duality preserves the
/// invariants).
fga::PresentedGroup character_group(const BandData& band);

/// Kernel of the obstruction map, as a subgroup of the character group.
fga::SubgroupPair obstruction_kernel(const ObstructionData& obs);

/// Picard group of the gerbe: (Z^s + Pic(Y)) / <(m_j f_j, -t_j)>, the
/// pushout along diag(m_j), with pullback, chosen lifts, chi, and the
/// exactness checks for 0 -> Pic(Y) -> Pic(X) -> sum Z/m_j -> 0.
GerbePicard build_pic_gerbe(const fga::PresentedGroup& pic_y,
                            const std::vector<LiftRelation>& kernel_gens);

/// Gerbe layer of a curve description. Exactly one of `kernel_orders` /
/// `obstruction` may be omitted; when both are present they are
/// cross-checked against each other.
struct GerbeLayer {
    BandData band;
    std::optional<ObstructionData> obstruction;
    std::optional<std::vector<fga::Int>> kernel_orders;  // claimed decomposition
    std::vector<LiftRelation> lifts;                     // targets in the stage-one pic
};

struct FullPicard {
    RigidifiedPicard rigidified;
    GerbePicard gerbe;
};

/// Runs both stages: the rigidified construction, then the gerbe extension
/// over its result. Lift targets must be elements of the stage-one pic.
/// Claimed kernel orders are cross-checked against the obstruction kernel
/// (when supplied) and against the lift data; mismatches are recorded as
/// failed verification checks, not silently accepted.
FullPicard compose_full(const CoarsePicard& coarse, const std::vector<StackyPointSpec>& points,
                        const GerbeLayer& gerbe);

/// One isomorphism type found by the extension enumeration, with the
/// lexicographically smallest witness tuple of lift targets realizing it.
struct ExtensionType {
    fga::InvariantFactorDecomposition decomposition;
    std::vector<std::vector<fga::Int>> witness;  // coefficients in Pic(Y) coordinates
};

/// All isomorphism types of (Z^s + Pic(Y)) / <(m_j f_j, -t_j)> as the t_j
/// range over representatives of Pic(Y) / m_j Pic(Y), deduplicated and
/// sorted by witness. Requires |Pic(Y)| * prod(m_j) <= 100000. The default
/// entry point evaluates candidates in parallel when OpenMP is available;
/// the serial variant is the reference implementation the parallel path is
/// tested against.
std::vector<ExtensionType> enumerate_extensions(const fga::PresentedGroup& pic_y,
                                                const std::vector<fga::Int>& kernel_orders);
std::vector<ExtensionType> enumerate_extensions_serial(const fga::PresentedGroup& pic_y,
                                                       const std::vector<fga::Int>& kernel_orders);

}  // namespace stacky
