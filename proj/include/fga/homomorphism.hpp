#pragma once

#include "fga/presented_group.hpp"

namespace fga {

/// Raised by make_hom when some relation of the source is not sent to zero.
struct IllDefinedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Map between presented groups, given by generator images (row i of
/// `images` = image of source generator i in target coordinates). The
/// constructor verifies well-definedness: every relation row of the source
/// must land in the target's relation lattice.
class Homomorphism {
public:
    Homomorphism(PresentedGroup source, PresentedGroup target, IntegerMatrix images);

    static Homomorphism zero(PresentedGroup source, PresentedGroup target);
    static Homomorphism identity(const PresentedGroup& g);

    const PresentedGroup& source() const { return source_; }
    const PresentedGroup& target() const { return target_; }
    const IntegerMatrix& images() const { return images_; }

    GroupElement apply(const GroupElement& a) const;
    GroupElement apply_generator(std::size_t i) const;

private:
    PresentedGroup source_;
    PresentedGroup target_;
    IntegerMatrix images_;
};

/// Spec operation; same contract as the Homomorphism constructor.
Homomorphism make_hom(PresentedGroup source, PresentedGroup target, IntegerMatrix images);

/// g after f; f.target must be g.source (as a presentation).
Homomorphism compose(const Homomorphism& f, const Homomorphism& g);

/// Rows generating {x in Z^m : x * map lies in rowspan(lattice)}; both
/// matrices must have the same column count. Zero rows are dropped.
IntegerMatrix preimage_lattice(const IntegerMatrix& map, const IntegerMatrix& lattice);

struct SubgroupPair {
    PresentedGroup group;
    Homomorphism incl;  // injective; image is the subgroup
};

struct QuotientPair {
    PresentedGroup group;
    Homomorphism proj;  // surjective
};

SubgroupPair kernel(const Homomorphism& f);
SubgroupPair image(const Homomorphism& f);
QuotientPair cokernel(const Homomorphism& f);

struct DirectSum {
    PresentedGroup group;
    Homomorphism inj_left;
    Homomorphism inj_right;
};

DirectSum direct_sum(const PresentedGroup& g, const PresentedGroup& h);

/// Pushout of A <-f- C -g-> B: the cokernel of c |-> (f(c), -g(c)) in A + B,
/// with the two composite maps into the quotient.
struct PushoutResult {
    PresentedGroup group;
    Homomorphism from_left;   // A -> P
    Homomorphism from_right;  // B -> P
};

PushoutResult pushout(const Homomorphism& f, const Homomorphism& g);

/// True iff b lies in the subgroup of f.target generated by the image of f.
bool in_image(const Homomorphism& f, const GroupElement& b);

bool is_injective(const Homomorphism& f);
bool is_surjective(const Homomorphism& f);

/// Exactness at the middle of A -f-> B -g-> C: image(f) = kernel(g) as
/// subgroups of B, decided by mutual generator membership.
bool is_exact_at(const Homomorphism& f, const Homomorphism& g);

}  // namespace fga
