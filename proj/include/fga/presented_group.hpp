#pragma once

#include "fga/integer_matrix.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fga {

/// Raised when elements of distinct presentations are mixed.
struct GroupMismatchError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Canonical form of a finitely generated abelian group:
/// Z^free_rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_j >= 2.
struct InvariantFactorDecomposition {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }

    /// Group order: product of invariant factors, or nullopt when infinite.
    std::optional<Int> order() const;

    /// "0", "Z", "Z^2 x Z/6", ...
    std::string to_string() const;

    friend bool operator==(const InvariantFactorDecomposition&,
                           const InvariantFactorDecomposition&) = default;
};

class GroupElement;

/// Finitely generated abelian group given by generators and a relation
/// matrix (each row r is one relation sum r_j g_j = 0). Relations are kept
/// exactly as supplied; canonicalization happens only through the cached
/// Smith normal form. Immutable after construction.
class PresentedGroup {
public:
    /// Trivial group.
    PresentedGroup();

    /// `relations` must have `generators` columns; pass a 0 x generators
    /// matrix for a free group.
    PresentedGroup(std::size_t generators, IntegerMatrix relations,
                   std::vector<std::string> labels = {});

    static PresentedGroup free_group(std::size_t rank, std::vector<std::string> labels = {});

    /// Direct sum of cyclic groups Z/n_i; n_i = 0 denotes a Z factor.
    static PresentedGroup cyclic_product(const std::vector<Int>& orders,
                                         std::vector<std::string> labels = {});

    std::size_t generator_count() const;
    const IntegerMatrix& relations() const;
    const std::vector<std::string>& labels() const;
    const SmithDecomposition& relation_snf() const;
    const InvariantFactorDecomposition& decomposition() const;
    std::optional<Int> order() const;

    /// Structural identity of presentations (labels ignored). Element
    /// arithmetic requires it; isomorphic groups with different relation
    /// matrices do not qualify.
    bool same_presentation(const PresentedGroup& other) const;

    /// True iff v lies in the integer row span of the relation matrix.
    bool in_relation_lattice(const std::vector<Int>& v) const;

    GroupElement element(std::vector<Int> coeffs) const;
    GroupElement generator(std::size_t i) const;
    GroupElement zero() const;

    /// All elements, one representative each, in a deterministic order.
    /// Throws std::logic_error on infinite groups.
    std::vector<GroupElement> elements() const;

private:
    struct Data;
    std::shared_ptr<const Data> data_;
};

/// Spec operation: invariant factors from the SNF of the relation matrix.
const InvariantFactorDecomposition& decompose(const PresentedGroup& g);

class GroupElement {
public:
    GroupElement(PresentedGroup group, std::vector<Int> coeffs);

    const PresentedGroup& group() const { return group_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;

    GroupElement operator-() const;
    friend GroupElement operator+(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator-(const GroupElement& a, const GroupElement& b);
    friend GroupElement operator*(const Int& n, const GroupElement& a);

private:
    PresentedGroup group_;
    std::vector<Int> coeffs_;
};

/// Exact equality in the group: a - b lies in the relation lattice.
/// Throws GroupMismatchError when the presentations differ.
bool element_eq(const GroupElement& a, const GroupElement& b);

/// Minimal n >= 1 with n*a = 0, or nullopt for infinite order.
std::optional<Int> element_order(const GroupElement& a);

}  // namespace fga
