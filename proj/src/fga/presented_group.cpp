#include "fga/presented_group.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace fga {

std::optional<Int> InvariantFactorDecomposition::order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::string InvariantFactorDecomposition::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << " x ";
        first = false;
    };
    if (free_rank == 1) {
        sep();
        out << "Z";
    } else if (free_rank > 1) {
        sep();
        out << "Z^" << free_rank;
    }
    for (const Int& d : torsion) {
        sep();
        out << "Z/" << d;
    }
    if (first) out << "0";
    return out.str();
}

struct PresentedGroup::Data {
    std::size_t generators = 0;
    IntegerMatrix relations;
    std::vector<std::string> labels;
    SmithDecomposition snf;
    InvariantFactorDecomposition decomposition;
};

PresentedGroup::PresentedGroup() : PresentedGroup(0, IntegerMatrix(0, 0)) {}

PresentedGroup::PresentedGroup(std::size_t generators, IntegerMatrix relations,
                               std::vector<std::string> labels) {
    if (relations.cols() != generators)
        throw std::invalid_argument("PresentedGroup: relation matrix must have one column per generator");
    if (!labels.empty() && labels.size() != generators)
        throw std::invalid_argument("PresentedGroup: label count must match generator count");
    auto d = std::make_shared<Data>();
    d->generators = generators;
    d->relations = std::move(relations);
    d->labels = std::move(labels);
    d->snf = smith_normal_form(d->relations);
    d->decomposition.free_rank = generators - d->snf.rank;
    for (std::size_t i = 0; i < d->snf.rank; ++i) {
        Int di = d->snf.d.at(i, i);
        if (di > 1) d->decomposition.torsion.push_back(di);
    }
    data_ = std::move(d);
}

PresentedGroup PresentedGroup::free_group(std::size_t rank, std::vector<std::string> labels) {
    return PresentedGroup(rank, IntegerMatrix(0, rank), std::move(labels));
}

PresentedGroup PresentedGroup::cyclic_product(const std::vector<Int>& orders,
                                              std::vector<std::string> labels) {
    IntegerMatrix rel(0, orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] == 0) continue;  // Z factor, no relation
        std::vector<Int> row(orders.size());
        row[i] = orders[i];
        rel.append_row(row);
    }
    return PresentedGroup(orders.size(), std::move(rel), std::move(labels));
}

std::size_t PresentedGroup::generator_count() const { return data_->generators; }
const IntegerMatrix& PresentedGroup::relations() const { return data_->relations; }
const std::vector<std::string>& PresentedGroup::labels() const { return data_->labels; }
const SmithDecomposition& PresentedGroup::relation_snf() const { return data_->snf; }

const InvariantFactorDecomposition& PresentedGroup::decomposition() const {
    return data_->decomposition;
}

std::optional<Int> PresentedGroup::order() const { return data_->decomposition.order(); }

bool PresentedGroup::same_presentation(const PresentedGroup& other) const {
    if (data_ == other.data_) return true;
    return data_->generators == other.data_->generators &&
           data_->relations == other.data_->relations;
}

bool PresentedGroup::in_relation_lattice(const std::vector<Int>& v) const {
    if (v.size() != data_->generators)
        throw std::invalid_argument("in_relation_lattice: wrong vector length");
    const SmithDecomposition& s = data_->snf;
    std::vector<Int> w = mul_row_vector(v, s.v);
    for (std::size_t j = 0; j < w.size(); ++j) {
        Int dj = s.diagonal(j);
        if (dj == 0) {
            if (w[j] != 0) return false;
        } else if (w[j] % dj != 0) {
            return false;
        }
    }
    return true;
}

GroupElement PresentedGroup::element(std::vector<Int> coeffs) const {
    return GroupElement(*this, std::move(coeffs));
}

GroupElement PresentedGroup::generator(std::size_t i) const {
    if (i >= data_->generators) throw std::out_of_range("generator index out of range");
    std::vector<Int> c(data_->generators);
    c[i] = 1;
    return element(std::move(c));
}

GroupElement PresentedGroup::zero() const {
    return element(std::vector<Int>(data_->generators));
}

std::vector<GroupElement> PresentedGroup::elements() const {
    if (!order())
        throw std::logic_error("elements(): group is infinite");
    const SmithDecomposition& s = data_->snf;
    const std::size_t k = data_->generators;
    // Mixed-radix count over the Smith coordinates, mapped back through v_inv.
    std::vector<Int> moduli(k);
    for (std::size_t j = 0; j < k; ++j) moduli[j] = s.diagonal(j);
    std::vector<GroupElement> out;
    std::vector<Int> w(k);
    for (;;) {
        out.push_back(element(mul_row_vector(w, s.v_inv)));
        std::size_t j = 0;
        while (j < k) {
            ++w[j];
            if (w[j] < moduli[j]) break;
            w[j] = 0;
            ++j;
        }
        if (j == k) break;
    }
    return out;
}

const InvariantFactorDecomposition& decompose(const PresentedGroup& g) {
    return g.decomposition();
}

GroupElement::GroupElement(PresentedGroup group, std::vector<Int> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != group_.generator_count())
        throw std::invalid_argument("GroupElement: coefficient count must match generator count");
}

bool GroupElement::is_zero() const { return group_.in_relation_lattice(coeffs_); }

GroupElement GroupElement::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -coeffs_[i];
    return GroupElement(group_, std::move(c));
}

GroupElement operator+(const GroupElement& a, const GroupElement& b) {
    if (!a.group().same_presentation(b.group()))
        throw GroupMismatchError("element addition across different presentations");
    std::vector<Int> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
    return GroupElement(a.group(), std::move(c));
}

GroupElement operator-(const GroupElement& a, const GroupElement& b) { return a + (-b); }

GroupElement operator*(const Int& n, const GroupElement& a) {
    std::vector<Int> c(a.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = n * a.coeffs()[i];
    return GroupElement(a.group(), std::move(c));
}

bool element_eq(const GroupElement& a, const GroupElement& b) {
    if (!a.group().same_presentation(b.group()))
        throw GroupMismatchError("element_eq across different presentations");
    return (a - b).is_zero();
}

std::optional<Int> element_order(const GroupElement& a) {
    const SmithDecomposition& s = a.group().relation_snf();
    std::vector<Int> w = mul_row_vector(a.coeffs(), s.v);
    Int n = 1;
    for (std::size_t j = 0; j < w.size(); ++j) {
        Int dj = s.diagonal(j);
        if (dj == 0) {
            if (w[j] != 0) return std::nullopt;  // infinite order
            continue;
        }
        n = lcm(n, dj / gcd(dj, abs(w[j])));
    }
    return n;
}

}  // namespace fga
