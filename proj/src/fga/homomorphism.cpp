#include "fga/homomorphism.hpp"

#include <algorithm>
#include <utility>

namespace fga {

Homomorphism::Homomorphism(PresentedGroup source, PresentedGroup target, IntegerMatrix images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.rows() != source_.generator_count() ||
        images_.cols() != target_.generator_count())
        throw std::invalid_argument("Homomorphism: image matrix has wrong shape");
    const IntegerMatrix& rel = source_.relations();
    for (std::size_t i = 0; i < rel.rows(); ++i) {
        if (!target_.in_relation_lattice(mul_row_vector(rel.row(i), images_)))
            throw IllDefinedError("homomorphism does not kill source relation row " +
                                  std::to_string(i));
    }
}

Homomorphism Homomorphism::zero(PresentedGroup source, PresentedGroup target) {
    IntegerMatrix z(source.generator_count(), target.generator_count());
    return Homomorphism(std::move(source), std::move(target), std::move(z));
}

Homomorphism Homomorphism::identity(const PresentedGroup& g) {
    return Homomorphism(g, g, IntegerMatrix::identity(g.generator_count()));
}

GroupElement Homomorphism::apply(const GroupElement& a) const {
    if (!a.group().same_presentation(source_))
        throw GroupMismatchError("apply: element not in the source group");
    return target_.element(mul_row_vector(a.coeffs(), images_));
}

GroupElement Homomorphism::apply_generator(std::size_t i) const {
    return target_.element(images_.row(i));
}

Homomorphism make_hom(PresentedGroup source, PresentedGroup target, IntegerMatrix images) {
    return Homomorphism(std::move(source), std::move(target), std::move(images));
}

Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
    if (!f.target().same_presentation(g.source()))
        throw GroupMismatchError("compose: middle groups differ");
    return Homomorphism(f.source(), g.target(), f.images() * g.images());
}

IntegerMatrix preimage_lattice(const IntegerMatrix& map, const IntegerMatrix& lattice) {
    if (map.cols() != lattice.cols())
        throw std::invalid_argument("preimage_lattice: column counts differ");
    const std::size_t m = map.rows();
    SmithDecomposition s = smith_normal_form(vstack(map, lattice));
    // Rows of u past the rank span the left kernel of the stack; their
    // leading blocks generate the preimage.
    IntegerMatrix out(0, m);
    for (std::size_t i = s.rank; i < s.u.rows(); ++i) {
        std::vector<Int> full = s.u.row(i);
        std::vector<Int> x(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(m));
        if (std::all_of(x.begin(), x.end(), [](const Int& e) { return e == 0; })) continue;
        out.append_row(x);
    }
    return out;
}

SubgroupPair kernel(const Homomorphism& f) {
    IntegerMatrix gens = preimage_lattice(f.images(), f.target().relations());
    IntegerMatrix rels = preimage_lattice(gens, f.source().relations());
    PresentedGroup k(gens.rows(), std::move(rels));
    Homomorphism incl(k, f.source(), std::move(gens));
    return {std::move(k), std::move(incl)};
}

SubgroupPair image(const Homomorphism& f) {
    IntegerMatrix rels = preimage_lattice(f.images(), f.target().relations());
    PresentedGroup img(f.source().generator_count(), std::move(rels));
    Homomorphism incl(img, f.target(), f.images());
    return {std::move(img), std::move(incl)};
}

QuotientPair cokernel(const Homomorphism& f) {
    PresentedGroup c(f.target().generator_count(),
                     vstack(f.target().relations(), f.images()), f.target().labels());
    Homomorphism proj(f.target(), c, IntegerMatrix::identity(f.target().generator_count()));
    return {std::move(c), std::move(proj)};
}

DirectSum direct_sum(const PresentedGroup& g, const PresentedGroup& h) {
    const std::size_t kg = g.generator_count();
    const std::size_t kh = h.generator_count();
    IntegerMatrix rel(0, kg + kh);
    for (std::size_t i = 0; i < g.relations().rows(); ++i) {
        std::vector<Int> row(kg + kh);
        for (std::size_t j = 0; j < kg; ++j) row[j] = g.relations().at(i, j);
        rel.append_row(row);
    }
    for (std::size_t i = 0; i < h.relations().rows(); ++i) {
        std::vector<Int> row(kg + kh);
        for (std::size_t j = 0; j < kh; ++j) row[kg + j] = h.relations().at(i, j);
        rel.append_row(row);
    }
    PresentedGroup sum(kg + kh, std::move(rel));

    IntegerMatrix il(kg, kg + kh);
    for (std::size_t i = 0; i < kg; ++i) il.at(i, i) = 1;
    IntegerMatrix ir(kh, kg + kh);
    for (std::size_t i = 0; i < kh; ++i) ir.at(i, kg + i) = 1;
    return {sum, Homomorphism(g, sum, std::move(il)), Homomorphism(h, sum, std::move(ir))};
}

PushoutResult pushout(const Homomorphism& f, const Homomorphism& g) {
    if (!f.source().same_presentation(g.source()))
        throw GroupMismatchError("pushout: maps do not share a source");
    DirectSum ab = direct_sum(f.target(), g.target());
    const std::size_t kc = f.source().generator_count();
    const std::size_t ka = f.target().generator_count();
    const std::size_t kb = g.target().generator_count();
    IntegerMatrix span(kc, ka + kb);
    for (std::size_t i = 0; i < kc; ++i) {
        for (std::size_t j = 0; j < ka; ++j) span.at(i, j) = f.images().at(i, j);
        for (std::size_t j = 0; j < kb; ++j) span.at(i, ka + j) = -g.images().at(i, j);
    }
    Homomorphism diff(f.source(), ab.group, std::move(span));
    QuotientPair q = cokernel(diff);
    return {q.group, compose(ab.inj_left, q.proj), compose(ab.inj_right, q.proj)};
}

bool in_image(const Homomorphism& f, const GroupElement& b) {
    if (!b.group().same_presentation(f.target()))
        throw GroupMismatchError("in_image: element not in the target group");
    // b is in the image subgroup iff it is an integer combination of the
    // generator images modulo the target relations.
    PresentedGroup span(f.target().generator_count(),
                        vstack(f.images(), f.target().relations()));
    return span.in_relation_lattice(b.coeffs());
}

bool is_injective(const Homomorphism& f) {
    return kernel(f).group.decomposition().is_trivial();
}

bool is_surjective(const Homomorphism& f) {
    return cokernel(f).group.decomposition().is_trivial();
}

bool is_exact_at(const Homomorphism& f, const Homomorphism& g) {
    if (!f.target().same_presentation(g.source()))
        throw GroupMismatchError("is_exact_at: maps are not composable");
    // image(f) inside kernel(g): the composite must vanish generator-wise.
    for (std::size_t i = 0; i < f.source().generator_count(); ++i)
        if (!g.apply(f.apply_generator(i)).is_zero()) return false;
    // kernel(g) inside image(f): every kernel generator must be reachable.
    SubgroupPair k = kernel(g);
    for (std::size_t i = 0; i < k.group.generator_count(); ++i)
        if (!in_image(f, k.incl.apply_generator(i))) return false;
    return true;
}

}  // namespace fga
