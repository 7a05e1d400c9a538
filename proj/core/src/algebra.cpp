#include "cuntz/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace cuntz {

std::optional<Monomial> mono_mul(const Monomial& x, const Monomial& y) {
    // (S_a S_b^*)(S_c S_d^*): resolve S_b^* S_c by prefix overlap.
    auto split = prefix_split(x.beta, y.alpha);
    switch (split.kind) {
        case PrefixSplit::Kind::Equal:
            return Monomial{x.alpha, y.beta};
        case PrefixSplit::Kind::AIsPrefix:  // y.alpha = x.beta + r
            return Monomial{x.alpha + split.residual, y.beta};
        case PrefixSplit::Kind::BIsPrefix:  // x.beta = y.alpha + r
            return Monomial{x.alpha, y.beta + split.residual};
        case PrefixSplit::Kind::Disjoint:
            return std::nullopt;
    }
    return std::nullopt;
}

Element Element::monomial(Alphabet a, Word alpha, Word beta, Scalar c) {
    if (!alpha.valid_for(a) || !beta.valid_for(a))
        throw std::invalid_argument("Element::monomial: letter out of range for alphabet");
    Element e(a);
    e.add_term({std::move(alpha), std::move(beta)}, c);
    return e;
}

Element Element::projection(const DiagonalProjection& p) {
    Element e(p.alphabet());
    for (const Word& w : p.words()) e.add_term({w, w}, Scalar(1));
    return e;
}

Scalar Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
}

void Element::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element out(alphabet_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

namespace {
void require_same_alphabet(const Element& a, const Element& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("elements belong to different alphabets");
}
}  // namespace

Element& Element::operator+=(const Element& o) {
    require_same_alphabet(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    require_same_alphabet(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    require_same_alphabet(a, b);
    Element out(a.alphabet());
    for (const auto& [mx, cx] : a.terms())
        for (const auto& [my, cy] : b.terms())
            if (auto m = mono_mul(mx, my)) out.add_term(*m, cx * cy);
    return out;
}

Element operator*(const Scalar& c, const Element& x) {
    Element out(x.alphabet());
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : x.terms()) out.add_term(m, c * coeff);
    return out;
}

std::size_t Element::max_beta_length() const {
    std::size_t m = 0;
    for (const auto& [mono, c] : terms_) m = std::max(m, mono.beta.length());
    return m;
}

Element star(const Element& x) {
    Element out(x.alphabet());
    for (const auto& [m, c] : x.terms()) out.add_term(m.star(), c.conj());
    return out;
}

namespace {

// Expands one term so its beta part reaches the given length.
void expand_term_into(Element& out, const Monomial& m, const Scalar& c, int target,
                      Alphabet alphabet) {
    int k = target - static_cast<int>(m.beta.length());
    if (k < 0)
        throw std::invalid_argument("expand_to_level: target below an existing beta length");
    if (k == 0) {
        out.add_term(m, c);
        return;
    }
    for (const Word& nu : all_words(k, alphabet))
        out.add_term({m.alpha + nu, m.beta + nu}, c);
}

}  // namespace

Element expand_to_level(const Element& x, const std::map<int, int>& targets) {
    Element out(x.alphabet());
    for (const auto& [m, c] : x.terms()) {
        auto it = targets.find(m.degree());
        if (it == targets.end())
            throw std::invalid_argument("expand_to_level: no target for degree " +
                                        std::to_string(m.degree()));
        expand_term_into(out, m, c, it->second, x.alphabet());
    }
    return out;
}

Element expand_beta_to(const Element& x, int target) {
    Element out(x.alphabet());
    for (const auto& [m, c] : x.terms())
        expand_term_into(out, m, c, target, x.alphabet());
    return out;
}

Element normal_form(const Element& x) {
    const int n = x.alphabet().size();
    Element out(x.alphabet());
    for (auto& [d, comp] : degree_split(x)) {
        // Uniform beta-length representation of this degree component.
        Element level = expand_beta_to(comp, static_cast<int>(comp.max_beta_length()));
        Element::TermMap terms = level.terms();

        // Collapse complete families { (a.i, b.i) : i = 1..n } sharing one
        // coefficient into (a, b), cascading until nothing collapses.
        bool changed = true;
        while (changed) {
            changed = false;
            // Group by candidate parent (alpha and beta both drop a common
            // final letter).
            std::map<Monomial, std::vector<Element::TermMap::iterator>, MonomialOrder> groups;
            for (auto it = terms.begin(); it != terms.end(); ++it) {
                const Monomial& m = it->first;
                if (m.alpha.empty() || m.beta.empty()) continue;
                if (m.alpha.back() != m.beta.back()) continue;
                groups[{m.alpha.parent(), m.beta.parent()}].push_back(it);
            }
            for (auto& [parent, children] : groups) {
                if (children.size() != static_cast<std::size_t>(n)) continue;
                // Copied, not referenced: the children are erased below.
                const Scalar c = children.front()->second;
                bool uniform = std::all_of(children.begin(), children.end(),
                                           [&](auto it) { return it->second == c; });
                if (!uniform) continue;
                // The n children carry distinct last letters by construction of
                // the grouping key, so a full group means letters 1..n.
                for (auto it : children) terms.erase(it);
                auto [slot, inserted] = terms.emplace(parent, c);
                if (!inserted) {
                    slot->second += c;
                    if (slot->second.is_zero()) terms.erase(slot);
                }
                changed = true;
            }
        }
        for (const auto& [m, c] : terms) out.add_term(m, c);
    }
    return out;
}

bool equals(const Element& x, const Element& y) {
    require_same_alphabet(x, y);
    return normal_form(x - y).is_zero();
}

std::map<int, Element> degree_split(const Element& x) {
    std::map<int, Element> out;
    for (const auto& [m, c] : x.terms()) {
        auto it = out.find(m.degree());
        if (it == out.end()) it = out.emplace(m.degree(), Element(x.alphabet())).first;
        it->second.add_term(m, c);
    }
    return out;
}

Homogeneity is_homogeneous(const Element& x) {
    if (x.is_zero()) return {Homogeneity::Kind::Zero, 0};
    int degree = x.terms().begin()->first.degree();
    for (const auto& [m, c] : x.terms())
        if (m.degree() != degree) return {Homogeneity::Kind::Mixed, 0};
    return {Homogeneity::Kind::Homogeneous, degree};
}

bool is_in_core(const Element& x) {
    auto h = is_homogeneous(x);
    return h.kind == Homogeneity::Kind::Zero ||
           (h.kind == Homogeneity::Kind::Homogeneous && h.degree == 0);
}

Scalar trace(const Element& x) {
    if (!is_in_core(x)) throw std::domain_error("trace: element is not in the core");
    Scalar sum;
    for (const auto& [m, c] : x.terms())
        if (m.alpha == m.beta)
            sum += c * Scalar(rational_pow(x.alphabet().size(),
                                           -static_cast<int>(m.alpha.length())));
    return sum;
}

Element phi_shift(const Element& x) {
    Element out(x.alphabet());
    for (int i = 1; i <= x.alphabet().size(); ++i) {
        Word head{i};
        for (const auto& [m, c] : x.terms())
            out.add_term({head + m.alpha, head + m.beta}, c);
    }
    return out;
}

bool is_unitary(const Element& u) {
    Element id = Element::one(u.alphabet());
    return equals(u * star(u), id) && equals(star(u) * u, id);
}

bool is_projection(const Element& p) {
    return equals(p, star(p)) && equals(p * p, p);
}

bool is_partial_isometry(const Element& v) {
    return equals(v * star(v) * v, v);
}

}  // namespace cuntz
