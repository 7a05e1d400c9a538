#pragma once

#include <map>
#include <optional>
#include <vector>

#include "cuntz/scalar.hpp"
#include "cuntz/words.hpp"

namespace cuntz {

// The monomial S_alpha S_beta^*, of gauge degree |alpha| - |beta|.
struct Monomial {
    Word alpha;
    Word beta;

    int degree() const {
        return static_cast<int>(alpha.length()) - static_cast<int>(beta.length());
    }

    Monomial star() const { return {beta, alpha}; }

    bool operator==(const Monomial&) const = default;
};

// Canonical term order: (degree, beta, alpha) under shortlex. Keeps term maps
// sorted for deterministic serialization.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        if (auto c = a.beta <=> b.beta; c != 0) return c < 0;
        return a.alpha < b.alpha;
    }
};

// (S_alpha S_beta^*)(S_gamma S_delta^*) via S_i^* S_j = delta_ij.
// Returns nullopt when the product is zero.
std::optional<Monomial> mono_mul(const Monomial& x, const Monomial& y);

// Homogeneity of an element under the gauge grading. The zero element is a
// distinct outcome, never reported as degree 0.
struct Homogeneity {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind = Kind::Zero;
    int degree = 0;  // meaningful only when kind == Homogeneous

    bool operator==(const Homogeneity&) const = default;
};

// A finite linear combination of monomials S_alpha S_beta^* with Gaussian
// rational coefficients; the computational representation of polynomial
// elements of O_n. Value type: every operation returns a new element.
// The term map never stores a zero coefficient.
class Element {
public:
    using TermMap = std::map<Monomial, Scalar, MonomialOrder>;

    explicit Element(Alphabet alphabet) : alphabet_(alphabet) {}

    static Element zero(Alphabet a) { return Element(a); }
    static Element one(Alphabet a) { return monomial(a, Word{}, Word{}); }
    // c * S_alpha S_beta^*
    static Element monomial(Alphabet a, Word alpha, Word beta, Scalar c = Scalar(1));
    // S_mu and S_mu^*
    static Element s(Alphabet a, Word mu) { return monomial(a, std::move(mu), Word{}); }
    static Element s_star(Alphabet a, Word mu) { return monomial(a, Word{}, std::move(mu)); }
    // P_mu = S_mu S_mu^*
    static Element projection(Alphabet a, const Word& mu) { return monomial(a, mu, mu); }
    // Sum of P_mu over a prefix-free word set.
    static Element projection(const DiagonalProjection& p);

    Alphabet alphabet() const { return alphabet_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of a monomial (zero when absent).
    Scalar coefficient(const Monomial& m) const;

    // Adds c * m into the term map, pruning a resulting zero.
    void add_term(const Monomial& m, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(const Scalar& c, const Element& x);

    // Representation identity: same alphabet and identical term maps. For
    // equality in the algebra (modulo the defining relations) use equals().
    bool operator==(const Element&) const = default;

    // Largest |beta| over the terms (0 for the zero element).
    std::size_t max_beta_length() const;

private:
    Alphabet alphabet_;
    TermMap terms_;
};

Element star(const Element& x);

// Rewrites every degree-d term so that |beta| == targets.at(d), using
// S_alpha S_beta^* = sum over |nu|=k of S_{alpha nu} S_{beta nu}^*.
// Throws when a target is missing or below an existing |beta|.
Element expand_to_level(const Element& x, const std::map<int, int>& targets);
// Convenience: one common beta-length target for every degree present.
Element expand_beta_to(const Element& x, int target);

// Canonical representative: per degree, expand to the maximal beta-length
// present and merge, then collapse complete families
// { (a.i, b.i) : i = 1..n } with a common coefficient back to (a, b), to a
// fixpoint. Idempotent, and equal elements have identical normal forms.
Element normal_form(const Element& x);

// Equality in O_n for polynomial elements: normal_form(x - y) is empty.
bool equals(const Element& x, const Element& y);

// Partition of the terms by gauge degree. Components are homogeneous and sum
// to the original element.
std::map<int, Element> degree_split(const Element& x);

Homogeneity is_homogeneous(const Element& x);

// True iff every term has degree 0 (the zero element counts as core).
bool is_in_core(const Element& x);

// The unique normalized trace on the core: linear extension of
// tau(S_alpha S_beta^*) = n^-|alpha| when alpha == beta, else 0.
// Throws std::domain_error on non-core input.
Scalar trace(const Element& x);

// phi(x) = sum_i S_i x S_i^*, the canonical shift. Satisfies S_i x = phi(x) S_i.
Element phi_shift(const Element& x);

bool is_unitary(const Element& u);
bool is_projection(const Element& p);
bool is_partial_isometry(const Element& v);

}  // namespace cuntz
