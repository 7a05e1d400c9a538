#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cuntz/subalg.hpp"

namespace cuntz {

// The order-preserving bijection pairing (word of block h) x (suffix of
// length m) with the words of block j. Sources are listed in the order of
// their concatenations; targets are global word indices into the uniform spec.
struct PsiBijection {
    std::vector<std::pair<std::size_t, Word>> sources;  // (global index of mu_i, nu)
    std::vector<std::size_t> targets;                   // global index of mu_psi(i,nu)
};

// The unique exponent m with |block j| = |block h| * n^m, h = sigma(j).
int block_exponent(const UniformSpec& u, const PermSpec& sigma, std::size_t j);

// Requires |block j| = |block h| * n^m with m >= 0.
PsiBijection build_psi(const UniformSpec& u, std::size_t j, std::size_t h, int m);

// The partial isometry u_j with u_j u_j^* = e_j and u_j^* u_j = e_h,
// homogeneous of degree -m.
struct BlockIsometry {
    std::size_t j = 0;
    std::size_t h = 0;   // sigma(j)
    int exponent = 0;    // m with |block j| = |block h| * n^m
    Element u;
};

BlockIsometry build_block(const UniformSpec& u, const PermSpec& sigma, std::size_t j);

// The canonical normalizer unitary implementing sigma, as the sum of the
// block isometry adjoints. block_exponents[j] is the homogeneity degree of
// element * e_j; the trace of block sigma(j) is n^-block_exponents[j] times
// the trace of block j.
struct NormalizerUnitary {
    PermSpec sigma;
    Element element;
    std::vector<int> block_exponents;
};

// Builds U_sigma for an admissible sigma. The element is returned as the
// plain sum of the per-block terms (no collapsing), so its term list mirrors
// the construction; use normal_form for the canonical short representative.
NormalizerUnitary build_U_sigma(const AlgebraSpec& spec, const PermSpec& sigma);

// Outcome of a single verification condition. Failing checks carry a witness
// description naming the offending block or element.
struct CheckResult {
    bool pass = true;
    std::string witness;

    explicit operator bool() const { return pass; }
};

// U is unitary and conjugation by U maps every level-L matrix unit of every
// corner e_j F_n e_j into a single corner. L must be at least the uniform
// level of the spec.
CheckResult verify_U1(const Element& U, const AlgebraSpec& spec, int level);

// U e_j U^* == e_{sigma(j)} for every j.
CheckResult verify_U2(const Element& U, const AlgebraSpec& spec, const PermSpec& sigma);

// Every normal_form(U e_j) is a plain sum of monomials S_alpha S_beta^* with
// unit coefficients, one common degree, and matching alpha/beta orders.
CheckResult verify_U3(const Element& U, const AlgebraSpec& spec);

// U_sigma U_sigma' == U_{sigma sigma'} exactly.
bool group_law_check(const AlgebraSpec& spec, const PermSpec& sigma, const PermSpec& sigma2);

struct Factorization {
    Element w;       // block-diagonal unitary in A
    PermSpec sigma;  // with V = w * U_sigma
};

struct NotNormalizer {
    std::string reason;
    int failing_block = -1;       // 1-based; -1 when not block-specific
    std::string witness;          // rendered offending element, may be empty
};

using FactorizeResult = std::variant<Factorization, NotNormalizer>;

// Splits a unitary V as V = W U_sigma with W a block-diagonal unitary in A,
// or reports why V does not normalize A. The permutation is recovered by
// exact matching of V e_j V^* against the block projections.
FactorizeResult factorize(const Element& V, const AlgebraSpec& spec, int level = -1);

// The homogeneity exponent of U e for a unitary with U (e F_n e) U^* = f F_n f;
// checks the corner mapping on level-L matrix units, the trace identity
// tau(f)/tau(e) = n^-m, and the per-sign core witnesses. Throws
// std::invalid_argument or std::domain_error when a hypothesis fails.
int lemma1_check(const Element& U, const DiagonalProjection& e, const DiagonalProjection& f,
                 int level = -1);

// For specs whose blocks are single words: sum of S_{mu_sigma(j)} S_{mu_j}^*.
// Agrees with build_U_sigma under equals.
Element example3_unitary(const AlgebraSpec& spec, const PermSpec& sigma);

}  // namespace cuntz
