#pragma once

#include <string>

#include "cuntz/normalizer.hpp"
#include "cuntz/subalg.hpp"

namespace cuntz {

// File and flag formats. All serialization is deterministic: the same value
// always produces the same bytes.

// Spec files: { "n": int, "blocks": [ [[1,1],[2,1]], ... ] }.
// Parsing validates the schema only; algebraic validity is validate_spec's job.
// Throws std::runtime_error with a description on malformed input.
AlgebraSpec spec_from_json(const std::string& text);
std::string spec_to_json(const AlgebraSpec& spec);
AlgebraSpec load_spec(const std::string& path);

// Permutation flags: "1:3,2:2,3:1" means sigma(1)=3, sigma(2)=2, sigma(3)=1.
// Every block 1..k must appear exactly once on the left, the images must be a
// permutation of 1..k. Throws std::runtime_error on malformed input.
PermSpec parse_perm(const std::string& text, std::size_t k);
std::string format_perm(const PermSpec& sigma);

// Unitary files: { "sigma": [1-based images], "element": canonical element
// text, "block_exponents": [...] }.
std::string unitary_to_json(const NormalizerUnitary& u);
NormalizerUnitary unitary_from_json(const std::string& text, Alphabet alphabet);

}  // namespace cuntz
