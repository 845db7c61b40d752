#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vvmf/rational.hpp"

namespace vvmf {

struct InvalidTriple : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic data of a representation with exponents m1 = a/N, m2 = b/N.
// Derived quantities: c = gcd(a-b, N), a-b = c*d, N = c*M (projective
// level), Q = M / gcd(M, 60), k0 = 6(m1+m2) - 1, kappa1 = (1-36(m1-m2)^2)/144.
struct ReprParams {
    long a = 0, b = 0, N = 0;
    long c = 0, d = 0, M = 0, Q = 0;
    Rational m1, m2;
    Rational k0, kappa1;
};

// Requires N > a > b >= 0 and gcd(a, b, N) = 1.
ReprParams derive_params(long a, long b, long N);

struct LemmaCheck {
    std::string name;       // e.g. "Lemma3.3a"
    std::string statement;  // e.g. "N | 6(a+b)"
    bool pass = false;
};

struct ClassificationReport {
    ReprParams params;
    std::vector<LemmaCheck> lemma_checks;
    bool all_constraints_pass = false;
    bool modular = false;        // exactly M <= 5
    bool excluded = false;       // M = 6 cannot occur
    std::string excluded_reason;
    std::vector<long> q_primes;  // primes dividing Q
};

ClassificationReport check_constraints(const ReprParams& p);

// All (M, N) pairs admitting a constraint-satisfying triple with M | 60,
// M > 5. Derived from the constraints, not hard-coded; there are 13.
std::vector<std::pair<long, long>> enumerate_pairs();

// All constraint-satisfying triples (a, b, N), optionally restricted to a
// derived (M, N) pair. Without a filter, N runs over 2..max_level.
std::vector<ReprParams> enumerate_triples(
    std::optional<std::pair<long, long>> pair_filter, long max_level = 120);

std::vector<long> prime_factors(long n);

}  // namespace vvmf
