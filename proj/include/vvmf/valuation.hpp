#pragma once

#include <map>
#include <optional>
#include <vector>

#include "vvmf/mlde.hpp"
#include "vvmf/qseries.hpp"
#include "vvmf/repclass.hpp"

namespace vvmf {

bool is_prime(long p);

// p-adic valuation of a nonzero rational, sign included.
long nu_p(long p, const Rational& x);

// nu_p(n!) by Legendre: sum_{i>=1} floor(n / p^i)
long nu_p_factorial(long p, long n);

struct ValuationEntry {
    long n = 0;
    std::optional<long> actual;     // absent when a_n = 0
    std::optional<long> predicted;  // -nu_p(Q^n n!), present iff p | Q
    bool match() const {
        return !predicted || (actual && *actual == *predicted);
    }
};

struct ValuationTable {
    long prime = 0;
    int component = 0;
    ReprParams params;
    std::vector<ValuationEntry> entries;

    bool all_match() const;
    // index of the first mismatching n, if any
    std::optional<long> first_mismatch() const;
};

// Actual valuations of f's coefficients; predicted column filled when
// p | Q per nu_p(a_n) = -nu_p(Q^n n!).
ValuationTable valuation_table(long p, const QSeries& f,
                               const ReprParams& params, int component);

struct PrimeDenominatorStat {
    long prime = 0;
    long min_valuation = 0;
    long argmin = 0;              // first n attaining the minimum
    bool min_at_horizon = false;  // minimum attained at the last index
    bool strictly_decreasing = false;
};

struct UnboundedReport {
    long horizon = 0;
    std::vector<PrimeDenominatorStat> stats;
    std::vector<long> denominator_primes;  // primes in any denominator, n <= horizon
};

// Empirical denominator statistics; makes no claim for primes not
// dividing Q.
UnboundedReport detect_unbounded(const QSeries& f,
                                 const std::vector<long>& primes,
                                 long horizon);

struct AlphaF0Probe {
    long p = 0, s = 0;
    long lhs = 0;    // nu_p(c_{p^s}) of the product alpha * f1
    long rhs = 0;    // nu_p(b_0) - p^s - s
    bool holds = false;
};

// Quantitative denominator-growth inequality for the product alpha * F0
// (first component): nu_p(c_{p^s}) <= nu_p(b_0) - p^s - s. Requires p | Q
// and alpha's constant coefficient b_0 nonzero.
AlphaF0Probe probe_alpha_f0_bound(const QSeries& alpha,
                                  const ReprParams& params, long p, long s);

}  // namespace vvmf
