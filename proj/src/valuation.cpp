#include "vvmf/valuation.hpp"

#include <algorithm>
#include <set>

namespace vvmf {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long nu_p(long p, const Rational& x) {
    if (!is_prime(p)) throw DomainError("nu_p: p must be prime");
    if (x == 0) throw DomainError("nu_p(0) is undefined");
    Integer pz(p), rest;
    long num = mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), pz.get_mpz_t());
    long den = mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), pz.get_mpz_t());
    return num - den;
}

long nu_p_factorial(long p, long n) {
    if (!is_prime(p)) throw DomainError("nu_p_factorial: p must be prime");
    if (n < 0) throw DomainError("nu_p_factorial: n must be >= 0");
    long total = 0;
    for (long q = p; q <= n; q *= p) {
        total += n / q;
        if (q > n / p) break;  // q * p would overflow past n anyway
    }
    return total;
}

bool ValuationTable::all_match() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const ValuationEntry& e) { return e.match(); });
}

std::optional<long> ValuationTable::first_mismatch() const {
    for (const auto& e : entries)
        if (!e.match()) return e.n;
    return std::nullopt;
}

ValuationTable valuation_table(long p, const QSeries& f,
                               const ReprParams& params, int component) {
    if (!is_prime(p)) throw DomainError("valuation_table: p must be prime");
    ValuationTable t;
    t.prime = p;
    t.component = component;
    t.params = params;
    bool predicted = params.Q % p == 0;
    long nu_q = predicted ? nu_p(p, Rational(params.Q)) : 0;
    for (long n = 0; n <= f.order(); ++n) {
        ValuationEntry e;
        e.n = n;
        if (f.coeff(n) != 0) e.actual = nu_p(p, f.coeff(n));
        if (predicted) e.predicted = -(n * nu_q + nu_p_factorial(p, n));
        t.entries.push_back(e);
    }
    return t;
}

UnboundedReport detect_unbounded(const QSeries& f,
                                 const std::vector<long>& primes,
                                 long horizon) {
    if (horizon > f.order())
        throw DomainError("detect_unbounded: horizon exceeds series order");
    UnboundedReport rep;
    rep.horizon = horizon;
    for (long p : primes) {
        PrimeDenominatorStat st;
        st.prime = p;
        bool seen = false, strict = true;
        long prev = 0;
        for (long n = 0; n <= horizon; ++n) {
            if (f.coeff(n) == 0) {
                strict = false;
                continue;
            }
            long v = nu_p(p, f.coeff(n));
            if (seen && v >= prev) strict = false;
            if (!seen || v < st.min_valuation) {
                st.min_valuation = v;
                st.argmin = n;
            }
            prev = v;
            seen = true;
        }
        st.min_at_horizon = seen && st.argmin == horizon;
        st.strictly_decreasing = seen && strict;
        rep.stats.push_back(st);
    }
    // Factor the radical of lcm of all denominators. The prime factors all
    // come from the recursion denominators n*c*(Mn +/- d), so trial
    // division by small primes suffices.
    std::set<long> denom_primes;
    Integer acc = 1;
    for (long n = 0; n <= horizon; ++n)
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(),
                f.coeff(n).get_den_mpz_t());
    for (long q = 2; acc > 1; q == 2 ? q = 3 : q += 2) {
        if (Integer(q) * q > acc) {
            if (acc.fits_slong_p()) denom_primes.insert(acc.get_si());
            break;
        }
        if (mpz_divisible_ui_p(acc.get_mpz_t(), q)) {
            denom_primes.insert(q);
            while (mpz_divisible_ui_p(acc.get_mpz_t(), q)) acc /= q;
        }
    }
    rep.denominator_primes.assign(denom_primes.begin(), denom_primes.end());
    return rep;
}

AlphaF0Probe probe_alpha_f0_bound(const QSeries& alpha,
                                  const ReprParams& params, long p, long s) {
    if (!is_prime(p) || params.Q % p != 0)
        throw DomainError("probe requires a prime p dividing Q");
    if (s < 1) throw DomainError("probe requires s >= 1");
    if (alpha.offset() != 0 || alpha.coeff(0) == 0)
        throw DomainError("alpha must have a nonzero constant coefficient");

    long ps = 1;
    for (long i = 0; i < s; ++i) ps *= p;
    if (alpha.order() < ps)
        throw DomainError("alpha truncated below order p^s");

    QSeries f1 = f0_direct(params, 1, static_cast<int>(ps));
    Rational c_ps = 0;  // coefficient of q^{m1 + p^s} in alpha * f1
    for (long j = 0; j <= ps; ++j) c_ps += alpha.coeff(ps - j) * f1.coeff(j);

    AlphaF0Probe probe;
    probe.p = p;
    probe.s = s;
    probe.lhs = nu_p(p, c_ps);
    probe.rhs = nu_p(p, alpha.coeff(0)) - ps - s;
    probe.holds = probe.lhs <= probe.rhs;
    return probe;
}

}  // namespace vvmf
