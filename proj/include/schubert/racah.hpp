#pragma once

#include "schubert/numeric.hpp"

#include <tuple>
#include <utility>
#include <vector>

namespace schubert {

/// R(k,n,T) = sum_{i=0}^{min(k,n)} (-1)^i
///   C(k,i) C(k+i,i) C(n,i) C(n+i,i) / ( C(T-1,i) C(T+i,i) ),
/// evaluated exactly. Requires 0 <= k, n <= T-1 so every inverse binomial in
/// range is nonzero.
Rational racah_exact(long k, long n, long T);

/// The same sum with generalized binomials C(x,i) = x(x-1)...(x-i+1)/i! and
/// rational k, n, running over i = 0..T-1 (C(T-1,i) vanishes beyond).
/// Agrees with racah_exact at integer k, n in [0, T-1].
Rational racah_real(const Rational& k, const Rational& n, long T);

/// sum_{i=0}^{k} (-1)^i T/(T+i) C(k,i) C(k+i,i).
Rational pfaff_saalschutz_lhs(long k, long T);

/// (1-T)(2-T)...(k-T) / ((1+T)(2+T)...(k+T)).
Rational pfaff_saalschutz_rhs(long k, long T);

/// H_k = 1 + 1/2 + ... + 1/k, exactly. Requires k >= 1.
Rational harmonic(long k);

/// All lattice values R(k,n,T) for 0 <= k,n <= T-1, row-major (k outer).
/// jobs > 1 splits rows across threads; the result does not depend on jobs.
std::vector<Rational> racah_grid(long T, int jobs = 1);

struct ScanReport {
    long T = 0;
    Rational max_abs;
    std::pair<long, long> argmax{0, 0};
    Rational min_val;
    std::pair<long, long> argmin{0, 0};
    /// exactly the lattice points with |R| > 1
    std::vector<std::tuple<long, long, Rational>> violations;
};

/// Exact scan of the full lattice [0,T-1]^2. Extremes are reported at the
/// first attaining point in row-major order; deterministic for any jobs.
ScanReport conjecture_scan(long T, int jobs = 1);

struct HodgeCheck {
    bool holds = false; // strict inequality lhs < rhs
    Rational lhs;       // sum_{k=1}^{T-1} (-1)^{k+1} R(k,n,T) H_k
    Rational rhs;       // sum_{k=1}^{T-1} H_k
};

/// Exact evaluation of both sides; equality is visible as !holds && lhs == rhs.
HodgeCheck hodge_inequality_check(long n, long T);

struct GridScanResult {
    Rational max_abs;
    std::pair<Rational, Rational> arg; // (k, n) attaining max_abs
};

/// Scans racah_real on the rational grid {lo, lo+step, ..., <= hi}^2.
/// Requires step > 0 and lo <= hi; deterministic for any jobs.
GridScanResult real_grid_scan(long T, const Rational& step, const Rational& lo,
                              const Rational& hi, int jobs = 1);

} // namespace schubert
