#include "schubert/racah.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace schubert {

Rational racah_exact(long k, long n, long T) {
    if (T < 1 || k < 0 || n < 0 || k > T - 1 || n > T - 1) {
        throw std::invalid_argument("racah_exact: need 0 <= k, n <= T-1");
    }
    // Term-ratio form of the sum: t_0 = 1 and
    // t_{i+1} = -t_i (k-i)(k+i+1)(n-i)(n+i+1) / ((i+1)^2 (T-1-i)(T+i+1)).
    Rational sum = 1;
    Rational t = 1;
    const long m = std::min(k, n);
    for (long i = 0; i < m; ++i) {
        t *= Rational(-Int(k - i) * (k + i + 1) * (n - i) * (n + i + 1),
                      Int(i + 1) * (i + 1) * (T - 1 - i) * (T + i + 1));
        sum += t;
    }
    return sum;
}

Rational racah_real(const Rational& k, const Rational& n, long T) {
    if (T < 1) {
        throw std::invalid_argument("racah_real: need T >= 1");
    }
    Rational sum = 1;
    Rational t = 1;
    for (long i = 0; i + 1 <= T - 1; ++i) {
        t *= (k - i) * (k + i + 1) * (n - i) * (n + i + 1);
        if (t == 0) {
            break; // a falling factorial hit zero; every later term is zero too
        }
        t /= Rational(Int(i + 1) * (i + 1) * (T - 1 - i) * (T + i + 1));
        t = -t;
        sum += t;
    }
    return sum;
}

Rational pfaff_saalschutz_lhs(long k, long T) {
    if (T < 1 || k < 0) {
        throw std::invalid_argument("pfaff_saalschutz_lhs: need T >= 1 and k >= 0");
    }
    // t_{i+1} = -t_i (T+i)/(T+i+1) * (k-i)(k+i+1)/(i+1)^2, t_0 = 1
    Rational sum = 1;
    Rational t = 1;
    for (long i = 0; i < k; ++i) {
        t *= Rational(-Int(T + i) * (k - i) * (k + i + 1),
                      Int(T + i + 1) * (i + 1) * (i + 1));
        sum += t;
    }
    return sum;
}

Rational pfaff_saalschutz_rhs(long k, long T) {
    if (T < 1 || k < 0) {
        throw std::invalid_argument("pfaff_saalschutz_rhs: need T >= 1 and k >= 0");
    }
    Rational prod = 1;
    for (long j = 1; j <= k; ++j) {
        prod *= Rational(Int(j - T), Int(j + T));
    }
    return prod;
}

Rational harmonic(long k) {
    if (k < 1) {
        throw std::invalid_argument("harmonic: need k >= 1");
    }
    Rational h = 0;
    for (long i = 1; i <= k; ++i) {
        h += Rational(1, i);
    }
    return h;
}

namespace {

// Runs fn(row) for row = 0..rows-1, split across jobs threads. Each call
// writes only its own slice of preallocated output, so the result is
// identical for any jobs value.
template <typename Fn>
void parallel_rows(long rows, int jobs, Fn fn) {
    jobs = std::max(1, jobs);
    if (jobs == 1 || rows <= 1) {
        for (long r = 0; r < rows; ++r) {
            fn(r);
        }
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([t, rows, jobs, &fn] {
            for (long r = t; r < rows; r += jobs) {
                fn(r);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
}

} // namespace

std::vector<Rational> racah_grid(long T, int jobs) {
    if (T < 1) {
        throw std::invalid_argument("racah_grid: need T >= 1");
    }
    std::vector<Rational> values(static_cast<std::size_t>(T) * T);
    parallel_rows(T, jobs, [&](long k) {
        for (long n = 0; n < T; ++n) {
            values[static_cast<std::size_t>(k) * T + n] = racah_exact(k, n, T);
        }
    });
    return values;
}

ScanReport conjecture_scan(long T, int jobs) {
    std::vector<Rational> values = racah_grid(T, jobs);
    ScanReport rep;
    rep.T = T;
    rep.max_abs = 0;
    rep.min_val = values[0];
    for (long k = 0; k < T; ++k) {
        for (long n = 0; n < T; ++n) {
            const Rational& v = values[static_cast<std::size_t>(k) * T + n];
            Rational av = v < 0 ? Rational(-v) : v;
            if (av > rep.max_abs) {
                rep.max_abs = av;
                rep.argmax = {k, n};
            }
            if (v < rep.min_val) {
                rep.min_val = v;
                rep.argmin = {k, n};
            }
            if (av > 1) {
                rep.violations.emplace_back(k, n, v);
            }
        }
    }
    return rep;
}

HodgeCheck hodge_inequality_check(long n, long T) {
    if (T < 2 || n < 0 || n > T - 1) {
        throw std::invalid_argument("hodge_inequality_check: need T >= 2 and 0 <= n <= T-1");
    }
    HodgeCheck out;
    Rational hk = 0;
    for (long k = 1; k <= T - 1; ++k) {
        hk += Rational(1, k);
        Rational r = racah_exact(k, n, T);
        out.lhs += k % 2 ? r * hk : -r * hk;
        out.rhs += hk;
    }
    out.holds = out.lhs < out.rhs;
    return out;
}

GridScanResult real_grid_scan(long T, const Rational& step, const Rational& lo,
                              const Rational& hi, int jobs) {
    if (T < 1 || step <= 0 || lo > hi) {
        throw std::invalid_argument("real_grid_scan: need T >= 1, step > 0, lo <= hi");
    }
    // points lo, lo+step, ..., the last one <= hi
    Rational span = (hi - lo) / step;
    long count = static_cast<long>(Int(numerator(span) / denominator(span))) + 1;
    std::vector<Rational> points(static_cast<std::size_t>(count));
    for (long t = 0; t < count; ++t) {
        points[static_cast<std::size_t>(t)] = lo + t * step;
    }
    std::vector<Rational> row_max(static_cast<std::size_t>(count));
    std::vector<std::pair<long, long>> row_arg(static_cast<std::size_t>(count));
    parallel_rows(count, jobs, [&](long ik) {
        Rational best = -1;
        std::pair<long, long> arg{ik, 0};
        for (long in = 0; in < count; ++in) {
            Rational v = racah_real(points[static_cast<std::size_t>(ik)],
                                    points[static_cast<std::size_t>(in)], T);
            if (v < 0) {
                v = -v;
            }
            if (v > best) {
                best = v;
                arg = {ik, in};
            }
        }
        row_max[static_cast<std::size_t>(ik)] = best;
        row_arg[static_cast<std::size_t>(ik)] = arg;
    });
    long best_row = 0;
    for (long r = 1; r < count; ++r) {
        if (row_max[static_cast<std::size_t>(r)] > row_max[static_cast<std::size_t>(best_row)]) {
            best_row = r;
        }
    }
    GridScanResult out;
    out.max_abs = row_max[static_cast<std::size_t>(best_row)];
    auto [ik, in] = row_arg[static_cast<std::size_t>(best_row)];
    out.arg = {points[static_cast<std::size_t>(ik)], points[static_cast<std::size_t>(in)]};
    return out;
}

} // namespace schubert
