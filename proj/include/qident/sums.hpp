#pragma once

/*
 * Summation engines.
 *
 * Finite hypercube sums work in any kernel.  The adaptive engines are
 * float-only: they enlarge the summation window geometrically and stop
 * when the aggregate absolute value of the newly added shell drops below
 * eps * max(1, |partial sum|).  Using absolute values in the stopping rule
 * keeps cancellation in an oscillating tail from faking convergence.
 *
 * Jackson integrals are lattice sums:
 *
 *   int_0^a f(t) d_q t = a (1-q) sum_{k>=0} f(a q^k) q^k
 *
 * and the multidimensional integral over [a_1,b_1] x ... x [a_r,b_r]
 * expands into 2^r corner sums, the corner c(S) picking a_i inside S and
 * b_i outside, weighted by prod_{i in S} (-a_i) prod_{i notin S} b_i and
 * (1-q)^r.  Corners with a zero weight are skipped outright, so a zero
 * lower endpoint never evaluates the integrand at t = 0.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "qident/qkernel.hpp"

namespace qident {

namespace detail {

/* odometer step over the box prod [lo_i, hi_i]; returns false after the
 * last point */
inline bool box_advance(std::vector<long>& kk, const std::vector<long>& lo,
                        const std::vector<long>& hi) {
	for (std::size_t i = kk.size(); i-- > 0;) {
		if (kk[i] < hi[i]) {
			++kk[i];
			return true;
		}
		kk[i] = lo[i];
	}
	return false;
}

inline long linf(const std::vector<long>& kk) {
	long m = 0;
	for (long k : kk)
		m = std::max(m, k >= 0 ? k : -k);
	return m;
}

} // namespace detail

/* sum of term(k) over the box 0 <= k_i <= bounds_i */
template <class T, class F>
T sum_finite(const std::vector<long>& bounds, F&& term) {
	if (bounds.empty())
		throw DomainError("sum_finite: empty bounds");
	for (long b : bounds)
		if (b < 0)
			throw DomainError("sum_finite: negative bound");
	std::vector<long> lo(bounds.size(), 0);
	std::vector<long> kk = lo;
	T acc = term(static_cast<const std::vector<long>&>(kk));
	while (detail::box_advance(kk, lo, bounds))
		acc = acc + term(static_cast<const std::vector<long>&>(kk));
	return acc;
}

/* sum of term(mask, k) over all 2^r subset masks and the box
 * 0 <= k_i <= bounds_i */
template <class T, class F>
T sum_over_subsets_finite(int r, const std::vector<long>& bounds, F&& term) {
	if (r < 1 || r > 30)
		throw DomainError("sum_over_subsets_finite: bad rank");
	T acc = sum_finite<T>(bounds, [&](const std::vector<long>& kk) { return term(0u, kk); });
	for (unsigned mask = 1; mask < (1u << r); ++mask)
		acc = acc + sum_finite<T>(bounds, [&](const std::vector<long>& kk) { return term(mask, kk); });
	return acc;
}

struct AdaptiveOpts {
	long first_window = 16;
	long max_window = 1 << 20;
};

namespace detail {

/* shared driver: sums term over the box [lo(M), M]^r through geometrically
 * growing windows; bilateral windows use lo(M) = -M.  Growth is kept mild
 * (about 5/4) because each enlargement pays the full new shell before the
 * stopping rule can confirm convergence, and in rank 3 the shell volume
 * grows with the cube of the window. */
template <class F, class G>
Cx adaptive_driver(const Kernel<Cx>& k, int r, bool bilateral, F&& term, G&& grow,
                   const AdaptiveOpts& opts) {
	if (r < 1)
		throw DomainError("adaptive sum: bad rank");
	Cx acc(0);
	Real absacc(0);
	long prev = -1; // window already summed: linf <= prev
	long M = opts.first_window;
	for (;;) {
		double pts = std::pow(bilateral ? 2.0 * M + 1 : M + 1.0, r);
		if (pts > static_cast<double>(k.max_terms))
			throw ConvergenceError("adaptive sum: term budget exhausted");
		grow(M);
		Real shell(0);
		std::vector<long> lo(static_cast<std::size_t>(r), bilateral ? -M : 0);
		std::vector<long> hi(static_cast<std::size_t>(r), M);
		std::vector<long> kk = lo;
		do {
			if (detail::linf(kk) <= prev)
				continue;
			Cx t = term(static_cast<const std::vector<long>&>(kk));
			acc = acc + t;
			shell += abs(t);
		} while (detail::box_advance(kk, lo, hi));
		Real scale = abs(acc);
		if (scale < 1)
			scale = 1;
		if (shell <= k.eps * scale)
			return acc;
		prev = M;
		M += std::max<long>(4, M / 4);
		if (M > opts.max_window)
			throw ConvergenceError("adaptive sum: window limit reached");
	}
}

inline void no_grow(long) {}

} // namespace detail

/* adaptive sum over the orthant k_i >= 0; grow(M) runs before each window
 * so table-backed terms can extend themselves */
template <class F, class G>
Cx sum_adaptive(const Kernel<Cx>& k, int r, F&& term, G&& grow, AdaptiveOpts opts = {}) {
	return detail::adaptive_driver(k, r, false, term, grow, opts);
}

template <class F>
Cx sum_adaptive(const Kernel<Cx>& k, int r, F&& term) {
	return detail::adaptive_driver(k, r, false, term, detail::no_grow, {});
}

/* adaptive bilateral sum over k in Z^r */
template <class F, class G>
Cx sum_bilateral(const Kernel<Cx>& k, int r, F&& term, G&& grow, AdaptiveOpts opts = {}) {
	return detail::adaptive_driver(k, r, true, term, grow, opts);
}

template <class F>
Cx sum_bilateral(const Kernel<Cx>& k, int r, F&& term) {
	return detail::adaptive_driver(k, r, true, term, detail::no_grow, {});
}

/* adaptive corner sums for term(mask, k) over all 2^r masks */
template <class F, class G>
Cx sum_over_subsets_adaptive(const Kernel<Cx>& k, int r, F&& term, G&& grow) {
	if (r < 1 || r > 30)
		throw DomainError("sum_over_subsets_adaptive: bad rank");
	Cx acc(0);
	for (unsigned mask = 0; mask < (1u << r); ++mask) {
		acc = acc + sum_adaptive(
		                k, r,
		                [&](const std::vector<long>& kk) { return term(mask, kk); },
		                [&](long M) { grow(mask, M); });
	}
	return acc;
}

/*
 * Multidimensional Jackson integral with a per-corner term factory:
 * make(mask, c) returns the lattice integrand g with g(k) = f(c_1 q^{k_1},
 * ..., c_r q^{k_r}); the driver supplies the q^{k_1 + ... + k_r} weight
 * and the corner prefactors.  The factory form lets evaluators back the
 * integrand with tables; use the plain overload below for a pointwise f.
 */
template <class Make>
Cx multi_q_integral_tabled(const Kernel<Cx>& k, const std::vector<Cx>& lo,
                           const std::vector<Cx>& hi, Make&& make) {
	const int r = static_cast<int>(lo.size());
	if (r < 1 || hi.size() != lo.size())
		throw DomainError("multi_q_integral: bad bounds");
	if (!(abs(k.q) < 1))
		throw DomainError("multi_q_integral: requires |q| < 1");
	GeomTable qs(k.q);
	Cx one_minus_q = Cx(1) - k.q;
	Cx total(0);
	for (unsigned mask = 0; mask < (1u << r); ++mask) {
		Cx pref = cx_pow(one_minus_q, r);
		std::vector<Cx> c(static_cast<std::size_t>(r));
		for (int i = 0; i < r; ++i) {
			if (mask >> i & 1u) {
				c[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
				pref = pref * (-lo[static_cast<std::size_t>(i)]);
			} else {
				c[static_cast<std::size_t>(i)] = hi[static_cast<std::size_t>(i)];
				pref = pref * hi[static_cast<std::size_t>(i)];
			}
		}
		if (is_zero(pref))
			continue;
		auto g = make(mask, c);
		Cx inner = sum_adaptive(
		    k, r,
		    [&](const std::vector<long>& kk) {
			    long s = 0;
			    for (long v : kk)
				    s += v;
			    return g.term(kk) * qs.at(s);
		    },
		    [&](long M) {
			    qs.ensure(static_cast<long>(r) * M);
			    g.grow(M);
		    });
		total = total + pref * inner;
	}
	return total;
}

namespace detail {

struct PointwiseIntegrand {
	std::function<Cx(const std::vector<Cx>&)> f;
	std::vector<Cx> c; // corner values; t_i = c_i q^{k_i}
	GeomTable qs;

	Cx term(const std::vector<long>& kk) {
		std::vector<Cx> t(kk.size());
		for (std::size_t i = 0; i < kk.size(); ++i)
			t[i] = c[i] * qs.at(kk[i]);
		return f(t);
	}

	void grow(long M) { qs.ensure(M); }
};

} // namespace detail

/* multidimensional Jackson integral of a pointwise integrand f(t) */
template <class F>
Cx multi_q_integral(const Kernel<Cx>& k, const std::vector<Cx>& lo, const std::vector<Cx>& hi,
                    F&& f) {
	return multi_q_integral_tabled(k, lo, hi, [&](unsigned, const std::vector<Cx>& c) {
		return detail::PointwiseIntegrand{f, c, GeomTable(k.q)};
	});
}

/* one-dimensional Jackson integrals */
template <class F>
Cx q_integral(const Kernel<Cx>& k, const Cx& a, const Cx& b, F&& f) {
	return multi_q_integral(k, std::vector<Cx>{a}, std::vector<Cx>{b},
	                        [&](const std::vector<Cx>& t) { return f(t[0]); });
}

template <class F>
Cx q_integral_0a(const Kernel<Cx>& k, const Cx& a, F&& f) {
	return q_integral(k, Cx(0), a, f);
}

} // namespace qident
