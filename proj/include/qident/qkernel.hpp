#pragma once

/*
 * Evaluation kernels.
 *
 * A Kernel<T> bundles the base q (and, where it applies, the nome p and
 * the float-mode thresholds) with the elementary operations every identity
 * evaluator is written against:
 *
 *   one(), from_rat(v), qpow(e), pow(x,e)   plumbing
 *   one_minus(x)                            1 - x, or its theta analogue
 *   diff(u,v)                               u - v, or  u * theta(v/u)
 *   theta(x)                                theta(x) = (x; p)_inf (p/x; p)_inf
 *
 * The point of the design: an evaluator written once against these ops
 * computes the basic identity under Kernel<Rat> / Kernel<Cx> and the
 * theta-function analogue under Kernel<PSeries>, because every difference
 * and every (1 - x) factor passes through diff / one_minus.  Plain
 * q-powers and signed q-binomial prefactors stay untouched, which is
 * exactly the substitution discipline the theta analogues require.
 *
 * On top of the kernels sit the shifted factorials:
 *
 *   qpoch(k, a, n)      (a; q)_n, negative n via  1 / (a q^-1 ... )
 *   epoch(k, a, n)      product of theta(a q^j); equals qpoch bit for bit
 *                       whenever the nome is zero
 *   qpoch_inf(k, a)     (a; q)_inf, float kernel only
 *
 * and the lattice weights lattice_factor_c / lattice_factor_a.
 */

#include <string>
#include <vector>

#include "qident/context.hpp"
#include "qident/scalar.hpp"

namespace qident {

template <class T>
struct Kernel;

template <>
struct Kernel<Rat> {
	using value_type = Rat;
	static constexpr Mode mode = Mode::exact;

	Rat q;

	Rat one() const { return Rat(1); }
	Rat from_rat(const Rat& v) const { return v; }
	Rat qpow(long e) const { return rat_pow(q, e); }
	Rat pow(const Rat& x, long e) const { return rat_pow(x, e); }
	Rat one_minus(const Rat& x) const { return 1 - x; }
	Rat diff(const Rat& u, const Rat& v) const { return u - v; }
	bool vanishes(const Rat& x) const { return x == 0; }

	Rat theta(const Rat& x) const {
		if (x == 0)
			throw DomainError("theta: argument must be nonzero");
		return 1 - x;
	}

	Rat inv(const Rat& x) const {
		if (x == 0)
			throw PoleError("reciprocal of zero", "1/x", 0);
		return Rat(1) / x;
	}
};

template <>
struct Kernel<PSeries> {
	using value_type = PSeries;
	static constexpr Mode mode = Mode::pseries;

	Rat q;
	unsigned K = 8;

	PSeries one() const { return PSeries::constant(Rat(1), K); }
	PSeries from_rat(const Rat& v) const { return PSeries::constant(v, K); }
	PSeries qpow(long e) const { return from_rat(rat_pow(q, e)); }

	PSeries pow(const PSeries& x, long e) const {
		PSeries b = e < 0 ? inv(x) : x;
		long n = e < 0 ? -e : e;
		PSeries acc = one();
		while (n > 0) {
			if (n & 1)
				acc = acc * b;
			b = b * b;
			n >>= 1;
		}
		return acc;
	}

	/* theta(x) = prod_{j=0}^{K-1} (1 - x p^j)(1 - p^{j+1}/x), exact to
	 * order K: every dropped factor is 1 + O(p^K) */
	PSeries theta(const PSeries& x) const {
		if (x.order() != K)
			throw DomainError("theta: series order mismatch");
		if (x.c[0] == 0)
			throw DomainError("theta: argument must be a unit series");
		PSeries acc = one();
		PSeries xi = pseries_inv(x);
		for (unsigned j = 0; j < K; ++j) {
			acc = acc * (one() - pseries_shift(x, j));
			acc = acc * (one() - pseries_shift(xi, j + 1));
		}
		return acc;
	}

	PSeries one_minus(const PSeries& x) const { return theta(x); }

	PSeries diff(const PSeries& u, const PSeries& v) const {
		return u * theta(v / u);
	}

	bool vanishes(const PSeries& x) const { return x.order() == 0 || x.c[0] == 0; }

	PSeries inv(const PSeries& x) const {
		if (vanishes(x))
			throw PoleError("reciprocal of a series vanishing at p=0", "1/x", 0);
		return pseries_inv(x);
	}
};

template <>
struct Kernel<Cx> {
	using value_type = Cx;
	static constexpr Mode mode = Mode::floating;

	Cx q;
	Cx p;          // zero except when probing theta numerically
	Real eps;      // truncation threshold for infinite products and tails
	std::uint64_t max_terms = 50000000;

	Cx one() const { return Cx(1); }
	Cx from_rat(const Rat& v) const { return Cx(Real(numerator(v)) / Real(denominator(v))); }
	Cx qpow(long e) const { return cx_pow(q, e); }
	Cx pow(const Cx& x, long e) const { return cx_pow(x, e); }
	Cx one_minus(const Cx& x) const { return Cx(1) - x; }
	Cx diff(const Cx& u, const Cx& v) const { return u - v; }
	bool vanishes(const Cx& x) const { return is_zero(x); }

	Cx inv(const Cx& x) const {
		if (is_zero(x))
			throw PoleError("reciprocal of zero", "1/x", 0);
		return Cx(1) / x;
	}

	/* (a; q)_inf, truncated once |a q^j| < eps with at least 16 factors */
	Cx qpoch_inf(const Cx& a) const {
		if (!(abs(q) < 1))
			throw DomainError("qpoch_inf: requires |q| < 1");
		Cx acc(1);
		Cx aj = a;
		for (unsigned long j = 0;; ++j) {
			if (j >= 16 && abs(aj) < eps)
				return acc;
			if (j > 1000000)
				throw ConvergenceError("qpoch_inf: no decay after 1e6 factors");
			acc = acc * (Cx(1) - aj);
			aj = aj * q;
		}
	}

	Cx theta(const Cx& x) const {
		if (is_zero(x))
			throw DomainError("theta: argument must be nonzero");
		if (is_zero(p))
			return Cx(1) - x;
		if (!(abs(p) < 1))
			throw DomainError("theta: requires |p| < 1");
		Cx acc(1);
		Cx u = x;        // x p^j
		Cx v = p / x;    // p^{j+1} / x
		for (unsigned long j = 0;; ++j) {
			if (j >= 16 && abs(u) < eps && abs(v) < eps)
				return acc;
			if (j > 1000000)
				throw ConvergenceError("theta: no decay after 1e6 factors");
			acc = acc * (Cx(1) - u) * (Cx(1) - v);
			u = u * p;
			v = v * p;
		}
	}
};

inline Kernel<Rat> kernel_rat(const QContext& ctx) { return Kernel<Rat>{ctx.q_rat}; }

inline Kernel<PSeries> kernel_ps(const QContext& ctx) {
	return Kernel<PSeries>{ctx.q_rat, ctx.order};
}

inline Kernel<Cx> kernel_cx(const QContext& ctx) {
	Kernel<Cx> k{ctx.q_cx, ctx.p_cx, ctx.epsilon, ctx.max_terms};
	if (k.eps.is_zero())
		k.eps = default_epsilon(ctx.precision_bits);
	return k;
}

/* run f against the kernel matching ctx.mode; f must be generic in the
 * kernel type and return the same type for all three instantiations */
template <class F>
auto dispatch(const QContext& ctx, F&& f) {
	switch (ctx.mode) {
	case Mode::exact:
		return f(kernel_rat(ctx));
	case Mode::pseries:
		return f(kernel_ps(ctx));
	case Mode::floating:
		return f(kernel_cx(ctx));
	}
	throw DomainError("dispatch: bad mode");
}

/*
 * (a; q)_n.  For n < 0 the standard convention
 *   (a; q)_{-m} = 1 / prod_{l=1..m} (1 - a q^{-l})
 * applies; a vanishing factor there is a pole and is reported with the
 * offending shift.  Under the p-series kernel every factor is a theta,
 * so this is the elliptic shifted factorial automatically.
 */
template <class K>
typename K::value_type qpoch(const K& k, const typename K::value_type& a, long n) {
	using T = typename K::value_type;
	T acc = k.one();
	if (n >= 0) {
		for (long j = 0; j < n; ++j)
			acc = acc * k.one_minus(a * k.qpow(j));
		return acc;
	}
	for (long l = 1; l <= -n; ++l) {
		T f = k.one_minus(a * k.qpow(-l));
		if (k.vanishes(f))
			throw PoleError("qpoch: vanishing factor at negative shift",
			                "1 - a q^{-" + std::to_string(l) + "}", -l);
		acc = acc * f;
	}
	return k.inv(acc);
}

/* explicit theta-factorial form; identical to qpoch whenever p = 0 */
template <class K>
typename K::value_type epoch(const K& k, const typename K::value_type& a, long n) {
	using T = typename K::value_type;
	T acc = k.one();
	if (n >= 0) {
		for (long j = 0; j < n; ++j)
			acc = acc * k.theta(a * k.qpow(j));
		return acc;
	}
	for (long l = 1; l <= -n; ++l) {
		T f = k.theta(a * k.qpow(-l));
		if (k.vanishes(f))
			throw PoleError("epoch: vanishing factor at negative shift",
			                "theta(a q^{-" + std::to_string(l) + "})", -l);
		acc = acc * f;
	}
	return k.inv(acc);
}

/* product of qpoch over a list of bases, all with the same shift */
template <class K>
typename K::value_type qpoch_all(const K& k,
                                 std::initializer_list<typename K::value_type> bases,
                                 long n) {
	typename K::value_type acc = k.one();
	for (const auto& a : bases)
		acc = acc * qpoch(k, a, n);
	return acc;
}

/*
 * Symplectic-type lattice weight: for offsets kk and spectral points x,
 *
 *   prod_{i<j} diff(x_i q^{k_i}, x_j q^{k_j}) one_minus(a x_i x_j q^{k_i+k_j})
 *   * prod_i one_minus(a x_i^2 q^{2 k_i})
 *
 * including the diagonal factor.
 */
template <class K>
typename K::value_type lattice_factor_c(const K& k, const std::vector<long>& kk,
                                        const std::vector<typename K::value_type>& x,
                                        const typename K::value_type& a) {
	using T = typename K::value_type;
	if (kk.size() != x.size())
		throw DomainError("lattice_factor_c: size mismatch");
	const std::size_t r = kk.size();
	T acc = k.one();
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j) {
			acc = acc * k.diff(x[i] * k.qpow(kk[i]), x[j] * k.qpow(kk[j]));
			acc = acc * k.one_minus(a * x[i] * x[j] * k.qpow(kk[i] + kk[j]));
		}
	for (std::size_t i = 0; i < r; ++i)
		acc = acc * k.one_minus(a * x[i] * x[i] * k.qpow(2 * kk[i]));
	return acc;
}

/* linear-type lattice weight: prod_{i<j} diff(q^{k_i}, q^{k_j}) */
template <class K>
typename K::value_type lattice_factor_a(const K& k, const std::vector<long>& kk) {
	using T = typename K::value_type;
	const std::size_t r = kk.size();
	T acc = k.one();
	for (std::size_t i = 0; i < r; ++i)
		for (std::size_t j = i + 1; j < r; ++j)
			acc = acc * k.diff(k.qpow(kk[i]), k.qpow(kk[j]));
	return acc;
}

/* z^k lookup for k in [-M, M]; grows on demand */
class GeomTable {
public:
	explicit GeomTable(const Cx& z) : z_(z) {
		if (is_zero(z))
			throw DomainError("GeomTable: zero base");
		zinv_ = Cx(1) / z;
		pos_.push_back(Cx(1));
		neg_.push_back(Cx(1));
	}

	void ensure(long M) {
		while (static_cast<long>(pos_.size()) <= M)
			pos_.push_back(pos_.back() * z_);
		while (static_cast<long>(neg_.size()) <= M)
			neg_.push_back(neg_.back() * zinv_);
	}

	const Cx& at(long e) const { return e >= 0 ? pos_[static_cast<std::size_t>(e)]
	                                           : neg_[static_cast<std::size_t>(-e)]; }

private:
	Cx z_, zinv_;
	std::vector<Cx> pos_, neg_;
};

} // namespace qident
