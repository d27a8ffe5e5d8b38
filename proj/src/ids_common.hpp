#pragma once

/*
 * Shared building blocks for the identity evaluators.  Everything here is
 * generic over the kernel so the same evaluator body serves the exact,
 * p-series and float backends; float-only series additionally use the
 * incremental tables at the bottom.
 *
 * register_* functions append their IdentityDef batch; the registry
 * assembles and orders the catalogue.
 */

#include <initializer_list>
#include <vector>

#include "qident/determinants.hpp"
#include "qident/registry.hpp"
#include "qident/sums.hpp"

namespace qident {
namespace ids {

void register_terminating_c(std::vector<IdentityDef>& out);
void register_terminating_a(std::vector<IdentityDef>& out);
void register_float(std::vector<IdentityDef>& out);
void register_subset(std::vector<IdentityDef>& out);

/* value_type shorthand for a kernel argument deduced as `const auto& k` */
template <class K>
using val_t = typename std::decay_t<K>::value_type;

/* unnormalized type-C pair product at unit spectral points:
 * prod_{i<j} diff(q^{k_i}, q^{k_j}) one_minus(a q^{k_i + k_j}) */
template <class K, class T = typename K::value_type>
T pairs_c(const K& k, const std::vector<long>& kk, const T& a) {
	const int r = static_cast<int>(kk.size());
	T acc = k.one();
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j) {
			acc = acc * k.diff(k.qpow(kk[i]), k.qpow(kk[j]));
			acc = acc * k.one_minus(a * k.qpow(kk[i] + kk[j]));
		}
	return acc;
}

/* x-deformed type-C pair product normalized by its k = 0 value:
 * prod_{i<j} diff(x_i q^{k_i}, x_j q^{k_j}) one_minus(a x_i x_j q^{k_i+k_j})
 *          / [ diff(x_i, x_j) one_minus(a x_i x_j) ] */
template <class K, class T = typename K::value_type>
T pairs_cx_norm(const K& k, const std::vector<long>& kk, const std::vector<T>& x, const T& a) {
	const int r = static_cast<int>(kk.size());
	T acc = k.one();
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j) {
			acc = acc * k.diff(x[i] * k.qpow(kk[i]), x[j] * k.qpow(kk[j]));
			acc = acc * k.one_minus(a * x[i] * x[j] * k.qpow(kk[i] + kk[j]));
			acc = acc * k.inv(k.diff(x[i], x[j]) * k.one_minus(a * x[i] * x[j]));
		}
	return acc;
}

/* prod_{i<j} 1 / [ diff(x_i, x_j) one_minus(a x_i x_j) ] */
template <class K, class T = typename K::value_type>
T pairs_cx0_inv(const K& k, const std::vector<T>& x, const T& a) {
	const int r = static_cast<int>(x.size());
	T acc = k.one();
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j)
			acc = acc * k.inv(k.diff(x[i], x[j]) * k.one_minus(a * x[i] * x[j]));
	return acc;
}

/* ratio of shifted-factorial products with a common shift */
template <class K, class T = typename K::value_type>
T qr(const K& k, std::initializer_list<T> num, std::initializer_list<T> den, long n) {
	/* a vanishing numerator kills the term regardless of the denominator;
	 * this is what makes summands past a terminating bound evaluate to
	 * zero instead of tripping the pole check on the same factor */
	T top = k.one();
	for (const T& a : num)
		top = top * qpoch(k, a, n);
	if (k.vanishes(top) && n >= 0)
		return k.from_rat(Rat(0));
	T bot = k.one();
	for (const T& a : den)
		bot = bot * qpoch(k, a, n);
	return top * k.inv(bot);
}

/* per-axis factor tables: w[i][kv] = axis(i, kv) for kv = 0..nb[i]; the
 * lattice term is then the pair coupling times a table lookup per axis */
template <class Axis>
auto tabulate_axes(const std::vector<long>& nb, Axis&& axis) {
	using T = std::decay_t<decltype(axis(0, 0L))>;
	std::vector<std::vector<T>> w(nb.size());
	for (std::size_t i = 0; i < nb.size(); ++i) {
		if (nb[i] < 0)
			throw DomainError("tabulate_axes: negative bound");
		w[i].reserve(static_cast<std::size_t>(nb[i]) + 1);
		for (long kv = 0; kv <= nb[i]; ++kv)
			w[i].push_back(axis(static_cast<int>(i), kv));
	}
	return w;
}

/* product over i = 1..r-1 of  prod (num)_i / prod (den)_i */
inline Cx ladder(const Kernel<Cx>& k, int r, std::initializer_list<Cx> num,
                 std::initializer_list<Cx> den) {
	Cx acc = k.one();
	for (int i = 1; i <= r - 1; ++i)
		acc = acc * qr(k, num, den, i);
	return acc;
}

/* ratio of infinite products  prod (num; q)_inf / prod (den; q)_inf */
inline Cx qir(const Kernel<Cx>& k, const std::vector<Cx>& num, const std::vector<Cx>& den) {
	Cx top = k.one();
	for (const Cx& a : num)
		top = top * k.qpoch_inf(a);
	Cx bot = k.one();
	for (const Cx& a : den)
		bot = bot * k.qpoch_inf(a);
	return top * k.inv(bot);
}

inline Cx qir(const Kernel<Cx>& k, std::initializer_list<Cx> num, std::initializer_list<Cx> den) {
	return qir(k, std::vector<Cx>(num), std::vector<Cx>(den));
}

/* one summation axis: prod (num; q)_n / prod (den; q)_n * arg^n, materialized
 * as a value array so the inner loop is one lookup and one multiply */
class AxisTable {
public:
	AxisTable(const Kernel<Cx>& k, std::vector<Cx> num, std::vector<Cx> den, const Cx& arg)
	    : q_(k.q), arg_(arg), nf_(std::move(num)), df_(std::move(den)) {
		if (is_zero(arg_))
			throw DomainError("axis table: zero argument");
		arginv_ = Cx(1) / arg_;
		nb_ = nf_;
		db_ = df_;
		for (auto& x : nb_)
			x = x / q_;
		for (auto& x : db_)
			x = x / q_;
		pos_.push_back(Cx(1));
		neg_.push_back(Cx(1));
	}

	void ensure(long M) {
		while (static_cast<long>(pos_.size()) <= M) {
			Cx top = arg_, bot(1);
			for (auto& x : nf_) {
				top = top * (Cx(1) - x);
				x = x * q_;
			}
			for (auto& x : df_) {
				bot = bot * (Cx(1) - x);
				x = x * q_;
			}
			if (is_zero(bot))
				throw PoleError("axis table: vanishing denominator factor", "1 - a q^n",
				                static_cast<long>(pos_.size()) - 1);
			pos_.push_back(pos_.back() * top / bot);
		}
	}

	/* negative side: (a; q)_{-m} = prod_{j=1}^{m} 1 / (1 - a q^{-j}), so the
	 * roles of numerator and denominator swap */
	void ensure_bilateral(long M) {
		ensure(M);
		while (static_cast<long>(neg_.size()) <= M) {
			Cx top = arginv_, bot(1);
			for (auto& x : db_) {
				top = top * (Cx(1) - x);
				x = x / q_;
			}
			for (auto& x : nb_) {
				bot = bot * (Cx(1) - x);
				x = x / q_;
			}
			if (is_zero(bot))
				throw PoleError("axis table: vanishing numerator factor at negative shift",
				                "1 - a q^{-m}", -static_cast<long>(neg_.size()));
			neg_.push_back(neg_.back() * top / bot);
		}
	}

	const Cx& at(long n) const {
		return n >= 0 ? pos_[static_cast<std::size_t>(n)] : neg_[static_cast<std::size_t>(-n)];
	}

private:
	Cx q_, arg_, arginv_;
	std::vector<Cx> nf_, df_, nb_, db_;
	std::vector<Cx> pos_, neg_;
};

/* one integrand axis: prod (num q^n; q)_inf / prod (den q^n; q)_inf,
 * materialized the same way; stepping n -> n+1 strips one factor from each
 * product.  A vanishing (den; q)_inf is rejected at construction, so the
 * iteration itself only ever divides by numerator factors. */
class InfAxisTable {
public:
	InfAxisTable(const Kernel<Cx>& k, std::vector<Cx> num, std::vector<Cx> den)
	    : q_(k.q), nf_(std::move(num)), df_(std::move(den)) {
		Cx v = k.one();
		for (const Cx& a : nf_)
			v = v * k.qpoch_inf(a);
		Cx bot = k.one();
		for (const Cx& a : df_)
			bot = bot * k.qpoch_inf(a);
		pos_.push_back(v * k.inv(bot));
	}

	void ensure(long M) {
		while (static_cast<long>(pos_.size()) <= M) {
			Cx top(1), bot(1);
			for (auto& x : df_) {
				top = top * (Cx(1) - x);
				x = x * q_;
			}
			for (auto& x : nf_) {
				bot = bot * (Cx(1) - x);
				x = x * q_;
			}
			if (is_zero(bot))
				throw PoleError("integrand table: vanishing numerator factor", "1 - a q^n",
				                static_cast<long>(pos_.size()) - 1);
			pos_.push_back(pos_.back() * top / bot);
		}
	}

	const Cx& at(long n) const { return pos_[static_cast<std::size_t>(n)]; }

private:
	Cx q_;
	std::vector<Cx> nf_, df_;
	std::vector<Cx> pos_;
};

/* modulus uniform in [lo, hi] with a rational tan-half-angle phase; stays
 * clear of libm so a seed draws the same point everywhere */
inline Cx rand_cx(Rng& g, double lo, double hi) {
	Real m(lo + (hi - lo) * g.unit());
	Rat u = g.small_rat(7);
	Real t = Real(numerator(u)) / Real(denominator(u));
	Real d = 1 + t * t;
	return Cx(m * (1 - t * t) / d, m * 2 * t / d);
}

inline void put(ParameterAssignment& pa, const std::string& name, std::vector<Cx> v) {
	std::vector<Scalar> s;
	for (auto& x : v)
		s.emplace_back(std::move(x));
	pa.values[name] = std::move(s);
}

/* both lattice weights carry prod_{i<j} (q^{k_i} - q^{k_j}), so any point
 * with a repeated coordinate contributes nothing */
inline bool repeated_coord(const std::vector<long>& kk) {
	const int r = static_cast<int>(kk.size());
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j)
			if (kk[i] == kk[j])
				return true;
	return false;
}

/* incremental (a; q)_n table, float kernel; ensure grows the n >= 0 side,
 * ensure_bilateral both sides (the negative side can hit a genuine pole, so
 * orthant sums must not touch it) */
class PochTable {
public:
	PochTable(const Kernel<Cx>& k, const Cx& a) : q_(k.q), a_(a) {
		pos_.push_back(Cx(1));
		neg_.push_back(Cx(1));
		fwd_ = a_;            // a q^n for the next forward factor
		bwd_ = a_ / q_;       // a q^{-m} for the next backward factor
	}

	void ensure(long M) {
		while (static_cast<long>(pos_.size()) <= M) {
			pos_.push_back(pos_.back() * (Cx(1) - fwd_));
			fwd_ = fwd_ * q_;
		}
	}

	void ensure_bilateral(long M) {
		ensure(M);
		while (static_cast<long>(neg_.size()) <= M) {
			Cx f = Cx(1) - bwd_;
			if (is_zero(f))
				throw PoleError("poch table: vanishing factor at negative shift",
				                "1 - a q^{-" + std::to_string(neg_.size()) + "}",
				                -static_cast<long>(neg_.size()));
			neg_.push_back(neg_.back() / f);
			bwd_ = bwd_ / q_;
		}
	}

	const Cx& at(long n) const {
		return n >= 0 ? pos_[static_cast<std::size_t>(n)] : neg_[static_cast<std::size_t>(-n)];
	}

private:
	Cx q_, a_, fwd_, bwd_;
	std::vector<Cx> pos_;
	std::vector<Cx> neg_;
};

/* incremental (a q^n; q)_inf table, float kernel; same split as PochTable
 * (here the pole sits on the n > 0 side) */
class InfPochTable {
public:
	InfPochTable(const Kernel<Cx>& k, const Cx& a) : q_(k.q), a_(a) {
		pos_.push_back(k.qpoch_inf(a));
		neg_.push_back(pos_[0]);
		fwd_ = a_;
		bwd_ = a_ / q_;
	}

	void ensure(long M) {
		while (static_cast<long>(pos_.size()) <= M) {
			Cx f = Cx(1) - fwd_;
			if (is_zero(f))
				throw PoleError("infinite product table: vanishing factor",
				                "1 - a q^{" + std::to_string(pos_.size() - 1) + "}",
				                static_cast<long>(pos_.size()) - 1);
			pos_.push_back(pos_.back() / f);
			fwd_ = fwd_ * q_;
		}
	}

	void ensure_bilateral(long M) {
		ensure(M);
		while (static_cast<long>(neg_.size()) <= M) {
			neg_.push_back(neg_.back() * (Cx(1) - bwd_));
			bwd_ = bwd_ / q_;
		}
	}

	const Cx& at(long n) const {
		return n >= 0 ? pos_[static_cast<std::size_t>(n)] : neg_[static_cast<std::size_t>(-n)];
	}

private:
	Cx q_, a_, fwd_, bwd_;
	std::vector<Cx> pos_;
	std::vector<Cx> neg_;
};

} // namespace ids
} // namespace qident
