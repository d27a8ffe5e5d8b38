#pragma once

/*
 * Scalar backends.
 *
 * Four coefficient domains:
 *
 *   Rat      exact rationals (GMP), for terminating sums
 *   Real     arbitrary-precision reals (MPFR, precision fixed at runtime)
 *   Cx       complex numbers over Real
 *   PSeries  truncated power series  c[0] + c[1] p + ... + c[K-1] p^{K-1}
 *            in the nome p, with exact rational coefficients
 *
 * Scalar is the tagged union crossing the public API; evaluation kernels
 * work on the concrete types.  Expression templates are switched off so
 * intermediate values behave like plain value types.
 */

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qident/errors.hpp"

namespace qident {

using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/* Safe two-argument rational constructor.  The underlying number type
 * mis-handles negative denominators when given two integer arguments, so
 * all construction goes through an explicit division, which also
 * canonicalises the result. */
inline Rat rat(long long num, long long den = 1) {
	if (den == 0)
		throw DomainError("rat: zero denominator");
	return Rat(num) / Rat(den);
}

Rat rat_pow(const Rat& base, long e);

inline long long binom2(long long n) { return n * (n - 1) / 2; }
inline long long binom3(long long n) { return n * (n - 1) * (n - 2) / 6; }

/*
 * Complex numbers over Real.  Only the handful of operations the engine
 * needs; no attempt to mirror std::complex.
 */
struct Cx {
	Real re, im;

	Cx() : re(0), im(0) {}
	Cx(Real r) : re(std::move(r)), im(0) {}
	Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
	Cx(int v) : re(v), im(0) {}
	Cx(long v) : re(v), im(0) {}
};

inline Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cx operator-(const Cx& a) { return {-a.re, -a.im}; }

inline Cx operator*(const Cx& a, const Cx& b) {
	return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

inline Real norm2(const Cx& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Cx& a) { return boost::multiprecision::hypot(a.re, a.im); }
inline Cx conj(const Cx& a) { return {a.re, -a.im}; }
inline bool is_zero(const Cx& a) { return a.re.is_zero() && a.im.is_zero(); }

inline Cx operator/(const Cx& a, const Cx& b) {
	Real n = norm2(b);
	if (n.is_zero())
		throw DomainError("complex division by zero");
	return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

inline bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
inline bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

Cx cx_pow(const Cx& base, long e);

/*
 * Truncated power series in the nome p.  All arithmetic is performed at a
 * fixed order K = c.size(); mixing orders is a usage bug and is rejected.
 */
struct PSeries {
	std::vector<Rat> c;

	PSeries() = default;
	explicit PSeries(std::size_t order) : c(order) {}
	PSeries(std::initializer_list<Rat> init) : c(init) {}

	static PSeries constant(const Rat& v, std::size_t order) {
		PSeries s(order);
		if (order > 0)
			s.c[0] = v;
		return s;
	}

	std::size_t order() const { return c.size(); }
	bool is_zero() const {
		for (const Rat& x : c)
			if (x != 0)
				return false;
		return true;
	}
};

PSeries operator+(const PSeries& a, const PSeries& b);
PSeries operator-(const PSeries& a, const PSeries& b);
PSeries operator-(const PSeries& a);
PSeries pseries_mul(const PSeries& a, const PSeries& b);
inline PSeries operator*(const PSeries& a, const PSeries& b) { return pseries_mul(a, b); }

/* reciprocal; requires a nonzero constant term */
PSeries pseries_inv(const PSeries& a);
inline PSeries operator/(const PSeries& a, const PSeries& b) { return pseries_mul(a, pseries_inv(b)); }

bool operator==(const PSeries& a, const PSeries& b);
inline bool operator!=(const PSeries& a, const PSeries& b) { return !(a == b); }

/* multiply by p^m, truncating at the working order */
PSeries pseries_shift(const PSeries& a, long m);

using Scalar = std::variant<Rat, Cx, PSeries>;

std::string to_string(const Rat& x);
std::string real_str(const Real& x, unsigned digits = 0);
std::string to_string(const Cx& x, unsigned digits = 0);
std::string to_string(const PSeries& x);
std::string to_string(const Scalar& x);

} // namespace qident
