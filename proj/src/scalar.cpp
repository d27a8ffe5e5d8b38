#include "qident/scalar.hpp"

#include <sstream>

namespace qident {

Rat rat_pow(const Rat& base, long e) {
	if (e == 0)
		return Rat(1);
	if (base == 0) {
		if (e < 0)
			throw DomainError("rat_pow: zero base with negative exponent");
		return Rat(0);
	}
	Rat b = base;
	unsigned long n;
	if (e < 0) {
		b = Rat(1) / b;
		n = static_cast<unsigned long>(-(e + 1)) + 1; // avoids overflow at LONG_MIN
	} else {
		n = static_cast<unsigned long>(e);
	}
	Rat acc(1);
	while (n > 0) {
		if (n & 1)
			acc = acc * b;
		b = b * b;
		n >>= 1;
	}
	return acc;
}

Cx cx_pow(const Cx& base, long e) {
	if (e == 0)
		return Cx(1);
	Cx b = base;
	unsigned long n;
	if (e < 0) {
		b = Cx(1) / b;
		n = static_cast<unsigned long>(-(e + 1)) + 1;
	} else {
		n = static_cast<unsigned long>(e);
	}
	Cx acc(1);
	while (n > 0) {
		if (n & 1)
			acc = acc * b;
		b = b * b;
		n >>= 1;
	}
	return acc;
}

static void check_same_order(const PSeries& a, const PSeries& b, const char* op) {
	if (a.order() != b.order())
		throw DomainError(std::string("pseries ") + op + ": order mismatch");
}

PSeries operator+(const PSeries& a, const PSeries& b) {
	check_same_order(a, b, "add");
	PSeries r(a.order());
	for (std::size_t i = 0; i < a.order(); ++i)
		r.c[i] = a.c[i] + b.c[i];
	return r;
}

PSeries operator-(const PSeries& a, const PSeries& b) {
	check_same_order(a, b, "sub");
	PSeries r(a.order());
	for (std::size_t i = 0; i < a.order(); ++i)
		r.c[i] = a.c[i] - b.c[i];
	return r;
}

PSeries operator-(const PSeries& a) {
	PSeries r(a.order());
	for (std::size_t i = 0; i < a.order(); ++i)
		r.c[i] = -a.c[i];
	return r;
}

PSeries pseries_mul(const PSeries& a, const PSeries& b) {
	check_same_order(a, b, "mul");
	PSeries r(a.order());
	for (std::size_t i = 0; i < a.order(); ++i) {
		if (a.c[i] == 0)
			continue;
		for (std::size_t j = 0; i + j < b.order(); ++j) {
			if (b.c[j] == 0)
				continue;
			r.c[i + j] += a.c[i] * b.c[j];
		}
	}
	return r;
}

PSeries pseries_inv(const PSeries& a) {
	if (a.order() == 0)
		throw DomainError("pseries_inv: empty series");
	if (a.c[0] == 0)
		throw DomainError("pseries_inv: zero constant term");
	PSeries r(a.order());
	Rat c0inv = Rat(1) / a.c[0];
	r.c[0] = c0inv;
	/* c[n] of a*r must vanish for n >= 1:
	 *   r[n] = -(1/a[0]) * sum_{k=1..n} a[k] r[n-k] */
	for (std::size_t n = 1; n < a.order(); ++n) {
		Rat s(0);
		for (std::size_t k = 1; k <= n; ++k)
			s += a.c[k] * r.c[n - k];
		r.c[n] = -c0inv * s;
	}
	return r;
}

bool operator==(const PSeries& a, const PSeries& b) {
	if (a.order() != b.order())
		return false;
	for (std::size_t i = 0; i < a.order(); ++i)
		if (a.c[i] != b.c[i])
			return false;
	return true;
}

PSeries pseries_shift(const PSeries& a, long m) {
	if (m < 0)
		throw DomainError("pseries_shift: negative shift");
	PSeries r(a.order());
	for (std::size_t i = 0; i + static_cast<std::size_t>(m) < a.order(); ++i)
		r.c[i + static_cast<std::size_t>(m)] = a.c[i];
	return r;
}

std::string to_string(const Rat& x) {
	std::ostringstream os;
	os << numerator(x);
	if (denominator(x) != 1)
		os << "/" << denominator(x);
	return os.str();
}

std::string real_str(const Real& x, unsigned digits) {
	if (digits == 0)
		digits = static_cast<unsigned>(x.precision());
	return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Cx& x, unsigned digits) {
	return "(" + real_str(x.re, digits) + "," + real_str(x.im, digits) + ")";
}

std::string to_string(const PSeries& x) {
	std::string out = "[";
	for (std::size_t i = 0; i < x.order(); ++i) {
		if (i)
			out += ", ";
		out += to_string(x.c[i]);
	}
	out += "]";
	return out;
}

std::string to_string(const Scalar& x) {
	return std::visit([](const auto& v) { return to_string(v); }, x);
}

} // namespace qident
