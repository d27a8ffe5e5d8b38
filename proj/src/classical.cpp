#include "qident/classical.hpp"

#include "qident/sums.hpp"

namespace qident::classical {

namespace {

/* very-well-poised kernel factor  (1 - a q^{2k}) / (1 - a) * (a)_k / (q)_k */
template <class K, class T = typename K::value_type>
T vwp_factor(const K& k, const T& a, long kk) {
	T num = k.one_minus(a * k.qpow(2 * kk)) * qpoch(k, a, kk);
	T den = k.one_minus(a) * qpoch(k, k.qpow(1), kk);
	return num * k.inv(den);
}

/* prod (u_m)_k / prod (v_m)_k */
template <class K, class T = typename K::value_type>
T poch_ratio(const K& k, std::initializer_list<T> num, std::initializer_list<T> den, long kk) {
	T acc = k.one();
	for (const T& u : num)
		acc = acc * qpoch(k, u, kk);
	T d = k.one();
	for (const T& v : den)
		d = d * qpoch(k, v, kk);
	return acc * k.inv(d);
}

} // namespace

Sides<Rat> pfaff_saalschutz(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                            long n) {
	const Rat q = k.qpow(1);
	Rat lhs(0);
	for (long j = 0; j <= n; ++j)
		lhs += poch_ratio(k, {a, b, k.qpow(-n)},
		                  {q, c, a * b * k.qpow(1 - n) / c}, j) *
		       k.qpow(j);
	Rat rhs = qpoch(k, c / a, n) * qpoch(k, c / b, n) *
	          k.inv(qpoch(k, c, n) * qpoch(k, c / (a * b), n));
	return {lhs, rhs};
}

Sides<Rat> rogers_6w5(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c, long n) {
	const Rat q = k.qpow(1);
	Rat lhs(0);
	for (long j = 0; j <= n; ++j)
		lhs += vwp_factor(k, a, j) *
		       poch_ratio(k, {b, c, k.qpow(-n)},
		                  {a * q / b, a * q / c, a * k.qpow(1 + n)}, j) *
		       rat_pow(a * q / (b * c), j) * k.qpow(n * j);
	Rat rhs = qpoch(k, a * q, n) * qpoch(k, a * q / (b * c), n) *
	          k.inv(qpoch(k, a * q / b, n) * qpoch(k, a * q / c, n));
	return {lhs, rhs};
}

Sides<Cx> rogers_6w5_nt(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& c, const Cx& d) {
	const Cx q = k.q;
	Cx arg = a * q / (b * c * d);
	Cx lhs = sum_adaptive(k, 1, [&](const std::vector<long>& kk) {
		long j = kk[0];
		return vwp_factor(k, a, j) *
		       poch_ratio(k, {b, c, d}, {a * q / b, a * q / c, a * q / d}, j) * cx_pow(arg, j);
	});
	Cx rhs = k.qpoch_inf(a * q) * k.qpoch_inf(a * q / (b * c)) * k.qpoch_inf(a * q / (b * d)) *
	         k.qpoch_inf(a * q / (c * d)) /
	         (k.qpoch_inf(a * q / b) * k.qpoch_inf(a * q / c) * k.qpoch_inf(a * q / d) *
	          k.qpoch_inf(a * q / (b * c * d)));
	return {lhs, rhs};
}

Sides<Rat> jackson_8w7(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                       const Rat& d, long n) {
	const Rat q = k.qpow(1);
	const Rat e = a * a * k.qpow(1 + n) / (b * c * d);
	Rat lhs(0);
	for (long j = 0; j <= n; ++j)
		lhs += vwp_factor(k, a, j) *
		       poch_ratio(k, {b, c, d, e, k.qpow(-n)},
		                  {a * q / b, a * q / c, a * q / d, a * q / e, a * k.qpow(1 + n)}, j) *
		       k.qpow(j);
	Rat rhs = qpoch(k, a * q, n) * qpoch(k, a * q / (b * c), n) * qpoch(k, a * q / (b * d), n) *
	          qpoch(k, a * q / (c * d), n) *
	          k.inv(qpoch(k, a * q / b, n) * qpoch(k, a * q / c, n) * qpoch(k, a * q / d, n) *
	                qpoch(k, a * q / (b * c * d), n));
	return {lhs, rhs};
}

Sides<Rat> bailey_10w9(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                       const Rat& d, const Rat& e, const Rat& f, long n) {
	const Rat q = k.qpow(1);
	const Rat g = a * a * a * k.qpow(2 + n) / (b * c * d * e * f);
	const Rat lam = a * a * q / (b * c * d);
	auto w10_9 = [&](const Rat& A, const Rat& B, const Rat& C, const Rat& D, const Rat& E,
	                 const Rat& F, const Rat& G) {
		Rat s(0);
		for (long j = 0; j <= n; ++j)
			s += vwp_factor(k, A, j) *
			     poch_ratio(k, {B, C, D, E, F, G, k.qpow(-n)},
			                {A * q / B, A * q / C, A * q / D, A * q / E, A * q / F, A * q / G,
			                 A * k.qpow(1 + n)},
			                j) *
			     k.qpow(j);
		return s;
	};
	Rat lhs = w10_9(a, b, c, d, e, f, g);
	Rat pref = qpoch(k, a * q, n) * qpoch(k, a * q / (e * f), n) * qpoch(k, lam * q / e, n) *
	           qpoch(k, lam * q / f, n) *
	           k.inv(qpoch(k, lam * q, n) * qpoch(k, lam * q / (e * f), n) *
	                 qpoch(k, a * q / e, n) * qpoch(k, a * q / f, n));
	Rat rhs = pref * w10_9(lam, lam * b / a, lam * c / a, lam * d / a, e, f, g);
	return {lhs, rhs};
}

Sides<Rat> watson_8w7_4p3(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d, const Rat& e, long n) {
	const Rat q = k.qpow(1);
	const Rat arg = a * a * k.qpow(2 + n) / (b * c * d * e);
	Rat lhs(0);
	for (long j = 0; j <= n; ++j)
		lhs += vwp_factor(k, a, j) *
		       poch_ratio(k, {b, c, d, e, k.qpow(-n)},
		                  {a * q / b, a * q / c, a * q / d, a * q / e, a * k.qpow(1 + n)}, j) *
		       rat_pow(arg, j);
	Rat sum(0);
	for (long j = 0; j <= n; ++j)
		sum += poch_ratio(k, {k.qpow(-n), d, e, a * q / (b * c)},
		                  {q, a * q / b, a * q / c, d * e * k.qpow(-n) / a}, j) *
		       k.qpow(j);
	Rat rhs = qpoch(k, a * q, n) * qpoch(k, a * q / (d * e), n) *
	          k.inv(qpoch(k, a * q / d, n) * qpoch(k, a * q / e, n)) * sum;
	return {lhs, rhs};
}

Sides<Rat> sears_4p3(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                     const Rat& d, const Rat& e, long n) {
	const Rat q = k.qpow(1);
	const Rat f = a * b * c * k.qpow(1 - n) / (d * e);
	Rat lhs(0);
	for (long j = 0; j <= n; ++j)
		lhs += poch_ratio(k, {k.qpow(-n), a, b, c}, {q, d, e, f}, j) * k.qpow(j);
	Rat sum(0);
	for (long j = 0; j <= n; ++j)
		sum += poch_ratio(k, {k.qpow(-n), a, d / b, d / c},
		                  {q, d, a * k.qpow(1 - n) / e, a * k.qpow(1 - n) / f}, j) *
		       k.qpow(j);
	Rat rhs = qpoch(k, e / a, n) * qpoch(k, f / a, n) *
	          k.inv(qpoch(k, e, n) * qpoch(k, f, n)) * rat_pow(a, n) * sum;
	return {lhs, rhs};
}

Sides<Cx> q_gauss(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& c) {
	const Cx q = k.q;
	Cx arg = c / (a * b);
	Cx lhs = sum_adaptive(k, 1, [&](const std::vector<long>& kk) {
		long j = kk[0];
		return poch_ratio(k, {a, b}, {q, c}, j) * cx_pow(arg, j);
	});
	Cx rhs = k.qpoch_inf(c / a) * k.qpoch_inf(c / b) /
	         (k.qpoch_inf(c) * k.qpoch_inf(c / (a * b)));
	return {lhs, rhs};
}

Sides<Cx> q_binomial(const Kernel<Cx>& k, const Cx& a, const Cx& z) {
	const Cx q = k.q;
	Cx lhs = sum_adaptive(k, 1, [&](const std::vector<long>& kk) {
		long j = kk[0];
		return qpoch(k, a, j) * k.inv(qpoch(k, q, j)) * cx_pow(z, j);
	});
	Cx rhs = k.qpoch_inf(a * z) / k.qpoch_inf(z);
	return {lhs, rhs};
}

Sides<Cx> ramanujan_1p1(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& z) {
	const Cx q = k.q;
	Cx lhs = sum_bilateral(k, 1, [&](const std::vector<long>& kk) {
		long j = kk[0];
		return qpoch(k, a, j) * k.inv(qpoch(k, b, j)) * cx_pow(z, j);
	});
	Cx rhs = k.qpoch_inf(a * z) * k.qpoch_inf(q / (a * z)) * k.qpoch_inf(q) *
	         k.qpoch_inf(b / a) /
	         (k.qpoch_inf(z) * k.qpoch_inf(b / (a * z)) * k.qpoch_inf(q / a) * k.qpoch_inf(b));
	return {lhs, rhs};
}

} // namespace qident::classical
