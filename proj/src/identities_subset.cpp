/*
 * Nonterminating transformations whose sides expand over row subsets, and
 * the equivalent multiple q-integral forms, float backend only.
 *
 * A subset-series side splits the rows into two blocks: rows inside the
 * subset keep their spectral value x_i, rows outside are rebased at b (the
 * multivariable analogue of the two-term splitting of the classical
 * nonterminating very-well-poised sum).  Every subset contributes an
 * adaptive lattice sum; the per-row factor tables are built once and
 * shared across all 2^r subsets.
 *
 * An integral side is a Jackson integral over the box [l_i, b]; the corner
 * expansion yields 2^r adaptive lattice sums whose integrands are backed
 * by per-corner infinite-product tables.
 */

#include "ids_common.hpp"

namespace qident {
namespace ids {
namespace {

using Kx = Kernel<Cx>;
using Ax = Asg<Cx>;

/*
 * One side of a subset-expanded transformation.  base couples the in-subset
 * block, b the mixed pairs; the out-of-subset couplings b^2/base and b/base
 * and the subset prefactor base (b/base)^{C(out,2)} all derive from these.
 * mix_den is the coupling inside the mixed pair normalizer, equal to base
 * except where a printed variant is kept for audit.
 */
struct SubsetSeries {
	Cx base;
	Cx b;
	Cx mix_den;
	std::vector<Cx> x;
	std::vector<std::vector<Cx>> in_num, in_den;
	std::vector<std::vector<Cx>> out_num, out_den;
	std::vector<std::vector<Cx>> pn, pd; // out-of-subset infinite products
};

Cx eval_subset_series(const Kx& k, const SubsetSeries& sp) {
	const int r = static_cast<int>(sp.x.size());
	const Cx m = sp.b * k.inv(sp.base);
	const Cx v = sp.b * sp.b * k.inv(sp.base);
	std::vector<AxisTable> tin, tout;
	tin.reserve(static_cast<std::size_t>(r));
	tout.reserve(static_cast<std::size_t>(r));
	for (int i = 0; i < r; ++i) {
		const auto ui = static_cast<std::size_t>(i);
		tin.emplace_back(k, sp.in_num[ui], sp.in_den[ui], k.q);
		tout.emplace_back(k, sp.out_num[ui], sp.out_den[ui], k.q);
	}
	GeomTable qt(k.q);
	Cx total(0);
	for (unsigned mask = 0; mask < (1u << r); ++mask) {
		int out = 0;
		for (int i = 0; i < r; ++i)
			if (!(mask >> i & 1u))
				++out;
		Cx pref = k.pow(m, binom2(out));
		for (int i = 0; i < r; ++i) {
			const auto ui = static_cast<std::size_t>(i);
			const bool si = mask >> i & 1u;
			if (si)
				pref = pref * k.inv(k.one_minus(sp.base * sp.x[ui] * sp.x[ui]));
			else
				pref = pref * qir(k, sp.pn[ui], sp.pd[ui]) * k.inv(k.one_minus(v));
			for (int j = i + 1; j < r; ++j) {
				const auto uj = static_cast<std::size_t>(j);
				const bool sj = mask >> j & 1u;
				/* the mixed pair normalizer lists the in-subset row first */
				Cx dx = (si || !sj) ? k.diff(sp.x[ui], sp.x[uj])
				                    : k.diff(sp.x[uj], sp.x[ui]);
				const Cx& coup = (si == sj) ? sp.base : sp.mix_den;
				pref = pref * k.inv(dx * k.one_minus(coup * sp.x[ui] * sp.x[uj]));
			}
		}
		Cx inner = sum_adaptive(
		    k, r,
		    [&](const std::vector<long>& kk) -> Cx {
			    for (int i = 0; i < r; ++i)
				    if (!(mask >> i & 1u))
					    for (int j = i + 1; j < r; ++j)
						    if (!(mask >> j & 1u) && kk[i] == kk[j])
							    return Cx(0);
			    Cx t(1);
			    for (int i = 0; i < r; ++i) {
				    const auto ui = static_cast<std::size_t>(i);
				    const bool si = mask >> i & 1u;
				    if (si)
					    t = t *
					        (Cx(1) -
					         sp.base * sp.x[ui] * sp.x[ui] * qt.at(2 * kk[i])) *
					        tin[ui].at(kk[i]);
				    else
					    t = t * (Cx(1) - v * qt.at(2 * kk[i])) * tout[ui].at(kk[i]);
				    for (int j = i + 1; j < r; ++j) {
					    const auto uj = static_cast<std::size_t>(j);
					    const bool sj = mask >> j & 1u;
					    if (si && sj)
						    t = t *
						        (sp.x[ui] * qt.at(kk[i]) -
						         sp.x[uj] * qt.at(kk[j])) *
						        (Cx(1) - sp.base * sp.x[ui] * sp.x[uj] *
						                     qt.at(kk[i] + kk[j]));
					    else if (!si && !sj)
						    t = t * (qt.at(kk[i]) - qt.at(kk[j])) *
						        (Cx(1) - v * qt.at(kk[i] + kk[j]));
					    else if (si)
						    t = t *
						        (sp.x[ui] * qt.at(kk[i]) - m * qt.at(kk[j])) *
						        (Cx(1) -
						         sp.b * sp.x[ui] * qt.at(kk[i] + kk[j]));
					    else
						    t = t *
						        (sp.x[uj] * qt.at(kk[j]) - m * qt.at(kk[i])) *
						        (Cx(1) -
						         sp.b * sp.x[uj] * qt.at(kk[i] + kk[j]));
				    }
			    }
			    return t;
		    },
		    [&](long M) {
			    qt.ensure(2 * M);
			    for (auto& t : tin)
				    t.ensure(M);
			    for (auto& t : tout)
				    t.ensure(M);
		    });
		total = total + pref * inner;
	}
	return total;
}

/* very-well-poised integrand on one corner: pair block with coefficient
 * ainv against per-axis infinite-product tables */
struct CornerSeries {
	Cx ainv;
	std::vector<Cx> u;
	std::vector<InfAxisTable> ax;
	GeomTable qt;

	CornerSeries(const Kx& k, const Cx& ainv_, std::vector<Cx> u_)
	    : ainv(ainv_), u(std::move(u_)), qt(k.q) {}

	Cx term(const std::vector<long>& kk) {
		const int r = static_cast<int>(kk.size());
		std::vector<Cx> t(static_cast<std::size_t>(r), Cx(0));
		for (int i = 0; i < r; ++i)
			t[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)] * qt.at(kk[i]);
		Cx acc(1);
		for (int i = 0; i < r; ++i) {
			const auto ui = static_cast<std::size_t>(i);
			acc = acc * (Cx(1) - ainv * t[ui] * t[ui]) * ax[ui].at(kk[i]);
			for (int j = i + 1; j < r; ++j) {
				const auto uj = static_cast<std::size_t>(j);
				acc = acc * (t[ui] - t[uj]) * (Cx(1) - ainv * t[ui] * t[uj]);
			}
		}
		return acc;
	}

	void grow(long M) {
		qt.ensure(M);
		for (auto& a : ax)
			a.ensure(M);
	}
};

/* ---- subset-expanded transformation, vector parameters
 *
 * Balance: e_i = a^3 q^{3-r} / (b c_i d_i x_i f g h); the partner base is
 * lambda = b f g h q^{r-2} / a, so the right side is the same expansion
 * rebased at lambda. */

SubsetSeries cnnt109_series(const Kx& k, const Ax& A, bool lhs_side) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	const Cx lam = b * f * g * h * k.qpow(r - 2) / a;
	SubsetSeries sp;
	sp.base = lhs_side ? a : lam;
	sp.b = b;
	sp.mix_den = sp.base;
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i), c = A.at("c", i), d = A.at("d", i), e = A.at("e", i);
		sp.x.push_back(x);
		if (lhs_side) {
			sp.in_num.push_back({a * x * x, b * x, c * x, d * x, e * x, f * x, g * x, h * x});
			sp.in_den.push_back({q, a * x * q / b, a * x * q / c, a * x * q / d,
			                     a * x * q / e, a * x * q / f, a * x * q / g, a * x * q / h});
			sp.out_num.push_back({b * b / a, b * x, b * c / a, b * d / a, b * e / a,
			                      b * f / a, b * g / a, b * h / a});
			sp.out_den.push_back({q, b * q / (a * x), b * q / c, b * q / d, b * q / e,
			                      b * q / f, b * q / g, b * q / h});
			sp.pn.push_back({a * x * x * q, c * x, d * x, e * x, f * x, g * x, h * x,
			                 b / (a * x), b * q / c, b * q / d, b * q / e, b * q / f,
			                 b * q / g, b * q / h});
			sp.pd.push_back({a * x / b, a * x * q / c, a * x * q / d, a * x * q / e,
			                 a * x * q / f, a * x * q / g, a * x * q / h, b * b * q / a,
			                 b * c / a, b * d / a, b * e / a, b * f / a, b * g / a,
			                 b * h / a});
		} else {
			sp.in_num.push_back({lam * x * x, b * x, lam * c * x / a, lam * d * x / a,
			                     lam * e * x / a, f * x, g * x, h * x});
			sp.in_den.push_back({q, lam * x * q / b, a * x * q / c, a * x * q / d,
			                     a * x * q / e, lam * x * q / f, lam * x * q / g,
			                     lam * x * q / h});
			sp.out_num.push_back({b * b / lam, b * x, b * c / a, b * d / a, b * e / a,
			                      b * f / lam, b * g / lam, b * h / lam});
			sp.out_den.push_back({q, b * q / (lam * x), a * b * q / (c * lam),
			                      a * b * q / (d * lam), a * b * q / (e * lam), b * q / f,
			                      b * q / g, b * q / h});
			sp.pn.push_back({lam * x * x * q, lam * c * x / a, lam * d * x / a,
			                 lam * e * x / a, f * x, g * x, h * x, b / (lam * x),
			                 a * b * q / (c * lam), a * b * q / (d * lam),
			                 a * b * q / (e * lam), b * q / f, b * q / g, b * q / h});
			sp.pd.push_back({lam * x / b, a * x * q / c, a * x * q / d, a * x * q / e,
			                 lam * x * q / f, lam * x * q / g, lam * x * q / h,
			                 b * b * q / lam, b * c / a, b * d / a, b * e / a,
			                 b * f / lam, b * g / lam, b * h / lam});
		}
	}
	return sp;
}

Cx cnnt109_lhs(const Kx& k, const Ax& A) {
	return eval_subset_series(k, cnnt109_series(k, A, true));
}

Cx cnnt109_rhs(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx lam = b * f * g * h * k.qpow(r - 2) / a;
	Cx acc = k.one();
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i);
		acc = acc * qir(k,
		                {a * x * x * k.qpow(1), b / (a * x), lam * x * k.qpow(1) / f,
		                 lam * x * k.qpow(1) / g, lam * x * k.qpow(1) / h,
		                 b * f * k.qpow(i) / lam, b * g * k.qpow(i) / lam,
		                 b * h * k.qpow(i) / lam},
		                {lam * x * x * k.qpow(1), b / (lam * x), a * x * k.qpow(1) / f,
		                 a * x * k.qpow(1) / g, a * x * k.qpow(1) / h,
		                 b * f * k.qpow(i) / a, b * g * k.qpow(i) / a,
		                 b * h * k.qpow(i) / a});
		for (int j = i + 1; j < r; ++j) {
			const Cx xj = A.at("x", j);
			acc = acc * k.one_minus(lam * x * xj) * k.inv(k.one_minus(a * x * xj));
		}
	}
	return acc * eval_subset_series(k, cnnt109_series(k, A, false));
}

IdentityDef def_cnnt109() {
	IdentityDef def;
	def.id = "cnnt109";
	def.citation = "C_r extension of Bailey's nonterminating very-well-poised "
	               "10-phi-9 transformation, vector parameters";
	def.summary = "subset-expanded nonterminating C-type series transformed into "
	              "the same expansion rebased at lambda = b f g h q^{r-2} / a";
	def.rank_support = {1, 2, 3};
	def.modes = {Mode::floating};
	def.schema = {{"a", ParamKind::free_scalar}, {"b", ParamKind::free_scalar},
	              {"c", ParamKind::free_vector}, {"d", ParamKind::free_vector},
	              {"e", ParamKind::dep_vector},  {"x", ParamKind::free_vector},
	              {"f", ParamKind::free_scalar}, {"g", ParamKind::free_scalar},
	              {"h", ParamKind::free_scalar}};
	def.constraints = {{"e",
	                    true,
	                    {{"a", 3},
	                     {"b", -1},
	                     {"c", -1},
	                     {"d", -1},
	                     {"x", -1},
	                     {"f", -1},
	                     {"g", -1},
	                     {"h", -1}},
	                    {3, -1, 0, 0}}};
	def.lhs = detail::make_side_float([](const Kx& k, const Ax& A) { return cnnt109_lhs(k, A); });
	def.rhs = detail::make_side_float([](const Kx& k, const Ax& A) { return cnnt109_rhs(k, A); });
	def.hints.draw_float = [](Rng& g, const QContext& ctx, int r, ParameterAssignment& pa) {
		(void)ctx;
		std::vector<Cx> c, d, x;
		for (int i = 0; i < r; ++i) {
			c.push_back(rand_cx(g, 0.8, 1.25));
			d.push_back(rand_cx(g, 0.8, 1.25));
			x.push_back(rand_cx(g, 0.9, 1.1));
		}
		put(pa, "a", {rand_cx(g, 0.8, 1.25)});
		put(pa, "b", {rand_cx(g, 0.8, 1.25)});
		put(pa, "c", c);
		put(pa, "d", d);
		put(pa, "x", x);
		put(pa, "f", {rand_cx(g, 0.8, 1.25)});
		put(pa, "g", {rand_cx(g, 0.8, 1.25)});
		put(pa, "h", {rand_cx(g, 0.8, 1.25)});
	};
	return def;
}

/* ---- subset-expanded transformation, scalar parameters
 *
 * Balance: h = a^3 q^{3-r} / (b c d e f g); the partner base is
 * w = b h q^{r-1} / g.  The printed mixed-pair normalizer on the right
 * side carries w with the exponent flipped (q^{1-r} for q^{r-1}); the two
 * agree at r = 1 where no pairs exist. */

SubsetSeries cnnt109c_lhs_series(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), c = A.s("c"), d = A.s("d"), e = A.s("e"),
	         f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	SubsetSeries sp;
	sp.base = a;
	sp.b = b;
	sp.mix_den = a;
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i);
		sp.x.push_back(x);
		sp.in_num.push_back({a * x * x, b * x, c * x, d * x, e * x, f * x, g, h * x});
		sp.in_den.push_back({q, a * x * q / b, a * x * q / c, a * x * q / d, a * x * q / e,
		                     a * x * q / f, a * x * x * q / g, a * x * q / h});
		sp.out_num.push_back({b * b / a, b * x, b * c / a, b * d / a, b * e / a, b * f / a,
		                      b * g / (a * x), b * h / a});
		sp.out_den.push_back({q, b * q / (a * x), b * q / c, b * q / d, b * q / e,
		                      b * q / f, b * x * q / g, b * q / h});
		sp.pn.push_back({a * x * x * q, c * x, d * x, e * x, f * x, g, h * x, b / (a * x),
		                 b * q / c, b * q / d, b * q / e, b * q / f, b * x * q / g,
		                 b * q / h});
		sp.pd.push_back({a * x / b, a * x * q / c, a * x * q / d, a * x * q / e,
		                 a * x * q / f, a * x * x * q / g, a * x * q / h, b * b * q / a,
		                 b * c / a, b * d / a, b * e / a, b * f / a, b * g / (a * x),
		                 b * h / a});
	}
	return sp;
}

SubsetSeries cnnt109c_rhs_series(const Kx& k, const Ax& A, bool printed) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), c = A.s("c"), d = A.s("d"), e = A.s("e"),
	         f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	const Cx w = b * h * k.qpow(r - 1) / g;
	SubsetSeries sp;
	sp.base = w;
	sp.b = b;
	sp.mix_den = printed ? b * h * k.qpow(1 - r) / g : w;
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i);
		sp.x.push_back(x);
		sp.in_num.push_back({w * x * x, b * x, a * x * q / (c * g), a * x * q / (d * g),
		                     a * x * q / (e * g), a * x * q / (f * g),
		                     b * h * k.qpow(r - 1) / a, h * x});
		sp.in_den.push_back({q, h * x * k.qpow(r) / b, b * c * h * k.qpow(r - 1) * x / a,
		                     b * d * h * k.qpow(r - 1) * x / a,
		                     b * e * h * k.qpow(r - 1) * x / a,
		                     b * f * h * k.qpow(r - 1) * x / a, a * x * x * q / g,
		                     b * x * k.qpow(r) / g});
		sp.out_num.push_back({b * g * k.qpow(1 - r) / h, b * x, a * k.qpow(2 - r) / (c * h),
		                      a * k.qpow(2 - r) / (d * h), a * k.qpow(2 - r) / (e * h),
		                      a * k.qpow(2 - r) / (f * h), b * g / (a * x),
		                      g * k.qpow(1 - r)});
		sp.out_den.push_back({q, g * k.qpow(2 - r) / (h * x), b * c * g / a, b * d * g / a,
		                      b * e * g / a, b * f * g / a, a * x * k.qpow(2 - r) / h,
		                      b * q / h});
		sp.pn.push_back({w * x * x * q, a * x * q / (c * g), a * x * q / (d * g),
		                 a * x * q / (e * g), a * x * q / (f * g),
		                 b * h * k.qpow(r - 1) / a, h * x, g * k.qpow(1 - r) / (h * x),
		                 b * c * g / a, b * d * g / a, b * e * g / a, b * f * g / a,
		                 a * x * k.qpow(2 - r) / h, b * q / h});
		sp.pd.push_back({h * x * k.qpow(r - 1) / g, b * c * h * k.qpow(r - 1) * x / a,
		                 b * d * h * k.qpow(r - 1) * x / a,
		                 b * e * h * k.qpow(r - 1) * x / a,
		                 b * f * h * k.qpow(r - 1) * x / a, a * x * x * q / g,
		                 b * x * k.qpow(r) / g, b * g * k.qpow(2 - r) / h,
		                 a * k.qpow(2 - r) / (c * h), a * k.qpow(2 - r) / (d * h),
		                 a * k.qpow(2 - r) / (e * h), a * k.qpow(2 - r) / (f * h),
		                 b * g / (a * x), g * k.qpow(1 - r)});
	}
	return sp;
}

Cx cnnt109c_lhs(const Kx& k, const Ax& A) {
	return eval_subset_series(k, cnnt109c_lhs_series(k, A));
}

Cx cnnt109c_rhs(const Kx& k, const Ax& A, bool printed) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), c = A.s("c"), d = A.s("d"), e = A.s("e"),
	         f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx wg = b * h * k.qpow(r - 1) / g;
	Cx acc = k.one();
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i);
		acc = acc * qir(k,
		                {a * x * x * k.qpow(1), b / (a * x), b * x * k.qpow(r) / g,
		                 b * c * h * k.qpow(r - 1) * x / a, b * d * h * k.qpow(r - 1) * x / a,
		                 b * e * h * k.qpow(r - 1) * x / a, b * f * h * k.qpow(r - 1) * x / a,
		                 g * k.qpow(-i), a * k.qpow(1 - i) / (c * h),
		                 a * k.qpow(1 - i) / (d * h), a * k.qpow(1 - i) / (e * h),
		                 a * k.qpow(1 - i) / (f * h)},
		                {b * h * x * x * k.qpow(r) / g, g * k.qpow(1 - r) / (h * x),
		                 a * x * k.qpow(1) / c, a * x * k.qpow(1) / d, a * x * k.qpow(1) / e,
		                 a * x * k.qpow(1) / f, a * x * k.qpow(1) / h, b * c * k.qpow(i) / a,
		                 b * d * k.qpow(i) / a, b * e * k.qpow(i) / a, b * f * k.qpow(i) / a,
		                 b * h * k.qpow(i) / a});
		for (int j = i + 1; j < r; ++j) {
			const Cx xj = A.at("x", j);
			acc = acc * k.one_minus(wg * x * xj) * k.inv(k.one_minus(a * x * xj));
		}
	}
	return acc * eval_subset_series(k, cnnt109c_rhs_series(k, A, printed));
}

IdentityDef def_cnnt109c() {
	IdentityDef def;
	def.id = "cnnt109c";
	def.citation = "C_r extension of Bailey's nonterminating 10-phi-9 "
	               "transformation, iterated scalar form";
	def.summary = "subset-expanded nonterminating C-type series transformed into "
	              "the expansion rebased at b h q^{r-1} / g";
	def.rank_support = {1, 2, 3};
	def.modes = {Mode::floating};
	def.schema = {{"a", ParamKind::free_scalar}, {"b", ParamKind::free_scalar},
	              {"c", ParamKind::free_scalar}, {"d", ParamKind::free_scalar},
	              {"e", ParamKind::free_scalar}, {"f", ParamKind::free_scalar},
	              {"g", ParamKind::free_scalar}, {"h", ParamKind::dep_scalar},
	              {"x", ParamKind::free_vector}};
	def.constraints = {{"h",
	                    false,
	                    {{"a", 3},
	                     {"b", -1},
	                     {"c", -1},
	                     {"d", -1},
	                     {"e", -1},
	                     {"f", -1},
	                     {"g", -1}},
	                    {3, -1, 0, 0}}};
	def.lhs = detail::make_side_float([](const Kx& k, const Ax& A) { return cnnt109c_lhs(k, A); });
	def.rhs = detail::make_side_float(
	    [](const Kx& k, const Ax& A) { return cnnt109c_rhs(k, A, false); });
	def.rhs_printed = detail::make_side_float(
	    [](const Kx& k, const Ax& A) { return cnnt109c_rhs(k, A, true); });
	def.as_printed = false;
	def.correction_note = "the printed mixed-pair normalizer on the right side reads "
	                      "(1 - b h x_i x_j q^{1-r} / g) while every other pair normalizer "
	                      "of that expansion carries q^{r-1}; the expansion only telescopes "
	                      "with q^{r-1} (checked in float at r = 2, 3, where the two "
	                      "variants differ); the printed variant is kept for audit";
	def.hints.draw_float = [](Rng& g, const QContext& ctx, int r, ParameterAssignment& pa) {
		(void)ctx;
		std::vector<Cx> x;
		for (int i = 0; i < r; ++i)
			x.push_back(rand_cx(g, 0.9, 1.1));
		for (const char* name : {"a", "b", "c", "d", "e", "f", "g"})
			put(pa, name, {rand_cx(g, 0.8, 1.25)});
		put(pa, "x", x);
	};
	return def;
}

/* ---- multiple q-integral transformation, vector parameters */

Cx cnint109_lhs(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	std::vector<Cx> lo, hi;
	for (int i = 0; i < r; ++i) {
		lo.push_back(a * A.at("x", i));
		hi.push_back(b);
	}
	return multi_q_integral_tabled(k, lo, hi, [&](unsigned, const std::vector<Cx>& u) {
		CornerSeries cs(k, k.inv(a), u);
		for (int i = 0; i < r; ++i) {
			const Cx x = A.at("x", i), c = A.at("c", i), d = A.at("d", i),
			         e = A.at("e", i);
			const Cx& ui = u[static_cast<std::size_t>(i)];
			cs.ax.emplace_back(
			    k,
			    std::vector<Cx>{q * ui / (a * x), q * ui / b, q * ui / c, q * ui / d,
			                    q * ui / e, q * ui / f, q * ui / g, q * ui / h},
			    std::vector<Cx>{ui * x, b * ui / a, c * ui / a, d * ui / a, e * ui / a,
			                    f * ui / a, g * ui / a, h * ui / a});
		}
		return cs;
	});
}

Cx cnint109_rhs(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	const Cx lam = b * f * g * h * k.qpow(r - 2) / a;
	Cx acc = k.pow(a * k.inv(lam), binom2(r + 1));
	std::vector<Cx> lo, hi;
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i), c = A.at("c", i), d = A.at("d", i), e = A.at("e", i);
		lo.push_back(lam * x);
		hi.push_back(b);
		acc = acc * qir(k,
		                {b / (a * x), a * x * q / b, lam * c * x / a, lam * d * x / a,
		                 lam * e * x / a, b * f * k.qpow(i) / lam, b * g * k.qpow(i) / lam,
		                 b * h * k.qpow(i) / lam},
		                {b / (lam * x), lam * x * q / b, c * x, d * x, e * x,
		                 b * f * k.qpow(i) / a, b * g * k.qpow(i) / a,
		                 b * h * k.qpow(i) / a});
	}
	return acc * multi_q_integral_tabled(k, lo, hi, [&](unsigned, const std::vector<Cx>& u) {
		CornerSeries cs(k, k.inv(lam), u);
		for (int i = 0; i < r; ++i) {
			const Cx x = A.at("x", i), c = A.at("c", i), d = A.at("d", i),
			         e = A.at("e", i);
			const Cx& ui = u[static_cast<std::size_t>(i)];
			cs.ax.emplace_back(
			    k,
			    std::vector<Cx>{q * ui / (lam * x), q * ui / b, a * q * ui / (c * lam),
			                    a * q * ui / (d * lam), a * q * ui / (e * lam), q * ui / f,
			                    q * ui / g, q * ui / h},
			    std::vector<Cx>{ui * x, b * ui / lam, c * ui / a, d * ui / a, e * ui / a,
			                    f * ui / lam, g * ui / lam, h * ui / lam});
		}
		return cs;
	});
}

IdentityDef def_cnint109() {
	IdentityDef def;
	def.id = "cnint109";
	def.citation = "C_r multiple q-integral form of Bailey's nonterminating "
	               "10-phi-9 transformation";
	def.summary = "Jackson integral over [a x_i, b]^r of the very-well-poised "
	              "kernel equals the same integral rebased at lambda";
	def.rank_support = {1, 2, 3};
	def.modes = {Mode::floating};
	def.schema = {{"a", ParamKind::free_scalar}, {"b", ParamKind::free_scalar},
	              {"c", ParamKind::free_vector}, {"d", ParamKind::free_vector},
	              {"e", ParamKind::dep_vector},  {"x", ParamKind::free_vector},
	              {"f", ParamKind::free_scalar}, {"g", ParamKind::free_scalar},
	              {"h", ParamKind::free_scalar}};
	def.constraints = {{"e",
	                    true,
	                    {{"a", 3},
	                     {"b", -1},
	                     {"c", -1},
	                     {"d", -1},
	                     {"x", -1},
	                     {"f", -1},
	                     {"g", -1},
	                     {"h", -1}},
	                    {3, -1, 0, 0}}};
	def.lhs = detail::make_side_float([](const Kx& k, const Ax& A) { return cnint109_lhs(k, A); });
	def.rhs = detail::make_side_float([](const Kx& k, const Ax& A) { return cnint109_rhs(k, A); });
	def.hints.draw_float = [](Rng& g, const QContext& ctx, int r, ParameterAssignment& pa) {
		(void)ctx;
		std::vector<Cx> c, d, x;
		for (int i = 0; i < r; ++i) {
			c.push_back(rand_cx(g, 0.8, 1.25));
			d.push_back(rand_cx(g, 0.8, 1.25));
			x.push_back(rand_cx(g, 0.9, 1.1));
		}
		put(pa, "a", {rand_cx(g, 0.8, 1.25)});
		put(pa, "b", {rand_cx(g, 0.8, 1.25)});
		put(pa, "c", c);
		put(pa, "d", d);
		put(pa, "x", x);
		put(pa, "f", {rand_cx(g, 0.8, 1.25)});
		put(pa, "g", {rand_cx(g, 0.8, 1.25)});
		put(pa, "h", {rand_cx(g, 0.8, 1.25)});
	};
	return def;
}

/* ---- multiple q-integral transformation, scalar parameters */

Cx cnint109c_lhs(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), c = A.s("c"), d = A.s("d"), e = A.s("e"),
	         f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	std::vector<Cx> lo, hi;
	for (int i = 0; i < r; ++i) {
		lo.push_back(a * A.at("x", i));
		hi.push_back(b);
	}
	return multi_q_integral_tabled(k, lo, hi, [&](unsigned, const std::vector<Cx>& u) {
		CornerSeries cs(k, k.inv(a), u);
		for (int i = 0; i < r; ++i) {
			const Cx x = A.at("x", i);
			const Cx& ui = u[static_cast<std::size_t>(i)];
			cs.ax.emplace_back(
			    k,
			    std::vector<Cx>{q * ui / (a * x), q * ui / b, q * ui / c, q * ui / d,
			                    q * ui / e, q * ui / f, q * ui * x / g, q * ui / h},
			    std::vector<Cx>{ui * x, b * ui / a, c * ui / a, d * ui / a, e * ui / a,
			                    f * ui / a, g * ui / (a * x), h * ui / a});
		}
		return cs;
	});
}

Cx cnint109c_rhs(const Kx& k, const Ax& A) {
	const int r = A.r;
	const Cx a = A.s("a"), b = A.s("b"), c = A.s("c"), d = A.s("d"), e = A.s("e"),
	         f = A.s("f"), g = A.s("g"), h = A.s("h");
	const Cx q = k.qpow(1);
	const Cx wg = b * h * k.qpow(r - 1) / g;
	Cx acc = k.pow(a * g * k.qpow(1 - r) / (b * h), binom2(r + 1));
	std::vector<Cx> lo, hi;
	for (int i = 0; i < r; ++i) {
		const Cx x = A.at("x", i);
		lo.push_back(wg * x);
		hi.push_back(b);
		acc = acc * qir(k,
		                {b / (a * x), a * x * q / b, a * x * q / (c * g),
		                 a * x * q / (d * g), a * x * q / (e * g), a * x * q / (f * g),
		                 b * h * k.qpow(r - 1) / a, g * k.qpow(-i),
		                 a * k.qpow(1 - i) / (c * h), a * k.qpow(1 - i) / (d * h),
		                 a * k.qpow(1 - i) / (e * h), a * k.qpow(1 - i) / (f * h)},
		                {c * x, d * x, e * x, f * x, g, g * k.qpow(1 - r) / (h * x),
		                 h * k.qpow(r) * x / g, b * c * k.qpow(i) / a,
		                 b * d * k.qpow(i) / a, b * e * k.qpow(i) / a,
		                 b * f * k.qpow(i) / a, b * h * k.qpow(i) / a});
	}
	return acc * multi_q_integral_tabled(k, lo, hi, [&](unsigned, const std::vector<Cx>& u) {
		CornerSeries cs(k, k.inv(wg), u);
		for (int i = 0; i < r; ++i) {
			const Cx x = A.at("x", i);
			const Cx& ui = u[static_cast<std::size_t>(i)];
			cs.ax.emplace_back(
			    k,
			    std::vector<Cx>{g * k.qpow(2 - r) * ui / (b * h * x), q * ui / b,
			                    c * g * ui / a, d * g * ui / a, e * g * ui / a,
			                    f * g * ui / a, a * k.qpow(2 - r) * ui * x / (b * h),
			                    q * ui / h},
			    std::vector<Cx>{ui * x, g * k.qpow(1 - r) * ui / h,
			                    a * k.qpow(2 - r) * ui / (b * c * h),
			                    a * k.qpow(2 - r) * ui / (b * d * h),
			                    a * k.qpow(2 - r) * ui / (b * e * h),
			                    a * k.qpow(2 - r) * ui / (b * f * h), g * ui / (a * x),
			                    g * k.qpow(1 - r) * ui / b});
		}
		return cs;
	});
}

IdentityDef def_cnint109c() {
	IdentityDef def;
	def.id = "cnint109c";
	def.citation = "C_r multiple q-integral transformation, iterated form";
	def.summary = "Jackson integral over [a x_i, b]^r of the very-well-poised "
	              "kernel equals the integral rebased at b h q^{r-1} / g";
	def.rank_support = {1, 2, 3};
	def.modes = {Mode::floating};
	def.schema = {{"a", ParamKind::free_scalar}, {"b", ParamKind::free_scalar},
	              {"c", ParamKind::free_scalar}, {"d", ParamKind::free_scalar},
	              {"e", ParamKind::free_scalar}, {"f", ParamKind::free_scalar},
	              {"g", ParamKind::free_scalar}, {"h", ParamKind::dep_scalar},
	              {"x", ParamKind::free_vector}};
	def.constraints = {{"h",
	                    false,
	                    {{"a", 3},
	                     {"b", -1},
	                     {"c", -1},
	                     {"d", -1},
	                     {"e", -1},
	                     {"f", -1},
	                     {"g", -1}},
	                    {3, -1, 0, 0}}};
	def.lhs = detail::make_side_float(
	    [](const Kx& k, const Ax& A) { return cnint109c_lhs(k, A); });
	def.rhs = detail::make_side_float(
	    [](const Kx& k, const Ax& A) { return cnint109c_rhs(k, A); });
	def.hints.draw_float = [](Rng& g, const QContext& ctx, int r, ParameterAssignment& pa) {
		(void)ctx;
		std::vector<Cx> x;
		for (int i = 0; i < r; ++i)
			x.push_back(rand_cx(g, 0.9, 1.1));
		for (const char* name : {"a", "b", "c", "d", "e", "f", "g"})
			put(pa, name, {rand_cx(g, 0.8, 1.25)});
		put(pa, "x", x);
	};
	return def;
}

} // namespace

void register_subset(std::vector<IdentityDef>& out) {
	out.push_back(def_cnnt109());
	out.push_back(def_cnnt109c());
	out.push_back(def_cnint109());
	out.push_back(def_cnint109c());
}

} // namespace ids
} // namespace qident
