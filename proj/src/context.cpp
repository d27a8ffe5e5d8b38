#include "qident/context.hpp"

#include <cmath>

namespace qident {

std::string mode_name(Mode m) {
	switch (m) {
	case Mode::exact: return "exact";
	case Mode::pseries: return "pseries";
	case Mode::floating: return "float";
	}
	return "?";
}

Mode parse_mode(const std::string& name) {
	if (name == "exact")
		return Mode::exact;
	if (name == "pseries")
		return Mode::pseries;
	if (name == "float")
		return Mode::floating;
	throw DomainError("unknown mode: " + name);
}

unsigned digits10_for_bits(unsigned bits) {
	return static_cast<unsigned>(bits * 0.301029995663981);
}

unsigned set_working_precision(unsigned bits) {
	if (bits < 64)
		throw DomainError("working precision below 64 bits");
	/* request enough decimal digits that the underlying binary precision
	 * is at least `bits` */
	unsigned digits = static_cast<unsigned>(std::ceil(bits * 0.301029995663981)) + 2;
	Real::default_precision(digits);
	return digits;
}

static Real pow10(double e) {
	return boost::multiprecision::pow(Real(10), Real(e));
}

Real default_epsilon(unsigned bits) {
	return pow10(-0.65 * digits10_for_bits(bits));
}

Real default_tolerance(unsigned bits) {
	return pow10(-0.6 * digits10_for_bits(bits));
}

QContext QContext::exact(const Rat& q) {
	QContext ctx;
	ctx.mode = Mode::exact;
	ctx.q_rat = q;
	return ctx;
}

QContext QContext::pseries(const Rat& q, unsigned order) {
	if (order == 0)
		throw DomainError("pseries order must be positive");
	QContext ctx;
	ctx.mode = Mode::pseries;
	ctx.q_rat = q;
	ctx.order = order;
	return ctx;
}

QContext QContext::floating(const Cx& q, unsigned bits) {
	set_working_precision(bits);
	QContext ctx;
	ctx.mode = Mode::floating;
	ctx.precision_bits = bits;
	ctx.q_cx = q;
	ctx.epsilon = default_epsilon(bits);
	ctx.tolerance = default_tolerance(bits);
	return ctx;
}

QContext QContext::floating(const Rat& q, unsigned bits) {
	set_working_precision(bits);
	return floating(Cx(Real(numerator(q)) / Real(denominator(q))), bits);
}

Scalar scalar_from_rational(long long num, long long den, const QContext& ctx) {
	Rat v = rat(num, den);
	switch (ctx.mode) {
	case Mode::exact:
		return Scalar(v);
	case Mode::pseries:
		return Scalar(PSeries::constant(v, ctx.order));
	case Mode::floating:
		return Scalar(Cx(Real(numerator(v)) / Real(denominator(v))));
	}
	throw DomainError("scalar_from_rational: bad mode");
}

bool scalar_is_zero(const Scalar& x, const Real& tol) {
	if (std::holds_alternative<Rat>(x)) {
		if (!tol.is_zero())
			throw DomainError("scalar_is_zero: exact mode requires tol = 0");
		return std::get<Rat>(x) == 0;
	}
	if (std::holds_alternative<PSeries>(x)) {
		if (!tol.is_zero())
			throw DomainError("scalar_is_zero: pseries mode requires tol = 0");
		return std::get<PSeries>(x).is_zero();
	}
	return abs(std::get<Cx>(x)) <= tol;
}

} // namespace qident
