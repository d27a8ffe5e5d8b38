#pragma once

/*
 * Evaluation context.
 *
 * A QContext pins down everything an evaluation needs besides the identity
 * and the parameter point: the arithmetic mode, the base q, the nome
 * truncation order (p-series mode), the working precision and the derived
 * epsilon / tolerance thresholds (float mode).
 *
 * Contexts are made through the factories, which set the global working
 * precision before any Real member is constructed.  MPFR precision is a
 * thread-wide setting, so a fresh thread must call set_working_precision
 * itself before touching Real values.
 */

#include <cstdint>
#include <string>

#include "qident/scalar.hpp"

namespace qident {

enum class Mode { exact, pseries, floating };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name); // "exact" | "pseries" | "float"

/* decimal digits carried by `bits` binary digits */
unsigned digits10_for_bits(unsigned bits);

/* set the default MPFR precision so that Reals carry at least `bits` binary
 * digits; returns the decimal digit count actually requested */
unsigned set_working_precision(unsigned bits);

/* default thresholds, as powers of ten in the working precision:
 * epsilon truncates infinite products and adaptive tails, tolerance accepts
 * or rejects a float-mode residual */
Real default_epsilon(unsigned bits);
Real default_tolerance(unsigned bits);

struct QContext {
	Mode mode = Mode::exact;

	/* exact and p-series modes */
	Rat q_rat = qident::rat(1, 2);
	unsigned order = 8; // series truncated after p^{order-1}

	/* float mode */
	Cx q_cx;
	Cx p_cx; // nonzero only when probing theta behaviour numerically
	unsigned precision_bits = 256;
	Real epsilon;
	Real tolerance;
	std::uint64_t max_terms = 50000000;

	static QContext exact(const Rat& q);
	static QContext pseries(const Rat& q, unsigned order);
	/* q must have been constructed at (or above) the target precision;
	 * prefer the rational overload, which cannot get this wrong */
	static QContext floating(const Cx& q, unsigned bits);
	static QContext floating(const Rat& q, unsigned bits);
};

/* embed num/den into the domain of ctx.mode */
Scalar scalar_from_rational(long long num, long long den, const QContext& ctx);

/* zero test; tol must be exactly 0 for the two exact modes */
bool scalar_is_zero(const Scalar& x, const Real& tol);

} // namespace qident
