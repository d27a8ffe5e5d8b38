#pragma once

/*
 * Exception hierarchy for the verification engine.
 *
 * Everything thrown on purpose derives from Error so callers can fence off
 * engine failures from genuine bugs.  The distinction that matters to the
 * driver is PoleError (a sampled point landed on a pole of one side; the
 * point is rejected and redrawn) versus ConvergenceError / SamplingError
 * (the run itself is in trouble and the check is reported as errored).
 */

#include <stdexcept>
#include <string>

namespace qident {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/* invalid argument or an operation unavailable in the active mode */
struct DomainError : Error {
	using Error::Error;
};

/* operation requested in a mode that cannot support it (e.g. infinite
 * products in exact arithmetic) */
struct ModeError : DomainError {
	using DomainError::DomainError;
};

/* a q-shifted factorial met a vanishing factor in a denominator position;
 * `factor` describes the offending term, `index` its position j within
 * the product */
struct PoleError : Error {
	std::string factor;
	long index;

	PoleError(const std::string& what, std::string factor_, long index_)
	    : Error(what), factor(std::move(factor_)), index(index_) {}
};

/* an adaptive sum or truncated infinite product exceeded its term budget
 * without meeting the stopping rule */
struct ConvergenceError : Error {
	using Error::Error;
};

/* the parameter sampler ran out of redraw attempts for one check */
struct SamplingError : Error {
	using Error::Error;
};

} // namespace qident
