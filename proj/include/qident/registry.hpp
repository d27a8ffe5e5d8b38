#pragma once

/*
 * Identity registry.
 *
 * Every catalogue entry is an IdentityDef: a schema of named parameters,
 * the balance constraints that make dependent parameters computable from
 * the free ones, the supported ranks and modes, and the two side
 * evaluators.  Evaluators are stored type-erased; they are written as
 * generic templates over Kernel<T> and wrapped by make_side (all three
 * kernels) or make_side_float (float kernel only).
 *
 * A ParameterAssignment is one concrete evaluation point.  Scalar-valued
 * entries hold Rat values in the exact and p-series modes and Cx values in
 * float mode; discrete parameters are plain integers.  Asg<T> is the same
 * point lowered into a kernel's value type.
 */

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qident/qkernel.hpp"
#include "qident/rng.hpp"

namespace qident {

struct ParameterAssignment {
	int r = 1;
	std::map<std::string, std::vector<Scalar>> values; // size 1 (scalar) or r (vector)
	std::map<std::string, std::vector<long>> ints;     // discrete: "n" size r, "N" size 1
	long extend = 0; // extension of terminating bounds; summands past the
	                 // printed bound must vanish
};

template <class T>
struct Asg {
	int r = 1;
	long extend = 0;
	std::map<std::string, std::vector<T>> v;
	std::map<std::string, std::vector<long>> ints;

	const T& s(const std::string& name) const {
		auto it = v.find(name);
		if (it == v.end() || it->second.size() != 1)
			throw DomainError("assignment: no scalar parameter " + name);
		return it->second[0];
	}

	const T& at(const std::string& name, int i) const {
		auto it = v.find(name);
		if (it == v.end() || i < 0 || static_cast<std::size_t>(i) >= it->second.size())
			throw DomainError("assignment: no component " + name + "[" + std::to_string(i) + "]");
		return it->second[static_cast<std::size_t>(i)];
	}

	long ni(const std::string& name, int i) const {
		auto it = ints.find(name);
		if (it == ints.end() || i < 0 || static_cast<std::size_t>(i) >= it->second.size())
			throw DomainError("assignment: no integer " + name + "[" + std::to_string(i) + "]");
		return it->second[static_cast<std::size_t>(i)];
	}

	long N(const std::string& name) const { return ni(name, 0); }

	/* terminating summation bounds, including the extension margin */
	std::vector<long> bounds(const std::string& name = "n") const {
		auto it = ints.find(name);
		if (it == ints.end())
			throw DomainError("assignment: no integer parameter " + name);
		std::vector<long> b = it->second;
		if (b.size() == 1 && r > 1)
			b.assign(static_cast<std::size_t>(r), b[0]);
		for (long& x : b)
			x += extend;
		return b;
	}
};

template <class T, class K>
Asg<T> lower(const K& k, const ParameterAssignment& pa) {
	Asg<T> out;
	out.r = pa.r;
	out.extend = pa.extend;
	out.ints = pa.ints;
	for (const auto& [name, vals] : pa.values) {
		std::vector<T> conv;
		conv.reserve(vals.size());
		for (const Scalar& s : vals) {
			if constexpr (std::is_same_v<T, Cx>) {
				conv.push_back(std::get<Cx>(s));
			} else {
				conv.push_back(k.from_rat(std::get<Rat>(s)));
			}
		}
		out.v.emplace(name, std::move(conv));
	}
	return out;
}

enum class ParamKind {
	free_scalar,
	free_vector,    // one component per row, i = 1..r
	dep_scalar,     // determined by a constraint
	dep_vector,
	disc_vector,    // summation bounds n_1..n_r
	disc_scalar     // single bound N
};

struct ParamSpec {
	std::string name;
	ParamKind kind;
};

/* affine exponent  c0 + cr*r + cn*n_i + cN*N  of the q-power in a balance
 * constraint */
struct QExp {
	long c0 = 0, cr = 0, cn = 0, cN = 0;
};

/* dependent = q^{qexp} * prod (param ^ power); vector-valued entries in
 * the monomial take their i-th component when the dependent is a vector */
struct Constraint {
	std::string solve_for;
	bool per_component = false;
	std::vector<std::pair<std::string, int>> monomial;
	QExp qexp;
};

using SideFn = std::function<Scalar(const QContext&, const ParameterAssignment&)>;

/* float-mode sampling ranges; the defaults suit parameters of modulus
 * around 1 with |q| well inside the unit disc */
struct SamplerHints {
	double q_lo = 0.15, q_hi = 0.40;
	long N_min = 0;
	bool need_positive_n = true;
	std::string corrupt; // negative-control target when no dependent exists
	/* identity-specific float draw; fills every free parameter */
	std::function<void(Rng&, const QContext&, int r, ParameterAssignment&)> draw_float;
	/* extra admissibility veto, applied after constraint solving */
	std::function<bool(const QContext&, const ParameterAssignment&)> admissible;
};

struct IdentityDef {
	std::string id;
	std::string citation;
	std::string summary;
	std::vector<int> rank_support;
	std::vector<Mode> modes;
	std::vector<ParamSpec> schema;
	std::vector<Constraint> constraints;
	SideFn lhs, rhs;
	/* false when the printed statement carries a known defect; the live
	 * evaluators then follow the corrected form, the printed one is kept
	 * for the audit */
	bool as_printed = true;
	std::string correction_note;
	SideFn lhs_printed, rhs_printed;
	SamplerHints hints;
	int max_n = 3;

	bool supports(Mode m) const {
		for (Mode x : modes)
			if (x == m)
				return true;
		return false;
	}
	bool supports_rank(int r) const {
		for (int x : rank_support)
			if (x == r)
				return true;
		return false;
	}
	const ParamSpec* find_param(const std::string& name) const {
		for (const auto& p : schema)
			if (p.name == name)
				return &p;
		return nullptr;
	}
};

const std::vector<IdentityDef>& registry();
const IdentityDef* find_identity(const std::string& id);

/* glob with * and ? wildcards; a pattern also matches an elliptic entry
 * with its "ell-" prefix stripped */
bool identity_glob_match(const std::string& pattern, const std::string& id);
std::vector<const IdentityDef*> match_identities(const std::string& pattern);

struct IdentityInfo {
	std::string id;
	std::string citation;
	std::string summary;
	std::vector<int> ranks;
	std::vector<std::string> modes;
};
std::vector<IdentityInfo> list_identities();

/* fill every dependent parameter of def in place from the free ones */
void solve_constraints(const IdentityDef& def, const QContext& ctx, ParameterAssignment& pa);

/* draw a fresh admissible-looking point (pole screening happens in verify) */
ParameterAssignment sample_parameters(const IdentityDef& def, const QContext& ctx, int r,
                                      Rng& rng, int max_n);

enum class Status { pass, fail, pole_rejected, error, skipped };
std::string status_name(Status s);

struct CheckResult {
	std::string identity;
	Mode mode = Mode::exact;
	int r = 1;
	std::uint64_t seed_index = 0;
	Status status = Status::error;
	std::string detail;
	std::optional<Scalar> lhs, rhs, residual;
	std::optional<Real> rel_err; // float mode only
	int redraws = 0;
	double time_ms = 0;
	ParameterAssignment point;
	bool corrupted = false; // negative control
};

struct VerifyOpts {
	int max_n = 3;
	int max_redraws = 1000;
	std::optional<Real> tolerance; // overrides the context default
	bool corrupt = false;          // negative control: perturb one parameter by q
	long extend = 0;               // widen terminating bounds (vanishing-tail probe)
};

Scalar eval_side(const IdentityDef& def, const QContext& ctx, const ParameterAssignment& pa,
                 bool rhs);

CheckResult verify(const IdentityDef& def, const QContext& ctx, int r, std::uint64_t base_seed,
                   std::uint64_t seed_index, const VerifyOpts& opts = {});

/* r = 1 cross-check against the independently coded classical forms */
struct AuditResult {
	std::string identity;
	std::string reference;
	bool checked = false; // false when no r = 1 reduction is wired up
	bool consistent = false;
	std::string detail;
};
AuditResult audit_r1(const IdentityDef& def, const QContext& ctx, std::uint64_t seed);

namespace detail {

template <class Fn>
SideFn make_side(Fn fn) {
	return [fn](const QContext& ctx, const ParameterAssignment& pa) -> Scalar {
		return dispatch(ctx, [&](const auto& k) -> Scalar {
			using T = typename std::decay_t<decltype(k)>::value_type;
			return Scalar(fn(k, lower<T>(k, pa)));
		});
	};
}

template <class Fn>
SideFn make_side_float(Fn fn) {
	return [fn](const QContext& ctx, const ParameterAssignment& pa) -> Scalar {
		if (ctx.mode != Mode::floating)
			throw ModeError("identity requires float mode");
		auto k = kernel_cx(ctx);
		return Scalar(fn(k, lower<Cx>(k, pa)));
	};
}

} // namespace detail

} // namespace qident
