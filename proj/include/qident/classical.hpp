#pragma once

/*
 * Classical one-variable reference forms, coded directly from their
 * textbook statements with plain loops.  They serve two purposes: the
 * rank-1 regression suite, and the audit that pins each catalogue entry's
 * r = 1 specialisation to an established fact.
 *
 * Terminating statements are evaluated exactly; nonterminating and
 * bilateral ones in float.  Every function returns both sides.
 */

#include "qident/qkernel.hpp"

namespace qident::classical {

template <class T>
struct Sides {
	T lhs, rhs;
	T residual() const { return lhs - rhs; }
};

/* sum of a terminating balanced 3phi2 with argument q */
Sides<Rat> pfaff_saalschutz(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                            long n);

/* sum of a terminating very-well-poised 6phi5 */
Sides<Rat> rogers_6w5(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c, long n);

/* sum of a nonterminating very-well-poised 6phi5, |aq/bcd| < 1 */
Sides<Cx> rogers_6w5_nt(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& c, const Cx& d);

/* sum of a terminating very-well-poised balanced 8phi7 (a^2 q^{n+1} = bcde;
 * e is computed from the rest) */
Sides<Rat> jackson_8w7(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                       const Rat& d, long n);

/* four-term very-well-poised 10phi9 transformation (a^3 q^{n+2} = bcdefg;
 * g is computed from the rest) */
Sides<Rat> bailey_10w9(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                       const Rat& d, const Rat& e, const Rat& f, long n);

/* very-well-poised 8phi7 as a multiple of a balanced 4phi3 */
Sides<Rat> watson_8w7_4p3(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                          const Rat& d, const Rat& e, long n);

/* terminating balanced 4phi3 transformation (def = abc q^{1-n}; f is
 * computed from the rest) */
Sides<Rat> sears_4p3(const Kernel<Rat>& k, const Rat& a, const Rat& b, const Rat& c,
                     const Rat& d, const Rat& e, long n);

/* Gauss sum of 2phi1 at argument c/ab, |c/ab| < 1 */
Sides<Cx> q_gauss(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& c);

/* binomial sum of 1phi0, |z| < 1 */
Sides<Cx> q_binomial(const Kernel<Cx>& k, const Cx& a, const Cx& z);

/* bilateral 1psi1 sum, |b/a| < |z| < 1 */
Sides<Cx> ramanujan_1p1(const Kernel<Cx>& k, const Cx& a, const Cx& b, const Cx& z);

} // namespace qident::classical
