#pragma once

/*
 * Determinant evaluation and the two closed-form determinant lemmas the
 * identity catalogue leans on.
 *
 * det_generic supports r <= 8: cofactor expansion through r = 4 (division
 * free, so it is also the fallback whenever a fraction-free pivot is not
 * invertible), Bareiss elimination for larger exact matrices, partial-pivot
 * LU for larger float matrices.
 *
 * The closed forms, in kernel ops (diff / one_minus turn into theta forms
 * under the p-series kernel):
 *
 *   lemdet1:  det_{i,j} [ (A X_i, A C / X_i)_{r-j} / (B X_i, B C / X_i)_{r-j} ]
 *     = prod_{i<j} diff(X_j, X_i) one_minus(C / X_i X_j)
 *       * A^C(r,2) q^C(r,3)
 *       * prod_i (B/A, A B C q^{2r-2i})_{i-1} / (B X_i, B C / X_i)_{r-1}
 *
 *   lemdet1a: det_{i,j} [ X_i^{r-j} (A / X_i)_{r-j} / (B X_i)_{r-j} ]
 *     = prod_{i<j} diff(X_i, X_j) * prod_i (A B q^{2r-2i})_{i-1} / (B X_i)_{r-1}
 *
 * with C(n,k) the binomial coefficient.  Row/column indices are 1-based to
 * match the formulas.
 */

#include <vector>

#include "qident/qkernel.hpp"

namespace qident {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

template <class K, class T = typename K::value_type>
T det_cofactor(const K& k, const Matrix<T>& m, std::vector<std::size_t>& cols,
               std::size_t row) {
	const std::size_t n = m.size();
	if (row == n)
		return k.one();
	T acc = k.from_rat(Rat(0));
	bool first = true;
	for (std::size_t ci = 0; ci < cols.size(); ++ci) {
		std::size_t c = cols[ci];
		cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(ci));
		T sub = m[row][c] * det_cofactor(k, m, cols, row + 1);
		if (ci % 2 == 1)
			sub = -sub;
		acc = first ? sub : acc + sub;
		first = false;
		cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(ci), c);
	}
	return acc;
}

template <class K, class T = typename K::value_type>
T det_bareiss(const K& k, Matrix<T> m) {
	const std::size_t n = m.size();
	T prev = k.one();
	bool neg = false;
	for (std::size_t c = 0; c < n - 1; ++c) {
		std::size_t piv = c;
		while (piv < n && k.vanishes(m[piv][c]))
			++piv;
		if (piv == n)
			return k.from_rat(Rat(0));
		if (piv != c) {
			std::swap(m[piv], m[c]);
			neg = !neg;
		}
		for (std::size_t i = c + 1; i < n; ++i)
			for (std::size_t j = c + 1; j < n; ++j)
				m[i][j] = (m[i][j] * m[c][c] - m[i][c] * m[c][j]) / prev;
		prev = m[c][c];
	}
	return neg ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

inline Cx det_lu(const Kernel<Cx>& k, Matrix<Cx> m) {
	const std::size_t n = m.size();
	Cx det = k.one();
	for (std::size_t c = 0; c < n; ++c) {
		std::size_t piv = c;
		Real best = abs(m[c][c]);
		for (std::size_t i = c + 1; i < n; ++i) {
			Real cand = abs(m[i][c]);
			if (cand > best) {
				best = cand;
				piv = i;
			}
		}
		if (best.is_zero())
			return Cx(0);
		if (piv != c) {
			std::swap(m[piv], m[c]);
			det = -det;
		}
		det = det * m[c][c];
		for (std::size_t i = c + 1; i < n; ++i) {
			Cx f = m[i][c] / m[c][c];
			for (std::size_t j = c; j < n; ++j)
				m[i][j] = m[i][j] - f * m[c][j];
		}
	}
	return det;
}

} // namespace detail

template <class K, class T = typename K::value_type>
T det_generic(const K& k, const Matrix<T>& m) {
	const std::size_t n = m.size();
	if (n == 0 || n > 8)
		throw DomainError("det_generic: order must be 1..8");
	for (const auto& row : m)
		if (row.size() != n)
			throw DomainError("det_generic: matrix not square");
	if (n <= 4) {
		std::vector<std::size_t> cols(n);
		for (std::size_t i = 0; i < n; ++i)
			cols[i] = i;
		return detail::det_cofactor(k, m, cols, 0);
	}
	if constexpr (K::mode == Mode::floating) {
		return detail::det_lu(k, m);
	} else {
		return detail::det_bareiss(k, m);
	}
}

/* matrix entry of the first determinant lemma; i, j are 1-based */
template <class K, class T = typename K::value_type>
T lemdet1_entry(const K& k, int r, int i, int j, const T& A, const T& B, const T& C,
                const std::vector<T>& X) {
	if (i < 1 || i > r || j < 1 || j > r || static_cast<int>(X.size()) != r)
		throw DomainError("lemdet1_entry: bad indices");
	const T& Xi = X[static_cast<std::size_t>(i - 1)];
	T num = qpoch(k, A * Xi, r - j) * qpoch(k, A * C / Xi, r - j);
	T den = qpoch(k, B * Xi, r - j) * qpoch(k, B * C / Xi, r - j);
	return num * k.inv(den);
}

template <class K, class T = typename K::value_type>
T lemdet1_closed(const K& k, int r, const T& A, const T& B, const T& C,
                 const std::vector<T>& X) {
	if (r < 1 || static_cast<int>(X.size()) != r)
		throw DomainError("lemdet1_closed: bad rank");
	T acc = k.pow(A, binom2(r)) * k.qpow(binom3(r));
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j) {
			acc = acc * k.diff(X[static_cast<std::size_t>(j)], X[static_cast<std::size_t>(i)]);
			acc = acc * k.one_minus(C / (X[static_cast<std::size_t>(i)] * X[static_cast<std::size_t>(j)]));
		}
	for (int i = 1; i <= r; ++i) {
		const T& Xi = X[static_cast<std::size_t>(i - 1)];
		acc = acc * qpoch(k, B / A, i - 1) * qpoch(k, A * B * C * k.qpow(2 * r - 2 * i), i - 1);
		acc = acc * k.inv(qpoch(k, B * Xi, r - 1) * qpoch(k, B * C / Xi, r - 1));
	}
	return acc;
}

/* matrix entry of the second determinant lemma; i, j are 1-based */
template <class K, class T = typename K::value_type>
T lemdet1a_entry(const K& k, int r, int i, int j, const T& A, const T& B,
                 const std::vector<T>& X) {
	if (i < 1 || i > r || j < 1 || j > r || static_cast<int>(X.size()) != r)
		throw DomainError("lemdet1a_entry: bad indices");
	const T& Xi = X[static_cast<std::size_t>(i - 1)];
	return k.pow(Xi, r - j) * qpoch(k, A / Xi, r - j) * k.inv(qpoch(k, B * Xi, r - j));
}

template <class K, class T = typename K::value_type>
T lemdet1a_closed(const K& k, int r, const T& A, const T& B, const std::vector<T>& X) {
	if (r < 1 || static_cast<int>(X.size()) != r)
		throw DomainError("lemdet1a_closed: bad rank");
	T acc = k.one();
	for (int i = 0; i < r; ++i)
		for (int j = i + 1; j < r; ++j)
			acc = acc * k.diff(X[static_cast<std::size_t>(i)], X[static_cast<std::size_t>(j)]);
	for (int i = 1; i <= r; ++i) {
		const T& Xi = X[static_cast<std::size_t>(i - 1)];
		acc = acc * qpoch(k, A * B * k.qpow(2 * r - 2 * i), i - 1);
		acc = acc * k.inv(qpoch(k, B * Xi, r - 1));
	}
	return acc;
}

/*
 * Residual of the determinant transposition identity
 *
 *   det_{i,j} [ (z_i)_{r-j} / (a_i z_i)_{r-j} ]
 *     = (-1)^C(r,2) q^C(r,3) det_{i,j} [ z_i^{r-j} (a_i)_{r-j} / (a_i z_i)_{r-j} ]
 *
 * returned as lhs - rhs, which must vanish identically.
 */
template <class K, class T = typename K::value_type>
T dettf_residual(const K& k, int r, const std::vector<T>& z, const std::vector<T>& a) {
	if (r < 1 || static_cast<int>(z.size()) != r || static_cast<int>(a.size()) != r)
		throw DomainError("dettf_residual: bad rank");
	Matrix<T> lhs(static_cast<std::size_t>(r)), rhs(static_cast<std::size_t>(r));
	for (int i = 1; i <= r; ++i) {
		const T& zi = z[static_cast<std::size_t>(i - 1)];
		const T& ai = a[static_cast<std::size_t>(i - 1)];
		for (int j = 1; j <= r; ++j) {
			T den = k.inv(qpoch(k, ai * zi, r - j));
			lhs[static_cast<std::size_t>(i - 1)].push_back(qpoch(k, zi, r - j) * den);
			rhs[static_cast<std::size_t>(i - 1)].push_back(
			    k.pow(zi, r - j) * qpoch(k, ai, r - j) * den);
		}
	}
	T sign = k.from_rat(binom2(r) % 2 ? Rat(-1) : Rat(1));
	return det_generic(k, lhs) - sign * k.qpow(binom3(r)) * det_generic(k, rhs);
}

} // namespace qident
