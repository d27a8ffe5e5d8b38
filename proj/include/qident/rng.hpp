#pragma once

/*
 * Deterministic random streams for parameter sampling.
 *
 * SplitMix-style generator: pure 64-bit integer arithmetic, so a stream is
 * reproducible across platforms and standard library versions, which the
 * byte-identical report requirement depends on.  Streams are keyed by
 * (identity, mode, rank, seed index, base seed) through fnv1a hashing.
 */

#include <cstdint>
#include <string>

#include "qident/scalar.hpp"

namespace qident {

inline std::uint64_t fnv1a(const std::string& s) {
	std::uint64_t h = 1469598103934665603ull;
	for (unsigned char c : s) {
		h ^= c;
		h *= 1099511628211ull;
	}
	return h;
}

struct Rng {
	std::uint64_t state;

	explicit Rng(std::uint64_t seed) : state(seed) {}

	std::uint64_t next() {
		std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
		return z ^ (z >> 31);
	}

	/* modulo bias is irrelevant here; determinism is what matters */
	std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

	long irange(long lo, long hi) { // inclusive
		return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
	}

	double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

	bool coin() { return next() & 1; }

	/* nonzero rational with numerator in [-height, height] and denominator
	 * in [2, height+1]; skewed small on purpose so exact runs stay cheap */
	Rat small_rat(long height = 9) {
		long num = 0;
		while (num == 0)
			num = irange(-height, height);
		long den = irange(2, height + 1);
		return rat(num, den);
	}
};

/* stream key for one check */
inline std::uint64_t stream_seed(const std::string& identity, const std::string& mode,
                                 int r, std::uint64_t base, std::uint64_t index) {
	std::uint64_t h = fnv1a(identity + "|" + mode);
	h ^= base + 0x9e3779b97f4a7c15ull;
	h ^= static_cast<std::uint64_t>(r) << 32;
	h ^= index * 0xd1342543de82ef95ull;
	return h;
}

} // namespace qident
