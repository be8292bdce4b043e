#pragma once

#include <string>

#include "torbord/io.hpp"
#include "torbord/simplicial.hpp"

namespace torbord {

/// Lexicographically minimal sorted facet-mask list over all vertex
/// relabelings; the dedup key for enumeration.
std::vector<Mask> canonical_encoding(const SimplicialComplex& k);

/// Every complex on [m] (facet antichains of nonempty proper subsets,
/// plus the void complex), one representative per relabeling class,
/// sorted by canonical encoding.  Exhaustive antichain scan; m <= 5.
std::vector<SimplicialComplex> canonical_complexes(int m);

/// A random complex on [m] from a handful of random generating sets;
/// deterministic in the generator state.
SimplicialComplex random_complex(int m, SplitMix64& rng);

/// Self-contained per-complex record used by the enumeration stream.
Json enumeration_record(const SimplicialComplex& k);

enum class EnumerateFind { bordant_pairs, generators };

/// Writes the JSONL stream for `enumerate` to `out`.  Exhaustive for
/// m <= 5; m = 6, 7 sample `sample_count` complexes from `seed`.
/// Deterministic: reruns with the same arguments are byte-identical.
void run_enumerate(int m, EnumerateFind find, std::ostream& out, std::uint64_t seed,
                   int sample_count);

} // namespace torbord
