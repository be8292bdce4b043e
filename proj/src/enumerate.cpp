#include "torbord/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "torbord/bier.hpp"
#include "torbord/bordism.hpp"
#include "torbord/charnum.hpp"
#include "torbord/vectors.hpp"

namespace torbord {

std::vector<Mask> canonical_encoding(const SimplicialComplex& k) {
    const int m = k.m();
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::vector<Mask> best;
    do {
        std::vector<Mask> relabeled;
        relabeled.reserve(k.facet_masks().size());
        for (Mask f : k.facet_masks()) {
            Mask g = 0;
            for (int v = 0; v < m; ++v)
                if (f & (Mask{1} << v)) g |= Mask{1} << perm[v];
            relabeled.push_back(g);
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (best.empty() || relabeled < best) best = std::move(relabeled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<SimplicialComplex> canonical_complexes(int m) {
    if (m < 2 || m > 5) fail(errc::range, "exhaustive enumeration supports 2 <= m <= 5");
    const Mask full = (Mask{1} << m) - 1;

    std::set<std::vector<Mask>> seen;
    std::vector<SimplicialComplex> out;
    auto offer = [&](const SimplicialComplex& k) {
        auto enc = canonical_encoding(k);
        if (seen.insert(enc).second)
            out.push_back(SimplicialComplex::from_facet_masks(m, enc));
    };

    offer(void_complex(m));
    std::vector<Mask> chain;
    std::function<void(Mask)> rec = [&](Mask from) {
        if (!chain.empty()) offer(SimplicialComplex::from_facet_masks(m, chain));
        for (Mask s = from; s < full; ++s) {
            bool comparable = false;
            for (Mask t : chain)
                if ((s & t) == s || (s & t) == t) {
                    comparable = true;
                    break;
                }
            if (comparable) continue;
            chain.push_back(s);
            rec(s + 1);
            chain.pop_back();
        }
    };
    rec(1);

    std::sort(out.begin(), out.end(), [](const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facet_masks() < b.facet_masks();
    });
    return out;
}

SimplicialComplex random_complex(int m, SplitMix64& rng) {
    const Mask full = (Mask{1} << m) - 1;
    const int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(m + 2)));
    std::vector<Mask> gens;
    for (int i = 0; i < count; ++i) {
        Mask s = 1 + rng.below(full - 1); // nonempty, proper
        gens.push_back(s);
    }
    return SimplicialComplex::from_facet_masks(m, std::move(gens));
}

Json enumeration_record(const SimplicialComplex& k) {
    Json j;
    j["encoding"] = k.to_text();
    j["m"] = k.m();
    j["f"] = int_vector_to_json(k.f_vector());
    j["alpha"] = int_vector_to_json(alpha_vector(k));
    j["mu"] = int_vector_to_json(mu_vector(k));
    j["h_bier"] = int_vector_to_json(h_vector_bier(k));
    const auto cls = decompose(k);
    Json reduced = Json::object();
    for (const auto& [b, v] : cls.reduced) reduced[std::to_string(b)] = int_to_json(v);
    j["reduced"] = reduced;
    j["generator"] = is_polynomial_generator(k).generator;
    j["null_bordant_real"] = null_bordant_real(k);
    j["null_bordant_oriented"] = null_bordant_oriented(k);
    return j;
}

void run_enumerate(int m, EnumerateFind find, std::ostream& out, std::uint64_t seed,
                   int sample_count) {
    std::vector<SimplicialComplex> complexes;
    if (m >= 2 && m <= 5) {
        complexes = canonical_complexes(m);
    } else if (m == 6 || m == 7) {
        SplitMix64 rng(seed);
        std::set<std::vector<Mask>> seen;
        int guard = 0;
        while (static_cast<int>(complexes.size()) < sample_count && ++guard < sample_count * 64) {
            auto k = random_complex(m, rng);
            if (seen.insert(k.facet_masks()).second) complexes.push_back(k);
        }
        std::sort(complexes.begin(), complexes.end(),
                  [](const SimplicialComplex& a, const SimplicialComplex& b) {
                      return a.facet_masks() < b.facet_masks();
                  });
    } else {
        fail(errc::range, "enumerate supports m <= 5 exhaustively and m = 6, 7 sampled");
    }

    if (find == EnumerateFind::bordant_pairs) {
        // Bucket by the complete bordism invariant: the lower half of the
        // Bier h-vector.
        std::map<std::vector<Int>, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < complexes.size(); ++i) {
            const auto h = h_vector_bier(complexes[i]);
            std::vector<Int> key(h.begin() + 1, h.begin() + 1 + (m - 1) / 2);
            buckets[key].push_back(i);
        }
        for (const auto& [key, members] : buckets) {
            if (members.size() < 2) continue;
            for (std::size_t a = 0; a < members.size(); ++a)
                for (std::size_t b = a + 1; b < members.size(); ++b) {
                    Json j;
                    j["m"] = m;
                    j["find"] = "bordant-pairs";
                    j["k1"] = enumeration_record(complexes[members[a]]);
                    j["k2"] = enumeration_record(complexes[members[b]]);
                    out << j.dump() << '\n';
                }
        }
    } else {
        for (const auto& k : complexes) {
            const auto cert = is_polynomial_generator(k);
            if (!cert.generator) continue;
            Json j;
            j["m"] = m;
            j["find"] = "generators";
            j["record"] = enumeration_record(k);
            j["milnor"] = int_to_json(cert.milnor);
            j["milnor_bound"] = int_to_json(cert.bound);
            j["condition"] = cert.condition;
            out << j.dump() << '\n';
        }
    }
}

} // namespace torbord
