#include "torbord/bier.hpp"

#include <algorithm>

namespace torbord {

std::vector<std::pair<Mask, Mask>> bier_facets(const SimplicialComplex& k) {
    const int m = k.m();
    const auto faces_k = k.all_faces();
    const auto faces_d = k.alexander_dual().all_faces();
    std::vector<std::pair<Mask, Mask>> facets;
    for (Mask i : faces_k)
        for (Mask j : faces_d) {
            if (i & j) continue;
            if (popcount(i) + popcount(j) == m - 1) facets.emplace_back(i, j);
        }
    std::sort(facets.begin(), facets.end());
    return facets;
}

BierSphere bier_sphere(const SimplicialComplex& k) {
    const int m = k.m();
    std::vector<Mask> facets;
    for (const auto& [i, j] : bier_facets(k)) facets.push_back(i | (j << m));
    return BierSphere{SimplicialComplex::from_facet_masks(2 * m, std::move(facets)), m};
}

std::vector<Int> bier_f_vector(const SimplicialComplex& k) {
    const int m = k.m();
    const auto faces_k = k.all_faces();
    const auto faces_d = k.alexander_dual().all_faces();
    std::vector<Int> f(m, 0);
    for (Mask i : faces_k)
        for (Mask j : faces_d) {
            if (i & j) continue;
            int c = popcount(i) + popcount(j);
            if (c <= m - 1) ++f[c];
        }
    return f;
}

std::vector<Int> h_vector(const std::vector<Int>& f, int n) {
    if (static_cast<int>(f.size()) != n + 1) fail(errc::range, "h_vector: f must have length n+1");
    // sum_k h_k t^{n-k} = sum_k f_{n-1-k} (t-1)^k
    std::vector<Int> h(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        const Int& fk = f[n - k]; // f_{n-1-k}
        if (fk == 0) continue;
        for (int t = 0; t <= k; ++t) {
            // coefficient of t^t in (t-1)^k contributes to h_{n-t}
            Int c = binomial(k, t) * fk;
            h[n - t] += ((k - t) % 2 == 0) ? c : -c;
        }
    }
    return h;
}

std::vector<Int> h_vector_bier(const SimplicialComplex& k) {
    const int m = k.m();
    const auto f = k.f_vector(); // f[i] = f_{i-1}
    std::vector<Int> h(m, 0);
    for (int p = 0; p < m; ++p) {
        Int v = 1;
        for (int i = 1; i <= p; ++i) v += f[i];         // f_0 .. f_{p-1}
        for (int i = m - p; i <= m - 1; ++i) v -= f[i]; // f_{m-p-1} .. f_{m-2}
        h[p] = v;
    }
    // Dehn-Sommerville sanity against the enumerated face vector.
    const auto direct = h_vector(bier_f_vector(k), m - 1);
    if (direct != h)
        fail(errc::internal_mismatch, "h-vector of the Bier sphere: formula and enumeration disagree");
    return h;
}

std::vector<std::vector<long long>> fan_rays(int m) {
    std::vector<std::vector<long long>> cols(2 * m, std::vector<long long>(m - 1, 0));
    for (int i = 0; i < m - 1; ++i) {
        cols[i][i] = -1;
        cols[m + i][i] = 1;
    }
    for (int c = 0; c < m - 1; ++c) {
        cols[m - 1][c] = 1;      // -e_m
        cols[2 * m - 1][c] = -1; // e_m
    }
    return cols;
}

bool facet_cones_unimodular(const SimplicialComplex& k) {
    const int m = k.m();
    const auto rays = fan_rays(m);
    for (const auto& [i, j] : bier_facets(k)) {
        Matrix gens;
        for (int v = 0; v < m; ++v)
            if (i & (Mask{1} << v)) gens.emplace_back(rays[v].begin(), rays[v].end());
        for (int v = 0; v < m; ++v)
            if (j & (Mask{1} << v)) gens.emplace_back(rays[m + v].begin(), rays[m + v].end());
        Int det = det_bareiss(gens);
        if (det != 1 && det != -1) {
            SimplicialComplex facet = SimplicialComplex::from_facet_masks(2 * m, {i | (j << m)});
            fail(errc::nonregular, "facet cone not unimodular at " + facet.to_text());
        }
    }
    return true;
}

} // namespace torbord
