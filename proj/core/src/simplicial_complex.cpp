#include "cwl/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace cwl {

SimplicialComplex::SimplicialComplex(int vertex_count,
                                     std::vector<std::uint32_t> facets)
    : n_(vertex_count) {
  if (n_ < 1 || n_ > 20) {
    throw std::invalid_argument("SimplicialComplex: vertex count out of range");
  }
  if (facets.empty()) {
    throw std::invalid_argument("SimplicialComplex: no facets");
  }
  const std::uint32_t all = (1u << n_) - 1;
  for (auto f : facets) {
    if (f & ~all) {
      throw std::invalid_argument("SimplicialComplex: facet out of range");
    }
  }
  // reduce to an inclusion antichain
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (auto f : facets) {
    bool maximal = std::none_of(
        facets.begin(), facets.end(),
        [f](std::uint32_t g) { return g != f && (f & g) == f; });
    if (maximal) facets_.push_back(f);
  }
}

bool SimplicialComplex::is_face(std::uint32_t subset) const {
  return std::any_of(facets_.begin(), facets_.end(), [subset](std::uint32_t f) {
    return (subset & f) == subset;
  });
}

MonomialIdeal stanley_reisner(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  std::vector<ExponentVector> gens;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (delta.is_face(s)) continue;
    // minimal non-face: all proper subsets obtained by dropping one vertex
    // are faces
    bool minimal = true;
    for (int v = 0; v < n && minimal; ++v) {
      if ((s & (1u << v)) && !delta.is_face(s & ~(1u << v))) minimal = false;
    }
    if (!minimal) continue;
    ExponentVector m(n);
    for (int v = 0; v < n; ++v) {
      if (s & (1u << v)) m.set(v, 1);
    }
    gens.push_back(m);
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex alexander_dual(const SimplicialComplex& delta) {
  const int n = delta.vertex_count();
  const std::uint32_t all = (1u << n) - 1;
  // facets of the dual are the complements of the minimal non-faces of delta
  std::vector<std::uint32_t> facets;
  for (std::uint32_t s = 0; s <= all; ++s) {
    if (delta.is_face(all & ~s)) continue;  // s not in dual
    facets.push_back(s);
  }
  if (facets.empty()) {
    throw std::domain_error("alexander_dual: dual complex is empty");
  }
  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex rp2_triangulation() {
  // the complement complex of the ten cubic non-faces listed for I_Delta
  auto mask = [](int a, int b, int c) {
    return (1u << (a - 1)) | (1u << (b - 1)) | (1u << (c - 1));
  };
  std::vector<std::uint32_t> nonface_masks = {
      mask(1, 2, 3), mask(1, 2, 4), mask(1, 3, 5), mask(1, 4, 6),
      mask(1, 5, 6), mask(2, 3, 6), mask(2, 4, 5), mask(2, 5, 6),
      mask(3, 4, 5), mask(3, 4, 6)};
  // facets: all 2-faces on 6 vertices that are not in the non-face list
  std::vector<std::uint32_t> facets;
  for (int a = 1; a <= 6; ++a) {
    for (int b = a + 1; b <= 6; ++b) {
      for (int c = b + 1; c <= 6; ++c) {
        auto m = mask(a, b, c);
        if (std::find(nonface_masks.begin(), nonface_masks.end(), m) ==
            nonface_masks.end()) {
          facets.push_back(m);
        }
      }
    }
  }
  return SimplicialComplex(6, std::move(facets));
}

}  // namespace cwl
