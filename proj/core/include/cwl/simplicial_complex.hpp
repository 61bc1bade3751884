#pragma once

#include <cstdint>
#include <vector>

#include "cwl/monomial_ideal.hpp"

namespace cwl {

/// A simplicial complex on vertices 1..n, stored by its facets (an antichain
/// under inclusion). Faces are vertex subsets encoded as bitmasks.
class SimplicialComplex {
 public:
  SimplicialComplex(int vertex_count, std::vector<std::uint32_t> facets);

  int vertex_count() const { return n_; }
  const std::vector<std::uint32_t>& facets() const { return facets_; }

  bool is_face(std::uint32_t subset) const;

  friend bool operator==(const SimplicialComplex&,
                         const SimplicialComplex&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> facets_;
};

/// The Stanley-Reisner ideal: squarefree monomials of the minimal non-faces.
MonomialIdeal stanley_reisner(const SimplicialComplex& delta);

/// Alexander dual: { F subset [n] : [n] \ F not a face of delta }.
SimplicialComplex alexander_dual(const SimplicialComplex& delta);

/// The 6-vertex triangulation of the real projective plane.
SimplicialComplex rp2_triangulation();

}  // namespace cwl
