#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "cwl/groebner.hpp"
#include "cwl/monomial_ideal.hpp"
#include "cwl/polynomial.hpp"

namespace cwl {

/// A graded ideal: nonzero homogeneous generators over a fixed ring, with a
/// lazily filled, write-once-per-order cache of reduced Groebner bases.
class GradedIdeal {
 public:
  GradedIdeal(PrimeField field, int arity, std::vector<Polynomial> generators);

  static GradedIdeal zero(PrimeField field, int arity) {
    return GradedIdeal(field, arity, {});
  }
  static GradedIdeal from_monomials(PrimeField field,
                                    const MonomialIdeal& ideal);

  const PrimeField& field() const { return field_; }
  int arity() const { return arity_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Reduced Groebner basis (cached per order; safe under concurrent readers).
  const std::vector<Polynomial>& groebner_basis(MonomialOrder ord,
                                                Budget* budget = nullptr) const;

  /// Ideal of leading monomials of the reduced basis (minimal generators).
  MonomialIdeal initial_ideal(MonomialOrder ord,
                              Budget* budget = nullptr) const;

 private:
  PrimeField field_;
  int arity_;
  std::vector<Polynomial> gens_;
  struct Cache {
    std::mutex mu;
    std::map<MonomialOrder, std::vector<Polynomial>> bases;
  };
  std::shared_ptr<Cache> cache_;
};

/// An invertible scalar change of coordinates x_i -> sum phi_ij x_j, together
/// with the seed it was drawn from.
struct RandomCoordinateChange {
  std::vector<std::vector<PrimeField::Scalar>> matrix;
  std::uint64_t seed;
};

RandomCoordinateChange identity_change(const PrimeField& field, int arity);
/// Dense uniform matrix, re-drawn until invertible.
RandomCoordinateChange draw_coordinate_change(const PrimeField& field,
                                              int arity, std::uint64_t seed);

GradedIdeal apply_coordinate_change(const GradedIdeal& ideal,
                                    const RandomCoordinateChange& phi);

/// dim_K I_d.
long graded_piece_dim(const GradedIdeal& ideal, int d);

/// Minimal homogeneous generators (a basis of I_d modulo (m I)_d, degree by
/// degree) and their degree histogram beta_{0,d}.
std::vector<Polynomial> minimal_generators(const GradedIdeal& ideal);
std::map<int, long> beta0_graded(const GradedIdeal& ideal);
long beta0(const GradedIdeal& ideal);

/// Ideal generated by a K-basis of I_d (the component ideal I_<d>).
GradedIdeal component_ideal(const GradedIdeal& ideal, int d);

/// Ideal generated by all forms of I of degree >= d (the truncation I_>=d).
GradedIdeal truncation(const GradedIdeal& ideal, int d);

/// dim_K (S/I)_d for d = 0..d_max.
std::vector<long> hilbert_function(const GradedIdeal& ideal, int d_max);

/// Krull dimension of S/I (via the degrevlex initial ideal) and height.
int quotient_dimension(const GradedIdeal& ideal, Budget* budget = nullptr);
int height(const GradedIdeal& ideal, Budget* budget = nullptr);

struct GinSample {
  MonomialIdeal ideal;
  bool agreed;  // all trials produced the same initial ideal
};

/// Randomized generic initial ideal: `trials` independent coordinate changes;
/// the common initial ideal with agreed=true if they all coincide, otherwise
/// the majority value with agreed=false.
GinSample gin_sample(const GradedIdeal& ideal, MonomialOrder ord,
                     std::uint64_t seed, int trials, Budget* budget = nullptr);

}  // namespace cwl
