#pragma once

#include <vector>

#include "ietflip/keane.hpp"
#include "ietflip/map_class.hpp"

namespace ietflip {

/// Genuine rotation x -> x + t.
MapClass rotation(const CirclePoint& t);
/// The element of order 2 exchanging I and J by orientation-preserving
/// isometries; I and J must have equal length and disjoint interiors.
MapClass exchange(const Interval& I, const Interval& J);
/// Rotation of the closed-up interval I by theta (reduced mod length(I)),
/// identity elsewhere.
MapClass partial_rotation(const Interval& I, const CirclePoint& theta);
/// x -> -x.
MapClass global_flip();
/// Reverses I onto itself, identity elsewhere.
MapClass flip_on(const Interval& I);

/// Involution that reverses [0,a] onto itself and exchanges [a,b] with [b,1]
/// preserving orientation; requires 0 < a < b < 1 and b - a = 1 - b.
MapClass make_132_flip(const CirclePoint& a, const CirclePoint& b);
/// Involution reversing each of three consecutive intervals of the given
/// positive lengths (summing to 1) onto itself.
MapClass make_triple_flip(const Scalar& l1, const Scalar& l2, const Scalar& l3);

/// Recognizers for the patterns above, up to rotation of the origin.
bool is_132_flip(const MapClass& f);
bool is_triple_flip(const MapClass& f);

/// Structure of the commutator c = f^-1 r_t f r_t^-1: it permutes the blocks
/// [x, x+t], x singular, by translations, fixing none of them.
struct CommutatorReport {
  MapClass c;
  std::vector<Interval> blocks;  // closed arcs [x_i, x_i + t], sorted
  std::vector<int> block_perm;   // block i is translated onto block_perm[i]
  bool fixed_free = true;
};

/// Requires f orientation-preserving and 0 < t < E(f) (precondition).
/// A failed internal structure check (structure) indicates a library bug.
CommutatorReport comrot(const MapClass& f, const CirclePoint& t);

/// Non-identity class with essential support of diameter <= 5*eps, built from
/// the partial rotation f of [0,rho] by -2*eps, its commutator with r_eta,
/// and conjugation by the partial rotation q of [lambda, lambda+rho] carrying
/// [rho, rho+eta] to [lambda', lambda'+eta].
///
/// Requires 0 < eps < min(rho, 1-rho)/5, 0 < eta <= eps, and
/// 3*eps < lambda <= lambda' < 4*eps.
MapClass arbsmall(const CirclePoint& rho, const Scalar& eps, const Scalar& eta,
                  const CirclePoint& lambda, const CirclePoint& lambda_prime);

/// Factors an orientation-preserving class into partial rotations:
/// the returned list composes left to right to f (front factor outermost).
/// The permutation of the admissible normal form is split into adjacent
/// transpositions by bubble sort; every factor's breakpoints and translation
/// lengths lie in the subgroup generated by the normal-form lengths.
std::vector<MapClass> decompose_partial_rotations(const MapClass& f);

/// The four generators u, v, w, s built over a cut parameter a in ]1/8,1/4[
/// (with b = 1-4a): u and v exchange the outer interval pairs, w is a partial
/// rotation of [0,2a] of infinite order (w_theta must have an irrational
/// coordinate), s flips the whole circle. The product s o u o v is a triple
/// flip.
struct StabilizerGadget {
  MapClass u, v, w, s;
};

StabilizerGadget t_stabr_gadget(const CirclePoint& a, const CirclePoint& w_theta);

}  // namespace ietflip
