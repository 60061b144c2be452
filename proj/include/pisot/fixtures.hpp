#pragma once

#include "pisot/numeration.hpp"
#include "pisot/wfa.hpp"

namespace pisot {

/* The running example: the Bertrand system of the Pisot root of
 * X^2 - 3X + 1, terms 1, 3, 8, 21, 55, ...; canonical digits {0,1,2}. */
NumerationSystem fixture_phi2();

/* Fibonacci terms 1, 2, 3, 5, 8, ...; canonical digits {0,1}. */
NumerationSystem fixture_zeckendorf();

/* Greedy-indexed series over fixture_phi2's digits: coefficient at rep(n) is
 * a sample regular map f(n) (products of 3s and 2s along the digits), zero
 * off the representation language.  Dimension 4, states ordered W, X, Y, Z,
 * already in initial normal form. */
template <class K>
LinearRepresentation<K> fixture_series_phi2() {
  LinearRepresentation<K> g;
  g.dim = 1;
  g.r = 4;
  g.alphabet = {{0}, {1}, {2}};
  g.lambda = Matrix<K>::from_ints({{1, 0, 0, 0}});
  g.gamma = Matrix<K>::from_ints({{1}, {1}, {1}, {1}});
  g.mu = {
      Matrix<K>::from_ints({{0, 0, 0, 0},
                            {0, 1, 0, 0},
                            {0, 1, 0, 0},
                            {0, 1, 0, 0}}),
      Matrix<K>::from_ints({{0, 3, 0, 1},
                            {0, 3, 0, 0},
                            {0, 0, 3, 0},
                            {0, 0, 0, 1}}),
      Matrix<K>::from_ints({{0, 0, 2, 0},
                            {0, 0, 2, 0},
                            {0, 0, 0, 0},
                            {0, 0, 2, 0}}),
  };
  return g;
}

/* The value-indexed form of fixture_series_phi2 on digits {0,1,2}, exactly as
 * the worked example prints it: dimension 10, extra state first, then
 * (1,W),(1,X),(1,Z),(2,Y),(3,X),(3,Y),(3,Z),(4,X),(5,X).  Used as the golden
 * target for coefficient comparison. */
template <class K>
LinearRepresentation<K> fixture_value_series_phi2() {
  LinearRepresentation<K> v;
  v.dim = 1;
  v.r = 10;
  v.alphabet = {{0}, {1}, {2}};
  v.lambda = Matrix<K>::from_ints({{1, 1, 0, 0, 0, 0, 0, 0, 0, 0}});
  v.gamma = Matrix<K>::from_ints({{0}, {1}, {1}, {1}, {1}, {0}, {0}, {0}, {0}, {1}});
  v.mu = {
      Matrix<K>::from_ints({{0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0, 3, 1, 0, 0, 0},
                            {0, 0, 1, 0, 0, 3, 0, 0, 0, 0},
                            {0, 0, 1, 0, 0, 0, 0, 1, 0, 0},
                            {0, 0, 1, 0, 0, 0, 3, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 3, 0, 0, 0, 2, 0, 0, 0}}),
      Matrix<K>::from_ints({{0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 3, 1, 0, 2, 0, 0, 0, 0},
                            {0, 0, 3, 0, 0, 0, 2, 0, 0, 0},
                            {0, 0, 0, 1, 0, 0, 2, 0, 0, 0},
                            {0, 0, 0, 0, 3, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 2, 0, 0, 0, 0, 0}}),
      Matrix<K>::from_ints({{0, 0, 0, 0, 0, 0, 0, 0, 4, 0},
                            {0, 0, 0, 0, 2, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 2, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
                            {0, 0, 0, 0, 0, 0, 0, 0, 3, 1},
                            {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}),
  };
  return v;
}

}  // namespace pisot
