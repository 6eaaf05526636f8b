#pragma once

#include <random>

#include "altmot/symfunc.hpp"

// Random inputs for property checks. Everything is driven by an explicit
// seeded engine so failures reproduce.
namespace altmot::testing
{

using Rng = std::mt19937_64;

Partition random_partition(Rng &rng, int n);

/// Small rational combination of L^0, …, L^max_power.
MotiveClass random_tate_class(Rng &rng, int max_power = 2);

/// A few random power-sum terms in each degree of [min_degree, max_term_degree],
/// stored with truncation max_degree.
SymSeries random_series(Rng &rng, int max_degree, int min_degree, int max_term_degree, int terms_per_degree = 2);

/// Random integer combination of Schur functions of degree n, with the
/// coefficient of s_{1^n} forced to zero.
SymSeries random_sign_free(Rng &rng, int n, int max_degree);

/// Random permutation of {1, …, n}.
Permutation random_permutation(Rng &rng, int n);

} // namespace altmot::testing
