#pragma once

#include <optional>

#include "tsym/predicates.hpp"
#include "tsym/rng.hpp"

namespace tsym {

/// Small nonzero Gaussian-rational scalar p + q i with |p|, |q| <= 4.
Scalar random_scalar(Rng& rng);
/// Matrix with entries in {-2..2}; each entry nonzero with probability 1/2.
Mat random_mat(Rng& rng);
/// Nonzero random combination of the basis, or nullopt for an empty basis.
std::optional<Mat> random_in_span(Rng& rng, const std::vector<Mat>& basis);
DecTensor random_dec(Rng& rng);

/// {x : f_k(x) = lambda_k x for all k}, for linear maps f_k on M.
std::vector<Mat> joint_eigenspace(const std::vector<std::function<Mat(const Mat&)>>& maps,
                                  const std::vector<Scalar>& lambdas);

/// A decomposable tensor invariant under the standard representative,
/// assembled from the factor-shape characterizations; nullopt when the
/// attempted characters leave no nonzero choice.
std::optional<DecTensor> sample_invariant(const StandardRep& h, Rng& rng);

/// A tensor built to satisfy the condition when possible.
DecTensor sample_for_condition(const Condition& c, Rng& rng);

}  // namespace tsym
