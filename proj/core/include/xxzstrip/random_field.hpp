// random_field.hpp - i.i.d. nonnegative on-site disorder
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "xxzstrip/geometry.hpp"

namespace xxzstrip {

enum class FieldLaw { bernoulli, uniform, discrete };

// Single-site law nu plus a seed. Draws are i.i.d. across sites and
// samples; the law must not be identically zero.
struct RandomFieldSpec {
    FieldLaw law = FieldLaw::bernoulli;
    double a = 1.0;   // bernoulli: P(nu = a) = p, P(nu = 0) = 1 - p
    double p = 0.5;
    double b = 1.0;   // uniform on [0, b)
    std::vector<std::pair<double, double>> atoms;   // discrete: (value, prob)
    std::uint64_t seed = 0;
};

RandomFieldSpec bernoulli_field(double a, double p, std::uint64_t seed);
RandomFieldSpec uniform_field(double b, std::uint64_t seed);
RandomFieldSpec discrete_field(std::vector<std::pair<double, double>> atoms,
                               std::uint64_t seed);

void validate_field(const RandomFieldSpec& spec);   // throws invalid_argument

double prob_at_least(const RandomFieldSpec& spec, double t);   // P(nu >= t)
double field_mean(const RandomFieldSpec& spec);                // E[nu]

// Smallest k >= 1 with P(nu >= 1/k) > 0, and that probability. These feed
// the disorder constants (lambda, C_tilde).
int threshold_depth(const RandomFieldSpec& spec);
double threshold_prob(const RandomFieldSpec& spec);

// One disorder realization. The value at a site depends only on
// (seed, sample_index, site), so enlarging the strip keeps the overlap.
SitePotential sample_field(const RandomFieldSpec& spec, const StripGeometry& geom,
                           std::uint64_t sample_index);

std::string describe(const RandomFieldSpec& spec);

}  // namespace xxzstrip
