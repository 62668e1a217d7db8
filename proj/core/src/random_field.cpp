// random_field.cpp
#include "xxzstrip/random_field.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "xxzstrip/rng.hpp"

namespace xxzstrip {

RandomFieldSpec bernoulli_field(double a, double p, std::uint64_t seed) {
    RandomFieldSpec spec;
    spec.law = FieldLaw::bernoulli;
    spec.a = a;
    spec.p = p;
    spec.seed = seed;
    validate_field(spec);
    return spec;
}

RandomFieldSpec uniform_field(double b, std::uint64_t seed) {
    RandomFieldSpec spec;
    spec.law = FieldLaw::uniform;
    spec.b = b;
    spec.seed = seed;
    validate_field(spec);
    return spec;
}

RandomFieldSpec discrete_field(std::vector<std::pair<double, double>> atoms,
                               std::uint64_t seed) {
    RandomFieldSpec spec;
    spec.law = FieldLaw::discrete;
    spec.atoms = std::move(atoms);
    spec.seed = seed;
    validate_field(spec);
    return spec;
}

void validate_field(const RandomFieldSpec& spec) {
    switch (spec.law) {
        case FieldLaw::bernoulli:
            if (!(spec.a > 0.0)) throw std::invalid_argument("bernoulli magnitude must be > 0");
            if (!(spec.p > 0.0 && spec.p <= 1.0))
                throw std::invalid_argument("bernoulli probability must be in (0, 1]");
            return;
        case FieldLaw::uniform:
            if (!(spec.b > 0.0)) throw std::invalid_argument("uniform upper end must be > 0");
            return;
        case FieldLaw::discrete: {
            if (spec.atoms.empty()) throw std::invalid_argument("discrete law has no atoms");
            double total = 0.0;
            double positive_mass = 0.0;
            for (const auto& [value, prob] : spec.atoms) {
                if (value < 0.0) throw std::invalid_argument("discrete values must be >= 0");
                if (prob < 0.0) throw std::invalid_argument("discrete probabilities must be >= 0");
                total += prob;
                if (value > 0.0) positive_mass += prob;
            }
            if (std::abs(total - 1.0) > 1e-12)
                throw std::invalid_argument("discrete probabilities must sum to 1");
            if (!(positive_mass > 0.0))
                throw std::invalid_argument("law is identically zero");
            return;
        }
    }
    throw std::invalid_argument("unknown field law");
}

double prob_at_least(const RandomFieldSpec& spec, double t) {
    if (t <= 0.0) return 1.0;
    switch (spec.law) {
        case FieldLaw::bernoulli:
            return t <= spec.a ? spec.p : 0.0;
        case FieldLaw::uniform:
            return t >= spec.b ? 0.0 : (spec.b - t) / spec.b;
        case FieldLaw::discrete: {
            double sum = 0.0;
            for (const auto& [value, prob] : spec.atoms)
                if (value >= t) sum += prob;
            return sum;
        }
    }
    throw std::invalid_argument("unknown field law");
}

double field_mean(const RandomFieldSpec& spec) {
    switch (spec.law) {
        case FieldLaw::bernoulli:
            return spec.a * spec.p;
        case FieldLaw::uniform:
            return 0.5 * spec.b;
        case FieldLaw::discrete: {
            double mean = 0.0;
            for (const auto& [value, prob] : spec.atoms) mean += value * prob;
            return mean;
        }
    }
    throw std::invalid_argument("unknown field law");
}

int threshold_depth(const RandomFieldSpec& spec) {
    validate_field(spec);
    double top = 0.0;   // largest value carrying positive probability (supremum for uniform)
    switch (spec.law) {
        case FieldLaw::bernoulli: top = spec.a; break;
        case FieldLaw::uniform: top = spec.b; break;
        case FieldLaw::discrete:
            for (const auto& [value, prob] : spec.atoms)
                if (prob > 0.0) top = std::max(top, value);
            break;
    }
    // smallest k with P(nu >= 1/k) > 0; the closed-form start is within a
    // couple of steps, the probe settles roundoff
    int k = std::max(1, static_cast<int>(std::floor(1.0 / top)) - 1);
    const int limit = k + 8;
    while (k <= limit && !(prob_at_least(spec, 1.0 / k) > 0.0)) ++k;
    if (k > limit) throw std::logic_error("threshold search failed");
    return k;
}

double threshold_prob(const RandomFieldSpec& spec) {
    return prob_at_least(spec, 1.0 / threshold_depth(spec));
}

SitePotential sample_field(const RandomFieldSpec& spec, const StripGeometry& geom,
                           std::uint64_t sample_index) {
    validate_field(spec);
    const std::uint64_t stream = mix64(spec.seed, sample_index);
    SitePotential v(geom);
    for (int i = 0; i < geom.num_vertices(); ++i) {
        const Vertex site = geom.vertex(i);
        const std::uint64_t site_key =
            (static_cast<std::uint64_t>(static_cast<std::uint32_t>(site.col)) << 32) |
            static_cast<std::uint32_t>(site.row);
        PortableRng rng(mix64(stream, site_key));
        const double u = rng.next_double();
        double value = 0.0;
        switch (spec.law) {
            case FieldLaw::bernoulli:
                value = u < spec.p ? spec.a : 0.0;
                break;
            case FieldLaw::uniform:
                value = u * spec.b;
                break;
            case FieldLaw::discrete: {
                double cum = 0.0;
                value = spec.atoms.back().first;
                for (const auto& [atom, prob] : spec.atoms) {
                    cum += prob;
                    if (u < cum) {
                        value = atom;
                        break;
                    }
                }
                break;
            }
        }
        v.value_at(site) = value;
    }
    return v;
}

std::string describe(const RandomFieldSpec& spec) {
    char buf[160];
    switch (spec.law) {
        case FieldLaw::bernoulli:
            std::snprintf(buf, sizeof(buf), "bernoulli(a=%.12g,p=%.12g)", spec.a, spec.p);
            return buf;
        case FieldLaw::uniform:
            std::snprintf(buf, sizeof(buf), "uniform(0,%.12g)", spec.b);
            return buf;
        case FieldLaw::discrete: {
            std::string out = "discrete(";
            bool sep = false;
            for (const auto& [value, prob] : spec.atoms) {
                std::snprintf(buf, sizeof(buf), "%s%.12g:%.12g", sep ? "," : "", value, prob);
                out += buf;
                sep = true;
            }
            return out + ")";
        }
    }
    return "unknown";
}

}  // namespace xxzstrip
