// experiments.hpp - reproducible experiment drivers and persistence
#pragma once

#include <cstdint>
#include <map>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "xxzstrip/bounds.hpp"
#include "xxzstrip/hamiltonian.hpp"
#include "xxzstrip/random_field.hpp"
#include "xxzstrip/records.hpp"

namespace xxzstrip {

struct ExperimentResult {
    std::string id;
    nlohmann::json params;
    std::map<std::string, RecordTable> tables;
    bool all_pass = true;
    double wall_seconds = 0.0;
};

// Writes <id>_<table>.csv per table plus <id>_manifest.json into outdir
// (created if missing); returns the written paths. Wall time lives only in
// the manifest so the CSV records stay bit-identical across reruns.
std::vector<std::string> write_experiment(const ExperimentResult& result,
                                          const std::string& outdir);

// ------------------------------------------------------------------
// spectrum scan
// ------------------------------------------------------------------

struct SpectrumScanParams {
    int half_length = 2;
    int width = 1;
    double anisotropy = 4.0;
    double delta = 1.0;
    std::vector<int> sectors;                 // empty: every N in 0..2lM within cap
    double constant_potential = 0.0;
    std::optional<RandomFieldSpec> field;     // overrides the constant when set
    std::uint64_t sample_index = 0;
    std::size_t sector_cap = kDefaultSectorCap;
    int dense_cap = kDefaultDenseCap;
};

ExperimentResult run_spectrum_scan(const SpectrumScanParams& params);

// ------------------------------------------------------------------
// deterministic bound suite
// ------------------------------------------------------------------

struct BoundSuiteParams {
    std::vector<int> widths = {1, 2};
    double anisotropy = 4.0;
    double delta = 1.0;
    std::vector<double> mu_grid = {0.25, 0.5, 1.0, 2.0};
    std::vector<int> fsum_margins = {1, 2, 3, 4};   // window margin per side
    int pointwise_window = 10;                      // columns for the boundary check
    std::uint64_t seed = 1234;
    int random_potentials = 5;
    std::size_t sector_cap = kDefaultSectorCap;
    int dense_cap = kDefaultDenseCap;
    std::uint64_t enum_cap = kDefaultEnumCap;
};

ExperimentResult run_bound_suite(const BoundSuiteParams& params);

// ------------------------------------------------------------------
// entanglement scaling at zero potential
// ------------------------------------------------------------------

struct EEScalingParams {
    int width = 1;
    double anisotropy = 4.0;
    double delta = 1.0;
    std::vector<int> ells = {2, 3, 4};
    int samples = 16;                 // random unit vectors per band
    std::uint64_t seed = 1;
    std::vector<double> alpha_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    std::size_t sector_cap = kDefaultSectorCap;
    int dense_cap = kDefaultDenseCap;
};

ExperimentResult run_ee_scaling(const EEScalingParams& params);

// ------------------------------------------------------------------
// disorder-averaged area law
// ------------------------------------------------------------------

struct MCArealawParams {
    int width = 1;
    double anisotropy = 4.0;
    double delta = 1.0;
    std::vector<int> ells = {2, 3, 4};
    RandomFieldSpec field;            // defaults to bernoulli(1, 0.5), seed 7
    int n_samples = 100;
    int subspace_samples = 4;         // random vectors inside each band
    int crossing_samples = 200;       // disorder draws for the decay check
    std::vector<int> crossing_js = {1, 2, 3};
    std::size_t sector_cap = kDefaultSectorCap;
    int dense_cap = kDefaultDenseCap;

    MCArealawParams() : field(bernoulli_field(1.0, 0.5, 7)) {}
};

ExperimentResult run_mc_arealaw(const MCArealawParams& params);

// ------------------------------------------------------------------
// configuration-sum brackets
// ------------------------------------------------------------------

struct FsumScanParams {
    std::vector<int> widths = {1, 2, 3};
    std::vector<double> mu_grid = {0.25, 0.5, 1.0, 2.0};
    std::vector<int> margins = {1, 2, 3, 4};
    std::uint64_t enum_cap = kDefaultEnumCap;
};

ExperimentResult run_fsum_scan(const FsumScanParams& params);

}  // namespace xxzstrip
