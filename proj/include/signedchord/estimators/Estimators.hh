//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/estimators/Estimators.hh
//! \brief Monte Carlo estimators of chord, radii and distance distributions
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "signedchord/Check.hh"
#include "signedchord/Estimate.hh"
#include "signedchord/geometry/Body.hh"
#include "signedchord/sampling/BatchPlan.hh"
#include "signedchord/signedhist/DensityTable.hh"
#include "signedchord/signedhist/MomentAccumulator.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
// CHORDS
//---------------------------------------------------------------------------//
//! Tallies of one batch of isotropic uniform lines
struct ChordTally
{
    ChordTally() = default;
    explicit ChordTally(HistogramGrid const& g)
        : signed_hist(g), segments(g), positives(g), negatives(g), one_chord(g)
    {
    }

    SignedHistogram signed_hist;  //!< all signed pieces
    SignedHistogram segments;  //!< individual segments (multi-chord)
    SignedHistogram positives;  //!< positive pair pieces
    SignedHistogram negatives;  //!< negative pair pieces (stored as +1)
    SignedHistogram one_chord;  //!< total in-body length per line
    MomentAccumulator signed_moments;
    MomentAccumulator segment_moments;
    MomentAccumulator one_chord_moments;
    std::uint64_t lines_tried{0};
    std::uint64_t lines_hit{0};
    std::uint64_t segments_count{0};
    double max_sq_identity_error{0};  //!< worst relative per-chord deviation
};

/*!
 * Signed chord distribution and its relatives for a body.
 *
 * The signed density is normalized by the total charge (segment count N),
 * the multi-chord density by N, the one-chord density and the three
 * decomposition parts by the number of hit lines N_I.
 */
struct ChordEstimate
{
    std::vector<ChordTally> batches;
    DensityTable mu_signed;
    DensityTable mu_multi;
    DensityTable mu_one;
    DensityTable mu_segments;
    DensityTable mu_positive;
    DensityTable mu_negative;

    std::uint64_t lines_tried{0};
    std::uint64_t lines_hit{0};
    std::uint64_t total_charge{0};

    Estimate c_m;  //!< N / N_I
    Estimate mean_signed[5];  //!< <l^k> of the signed distribution
    Estimate mean_one[5];  //!< <l^k> of the one-chord distribution
    Estimate mean_multi;  //!< mean segment length
    Estimate ratio_first;  //!< <l>_O / <l>
    Estimate ratio_second;  //!< <l^2>_O / <l^2>
    Estimate surface_crofton;  //!< surface from crossing counts
    Estimate hull_surface_crofton;  //!< hull surface from hit probability
    double min_overlap{0};  //!< min over bins of (mu_1 + mu_+) - mu_-
    double min_signed_density{0};
    double max_sq_identity_error{0};
};

ChordEstimate estimate_chords(Body const& body,
                              BatchPlan const& plan,
                              std::uint64_t n_lines,
                              HistogramGrid const& grid);

// Empirical normalization pi <l^4> / (3 V)
Estimate ell_from_fourth_moment(ChordEstimate const& est, double volume);

//---------------------------------------------------------------------------//
// RADII
//---------------------------------------------------------------------------//
struct RadiiTally
{
    RadiiTally() = default;
    explicit RadiiTally(HistogramGrid const& g)
        : signed_hist(g), first(g), positives(g), negatives(g), one_segment(g)
    {
    }

    SignedHistogram signed_hist;
    SignedHistogram first;
    SignedHistogram positives;
    SignedHistogram negatives;  //!< stored with +1 weight
    SignedHistogram one_segment;
    MomentAccumulator signed_moments;
    MomentAccumulator one_segment_moments;
    std::uint64_t rays{0};
    std::uint64_t positive_count{0};
    std::uint64_t negative_count{0};
    std::uint64_t rejected_rays{0};
    double max_sum_identity_error{0};
};

/*!
 * Signed radii distribution; every density is normalized per ray.
 */
struct RadiiEstimate
{
    std::vector<RadiiTally> batches;
    DensityTable iota_signed;
    DensityTable iota_first;
    DensityTable iota_positive;
    DensityTable iota_negative;
    DensityTable iota_one;
    std::uint64_t rays{0};

    double integral_signed{0};  //!< total charge per ray
    Estimate integral_positive;
    Estimate integral_negative;
    Estimate mean_signed;  //!< first moment of the signed density
    Estimate mean_one;  //!< first moment of the one-segment density
    double min_overlap{0};
    double max_sum_identity_error{0};
};

RadiiEstimate estimate_radii(Body const& body,
                             BatchPlan const& plan,
                             std::uint64_t n_rays,
                             HistogramGrid const& grid);

//---------------------------------------------------------------------------//
// DISTANCES
//---------------------------------------------------------------------------//
/*!
 * Autocorrelation function tabulated at bin centers.
 *
 * \c gamma0 is the value at zero separation. For a uniform body the table is
 * normalized so that gamma0 = 1. \c replicas holds the delete-one-batch
 * tables used to propagate errors through derived quantities.
 */
struct GammaTable
{
    HistogramGrid grid;
    std::vector<double> gamma;
    std::vector<double> error;
    double gamma0{1};
    std::vector<std::vector<double>> replicas;
};

struct DistanceEstimate
{
    std::vector<SignedHistogram> batches;
    std::vector<double> batch_pairs;
    DensityTable eta;
    GammaTable gamma;
    Estimate mean_distance;
};

DistanceEstimate estimate_distances(Body const& body,
                                    BatchPlan const& plan,
                                    std::uint64_t n_pairs,
                                    HistogramGrid const& grid);

/*!
 * Autocorrelation table from per-batch pair-distance histograms.
 *
 * Bin i of the table is scale * charge_i / (pairs * shell volume of bin i),
 * where pairs counts all sampled pairs (including zero-weight ones).
 */
GammaTable gamma_from_histograms(std::vector<SignedHistogram> const& batches,
                                 std::vector<double> const& batch_pairs,
                                 double scale,
                                 double gamma0);

// Slope of gamma at zero from a fit through gamma0 over the first nonzero bins
Estimate gamma_slope_at_zero(GammaTable const& table, std::size_t nfit = 5);

//---------------------------------------------------------------------------//
// RANDOMNESS RELATIONS
//---------------------------------------------------------------------------//
/*!
 * Comparison of chord-length densities under three line measures.
 *
 * Chords through a uniform interior point (nu) must follow l mu(l) / <l>;
 * chords through two uniform points (lambda) must follow l^4 mu(l) / <l^4>.
 * The predictions reweight the isotropic-line chords event by event.
 */
struct RandomnessReport
{
    DensityTable mu;
    DensityTable nu;
    DensityTable lambda;
    DensityTable nu_predicted;
    DensityTable lambda_predicted;
    Estimate fourth_moment;
    double nu_bins_within{0};  //!< fraction of bins within 4 sigma
    double lambda_bins_within{0};
    std::vector<CheckRecord> checks;
};

RandomnessReport check_randomness_relations(Body const& body,
                                            BatchPlan const& plan,
                                            std::uint64_t n,
                                            HistogramGrid const& grid);

// Fraction of bins where two tables agree within nsigma combined errors
double fraction_within(DensityTable const& a, DensityTable const& b, double nsigma = 4);

//---------------------------------------------------------------------------//
// SECOND DERIVATIVE ROUTE
//---------------------------------------------------------------------------//
/*!
 * Normalized signed chord density from the curvature of gamma.
 *
 * values[i] = gamma''(l_i) / |gamma'(0)| at bin centers, with the second
 * derivative taken from a local quadratic least-squares fit over \c window
 * bins (shifted inward at the ends).
 */
struct SignedCldTable
{
    HistogramGrid grid;
    std::vector<double> values;
    std::vector<double> error;
    Estimate slope0;
    std::size_t window{7};
};

// Derive the signed density; throws grid_too_coarse for fewer than 8 bins
SignedCldTable signed_cld_from_gamma(GammaTable const& table,
                                     std::size_t window = 7,
                                     std::optional<double> slope0 = {});

// Second-derivative weights of a quadratic fit for window position i
std::vector<double> savgol_second_derivative(std::size_t npoints,
                                             std::size_t window,
                                             std::size_t i,
                                             std::size_t& first);

/*!
 * Bin-wise comparison of the curvature route with a decomposition density.
 *
 * The allowed deviation in bin i is nsigma combined standard errors plus
 * the smoothing bias: the difference between the smoothed second
 * derivative of the autocorrelation implied by the density and the density
 * itself. Bins where neither side has any weight are skipped.
 */
struct SignedCldComparison
{
    std::vector<double> bias;
    std::vector<double> tolerance;
    std::vector<bool> within;
    std::size_t bins_used{0};
    std::size_t bins_within{0};

    double fraction() const
    {
        return bins_used ? static_cast<double>(bins_within)
                               / static_cast<double>(bins_used)
                         : 1.0;
    }
};

SignedCldComparison compare_signed_cld(SignedCldTable const& cld,
                                       DensityTable const& mu,
                                       double nsigma = 4);

// Autocorrelation implied by a binned signed density: ell^-1 int (x-l) mu dx
std::vector<double> gamma_from_density(DensityTable const& mu,
                                       double ell,
                                       std::vector<double> const& at);

//---------------------------------------------------------------------------//
}  // namespace signedchord
