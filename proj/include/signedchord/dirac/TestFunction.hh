//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/dirac/TestFunction.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Nonnegative kernel phi(x) with closed-form integrals.
 *
 * Besides phi itself the class evaluates the antiderivative
 * Phi(x) = int_0^x phi(r) dr and the double integral
 * Lambda(x) = int_0^x (x - r) phi(r) dr. Every kind carries a constant
 * scale factor. Tables are interpolated linearly between their nodes and
 * vanish outside them, so all three functions stay exact.
 *
 * Text form: "exp:alpha", "pow:p", "ind:l0" or "table:x0=y0,x1=y1,...",
 * each optionally followed by ":scale" where the scale is a number or a
 * multiple of pi such as "4pi".
 */
class TestFunction
{
  public:
    enum class Kind
    {
        exponential,
        power,
        indicator,
        table,
    };

    static TestFunction exponential(double alpha, double scale = 1);
    static TestFunction power(double p, double scale = 1);
    static TestFunction indicator(double l0, double scale = 1);
    static TestFunction
    table(std::vector<double> x, std::vector<double> y, double scale = 1);

    // Parse the text form; throws config on malformed input
    static TestFunction parse(std::string_view text);

    //// EVALUATION ////

    double operator()(double x) const;
    double antiderivative(double x) const;
    double lambda(double x) const;

    //// PROPERTIES ////

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    double scale() const { return scale_; }

    // Whether phi(x) / x^2 stays bounded as x -> 0
    bool bounded_pair_weight() const;

    // Whether phi(x) = 4 pi x^2, whose Dirac functional is the volume
    bool is_volume_kernel() const;

    // Canonical text form
    std::string to_string() const;

  private:
    Kind kind_{Kind::power};
    double param_{0};
    double scale_{1};
    std::vector<double> x_;
    std::vector<double> y_;
    std::vector<double> cum_phi_;  // Phi at nodes
    std::vector<double> cum_rphi_;  // int r phi(r) dr at nodes

    double table_integrals(double x, double& rphi) const;
};

// Double integral of phi from zero to x
inline double lambda_phi(TestFunction const& phi, double x)
{
    return phi.lambda(x);
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
