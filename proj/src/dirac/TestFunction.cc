//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dirac/TestFunction.cc
//---------------------------------------------------------------------------//
#include "signedchord/dirac/TestFunction.hh"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
[[noreturn]] void bad(std::string_view text, std::string const& why)
{
    throw Error(ErrorCode::config,
                "test function '" + std::string(text) + "': " + why);
}

double parse_number(std::string_view s, std::string_view text)
{
    double value = 0;
    auto const* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        bad(text, "'" + std::string(s) + "' is not a number");
    return value;
}

//! Number, or an optional multiplier followed by "pi"
double parse_scale(std::string_view s, std::string_view text)
{
    if (s.size() >= 2 && s.substr(s.size() - 2) == "pi")
    {
        std::string_view head = s.substr(0, s.size() - 2);
        double const mult = head.empty() ? 1.0 : parse_number(head, text);
        return mult * std::numbers::pi;
    }
    return parse_number(s, text);
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

//! (y^2/2 - y^3/6 + ...) = y - 1 + exp(-y) without cancellation
double exp_lambda_unit(double y)
{
    if (y < 1e-2)
    {
        return y * y
               * (0.5 - y * (1.0 / 6 - y * (1.0 / 24 - y * (1.0 / 120 - y / 720))));
    }
    return y + std::expm1(-y);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
TestFunction TestFunction::exponential(double alpha, double scale)
{
    if (!(alpha > 0) || !std::isfinite(alpha))
        throw Error(ErrorCode::invalid_argument, "exponential rate must be positive");
    TestFunction f;
    f.kind_ = Kind::exponential;
    f.param_ = alpha;
    f.scale_ = scale;
    return f;
}

TestFunction TestFunction::power(double p, double scale)
{
    if (!(p >= 0) || !std::isfinite(p))
        throw Error(ErrorCode::invalid_argument, "power must be nonnegative");
    TestFunction f;
    f.kind_ = Kind::power;
    f.param_ = p;
    f.scale_ = scale;
    return f;
}

TestFunction TestFunction::indicator(double l0, double scale)
{
    if (!(l0 > 0) || !std::isfinite(l0))
        throw Error(ErrorCode::invalid_argument, "indicator cutoff must be positive");
    TestFunction f;
    f.kind_ = Kind::indicator;
    f.param_ = l0;
    f.scale_ = scale;
    return f;
}

TestFunction
TestFunction::table(std::vector<double> x, std::vector<double> y, double scale)
{
    if (x.size() < 2 || x.size() != y.size())
        throw Error(ErrorCode::invalid_argument, "table needs at least two nodes");
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        if (!(x[i] >= 0) || !(y[i] >= 0) || !std::isfinite(x[i])
            || !std::isfinite(y[i]))
        {
            throw Error(ErrorCode::invalid_argument,
                        "table nodes and values must be finite and nonnegative");
        }
        if (i > 0 && !(x[i] > x[i - 1]))
            throw Error(ErrorCode::invalid_argument, "table nodes must ascend");
    }
    TestFunction f;
    f.kind_ = Kind::table;
    f.scale_ = scale;
    f.x_ = std::move(x);
    f.y_ = std::move(y);
    f.cum_phi_.assign(f.x_.size(), 0.0);
    f.cum_rphi_.assign(f.x_.size(), 0.0);
    for (std::size_t i = 1; i < f.x_.size(); ++i)
    {
        double const a = f.x_[i - 1], b = f.x_[i];
        double const ya = f.y_[i - 1], yb = f.y_[i];
        f.cum_phi_[i] = f.cum_phi_[i - 1] + (b - a) * (ya + yb) / 2;
        // int_a^b r (ya + (yb - ya)(r - a)/(b - a)) dr
        f.cum_rphi_[i] = f.cum_rphi_[i - 1]
                         + (b - a) * (ya * (2 * a + b) + yb * (a + 2 * b)) / 6;
    }
    return f;
}

//---------------------------------------------------------------------------//
TestFunction TestFunction::parse(std::string_view text)
{
    auto const colon = text.find(':');
    if (colon == std::string_view::npos)
        bad(text, "expected kind:parameter");
    std::string_view const kind = text.substr(0, colon);
    std::string_view rest = text.substr(colon + 1);

    double scale = 1;
    if (auto c2 = rest.find(':'); c2 != std::string_view::npos)
    {
        scale = parse_scale(rest.substr(c2 + 1), text);
        rest = rest.substr(0, c2);
    }

    try
    {
        if (kind == "exp")
            return exponential(parse_number(rest, text), scale);
        if (kind == "pow")
            return power(parse_number(rest, text), scale);
        if (kind == "ind")
            return indicator(parse_number(rest, text), scale);
        if (kind == "table")
        {
            std::vector<double> xs, ys;
            while (!rest.empty())
            {
                auto const comma = rest.find(',');
                std::string_view item = rest.substr(0, comma);
                auto const eq = item.find('=');
                if (eq == std::string_view::npos)
                    bad(text, "table entries must look like x=y");
                xs.push_back(parse_number(item.substr(0, eq), text));
                ys.push_back(parse_number(item.substr(eq + 1), text));
                rest = comma == std::string_view::npos ? std::string_view{}
                                                       : rest.substr(comma + 1);
            }
            return table(std::move(xs), std::move(ys), scale);
        }
    }
    catch (Error const& e)
    {
        if (e.code() == ErrorCode::invalid_argument)
            bad(text, e.what());
        throw;
    }
    bad(text, "unknown kind '" + std::string(kind) + "'");
}

//---------------------------------------------------------------------------//
double TestFunction::operator()(double x) const
{
    switch (kind_)
    {
        case Kind::exponential:
            return scale_ * std::exp(-param_ * x);
        case Kind::power:
            return scale_ * (param_ == 0 ? 1.0 : std::pow(x, param_));
        case Kind::indicator:
            return x < param_ ? scale_ : 0.0;
        case Kind::table: {
            if (x < x_.front() || x > x_.back())
                return 0;
            auto i = static_cast<std::size_t>(
                std::upper_bound(x_.begin(), x_.end(), x) - x_.begin());
            if (i == x_.size())
                return scale_ * y_.back();
            double const t = (x - x_[i - 1]) / (x_[i] - x_[i - 1]);
            return scale_ * (y_[i - 1] + t * (y_[i] - y_[i - 1]));
        }
    }
    return 0;
}

//---------------------------------------------------------------------------//
/*!
 * Returns Phi(x) for the unscaled table and sets rphi = int_0^x r phi dr.
 */
double TestFunction::table_integrals(double x, double& rphi) const
{
    if (x <= x_.front())
    {
        rphi = 0;
        return 0;
    }
    if (x >= x_.back())
    {
        rphi = cum_rphi_.back();
        return cum_phi_.back();
    }
    auto i = static_cast<std::size_t>(
        std::upper_bound(x_.begin(), x_.end(), x) - x_.begin());
    double const a = x_[i - 1];
    double const ya = y_[i - 1];
    double const slope = (y_[i] - ya) / (x_[i] - a);
    double const t = x - a;
    rphi = cum_rphi_[i - 1] + a * ya * t + (a * slope + ya) * t * t / 2
           + slope * t * t * t / 3;
    return cum_phi_[i - 1] + ya * t + slope * t * t / 2;
}

//---------------------------------------------------------------------------//
double TestFunction::antiderivative(double x) const
{
    if (x <= 0)
        return 0;
    switch (kind_)
    {
        case Kind::exponential:
            return scale_ * -std::expm1(-param_ * x) / param_;
        case Kind::power:
            return scale_ * std::pow(x, param_ + 1) / (param_ + 1);
        case Kind::indicator:
            return scale_ * std::min(x, param_);
        case Kind::table: {
            double rphi = 0;
            return scale_ * this->table_integrals(x, rphi);
        }
    }
    return 0;
}

//---------------------------------------------------------------------------//
double TestFunction::lambda(double x) const
{
    if (x <= 0)
        return 0;
    switch (kind_)
    {
        case Kind::exponential:
            return scale_ * exp_lambda_unit(param_ * x) / (param_ * param_);
        case Kind::power:
            return scale_ * std::pow(x, param_ + 2)
                   / ((param_ + 1) * (param_ + 2));
        case Kind::indicator: {
            double const m = std::min(x, param_);
            return scale_ * (m * x - m * m / 2);
        }
        case Kind::table: {
            double rphi = 0;
            double const phi = this->table_integrals(x, rphi);
            return scale_ * (x * phi - rphi);
        }
    }
    return 0;
}

//---------------------------------------------------------------------------//
bool TestFunction::bounded_pair_weight() const
{
    switch (kind_)
    {
        case Kind::power:
            return param_ >= 2;
        case Kind::table:
            return x_.front() > 0 || (y_[0] == 0 && y_[1] == 0);
        default:
            return false;
    }
}

bool TestFunction::is_volume_kernel() const
{
    return kind_ == Kind::power && param_ == 2
           && std::fabs(scale_ - 4 * std::numbers::pi) < 1e-12;
}

//---------------------------------------------------------------------------//
std::string TestFunction::to_string() const
{
    std::string result;
    switch (kind_)
    {
        case Kind::exponential:
            result = "exp:" + fmt(param_);
            break;
        case Kind::power:
            result = "pow:" + fmt(param_);
            break;
        case Kind::indicator:
            result = "ind:" + fmt(param_);
            break;
        case Kind::table:
            result = "table:";
            for (std::size_t i = 0; i < x_.size(); ++i)
            {
                result += (i ? "," : "") + fmt(x_[i]) + "=" + fmt(y_[i]);
            }
            break;
    }
    if (scale_ == 4 * std::numbers::pi)
        result += ":4pi";
    else if (scale_ != 1)
        result += ":" + fmt(scale_);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
