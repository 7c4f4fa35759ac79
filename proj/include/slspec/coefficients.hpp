#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "slspec/errors.hpp"

namespace slspec {

// Piecewise-constant scalar profile on a finite breakpoint grid.
// value_at is right-continuous on [breakpoints.front(), breakpoints.back())
// and zero outside (profiles model compactly supported perturbations).
struct StepFunction {
    std::vector<double> breakpoints;  // strictly increasing, size = cells + 1
    std::vector<double> values;       // one per cell

    StepFunction() = default;
    StepFunction(std::vector<double> bps, std::vector<double> vals);

    std::size_t cells() const { return values.size(); }
    double x_min() const { return breakpoints.front(); }
    double x_max() const { return breakpoints.back(); }
    double value_at(double x) const;
    bool is_zero() const;
    // Right edge of the last cell holding a nonzero value; 0 if none.
    double support_bound() const;
};

// Canonical coefficient pair (1/p, q) as values on a shared breakpoint grid.
// All integrals of 1/p and q over subintervals are exact sums.
struct PiecewiseCoefficients {
    std::vector<double> breakpoints;  // strictly increasing, size = cells + 1
    std::vector<double> inv_p;        // > 0, one per cell
    std::vector<double> q;            // one per cell

    PiecewiseCoefficients() = default;
    PiecewiseCoefficients(std::vector<double> bps, std::vector<double> inv_p_vals,
                          std::vector<double> q_vals);

    std::size_t cells() const { return inv_p.size(); }
    double x_min() const { return breakpoints.front(); }
    double x_max() const { return breakpoints.back(); }
    // Index of the cell containing x (clamped at the ends, right-continuous).
    std::size_t cell_index(double x) const;
    std::pair<double, double> value_at(double x) const;  // (1/p, q)

    StepFunction inv_p_profile() const { return StepFunction(breakpoints, inv_p); }
    StepFunction q_profile() const { return StepFunction(breakpoints, q); }
};

// One constant-coefficient slice of the real line.
struct CellSlice {
    double a;
    double b;
    double inv_p;
    double q;
    double width() const { return b - a; }
};

// A coefficient pair (1/p, q) defined on all of R, exposed as exact
// constant-coefficient slices. Implementations are immutable after
// construction and safe for concurrent reads.
class CoefficientField {
  public:
    virtual ~CoefficientField() = default;
    virtual std::pair<double, double> value_at(double x) const = 0;
    // Append every interior breakpoint in the open interval (x0, x1).
    virtual void collect_breakpoints(double x0, double x1,
                                     std::vector<double>& out) const = 0;

    // Slices covering [x0, x1] in order, values taken at slice midpoints
    // (exact for step data). Requires x0 <= x1.
    std::vector<CellSlice> slices(double x0, double x1) const;
};

// Finite-grid coefficients extended by their edge-cell values to all of R.
class FlatExtendedField final : public CoefficientField {
  public:
    explicit FlatExtendedField(PiecewiseCoefficients data);
    std::pair<double, double> value_at(double x) const override;
    void collect_breakpoints(double x0, double x1,
                             std::vector<double>& out) const override;
    const PiecewiseCoefficients& data() const { return data_; }

  private:
    PiecewiseCoefficients data_;
};

// 1-periodic background built from one cell block on [0, 1].
class PeriodicBackground final : public CoefficientField {
  public:
    explicit PeriodicBackground(PiecewiseCoefficients cell);
    std::pair<double, double> value_at(double x) const override;  // x mod 1
    void collect_breakpoints(double x0, double x1,
                             std::vector<double>& out) const override;
    const PiecewiseCoefficients& cell() const { return cell_; }

  private:
    PiecewiseCoefficients cell_;
};

// Compactly supported perturbation: 1/p = 1/p0 + f, q = q0 + g with
// supp(f) ∪ supp(g) ⊂ [0, D]. D is the tight support bound.
struct Perturbation {
    StepFunction f;  // nonnegative
    StepFunction g;
    double support_radius = 0.0;  // D

    Perturbation() = default;
    Perturbation(StepFunction f_profile, StepFunction g_profile);
};

// Background plus perturbation on the merged breakpoint grid.
class PerturbedField final : public CoefficientField {
  public:
    PerturbedField(PeriodicBackground background, Perturbation perturbation);
    std::pair<double, double> value_at(double x) const override;
    void collect_breakpoints(double x0, double x1,
                             std::vector<double>& out) const override;
    const PeriodicBackground& background() const { return background_; }
    const Perturbation& perturbation() const { return perturbation_; }
    double support_radius() const { return perturbation_.support_radius; }

  private:
    PeriodicBackground background_;
    Perturbation perturbation_;
};

// The scattering setup of the perturbed periodic equation.
struct ScatteringProblem {
    PeriodicBackground background;
    Perturbation perturbation;

    ScatteringProblem(PeriodicBackground bg, Perturbation pert)
        : background(std::move(bg)), perturbation(std::move(pert)) {}
    PerturbedField field() const { return PerturbedField(background, perturbation); }
    double support_radius() const { return perturbation.support_radius; }
};

// perturb: realize the perturbed coefficient pair as a full-line field.
PerturbedField perturb(const PeriodicBackground& bg, const Perturbation& pert);

// Exact L1 norm of a step profile over [a, b].
double l1_norm(const StepFunction& f, double a, double b);
// Exact L1 distance between two step profiles over [a, b] (merged grid).
double l1_distance(const StepFunction& f, const StepFunction& g, double a, double b);

// Midpoint-sampled piecewise-constant approximation of a smooth profile.
StepFunction sample_smooth(const std::function<double(double)>& profile, double lo,
                           double hi, std::size_t n_cells);
// Paired sampling for coefficient pairs; rejects nonpositive sampled 1/p.
PiecewiseCoefficients sample_smooth_pair(const std::function<double(double)>& inv_p,
                                         const std::function<double(double)>& q,
                                         double lo, double hi, std::size_t n_cells);

// Moving-window average of width 1/n, cell-averaged back onto a refined
// piecewise-constant grid whose breakpoints include every ramp endpoint.
// L1 distance to the target on compacts is nonincreasing in n and -> 0.
StepFunction mollify_sequence(const StepFunction& target, int n);
PiecewiseCoefficients mollify_sequence(const PiecewiseCoefficients& target, int n);

// Materialize a field on [lo, hi] as plain piecewise coefficients.
PiecewiseCoefficients materialize(const CoefficientField& field, double lo, double hi);

}  // namespace slspec
