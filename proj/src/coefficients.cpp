#include "slspec/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace slspec {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw Error(msg);
}

void check_grid(const std::vector<double>& bps, std::size_t n_values) {
    require(bps.size() >= 2, "breakpoint grid needs at least one cell");
    require(bps.size() == n_values + 1, "breakpoints/values size mismatch");
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        require(std::isfinite(bps[i]) && bps[i] < bps[i + 1],
                "breakpoints must be strictly increasing and finite");
    }
    require(std::isfinite(bps.back()), "breakpoints must be finite");
}

std::size_t grid_cell_index(const std::vector<double>& bps, double x) {
    if (x < bps.front()) return 0;
    std::size_t n = bps.size() - 1;
    if (x >= bps.back()) return n - 1;
    auto it = std::upper_bound(bps.begin(), bps.end(), x);
    return static_cast<std::size_t>(it - bps.begin()) - 1;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> bps, std::vector<double> vals)
    : breakpoints(std::move(bps)), values(std::move(vals)) {
    check_grid(breakpoints, values.size());
    for (double v : values) require(std::isfinite(v), "step values must be finite");
}

double StepFunction::value_at(double x) const {
    if (x < breakpoints.front() || x >= breakpoints.back()) return 0.0;
    return values[grid_cell_index(breakpoints, x)];
}

bool StepFunction::is_zero() const {
    return std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; });
}

double StepFunction::support_bound() const {
    for (std::size_t i = values.size(); i-- > 0;) {
        if (values[i] != 0.0) return breakpoints[i + 1];
    }
    return 0.0;
}

PiecewiseCoefficients::PiecewiseCoefficients(std::vector<double> bps,
                                             std::vector<double> inv_p_vals,
                                             std::vector<double> q_vals)
    : breakpoints(std::move(bps)), inv_p(std::move(inv_p_vals)), q(std::move(q_vals)) {
    check_grid(breakpoints, inv_p.size());
    require(inv_p.size() == q.size(), "inv_p/q size mismatch");
    for (double v : inv_p)
        require(std::isfinite(v) && v > 0.0, "1/p cell values must be positive");
    for (double v : q) require(std::isfinite(v), "q cell values must be finite");
}

std::size_t PiecewiseCoefficients::cell_index(double x) const {
    return grid_cell_index(breakpoints, x);
}

std::pair<double, double> PiecewiseCoefficients::value_at(double x) const {
    std::size_t i = cell_index(x);
    return {inv_p[i], q[i]};
}

std::vector<CellSlice> CoefficientField::slices(double x0, double x1) const {
    require(x0 <= x1, "slices: x0 must be <= x1");
    std::vector<double> pts;
    pts.push_back(x0);
    collect_breakpoints(x0, x1, pts);
    pts.push_back(x1);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<CellSlice> out;
    out.reserve(pts.size());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        if (!(b > a)) continue;
        auto [ip, qv] = value_at(0.5 * (a + b));
        out.push_back(CellSlice{a, b, ip, qv});
    }
    return out;
}

FlatExtendedField::FlatExtendedField(PiecewiseCoefficients data) : data_(std::move(data)) {
    require(!data_.breakpoints.empty(), "FlatExtendedField needs data");
}

std::pair<double, double> FlatExtendedField::value_at(double x) const {
    return data_.value_at(x);
}

void FlatExtendedField::collect_breakpoints(double x0, double x1,
                                            std::vector<double>& out) const {
    for (double b : data_.breakpoints) {
        if (b > x0 && b < x1) out.push_back(b);
    }
}

PeriodicBackground::PeriodicBackground(PiecewiseCoefficients cell) : cell_(std::move(cell)) {
    require(cell_.x_min() == 0.0 && cell_.x_max() == 1.0,
            "periodic cell must span exactly [0, 1]");
}

std::pair<double, double> PeriodicBackground::value_at(double x) const {
    double frac = x - std::floor(x);
    return cell_.value_at(frac);
}

void PeriodicBackground::collect_breakpoints(double x0, double x1,
                                             std::vector<double>& out) const {
    double n0 = std::floor(x0);
    double n1 = std::floor(x1);
    for (double n = n0; n <= n1; n += 1.0) {
        // skip the trailing cell breakpoint at 1: it is the next period's 0
        for (std::size_t j = 0; j + 1 < cell_.breakpoints.size(); ++j) {
            double b = n + cell_.breakpoints[j];
            if (b > x0 && b < x1) out.push_back(b);
        }
    }
    double top = n1 + 1.0;
    if (top > x0 && top < x1) out.push_back(top);
}

Perturbation::Perturbation(StepFunction f_profile, StepFunction g_profile)
    : f(std::move(f_profile)), g(std::move(g_profile)) {
    for (double v : f.values)
        require(v >= 0.0, "perturbation f must be nonnegative");
    auto check_support = [](const StepFunction& s, const char* name) {
        for (std::size_t i = 0; i < s.values.size(); ++i) {
            if (s.values[i] != 0.0)
                require(s.breakpoints[i] >= 0.0, name);
        }
    };
    check_support(f, "perturbation f must be supported in [0, inf)");
    check_support(g, "perturbation g must be supported in [0, inf)");
    support_radius = std::max(f.support_bound(), g.support_bound());
}

PerturbedField::PerturbedField(PeriodicBackground background, Perturbation perturbation)
    : background_(std::move(background)), perturbation_(std::move(perturbation)) {}

std::pair<double, double> PerturbedField::value_at(double x) const {
    auto [ip, qv] = background_.value_at(x);
    if (x >= 0.0 && x < perturbation_.support_radius) {
        ip += perturbation_.f.value_at(x);
        qv += perturbation_.g.value_at(x);
    }
    return {ip, qv};
}

void PerturbedField::collect_breakpoints(double x0, double x1,
                                         std::vector<double>& out) const {
    background_.collect_breakpoints(x0, x1, out);
    auto push_if_inside = [&](double b) {
        if (b > x0 && b < x1) out.push_back(b);
    };
    for (double b : perturbation_.f.breakpoints) push_if_inside(b);
    for (double b : perturbation_.g.breakpoints) push_if_inside(b);
    push_if_inside(0.0);
    push_if_inside(perturbation_.support_radius);
}

PerturbedField perturb(const PeriodicBackground& bg, const Perturbation& pert) {
    return PerturbedField(bg, pert);
}

double l1_norm(const StepFunction& f, double a, double b) {
    require(a <= b, "l1_norm: interval must be ordered");
    double sum = 0.0;
    for (std::size_t i = 0; i < f.cells(); ++i) {
        double lo = std::max(a, f.breakpoints[i]);
        double hi = std::min(b, f.breakpoints[i + 1]);
        if (hi > lo) sum += std::abs(f.values[i]) * (hi - lo);
    }
    return sum;
}

double l1_distance(const StepFunction& f, const StepFunction& g, double a, double b) {
    require(a <= b, "l1_distance: interval must be ordered");
    std::vector<double> pts;
    pts.push_back(a);
    for (double x : f.breakpoints)
        if (x > a && x < b) pts.push_back(x);
    for (double x : g.breakpoints)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double mid = 0.5 * (pts[i] + pts[i + 1]);
        sum += std::abs(f.value_at(mid) - g.value_at(mid)) * (pts[i + 1] - pts[i]);
    }
    return sum;
}

StepFunction sample_smooth(const std::function<double(double)>& profile, double lo,
                           double hi, std::size_t n_cells) {
    require(n_cells >= 1, "sample_smooth: n_cells must be >= 1");
    require(lo < hi, "sample_smooth: empty domain");
    std::vector<double> bps(n_cells + 1), vals(n_cells);
    double h = (hi - lo) / static_cast<double>(n_cells);
    for (std::size_t i = 0; i <= n_cells; ++i) bps[i] = lo + h * static_cast<double>(i);
    bps.back() = hi;
    for (std::size_t i = 0; i < n_cells; ++i) {
        double v = profile(lo + h * (static_cast<double>(i) + 0.5));
        require(std::isfinite(v), "sample_smooth: non-finite sample");
        vals[i] = v;
    }
    return StepFunction(std::move(bps), std::move(vals));
}

PiecewiseCoefficients sample_smooth_pair(const std::function<double(double)>& inv_p,
                                         const std::function<double(double)>& q,
                                         double lo, double hi, std::size_t n_cells) {
    StepFunction ip = sample_smooth(inv_p, lo, hi, n_cells);
    StepFunction qs = sample_smooth(q, lo, hi, n_cells);
    for (double v : ip.values)
        require(v > 0.0, "sample_smooth: sampled 1/p must be positive");
    return PiecewiseCoefficients(ip.breakpoints, ip.values, qs.values);
}

namespace {

// Antiderivative of the flat-extended step function, evaluated exactly.
class StepAntiderivative {
  public:
    explicit StepAntiderivative(const StepFunction& f) : f_(f) {
        cum_.resize(f.breakpoints.size(), 0.0);
        for (std::size_t i = 0; i < f.cells(); ++i)
            cum_[i + 1] = cum_[i] + f.values[i] * (f.breakpoints[i + 1] - f.breakpoints[i]);
    }
    double operator()(double x) const {
        const auto& bp = f_.breakpoints;
        if (x <= bp.front()) return f_.values.front() * (x - bp.front());
        if (x >= bp.back()) return cum_.back() + f_.values.back() * (x - bp.back());
        std::size_t i = grid_cell_index(bp, x);
        return cum_[i] + f_.values[i] * (x - bp[i]);
    }

  private:
    const StepFunction& f_;
    std::vector<double> cum_;
};

}  // namespace

StepFunction mollify_sequence(const StepFunction& target, int n) {
    require(n >= 1, "mollify_sequence: n must be >= 1");
    bool constant = std::all_of(target.values.begin(), target.values.end(),
                                [&](double v) { return v == target.values.front(); });
    if (constant) return target;

    const double w = 1.0 / static_cast<double>(n);
    StepAntiderivative F(target);
    // Ramp endpoints b_i +- w/2 plus the original breakpoints.
    std::vector<double> pts;
    for (double b : target.breakpoints) {
        pts.push_back(b - 0.5 * w);
        pts.push_back(b);
        pts.push_back(b + 0.5 * w);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    auto average = [&](double x) { return (F(x + 0.5 * w) - F(x - 0.5 * w)) / w; };

    constexpr int kRampSubCells = 8;
    std::vector<double> bps, vals;
    bps.push_back(pts.front());
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double a = pts[i], b = pts[i + 1];
        double va = average(a), vb = average(b);
        // The window average is piecewise linear; a flat piece stays one cell.
        int sub = (va == vb) ? 1 : kRampSubCells;
        double h = (b - a) / sub;
        for (int k = 0; k < sub; ++k) {
            double mid = a + h * (k + 0.5);
            vals.push_back(average(mid));
            bps.push_back(k + 1 == sub ? b : a + h * (k + 1));
        }
    }
    return StepFunction(std::move(bps), std::move(vals));
}

PiecewiseCoefficients mollify_sequence(const PiecewiseCoefficients& target, int n) {
    StepFunction mp = mollify_sequence(target.inv_p_profile(), n);
    StepFunction mq = mollify_sequence(target.q_profile(), n);
    // Merge the two output grids; each component is exact at midpoints.
    std::vector<double> bps = mp.breakpoints;
    bps.insert(bps.end(), mq.breakpoints.begin(), mq.breakpoints.end());
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    // Profiles zero-extend outside their grids; the mollified coefficient
    // field must flat-extend instead, so clamp evaluation into the grids.
    auto clamped = [](const StepFunction& s, double x) {
        if (x <= s.x_min()) return s.values.front();
        if (x >= s.x_max()) return s.values.back();
        return s.value_at(x);
    };
    std::vector<double> ip(bps.size() - 1), qv(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        double mid = 0.5 * (bps[i] + bps[i + 1]);
        ip[i] = clamped(mp, mid);
        qv[i] = clamped(mq, mid);
    }
    return PiecewiseCoefficients(std::move(bps), std::move(ip), std::move(qv));
}

PiecewiseCoefficients materialize(const CoefficientField& field, double lo, double hi) {
    auto sl = field.slices(lo, hi);
    require(!sl.empty(), "materialize: empty window");
    std::vector<double> bps, ip, qv;
    bps.push_back(sl.front().a);
    for (const auto& s : sl) {
        bps.push_back(s.b);
        ip.push_back(s.inv_p);
        qv.push_back(s.q);
    }
    return PiecewiseCoefficients(std::move(bps), std::move(ip), std::move(qv));
}

}  // namespace slspec
