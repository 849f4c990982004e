#include "sdof/converse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "sdof/errors.hpp"
#include "sdof/mixture.hpp"

namespace sdof {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;
constexpr std::size_t kJointCap = 4'000'000;
constexpr double kWindow = 10.0;

double gaussian_entropy_bits(double variance) { return 0.5 * std::log2(kTwoPiE * variance); }

// h(X + N(0, variance)) for a discrete X, by rescaling to unit noise.
EntropyEstimate law_plus_noise_entropy(const DiscreteLaw& law, double variance) {
    const double sigma = std::sqrt(variance);
    MixtureDensity mix;
    mix.weights = law.probs;
    mix.means.reserve(law.values.size());
    for (double v : law.values) mix.means.push_back(v / sigma);
    mix.normalize_and_sort();
    EntropyEstimate est = diff_entropy(mix, EntropyMethod::Quadrature);
    est.bits += std::log2(sigma);
    return est;
}

// Cross product of independent laws: mean pair (sum_i c1_i x_i, sum_i c2_i x_i).
struct JointLaw {
    std::vector<double> means1;
    std::vector<double> means2;
    std::vector<double> weights;
    std::vector<double> cdf;
};

JointLaw enumerate_joint(const std::vector<DiscreteLaw>& laws, const std::vector<double>& c1,
                         const std::vector<double>& c2) {
    std::size_t total = 1;
    for (const DiscreteLaw& law : laws) {
        if (law.values.empty()) throw std::invalid_argument("empty input law");
        if (total > kJointCap / law.values.size())
            throw EnumerationCapError(total * law.values.size(), kJointCap);
        total *= law.values.size();
    }
    JointLaw joint;
    joint.means1.assign(total, 0.0);
    joint.means2.assign(total, 0.0);
    joint.weights.assign(total, 1.0);
    std::size_t repeat = total;
    for (std::size_t i = 0; i < laws.size(); ++i) {
        const DiscreteLaw& law = laws[i];
        const std::size_t size = law.values.size();
        repeat /= size;
        for (std::size_t idx = 0; idx < total; ++idx) {
            const std::size_t pick = (idx / repeat) % size;
            joint.means1[idx] += c1[i] * law.values[pick];
            joint.means2[idx] += c2[i] * law.values[pick];
            joint.weights[idx] *= law.probs[pick];
        }
    }
    // Sort by the first coordinate so density evaluation can window on it.
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return joint.means1[a] < joint.means1[b];
    });
    JointLaw sorted;
    sorted.means1.reserve(total);
    sorted.means2.reserve(total);
    sorted.weights.reserve(total);
    for (std::size_t idx : order) {
        sorted.means1.push_back(joint.means1[idx]);
        sorted.means2.push_back(joint.means2[idx]);
        sorted.weights.push_back(joint.weights[idx]);
    }
    sorted.cdf.resize(total);
    double acc = 0.0;
    for (std::size_t i = 0; i < total; ++i) {
        acc += sorted.weights[i];
        sorted.cdf[i] = acc;
    }
    sorted.cdf.back() = 1.0;
    return sorted;
}

// h(sum_i c_i X_i + N(0,1)) via full enumeration + quadrature.
EntropyEstimate sum_entropy(const std::vector<DiscreteLaw>& laws, const std::vector<double>& c) {
    const JointLaw joint = enumerate_joint(laws, c, std::vector<double>(laws.size(), 0.0));
    MixtureDensity mix;
    mix.means = joint.means1;
    mix.weights = joint.weights;
    mix.normalize_and_sort();
    return diff_entropy(mix, EntropyMethod::Quadrature);
}

double joint_density(const JointLaw& joint, double y1, double y2) {
    const auto lo = std::lower_bound(joint.means1.begin(), joint.means1.end(), y1 - kWindow);
    const auto hi = std::upper_bound(joint.means1.begin(), joint.means1.end(), y1 + kWindow);
    const std::size_t first = static_cast<std::size_t>(lo - joint.means1.begin());
    const std::size_t last = static_cast<std::size_t>(hi - joint.means1.begin());
    double f = 0.0;
    for (std::size_t i = first; i < last; ++i) {
        const double d2 = y2 - joint.means2[i];
        if (d2 < -kWindow || d2 > kWindow) continue;
        const double d1 = y1 - joint.means1[i];
        f += joint.weights[i] * std::exp(-0.5 * (d1 * d1 + d2 * d2));
    }
    return f / (2.0 * std::numbers::pi);
}

struct McEstimate {
    double bits = 0.0;
    double std_error = 0.0;
};

// h(Y1, Y2) with Y_r = mu_r(S) + N_r: Monte-Carlo average of -log2 f at
// samples from the mixture itself; f is the exact joint density up to the
// negligible mass of components farther than kWindow from the sample.
McEstimate joint_entropy_mc(const JointLaw& joint, std::size_t samples, std::uint64_t seed) {
    if (samples < 2) throw std::invalid_argument("need at least 2 samples");
    Rng rng(seed);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::size_t s = 0; s < samples; ++s) {
        const std::size_t comp = rng.pick(joint.cdf);
        const double y1 = joint.means1[comp] + rng.normal();
        const double y2 = joint.means2[comp] + rng.normal();
        const double f = joint_density(joint, y1, y2);
        const double bits = -std::log2(f);
        sum += bits;
        sum_sq += bits * bits;
    }
    const double n = static_cast<double>(samples);
    McEstimate est;
    est.bits = sum / n;
    const double var = std::max(0.0, sum_sq / n - est.bits * est.bits);
    est.std_error = std::sqrt(var / n);
    return est;
}

std::vector<double> perturbed_input_entropies(const std::vector<DiscreteLaw>& inputs,
                                              const PerturbationSpec& spec, double* tol_sum) {
    std::vector<double> bits;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        const EntropyEstimate est = law_plus_noise_entropy(inputs[i], spec.variances[i]);
        bits.push_back(est.bits);
        if (tol_sum) *tol_sum += est.achieved_tol;
    }
    return bits;
}

void validate_inputs(const std::vector<DiscreteLaw>& inputs, const NetworkModel& model,
                     const PerturbationSpec& spec) {
    if (static_cast<int>(inputs.size()) != model.gains.tx_count())
        throw std::invalid_argument("one input law per transmitter required");
    for (const DiscreteLaw& law : inputs) law.validate();
    validate_perturbation(model, spec);
}

}  // namespace

void DiscreteLaw::validate() const {
    if (values.empty() || values.size() != probs.size())
        throw std::invalid_argument("law needs matching nonempty values/probs");
    double sum = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw std::invalid_argument("law probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("law probabilities must sum to 1");
    for (double v : values) {
        if (!std::isfinite(v)) throw std::invalid_argument("law values must be finite");
    }
}

DiscreteLaw random_pam_law(long long q, double spacing, Rng& rng) {
    if (q < 0) throw std::invalid_argument("half range must be nonnegative");
    if (!(spacing > 0.0)) throw std::invalid_argument("spacing must be positive");
    DiscreteLaw law;
    double sum = 0.0;
    for (long long k = -q; k <= q; ++k) {
        law.values.push_back(spacing * static_cast<double>(k));
        const double w = -std::log(rng.uniform01_pos());
        law.probs.push_back(w);
        sum += w;
    }
    for (double& p : law.probs) p /= sum;
    return law;
}

PerturbationSpec default_perturbation(const NetworkModel& model) {
    PerturbationSpec spec;
    for (int i = 0; i < model.gains.tx_count(); ++i) {
        const double h = model.gains.to_receiver1[i];
        const double g = model.gains.to_receiver2[i];
        if (h == 0.0 || g == 0.0) throw std::invalid_argument("gains must be nonzero");
        spec.variances.push_back(0.5 * std::min(1.0 / (h * h), 1.0 / (g * g)));
    }
    return spec;
}

void validate_perturbation(const NetworkModel& model, const PerturbationSpec& spec) {
    if (static_cast<int>(spec.variances.size()) != model.gains.tx_count())
        throw std::invalid_argument("one perturbation variance per transmitter required");
    for (int i = 0; i < model.gains.tx_count(); ++i) {
        const double v = spec.variances[i];
        const double h = model.gains.to_receiver1[i];
        const double g = model.gains.to_receiver2[i];
        const double cap = std::min(1.0 / (h * h), 1.0 / (g * g));
        if (!(v > 0.0) || !(v < cap))
            throw std::invalid_argument("perturbation variance out of range");
    }
}

ConverseConstant reconstruction_constant(const NetworkModel& model, const PerturbationSpec& spec) {
    validate_perturbation(model, spec);
    double n1 = 1.0;
    double n2 = 1.0;
    for (int i = 0; i < model.gains.tx_count(); ++i) {
        const double h = model.gains.to_receiver1[i];
        const double g = model.gains.to_receiver2[i];
        n1 += h * h * spec.variances[i];
        n2 += g * g * spec.variances[i];
    }
    return {gaussian_entropy_bits(n1) + gaussian_entropy_bits(n2), "output-reconstruction"};
}

CheckReport secrecy_penalty_check(const std::vector<DiscreteLaw>& inputs,
                                  const NetworkModel& model, const PerturbationSpec& spec,
                                  std::size_t mc_samples, std::uint64_t seed) {
    validate_inputs(inputs, model, spec);
    double tol_sum = 0.0;
    const std::vector<double> perturbed = perturbed_input_entropies(inputs, spec, &tol_sum);
    double rhs = reconstruction_constant(model, spec).bits;
    for (std::size_t i = 0; i < inputs.size(); ++i)
        rhs += perturbed[i] - gaussian_entropy_bits(spec.variances[i]);

    const JointLaw joint =
        enumerate_joint(inputs, model.gains.to_receiver1, model.gains.to_receiver2);
    const McEstimate lhs = joint_entropy_mc(joint, mc_samples, seed);

    CheckReport report;
    report.inequality = "secrecy-penalty";
    report.lhs = lhs.bits;
    report.rhs = rhs;
    report.margin = rhs - lhs.bits;
    report.std_error = std::sqrt(lhs.std_error * lhs.std_error + tol_sum * tol_sum / 9.0);
    report.conclusive_violation = report.margin < -3.0 * report.std_error;
    report.note =
        "joint output entropy vs perturbed-input entropies plus the exact chain "
        "constant (reconstruction constant minus perturbation entropies); the "
        "eavesdropper entropy cancels on both sides";
    return report;
}

std::vector<CheckReport> secrecy_penalty_corollaries(const std::vector<DiscreteLaw>& inputs,
                                                     const NetworkModel& model,
                                                     const PerturbationSpec& spec,
                                                     std::size_t mc_samples, std::uint64_t seed) {
    validate_inputs(inputs, model, spec);
    double tol_sum = 0.0;
    const std::vector<double> perturbed = perturbed_input_entropies(inputs, spec, &tol_sum);
    double base = reconstruction_constant(model, spec).bits;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        base += perturbed[i] - gaussian_entropy_bits(spec.variances[i]);
    }

    const JointLaw joint =
        enumerate_joint(inputs, model.gains.to_receiver1, model.gains.to_receiver2);
    const McEstimate joint_est = joint_entropy_mc(joint, mc_samples, seed);
    const EntropyEstimate eaves = sum_entropy(inputs, model.gains.to_receiver2);
    const double cond = joint_est.bits - eaves.bits;  // h(Y1|Y2)
    const double tol = tol_sum + eaves.achieved_tol;

    // Eliminating transmitter j spends h(X~_j) + log2|g_j| of the eavesdropper
    // entropy; larger |g_j| should not shrink the margin (diagnostic only).
    std::vector<CheckReport> reports;
    for (std::size_t j = 0; j < inputs.size(); ++j) {
        const double gj = std::abs(model.gains.to_receiver2[j]);
        CheckReport report;
        report.inequality = "secrecy-penalty-drop-" + std::to_string(j + 1);
        report.lhs = cond;
        report.rhs = base - perturbed[j] - std::log2(gj);
        report.margin = report.rhs - report.lhs;
        report.std_error =
            std::sqrt(joint_est.std_error * joint_est.std_error + tol * tol / 9.0);
        report.conclusive_violation = report.margin < -3.0 * report.std_error;
        report.note = "conditional output entropy vs remaining perturbed inputs";
        reports.push_back(report);
    }
    return reports;
}

CheckReport helper_role_check(const std::vector<DiscreteLaw>& inputs, const NetworkModel& model,
                              const PerturbationSpec& spec, int helper_index) {
    validate_inputs(inputs, model, spec);
    const int tx = model.gains.tx_count();
    if (helper_index < 1 || helper_index >= tx)
        throw std::invalid_argument("helper index out of range");
    const double hj = model.gains.to_receiver1[helper_index];
    const double variance = spec.variances[helper_index];
    if (!(variance < 1.0 / (hj * hj)))
        throw std::invalid_argument("perturbation variance out of range");

    const EntropyEstimate jam = law_plus_noise_entropy(inputs[helper_index], variance);

    // h(Y1 | X_0) = h(sum over helpers of h_i X_i + N_1).
    std::vector<DiscreteLaw> helpers(inputs.begin() + 1, inputs.end());
    std::vector<double> coeff(model.gains.to_receiver1.begin() + 1,
                              model.gains.to_receiver1.end());
    const EntropyEstimate residual = sum_entropy(helpers, coeff);

    CheckReport report;
    report.inequality = "helper-role-" + std::to_string(helper_index + 1);
    report.lhs = std::log2(std::abs(hj)) + jam.bits;
    report.rhs = residual.bits;
    report.margin = report.rhs - report.lhs;
    report.std_error = (jam.achieved_tol + residual.achieved_tol) / 3.0;
    report.conclusive_violation = report.margin < -3.0 * report.std_error;
    report.note = "jamming entropy cap from the legitimate receiver's residual entropy; "
                  "std_error encodes the deterministic integration tolerance";
    return report;
}

CheckReport interference_sumrate_check(const std::vector<DiscreteLaw>& inputs,
                                       const NetworkModel& model, const PerturbationSpec& spec) {
    if (model.gains.tx_count() != 2)
        throw std::invalid_argument("two-transmitter model required");
    validate_inputs(inputs, model, spec);

    const double h11 = model.gains.to_receiver1[0];
    const double h21 = model.gains.to_receiver1[1];
    const double h12 = model.gains.to_receiver2[0];
    const double h22 = model.gains.to_receiver2[1];

    const EntropyEstimate y1 = sum_entropy(inputs, {h11, h21});
    const EntropyEstimate y2 = sum_entropy(inputs, {h12, h22});
    const EntropyEstimate cross1 = sum_entropy({inputs[1]}, {h21});  // h(Y1 | X_1)
    const EntropyEstimate cross2 = sum_entropy({inputs[0]}, {h12});  // h(Y2 | X_2)
    const double i1 = y1.bits - cross1.bits;
    const double i2 = y2.bits - cross2.bits;

    double c_total = reconstruction_constant(model, spec).bits;
    for (double v : spec.variances) c_total -= gaussian_entropy_bits(v);
    c_total -= std::log2(kTwoPiE);
    c_total -= std::log2(std::abs(h12 * h21));

    CheckReport report;
    report.inequality = "interference-sumrate";
    report.lhs = 2.0 * (i1 + i2);
    report.rhs = y1.bits + y2.bits + c_total;
    report.margin = report.rhs - report.lhs;
    const double tol =
        y1.achieved_tol + y2.achieved_tol + cross1.achieved_tol + cross2.achieved_tol;
    report.std_error = tol / 3.0;
    report.conclusive_violation = report.margin < -3.0 * report.std_error;
    report.note = "doubled single-user rates vs output entropies plus the assembled "
                  "constant; std_error encodes the deterministic integration tolerance";
    return report;
}

}  // namespace sdof
