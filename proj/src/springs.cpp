#include "tensileg/springs.hpp"

#include "tensileg/errors.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace tensileg {

namespace {

void require_finite_nonnegative(double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
        throw DomainError(std::string(name) + " must be finite and >= 0, got " +
                          std::to_string(v));
    }
}

constexpr double kSeriesForceTolerance = 1e-12; // [N]
constexpr int kMaxBisectionIterations = 240;

} // namespace

// ---------------------------------------------------------------------------
// SpringElement

SpringElement SpringElement::linear(double k) {
    require_finite_nonnegative(k, "linear stiffness k");
    return SpringElement(Law{Linear{k}});
}

SpringElement SpringElement::quadratic(double k_l, double k_q) {
    require_finite_nonnegative(k_l, "linear coefficient k_l");
    require_finite_nonnegative(k_q, "quadratic coefficient k_q");
    return SpringElement(Law{Quadratic{k_l, k_q}});
}

SpringElement SpringElement::slack_offset(SpringElement inner, double engagement_offset) {
    require_finite_nonnegative(engagement_offset, "engagement offset");
    return SpringElement(Law{Slack{std::make_shared<const SpringElement>(std::move(inner)),
                                   engagement_offset}});
}

double SpringElement::force(double extension) const {
    if (!std::isfinite(extension)) {
        throw DomainError("spring extension must be finite");
    }
    if (extension <= 0.0) {
        return 0.0; // cables cannot push
    }
    return std::visit(
        [extension](const auto& law) -> double {
            using L = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<L, Linear>) {
                return law.k * extension;
            } else if constexpr (std::is_same_v<L, Quadratic>) {
                return law.k_l * extension + law.k_q * extension * extension;
            } else {
                return extension > law.offset ? law.inner->force(extension - law.offset) : 0.0;
            }
        },
        law_);
}

double SpringElement::extension_for_force(double force) const {
    if (!std::isfinite(force) || force < 0.0) {
        throw DomainError("spring force must be finite and >= 0");
    }
    if (force == 0.0) {
        return 0.0;
    }
    return std::visit(
        [force](const auto& law) -> double {
            using L = std::decay_t<decltype(law)>;
            if constexpr (std::is_same_v<L, Linear>) {
                return law.k > 0.0 ? force / law.k : std::numeric_limits<double>::infinity();
            } else if constexpr (std::is_same_v<L, Quadratic>) {
                if (law.k_q == 0.0) {
                    return law.k_l > 0.0 ? force / law.k_l
                                         : std::numeric_limits<double>::infinity();
                }
                // Stable form of the positive quadratic root, no cancellation
                // for small k_q * force.
                const double disc = std::sqrt(law.k_l * law.k_l + 4.0 * law.k_q * force);
                return 2.0 * force / (law.k_l + disc);
            } else {
                return law.offset + law.inner->extension_for_force(force);
            }
        },
        law_);
}

bool SpringElement::is_linear() const {
    return std::holds_alternative<Linear>(law_);
}

bool SpringElement::has_slack_offset() const {
    return std::holds_alternative<Slack>(law_);
}

double SpringElement::linear_stiffness() const {
    if (const auto* lin = std::get_if<Linear>(&law_)) {
        return lin->k;
    }
    throw UnsupportedConfigurationError("element is not purely linear");
}

// ---------------------------------------------------------------------------
// SpringNetwork

SpringNetwork::SpringNetwork(SpringElement element)
    : kind_(Kind::Leaf),
      element_(std::make_shared<const SpringElement>(std::move(element))) {}

SpringNetwork::SpringNetwork(Kind kind, std::vector<SpringNetwork> children)
    : kind_(kind), children_(std::move(children)) {
    if (children_.size() < 2) {
        throw DomainError("series/parallel nodes need at least 2 children");
    }
}

SpringNetwork SpringNetwork::leaf(SpringElement element) {
    return SpringNetwork(std::move(element));
}

SpringNetwork SpringNetwork::series(std::vector<SpringNetwork> children) {
    return SpringNetwork(Kind::Series, std::move(children));
}

SpringNetwork SpringNetwork::parallel(std::vector<SpringNetwork> children) {
    return SpringNetwork(Kind::Parallel, std::move(children));
}

bool SpringNetwork::all_linear() const {
    switch (kind_) {
    case Kind::Leaf:
        return element_->is_linear();
    case Kind::Series:
    case Kind::Parallel:
        for (const auto& child : children_) {
            if (!child.all_linear()) {
                return false;
            }
        }
        return true;
    }
    return false;
}

double SpringNetwork::effective_linear_stiffness() const {
    switch (kind_) {
    case Kind::Leaf:
        return element_->linear_stiffness(); // throws for nonlinear leaves
    case Kind::Parallel: {
        double sum = 0.0;
        for (const auto& child : children_) {
            sum += child.effective_linear_stiffness();
        }
        return sum;
    }
    case Kind::Series: {
        double reciprocal_sum = 0.0;
        for (const auto& child : children_) {
            const double k = child.effective_linear_stiffness();
            if (k == 0.0) {
                return 0.0; // a free link makes the whole chain free
            }
            reciprocal_sum += 1.0 / k;
        }
        return 1.0 / reciprocal_sum;
    }
    }
    throw NumericError("corrupt network node");
}

double SpringNetwork::extension_for_force(double force) const {
    if (!std::isfinite(force) || force < 0.0) {
        throw DomainError("network force must be finite and >= 0");
    }
    if (force == 0.0) {
        return 0.0;
    }
    switch (kind_) {
    case Kind::Leaf:
        return element_->extension_for_force(force);
    case Kind::Series: {
        double sum = 0.0;
        for (const auto& child : children_) {
            sum += child.extension_for_force(force);
        }
        return sum;
    }
    case Kind::Parallel: {
        // Invert the monotone force(x) by bisection on x.
        double lo = 0.0;
        double hi = 1.0;
        int doublings = 0;
        while (this->force(hi) < force) {
            hi *= 2.0;
            if (++doublings > 100) {
                return std::numeric_limits<double>::infinity();
            }
        }
        for (int i = 0; i < kMaxBisectionIterations && (hi - lo) > 1e-15 * hi + 1e-18; ++i) {
            const double mid = 0.5 * (lo + hi);
            (this->force(mid) < force ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    }
    throw NumericError("corrupt network node");
}

double SpringNetwork::force(double extension) const {
    if (!std::isfinite(extension)) {
        throw DomainError("network extension must be finite");
    }
    if (extension <= 0.0) {
        return 0.0;
    }
    switch (kind_) {
    case Kind::Leaf:
        return element_->force(extension);
    case Kind::Parallel: {
        double sum = 0.0;
        for (const auto& child : children_) {
            sum += child.force(extension);
        }
        return sum;
    }
    case Kind::Series: {
        if (all_linear()) {
            return effective_linear_stiffness() * extension;
        }
        // Common force F such that the child extensions sum to the total:
        // residual(F) = sum_i x_i(F) - extension is monotone increasing.
        double lo = 0.0;
        double hi = 1.0;
        int doublings = 0;
        while (extension_for_force(hi) < extension) {
            hi *= 2.0;
            if (++doublings > 100) {
                throw NumericError("series force solve failed to bracket, residual " +
                                   std::to_string(extension_for_force(hi) - extension));
            }
        }
        int iterations = 0;
        while (hi - lo > kSeriesForceTolerance) {
            if (++iterations > kMaxBisectionIterations) {
                throw NumericError("series force solve did not converge, residual " +
                                   std::to_string(extension_for_force(0.5 * (lo + hi)) -
                                                  extension));
            }
            const double mid = 0.5 * (lo + hi);
            (extension_for_force(mid) < extension ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }
    }
    throw NumericError("corrupt network node");
}

// ---------------------------------------------------------------------------
// Free functions

double spring_force(const SpringElement& element, double extension) {
    return element.force(extension);
}

double network_force(const SpringNetwork& network, double extension) {
    return network.force(extension);
}

double effective_linear_stiffness(const SpringNetwork& network) {
    return network.effective_linear_stiffness();
}

double solve_pretension_displacement(double k_l, double k_q, double pretension_force) {
    require_finite_nonnegative(k_l, "k_l");
    require_finite_nonnegative(k_q, "k_q");
    if (!std::isfinite(pretension_force) || pretension_force < 0.0) {
        throw DomainError("pretension force must be finite and >= 0");
    }
    if (pretension_force == 0.0) {
        return 0.0;
    }
    if (k_q == 0.0) {
        if (k_l == 0.0) {
            throw DomainError("zero-stiffness spring cannot carry pretension");
        }
        return pretension_force / k_l;
    }
    const double disc = std::sqrt(k_l * k_l + 4.0 * k_q * pretension_force);
    return 2.0 * pretension_force / (k_l + disc);
}

double solve_pretension_displacement(const SpringElement& element, double pretension_force) {
    if (element.has_slack_offset()) {
        throw DomainError("pretension displacement is defined for linear/quadratic laws only");
    }
    if (!std::isfinite(pretension_force) || pretension_force < 0.0) {
        throw DomainError("pretension force must be finite and >= 0");
    }
    // extension_for_force is the exact inverse of the polynomial force law.
    return element.extension_for_force(pretension_force);
}

SpringNetwork parallel_slack_system(double spring_stiffness,
                                    std::span<const double> engagement_offsets) {
    if (engagement_offsets.empty()) {
        throw DomainError("parallel_slack_system needs at least one engagement offset");
    }
    std::vector<SpringNetwork> branches;
    branches.reserve(engagement_offsets.size());
    for (double offset : engagement_offsets) {
        auto spring = SpringElement::linear(spring_stiffness);
        branches.push_back(SpringNetwork::leaf(
            offset == 0.0 ? std::move(spring)
                          : SpringElement::slack_offset(std::move(spring), offset)));
    }
    if (branches.size() == 1) {
        return std::move(branches.front());
    }
    return SpringNetwork::parallel(std::move(branches));
}

} // namespace tensileg
