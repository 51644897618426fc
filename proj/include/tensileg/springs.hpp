#pragma once

#include <memory>
#include <span>
#include <variant>
#include <vector>

namespace tensileg {

/**
 * @brief Force-law primitive for a single spring or cable branch.
 *
 * Three laws are supported:
 *  - linear:       F(x) = k * x
 *  - quadratic:    F(x) = k_l * x + k_q * x^2
 *  - slack_offset: F(x) = inner(x - offset) for x > offset, else 0
 *
 * Every element is cable-borne: it carries zero force for extensions <= 0
 * (cables cannot push). Elements are immutable values and freely shareable
 * between threads.
 */
class SpringElement {
public:
    static SpringElement linear(double k);
    static SpringElement quadratic(double k_l, double k_q);
    static SpringElement slack_offset(SpringElement inner, double engagement_offset);

    /// Tension at the given extension [N]. Continuous and non-decreasing.
    /// Throws DomainError for non-finite extension.
    double force(double extension) const;

    /// Smallest extension carrying the given tension [m]; inverse of force().
    /// Returns +inf for a positive force a zero-stiffness element cannot carry.
    double extension_for_force(double force) const;

    /// True for the purely linear law (no quadratic term, no slack offset).
    bool is_linear() const;

    /// True when the law contains a slack offset, directly or nested.
    bool has_slack_offset() const;

    /// Stiffness of a purely linear element; throws UnsupportedConfigurationError otherwise.
    double linear_stiffness() const;

private:
    struct Linear {
        double k;
    };
    struct Quadratic {
        double k_l;
        double k_q;
    };
    struct Slack {
        std::shared_ptr<const SpringElement> inner;
        double offset;
    };

    using Law = std::variant<Linear, Quadratic, Slack>;

    explicit SpringElement(Law law) : law_(std::move(law)) {}

    Law law_;
};

/**
 * @brief Composition tree of spring elements in series and parallel.
 *
 * Parallel children share one extension and their forces add; series
 * children share one force and their extensions add. Series composition of
 * nonlinear children is solved by bisection on the common force.
 */
class SpringNetwork {
public:
    static SpringNetwork leaf(SpringElement element);
    static SpringNetwork series(std::vector<SpringNetwork> children);
    static SpringNetwork parallel(std::vector<SpringNetwork> children);

    /// Tension carried by the network at the given total extension [N].
    double force(double extension) const;

    /// Smallest extension at which the network carries the given force [m].
    double extension_for_force(double force) const;

    /// Closed-form composed stiffness for all-linear trees [N/m]:
    /// sum for parallel nodes, reciprocal-sum for series nodes.
    /// Throws UnsupportedConfigurationError when any leaf is nonlinear.
    double effective_linear_stiffness() const;

    /// True when every leaf is a purely linear element.
    bool all_linear() const;

private:
    enum class Kind { Leaf, Series, Parallel };

    SpringNetwork(Kind kind, std::vector<SpringNetwork> children);
    explicit SpringNetwork(SpringElement element);

    Kind kind_;
    std::shared_ptr<const SpringElement> element_; // set for leaves
    std::vector<SpringNetwork> children_;          // set for series/parallel
};

/// Tension of a single element at the given extension [N].
double spring_force(const SpringElement& element, double extension);

/// Tension of a network at the given extension [N].
double network_force(const SpringNetwork& network, double extension);

/// Closed-form stiffness of an all-linear network [N/m].
double effective_linear_stiffness(const SpringNetwork& network);

/// Initial displacement x0 produced by pretension force F0 on a spring with
/// force law F = k_l*x + k_q*x^2, i.e. the non-negative root of
/// k_q*x0^2 + k_l*x0 - F0 = 0. The linear limit k_q = 0 returns F0/k_l.
double solve_pretension_displacement(double k_l, double k_q, double pretension_force);

/// Same, taking the coefficients from a linear or quadratic element.
double solve_pretension_displacement(const SpringElement& element, double pretension_force);

/// Parallel bank of identical linear springs attached through cables of
/// staggered length, so branches engage one after another as the system
/// elongates. A single offset yields a plain leaf.
SpringNetwork parallel_slack_system(double spring_stiffness,
                                    std::span<const double> engagement_offsets);

} // namespace tensileg
